#include "doctest.h"

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  std::string cmd = std::string(ELLSPIN_BIN) + " " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p);
  std::array<char, 4096> buf;
  std::size_t k;
  while ((k = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), k);
  int st = pclose(p);
  r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

nlohmann::json parse(const Run& r) {
  auto j = nlohmann::json::parse(r.out);
  j.erase("command");
  return j;
}

fs::path scratch(const std::string& name) {
  fs::path d = fs::temp_directory_path() / ("ellspin-cli-" + name + "-" + std::to_string(::getpid()));
  fs::remove_all(d);
  fs::create_directories(d);
  return d;
}

}  // namespace

TEST_CASE("cli: info") {
  Run r = run("--format json info E7");
  REQUIRE(r.code == 0);
  auto j = parse(r);
  CHECK(j["positiveRoots"] == 63);
  CHECK(j["weylGroupOrder"] == 2903040);
  CHECK(j["cartan"].size() == 7);
  CHECK(run("--format text info G2").code == 0);
  CHECK(run("info Q3").code == 3);
  CHECK(run("info B1").code == 3);
}

TEST_CASE("cli: spin") {
  auto b7 = parse(run("--format json spin B7 --charpoly '(t^6+1)(t+1)'"));
  CHECK(b7["classId"] == "B6xB1");
  CHECK(b7["order"] == 12);
  CHECK(b7["signature"] == "h7");
  CHECK(b7["spins"]["universal"] == -1);
  CHECK(b7["representativeOrder"]["universal"] == 24);

  auto e7 = parse(run("--format json spin E7 --class A5xA2"));
  CHECK(e7["signature"] == "h1h3h5");
  CHECK(e7["spins"]["universal"] == -1);
  CHECK(e7["spins"]["adjoint"] == 1);

  auto g2 = parse(run("--format json spin G2 --class coxeter"));
  CHECK(g2["signature"] == "1");

  auto w = parse(run("--format json spin A3 --word 1,2,3"));
  CHECK(w["signature"] == "h1h3");

  CHECK(run("spin B7 --charpoly '(t^+1)'").code == 3);
  CHECK(run("spin A3 --word 1").code == 3);
  CHECK(run("--characteristic 2 spin G2 --class coxeter").code == 3);
  CHECK(run("--characteristic 3 spin G2 --class coxeter").code == 0);
}

TEST_CASE("cli: classes, budget and determinism") {
  Run a = run("--format json --seed 4 classes F4");
  REQUIRE(a.code == 0);
  CHECK(parse(a)["classes"].size() == 9);
  CHECK(parse(a) == parse(run("--format json --seed 4 --threads 1 classes F4")));
  CHECK(parse(a) == parse(run("--format json --seed 4 --threads 3 classes F4")));

  Run csv = run("--format csv classes B3");
  CHECK(csv.code == 0);
  CHECK(std::count(csv.out.begin(), csv.out.end(), '\n') >= 4);

  CHECK(run("--strategy exhaustive --budget 100 classes E7").code == 4);
  CHECK(run("--strategy diagram classes E6").code == 3);
  CHECK(run("--strategy nonsense classes E6").code != 0);
}

TEST_CASE("cli: cache") {
  fs::path dir = scratch("cache");
  const std::string base = "--format json --cache-dir " + dir.string() + " ";
  Run first = run(base + "classes C4");
  REQUIRE(first.code == 0);
  int files = 0;
  fs::path file;
  for (const auto& e : fs::directory_iterator(dir)) {
    ++files;
    file = e.path();
  }
  REQUIRE(files == 1);
  CHECK(file.extension() == ".jsonl");
  CHECK(parse(run(base + "classes C4")) == parse(first));
  CHECK(run(base + "--recompute classes C4").code == 0);

  // flip one cached spin and ask for a recomputation
  std::ifstream in(file);
  std::stringstream ss;
  ss << in.rdbuf();
  in.close();
  std::string text = ss.str();
  // every C4 class has universal spin -1
  const std::string from = "\"universal\":-1", to = "\"universal\":1";
  auto pos = text.find(from);
  REQUIRE(pos != std::string::npos);
  text.replace(pos, from.size(), to);
  std::ofstream(file) << text;
  CHECK(run(base + "--recompute classes C4").code == 2);
  fs::remove_all(dir);
}

TEST_CASE("cli: verify-tables") {
  Run r = run("--format json verify-tables --suite center");
  CHECK(r.code == 0);
  auto j = parse(r);
  CHECK(j.dump().find("\"pass\":true") != std::string::npos);
  CHECK(run("verify-tables --suite nonsense").code == 3);
}
