#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <regex>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "ellspin/carter.hpp"
#include "ellspin/errors.hpp"
#include "ellspin/suites.hpp"

using namespace ellspin;
using json = nlohmann::ordered_json;
namespace fs = std::filesystem;

namespace {

constexpr int kExitMismatch = 2;
constexpr int kExitConfig = 3;
constexpr int kExitBudget = 4;

struct RunConfig {
  std::string type;
  std::string lattice = "all";
  std::string strategy;
  std::uint64_t seed = 1;
  std::size_t budget = 10'000'000;
  std::size_t samples = 100'000;
  std::string format = "text";
  std::string cacheDir;
  bool recompute = false;
  bool timing = false;
  int characteristic = 0;
  int threads = 0;
  std::string command;
};

std::string echo(int argc, char** argv) {
  std::string s;
  for (int i = 1; i < argc; ++i) s += (i > 1 ? " " : "") + std::string(argv[i]);
  return s;
}

std::string simpleRootSum(const IntVector& v, bool negate, const char* sym) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    int c = negate ? -v[i] : v[i];
    if (c == 0) continue;
    s += c < 0 ? "-" : (s.empty() ? "" : "+");
    if (std::abs(c) != 1) s += std::to_string(std::abs(c));
    s += sym + std::to_string(i + 1);
  }
  return s;
}

// ---- cache

fs::path cachePath(const RunConfig& c, const RootSystem& rs, Strategy s) {
  std::string name = rs.type().name() + "-" + strategyName(s) + "-seed" + std::to_string(c.seed);
  if (s == Strategy::Sampling) name += "-n" + std::to_string(c.samples);
  return fs::path(c.cacheDir) / (name + ".jsonl");
}

json cacheHeader(const RootSystem& rs, Strategy s, const RunConfig& c) {
  return {{"cache", "ellspin.classes/1"},
          {"rootSystem", json::parse(rootSystemToJson(rs))},
          {"strategy", strategyName(s)},
          {"seed", c.seed},
          {"samples", s == Strategy::Sampling ? c.samples : 0}};
}

std::optional<std::vector<ClassRecord>> readCache(const fs::path& p, const json& header) {
  std::ifstream in(p);
  if (!in) return std::nullopt;
  std::string line;
  if (!std::getline(in, line)) return std::nullopt;
  try {
    if (json::parse(line) != header) return std::nullopt;
    std::vector<ClassRecord> out;
    while (std::getline(in, line))
      if (!line.empty()) out.push_back(classRecordFromJson(json::parse(line)));
    return out;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

void writeCache(const fs::path& p, const json& header, const std::vector<ClassRecord>& records) {
  fs::create_directories(p.parent_path());
  fs::path tmp = p;
  tmp += ".tmp";
  {
    std::ofstream out(tmp);
    out << header.dump() << "\n";
    for (const auto& r : records) out << toJson(r).dump() << "\n";
  }
  fs::rename(tmp, p);
}

std::vector<ClassRecord> classesFor(const RootSystem& rs, const RunConfig& c, Strategy s) {
  EnumerationOptions eo;
  eo.strategy = s;
  eo.seed = c.seed;
  eo.elementBudget = c.budget;
  eo.samples = c.samples;
  eo.threads = c.threads;
  if (c.cacheDir.empty()) return enumerateEllipticClasses(rs, eo);
  const fs::path p = cachePath(c, rs, s);
  const json header = cacheHeader(rs, s, c);
  auto cached = readCache(p, header);
  if (cached && !c.recompute) return *cached;
  auto fresh = enumerateEllipticClasses(rs, eo);
  if (cached) {
    bool same = cached->size() == fresh.size();
    for (std::size_t i = 0; same && i < fresh.size(); ++i) same = toJson((*cached)[i]) == toJson(fresh[i]);
    if (!same) throw VerificationMismatch("cached class atlas " + p.string() + " differs from recomputation");
    return fresh;
  }
  writeCache(p, header, fresh);
  return fresh;
}

Strategy strategyFor(const RunConfig& c, const RootSystem& rs) {
  return c.strategy.empty() ? defaultStrategy(rs.type()) : parseStrategy(c.strategy);
}

// ---- info

int cmdInfo(const RunConfig& c) {
  RootSystem rs = RootSystem::build(RootSystemType::parse(c.type));
  const int n = rs.rank();
  json j;
  j["command"] = c.command;
  j["type"] = rs.type().name();
  j["rank"] = n;
  json cartan = json::array();
  for (int r = 0; r < n; ++r) {
    json row = json::array();
    for (int col = 0; col < n; ++col) row.push_back(rs.cartan()(r, col));
    cartan.push_back(row);
  }
  j["cartan"] = cartan;
  j["roots"] = rs.roots().size();
  j["positiveRoots"] = rs.positiveCount();
  j["weylGroupOrder"] = weylGroupOrder(rs.type());
  auto rootInfo = [&](const Root& r) {
    IntVector cor = rs.coroot(r.coords);
    return json{{"coords", r.coords},
                {"negative", simpleRootSum(r.coords, true, "a")},
                {"coroot", simpleRootSum(cor, false, "a^v")},
                {"spinLabel", rs.corootMod2(r.coords).asTorusProduct()}};
  };
  j["highestRoot"] = rootInfo(rs.highestRoot());
  if (!rs.simplyLaced()) j["highestShortRoot"] = rootInfo(rs.highestShortRoot());
  j["fundamentalGroup"] = rs.fundamentalGroup();
  json center = json::array();
  for (const auto& v : rs.centralInvolutions()) center.push_back(v.asTorusProduct());
  j["centerTwoTorsion"] = center;
  json lattices = json::array();
  for (const auto& l : rs.lattices()) lattices.push_back({{"label", l.label}, {"index", l.index}});
  j["lattices"] = lattices;
  j["ellipticClasses"] = expectedClassCount(rs.type());

  if (c.format == "json") {
    std::cout << j.dump(2) << "\n";
  } else if (c.format == "csv") {
    throw ConfigurationError("csv output is only available for classes, spin and verify-tables");
  } else {
    std::cout << rs.type().name() << "  rank " << n << ", " << rs.roots().size() << " roots, |W| = "
              << weylGroupOrder(rs.type()) << "\n";
    std::cout << "cartan:\n";
    for (int r = 0; r < n; ++r) {
      std::cout << " ";
      for (int col = 0; col < n; ++col) std::cout << std::setw(3) << rs.cartan()(r, col);
      std::cout << "\n";
    }
    std::cout << "-highest root: " << j["highestRoot"]["negative"].get<std::string>() << "  coroot "
              << j["highestRoot"]["coroot"].get<std::string>() << "  label "
              << j["highestRoot"]["spinLabel"].get<std::string>() << "\n";
    if (j.contains("highestShortRoot"))
      std::cout << "-highest short root: " << j["highestShortRoot"]["negative"].get<std::string>() << "  coroot "
                << j["highestShortRoot"]["coroot"].get<std::string>() << "  label "
                << j["highestShortRoot"]["spinLabel"].get<std::string>() << "\n";
    std::cout << "fundamental group invariants:";
    for (int f : rs.fundamentalGroup()) std::cout << " " << f;
    std::cout << (rs.fundamentalGroup().empty() ? " none\n" : "\n");
    std::cout << "center 2-torsion:";
    for (const auto& v : center) std::cout << " " << v.get<std::string>();
    std::cout << (center.empty() ? " none\n" : "\n");
    std::cout << "lattices:";
    for (const auto& l : rs.lattices()) std::cout << " " << l.label;
    std::cout << "\nelliptic classes: " << expectedClassCount(rs.type()) << "\n";
  }
  return 0;
}

// ---- classes

int cmdClasses(const RunConfig& c) {
  RootSystem rs = RootSystem::build(RootSystemType::parse(c.type));
  const Strategy s = strategyFor(c, rs);
  auto records = classesFor(rs, c, s);
  if (c.format == "json") {
    json j;
    j["command"] = c.command;
    j["type"] = rs.type().name();
    j["strategy"] = strategyName(s);
    j["seed"] = c.seed;
    json arr = json::array();
    for (const auto& r : records) arr.push_back(toJson(r));
    j["classes"] = arr;
    std::cout << j.dump(2) << "\n";
  } else if (c.format == "csv") {
    std::cout << csvHeader() << "\n";
    for (const auto& r : records) std::cout << csvRow(r) << "\n";
  } else {
    std::cout << rs.type().name() << ": " << records.size() << " elliptic classes (" << strategyName(s) << ")\n";
    for (const auto& r : records) {
      std::cout << "  " << std::left << std::setw(16) << r.name << std::setw(22) << r.factors << " order "
                << std::setw(3) << r.order << " signature " << std::setw(12) << r.signature.asTorusProduct();
      for (const auto& [label, sp] : r.spins) std::cout << " " << label << "=" << (sp == 0 ? "mixed" : std::to_string(sp));
      std::cout << "  [" << r.count << "]\n";
    }
  }
  return 0;
}

// ---- spin

std::vector<int> parseWord(const std::string& text) {
  std::vector<int> out;
  std::string t = text;
  std::replace(t.begin(), t.end(), ',', ' ');
  std::istringstream in(t);
  std::string tok;
  while (in >> tok) {
    try {
      out.push_back(std::stoi(tok));
    } catch (const std::exception&) {
      throw ConfigurationError("bad letter '" + tok + "' in word");
    }
  }
  return out;
}

std::vector<IntVector> parseRoots(const std::string& text) {
  std::vector<IntVector> out;
  std::stringstream all(text);
  std::string part;
  while (std::getline(all, part, ';')) {
    auto v = parseWord(part);
    if (!v.empty()) out.push_back(v);
  }
  return out;
}

struct SpinInput {
  std::string cls, charpoly, word, roots;
};

WeylElement elementFor(const RootSystem& rs, const RunConfig& c, const SpinInput& in, std::string& id) {
  const int given = !in.cls.empty() + !in.charpoly.empty() + !in.word.empty() + !in.roots.empty();
  if (given != 1) throw ConfigurationError("give exactly one of --class, --charpoly, --word, --roots");
  if (!in.word.empty()) {
    auto w = parseWord(in.word);
    for (int i : w)
      if (i < 1 || i > rs.rank()) throw ConfigurationError("letter " + std::to_string(i) + " out of range");
    id = "word " + in.word;
    return WeylElement::fromWord(rs, w);
  }
  if (!in.roots.empty()) {
    auto roots = parseRoots(in.roots);
    for (const auto& r : roots)
      if (static_cast<int>(r.size()) != rs.rank()) throw ConfigurationError("root has the wrong number of coordinates");
    id = "roots " + in.roots;
    return elementOf(diagramOf(rs, roots));
  }
  if (!in.cls.empty()) {
    id = in.cls;
    if (auto d = namedDiagram(rs, in.cls)) return elementOf(*d);
    for (const auto& r : classesFor(rs, c, strategyFor(c, rs)))
      if (r.name == in.cls || r.factors == in.cls) return WeylElement::fromWord(rs, r.word);
    throw ConfigurationError("unknown class '" + in.cls + "' for " + rs.type().name());
  }
  IntPolynomial p = parseFactoredPolynomial(in.charpoly);
  id = in.charpoly;
  const Family f = rs.type().family;
  if (f == Family::B || f == Family::C || f == Family::D) {
    auto parts = partitionFromCharPoly(p);
    if (!parts) throw ConfigurationError("no elliptic class with characteristic polynomial " + in.charpoly);
    int sum = 0;
    for (int k : *parts) sum += k;
    if (sum != rs.rank()) throw ConfigurationError("characteristic polynomial has the wrong degree");
    if (f == Family::D && parts->size() % 2 != 0)
      throw ConfigurationError("D classes need an even number of negative cycles");
    CarterDiagram d = f == Family::B   ? typeBDiagram(rs, *parts)
                      : f == Family::C ? typeCDiagram(rs, *parts)
                                       : typeDDiagram(rs, *parts);
    id = d.name;
    return elementOf(d);
  }
  std::vector<const ClassRecord*> hits;
  auto records = classesFor(rs, c, strategyFor(c, rs));
  for (const auto& r : records)
    if (r.charPoly == p) hits.push_back(&r);
  if (hits.empty()) throw ConfigurationError("no elliptic class with characteristic polynomial " + in.charpoly);
  for (const auto* h : hits)
    if (h->signature != hits.front()->signature || h->spins != hits.front()->spins)
      throw ConfigurationError("characteristic polynomial " + in.charpoly + " is shared by classes with different spins; use --class");
  id = hits.front()->name;
  return WeylElement::fromWord(rs, hits.front()->word);
}

int cmdSpin(const RunConfig& c, const SpinInput& in) {
  RootSystem rs = RootSystem::build(RootSystemType::parse(c.type));
  std::string id;
  WeylElement w = elementFor(rs, c, in, id);
  if (!w.isElliptic()) throw DomainError("the element is not elliptic");
  SpinResult r = computeSpin(w, id);
  std::vector<std::pair<std::string, int>> shown;
  if (c.lattice == "all") {
    shown = r.spins;
  } else {
    const auto& l = rs.latticeBySelector(c.lattice);
    shown.emplace_back(l.label, r.spinFor(l.label));
  }
  if (c.format == "json") {
    json j = {{"command", c.command}};
    j.update(toJson(r));
    j["word"] = w.reducedWord().letters;
    j["charPoly"] = cyclotomicString(*factorCyclotomic(w.charPoly()));
    json spins = json::object(), orders = json::object();
    for (const auto& [label, s] : shown) {
      spins[label] = s;
      orders[label] = s == 1 ? r.order : 2 * r.order;
    }
    j["spins"] = spins;
    j["representativeOrder"] = orders;
    std::cout << j.dump(2) << "\n";
  } else if (c.format == "csv") {
    std::cout << "type,class,order,signature,lattice,spin,representative_order\n";
    for (const auto& [label, s] : shown)
      std::cout << rs.type().name() << "," << r.classId << "," << r.order << "," << r.signature.asTorusProduct() << ","
                << label << "," << s << "," << (s == 1 ? r.order : 2 * r.order) << "\n";
  } else {
    std::cout << rs.type().name() << " " << r.classId << ": order " << r.order << ", signature g^d = "
              << r.signature.asTorusProduct() << "\n";
    for (const auto& [label, s] : shown)
      std::cout << "  " << std::left << std::setw(16) << label << " spin " << std::setw(3) << s
                << " representative order " << (s == 1 ? r.order : 2 * r.order) << "\n";
  }
  return 0;
}

// ---- verify-tables

int cmdVerify(const RunConfig& c, const std::string& suite, int maxRank, std::size_t e8Samples) {
  SuiteOptions o;
  o.maxRank = maxRank;
  o.seed = c.seed;
  o.e8Samples = e8Samples;
  o.threads = c.threads;
  std::vector<std::string> names;
  if (suite == "all")
    names = suiteNames();
  else
    names = {suite};
  for (const auto& s : names)
    if (std::find(suiteNames().begin(), suiteNames().end(), s) == suiteNames().end())
      throw ConfigurationError("unknown suite '" + s + "'");

  std::vector<std::future<std::pair<SuiteResult, double>>> jobs;
  for (const auto& s : names)
    jobs.push_back(std::async(std::launch::async, [s, o] {
      auto t0 = std::chrono::steady_clock::now();
      SuiteResult r = runSuite(s, o);
      return std::pair{r, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count()};
    }));
  std::vector<std::pair<SuiteResult, double>> results;
  for (auto& j : jobs) results.push_back(j.get());

  bool pass = true;
  for (const auto& [r, t] : results) pass = pass && r.pass;
  if (c.format == "json") {
    json j;
    j["command"] = c.command;
    j["seed"] = c.seed;
    j["maxRank"] = maxRank;
    json arr = json::array();
    for (const auto& [r, t] : results) {
      json s = toJson(r);
      if (c.timing) s["seconds"] = t;
      arr.push_back(s);
    }
    j["suites"] = arr;
    j["pass"] = pass;
    std::cout << j.dump(2) << "\n";
  } else if (c.format == "csv") {
    std::cout << "suite,pass,summary\n";
    for (const auto& [r, t] : results) std::cout << r.suite << "," << (r.pass ? "pass" : "fail") << ",\"" << r.summary << "\"\n";
  } else {
    for (const auto& [r, t] : results) {
      std::cout << (r.pass ? "PASS " : "FAIL ") << std::left << std::setw(12) << r.suite << r.summary;
      if (c.timing) std::cout << " (" << std::fixed << std::setprecision(1) << t << " s)";
      std::cout << "\n";
      for (const auto& m : r.mismatches) std::cout << "     " << m << "\n";
    }
  }
  return pass ? 0 : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spins of elliptic Weyl group elements"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig c;
  if (const char* env = std::getenv("ELLSPIN_CACHE_DIR")) c.cacheDir = env;
  app.add_option("--format", c.format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--seed", c.seed, "random seed");
  app.add_option("--cache-dir", c.cacheDir, "class atlas cache (default $ELLSPIN_CACHE_DIR)");
  app.add_flag("--recompute", c.recompute, "recompute cached atlases and compare");
  app.add_option("--strategy", c.strategy, "exhaustive, diagram or sampling");
  app.add_option("--budget", c.budget, "element budget for exhaustive enumeration");
  app.add_option("--samples", c.samples, "random elements for sampling");
  app.add_option("--threads", c.threads, "worker threads (0: all cores)");
  app.add_option("--characteristic", c.characteristic, "characteristic of the base field (0 or odd prime)");
  app.add_flag("--timing", c.timing, "include wall-clock times");

  auto* info = app.add_subcommand("info", "Cartan data, highest roots, center");
  info->add_option("type", c.type, "e.g. E7")->required();

  auto* classes = app.add_subcommand("classes", "elliptic class atlas");
  classes->add_option("type", c.type)->required();

  SpinInput in;
  auto* spin = app.add_subcommand("spin", "spin and signature of one elliptic element");
  spin->add_option("type", c.type)->required();
  spin->add_option("--class", in.cls, "class name, e.g. A5xA2, coxeter, -I");
  spin->add_option("--charpoly", in.charpoly, "factored characteristic polynomial, e.g. \"(t^6+1)(t+1)\"");
  spin->add_option("--word", in.word, "simple reflections, e.g. \"1 2 3\"");
  spin->add_option("--roots", in.roots, "Carter diagram nodes in simple-root coordinates, ';'-separated");
  spin->add_option("--lattice", c.lattice, "universal, adjoint, intermediate:<k> or all");

  std::string suite = "all";
  int maxRank = 9;
  std::size_t e8Samples = 100'000;
  auto* verify = app.add_subcommand("verify-tables", "run verification suites");
  verify->add_option("--suite", suite, "final-chart, e8, center, coxeter, type-b, type-c, worked, braid, oracles, properties or all");
  verify->add_option("--max-rank", maxRank, "largest classical rank")->check(CLI::Range(1, 12));
  verify->add_option("--e8-samples", e8Samples, "elliptic samples for the e8 suite");

  c.command = echo(argc, argv);
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  try {
    if (c.characteristic == 2)
      throw ConfigurationError(
          "characteristic 2: h_alpha(-1) = 1, so every representative has order d and all spins are 1");
    if (c.characteristic < 0) throw ConfigurationError("characteristic must be 0 or an odd prime");
    if (c.timing && c.format == "json" && !verify->parsed())
      throw ConfigurationError("--timing only applies to verify-tables");
    if (info->parsed()) return cmdInfo(c);
    if (classes->parsed()) return cmdClasses(c);
    if (spin->parsed()) return cmdSpin(c, in);
    if (verify->parsed()) return cmdVerify(c, suite, maxRank, e8Samples);
  } catch (const ConfigurationError& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded after " << e.partialCount() << " elements: " << e.what() << "\n";
    return kExitBudget;
  } catch (const VerificationMismatch& e) {
    std::cerr << "verification mismatch: " << e.what() << "\n";
    return kExitMismatch;
  } catch (const InvariantViolation& e) {
    std::cerr << "internal invariant violated: " << e.what() << "\n";
    return kExitMismatch;
  }
  return 0;
}
