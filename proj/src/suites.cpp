#include "ellspin/suites.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "ellspin/carter.hpp"
#include "ellspin/errors.hpp"
#include "ellspin/oracles.hpp"

namespace ellspin {

namespace {

using json = nlohmann::ordered_json;

std::string torus(const std::vector<int>& idx, int n) { return Gf2Vector::fromIndices(n, idx).asTorusProduct(); }

std::vector<int> oddUpTo(int k) {
  std::vector<int> v;
  for (int i = 1; i <= k; i += 2) v.push_back(i);
  return v;
}

std::vector<RootSystemType> familyRange(Family f, int lo, int hi) {
  std::vector<RootSystemType> out;
  for (int r = lo; r <= hi; ++r) out.push_back({f, r});
  return out;
}

/// A1.., B2.., C2.., D4.., then the exceptional types of rank <= maxRank.
std::vector<RootSystemType> allTypes(int maxRank, bool withE8) {
  std::vector<RootSystemType> out;
  for (auto [f, lo] : {std::pair{Family::A, 1}, {Family::B, 2}, {Family::C, 2}, {Family::D, 4}})
    for (auto t : familyRange(f, lo, maxRank)) out.push_back(t);
  for (RootSystemType t : {RootSystemType{Family::G, 2}, {Family::F, 4}, {Family::E, 6}, {Family::E, 7},
                           {Family::E, 8}}) {
    if (t.rank > maxRank || (t.rank == 8 && !withE8)) continue;
    out.push_back(t);
  }
  return out;
}

std::vector<WeylElement> sampleElliptic(const RootSystem& rs, int count, std::mt19937_64& rng) {
  std::vector<WeylElement> out;
  for (long attempt = 0; static_cast<int>(out.size()) < count; ++attempt) {
    if (attempt > 1000L * count) throw InvariantViolation("could not sample elliptic elements");
    WeylElement w = randomElement(rs, rng);
    if (w.isElliptic()) out.push_back(std::move(w));
  }
  return out;
}

void finish(SuiteResult& r, const std::string& what) {
  r.summary = what + (r.pass ? "" : "; " + std::to_string(r.mismatches.size()) + " mismatches");
}

// ---- suites

SuiteResult finalChart(const SuiteOptions& o) {
  SuiteResult r;
  r.suite = "final-chart";
  json types = json::array();
  int classes = 0;
  for (const auto& t : allTypes(o.maxRank, false)) {
    RootSystem rs = RootSystem::build(t);
    EnumerationOptions eo;
    eo.strategy = defaultStrategy(t);
    eo.seed = o.seed;
    eo.threads = o.threads;
    auto records = enumerateEllipticClasses(rs, eo);
    ChartReport chart = verifyFinalChart(rs, records, eo.strategy);
    classes += static_cast<int>(records.size());
    for (const auto& row : chart.rows)
      r.check(row.pass, t.name() + " " + row.name + ": " + row.note + " (adjoint " + std::to_string(row.adjoint) +
                            ", universal " + std::to_string(row.universal) + ")");
    types.push_back(toJson(chart));
  }
  r.details["types"] = std::move(types);
  finish(r, std::to_string(r.details["types"].size()) + " types, " + std::to_string(classes) +
                " elliptic classes compared with the chart");
  return r;
}

SuiteResult e8(const SuiteOptions& o) {
  SuiteResult r;
  r.suite = "e8";
  RootSystem rs = RootSystem::build({Family::E, 8});
  EnumerationOptions eo;
  eo.strategy = Strategy::Sampling;
  eo.seed = o.seed;
  eo.samples = o.e8Samples;
  eo.threads = o.threads;
  auto records = enumerateEllipticClasses(rs, eo);
  std::size_t total = 0;
  json buckets = json::array();
  for (const auto& rec : records) {
    total += rec.count;
    r.check(rec.signatureUniform && rec.signature.isZero(), "bucket " + rec.factors + " has signature " +
                                                                rec.signature.asTorusProduct());
    r.check(rec.spinFor("universal") == 1 && rec.spinFor("adjoint") == 1, "bucket " + rec.factors + " spin != 1");
    buckets.push_back({{"charPoly", rec.factors}, {"order", rec.order}, {"samples", rec.count}});
  }
  r.check(total == o.e8Samples, "sample count " + std::to_string(total));
  r.details["samples"] = total;
  r.details["seed"] = o.seed;
  r.details["buckets"] = std::move(buckets);
  finish(r, std::to_string(total) + " elliptic samples in " + std::to_string(records.size()) +
                " charPoly buckets, all spin 1");
  return r;
}

SuiteResult center(const SuiteOptions& o) {
  SuiteResult r;
  r.suite = "center";
  json rows = json::array();
  auto types = allTypes(o.maxRank, true);
  for (const auto& t : types) {
    RootSystem rs = RootSystem::build(t);
    std::vector<std::string> got;
    for (const auto& v : rs.centralInvolutions()) got.push_back(v.asTorusProduct());
    auto want = tabulatedCenter(t.name());
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    r.check(got == want, t.name() + " center mismatch");
    rows.push_back({{"type", t.name()}, {"computed", got}, {"table", want}});
  }
  r.details["rows"] = std::move(rows);
  finish(r, std::to_string(types.size()) + " types match the table of central involutions");
  return r;
}

SuiteResult coxeter(const SuiteOptions& o) {
  SuiteResult r;
  r.suite = "coxeter";
  json rows = json::array();
  auto add = [&](const RootSystem& rs, const std::string& which, const WeylElement& w, const std::string& want) {
    std::string got = spinSignature(w).asTorusProduct();
    r.check(got == want, rs.type().name() + " " + which + ": " + got + " != " + want);
    rows.push_back({{"type", rs.type().name()}, {"element", which}, {"signature", got}, {"expected", want}});
  };
  const int top = std::max(o.maxRank, 1);
  for (int n = 2; n <= top + 1; ++n) {
    RootSystem rs = RootSystem::build({Family::A, n - 1});
    add(rs, "coxeter", coxeterElement(rs), n % 2 == 0 ? torus(oddUpTo(n - 1), n - 1) : "1");
  }
  for (int n = 2; n <= top; ++n) {
    RootSystem b = RootSystem::build({Family::B, n});
    add(b, "-I", *minusIdentity(b), ((n + 1) / 2) % 2 ? torus({n}, n) : "1");
    RootSystem c = RootSystem::build({Family::C, n});
    add(c, "-I", *minusIdentity(c), torus(oddUpTo(2 * ((n - 1) / 2) + 1), n));
  }
  for (int n = 4; n <= top; ++n) {
    RootSystem d = RootSystem::build({Family::D, n});
    std::string got = spinSignature(coxeterElement(d)).asTorusProduct();
    const bool expect = n % 4 == 2 || n % 4 == 3;
    r.check((got == torus({n - 1, n}, n)) == expect, "D" + std::to_string(n) + " coxeter: " + got);
    rows.push_back({{"type", d.type().name()}, {"element", "coxeter"}, {"signature", got},
                    {"expected", expect ? torus({n - 1, n}, n) : "not h" + std::to_string(n - 1) + "h" + std::to_string(n)}});
  }
  if (top >= 7) {
    RootSystem e7 = RootSystem::build({Family::E, 7});
    add(e7, "-I", *minusIdentity(e7), "h1h3h5");
  }
  r.details["rows"] = rows;
  finish(r, std::to_string(rows.size()) + " Coxeter and -I signatures");
  return r;
}

SuiteResult typeB(const SuiteOptions& o) {
  SuiteResult r;
  r.suite = "type-b";
  int count = 0;
  json rows = json::array();
  for (int n = 2; n <= o.maxRank; ++n) {
    RootSystem rs = RootSystem::build({Family::B, n});
    for (const auto& parts : partitionsOf(n)) {
      CarterDiagram d = typeBDiagram(rs, parts);
      WeylElement w = elementOf(d);
      TorusVector direct = spinSignature(w);
      auto predicted = predictSignature(d);
      const int e = typeBExponent(parts);
      TorusVector formula = e % 2 ? Gf2Vector::unit(n, n) : Gf2Vector::zero(n);
      r.check(predicted && *predicted == direct && formula == direct,
              d.name + ": direct " + direct.asTorusProduct() + ", formula " + formula.asTorusProduct());
      rows.push_back({{"type", rs.type().name()}, {"class", d.name}, {"exponent", e},
                      {"signature", direct.asTorusProduct()}});
      ++count;
    }
  }
  r.details["rows"] = std::move(rows);
  finish(r, std::to_string(count) + " B partition diagrams agree with h_n^e");
  return r;
}

SuiteResult typeC(const SuiteOptions& o) {
  SuiteResult r;
  r.suite = "type-c";
  int count = 0;
  json rows = json::array();
  for (int n = 2; n <= o.maxRank; ++n) {
    RootSystem rs = RootSystem::build({Family::C, n});
    EnumerationOptions eo;
    eo.strategy = Strategy::Diagram;
    for (const auto& rec : enumerateEllipticClasses(rs, eo)) {
      const bool linked = rec.linkedToMinusI.value_or(false);
      r.check(rec.linkedToMinusI.has_value(), rec.type + " " + rec.name + ": linkage unknown");
      r.check(rec.spinFor("universal") == -1, rec.type + " " + rec.name + ": universal spin +1");
      r.check((rec.spinFor("adjoint") == 1) == linked, rec.type + " " + rec.name + ": adjoint spin vs linkage");
      rows.push_back({{"type", rec.type}, {"class", rec.name}, {"linkedToA1n", linked},
                      {"adjoint", rec.spinFor("adjoint")}, {"universal", rec.spinFor("universal")}});
      ++count;
    }
  }
  // C2 x A1 in C3 from two different extended-diagram removals
  if (o.maxRank >= 3) {
    RootSystem rs = RootSystem::build({Family::C, 3});
    IntVector ext = rs.highestRoot().coords;
    for (int& c : ext) c = -c;
    CarterDiagram first = diagramOf(rs, {ext, rs.simpleRoot(1), rs.simpleRoot(3)}, "C2xA1");
    CarterDiagram second = diagramOf(rs, {ext, rs.simpleRoot(2), rs.simpleRoot(3)}, "C2xA1");
    WeylElement w1 = elementOf(first), w2 = elementOf(second);
    std::string s1 = spinSignature(w1).asTorusProduct(), s2 = spinSignature(w2).asTorusProduct();
    r.check(s1 == "h1" && s2 == "h2", "C3 C2xA1 labelings give " + s1 + " and " + s2);
    r.check(w1.charPoly() == w2.charPoly(), "C3 C2xA1 constructions are not conjugate");
    r.check(computeSpin(w1).spinFor("adjoint") == -1 && computeSpin(w2).spinFor("adjoint") == -1,
            "C3 C2xA1 adjoint spin");
    r.details["c3Labelings"] = {s1, s2};
  }
  r.details["rows"] = std::move(rows);
  finish(r, std::to_string(count) + " C classes: universal -1, adjoint 1 iff linked to -I");
  return r;
}

SuiteResult worked(const SuiteOptions&) {
  SuiteResult r;
  r.suite = "worked";
  const std::vector<std::tuple<std::string, std::string, std::string>> cases = {
      {"B7", "B3xB3xB1", "1"},  {"B7", "B6xB1", "h7"},       {"C6", "C2xC4", "h3h5"},
      {"C8", "C2xC6", "h1h3h5h7"}, {"F4", "A3x~A1", "h4"},  {"E6", "A1xA5", "1"},
      {"E7", "A3^2xA1", "1"},   {"E7", "A5xA2", "h1h3h5"}, {"E7", "A7", "1"},
      {"E8", "A5xA1xA2", "1"},  {"E8", "A7xA1", "1"},      {"A3", "coxeter", "h1h3"}};
  json rows = json::array();
  for (const auto& [type, name, want] : cases) {
    RootSystem rs = RootSystem::build(RootSystemType::parse(type));
    auto d = namedDiagram(rs, name);
    if (!d) {
      r.check(false, type + " " + name + ": no construction");
      continue;
    }
    WeylElement w = elementOf(*d);
    r.check(w.isElliptic(), type + " " + name + " is not elliptic");
    std::string got = spinSignature(w).asTorusProduct();
    r.check(got == want, type + " " + name + ": " + got + " != " + want);
    rows.push_back({{"type", type}, {"class", name}, {"order", w.order()}, {"signature", got}, {"expected", want}});
  }
  r.details["rows"] = std::move(rows);
  finish(r, std::to_string(cases.size()) + " worked examples");
  return r;
}

SuiteResult braid(const SuiteOptions& o) {
  SuiteResult r;
  r.suite = "braid";
  json reports = json::array();
  long checks = 0;
  for (const auto& t : allTypes(std::min(o.maxRank, 8), true)) {
    RootSystem rs = RootSystem::build(t);
    AdjointOracle ad(rs);
    RelationReport rep = verifyRelations(ad, o.relationSamples, o.seed);
    for (const auto& f : rep.failures) r.check(false, t.name() + ": " + f);
    checks += rep.cr1Checked + rep.cr2Checked + rep.commuteChecked + rep.braid3Checked + rep.braid4Checked +
              rep.chainSignChecked + rep.shortOrthogonalChecked + rep.titsHomomorphismChecked;
    reports.push_back(toJson(rep));
  }
  r.details["reports"] = std::move(reports);
  finish(r, std::to_string(r.details["reports"].size()) + " types, " + std::to_string(checks) +
                " relation checks in the adjoint representation");
  return r;
}

SuiteResult oracles(const SuiteOptions& o) {
  SuiteResult r;
  r.suite = "oracles";
  json rows = json::array();
  long adjointChecks = 0, classicalChecks = 0;
  for (const auto& t : allTypes(std::min(o.maxRank, 8), true)) {
    RootSystem rs = RootSystem::build(t);
    std::mt19937_64 rng(o.seed * 1000003ULL + static_cast<std::uint64_t>(t.rank) * 31 + static_cast<int>(t.family));
    AdjointOracle ad(rs);
    auto sample = sampleElliptic(rs, o.oracleSamples, rng);
    int agree = 0;
    for (const auto& w : sample) {
      try {
        adjointSpinCheck(ad, w);
        ++agree;
      } catch (const InvariantViolation& e) {
        r.check(false, t.name() + ": " + e.what());
      }
    }
    adjointChecks += agree;
    json row = {{"type", t.name()}, {"adjointSamples", sample.size()}, {"adjointAgree", agree}};

    const bool classical = ClassicalRealization::supported(t) &&
                           !(t.family == Family::A && t.rank > 7) && !(t.family == Family::C && t.rank > 5);
    if (classical) {
      ClassicalRealization g(rs);
      for (const auto& f : g.checkGenerators()) r.check(false, t.name() + ": " + f);
      EnumerationOptions eo;
      eo.strategy = Strategy::Diagram;
      int cagree = 0, total = 0;
      auto test = [&](const WeylElement& w, const std::string& label) {
        ++total;
        const int want = computeSpin(w).spinFor("universal");
        try {
          const int got = classicalSpinCheck(g, w);
          if (got == want)
            ++cagree;
          else
            r.check(false, t.name() + " " + label + ": " + g.name() + " spin " + std::to_string(got));
        } catch (const InvariantViolation& e) {
          r.check(false, t.name() + " " + label + ": " + e.what());
        }
      };
      for (const auto& rec : enumerateEllipticClasses(rs, eo)) test(WeylElement::fromWord(rs, rec.word), rec.name);
      for (std::size_t k = 0; k < sample.size() && k < 50; ++k) test(sample[k], "sample");
      classicalChecks += cagree;
      row["classical"] = g.name();
      row["classicalChecks"] = total;
      row["classicalAgree"] = cagree;
    }
    rows.push_back(std::move(row));
  }
  r.details["rows"] = std::move(rows);
  finish(r, std::to_string(adjointChecks) + " adjoint and " + std::to_string(classicalChecks) +
                " classical matrix orders agree with the Tits model");
  return r;
}

SuiteResult properties(const SuiteOptions& o) {
  SuiteResult r;
  r.suite = "properties";
  std::mt19937_64 rng(o.seed ^ 0x5eedULL);
  long reps = 0, words = 0, odd = 0, linked = 0, center = 0, assoc = 0;
  for (const auto& t : allTypes(std::min(o.maxRank, 8), true)) {
    RootSystem rs = RootSystem::build(t);
    const int n = rs.rank();
    const int samples = t.rank == 8 && t.family == Family::E ? 10 : 25;
    for (const auto& w : sampleElliptic(rs, samples, rng)) {
      const TorusVector sig = spinSignature(w);
      const int d = w.order();
      // g^d does not depend on the torus part of the representative
      const std::uint32_t all = 1u << n;
      for (std::uint32_t k = 0; k < std::min<std::uint32_t>(all, 64); ++k) {
        const std::uint32_t bits = all <= 64 ? k : static_cast<std::uint32_t>(rng()) & (all - 1);
        TitsElement g = power(TitsElement{w, Gf2Vector(n, bits)}, d);
        r.check(g.w.isIdentity() && g.t == sig, t.name() + ": g^d depends on the representative");
        ++reps;
      }
      if (d % 2 == 1) {
        r.check(sig.isZero(), t.name() + ": odd order with nontrivial signature");
        ++odd;
      }
      // spins are shared along linkage
      SpinResult base = computeSpin(w);
      for (int k : w.ellipticPowers()) {
        SpinResult other = computeSpin(w.power(k));
        r.check(other.spins == base.spins, t.name() + ": linked powers have different spins");
        if (t.family != Family::C)
          r.check(other.signature == base.signature, t.name() + ": linked powers have different signatures");
        ++linked;
      }
    }
    // two reduced words of the same element give the same adjoint product
    if (t.rank <= 6) {
      AdjointOracle ad(rs);
      for (int k = 0; k < 5; ++k) {
        WeylElement w = randomElement(rs, rng);
        std::vector<int> a = w.reducedWord().letters;
        std::vector<int> b;
        WeylElement v = w;
        while (!v.isIdentity()) {
          std::vector<int> desc;
          for (int i = 1; i <= n; ++i)
            if (v.isRightDescent(i)) desc.push_back(i);
          const int i = desc[rng() % desc.size()];
          b.insert(b.begin(), i);
          v.rightMultiplySimple(i);
        }
        r.check(WeylElement::fromWord(rs, b) == w, t.name() + ": random reduced word is wrong");
        r.check(ad.word(a) == ad.word(b), t.name() + ": lift depends on the reduced word");
        TitsElement ta = titsIdentity(rs), tb = titsIdentity(rs);
        foldWord(ta, a);
        foldWord(tb, b);
        r.check(ta == tb, t.name() + ": Tits lift depends on the reduced word");
        ++words;
      }
    }
    if (auto m = minusIdentity(rs)) {
      r.check(rs.isCentral(spinSignature(*m)), t.name() + ": -I signature is not central");
      ++center;
    }
    for (int k = 0; k < 20; ++k) {
      auto rnd = [&] {
        return TitsElement{randomElement(rs, rng), Gf2Vector(n, static_cast<std::uint32_t>(rng()))};
      };
      TitsElement a = rnd(), b = rnd(), c = rnd();
      r.check(multiply(multiply(a, b), c) == multiply(a, multiply(b, c)), t.name() + ": multiply not associative");
      ++assoc;
    }
  }
  r.details = {{"representativeIndependence", reps}, {"reducedWordIndependence", words},
               {"oddOrderTrivial", odd},           {"linkedPowers", linked},
               {"minusIdentityCentral", center},   {"associativity", assoc}};
  finish(r, std::to_string(reps + words + odd + linked + center + assoc) + " property checks");
  return r;
}

}  // namespace

const std::vector<std::string>& suiteNames() {
  static const std::vector<std::string> names = {"final-chart", "e8",     "center",  "coxeter",    "type-b",
                                                 "type-c",      "worked", "braid",   "oracles", "properties"};
  return names;
}

SuiteResult runSuite(const std::string& name, const SuiteOptions& opts) {
  if (name == "final-chart") return finalChart(opts);
  if (name == "e8") return e8(opts);
  if (name == "center") return center(opts);
  if (name == "coxeter") return coxeter(opts);
  if (name == "type-b") return typeB(opts);
  if (name == "type-c") return typeC(opts);
  if (name == "worked") return worked(opts);
  if (name == "braid") return braid(opts);
  if (name == "oracles") return oracles(opts);
  if (name == "properties") return properties(opts);
  throw ConfigurationError("unknown suite '" + name + "'");
}

json toJson(const SuiteResult& r) {
  json j;
  j["suite"] = r.suite;
  j["pass"] = r.pass;
  j["summary"] = r.summary;
  j["mismatches"] = r.mismatches;
  j["details"] = r.details;
  return j;
}

std::vector<std::string> tabulatedCenter(const std::string& typeName) {
  RootSystemType t = RootSystemType::parse(typeName);
  const int n = t.rank;
  switch (t.family) {
    case Family::A:
      if ((n + 1) % 2 == 0) return {torus(oddUpTo(n), n)};
      return {};
    case Family::B: return {torus({n}, n)};
    case Family::C: return {torus(oddUpTo(2 * ((n - 1) / 2) + 1), n)};
    case Family::D:
      if (n % 2 == 0) {
        std::vector<int> last = oddUpTo(n - 3);
        last.push_back(n);
        return {torus(oddUpTo(n - 1), n), torus({n - 1, n}, n), torus(last, n)};
      }
      return {torus({n - 1, n}, n)};
    case Family::E:
      if (n == 7) return {"h1h3h5"};
      return {};
    default: return {};
  }
}

}  // namespace ellspin
