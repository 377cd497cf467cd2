#include <algorithm>
#include <functional>
#include <future>
#include <map>
#include <numeric>
#include <set>
#include <thread>
#include <unordered_map>

#include "ellspin/carter.hpp"
#include "ellspin/errors.hpp"

namespace ellspin {

std::string strategyName(Strategy s) {
  switch (s) {
    case Strategy::Exhaustive: return "exhaustive";
    case Strategy::Diagram: return "diagram";
    case Strategy::Sampling: return "sampling";
  }
  return "?";
}

Strategy parseStrategy(const std::string& s) {
  if (s == "exhaustive") return Strategy::Exhaustive;
  if (s == "diagram") return Strategy::Diagram;
  if (s == "sampling") return Strategy::Sampling;
  throw ConfigurationError("unknown strategy '" + s + "' (expected exhaustive, diagram or sampling)");
}

Strategy defaultStrategy(const RootSystemType& type) {
  switch (type.family) {
    case Family::A:
    case Family::B:
    case Family::C:
    case Family::D: return Strategy::Diagram;
    case Family::E: return type.rank == 8 ? Strategy::Sampling : Strategy::Exhaustive;
    default: return Strategy::Exhaustive;
  }
}

int ClassRecord::spinFor(const std::string& label) const {
  for (const auto& [l, s] : spins)
    if (l == label) return s;
  throw ConfigurationError("no lattice '" + label + "' in class record");
}

namespace {

bool hasMinusIdentity(const RootSystemType& t) {
  switch (t.family) {
    case Family::A: return t.rank == 1;
    case Family::D: return t.rank % 2 == 0;
    case Family::E: return t.rank != 6;
    default: return true;
  }
}

std::vector<int> namingOrder(const RootSystemType& t, std::vector<int> parts) {
  std::sort(parts.begin(), parts.end());
  if (t.family != Family::C) std::reverse(parts.begin(), parts.end());
  return parts;
}

std::string classicalName(const RootSystemType& t, const IntPolynomial& p) {
  if (t.family == Family::A) return classicalClassName(t, {});
  auto parts = partitionFromCharPoly(p);
  if (!parts) throw InvariantViolation("elliptic classical element with unexpected characteristic polynomial");
  return classicalClassName(t, namingOrder(t, *parts));
}

bool isClassical(const RootSystemType& t) {
  return t.family == Family::A || t.family == Family::B || t.family == Family::C || t.family == Family::D;
}

struct Key {
  std::uint64_t a = 0, b = 0;
  friend bool operator==(const Key&, const Key&) = default;
};

struct KeyHash {
  std::size_t operator()(const Key& k) const { return std::hash<std::uint64_t>()(k.a * 0x9E3779B97F4A7C15ull ^ k.b); }
};

Key packKey(const int* v, int n) {
  Key k;
  for (int i = 0; i < n; ++i) {
    std::uint64_t x = static_cast<std::uint64_t>(v[i] + 512) & 1023u;
    if (i < 6) k.a |= x << (10 * i);
    else k.b |= x << (10 * (i - 6));
  }
  return k;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

struct EllipticStore {
  int n = 0;
  std::vector<std::int8_t> cols;  // n*n per element, column-major
  std::vector<std::uint16_t> length;
  const std::int8_t* at(std::size_t i) const { return cols.data() + i * n * n; }
};

EllipticStore collectElliptic(const RootSystem& rs, std::size_t budget) {
  EllipticStore store;
  const int n = store.n = rs.rank();
  std::size_t visited = 0;
  std::function<void(const WeylElement&, int)> visit = [&](const WeylElement& w, int depth) {
    if (++visited > budget) throw BudgetExceeded("exhaustive enumeration exceeded the element budget", visited - 1);
    if (w.isElliptic()) {
      for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) store.cols.push_back(static_cast<std::int8_t>(w.entry(i, j)));
      store.length.push_back(static_cast<std::uint16_t>(depth));
    }
    for (int i = 1; i <= n; ++i) {
      if (w.isRightDescent(i)) continue;
      WeylElement v = w;
      v.rightMultiplySimple(i);
      bool canonical = true;
      for (int j = 1; j < i && canonical; ++j)
        if (v.isRightDescent(j)) canonical = false;
      if (canonical) visit(v, depth + 1);
    }
  };
  visit(WeylElement::identity(rs), 0);
  return store;
}

Key keyOfStored(const RootSystem& rs, const EllipticStore& s, std::size_t idx) {
  const int n = s.n;
  const std::int8_t* m = s.at(idx);
  int v[kMaxRank] = {};
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) v[i] += rs.twoRho()[j] * m[j * n + i];
  return packKey(v, n);
}

WeylElement storedElement(const RootSystem& rs, const EllipticStore& s, std::size_t idx) {
  const int n = s.n;
  std::vector<std::vector<int>> cols(n, std::vector<int>(n));
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) cols[j][i] = s.at(idx)[j * n + i];
  return WeylElement::fromColumns(rs, cols);
}

std::vector<ClassRecord> exhaustive(const RootSystem& rs, const EnumerationOptions& opts) {
  const RootSystemType& t = rs.type();
  if (weylGroupOrder(t) > opts.elementBudget)
    throw BudgetExceeded("|W(" + t.name() + ")| = " + std::to_string(weylGroupOrder(t)) +
                             " exceeds the element budget of " + std::to_string(opts.elementBudget),
                         0);
  EllipticStore store = collectElliptic(rs, opts.elementBudget);
  const int n = store.n;
  const std::size_t count = store.length.size();
  std::unordered_map<Key, int, KeyHash> index;
  index.reserve(count * 2);
  for (std::size_t k = 0; k < count; ++k) index.emplace(keyOfStored(rs, store, k), static_cast<int>(k));

  UnionFind uf(count);
  const IntMatrix& a = rs.cartan();
  for (std::size_t k = 0; k < count; ++k) {
    const std::int8_t* m = store.at(k);
    int base[kMaxRank] = {};
    for (int j = 0; j < n; ++j)
      for (int r = 0; r < n; ++r) base[r] += rs.twoRho()[j] * m[j * n + r];
    for (int i = 0; i < n; ++i) {
      // s_i w s_i (2 rho) = s_i (w(2 rho) - 2 w(alpha_i))
      int x[kMaxRank];
      for (int r = 0; r < n; ++r) x[r] = base[r] - 2 * m[i * n + r];
      int p = 0;
      for (int j = 0; j < n; ++j) p += x[j] * a(j, i);
      x[i] -= p;
      auto it = index.find(packKey(x, n));
      if (it == index.end()) throw InvariantViolation("conjugate of an elliptic element is not elliptic");
      uf.unite(static_cast<int>(k), it->second);
    }
  }

  std::map<int, std::pair<std::size_t, std::size_t>> classes;  // root -> (size, shortest member)
  for (std::size_t k = 0; k < count; ++k) {
    int r = uf.find(static_cast<int>(k));
    auto [it, fresh] = classes.try_emplace(r, 0, k);
    ++it->second.first;
    if (store.length[k] < store.length[it->second.second]) it->second.second = k;
  }

  std::vector<ClassRecord> records;
  std::vector<WeylElement> reps;
  for (const auto& [root, info] : classes) {
    reps.push_back(storedElement(rs, store, info.second));
    ClassRecord rec = recordFor(reps.back(), "", "exhaustive");
    rec.count = info.first;
    records.push_back(std::move(rec));
  }

  auto classOf = [&](const WeylElement& w) -> int {
    IntVector key = w.orbitKey();
    auto it = index.find(packKey(key.data(), n));
    if (it == index.end()) throw InvariantViolation("constructed representative is not elliptic");
    int root = uf.find(it->second);
    return static_cast<int>(std::distance(classes.begin(), classes.find(root)));
  };

  if (isClassical(t)) {
    for (auto& rec : records) {
      rec.name = classicalName(t, rec.charPoly);
      if (auto parts = partitionFromCharPoly(rec.charPoly)) rec.partition = namingOrder(t, *parts);
    }
  } else {
    for (const auto& d : exceptionalConstructions(rs)) {
      ClassRecord& rec = records[classOf(elementOf(d))];
      if (!rec.name.empty() && rec.name != d.name)
        throw InvariantViolation("two constructed diagrams " + rec.name + " and " + d.name + " are conjugate");
      rec.name = d.name;
    }
    std::set<std::string> used;
    for (const auto& rec : records) used.insert(rec.name);
    for (auto& rec : records) {
      if (!rec.name.empty()) continue;
      std::vector<std::string> candidates;
      for (const auto& e : exceptionalCatalog(t))
        if (e.factors == rec.factors && !used.count(e.name)) candidates.push_back(e.name);
      rec.name = candidates.size() == 1 ? candidates.front() : "?" + rec.factors;
      used.insert(rec.name);
    }
  }
  return records;
}

void checkClassicalPoly(const CarterDiagram& d, const std::vector<int>& parts, const IntPolynomial& p) {
  IntPolynomial want = IntPolynomial::constant(1);
  for (int k : parts) want = want * (IntPolynomial::monomial(k) + IntPolynomial::constant(1));
  if (want != p) throw InvariantViolation("diagram " + d.name + " has an unexpected characteristic polynomial");
}

std::vector<ClassRecord> diagramMode(const RootSystem& rs) {
  const RootSystemType& t = rs.type();
  std::vector<CarterDiagram> diagrams;
  switch (t.family) {
    case Family::A: diagrams.push_back(*namedDiagram(rs, "coxeter")); break;
    case Family::B:
      for (const auto& p : partitionsOf(t.rank)) diagrams.push_back(typeBDiagram(rs, namingOrder(t, p)));
      break;
    case Family::C:
      for (const auto& p : partitionsOf(t.rank)) diagrams.push_back(typeCDiagram(rs, namingOrder(t, p)));
      break;
    case Family::D:
      for (const auto& p : partitionsOf(t.rank))
        if (p.size() % 2 == 0) diagrams.push_back(typeDDiagram(rs, p));
      break;
    default:
      throw ConfigurationError("the diagram strategy covers types A, B, C and D; use exhaustive or sampling for " +
                               t.name());
  }
  std::vector<ClassRecord> out;
  for (const auto& d : diagrams) {
    WeylElement w = elementOf(d);
    if (!w.isElliptic()) throw InvariantViolation("diagram " + d.name + " does not give an elliptic element");
    ClassRecord rec = recordFor(w, d.name, "diagram");
    if (t.family != Family::A) checkClassicalPoly(d, d.partition, rec.charPoly);
    rec.partition = d.partition;
    rec.predicted = predictSignature(d);
    rec.count = 1;
    out.push_back(std::move(rec));
  }
  return out;
}

struct SampleOutcome {
  std::string factors;
  std::uint32_t signature = 0;
  std::vector<int> word;
};

std::vector<ClassRecord> sampling(const RootSystem& rs, const EnumerationOptions& opts) {
  const RootSystemType& t = rs.type();
  const std::size_t batch = 2048;
  int threads = opts.threads > 0 ? opts.threads : static_cast<int>(std::thread::hardware_concurrency());
  threads = std::max(1, threads);

  auto runBatch = [&](std::size_t b) {
    std::vector<SampleOutcome> out;
    for (std::size_t k = b * batch; k < (b + 1) * batch; ++k) {
      std::seed_seq seq{static_cast<std::uint32_t>(opts.seed), static_cast<std::uint32_t>(opts.seed >> 32),
                        static_cast<std::uint32_t>(k), static_cast<std::uint32_t>(k >> 32)};
      std::mt19937_64 rng(seq);
      WeylElement w = randomElement(rs, rng);
      if (!w.isElliptic()) continue;
      auto f = factorCyclotomic(w.charPoly());
      if (!f) throw InvariantViolation("characteristic polynomial is not a product of cyclotomics");
      out.push_back({cyclotomicString(*f), spinSignature(w).bits(), w.reducedWord().letters});
    }
    return out;
  };

  std::vector<SampleOutcome> samples;
  std::size_t draws = 0;
  for (std::size_t next = 0; samples.size() < opts.samples;) {
    if (draws >= opts.elementBudget)
      throw BudgetExceeded("sampling exceeded the draw budget", samples.size());
    std::vector<std::future<std::vector<SampleOutcome>>> jobs;
    for (int j = 0; j < threads; ++j) jobs.push_back(std::async(std::launch::async, runBatch, next++));
    for (auto& job : jobs) {
      auto part = job.get();
      draws += batch;
      for (auto& s : part)
        if (samples.size() < opts.samples) samples.push_back(std::move(s));
    }
  }

  struct Bucket {
    std::size_t count = 0;
    std::set<std::uint32_t> signatures;
    std::vector<int> word;
  };
  std::map<std::string, Bucket> buckets;
  for (const auto& s : samples) {
    Bucket& b = buckets[s.factors];
    if (b.count++ == 0) b.word = s.word;
    b.signatures.insert(s.signature);
  }

  std::vector<ClassRecord> out;
  for (const auto& [factors, b] : buckets) {
    WeylElement w = WeylElement::fromWord(rs, b.word);
    std::string name;
    if (isClassical(t)) {
      name = classicalName(t, w.charPoly());
    } else {
      for (const auto& e : exceptionalCatalog(t))
        if (e.factors == factors) name += (name.empty() ? "" : "/") + e.name;
      if (name.empty()) name = factors;
    }
    ClassRecord rec = recordFor(w, name, "sampling");
    rec.count = b.count;
    rec.signatureUniform = b.signatures.size() == 1;
    for (auto& [label, spinValue] : rec.spins) {
      std::set<int> seen;
      for (std::uint32_t bits : b.signatures)
        seen.insert(rs.reducesTrivially(Gf2Vector(rs.rank(), bits), rs.latticeBySelector(label)) ? 1 : -1);
      spinValue = seen.size() == 1 ? *seen.begin() : 0;
    }
    if (isClassical(t))
      if (auto parts = partitionFromCharPoly(rec.charPoly)) rec.partition = namingOrder(t, *parts);
    out.push_back(std::move(rec));
  }
  return out;
}

int catalogIndex(const RootSystemType& t, const std::string& name) {
  auto cat = exceptionalCatalog(t);
  for (std::size_t k = 0; k < cat.size(); ++k)
    if (cat[k].name == name) return static_cast<int>(k);
  return static_cast<int>(cat.size());
}

}  // namespace

ClassRecord recordFor(const WeylElement& w, const std::string& name, const std::string& provenance) {
  const RootSystem& rs = w.rootSystem();
  ClassRecord rec;
  rec.type = rs.type().name();
  rec.rank = rs.rank();
  rec.name = name;
  rec.provenance = provenance;
  rec.charPoly = w.charPoly();
  auto f = factorCyclotomic(rec.charPoly);
  if (!f) throw InvariantViolation("characteristic polynomial is not a product of cyclotomics");
  rec.factors = cyclotomicString(*f);
  SpinResult spin = computeSpin(w, name);
  rec.order = spin.order;
  rec.signature = spin.signature;
  rec.spins = spin.spins;
  rec.word = w.reducedWord().letters;
  rec.count = 1;
  if (hasMinusIdentity(rs.type())) rec.linkedToMinusI = w.isLinkedToMinusI();
  return rec;
}

std::vector<ClassRecord> enumerateEllipticClasses(const RootSystem& rs, const EnumerationOptions& opts) {
  std::vector<ClassRecord> records;
  switch (opts.strategy) {
    case Strategy::Exhaustive: records = exhaustive(rs, opts); break;
    case Strategy::Diagram: return diagramMode(rs);
    case Strategy::Sampling: records = sampling(rs, opts); break;
  }
  const RootSystemType& t = rs.type();
  if (isClassical(t)) {
    // Same order as the diagram strategy.
    std::vector<std::string> order;
    for (const auto& p : partitionsOf(t.rank))
      if (t.family != Family::D || p.size() % 2 == 0) order.push_back(classicalClassName(t, namingOrder(t, p)));
    auto pos = [&](const std::string& nm) { return std::find(order.begin(), order.end(), nm) - order.begin(); };
    std::stable_sort(records.begin(), records.end(),
                     [&](const ClassRecord& x, const ClassRecord& y) { return pos(x.name) < pos(y.name); });
  } else {
    std::stable_sort(records.begin(), records.end(), [&](const ClassRecord& x, const ClassRecord& y) {
      int cx = catalogIndex(t, x.name), cy = catalogIndex(t, y.name);
      if (cx != cy) return cx < cy;
      if (x.order != y.order) return x.order < y.order;
      return x.factors < y.factors;
    });
  }
  return records;
}

nlohmann::ordered_json toJson(const ClassRecord& r) {
  nlohmann::ordered_json j;
  j["type"] = r.type;
  j["rank"] = r.rank;
  j["name"] = r.name;
  j["order"] = r.order;
  j["charPoly"] = r.charPoly.coeffs();
  j["factors"] = r.factors;
  j["signature"] = r.signature.asTorusProduct();
  j["signatureBits"] = r.signature.bitString();
  j["signatureUniform"] = r.signatureUniform;
  nlohmann::ordered_json spins;
  for (const auto& [label, s] : r.spins) spins[label] = s;
  j["spins"] = spins;
  j["provenance"] = r.provenance;
  j["word"] = r.word;
  j["count"] = r.count;
  j["linkedToMinusI"] = r.linkedToMinusI ? nlohmann::ordered_json(*r.linkedToMinusI) : nlohmann::ordered_json();
  j["predictedSignatureBits"] =
      r.predicted ? nlohmann::ordered_json(r.predicted->bitString()) : nlohmann::ordered_json();
  j["partition"] = r.partition;
  return j;
}

namespace {

Gf2Vector fromBitString(const std::string& s) {
  std::vector<int> v;
  for (char c : s) {
    if (c != '0' && c != '1') throw ConfigurationError("malformed signature bits '" + s + "'");
    v.push_back(c - '0');
  }
  return Gf2Vector::fromIntegers(v);
}

}  // namespace

ClassRecord classRecordFromJson(const nlohmann::ordered_json& j) {
  try {
    ClassRecord r;
    r.type = j.at("type").get<std::string>();
    r.rank = j.at("rank").get<int>();
    r.name = j.at("name").get<std::string>();
    r.order = j.at("order").get<int>();
    r.charPoly = IntPolynomial(j.at("charPoly").get<std::vector<std::int64_t>>());
    r.factors = j.at("factors").get<std::string>();
    r.signature = fromBitString(j.at("signatureBits").get<std::string>());
    r.signatureUniform = j.at("signatureUniform").get<bool>();
    for (const auto& [label, s] : j.at("spins").items()) r.spins.emplace_back(label, s.get<int>());
    r.provenance = j.at("provenance").get<std::string>();
    r.word = j.at("word").get<std::vector<int>>();
    r.count = j.at("count").get<std::size_t>();
    if (!j.at("linkedToMinusI").is_null()) r.linkedToMinusI = j.at("linkedToMinusI").get<bool>();
    if (!j.at("predictedSignatureBits").is_null())
      r.predicted = fromBitString(j.at("predictedSignatureBits").get<std::string>());
    r.partition = j.at("partition").get<std::vector<int>>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigurationError(std::string("malformed class record: ") + e.what());
  }
}

std::string csvHeader() { return "phi,gamma,adjoint_spin,universal_spin"; }

std::string csvRow(const ClassRecord& r) {
  return r.type + "," + r.name + "," + std::to_string(r.spinFor("adjoint")) + "," +
         std::to_string(r.spinFor("universal"));
}

ChartReport verifyFinalChart(const RootSystem& rs, const std::vector<ClassRecord>& records, Strategy strategy) {
  const RootSystemType& t = rs.type();
  ChartReport report;
  report.type = t.name();
  report.strategy = strategyName(strategy);
  for (const auto& rec : records) {
    ChartRow row;
    row.name = rec.name;
    row.adjoint = rec.spinFor("adjoint");
    row.universal = rec.spinFor("universal");
    switch (t.family) {
      case Family::A:
        row.expectedAdjoint = 1;
        row.expectedUniversal = t.rank % 2 == 0 ? 1 : -1;
        break;
      case Family::B:
      case Family::D: {
        auto parts = partitionFromCharPoly(rec.charPoly);
        if (!parts) {
          row.note = "characteristic polynomial is not of the form prod (t^k+1)";
          break;
        }
        row.expectedAdjoint = 1;
        row.expectedUniversal = typeBExponent(*parts) % 2 ? -1 : 1;
        break;
      }
      case Family::C:
        if (!rec.linkedToMinusI) {
          row.note = "linkage to -I unknown";
          break;
        }
        row.expectedAdjoint = *rec.linkedToMinusI ? 1 : -1;
        row.expectedUniversal = -1;
        break;
      case Family::F:
        row.expectedAdjoint = row.expectedUniversal = rec.name == "A3x~A1" ? -1 : 1;
        break;
      case Family::E:
        row.expectedAdjoint = 1;
        row.expectedUniversal =
            t.rank != 7 || rec.name == "A3^2xA1" || rec.name == "A7" || rec.name == "E7(a2)" ? 1 : -1;
        break;
      case Family::G:
        row.expectedAdjoint = row.expectedUniversal = 1;
        break;
    }
    if (!rec.name.empty() && rec.name[0] == '?') row.note = "class could not be named";
    row.pass = row.note.empty() && row.adjoint == row.expectedAdjoint && row.universal == row.expectedUniversal;
    if (!row.pass && row.note.empty()) row.note = "spin mismatch";
    report.pass = report.pass && row.pass;
    report.rows.push_back(std::move(row));
  }
  if (strategy != Strategy::Sampling && static_cast<int>(records.size()) != expectedClassCount(t)) {
    ChartRow row;
    row.name = "class count";
    row.note = "found " + std::to_string(records.size()) + " elliptic classes, expected " +
               std::to_string(expectedClassCount(t));
    report.rows.push_back(row);
    report.pass = false;
  }
  return report;
}

nlohmann::ordered_json toJson(const ChartReport& r) {
  nlohmann::ordered_json j;
  j["type"] = r.type;
  j["strategy"] = r.strategy;
  j["pass"] = r.pass;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& row : r.rows) {
    nlohmann::ordered_json x;
    x["gamma"] = row.name;
    x["expected"] = {{"adjoint", row.expectedAdjoint}, {"universal", row.expectedUniversal}};
    x["actual"] = {{"adjoint", row.adjoint}, {"universal", row.universal}};
    x["pass"] = row.pass;
    if (!row.note.empty()) x["note"] = row.note;
    rows.push_back(x);
  }
  j["rows"] = rows;
  return j;
}

}  // namespace ellspin
