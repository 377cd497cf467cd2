#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "ellspin/tits.hpp"

namespace ellspin {

/// Ordered linearly independent roots; the product of their reflections in node order.
struct CarterDiagram {
  const RootSystem* rs = nullptr;
  std::vector<IntVector> nodes;
  /// bonds[a][b] = <a, b^vee><b, a^vee>
  std::vector<std::vector<int>> bonds;
  std::string name;
  /// Negative cycle lengths for the classical constructions, in construction order.
  std::vector<int> partition;

  int size() const { return static_cast<int>(nodes.size()); }
  const RootSystem& rootSystem() const { return *rs; }
};

/// DomainError if a node is not a root or the nodes are dependent.
CarterDiagram diagramOf(const RootSystem& rs, std::vector<IntVector> roots, std::string name = {});
WeylElement elementOf(const CarterDiagram& d);

/// coroot(node) mod 2 for every node.
std::vector<Gf2Vector> spinLabeling(const CarterDiagram& d);
/// "3" for a singleton label, "(1,3,6)" otherwise.
std::string labelText(const Gf2Vector& label);

struct Component {
  std::vector<int> nodes;  // indices into CarterDiagram::nodes
  int order = 1;
  int content = 0;
  bool relevant = false;
};

struct ComponentDecomposition {
  std::vector<Component> components;
  int order = 1;
  int content = 0;
};

ComponentDecomposition decompose(const CarterDiagram& d);
int contentOf(const CarterDiagram& d);
std::vector<Component> relevantComponents(const CarterDiagram& d);

/// Closed forms for A (Coxeter), B and C partition diagrams, D via B; nullopt if unsupported.
/// DomainError if a B or C diagram has a component of the wrong shape.
std::optional<TorusVector> predictSignature(const CarterDiagram& d);
/// Signature from the spin labeling when every component is a single-bond chain and
/// orthogonal nodes have trivial root chains: each relevant chain with an odd number of
/// nodes contributes the labels at its odd positions. nullopt otherwise.
std::optional<TorusVector> labelingSignature(const CarterDiagram& d);

/// e with g^d = h_n^e for the B_{n_1} x ... x B_{n_r} class.
int typeBExponent(const std::vector<int>& parts);

/// Diagrams built by repeatedly adjoining the negative highest short (B) or long (C) root
/// of a component and deleting a node. Parts are realized in the given order.
CarterDiagram typeBDiagram(const RootSystem& rs, const std::vector<int>& parts);
CarterDiagram typeCDiagram(const RootSystem& rs, const std::vector<int>& parts);
/// Elliptic D_n class with the given negative cycle lengths (even number of parts).
CarterDiagram typeDDiagram(const RootSystem& rs, const std::vector<int>& parts);
/// Extended diagram of an exceptional type minus node k (k = 0 removes the extra node).
CarterDiagram extendedRemoval(const RootSystem& rs, int removed, std::string name = {});

/// Partitions of n in descending lexicographic order, each part list descending.
std::vector<std::vector<int>> partitionsOf(int n);
/// n_i with p = prod (t^{n_i} + 1), descending; nullopt if p has another form.
std::optional<std::vector<int>> partitionFromCharPoly(const IntPolynomial& p);
std::string classicalClassName(const RootSystemType& type, const std::vector<int>& parts);

/// Named representative: "coxeter", "-I", a catalog name ("A3x~A1", "E7(a2)", "B6xB1", ...).
/// nullopt if the name is unknown or has no direct construction.
std::optional<CarterDiagram> namedDiagram(const RootSystem& rs, const std::string& name);

struct CatalogEntry {
  std::string name;
  std::string factors;  // cyclotomic string of the characteristic polynomial
};
/// Elliptic classes of an exceptional type (empty for classical types).
std::vector<CatalogEntry> exceptionalCatalog(const RootSystemType& type);
/// Constructed representatives used to separate classes sharing a characteristic polynomial.
std::vector<CarterDiagram> exceptionalConstructions(const RootSystem& rs);
/// Expected number of elliptic classes.
int expectedClassCount(const RootSystemType& type);

enum class Strategy { Exhaustive, Diagram, Sampling };
std::string strategyName(Strategy s);
Strategy parseStrategy(const std::string& s);
Strategy defaultStrategy(const RootSystemType& type);

struct EnumerationOptions {
  Strategy strategy = Strategy::Diagram;
  std::uint64_t seed = 1;
  std::size_t elementBudget = 10'000'000;
  std::size_t samples = 100'000;
  int threads = 0;  // 0: hardware concurrency
};

struct ClassRecord {
  std::string type;
  int rank = 0;
  std::string name;
  int order = 0;
  IntPolynomial charPoly;
  std::string factors;
  TorusVector signature;
  bool signatureUniform = true;
  std::vector<std::pair<std::string, int>> spins;  // 0 marks mixed spins in a sampled bucket
  std::string provenance;
  std::vector<int> word;
  std::size_t count = 0;  // class size (exhaustive) or samples (sampling)
  std::optional<bool> linkedToMinusI;
  std::optional<TorusVector> predicted;
  std::vector<int> partition;

  int spinFor(const std::string& label) const;
};

/// Throws BudgetExceeded when the element budget is exhausted.
std::vector<ClassRecord> enumerateEllipticClasses(const RootSystem& rs, const EnumerationOptions& opts);
ClassRecord recordFor(const WeylElement& w, const std::string& name, const std::string& provenance);

nlohmann::ordered_json toJson(const ClassRecord& r);
ClassRecord classRecordFromJson(const nlohmann::ordered_json& j);
std::string csvHeader();
std::string csvRow(const ClassRecord& r);

struct ChartRow {
  std::string name;
  int expectedAdjoint = 0;
  int expectedUniversal = 0;
  int adjoint = 0;
  int universal = 0;
  bool pass = false;
  std::string note;
};

struct ChartReport {
  std::string type;
  std::string strategy;
  std::vector<ChartRow> rows;
  bool pass = true;
};

/// Compares each record against the final spin chart.
ChartReport verifyFinalChart(const RootSystem& rs, const std::vector<ClassRecord>& records,
                             Strategy strategy);
nlohmann::ordered_json toJson(const ChartReport& r);

}  // namespace ellspin
