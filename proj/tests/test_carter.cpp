#include "doctest.h"

#include <map>
#include <set>

#include "ellspin/carter.hpp"
#include "ellspin/errors.hpp"

using namespace ellspin;

namespace {

RootSystem sys(const char* t) { return RootSystem::build(RootSystemType::parse(t)); }

IntVector neg(IntVector v) {
  for (int& c : v) c = -c;
  return v;
}

std::map<std::string, ClassRecord> byName(const std::vector<ClassRecord>& rs) {
  std::map<std::string, ClassRecord> m;
  for (const auto& r : rs) m.emplace(r.name, r);
  return m;
}

// class data that does not depend on the chosen representative
std::multiset<std::string> invariants(const std::vector<ClassRecord>& rs) {
  std::multiset<std::string> s;
  for (const auto& r : rs) {
    std::string k = r.charPoly.toString() + "|" + std::to_string(r.order);
    for (const auto& [l, v] : r.spins) k += "|" + l + ":" + std::to_string(v);
    s.insert(k);
  }
  return s;
}

}  // namespace

TEST_CASE("diagrams from root lists") {
  RootSystem d5 = sys("D5");
  std::vector<IntVector> simples;
  for (int i = 1; i <= 5; ++i) simples.push_back(d5.simpleRoot(i));
  CarterDiagram d = diagramOf(d5, simples);
  CHECK(elementOf(d) == coxeterElement(d5));
  for (int a = 0; a < 5; ++a)
    for (int b = 0; b < 5; ++b)
      if (a != b) CHECK(d.bonds[a][b] == d5.cartan()(a, b) * d5.cartan()(b, a));

  RootSystem b4 = sys("B4");
  std::vector<IntVector> orth;
  for (int i = 0; i < 4; ++i) {
    std::vector<int> e(4, 0);
    e[i] = 1;
    orth.push_back(b4.fromEpsilon(e));
  }
  CarterDiagram a1n = diagramOf(b4, orth);
  CHECK(elementOf(a1n).isMinusIdentity());
  CHECK(decompose(a1n).components.size() == 4);
  CHECK(relevantComponents(a1n).size() == 4);

  CHECK_FALSE(elementOf(diagramOf(b4, {b4.simpleRoot(2)})).isElliptic());
  CHECK_THROWS_AS(diagramOf(b4, {b4.simpleRoot(1), neg(b4.simpleRoot(1))}), DomainError);
  CHECK_THROWS_AS(diagramOf(b4, {IntVector{1, 0, 1, 0}}), DomainError);
}

TEST_CASE("spin labels") {
  RootSystem e8 = sys("E8");
  IntVector top = neg(e8.highestRoot().coords);
  CHECK(labelText(e8.corootMod2(top)) == "(2,4,6)");
  CarterDiagram ext = extendedRemoval(e8, 0);
  for (std::size_t k = 0; k < ext.nodes.size(); ++k) {
    auto lab = spinLabeling(ext)[k];
    if (ext.nodes[k] == top)
      CHECK(labelText(lab) == "(2,4,6)");
  }
  RootSystem f4 = sys("F4");
  CHECK(labelText(f4.corootMod2(neg(f4.highestRoot().coords))) == "(2,4)");

  RootSystem e6 = sys("E6");
  std::vector<IntVector> simples;
  for (int i = 1; i <= 6; ++i) simples.push_back(e6.simpleRoot(i));
  auto labels = spinLabeling(diagramOf(e6, simples));
  for (int i = 1; i <= 6; ++i) CHECK(labelText(labels[i - 1]) == std::to_string(i));
}

TEST_CASE("content and relevance") {
  RootSystem c6 = sys("C6");
  CarterDiagram d = typeCDiagram(c6, {2, 4});
  auto dec = decompose(d);
  CHECK(dec.order == 8);
  CHECK(dec.content == 3);
  CHECK(contentOf(d) == 3);
  auto rel = relevantComponents(d);
  REQUIRE(rel.size() == 1);
  CHECK(rel[0].nodes.size() == 4);
  CHECK(rel[0].order == 8);

  RootSystem e7 = sys("E7");
  auto a3a3a1 = namedDiagram(e7, "A3^2xA1");
  REQUIRE(a3a3a1);
  auto dec7 = decompose(*a3a3a1);
  CHECK(dec7.order == 4);
  for (const auto& c : dec7.components) CHECK(c.relevant == (c.nodes.size() == 3));
}

TEST_CASE("closed form predictions") {
  RootSystem b7 = sys("B7");
  auto b331 = typeBDiagram(b7, {3, 3, 1});
  CHECK(typeBExponent({3, 3, 1}) == 2);
  CHECK(predictSignature(b331) == Gf2Vector::zero(7));
  CHECK(elementOf(b331).charPoly() == parseFactoredPolynomial("(t^3+1)(t^3+1)(t+1)"));
  auto b61 = typeBDiagram(b7, {6, 1});
  CHECK(typeBExponent({6, 1}) == 1);
  CHECK(predictSignature(b61) == Gf2Vector::unit(7, 7));
  CHECK(spinSignature(elementOf(b61)) == Gf2Vector::unit(7, 7));

  RootSystem c6 = sys("C6");
  auto c24 = typeCDiagram(c6, {2, 4});
  CHECK(predictSignature(c24) == Gf2Vector::fromIndices(6, {3, 5}));
  CHECK(spinSignature(elementOf(c24)) == Gf2Vector::fromIndices(6, {3, 5}));
  CHECK(c6.centralInvolutions().front() != Gf2Vector::fromIndices(6, {3, 5}));
  CHECK_FALSE(elementOf(c24).isLinkedToMinusI());

  RootSystem c8 = sys("C8");
  auto c26 = typeCDiagram(c8, {2, 6});
  CHECK(predictSignature(c26) == Gf2Vector::fromIndices(8, {1, 3, 5, 7}));
  CHECK(spinSignature(elementOf(c26)) == Gf2Vector::fromIndices(8, {1, 3, 5, 7}));

  for (int n = 4; n <= 9; ++n) {
    RootSystem d = RootSystem::build({Family::D, n});
    Gf2Vector want = n % 4 == 2 || n % 4 == 3 ? Gf2Vector::fromIndices(n, {n - 1, n}) : Gf2Vector::zero(n);
    CHECK(spinSignature(coxeterElement(d)) == want);
  }
  CHECK_FALSE(predictSignature(extendedRemoval(sys("E7"), 0)));
}

TEST_CASE("B predictions are exact for every partition") {
  for (int n = 2; n <= 9; ++n) {
    RootSystem b = RootSystem::build({Family::B, n});
    for (const auto& parts : partitionsOf(n)) {
      CarterDiagram d = typeBDiagram(b, parts);
      WeylElement w = elementOf(d);
      REQUIRE(w.isElliptic());
      CHECK(partitionFromCharPoly(w.charPoly()) == parts);
      CHECK(predictSignature(d) == spinSignature(w));
    }
  }
}

TEST_CASE("C labelings of one class may disagree, spins do not") {
  RootSystem c3 = sys("C3");
  IntVector top = neg(c3.highestRoot().coords);
  CarterDiagram x = diagramOf(c3, {top, c3.simpleRoot(1), c3.simpleRoot(3)});
  CarterDiagram y = diagramOf(c3, {top, c3.simpleRoot(2), c3.simpleRoot(3)});
  WeylElement wx = elementOf(x), wy = elementOf(y);
  CHECK(wx.charPoly() == wy.charPoly());
  CHECK(spinSignature(wx) == Gf2Vector::unit(3, 1));
  CHECK(spinSignature(wy) == Gf2Vector::unit(3, 2));
  for (const auto& L : c3.lattices()) CHECK(spin(wx, L) == spin(wy, L));
  CHECK(spin(wx, c3.adjointLattice()) == -1);
}

TEST_CASE("exceptional class counts and spins") {
  CHECK(expectedClassCount({Family::E, 8}) == 30);
  CHECK(expectedClassCount({Family::E, 6}) == 5);

  RootSystem g2 = sys("G2");
  auto g = enumerateEllipticClasses(g2, {Strategy::Exhaustive});
  CHECK(g.size() == 3);
  for (const auto& r : g) CHECK(r.spinFor("universal") == 1);

  RootSystem f4 = sys("F4");
  auto f = byName(enumerateEllipticClasses(f4, {Strategy::Exhaustive}));
  CHECK(f.size() == 9);
  for (const auto& [name, r] : f) {
    const int want = name == "A3x~A1" ? -1 : 1;
    CHECK_MESSAGE(r.spinFor("adjoint") == want, name);
    CHECK_MESSAGE(r.spinFor("universal") == want, name);
  }

  RootSystem e6 = sys("E6");
  auto e = enumerateEllipticClasses(e6, {Strategy::Exhaustive});
  CHECK(e.size() == 5);
  for (const auto& r : e) CHECK(r.spinFor("universal") == 1);

  RootSystem e7 = sys("E7");
  auto s = byName(enumerateEllipticClasses(e7, {defaultStrategy(e7.type())}));
  CHECK(s.size() == 12);
  for (const auto& [name, r] : s) {
    const bool one = name == "A3^2xA1" || name == "A7" || name == "E7(a2)";
    CHECK_MESSAGE(r.spinFor("universal") == (one ? 1 : -1), name);
    CHECK_MESSAGE(r.spinFor("adjoint") == 1, name);
  }
}

TEST_CASE("strategies agree on classical types") {
  for (const char* t : {"A4", "B4", "C4", "D4", "D5"}) {
    RootSystem rs = sys(t);
    auto ex = enumerateEllipticClasses(rs, {Strategy::Exhaustive});
    auto di = enumerateEllipticClasses(rs, {Strategy::Diagram});
    CHECK_MESSAGE(invariants(ex) == invariants(di), t);
    CHECK(static_cast<int>(ex.size()) == expectedClassCount(rs.type()));
    std::size_t total = 0;
    for (const auto& r : ex) total += r.count;
    CHECK(total > 0);
  }
}

TEST_CASE("budget and records") {
  RootSystem e7 = sys("E7");
  EnumerationOptions o{Strategy::Exhaustive};
  o.elementBudget = 1000;
  CHECK_THROWS_AS(enumerateEllipticClasses(e7, o), BudgetExceeded);

  RootSystem b3 = sys("B3");
  auto recs = enumerateEllipticClasses(b3, {});
  for (const auto& r : recs) {
    ClassRecord back = classRecordFromJson(toJson(r));
    CHECK(toJson(back).dump() == toJson(r).dump());
    CHECK(csvRow(r).find(r.name) != std::string::npos);
    for (const auto& L : b3.lattices())
      CHECK(r.spinFor(L.label) == (b3.reducesTrivially(r.signature, L) ? 1 : -1));
  }
  auto chart = verifyFinalChart(b3, recs, Strategy::Diagram);
  CHECK(chart.pass);
  CHECK(chart.rows.size() == recs.size());
}
