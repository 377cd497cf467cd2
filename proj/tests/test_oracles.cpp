#include "doctest.h"

#include <random>

#include "ellspin/carter.hpp"
#include "ellspin/errors.hpp"
#include "ellspin/oracles.hpp"
#include "oracle_util.hpp"

using namespace ellspin;

namespace {

RootSystem sys(const char* t) { return RootSystem::build(RootSystemType::parse(t)); }

IntVector add(IntVector a, const IntVector& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

// largest p with beta - p alpha a root, by walking down
int downChain(const RootSystem& rs, const IntVector& a, const IntVector& b) {
  int p = 0;
  IntVector x = b;
  for (;;) {
    for (std::size_t i = 0; i < x.size(); ++i) x[i] -= a[i];
    if (!rs.isRoot(x)) return p;
    ++p;
  }
}

DenseMat power(DenseMat g, int k) {
  DenseMat out = DenseMat::identity(g.dim);
  while (k-- > 0) out = out * g;
  return out;
}

DenseMat minusOne(int dim) {
  DenseMat m = DenseMat::zero(dim);
  for (int i = 0; i < dim; ++i) m(i, i) = -1;
  return m;
}

}  // namespace

TEST_CASE("structure constants") {
  for (const char* t : {"A2", "A4", "B3", "C3", "D4", "G2", "F4", "E6"}) {
    RootSystem rs = sys(t);
    StructureConstants sc(rs);
    const int R = static_cast<int>(rs.roots().size());
    for (int a = 0; a < R; ++a)
      for (int b = 0; b < R; ++b) {
        const auto& ra = rs.root(a).coords;
        const auto& rb = rs.root(b).coords;
        const int n = sc.N(a, b);
        CHECK(n == -sc.N(b, a));
        if (a != rs.negativeIndex(b) && rs.isRoot(add(ra, rb)))
          CHECK(std::abs(n) == downChain(rs, ra, rb) + 1);
        else
          CHECK(n == 0);
      }
    if (rs.type().family == Family::A || rs.type().family == Family::D || rs.type().family == Family::E)
      for (int a = 0; a < R; ++a)
        for (int b = 0; b < R; ++b) CHECK(std::abs(sc.N(a, b)) <= 1);
    // extraspecial pairs carry N = +(p+1)
    for (const auto& [xi, ab] : sc.extraspecialPairs()) {
      CHECK(sc.N(ab.first, ab.second) > 0);
      CHECK(add(rs.root(ab.first).coords, rs.root(ab.second).coords) == rs.root(xi).coords);
    }
  }
  RootSystem g2 = sys("G2");
  StructureConstants sc(g2);
  std::set<int> seen;
  for (int a = 0; a < 12; ++a)
    for (int b = 0; b < 12; ++b) seen.insert(std::abs(sc.N(a, b)));
  CHECK(seen == std::set<int>{0, 1, 2, 3});
}

TEST_CASE("adjoint generators") {
  for (const char* t : {"A3", "B3", "C3", "G2", "F4"}) {
    RootSystem rs = sys(t);
    AdjointOracle ad(rs);
    CHECK(ad.dim() == static_cast<int>(rs.roots().size()) + rs.rank());
    const int R = static_cast<int>(rs.roots().size());
    for (int a = 0; a < R; ++a) {
      CHECK(ad.m(a) * ad.mInverse(a) == SparseMat::identity(ad.dim()));
      CHECK(ad.m(a) * ad.m(a) == ad.h(a));
      CHECK(ad.x(a, 1) * ad.x(a, 1) == ad.x(a, 2));
      CHECK((ad.x(a, 3) * ad.x(a, -3)).isIdentity());
      // h_alpha(-1) scales e_beta by (-1)^<beta, alpha^vee>
      const SparseMat& h = ad.h(a);
      IntVector cor = rs.coroot(rs.root(a).coords);
      for (int b = 0; b < R; ++b) {
        int p = 0;
        for (int i = 0; i < rs.rank(); ++i) p += cor[i] * oracle::pair(rs.cartan(), rs.root(b).coords, i);
        CHECK(h.cols[b] == SparseVec{{b, p % 2 == 0 ? 1 : -1}});
      }
      for (int i = 0; i < rs.rank(); ++i) CHECK(h.cols[R + i] == SparseVec{{R + i, 1}});
    }
  }
}

TEST_CASE("tits model and adjoint matrices agree") {
  std::mt19937_64 rng(9);
  for (const char* t : {"B3", "D4", "G2", "F4"}) {
    RootSystem rs = sys(t);
    AdjointOracle ad(rs);
    for (int k = 0; k < 10; ++k) {
      TitsElement a{randomElement(rs, rng), Gf2Vector(rs.rank(), static_cast<std::uint32_t>(rng()))};
      TitsElement b{randomElement(rs, rng), Gf2Vector(rs.rank(), static_cast<std::uint32_t>(rng()))};
      CHECK(ad.image(multiply(a, b)) == ad.image(a) * ad.image(b));
    }
    auto rep = verifyRelations(ad, 100, 3);
    CHECK_MESSAGE(rep.pass(), t);
    CHECK(rep.cr2Checked > 0);
  }
}

TEST_CASE("adjoint spins") {
  RootSystem f4 = sys("F4");
  AdjointOracle adf(f4);
  auto d = namedDiagram(f4, "A3x~A1");
  REQUIRE(d);
  CHECK(adjointSpinCheck(adf, elementOf(*d)) == -1);
  CHECK(adjointSpinCheck(adf, coxeterElement(f4)) == 1);

  RootSystem a4 = sys("A4");
  CHECK(adjointSpinCheck(AdjointOracle(a4), coxeterElement(a4)) == 1);

  for (int n = 2; n <= 5; ++n) {
    RootSystem b = RootSystem::build({Family::B, n});
    CHECK(adjointSpinCheck(AdjointOracle(b), *minusIdentity(b)) == 1);
  }
  RootSystem c3 = sys("C3");
  AdjointOracle adc(c3);
  CHECK(adjointSpinCheck(adc, *minusIdentity(c3)) == 1);
  CHECK_THROWS_AS(adjointSpinCheck(adc, WeylElement::identity(c3)), DomainError);
}

TEST_CASE("classical groups") {
  RootSystem a3 = sys("A3");
  ClassicalRealization sl4(a3);
  CHECK(sl4.kind() == ClassicalKind::SL);
  CHECK(sl4.dim() == 4);
  CHECK(sl4.checkGenerators().empty());
  DenseMat c = sl4.word({1, 2, 3});
  CHECK(power(c, 4) == minusOne(4));
  CHECK(classicalSpinCheck(sl4, coxeterElement(a3)) == -1);
  // every simple root vector is a signed matrix unit
  for (int i = 1; i <= 3; ++i) {
    int nz = 0;
    for (long long v : sl4.e(*a3.indexOf(a3.simpleRoot(i))).a) nz += v != 0 ? (std::abs(v) == 1 ? 1 : 100) : 0;
    CHECK(nz == 1);
  }

  RootSystem c3 = sys("C3");
  ClassicalRealization sp6(c3);
  CHECK(sp6.kind() == ClassicalKind::Sp);
  CHECK(sp6.checkGenerators().empty());
  CHECK(classicalSpinCheck(sp6, *minusIdentity(c3)) == -1);

  RootSystem b3 = sys("B3");
  ClassicalRealization spin7(b3);
  CHECK(spin7.kind() == ClassicalKind::SpinOdd);
  CHECK(spin7.dim() == 8);
  CHECK(spin7.checkGenerators().empty());
  CHECK(classicalSpinCheck(spin7, coxeterElement(b3)) == 1);
  CHECK(classicalSpinCheck(spin7, *minusIdentity(b3)) == 1);
  RootSystem b2 = sys("B2");
  CHECK(classicalSpinCheck(ClassicalRealization(b2), *minusIdentity(b2)) == -1);

  RootSystem d4 = sys("D4");
  ClassicalRealization spin8(d4);
  CHECK(spin8.checkGenerators().empty());
  CHECK(classicalSpinCheck(spin8, *minusIdentity(d4)) == 1);

  CHECK_FALSE(ClassicalRealization::supported({Family::B, 7}));
  CHECK_THROWS_AS(ClassicalRealization(sys("B7")), ConfigurationError);
  CHECK_THROWS_AS(ClassicalRealization(sys("E6")), ConfigurationError);
}

TEST_CASE("classical orders match the tits model") {
  for (const char* t : {"A5", "B4", "C4", "D5"}) {
    RootSystem rs = sys(t);
    ClassicalRealization g(rs);
    for (const auto& r : enumerateEllipticClasses(rs, {Strategy::Diagram})) {
      WeylElement w = WeylElement::fromWord(rs, r.word);
      CHECK_MESSAGE(classicalSpinCheck(g, w) == r.spinFor("universal"), t, " ", r.name);
    }
  }
}
