#include "doctest.h"

#include <random>

#include "ellspin/errors.hpp"
#include "ellspin/polynomial.hpp"
#include "ellspin/weyl.hpp"
#include "oracle_util.hpp"

using namespace ellspin;

namespace {

RootSystem sys(const char* t) { return RootSystem::build(RootSystemType::parse(t)); }

int inversions(const WeylElement& w) {
  int k = 0;
  for (const auto& r : w.rootSystem().positiveRoots()) {
    IntVector img = w.apply(r.coords);
    k += *std::find_if(img.begin(), img.end(), [](int c) { return c != 0; }) < 0;
  }
  return k;
}

// det(tI - w) at integer t
long long charPolyAt(const WeylElement& w, long long t) {
  const int n = w.rank();
  std::vector<std::vector<long long>> m(n, std::vector<long long>(n));
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) m[r][c] = (r == c ? t : 0) - w.entry(r, c);
  return oracle::det(m);
}

}  // namespace

TEST_CASE("group order from the orbit of a regular weight") {
  for (const char* t : {"A1", "A3", "A4", "B2", "B3", "B4", "C3", "D4", "D5", "G2", "F4", "E6"}) {
    RootSystem rs = sys(t);
    CHECK_MESSAGE(weylGroupOrder(rs.type()) == oracle::weylOrderByOrbit(rs.cartan()), t);
  }
  CHECK(weylGroupOrder({Family::E, 7}) == 2903040ULL);
  CHECK(weylGroupOrder({Family::E, 8}) == 696729600ULL);
}

TEST_CASE("reflections") {
  RootSystem b3 = sys("B3");
  for (const auto& r : b3.roots()) {
    WeylElement s = WeylElement::reflection(b3, r.coords);
    IntVector neg = r.coords;
    for (int& c : neg) c = -c;
    CHECK(s.apply(r.coords) == neg);
    CHECK((s * s).isIdentity());
  }
  RootSystem a2 = sys("A2");
  CHECK((WeylElement::simpleReflection(a2, 1) * WeylElement::simpleReflection(a2, 2)).order() == 3);
  CHECK_THROWS_AS(WeylElement::reflection(a2, IntVector{2, 1}), DomainError);
}

TEST_CASE("group operations") {
  std::mt19937_64 rng(11);
  for (const char* t : {"A4", "B3", "C4", "D5", "G2", "F4", "E6"}) {
    RootSystem rs = sys(t);
    for (int k = 0; k < 20; ++k) {
      WeylElement u = randomElement(rs, rng), v = randomElement(rs, rng);
      CHECK((u * u.inverse()).isIdentity());
      CHECK((u * v).inverse() == v.inverse() * u.inverse());
      CHECK(u.length() == inversions(u));
      auto word = u.reducedWord();
      CHECK(static_cast<int>(word.length()) == u.length());
      CHECK(WeylElement::fromWord(rs, word.letters) == u);
      CHECK(std::abs(u.determinant()) == 1);
      CHECK(u.power(u.order()).isIdentity());
    }
  }
  RootSystem b2 = sys("B2");
  CHECK(coxeterElement(b2).order() == 4);
  RootSystem a2 = sys("A2");
  CHECK(WeylElement::identity(a2).reducedWord().letters.empty());
  CHECK(WeylElement::simpleReflection(a2, 2).reducedWord().letters == std::vector<int>{2});
  CHECK(longestElement(a2).reducedWord().length() == 3);
}

TEST_CASE("characteristic polynomials agree with determinants") {
  std::mt19937_64 rng(5);
  for (const char* t : {"A5", "B4", "C5", "D6", "G2", "F4", "E7"}) {
    RootSystem rs = sys(t);
    for (int k = 0; k < 10; ++k) {
      WeylElement w = randomElement(rs, rng);
      IntPolynomial p = w.charPoly();
      CHECK(p.degree() == rs.rank());
      CHECK(std::abs(p.coeff(0)) == 1);
      for (long long x = -3; x <= 3; ++x) CHECK(p.evaluate(x) == charPolyAt(w, x));
      CHECK(w.isElliptic() == (p.evaluate(1) != 0));
    }
  }
  for (int n = 2; n <= 9; ++n) {
    RootSystem b = RootSystem::build({Family::B, n});
    CHECK(coxeterElement(b).charPoly() == IntPolynomial::monomial(n) + IntPolynomial::constant(1));
    IntPolynomial plus1({1, 1}), want = IntPolynomial::constant(1);
    for (int k = 0; k < n; ++k) want = want * plus1;
    CHECK(minusIdentity(b)->charPoly() == want);
  }
  for (int n = 4; n <= 9; ++n) {
    RootSystem d = RootSystem::build({Family::D, n});
    CHECK(coxeterElement(d).charPoly() ==
          (IntPolynomial::monomial(n - 1) + IntPolynomial::constant(1)) * IntPolynomial({1, 1}));
  }
}

TEST_CASE("ellipticity") {
  RootSystem a3 = sys("A3");
  CHECK_FALSE(WeylElement::identity(a3).isElliptic());
  CHECK_FALSE(WeylElement::simpleReflection(a3, 1).isElliptic());
  for (const char* t : {"A1", "A6", "B5", "C3", "D4", "G2", "F4", "E6", "E7", "E8"})
    CHECK_MESSAGE(coxeterElement(sys(t)).isElliptic(), t);
}

TEST_CASE("elliptic powers and linkage") {
  RootSystem g2 = sys("G2");
  CHECK(coxeterElement(g2).ellipticPowers() == std::vector<int>{1, 2, 3, 4, 5});

  RootSystem a4 = sys("A4");  // Coxeter element of prime order 5
  CHECK(coxeterElement(a4).ellipticPowers() == std::vector<int>{1, 2, 3, 4});

  for (int n = 2; n <= 7; ++n) {
    RootSystem b = RootSystem::build({Family::B, n});
    WeylElement c = coxeterElement(b);
    CHECK(c.power(n).isMinusIdentity());
    CHECK(c.isLinkedToMinusI());
  }
  RootSystem e7 = sys("E7");
  WeylElement cox = coxeterElement(e7);
  CHECK(cox.power(9).isMinusIdentity());
  CHECK(cox.isLinkedToMinusI());
  CHECK(minusIdentity(e7)->isLinkedToMinusI());
  CHECK_THROWS_AS(coxeterElement(a4).isLinkedToMinusI(), DomainError);

  // eigenvalues of the E7 Coxeter element: primitive 18th roots of unity and -1
  auto f = factorCyclotomic(cox.charPoly());
  REQUIRE(f);
  CHECK(*f == std::map<int, int>{{2, 1}, {18, 1}});
}

TEST_CASE("minus identity") {
  CHECK_FALSE(minusIdentity(sys("A2")));
  CHECK_FALSE(minusIdentity(sys("D5")));
  CHECK_FALSE(minusIdentity(sys("E6")));
  for (const char* t : {"A1", "B3", "C4", "D4", "G2", "F4", "E7", "E8"}) {
    auto m = minusIdentity(sys(t));
    REQUIRE_MESSAGE(m, t);
    CHECK(m->isMinusIdentity());
  }
}

TEST_CASE("random elements are deterministic per seed") {
  RootSystem e6 = sys("E6");
  CHECK(randomElement(e6, 42) == randomElement(e6, 42));
  int odd = 0;
  std::mt19937_64 rng(3);
  for (int k = 0; k < 200; ++k) odd += randomElement(e6, rng).determinant() == -1;
  CHECK(odd > 50);
  CHECK(odd < 150);
}
