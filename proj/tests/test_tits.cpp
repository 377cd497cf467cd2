#include "doctest.h"

#include <random>

#include "ellspin/errors.hpp"
#include "ellspin/tits.hpp"
#include "oracle_util.hpp"

using namespace ellspin;

namespace {

RootSystem sys(const char* t) { return RootSystem::build(RootSystemType::parse(t)); }

// (w, t) -> m_w h(t) as an explicit matrix in SL(n+1), m_w along a reduced word
oracle::Mat slMatrix(const TitsElement& g) {
  const int n = g.w.rank() + 1;
  oracle::Mat out = oracle::identity(n);
  for (int i : g.w.reducedWord().letters) out = oracle::mul(out, oracle::slM(n, i));
  for (int i : g.t.indices()) out = oracle::mul(out, oracle::slH(n, i));
  return out;
}

TitsElement randomTits(const RootSystem& rs, std::mt19937_64& rng) {
  return {randomElement(rs, rng), Gf2Vector(rs.rank(), static_cast<std::uint32_t>(rng()))};
}

}  // namespace

TEST_CASE("group law matches explicit SL(n) matrices") {
  std::mt19937_64 rng(17);
  for (const char* t : {"A1", "A2", "A3", "A5", "A7"}) {
    RootSystem rs = sys(t);
    for (int k = 0; k < 30; ++k) {
      TitsElement a = randomTits(rs, rng), b = randomTits(rs, rng);
      CHECK(slMatrix(multiply(a, b)) == oracle::mul(slMatrix(a), slMatrix(b)));
      CHECK(multiply(a, inverse(a)) == titsIdentity(rs));
    }
    // folding an arbitrary (non-reduced) word is the matrix product of the letters
    std::uniform_int_distribution<int> letter(1, rs.rank());
    for (int k = 0; k < 20; ++k) {
      std::vector<int> word(25);
      for (int& x : word) x = letter(rng);
      TitsElement g = titsIdentity(rs);
      foldWord(g, word);
      oracle::Mat want = oracle::identity(rs.rank() + 1);
      for (int x : word) want = oracle::mul(want, oracle::slM(rs.rank() + 1, x));
      CHECK(slMatrix(g) == want);
    }
  }
}

TEST_CASE("simple lifts square to h_i") {
  for (const char* t : {"A3", "B4", "C3", "D5", "G2", "F4", "E8"}) {
    RootSystem rs = sys(t);
    for (int i = 1; i <= rs.rank(); ++i) {
      TitsElement m = lift(WeylElement::simpleReflection(rs, i));
      TitsElement sq = multiply(m, m);
      CHECK(sq.w.isIdentity());
      CHECK(sq.t == Gf2Vector::unit(rs.rank(), i));
      CHECK(orderOf(m) == 4);
    }
  }
}

TEST_CASE("torus action") {
  RootSystem b3 = sys("B3");
  // s_3 fixes h_3
  CHECK(reflectTorus(b3, 3, Gf2Vector::unit(3, 3)) == Gf2Vector::unit(3, 3));
  std::mt19937_64 rng(2);
  RootSystem e7 = sys("E7");
  for (int k = 0; k < 50; ++k) {
    WeylElement w = randomElement(e7, rng), v = randomElement(e7, rng);
    Gf2Vector t(7, static_cast<std::uint32_t>(rng()));
    CHECK(actOnTorus(w * v, t) == actOnTorus(w, actOnTorus(v, t)));
    // conjugating a torus element by a lift
    TitsElement g = lift(w);
    TitsElement c = multiply(multiply(g, torusElement(e7, t)), inverse(g));
    CHECK(c.w.isIdentity());
    CHECK(c.t == actOnTorus(w, t));
  }
}

TEST_CASE("Coxeter signatures in type A") {
  RootSystem a3 = sys("A3");
  TitsElement g = lift(coxeterElement(a3));
  CHECK(power(g, 4) == torusElement(a3, Gf2Vector::fromIndices(3, {1, 3})));
  for (int r = 1; r <= 9; ++r) {
    RootSystem rs = RootSystem::build({Family::A, r});
    const int n = r + 1;
    std::vector<int> odd;
    if (n % 2 == 0)
      for (int i = 1; i < n; i += 2) odd.push_back(i);
    CHECK(spinSignature(coxeterElement(rs)) == Gf2Vector::fromIndices(r, odd));
    CHECK(spin(coxeterElement(rs), rs.universalLattice()) == (n % 2 == 0 ? -1 : 1));
    CHECK(spin(coxeterElement(rs), rs.adjointLattice()) == 1);
  }
}

TEST_CASE("minus identity signatures in types B and C") {
  for (int n = 2; n <= 9; ++n) {
    RootSystem b = RootSystem::build({Family::B, n});
    Gf2Vector want = (n + 1) / 2 % 2 ? Gf2Vector::unit(n, n) : Gf2Vector::zero(n);
    CHECK(spinSignature(*minusIdentity(b)) == want);

    RootSystem c = RootSystem::build({Family::C, n});
    std::vector<int> odd;
    for (int i = 1; i <= 2 * ((n - 1) / 2) + 1; i += 2) odd.push_back(i);
    CHECK(spinSignature(*minusIdentity(c)) == Gf2Vector::fromIndices(n, odd));
    CHECK(spin(*minusIdentity(c), c.universalLattice()) == -1);
    CHECK(spin(*minusIdentity(c), c.adjointLattice()) == 1);
  }
}

TEST_CASE("spin results") {
  RootSystem g2 = sys("G2");
  SpinResult r = computeSpin(coxeterElement(g2));
  CHECK(r.order == 6);
  CHECK(r.signature.isZero());
  CHECK(r.spinFor("universal") == 1);

  RootSystem e7 = sys("E7");
  SpinResult e = computeSpin(coxeterElement(e7), "E7");
  CHECK(e.order == 18);
  CHECK(e.spins.front().first == "universal");
  CHECK(e.spins.back().first == "adjoint");
  CHECK(e.spinFor("adjoint") == 1);
  for (const auto& L : e7.lattices())
    CHECK(e.spinFor(L.label) == (e7.reducesTrivially(e.signature, L) ? 1 : -1));
  auto j = toJson(e);
  CHECK(j["type"] == "E7");
  CHECK(j["order"] == 18);

  CHECK_THROWS_AS(spinSignature(WeylElement::identity(e7)), DomainError);
  CHECK_THROWS_AS(computeSpin(WeylElement::simpleReflection(e7, 2)), DomainError);
}

TEST_CASE("signature of a lift does not depend on the torus part") {
  std::mt19937_64 rng(23);
  for (const char* t : {"B4", "C4", "D6", "F4", "E6", "E7"}) {
    RootSystem rs = sys(t);
    int seen = 0;
    for (int k = 0; k < 400 && seen < 15; ++k) {
      WeylElement w = randomElement(rs, rng);
      if (!w.isElliptic()) continue;
      ++seen;
      const int d = w.order();
      for (int s = 0; s < 8; ++s) {
        TitsElement g{w, Gf2Vector(rs.rank(), static_cast<std::uint32_t>(rng()))};
        TitsElement gd = power(g, d);
        CHECK(gd.w.isIdentity());
        CHECK(gd.t == spinSignature(w));
      }
    }
    CHECK(seen > 0);
  }
}
