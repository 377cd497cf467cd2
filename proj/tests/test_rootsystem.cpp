#include "doctest.h"

#include "ellspin/errors.hpp"
#include "ellspin/rootsystem.hpp"
#include "oracle_util.hpp"

using namespace ellspin;

namespace {

std::set<IntVector> rootSet(const RootSystem& rs) {
  std::set<IntVector> s;
  for (const auto& r : rs.roots()) s.insert(r.coords);
  return s;
}

const char* kTypes[] = {"A1", "A2", "A5", "A8", "B2", "B3", "B6", "C3", "C5", "D4", "D5", "D7",
                        "G2", "F4", "E6", "E7", "E8"};

}  // namespace

TEST_CASE("root sets agree with an independent reflection closure") {
  for (const char* name : kTypes) {
    RootSystem rs = RootSystem::build(RootSystemType::parse(name));
    auto want = oracle::rootsByClosure(rs.cartan());
    CHECK_MESSAGE(rootSet(rs) == want, name);
  }
}

TEST_CASE("root counts") {
  auto count = [](const char* t) { return RootSystem::build(RootSystemType::parse(t)).roots().size(); };
  CHECK(count("A1") == 2);
  CHECK(count("B3") == 18);
  CHECK(RootSystem::build(RootSystemType::parse("B3")).positiveCount() == 9);
  for (int n = 2; n <= 9; ++n) {
    CHECK(count(("B" + std::to_string(n)).c_str()) == std::size_t(2 * n * n));
    CHECK(count(("C" + std::to_string(n)).c_str()) == std::size_t(2 * n * n));
  }
  CHECK(count("D6") == 60);
  CHECK(count("E6") == 72);
  CHECK(count("E7") == 126);
  CHECK(count("E8") == 240);
  CHECK(count("F4") == 48);

  RootSystem g2 = RootSystem::build({Family::G, 2});
  int longRoots = 0;
  for (const auto& r : g2.roots()) longRoots += r.length == LengthClass::Long;
  CHECK(g2.roots().size() == 12);
  CHECK(longRoots == 6);
}

TEST_CASE("rank bounds are enforced") {
  CHECK_THROWS_AS(RootSystem::build({Family::B, 1}), ConfigurationError);
  CHECK_THROWS_AS(RootSystem::build({Family::D, 3}), ConfigurationError);
  CHECK_THROWS_AS(RootSystem::build({Family::E, 5}), ConfigurationError);
  CHECK_THROWS_AS(RootSystem::build({Family::F, 3}), ConfigurationError);
  CHECK_THROWS_AS(RootSystem::build({Family::G, 3}), ConfigurationError);
  CHECK_THROWS_AS(RootSystemType::parse("Q4"), ConfigurationError);
  CHECK(RootSystemType::parse("e7") == RootSystemType{Family::E, 7});
  CHECK(RootSystemType::parse("A_3") == RootSystemType{Family::A, 3});
}

TEST_CASE("cartan matrix shape and reflections permute roots") {
  for (const char* name : kTypes) {
    RootSystem rs = RootSystem::build(RootSystemType::parse(name));
    const int n = rs.rank();
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i == j)
          CHECK(rs.cartan()(i, j) == 2);
        else
          CHECK(rs.cartan()(i, j) <= 0);
      }
    auto all = rootSet(rs);
    for (std::size_t k = 0; k < rs.roots().size(); k += 7) {
      std::set<IntVector> img;
      for (const auto& r : rs.roots()) img.insert(rs.reflect(rs.root(int(k)).coords, r.coords));
      CHECK(img == all);
    }
    for (const auto& r : rs.roots())
      for (int i = 0; i < n; ++i) CHECK(rs.highestRoot().coords[i] >= r.coords[i]);
  }
}

TEST_CASE("highest roots match the table of negative highest roots") {
  auto hr = [](const char* t) { return RootSystem::build(RootSystemType::parse(t)).highestRoot().coords; };
  CHECK(hr("E6") == IntVector{1, 2, 3, 2, 2, 1});
  CHECK(hr("E7") == IntVector{1, 2, 3, 4, 2, 3, 2});
  CHECK(hr("E8") == IntVector{2, 3, 4, 5, 6, 3, 4, 2});
  CHECK(hr("F4") == IntVector{2, 3, 4, 2});
  CHECK(hr("C4") == IntVector{2, 2, 2, 1});
  CHECK(RootSystem::build({Family::B, 5}).highestShortRoot().coords == IntVector{1, 1, 1, 1, 1});
}

TEST_CASE("coroots") {
  RootSystem e7 = RootSystem::build({Family::E, 7});
  IntVector neg = e7.highestRoot().coords;
  for (int& c : neg) c = -c;
  CHECK(e7.coroot(neg) == IntVector{-1, -2, -3, -4, -2, -3, -2});
  for (int i = 1; i <= 7; ++i) {
    IntVector e(7, 0);
    e[i - 1] = 1;
    CHECK(e7.coroot(e7.simpleRoot(i)) == e);
  }
  for (int n = 2; n <= 9; ++n) {
    RootSystem c = RootSystem::build({Family::C, n});
    IntVector h = c.highestRoot().coords;
    for (int& x : h) x = -x;
    CHECK(c.coroot(h) == IntVector(n, -1));
    CHECK(c.corootMod2(h).weight() == n);
  }
  CHECK_THROWS_AS(e7.coroot(IntVector{1, 1, 1, 1, 1, 1, 5}), DomainError);
}

TEST_CASE("root chains") {
  RootSystem b4 = RootSystem::build({Family::B, 4});
  // short roots e3 and e4 are orthogonal with chain e3-e4, e3, e3+e4
  IntVector e3 = b4.fromEpsilon({0, 0, 1, 0});
  IntVector e4 = b4.fromEpsilon({0, 0, 0, 1});
  CHECK(b4.rootChain(e4, e3) == std::pair{1, 1});
  CHECK(b4.pairingWithCoroot(e3, e4) == 0);

  RootSystem e6 = RootSystem::build({Family::E, 6});
  for (const auto& a : e6.positiveRoots())
    for (const auto& b : e6.positiveRoots())
      if (e6.innerProduct(a.coords, b.coords) == 0) CHECK(e6.rootChain(a.coords, b.coords) == std::pair{0, 0});

  // membership oracle for adjacent simple roots
  for (const char* name : kTypes) {
    RootSystem rs = RootSystem::build(RootSystemType::parse(name));
    for (int i = 1; i <= rs.rank(); ++i)
      for (int j = 1; j <= rs.rank(); ++j) {
        if (i == j || rs.cartan()(i - 1, j - 1) == 0) continue;
        IntVector a = rs.simpleRoot(i), b = rs.simpleRoot(j);
        int q = 0;
        for (IntVector x = b;; ++q) {
          for (int k = 0; k < rs.rank(); ++k) x[k] += a[k];
          if (!rs.isRoot(x)) break;
        }
        CHECK(rs.rootChain(a, b) == std::pair{0, q});
        CHECK(q == -rs.pairingWithCoroot(b, a));
      }
  }
}

TEST_CASE("center 2-torsion agrees with brute force and the table") {
  for (const char* name : kTypes) {
    RootSystem rs = RootSystem::build(RootSystemType::parse(name));
    std::set<std::uint32_t> got;
    for (const auto& v : rs.centralInvolutions()) got.insert(v.bits());
    CHECK_MESSAGE(got == oracle::centerByBruteForce(rs.cartan()), name);
  }
  RootSystem b5 = RootSystem::build({Family::B, 5});
  REQUIRE(b5.centralInvolutions().size() == 1);
  CHECK(b5.centralInvolutions()[0].asTorusProduct() == "h5");
  CHECK(RootSystem::build({Family::E, 6}).centralInvolutions().empty());
  RootSystem e7 = RootSystem::build({Family::E, 7});
  REQUIRE(e7.centralInvolutions().size() == 1);
  CHECK(e7.centralInvolutions()[0].asTorusProduct() == "h1h3h5");
  CHECK(RootSystem::build({Family::D, 6}).centralInvolutions().size() == 3);
}

TEST_CASE("lattices and trivial reduction") {
  RootSystem b5 = RootSystem::build({Family::B, 5});
  CHECK(b5.reducesTrivially(Gf2Vector::zero(5), b5.universalLattice()));
  CHECK(b5.reducesTrivially(Gf2Vector::unit(5, 5), b5.adjointLattice()));
  CHECK_FALSE(b5.reducesTrivially(Gf2Vector::unit(5, 5), b5.universalLattice()));
  CHECK_FALSE(b5.reducesTrivially(Gf2Vector::unit(5, 1), b5.adjointLattice()));

  RootSystem e7 = RootSystem::build({Family::E, 7});
  auto t = Gf2Vector::fromIndices(7, {1, 3, 5});
  CHECK_FALSE(e7.reducesTrivially(t, e7.universalLattice()));
  CHECK(e7.reducesTrivially(t, e7.adjointLattice()));

  // universal, three intermediate, adjoint
  RootSystem d6 = RootSystem::build({Family::D, 6});
  CHECK(d6.lattices().size() == 5);
  CHECK(d6.fundamentalGroup() == std::vector<int>{2, 2});
  CHECK(RootSystem::build({Family::E, 6}).fundamentalGroup() == std::vector<int>{3});
  CHECK(RootSystem::build({Family::A, 5}).fundamentalGroup() == std::vector<int>{6});

  for (const char* name : kTypes) {
    RootSystem rs = RootSystem::build(RootSystemType::parse(name));
    const auto& u = rs.universalLattice();
    CHECK(u.kind == CocharacterLattice::Kind::Universal);
    CHECK(u.index == 1);
    CHECK(rs.adjointLattice().label == "adjoint");
    int order = 1;
    for (int f : rs.fundamentalGroup()) order *= f;
    CHECK(rs.adjointLattice().index == order);
    // every coroot is trivial at -1 in the adjoint group iff it pairs evenly with all roots
    for (int i = 1; i <= rs.rank(); ++i) {
      bool even = true;
      for (const auto& r : rs.roots()) even = even && rs.pairing(r.coords, i - 1) % 2 == 0;
      CHECK(rs.reducesTrivially(Gf2Vector::unit(rs.rank(), i), rs.adjointLattice()) == even);
    }
    CHECK_THROWS_AS(rs.latticeBySelector("intermediate:9"), ConfigurationError);
  }
}

TEST_CASE("canonical json") {
  RootSystem a2 = RootSystem::build({Family::A, 2});
  std::string j = rootSystemToJson(a2);
  CHECK(j == rootSystemToJson(RootSystem::build({Family::A, 2})));
  CHECK(j.find("\"cartan\":[[2,-1],[-1,2]]") != std::string::npos);
}
