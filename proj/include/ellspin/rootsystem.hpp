#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ellspin/gf2.hpp"

namespace ellspin {

enum class Family { A, B, C, D, E, F, G };

char familyLetter(Family f);

/// Cartan type with rank; node numbering follows the classical Carter conventions
/// (branch node 3, 4, 5 for E6, E7, E8 with the short arm ending at node 4, 5, 6).
struct RootSystemType {
  Family family = Family::A;
  int rank = 1;

  /// Throws ConfigurationError if the rank is out of bounds for the family.
  void validate() const;
  std::string name() const;  // "E7"
  /// Parses "E7", "b5", "A_3". Throws ConfigurationError.
  static RootSystemType parse(std::string_view text);

  friend bool operator==(const RootSystemType&, const RootSystemType&) = default;
};

using IntVector = std::vector<int>;

enum class LengthClass { Long, Short };

struct Root {
  IntVector coords;  // simple-root coordinates
  LengthClass length = LengthClass::Long;
  int height() const;
};

/// Square integer matrix stored row-major.
struct IntMatrix {
  int n = 0;
  std::vector<int> data;

  IntMatrix() = default;
  explicit IntMatrix(int size) : n(size), data(std::size_t(size) * size, 0) {}
  int& operator()(int r, int c) { return data[std::size_t(r) * n + c]; }
  int operator()(int r, int c) const { return data[std::size_t(r) * n + c]; }
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
};

using Rational = boost::rational<long long>;

/// Lattice L with Q^vee <= L <= P^vee. Columns of `basis` are in simple-coroot coordinates.
struct CocharacterLattice {
  enum class Kind { Universal, Adjoint, Intermediate };
  Kind kind = Kind::Universal;
  std::string label;                       // "universal", "adjoint", "intermediate:1", ...
  int index = 0;                           // [L : Q^vee]
  std::vector<std::vector<Rational>> basis;    // basis[row][col]
  std::vector<std::vector<Rational>> inverse;  // basis^{-1}
};

std::string kindName(CocharacterLattice::Kind k);

class RootSystem {
 public:
  /// Reflection closure of the simple roots. Throws ConfigurationError on bad rank.
  static RootSystem build(RootSystemType type);

  const RootSystemType& type() const { return type_; }
  int rank() const { return n_; }
  /// cartan()(j, i) = <alpha_j, alpha_i^vee>.
  const IntMatrix& cartan() const { return cartan_; }
  /// Squared length of alpha_i in the normalization where the shortest root has length 2.
  int simpleLength(int i0) const { return lengths_[i0]; }

  std::span<const Root> roots() const { return roots_; }
  /// Positive roots occupy indices [0, positiveCount()), sorted by height.
  std::size_t positiveCount() const { return positiveCount_; }
  std::span<const Root> positiveRoots() const { return {roots_.data(), positiveCount_}; }
  std::optional<int> indexOf(const IntVector& coords) const;
  bool isRoot(const IntVector& coords) const { return indexOf(coords).has_value(); }
  const Root& root(int index) const { return roots_[index]; }
  /// Index of -alpha for the root at `index`.
  int negativeIndex(int index) const { return negIndex_[index]; }
  /// Simple root alpha_i, i in 1..n.
  IntVector simpleRoot(int i1) const;

  const Root& highestRoot() const { return roots_[highest_]; }
  const Root& highestShortRoot() const { return roots_[highestShort_]; }
  bool simplyLaced() const;

  /// (x, y) for the W-invariant form with short roots of squared length 2 (or 2 for G2 short).
  long long innerProduct(const IntVector& x, const IntVector& y) const;
  /// <x, alpha_i^vee>.
  int pairing(const IntVector& x, int i0) const;
  /// <x, beta^vee> for a root beta.
  int pairingWithCoroot(const IntVector& x, const IntVector& beta) const;
  /// Length class of an arbitrary root; DomainError if not a root.
  LengthClass lengthOf(const IntVector& alpha) const;

  /// Coordinates of alpha^vee in the simple-coroot basis. DomainError if alpha is not a root.
  IntVector coroot(const IntVector& alpha) const;
  /// Simple-coroot coordinates reduced mod 2: the torus element h_alpha(-1).
  Gf2Vector corootMod2(const IntVector& alpha) const;
  /// (p, q): beta - p alpha, ..., beta + q alpha is the alpha-string through beta.
  std::pair<int, int> rootChain(const IntVector& alpha, const IntVector& beta) const;
  /// Reflection s_alpha applied to x.
  IntVector reflect(const IntVector& alpha, const IntVector& x) const;

  /// Basis of { t in GF(2)^n : sum_i A[j][i] t_i = 0 mod 2 for all j }.
  std::vector<Gf2Vector> centerTwoTorsion() const;
  /// All nonzero elements of that space, i.e. the central involutions of the universal group.
  std::vector<Gf2Vector> centralInvolutions() const;
  /// True iff h(t) is central in the universal group.
  bool isCentral(const Gf2Vector& t) const;

  /// Invariant factors > 1 of P^vee / Q^vee (Smith normal form of the Cartan matrix).
  std::vector<int> fundamentalGroup() const;
  /// Every lattice between Q^vee and P^vee, universal first, adjoint last.
  const std::vector<CocharacterLattice>& lattices() const { return lattices_; }
  const CocharacterLattice& universalLattice() const { return lattices_.front(); }
  const CocharacterLattice& adjointLattice() const { return lattices_.back(); }
  /// Selector "universal", "adjoint" or "intermediate:<k>". Throws ConfigurationError.
  const CocharacterLattice& latticeBySelector(std::string_view selector) const;

  /// True iff sum_i t_i alpha_i^vee lies in 2L, i.e. h(t) is trivial in G_L.
  /// Throws InvariantViolation if the coroot lattice is not contained in L.
  bool reducesTrivially(const Gf2Vector& t, const CocharacterLattice& lattice) const;

  /// sum of positive roots, a regular vector in simple-root coordinates.
  const IntVector& twoRho() const { return twoRho_; }

  /// Classical types: simple-root coordinates of the root with the given coordinates in
  /// the usual orthonormal epsilon basis (length n+1 for A_n). DomainError if not a root.
  IntVector fromEpsilon(const IntVector& eps) const;

 private:
  RootSystem() = default;
  void buildLattices();

  RootSystemType type_;
  int n_ = 0;
  IntMatrix cartan_;
  std::vector<int> lengths_;
  std::vector<Root> roots_;
  std::vector<int> negIndex_;
  std::size_t positiveCount_ = 0;
  int highest_ = 0;
  int highestShort_ = 0;
  IntVector twoRho_;
  std::unordered_map<std::uint64_t, int> index_;
  std::vector<CocharacterLattice> lattices_;
};

/// Canonical JSON document (type, cartan, roots) used by the CLI cache.
std::string rootSystemToJson(const RootSystem& rs);

}  // namespace ellspin
