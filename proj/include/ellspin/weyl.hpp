#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "ellspin/polynomial.hpp"
#include "ellspin/rootsystem.hpp"

namespace ellspin {

inline constexpr int kMaxRank = 12;

/// Sequence of simple reflection indices (1-based), read left to right as a product.
struct ReducedWord {
  std::vector<int> letters;
  std::size_t length() const { return letters.size(); }
  friend bool operator==(const ReducedWord&, const ReducedWord&) = default;
};

/// Weyl group element as an integer matrix acting on simple-root coordinates.
/// Column j holds the coordinates of w(alpha_j). The ambient RootSystem must outlive it.
class WeylElement {
 public:
  WeylElement() = default;
  static WeylElement identity(const RootSystem& rs);
  static WeylElement simpleReflection(const RootSystem& rs, int i1);
  /// s_alpha for a root alpha; DomainError otherwise.
  static WeylElement reflection(const RootSystem& rs, const IntVector& alpha);
  /// Product s_{i_1} ... s_{i_k}.
  static WeylElement fromWord(const RootSystem& rs, const std::vector<int>& letters);
  /// Column-major matrix entries; InvariantViolation unless they define a Weyl group element.
  static WeylElement fromColumns(const RootSystem& rs, const std::vector<std::vector<int>>& columns);

  const RootSystem& rootSystem() const { return *rs_; }
  int rank() const { return n_; }
  /// Coefficient of alpha_row in w(alpha_col).
  int entry(int row, int col) const { return m_[col * n_ + row]; }
  IntVector column(int col) const;
  std::vector<std::vector<int>> rows() const;

  IntVector apply(const IntVector& x) const;
  /// Image of a root; DomainError for non-roots.
  IntVector actOnRoot(const IntVector& alpha) const;

  WeylElement operator*(const WeylElement& o) const;
  WeylElement inverse() const;
  WeylElement power(long long k) const;
  friend bool operator==(const WeylElement& a, const WeylElement& b) {
    return a.n_ == b.n_ && a.m_ == b.m_;
  }

  /// w <- w * s_i
  void rightMultiplySimple(int i1);
  /// w <- s_i * w
  void leftMultiplySimple(int i1);
  /// l(w s_i) < l(w), i.e. w(alpha_i) is negative.
  bool isRightDescent(int i1) const;
  bool isIdentity() const;
  bool isMinusIdentity() const;

  /// Number of positive roots sent to negative roots.
  int length() const;
  ReducedWord reducedWord() const;
  /// det(t I - w), coefficients low to high.
  IntPolynomial charPoly() const;
  bool isElliptic() const;
  long long determinant() const;
  int order() const;
  /// Residues r in [1, order) with w^r elliptic. DomainError if w is not elliptic.
  std::vector<int> ellipticPowers() const;
  /// Some power equals -I. DomainError if -I is not in W.
  bool isLinkedToMinusI() const;

  /// w(2 rho): determines w uniquely since 2 rho is regular.
  IntVector orbitKey() const { return apply(rs_->twoRho()); }

 private:
  const RootSystem* rs_ = nullptr;
  int n_ = 0;
  std::array<std::int8_t, kMaxRank * kMaxRank> m_{};
  void checkSameSystem(const WeylElement& o) const;
};

WeylElement coxeterElement(const RootSystem& rs);
/// The longest element when it acts as -1, else nullopt.
std::optional<WeylElement> minusIdentity(const RootSystem& rs);
/// Product of a uniformly random word of length randomWordLength(rs) or one more.
WeylElement randomElement(const RootSystem& rs, std::mt19937_64& rng);
WeylElement randomElement(const RootSystem& rs, std::uint64_t seed);
/// 4 |Phi+| + 16 letters.
int randomWordLength(const RootSystem& rs);
/// Longest element w_0.
WeylElement longestElement(const RootSystem& rs);
/// Product of the exponents = number of elliptic elements; order of W.
unsigned long long weylGroupOrder(const RootSystemType& type);

}  // namespace ellspin
