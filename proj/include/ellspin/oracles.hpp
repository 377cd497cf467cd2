#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "ellspin/tits.hpp"

namespace ellspin {

using SparseVec = std::vector<std::pair<int, long long>>;  // sorted by index

/// Square integer matrix stored by sparse columns.
struct SparseMat {
  int dim = 0;
  std::vector<SparseVec> cols;

  static SparseMat identity(int dim);
  SparseVec apply(const SparseVec& v) const;
  friend SparseMat operator*(const SparseMat& a, const SparseMat& b);
  friend bool operator==(const SparseMat&, const SparseMat&) = default;
  bool isIdentity() const;
};

/// N_{alpha,beta} for a Chevalley basis, signs fixed by positive extraspecial pairs.
class StructureConstants {
 public:
  /// Throws InvariantViolation if the Jacobi identity or |N| = p+1 fails.
  explicit StructureConstants(const RootSystem& rs);
  const RootSystem& rootSystem() const { return *rs_; }
  /// 0 when alpha + beta is not a root. Arguments are root indices.
  int N(int alpha, int beta) const;
  /// Extraspecial pair of each non-simple positive root (root index -> (alpha, beta)).
  const std::map<int, std::pair<int, int>>& extraspecialPairs() const { return extraspecial_; }
  std::string convention() const { return "extraspecial-positive/height-order"; }

 private:
  int positiveN(int a, int b) const;
  const RootSystem* rs_;
  std::map<std::pair<int, int>, int> pos_;  // both positive
  std::map<int, std::pair<int, int>> extraspecial_;
};

/// Adjoint representation on the Chevalley basis {e_alpha} (root indices) then {h_i}.
class AdjointOracle {
 public:
  explicit AdjointOracle(const RootSystem& rs);
  const RootSystem& rootSystem() const { return *rs_; }
  const StructureConstants& constants() const { return sc_; }
  int dim() const { return dim_; }

  /// Basis bracket [b_x, b_y].
  SparseVec bracket(int x, int y) const;
  SparseVec bracket(int x, const SparseVec& v) const;
  SparseMat adE(int root) const;
  /// exp(lambda ad e_alpha); exact over the integers.
  SparseMat x(int root, long long lambda) const;
  /// m_alpha(1) = x_alpha(1) x_{-alpha}(-1) x_alpha(1).
  const SparseMat& m(int root) const { return m_[root]; }
  const SparseMat& mInverse(int root) const { return mInv_[root]; }
  /// h_alpha(-1) = m_alpha(1)^2.
  const SparseMat& h(int root) const { return h_[root]; }
  /// Product of simple m_i along a word.
  SparseMat word(const std::vector<int>& letters) const;
  /// Image of a Tits normal form (w, t): m_w * prod h_i^{t_i}.
  SparseMat image(const TitsElement& g) const;

 private:
  const RootSystem* rs_;
  StructureConstants sc_;
  void checkJacobi() const;
  int dim_ = 0;
  std::vector<int> sum_;  // root index of a+b, -2 if a = -b, -1 otherwise
  std::vector<int> Nt_;
  std::vector<int> pairing_;
  std::vector<IntVector> corootOf_;
  std::vector<SparseMat> m_, mInv_, h_;
};

/// c with m_a m_b m_a^{-1} = m_{s_a b}(c); nullopt if c is invisible in the adjoint group.
/// Throws InvariantViolation if neither sign matches.
std::optional<int> extractSign(const AdjointOracle& ad, int alpha, int beta);

struct RelationReport {
  std::string type;
  std::string convention;
  int pairsSampled = 0;
  int cr1Checked = 0;
  int cr1Ambiguous = 0;
  int cr2Checked = 0;
  int hDiagonalChecked = 0;
  int commuteChecked = 0;
  int shortOrthogonalChecked = 0;
  int braid3Checked = 0;
  int braid4Checked = 0;
  int tripleBondsSkipped = 0;
  int chainSignChecked = 0;
  int titsHomomorphismChecked = 0;
  int epsilonSymmetryChecked = 0;
  std::vector<std::string> failures;
  /// c(alpha_i, alpha_j) for simple roots (0 when ambiguous).
  std::vector<std::vector<int>> simpleSigns;
  bool pass() const { return failures.empty(); }
};

/// CR1 sign extraction, CR2, orthogonal commutation, braid lifts (adjoint images, so the
/// order-4 braid identity is checked modulo the center), chain-sign rules, and agreement
/// of the Tits normal form with matrix products.
RelationReport verifyRelations(const AdjointOracle& ad, int samples, std::uint64_t seed);
nlohmann::ordered_json toJson(const RelationReport& r);

/// +1 iff a product of adjoint m-matrices along a reduced word has order d.
/// InvariantViolation if it disagrees with the Tits model or has order neither d nor 2d.
int adjointSpinCheck(const AdjointOracle& ad, const WeylElement& w);

/// Dense square integer matrix.
struct DenseMat {
  int dim = 0;
  std::vector<long long> a;
  static DenseMat identity(int dim);
  static DenseMat zero(int dim);
  long long& operator()(int r, int c) { return a[std::size_t(r) * dim + c]; }
  long long operator()(int r, int c) const { return a[std::size_t(r) * dim + c]; }
  friend DenseMat operator*(const DenseMat& x, const DenseMat& y);
  friend DenseMat operator+(const DenseMat& x, const DenseMat& y);
  friend DenseMat operator-(const DenseMat& x, const DenseMat& y);
  friend bool operator==(const DenseMat&, const DenseMat&) = default;
  DenseMat transpose() const;
  bool isIdentity() const;
};

enum class ClassicalKind { SL, Sp, SpinOdd, SpinEven };
std::string classicalKindName(ClassicalKind k, int dimension);

/// Universal group of type A, C (any supported rank), B (rank <= 4) or D (rank <= 5) as
/// explicit integer matrices. Spin groups act on the 2^n-dimensional spinor module.
class ClassicalRealization {
 public:
  /// ConfigurationError when the type or rank is outside the supported range.
  explicit ClassicalRealization(const RootSystem& rs);
  static bool supported(const RootSystemType& t);

  ClassicalKind kind() const { return kind_; }
  std::string name() const { return classicalKindName(kind_, dim_ == 0 ? 0 : natural_); }
  int dim() const { return dim_; }
  /// Root vector e_alpha for any root (epsilon-basis formulas).
  const DenseMat& e(int rootIndex) const { return e_[rootIndex]; }
  DenseMat x(int rootIndex, long long lambda) const;
  const DenseMat& m(int rootIndex) const { return m_[rootIndex]; }
  DenseMat h(int rootIndex) const { return m_[rootIndex] * m_[rootIndex]; }
  DenseMat word(const std::vector<int>& letters) const;

  /// m_i^2 = h_i is a diagonal sign matrix, braid lifts hold exactly; returns failures.
  std::vector<std::string> checkGenerators() const;

 private:
  const RootSystem* rs_;
  ClassicalKind kind_ = ClassicalKind::SL;
  int dim_ = 0;
  int natural_ = 0;
  std::vector<DenseMat> e_, m_;
};

/// +1 iff the matrix representative has order d; InvariantViolation on any other order.
int classicalSpinCheck(const ClassicalRealization& g, const WeylElement& w);

}  // namespace ellspin
