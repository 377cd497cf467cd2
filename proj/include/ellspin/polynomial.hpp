#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ellspin {

/// Dense integer polynomial in one variable t; coefficient i multiplies t^i.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<std::int64_t> coeffs);

  static IntPolynomial constant(std::int64_t c) { return IntPolynomial({c}); }
  static IntPolynomial monomial(int degree, std::int64_t c = 1);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool isZero() const { return coeffs_.empty(); }
  std::int64_t coeff(int i) const {
    return i >= 0 && i < static_cast<int>(coeffs_.size()) ? coeffs_[i] : 0;
  }
  const std::vector<std::int64_t>& coeffs() const { return coeffs_; }
  std::int64_t evaluate(std::int64_t t) const;

  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;
  friend bool operator<(const IntPolynomial& a, const IntPolynomial& b) {
    return a.coeffs_ < b.coeffs_;
  }

  /// Exact division by a monic divisor; nullopt when the remainder is nonzero.
  std::optional<IntPolynomial> divideExactly(const IntPolynomial& monicDivisor) const;

  /// Expanded form, highest degree first: "t^3 + 2t - 1".
  std::string toString() const;

 private:
  void trim();
  std::vector<std::int64_t> coeffs_;
};

/// The m-th cyclotomic polynomial.
const IntPolynomial& cyclotomic(int m);

/// Multiplicities of cyclotomic factors; nullopt if p is not a product of cyclotomics.
std::optional<std::map<int, int>> factorCyclotomic(const IntPolynomial& p);

/// Product of cyclotomics, e.g. {2:1, 18:1} -> "Phi2*Phi18".
std::string cyclotomicString(const std::map<int, int>& factors);

/// Parse factored ASCII forms such as "(t^3+1)(t^3+1)(t+1)" or "(t^6+1)*(t+1)^2".
/// Throws ConfigurationError on malformed input (for example "(t^+1)").
IntPolynomial parseFactoredPolynomial(std::string_view text);

}  // namespace ellspin
