#include "ellspin/polynomial.hpp"

#include <cctype>
#include <mutex>
#include <sstream>

#include "ellspin/errors.hpp"

namespace ellspin {

IntPolynomial::IntPolynomial(std::vector<std::int64_t> coeffs) : coeffs_(std::move(coeffs)) {
  trim();
}

IntPolynomial IntPolynomial::monomial(int degree, std::int64_t c) {
  std::vector<std::int64_t> v(degree + 1, 0);
  v[degree] = c;
  return IntPolynomial(std::move(v));
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::int64_t IntPolynomial::evaluate(std::int64_t t) const {
  std::int64_t acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<std::int64_t> v(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(int(i)) + b.coeff(int(i));
  return IntPolynomial(std::move(v));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<std::int64_t> v(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(int(i)) - b.coeff(int(i));
  return IntPolynomial(std::move(v));
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.isZero() || b.isZero()) return {};
  std::vector<std::int64_t> v(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return IntPolynomial(std::move(v));
}

std::optional<IntPolynomial> IntPolynomial::divideExactly(const IntPolynomial& d) const {
  if (d.isZero() || d.coeffs_.back() != 1) throw DomainError("divisor must be monic");
  if (isZero()) return IntPolynomial{};
  if (degree() < d.degree()) return std::nullopt;
  std::vector<std::int64_t> rem = coeffs_;
  std::vector<std::int64_t> quot(degree() - d.degree() + 1, 0);
  for (int k = degree() - d.degree(); k >= 0; --k) {
    std::int64_t c = rem[k + d.degree()];
    quot[k] = c;
    for (int j = 0; j <= d.degree(); ++j) rem[k + j] -= c * d.coeffs_[j];
  }
  for (std::int64_t r : rem)
    if (r != 0) return std::nullopt;
  return IntPolynomial(std::move(quot));
}

std::string IntPolynomial::toString() const {
  if (isZero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    std::int64_t c = coeffs_[i];
    if (c == 0) continue;
    std::int64_t mag = c < 0 ? -c : c;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (mag != 1 || i == 0) os << mag;
    if (i >= 1) os << "t";
    if (i >= 2) os << "^" << i;
    first = false;
  }
  return os.str();
}

const IntPolynomial& cyclotomic(int m) {
  static std::recursive_mutex mu;
  static std::map<int, IntPolynomial> cache;
  std::lock_guard<std::recursive_mutex> lock(mu);
  if (auto it = cache.find(m); it != cache.end()) return it->second;
  if (m < 1) throw DomainError("cyclotomic index must be positive");
  // t^m - 1 divided by every Phi_d with d | m, d < m.
  IntPolynomial p = IntPolynomial::monomial(m) - IntPolynomial::constant(1);
  for (int d = 1; d < m; ++d) {
    if (m % d != 0) continue;
    p = *p.divideExactly(cyclotomic(d));
  }
  return cache.emplace(m, p).first->second;
}

namespace {

int eulerPhi(int m) {
  int result = m;
  for (int p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    while (m % p == 0) m /= p;
    result -= result / p;
  }
  if (m > 1) result -= result / m;
  return result;
}

}  // namespace

std::optional<std::map<int, int>> factorCyclotomic(const IntPolynomial& p) {
  std::map<int, int> out;
  IntPolynomial rest = p;
  // Any m with phi(m) <= degree; phi(m) >= sqrt(m/2) bounds the search.
  const int maxM = 2 * (p.degree() + 1) * (p.degree() + 1) + 2;
  for (int m = 1; m <= maxM && rest.degree() > 0; ++m) {
    if (eulerPhi(m) > rest.degree()) continue;
    while (rest.degree() > 0) {
      auto q = rest.divideExactly(cyclotomic(m));
      if (!q) break;
      rest = *q;
      ++out[m];
    }
  }
  if (rest != IntPolynomial::constant(1)) return std::nullopt;
  return out;
}

std::string cyclotomicString(const std::map<int, int>& factors) {
  std::string s;
  for (auto [m, k] : factors) {
    if (!s.empty()) s += "*";
    s += "Phi" + std::to_string(m);
    if (k > 1) s += "^" + std::to_string(k);
  }
  return s.empty() ? "1" : s;
}

namespace {

class FactorParser {
 public:
  explicit FactorParser(std::string_view text) {
    for (char c : text)
      if (!std::isspace(static_cast<unsigned char>(c))) s_.push_back(c);
  }

  IntPolynomial parse() {
    if (s_.empty()) fail("empty polynomial");
    IntPolynomial acc = IntPolynomial::constant(1);
    while (pos_ < s_.size()) {
      if (peek() == '*') ++pos_;
      IntPolynomial factor;
      if (peek() == '(') {
        ++pos_;
        factor = sum();
        expect(')');
      } else {
        factor = term();
      }
      if (peek() == '^') {
        ++pos_;
        int k = number();
        IntPolynomial base = factor;
        factor = IntPolynomial::constant(1);
        for (int i = 0; i < k; ++i) factor = factor * base;
      }
      acc = acc * factor;
    }
    return acc;
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  [[noreturn]] void fail(const std::string& why) const {
    throw ConfigurationError("cannot parse polynomial '" + s_ + "' at offset " +
                             std::to_string(pos_) + ": " + why);
  }
  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  int number() {
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a number");
    int v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) v = v * 10 + (s_[pos_++] - '0');
    return v;
  }
  IntPolynomial sum() {
    IntPolynomial acc;
    bool first = true;
    while (peek() != ')' && peek() != '\0') {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      acc = acc + IntPolynomial::constant(sign) * term();
      first = false;
    }
    if (first) fail("empty factor");
    return acc;
  }
  IntPolynomial term() {
    std::int64_t c = 1;
    bool haveCoeff = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      c = number();
      haveCoeff = true;
    }
    if (peek() != 't') {
      if (!haveCoeff) fail("expected a term");
      return IntPolynomial::constant(c);
    }
    ++pos_;
    int deg = 1;
    if (peek() == '^') {
      ++pos_;
      deg = number();
    }
    return IntPolynomial::monomial(deg, c);
  }

  std::string s_;
  std::size_t pos_ = 0;
};

}  // namespace

IntPolynomial parseFactoredPolynomial(std::string_view text) { return FactorParser(text).parse(); }

}  // namespace ellspin
