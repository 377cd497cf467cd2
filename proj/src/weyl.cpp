#include "ellspin/weyl.hpp"

#include <algorithm>

#include "ellspin/errors.hpp"

namespace ellspin {

namespace {

bool minusIdentityInW(const RootSystemType& t) {
  switch (t.family) {
    case Family::A: return t.rank == 1;
    case Family::D: return t.rank % 2 == 0;
    case Family::E: return t.rank != 6;
    default: return true;
  }
}

}  // namespace

WeylElement WeylElement::identity(const RootSystem& rs) {
  if (rs.rank() > kMaxRank) throw ConfigurationError("rank exceeds the supported maximum");
  WeylElement w;
  w.rs_ = &rs;
  w.n_ = rs.rank();
  for (int j = 0; j < w.n_; ++j) w.m_[j * w.n_ + j] = 1;
  return w;
}

WeylElement WeylElement::simpleReflection(const RootSystem& rs, int i1) {
  WeylElement w = identity(rs);
  w.rightMultiplySimple(i1);
  return w;
}

WeylElement WeylElement::reflection(const RootSystem& rs, const IntVector& alpha) {
  if (!rs.isRoot(alpha)) throw DomainError("reflection through a vector that is not a root");
  WeylElement w = identity(rs);
  const int n = w.n_;
  for (int j = 0; j < n; ++j) {
    IntVector col = rs.reflect(alpha, rs.simpleRoot(j + 1));
    for (int i = 0; i < n; ++i) w.m_[j * n + i] = static_cast<std::int8_t>(col[i]);
  }
  return w;
}

WeylElement WeylElement::fromWord(const RootSystem& rs, const std::vector<int>& letters) {
  WeylElement w = identity(rs);
  for (int i : letters) w.rightMultiplySimple(i);
  return w;
}

WeylElement WeylElement::fromColumns(const RootSystem& rs, const std::vector<std::vector<int>>& cols) {
  WeylElement w = identity(rs);
  const int n = w.n_;
  if (static_cast<int>(cols.size()) != n) throw InvariantViolation("wrong matrix size");
  for (int j = 0; j < n; ++j) {
    if (static_cast<int>(cols[j].size()) != n || !rs.isRoot(cols[j]))
      throw InvariantViolation("matrix column is not a root");
    for (int i = 0; i < n; ++i) w.m_[j * n + i] = static_cast<std::int8_t>(cols[j][i]);
  }
  // A Weyl element is determined by its descent walk; it must reach the identity.
  WeylElement probe = w;
  for (int steps = 0; !probe.isIdentity(); ++steps) {
    if (steps > static_cast<int>(rs.positiveCount())) throw InvariantViolation("matrix is not in W");
    int i = 1;
    while (i <= n && !probe.isRightDescent(i)) ++i;
    if (i > n) throw InvariantViolation("matrix is not in W");
    probe.rightMultiplySimple(i);
  }
  return w;
}

IntVector WeylElement::column(int col) const {
  IntVector v(n_);
  for (int i = 0; i < n_; ++i) v[i] = m_[col * n_ + i];
  return v;
}

std::vector<std::vector<int>> WeylElement::rows() const {
  std::vector<std::vector<int>> r(n_, std::vector<int>(n_));
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) r[i][j] = entry(i, j);
  return r;
}

IntVector WeylElement::apply(const IntVector& x) const {
  IntVector y(n_, 0);
  for (int j = 0; j < n_; ++j) {
    if (x[j] == 0) continue;
    for (int i = 0; i < n_; ++i) y[i] += x[j] * m_[j * n_ + i];
  }
  return y;
}

IntVector WeylElement::actOnRoot(const IntVector& alpha) const {
  if (!rs_->isRoot(alpha)) throw DomainError("actOnRoot: argument is not a root");
  return apply(alpha);
}

void WeylElement::checkSameSystem(const WeylElement& o) const {
  if (rs_ != o.rs_) throw DomainError("Weyl elements belong to different root systems");
}

WeylElement WeylElement::operator*(const WeylElement& o) const {
  checkSameSystem(o);
  WeylElement r = *this;
  for (int j = 0; j < n_; ++j)
    for (int i = 0; i < n_; ++i) {
      int s = 0;
      for (int k = 0; k < n_; ++k) s += m_[k * n_ + i] * o.m_[j * n_ + k];
      r.m_[j * n_ + i] = static_cast<std::int8_t>(s);
    }
  return r;
}

WeylElement WeylElement::inverse() const {
  ReducedWord word = reducedWord();
  WeylElement r = identity(*rs_);
  for (auto it = word.letters.rbegin(); it != word.letters.rend(); ++it) r.rightMultiplySimple(*it);
  return r;
}

WeylElement WeylElement::power(long long k) const {
  WeylElement base = k >= 0 ? *this : inverse();
  if (k < 0) k = -k;
  WeylElement acc = identity(*rs_);
  while (k > 0) {
    if (k & 1) acc = acc * base;
    base = base * base;
    k >>= 1;
  }
  return acc;
}

void WeylElement::rightMultiplySimple(int i1) {
  if (i1 < 1 || i1 > n_) throw DomainError("simple reflection index out of range");
  const int i = i1 - 1;
  const IntMatrix& a = rs_->cartan();
  // (w s_i)(alpha_j) = w(alpha_j) - <alpha_j, alpha_i^vee> w(alpha_i)
  for (int j = 0; j < n_; ++j) {
    if (j == i) continue;
    int c = a(j, i);
    if (c == 0) continue;
    for (int r = 0; r < n_; ++r) m_[j * n_ + r] = static_cast<std::int8_t>(m_[j * n_ + r] - c * m_[i * n_ + r]);
  }
  for (int r = 0; r < n_; ++r) m_[i * n_ + r] = static_cast<std::int8_t>(-m_[i * n_ + r]);
}

void WeylElement::leftMultiplySimple(int i1) {
  if (i1 < 1 || i1 > n_) throw DomainError("simple reflection index out of range");
  const int i = i1 - 1;
  const IntMatrix& a = rs_->cartan();
  for (int j = 0; j < n_; ++j) {
    int p = 0;
    for (int k = 0; k < n_; ++k) p += m_[j * n_ + k] * a(k, i);
    m_[j * n_ + i] = static_cast<std::int8_t>(m_[j * n_ + i] - p);
  }
}

bool WeylElement::isRightDescent(int i1) const {
  const int i = i1 - 1;
  for (int r = 0; r < n_; ++r) {
    if (m_[i * n_ + r] < 0) return true;
    if (m_[i * n_ + r] > 0) return false;
  }
  return false;
}

bool WeylElement::isIdentity() const {
  for (int j = 0; j < n_; ++j)
    for (int i = 0; i < n_; ++i)
      if (m_[j * n_ + i] != (i == j ? 1 : 0)) return false;
  return true;
}

bool WeylElement::isMinusIdentity() const {
  for (int j = 0; j < n_; ++j)
    for (int i = 0; i < n_; ++i)
      if (m_[j * n_ + i] != (i == j ? -1 : 0)) return false;
  return true;
}

int WeylElement::length() const {
  int count = 0;
  for (const Root& r : rs_->positiveRoots()) {
    IntVector img = apply(r.coords);
    for (int c : img) {
      if (c < 0) {
        ++count;
        break;
      }
      if (c > 0) break;
    }
  }
  return count;
}

ReducedWord WeylElement::reducedWord() const {
  WeylElement w = *this;
  ReducedWord word;
  while (true) {
    int i = 1;
    while (i <= n_ && !w.isRightDescent(i)) ++i;
    if (i > n_) break;
    word.letters.push_back(i);
    w.rightMultiplySimple(i);
  }
  std::reverse(word.letters.begin(), word.letters.end());
  return word;
}

IntPolynomial WeylElement::charPoly() const {
  // Berkowitz: division-free, coefficients highest degree first while building.
  const int n = n_;
  auto A = [&](int r, int c) -> long long { return entry(r, c); };
  std::vector<long long> p{1};
  for (int r = 0; r < n; ++r) {
    std::vector<long long> t(r + 2, 0);
    t[0] = 1;
    t[1] = -A(r, r);
    std::vector<long long> v(r);
    for (int k = 0; k < r; ++k) v[k] = A(k, r);
    for (int k = 0; k < r; ++k) {
      long long s = 0;
      for (int c = 0; c < r; ++c) s += A(r, c) * v[c];
      t[k + 2] = -s;
      std::vector<long long> nv(r, 0);
      for (int a = 0; a < r; ++a)
        for (int b = 0; b < r; ++b) nv[a] += A(a, b) * v[b];
      v = nv;
    }
    std::vector<long long> q(r + 2, 0);
    for (int i = 0; i < r + 2; ++i)
      for (int j = 0; j <= std::min(i, r); ++j) q[i] += t[i - j] * p[j];
    p = q;
  }
  std::reverse(p.begin(), p.end());
  return IntPolynomial(std::vector<std::int64_t>(p.begin(), p.end()));
}

bool WeylElement::isElliptic() const {
  // det(w - I) by fraction-free elimination
  const int n = n_;
  long long a[kMaxRank][kMaxRank];
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) a[r][c] = entry(r, c) - (r == c ? 1 : 0);
  long long prev = 1;
  for (int k = 0; k < n; ++k) {
    int piv = k;
    while (piv < n && a[piv][k] == 0) ++piv;
    if (piv == n) return false;
    if (piv != k)
      for (int c = 0; c < n; ++c) std::swap(a[k][c], a[piv][c]);
    for (int r = k + 1; r < n; ++r) {
      for (int c = k + 1; c < n; ++c) a[r][c] = (a[r][c] * a[k][k] - a[r][k] * a[k][c]) / prev;
      a[r][k] = 0;
    }
    prev = a[k][k];
  }
  return true;
}

long long WeylElement::determinant() const {
  long long c0 = charPoly().coeff(0);
  return n_ % 2 == 0 ? c0 : -c0;
}

int WeylElement::order() const {
  WeylElement p = *this;
  for (int d = 1; d <= 100000; ++d) {
    if (p.isIdentity()) return d;
    p = p * *this;
  }
  throw InvariantViolation("Weyl element order exceeds bound");
}

std::vector<int> WeylElement::ellipticPowers() const {
  auto factors = factorCyclotomic(charPoly());
  if (!factors) throw InvariantViolation("characteristic polynomial is not a product of cyclotomics");
  if (factors->count(1)) throw DomainError("ellipticPowers requires an elliptic element");
  const int d = order();
  std::vector<int> out;
  for (int r = 1; r < d; ++r) {
    bool ok = true;
    for (auto [m, mult] : *factors)
      if (r % m == 0) ok = false;
    if (ok) out.push_back(r);
  }
  return out;
}

bool WeylElement::isLinkedToMinusI() const {
  if (!minusIdentityInW(rs_->type())) throw DomainError("-I is not an element of this Weyl group");
  WeylElement p = *this;
  const int d = order();
  for (int k = 1; k <= d; ++k) {
    if (p.isMinusIdentity()) return true;
    p = p * *this;
  }
  return false;
}

WeylElement coxeterElement(const RootSystem& rs) {
  std::vector<int> word(rs.rank());
  for (int i = 0; i < rs.rank(); ++i) word[i] = i + 1;
  return WeylElement::fromWord(rs, word);
}

WeylElement longestElement(const RootSystem& rs) {
  WeylElement w = WeylElement::identity(rs);
  while (true) {
    int i = 1;
    while (i <= rs.rank() && w.isRightDescent(i)) ++i;
    if (i > rs.rank()) return w;
    w.rightMultiplySimple(i);
  }
}

std::optional<WeylElement> minusIdentity(const RootSystem& rs) {
  WeylElement w0 = longestElement(rs);
  if (w0.isMinusIdentity()) return w0;
  return std::nullopt;
}

int randomWordLength(const RootSystem& rs) { return 4 * static_cast<int>(rs.positiveCount()) + 16; }

WeylElement randomElement(const RootSystem& rs, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> letter(1, rs.rank());
  WeylElement w = WeylElement::identity(rs);
  // length parity is random too
  const int len = randomWordLength(rs) + static_cast<int>(rng() & 1);
  for (int k = 0; k < len; ++k) w.rightMultiplySimple(letter(rng));
  return w;
}

WeylElement randomElement(const RootSystem& rs, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return randomElement(rs, rng);
}

unsigned long long weylGroupOrder(const RootSystemType& t) {
  auto fact = [](int k) {
    unsigned long long f = 1;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
  };
  const int n = t.rank;
  switch (t.family) {
    case Family::A: return fact(n + 1);
    case Family::B:
    case Family::C: return (1ull << n) * fact(n);
    case Family::D: return (1ull << (n - 1)) * fact(n);
    case Family::E: return n == 6 ? 51840ull : n == 7 ? 2903040ull : 696729600ull;
    case Family::F: return 1152;
    case Family::G: return 12;
  }
  return 0;
}

}  // namespace ellspin
