#include "ellspin/rootsystem.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "json.hpp"

#include "ellspin/errors.hpp"

namespace ellspin {

char familyLetter(Family f) { return "ABCDEFG"[static_cast<int>(f)]; }

void RootSystemType::validate() const {
  auto bad = [&](const char* why) {
    throw ConfigurationError("invalid root system " + name() + ": " + why);
  };
  switch (family) {
    case Family::A:
      if (rank < 1) bad("A needs rank >= 1");
      break;
    case Family::B:
    case Family::C:
      if (rank < 2) bad("B and C need rank >= 2");
      break;
    case Family::D:
      if (rank < 4) bad("D needs rank >= 4");
      break;
    case Family::E:
      if (rank < 6 || rank > 8) bad("E needs rank 6, 7 or 8");
      break;
    case Family::F:
      if (rank != 4) bad("F needs rank 4");
      break;
    case Family::G:
      if (rank != 2) bad("G needs rank 2");
      break;
  }
  if (rank > 12) bad("rank above 12 is not supported");
}

std::string RootSystemType::name() const { return familyLetter(family) + std::to_string(rank); }

RootSystemType RootSystemType::parse(std::string_view text) {
  std::string s;
  for (char c : text)
    if (c != '_' && !std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.size() < 2) throw ConfigurationError("cannot parse root system type '" + std::string(text) + "'");
  char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
  if (letter < 'A' || letter > 'G')
    throw ConfigurationError("unknown family in '" + std::string(text) + "'");
  int rank = 0;
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      throw ConfigurationError("cannot parse rank in '" + std::string(text) + "'");
    rank = rank * 10 + (s[i] - '0');
    if (rank > 1000) throw ConfigurationError("rank too large in '" + std::string(text) + "'");
  }
  RootSystemType t{static_cast<Family>(letter - 'A'), rank};
  t.validate();
  return t;
}

std::string kindName(CocharacterLattice::Kind k) {
  switch (k) {
    case CocharacterLattice::Kind::Universal: return "universal";
    case CocharacterLattice::Kind::Adjoint: return "adjoint";
    case CocharacterLattice::Kind::Intermediate: return "intermediate";
  }
  return "?";
}

int Root::height() const { return std::accumulate(coords.begin(), coords.end(), 0); }

namespace {

std::uint64_t packKey(const IntVector& v) {
  std::uint64_t k = 0;
  for (int c : v) k = (k << 5) | static_cast<std::uint64_t>((c + 16) & 31);
  return k;
}

struct Bond {
  int a, b;  // 1-based nodes
  int form;  // (alpha_a, alpha_b)
};

// Squared lengths and off-diagonal form entries per family, Bourbaki numbering.
void diagramData(const RootSystemType& t, std::vector<int>& len, std::vector<Bond>& bonds) {
  const int n = t.rank;
  len.assign(n, 2);
  bonds.clear();
  auto chain = [&](int from, int to, int form) {
    for (int i = from; i < to; ++i) bonds.push_back({i, i + 1, form});
  };
  switch (t.family) {
    case Family::A:
      chain(1, n, -1);
      break;
    case Family::B:
      std::fill(len.begin(), len.end() - 1, 4);
      chain(1, n, -2);
      break;
    case Family::C:
      len[n - 1] = 4;
      chain(1, n - 1, -1);
      bonds.push_back({n - 1, n, -2});
      break;
    case Family::D:
      chain(1, n - 1, -1);
      bonds.push_back({n - 2, n, -1});
      break;
    case Family::E:
      if (n == 6) bonds = {{1, 2, -1}, {2, 3, -1}, {3, 5, -1}, {5, 6, -1}, {3, 4, -1}};
      if (n == 7) bonds = {{1, 2, -1}, {2, 3, -1}, {3, 4, -1}, {4, 6, -1}, {6, 7, -1}, {4, 5, -1}};
      if (n == 8)
        bonds = {{1, 2, -1}, {2, 3, -1}, {3, 4, -1}, {4, 5, -1},
                 {5, 7, -1}, {7, 8, -1}, {5, 6, -1}};
      break;
    case Family::F:
      len = {4, 4, 2, 2};
      bonds = {{1, 2, -2}, {2, 3, -2}, {3, 4, -1}};
      break;
    case Family::G:
      len = {6, 2};
      bonds = {{1, 2, -3}};
      break;
  }
}

using RatMatrix = std::vector<std::vector<Rational>>;

RatMatrix invert(RatMatrix m) {
  const std::size_t n = m.size();
  RatMatrix inv(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col].numerator() == 0) ++piv;
    if (piv == n) throw InvariantViolation("singular lattice basis");
    std::swap(m[piv], m[col]);
    std::swap(inv[piv], inv[col]);
    Rational p = m[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      m[col][j] /= p;
      inv[col][j] /= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col].numerator() == 0) continue;
      Rational f = m[r][col];
      for (std::size_t j = 0; j < n; ++j) {
        m[r][j] -= f * m[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

using LMatrix = std::vector<std::vector<long long>>;

// Diagonalizes a square integer matrix by unimodular row/column operations.
// Returns the diagonal; `rowOps` ends as U with U * a * V diagonal, `rowOpsInv` as U^{-1}.
std::vector<long long> smithDiagonal(LMatrix a, LMatrix& rowOps, LMatrix& rowOpsInv) {
  const int n = static_cast<int>(a.size());
  rowOps.assign(n, std::vector<long long>(n, 0));
  rowOpsInv = rowOps;
  for (int i = 0; i < n; ++i) rowOps[i][i] = rowOpsInv[i][i] = 1;

  // Row op: row_r += f * row_s. U <- E U, U^{-1} <- U^{-1} E^{-1} (col_s -= f * col_r).
  auto addRow = [&](int r, int s, long long f) {
    for (int j = 0; j < n; ++j) {
      a[r][j] += f * a[s][j];
      rowOps[r][j] += f * rowOps[s][j];
    }
    for (int i = 0; i < n; ++i) rowOpsInv[i][s] -= f * rowOpsInv[i][r];
  };
  auto swapRows = [&](int r, int s) {
    std::swap(a[r], a[s]);
    std::swap(rowOps[r], rowOps[s]);
    for (int i = 0; i < n; ++i) std::swap(rowOpsInv[i][r], rowOpsInv[i][s]);
  };
  auto addCol = [&](int c, int s, long long f) {
    for (int i = 0; i < n; ++i) a[i][c] += f * a[i][s];
  };
  auto swapCols = [&](int c, int s) {
    for (int i = 0; i < n; ++i) std::swap(a[i][c], a[i][s]);
  };

  for (int t = 0; t < n; ++t) {
    while (true) {
      int br = -1, bc = -1;
      for (int i = t; i < n; ++i)
        for (int j = t; j < n; ++j)
          if (a[i][j] != 0 && (br < 0 || std::llabs(a[i][j]) < std::llabs(a[br][bc]))) {
            br = i;
            bc = j;
          }
      if (br < 0) break;
      swapRows(t, br);
      swapCols(t, bc);
      bool clean = true;
      for (int i = t + 1; i < n; ++i) {
        long long q = a[i][t] / a[t][t];
        if (q != 0) addRow(i, t, -q);
        if (a[i][t] != 0) clean = false;
      }
      for (int j = t + 1; j < n; ++j) {
        long long q = a[t][j] / a[t][t];
        if (q != 0) addCol(j, t, -q);
        if (a[t][j] != 0) clean = false;
      }
      if (clean) break;
    }
  }
  std::vector<long long> diag(n);
  for (int i = 0; i < n; ++i) {
    if (a[i][i] < 0) {
      for (int j = 0; j < n; ++j) {
        a[i][j] = -a[i][j];
        rowOps[i][j] = -rowOps[i][j];
      }
      for (int r = 0; r < n; ++r) rowOpsInv[r][i] = -rowOpsInv[r][i];
    }
    diag[i] = a[i][i];
  }
  return diag;
}

// Row-echelon basis of the integer row span of `gens` (full rank n expected).
LMatrix integerRowBasis(LMatrix gens, int n) {
  LMatrix basis;
  int row = 0;
  for (int col = 0; col < n; ++col) {
    while (true) {
      int best = -1;
      for (int i = row; i < static_cast<int>(gens.size()); ++i)
        if (gens[i][col] != 0 && (best < 0 || std::llabs(gens[i][col]) < std::llabs(gens[best][col])))
          best = i;
      if (best < 0) break;
      std::swap(gens[row], gens[best]);
      bool done = true;
      for (int i = row + 1; i < static_cast<int>(gens.size()); ++i) {
        long long q = gens[i][col] / gens[row][col];
        if (q != 0)
          for (int j = 0; j < n; ++j) gens[i][j] -= q * gens[row][j];
        if (gens[i][col] != 0) done = false;
      }
      if (done) {
        ++row;
        break;
      }
    }
  }
  if (row != n) throw InvariantViolation("lattice generators do not have full rank");
  gens.resize(n);
  return gens;
}

}  // namespace

RootSystem RootSystem::build(RootSystemType type) {
  type.validate();
  RootSystem rs;
  rs.type_ = type;
  const int n = type.rank;
  rs.n_ = n;
  std::vector<Bond> bonds;
  diagramData(type, rs.lengths_, bonds);

  std::vector<std::vector<int>> form(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) form[i][i] = rs.lengths_[i];
  for (const Bond& b : bonds) form[b.a - 1][b.b - 1] = form[b.b - 1][b.a - 1] = b.form;
  rs.cartan_ = IntMatrix(n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) {
      int num = 2 * form[j][i];
      if (num % form[i][i] != 0) throw InvariantViolation("non-integral Cartan entry");
      rs.cartan_(j, i) = num / form[i][i];
    }

  // Reflection closure.
  std::set<IntVector> seen;
  std::deque<IntVector> queue;
  for (int i = 1; i <= n; ++i) {
    IntVector e(n, 0);
    e[i - 1] = 1;
    seen.insert(e);
    queue.push_back(e);
  }
  while (!queue.empty()) {
    IntVector x = queue.front();
    queue.pop_front();
    for (int i = 0; i < n; ++i) {
      int p = rs.pairing(x, i);
      if (p == 0) continue;
      IntVector y = x;
      y[i] -= p;
      if (seen.insert(y).second) queue.push_back(y);
    }
  }

  const int maxLen = *std::max_element(rs.lengths_.begin(), rs.lengths_.end());
  std::vector<IntVector> positives;
  for (const IntVector& x : seen)
    if (std::all_of(x.begin(), x.end(), [](int c) { return c >= 0; })) positives.push_back(x);
  std::sort(positives.begin(), positives.end(), [](const IntVector& a, const IntVector& b) {
    int ha = std::accumulate(a.begin(), a.end(), 0), hb = std::accumulate(b.begin(), b.end(), 0);
    if (ha != hb) return ha < hb;
    return a > b;
  });
  if (positives.size() * 2 != seen.size()) throw InvariantViolation("root set is not symmetric");

  auto makeRoot = [&](const IntVector& c) {
    Root r{c, LengthClass::Long};
    r.length = rs.innerProduct(c, c) == maxLen ? LengthClass::Long : LengthClass::Short;
    return r;
  };
  for (const IntVector& x : positives) rs.roots_.push_back(makeRoot(x));
  for (const IntVector& x : positives) {
    IntVector y = x;
    for (int& c : y) c = -c;
    rs.roots_.push_back(makeRoot(y));
  }
  rs.positiveCount_ = positives.size();
  const int P = static_cast<int>(rs.positiveCount_);
  rs.negIndex_.resize(rs.roots_.size());
  for (int i = 0; i < P; ++i) {
    rs.negIndex_[i] = i + P;
    rs.negIndex_[i + P] = i;
  }
  for (int i = 0; i < static_cast<int>(rs.roots_.size()); ++i)
    rs.index_.emplace(packKey(rs.roots_[i].coords), i);

  rs.highest_ = P - 1;
  rs.highestShort_ = P - 1;
  for (int i = P - 1; i >= 0; --i)
    if (rs.roots_[i].length == LengthClass::Short) {
      rs.highestShort_ = i;
      break;
    }
  rs.twoRho_.assign(n, 0);
  for (int i = 0; i < P; ++i)
    for (int k = 0; k < n; ++k) rs.twoRho_[k] += rs.roots_[i].coords[k];

  rs.buildLattices();
  return rs;
}

std::optional<int> RootSystem::indexOf(const IntVector& coords) const {
  if (static_cast<int>(coords.size()) != n_) return std::nullopt;
  for (int c : coords)
    if (c < -15 || c > 15) return std::nullopt;
  auto it = index_.find(packKey(coords));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

IntVector RootSystem::simpleRoot(int i1) const {
  if (i1 < 1 || i1 > n_) throw DomainError("simple root index out of range");
  IntVector e(n_, 0);
  e[i1 - 1] = 1;
  return e;
}

bool RootSystem::simplyLaced() const {
  return std::all_of(lengths_.begin(), lengths_.end(), [&](int l) { return l == lengths_[0]; });
}

long long RootSystem::innerProduct(const IntVector& x, const IntVector& y) const {
  // (alpha_j, alpha_i) = A[j][i] * len_i / 2
  long long s = 0;
  for (int j = 0; j < n_; ++j) {
    if (x[j] == 0) continue;
    for (int i = 0; i < n_; ++i)
      if (y[i] != 0) s += static_cast<long long>(x[j]) * y[i] * cartan_(j, i) * lengths_[i];
  }
  return s / 2;
}

int RootSystem::pairing(const IntVector& x, int i0) const {
  int s = 0;
  for (int j = 0; j < n_; ++j) s += x[j] * cartan_(j, i0);
  return s;
}

int RootSystem::pairingWithCoroot(const IntVector& x, const IntVector& beta) const {
  long long num = 2 * innerProduct(x, beta);
  long long den = innerProduct(beta, beta);
  if (den == 0 || num % den != 0) throw DomainError("pairing with a non-root");
  return static_cast<int>(num / den);
}

LengthClass RootSystem::lengthOf(const IntVector& alpha) const {
  auto idx = indexOf(alpha);
  if (!idx) throw DomainError("not a root");
  return roots_[*idx].length;
}

IntVector RootSystem::coroot(const IntVector& alpha) const {
  if (!isRoot(alpha)) throw DomainError("coroot requested for a vector that is not a root");
  const long long l = innerProduct(alpha, alpha);
  IntVector c(n_);
  for (int i = 0; i < n_; ++i) {
    long long num = static_cast<long long>(alpha[i]) * lengths_[i];
    if (num % l != 0) throw InvariantViolation("non-integral coroot coordinate");
    c[i] = static_cast<int>(num / l);
  }
  return c;
}

Gf2Vector RootSystem::corootMod2(const IntVector& alpha) const {
  return Gf2Vector::fromIntegers(coroot(alpha));
}

std::pair<int, int> RootSystem::rootChain(const IntVector& alpha, const IntVector& beta) const {
  if (!isRoot(alpha) || !isRoot(beta)) throw DomainError("root chain needs two roots");
  IntVector neg = alpha;
  for (int& c : neg) c = -c;
  if (alpha == beta || neg == beta) throw DomainError("root chain undefined for beta = +-alpha");
  auto walk = [&](int sign) {
    int k = 0;
    IntVector x = beta;
    while (true) {
      for (int i = 0; i < n_; ++i) x[i] += sign * alpha[i];
      if (!isRoot(x)) return k;
      ++k;
    }
  };
  int p = walk(-1);
  int q = walk(+1);
  if (p - q != pairingWithCoroot(beta, alpha)) throw InvariantViolation("root chain identity failed");
  return {p, q};
}

IntVector RootSystem::reflect(const IntVector& alpha, const IntVector& x) const {
  int p = pairingWithCoroot(x, alpha);
  IntVector y = x;
  for (int i = 0; i < n_; ++i) y[i] -= p * alpha[i];
  return y;
}

bool RootSystem::isCentral(const Gf2Vector& t) const {
  for (int j = 0; j < n_; ++j) {
    int s = 0;
    for (int i = 0; i < n_; ++i)
      if (t.get(i + 1)) s += cartan_(j, i);
    if (s % 2 != 0) return false;
  }
  return true;
}

std::vector<Gf2Vector> RootSystem::centerTwoTorsion() const {
  // Null space over GF(2) of the Cartan matrix (rows j, unknowns t_i).
  std::vector<std::uint32_t> rows(n_, 0);
  for (int j = 0; j < n_; ++j)
    for (int i = 0; i < n_; ++i)
      if (cartan_(j, i) % 2 != 0) rows[j] |= 1u << i;
  std::vector<int> pivotCol;
  int r = 0;
  for (int c = 0; c < n_ && r < n_; ++c) {
    int p = r;
    while (p < n_ && !((rows[p] >> c) & 1u)) ++p;
    if (p == n_) continue;
    std::swap(rows[p], rows[r]);
    for (int k = 0; k < n_; ++k)
      if (k != r && ((rows[k] >> c) & 1u)) rows[k] ^= rows[r];
    pivotCol.push_back(c);
    ++r;
  }
  std::vector<Gf2Vector> basis;
  for (int f = 0; f < n_; ++f) {
    if (std::find(pivotCol.begin(), pivotCol.end(), f) != pivotCol.end()) continue;
    std::uint32_t v = 1u << f;
    for (int k = 0; k < static_cast<int>(pivotCol.size()); ++k)
      if ((rows[k] >> f) & 1u) v |= 1u << pivotCol[k];
    basis.emplace_back(n_, v);
  }
  return basis;
}

std::vector<Gf2Vector> RootSystem::centralInvolutions() const {
  auto basis = centerTwoTorsion();
  std::vector<Gf2Vector> all;
  for (std::uint32_t m = 1; m < (1u << basis.size()); ++m) {
    Gf2Vector v = Gf2Vector::zero(n_);
    for (std::size_t k = 0; k < basis.size(); ++k)
      if ((m >> k) & 1u) v += basis[k];
    all.push_back(v);
  }
  std::sort(all.begin(), all.end());
  return all;
}

std::vector<int> RootSystem::fundamentalGroup() const {
  LMatrix a(n_, std::vector<long long>(n_));
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) a[i][j] = cartan_(i, j);
  LMatrix u, uinv;
  auto diag = smithDiagonal(a, u, uinv);
  std::vector<int> out;
  for (long long d : diag)
    if (d > 1) out.push_back(static_cast<int>(d));
  std::sort(out.begin(), out.end());
  return out;
}

void RootSystem::buildLattices() {
  // Coweight coordinates y of a coroot-coordinate vector x: y = A x with A(i,j) = <alpha_i, alpha_j^vee>.
  const int n = n_;
  LMatrix a(n, std::vector<long long>(n));
  RatMatrix aRat(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      a[i][j] = cartan_(i, j);
      aRat[i][j] = cartan_(i, j);
    }
  const RatMatrix aInv = invert(aRat);
  LMatrix u, uinv;
  const std::vector<long long> diag = smithDiagonal(a, u, uinv);

  // Elements of P^vee/Q^vee as residue vectors k (k_i mod diag_i); lifts y = U^{-1} k.
  std::vector<int> mods;
  std::vector<int> modIdx;
  for (int i = 0; i < n; ++i)
    if (diag[i] > 1) {
      mods.push_back(static_cast<int>(diag[i]));
      modIdx.push_back(i);
    }
  std::vector<std::vector<int>> elems{{}};
  for (int m : mods) {
    std::vector<std::vector<int>> next;
    for (auto& e : elems)
      for (int k = 0; k < m; ++k) {
        auto f = e;
        f.push_back(k);
        next.push_back(f);
      }
    elems = next;
  }
  auto add = [&](const std::vector<int>& x, const std::vector<int>& y) {
    std::vector<int> z(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) z[i] = (x[i] + y[i]) % mods[i];
    return z;
  };
  std::set<std::set<std::vector<int>>> subgroups;
  for (auto& g : elems)
    for (auto& h : elems) {
      std::set<std::vector<int>> sub{std::vector<int>(mods.size(), 0)};
      bool grew = true;
      while (grew) {
        grew = false;
        std::vector<std::vector<int>> cur(sub.begin(), sub.end());
        for (auto& x : cur)
          for (auto* gen : {&g, &h})
            if (sub.insert(add(x, *gen)).second) grew = true;
      }
      subgroups.insert(sub);
    }
  std::vector<std::set<std::vector<int>>> ordered(subgroups.begin(), subgroups.end());
  std::stable_sort(ordered.begin(), ordered.end(),
                   [](const auto& x, const auto& y) { return x.size() < y.size(); });

  int intermediateCount = 0;
  for (std::size_t s = 0; s < ordered.size(); ++s) {
    LMatrix gens;
    for (int j = 0; j < n; ++j) {
      std::vector<long long> col(n);
      for (int i = 0; i < n; ++i) col[i] = a[i][j];
      gens.push_back(col);
    }
    for (const auto& k : ordered[s]) {
      std::vector<long long> full(n, 0);
      for (std::size_t t = 0; t < k.size(); ++t) full[modIdx[t]] = k[t];
      std::vector<long long> y(n, 0);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) y[i] += uinv[i][j] * full[j];
      gens.push_back(y);
    }
    LMatrix rows = integerRowBasis(gens, n);
    CocharacterLattice lat;
    lat.index = static_cast<int>(ordered[s].size());
    lat.basis.assign(n, std::vector<Rational>(n, Rational(0)));
    for (int c = 0; c < n; ++c)
      for (int r = 0; r < n; ++r) {
        Rational v = 0;
        for (int k = 0; k < n; ++k) v += aInv[r][k] * Rational(rows[c][k]);
        lat.basis[r][c] = v;
      }
    if (s == 0) {
      lat.kind = CocharacterLattice::Kind::Universal;
      lat.label = "universal";
      lat.basis.assign(n, std::vector<Rational>(n, Rational(0)));
      for (int i = 0; i < n; ++i) lat.basis[i][i] = 1;
    } else if (s + 1 == ordered.size()) {
      lat.kind = CocharacterLattice::Kind::Adjoint;
      lat.label = "adjoint";
      // Fundamental coweights: columns of A^{-1}.
      lat.basis = aInv;
    } else {
      lat.kind = CocharacterLattice::Kind::Intermediate;
      lat.label = "intermediate:" + std::to_string(++intermediateCount);
    }
    lat.inverse = invert(lat.basis);
    lattices_.push_back(std::move(lat));
  }
  if (lattices_.size() == 1) {
    // Trivial fundamental group: universal and adjoint coincide.
    CocharacterLattice adj = lattices_.front();
    adj.kind = CocharacterLattice::Kind::Adjoint;
    adj.label = "adjoint";
    lattices_.push_back(adj);
  }
}

const CocharacterLattice& RootSystem::latticeBySelector(std::string_view selector) const {
  for (const auto& l : lattices_)
    if (l.label == selector) return l;
  throw ConfigurationError("no lattice '" + std::string(selector) + "' for " + type_.name());
}

bool RootSystem::reducesTrivially(const Gf2Vector& t, const CocharacterLattice& lattice) const {
  if (t.size() != n_) throw DomainError("torus vector has wrong length");
  for (int r = 0; r < n_; ++r) {
    Rational y = 0;
    for (int c = 0; c < n_; ++c)
      if (t.get(c + 1)) y += lattice.inverse[r][c];
    if (y.denominator() != 1)
      throw InvariantViolation("coroot lattice not contained in lattice " + lattice.label);
    if (y.numerator() % 2 != 0) return false;
  }
  return true;
}

IntVector RootSystem::fromEpsilon(const IntVector& eps) const {
  const int n = n_;
  IntVector c(n, 0);
  auto prefix = [&](int k) {  // sum of eps_1..eps_k
    int s = 0;
    for (int i = 0; i < k; ++i) s += eps[i];
    return s;
  };
  auto half = [&](int v) {
    if (v % 2 != 0) throw DomainError("epsilon vector is not in the root lattice");
    return v / 2;
  };
  switch (type_.family) {
    case Family::A:
      if (static_cast<int>(eps.size()) != n + 1) throw DomainError("A_n needs n+1 epsilon coordinates");
      for (int k = 1; k <= n; ++k) c[k - 1] = prefix(k);
      if (prefix(n + 1) != 0) throw DomainError("A_n epsilon vector must sum to zero");
      break;
    case Family::B:
      if (static_cast<int>(eps.size()) != n) throw DomainError("wrong epsilon length");
      for (int k = 1; k <= n; ++k) c[k - 1] = prefix(k);
      break;
    case Family::C:
      if (static_cast<int>(eps.size()) != n) throw DomainError("wrong epsilon length");
      for (int k = 1; k < n; ++k) c[k - 1] = prefix(k);
      c[n - 1] = half(prefix(n));
      break;
    case Family::D:
      if (static_cast<int>(eps.size()) != n) throw DomainError("wrong epsilon length");
      for (int k = 1; k <= n - 2; ++k) c[k - 1] = prefix(k);
      c[n - 2] = half(prefix(n - 1) - eps[n - 1]);
      c[n - 1] = half(prefix(n));
      break;
    default:
      throw DomainError("epsilon coordinates are only defined for classical types");
  }
  if (!isRoot(c)) throw DomainError("epsilon vector is not a root");
  return c;
}

std::string rootSystemToJson(const RootSystem& rs) {
  nlohmann::json j;
  j["type"] = rs.type().name();
  j["rank"] = rs.rank();
  nlohmann::json cartan = nlohmann::json::array();
  for (int r = 0; r < rs.rank(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (int c = 0; c < rs.rank(); ++c) row.push_back(rs.cartan()(r, c));
    cartan.push_back(row);
  }
  j["cartan"] = cartan;
  nlohmann::json roots = nlohmann::json::array();
  for (const Root& r : rs.roots()) roots.push_back(r.coords);
  j["roots"] = roots;
  j["positive_count"] = rs.positiveCount();
  j["schema"] = "ellspin.rootsystem/1";
  return j.dump();
}

}  // namespace ellspin
