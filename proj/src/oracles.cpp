#include "ellspin/oracles.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "ellspin/errors.hpp"

namespace ellspin {

namespace {

void normalize(SparseVec& v) {
  std::sort(v.begin(), v.end());
  SparseVec out;
  for (const auto& [i, c] : v) {
    if (!out.empty() && out.back().first == i)
      out.back().second += c;
    else
      out.emplace_back(i, c);
  }
  std::erase_if(out, [](const auto& p) { return p.second == 0; });
  v = std::move(out);
}

void addScaled(SparseVec& acc, const SparseVec& v, long long c) {
  for (const auto& [i, x] : v) acc.emplace_back(i, x * c);
}

std::string rootText(const RootSystem& rs, int idx) {
  std::ostringstream o;
  o << "(";
  const auto& v = rs.root(idx).coords;
  for (std::size_t i = 0; i < v.size(); ++i) o << (i ? "," : "") << v[i];
  o << ")";
  return o.str();
}

IntVector add(const IntVector& a, const IntVector& b, int sb = 1) {
  IntVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + sb * b[i];
  return r;
}

int simpleIndex(const RootSystem& rs, int i1) { return *rs.indexOf(rs.simpleRoot(i1)); }

}  // namespace

// ---- SparseMat

SparseMat SparseMat::identity(int dim) {
  SparseMat m;
  m.dim = dim;
  m.cols.resize(dim);
  for (int j = 0; j < dim; ++j) m.cols[j] = {{j, 1}};
  return m;
}

SparseVec SparseMat::apply(const SparseVec& v) const {
  SparseVec acc;
  for (const auto& [k, c] : v) addScaled(acc, cols[k], c);
  normalize(acc);
  return acc;
}

SparseMat operator*(const SparseMat& a, const SparseMat& b) {
  SparseMat c;
  c.dim = a.dim;
  c.cols.resize(a.dim);
  for (int j = 0; j < a.dim; ++j) c.cols[j] = a.apply(b.cols[j]);
  return c;
}

bool SparseMat::isIdentity() const {
  for (int j = 0; j < dim; ++j)
    if (cols[j].size() != 1 || cols[j][0].first != j || cols[j][0].second != 1) return false;
  return true;
}

// ---- structure constants

StructureConstants::StructureConstants(const RootSystem& rs) : rs_(&rs) {
  const int P = static_cast<int>(rs.positiveCount());
  const int n = rs.rank();
  auto len = [&](const IntVector& v) { return rs.innerProduct(v, v); };

  for (int xi = 0; xi < P; ++xi) {
    const IntVector& cx = rs.root(xi).coords;
    if (rs.root(xi).height() == 1) continue;
    // special pairs (g, d), g < d in index order, g + d = xi
    std::vector<std::pair<int, int>> special;
    for (int g = 0; g < P; ++g) {
      auto d = rs.indexOf(add(cx, rs.root(g).coords, -1));
      if (d && *d < P && g < *d) special.emplace_back(g, *d);
    }
    int a = -1;
    for (int i = 1; i <= n && a < 0; ++i) {
      auto b = rs.indexOf(add(cx, rs.simpleRoot(i), -1));
      if (b && *b < P) a = simpleIndex(rs, i);
    }
    if (a < 0) throw InvariantViolation("no extraspecial pair");
    const int b = *rs.indexOf(add(cx, rs.root(a).coords, -1));
    const int p = rs.rootChain(rs.root(a).coords, rs.root(b).coords).first;
    extraspecial_[xi] = {a, b};
    pos_[{a, b}] = p + 1;
    pos_[{b, a}] = -(p + 1);
    const long long lxi = len(cx);
    for (const auto& [g, d] : special) {
      if ((g == a && d == b) || (g == b && d == a)) continue;
      const IntVector& ca = rs.root(a).coords;
      const IntVector& cb = rs.root(b).coords;
      const IntVector& cg = rs.root(g).coords;
      const int ng = rs.negativeIndex(g), nd = rs.negativeIndex(d);
      // numerator over the common denominator of the two terms
      Rational sum = 0;
      IntVector bg = add(cb, cg, -1);
      if (rs.isRoot(bg))
        sum += Rational(static_cast<long long>(N(b, ng)) * N(a, nd), len(bg));
      IntVector ag = add(ca, cg, -1);
      if (rs.isRoot(ag))
        sum += Rational(static_cast<long long>(N(ng, a)) * N(b, nd), len(ag));
      Rational v = sum * Rational(lxi, pos_.at({a, b}));
      if (v.denominator() != 1) throw InvariantViolation("non-integral structure constant");
      pos_[{g, d}] = static_cast<int>(v.numerator());
      pos_[{d, g}] = -static_cast<int>(v.numerator());
    }
  }

  // |N| = p + 1 for every pair
  const int R = static_cast<int>(rs.roots().size());
  for (int x = 0; x < R; ++x)
    for (int y = 0; y < R; ++y) {
      if (!rs.isRoot(add(rs.root(x).coords, rs.root(y).coords))) continue;
      const int p = rs.rootChain(rs.root(x).coords, rs.root(y).coords).first;
      if (std::abs(N(x, y)) != p + 1)
        throw InvariantViolation("structure constant " + rootText(rs, x) + "," + rootText(rs, y) +
                                 " has wrong magnitude");
    }
}

int StructureConstants::positiveN(int a, int b) const {
  auto it = pos_.find({a, b});
  return it == pos_.end() ? 0 : it->second;
}

int StructureConstants::N(int a, int b) const {
  const RootSystem& rs = *rs_;
  const int P = static_cast<int>(rs.positiveCount());
  auto s = rs.indexOf(add(rs.root(a).coords, rs.root(b).coords));
  if (!s) return 0;
  const bool pa = a < P, pb = b < P;
  if (pa && pb) return positiveN(a, b);
  if (!pa && !pb) return -positiveN(rs.negativeIndex(a), rs.negativeIndex(b));
  // a + b + c = 0: N_ab/(c,c) = N_bc/(a,a) = N_ca/(b,b)
  const int c = rs.negativeIndex(*s);
  auto len = [&](int r) { return rs.innerProduct(rs.root(r).coords, rs.root(r).coords); };
  const bool pc = c < P;
  long long num;
  long long den;
  if (pb == pc) {
    num = len(c) * N(b, c);
    den = len(a);
  } else {
    num = len(c) * N(c, a);
    den = len(b);
  }
  if (num % den != 0) throw InvariantViolation("non-integral structure constant");
  return static_cast<int>(num / den);
}

// ---- adjoint representation

AdjointOracle::AdjointOracle(const RootSystem& rs) : rs_(&rs), sc_(rs) {
  const int R = static_cast<int>(rs.roots().size());
  const int n = rs.rank();
  dim_ = R + n;
  sum_.assign(std::size_t(R) * R, -1);
  for (int a = 0; a < R; ++a)
    for (int b = 0; b < R; ++b) {
      if (b == rs.negativeIndex(a)) {
        sum_[std::size_t(a) * R + b] = -2;
        continue;
      }
      auto s = rs.indexOf(add(rs.root(a).coords, rs.root(b).coords));
      if (s) sum_[std::size_t(a) * R + b] = *s;
    }
  Nt_.assign(std::size_t(R) * R, 0);
  for (int a = 0; a < R; ++a)
    for (int b = 0; b < R; ++b)
      if (sum_[std::size_t(a) * R + b] >= 0) Nt_[std::size_t(a) * R + b] = sc_.N(a, b);
  pairing_.assign(std::size_t(R) * n, 0);
  corootOf_.resize(R);
  for (int a = 0; a < R; ++a) {
    for (int i = 0; i < n; ++i) pairing_[std::size_t(a) * n + i] = rs.pairing(rs.root(a).coords, i);
    corootOf_[a] = rs.coroot(rs.root(a).coords);
  }

  checkJacobi();

  m_.resize(R);
  mInv_.resize(R);
  h_.resize(R);
  for (int a = 0; a < R; ++a) {
    m_[a] = x(a, 1) * x(rs.negativeIndex(a), -1) * x(a, 1);
    h_[a] = m_[a] * m_[a];
    mInv_[a] = h_[a] * m_[a];
    if (!(mInv_[a] * m_[a]).isIdentity())
      throw InvariantViolation("m_alpha(1) does not have order dividing 4");
    // m_alpha permutes root spaces like s_alpha
    for (int b = 0; b < R; ++b) {
      const SparseVec& col = m_[a].cols[b];
      auto target = rs.indexOf(rs.reflect(rs.root(a).coords, rs.root(b).coords));
      if (col.size() != 1 || col[0].first != *target || std::abs(col[0].second) != 1)
        throw InvariantViolation("m_alpha(1) is not monomial on root vectors");
    }
    // and s_alpha on the Cartan block
    for (int i = 0; i < n; ++i) {
      SparseVec want{{R + i, 1}};
      const int c = pairing_[std::size_t(a) * n + i];
      for (int k = 0; k < n; ++k) want.emplace_back(R + k, -static_cast<long long>(c) * corootOf_[a][k]);
      normalize(want);
      if (m_[a].cols[R + i] != want) throw InvariantViolation("m_alpha(1) is not s_alpha on the Cartan block");
    }
  }
}

SparseVec AdjointOracle::bracket(int x, int y) const {
  const RootSystem& rs = *rs_;
  const int R = static_cast<int>(rs.roots().size());
  const int n = rs.rank();
  if (x >= R && y >= R) return {};
  if (x >= R) {
    return {{y, static_cast<long long>(pairing_[std::size_t(y) * n + (x - R)])}};
  }
  if (y >= R) {
    return {{x, -static_cast<long long>(pairing_[std::size_t(x) * n + (y - R)])}};
  }
  const int s = sum_[std::size_t(x) * R + y];
  if (s == -2) {
    SparseVec v;
    for (int i = 0; i < n; ++i)
      if (corootOf_[x][i] != 0) v.emplace_back(R + i, corootOf_[x][i]);
    return v;
  }
  if (s < 0) return {};
  return {{s, static_cast<long long>(Nt_[std::size_t(x) * R + y])}};
}

SparseVec AdjointOracle::bracket(int x, const SparseVec& v) const {
  SparseVec acc;
  for (const auto& [k, c] : v) addScaled(acc, bracket(x, k), c);
  normalize(acc);
  return acc;
}

void AdjointOracle::checkJacobi() const {
  const int R = static_cast<int>(rs_->roots().size());
  auto weightLive = [&](int x, int y) { return x >= R || y >= R || sum_[std::size_t(x) * R + y] != -1; };
  for (int x = 0; x < dim_; ++x)
    for (int y = x + 1; y < dim_; ++y)
      for (int z = y + 1; z < dim_; ++z) {
        if (!weightLive(x, y) && !weightLive(y, z) && !weightLive(x, z)) continue;
        SparseVec acc;
        addScaled(acc, bracket(x, bracket(y, z)), 1);
        addScaled(acc, bracket(y, bracket(z, x)), 1);
        addScaled(acc, bracket(z, bracket(x, y)), 1);
        normalize(acc);
        if (!acc.empty()) throw InvariantViolation("Jacobi identity fails for the structure constants");
      }
}

SparseMat AdjointOracle::adE(int root) const {
  SparseMat m;
  m.dim = dim_;
  m.cols.resize(dim_);
  for (int j = 0; j < dim_; ++j) m.cols[j] = bracket(root, j);
  return m;
}

SparseMat AdjointOracle::x(int root, long long lambda) const {
  SparseMat ad = adE(root);
  SparseMat out;
  out.dim = dim_;
  out.cols.resize(dim_);
  for (int j = 0; j < dim_; ++j) {
    SparseVec term{{j, 1}};
    SparseVec acc = term;
    for (int k = 1; k <= 4 && !term.empty(); ++k) {
      term = ad.apply(term);
      for (auto& [i, c] : term) {
        c *= lambda;
        if (c % k != 0) throw InvariantViolation("exp(ad e_alpha) is not integral");
        c /= k;
      }
      addScaled(acc, term, 1);
    }
    if (!ad.apply(term).empty() && !term.empty())
      throw InvariantViolation("ad e_alpha is not nilpotent of the expected degree");
    normalize(acc);
    out.cols[j] = std::move(acc);
  }
  return out;
}

SparseMat AdjointOracle::word(const std::vector<int>& letters) const {
  SparseMat g = SparseMat::identity(dim_);
  for (int i : letters) g = g * m_[simpleIndex(*rs_, i)];
  return g;
}

SparseMat AdjointOracle::image(const TitsElement& g) const {
  SparseMat out = word(g.w.reducedWord().letters);
  for (int i : g.t.indices()) out = out * h_[simpleIndex(*rs_, i)];
  return out;
}

std::optional<int> extractSign(const AdjointOracle& ad, int alpha, int beta) {
  const RootSystem& rs = ad.rootSystem();
  const int g = *rs.indexOf(rs.reflect(rs.root(alpha).coords, rs.root(beta).coords));
  SparseMat L = ad.m(alpha) * ad.m(beta) * ad.mInverse(alpha);
  const bool plus = L == ad.m(g);
  const bool minus = L == ad.m(g) * ad.h(g);
  if (plus && minus) return std::nullopt;
  if (plus) return 1;
  if (minus) return -1;
  throw InvariantViolation("m_a m_b m_a^-1 is not m_{s_a b}(+-1) for " + rootText(rs, alpha) + ", " +
                           rootText(rs, beta));
}

// ---- relation report

RelationReport verifyRelations(const AdjointOracle& ad, int samples, std::uint64_t seed) {
  const RootSystem& rs = ad.rootSystem();
  const int R = static_cast<int>(rs.roots().size());
  const int n = rs.rank();
  RelationReport rep;
  rep.type = rs.type().name();
  rep.convention = ad.constants().convention();

  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < R; ++a)
    for (int b = 0; b < R; ++b)
      if (b != a && b != rs.negativeIndex(a)) pairs.emplace_back(a, b);
  std::mt19937_64 rng(seed);
  if (static_cast<int>(pairs.size()) > samples) {
    std::shuffle(pairs.begin(), pairs.end(), rng);
    pairs.resize(samples);
  }
  rep.pairsSampled = static_cast<int>(pairs.size());

  auto fail = [&](const std::string& what, int a, int b) {
    rep.failures.push_back(what + " at " + rootText(rs, a) + ", " + rootText(rs, b));
  };
  auto sign = [&](int a, int b) -> std::optional<int> {
    try {
      return extractSign(ad, a, b);
    } catch (const InvariantViolation&) {
      fail("CR1", a, b);
      return std::nullopt;
    }
  };

  for (int a = 0; a < R; ++a) {
    const SparseMat& h = ad.h(a);
    bool ok = true;
    for (int d = 0; d < R && ok; ++d) {
      const int e = rs.pairingWithCoroot(rs.root(d).coords, rs.root(a).coords);
      const long long expect = (e % 2 == 0) ? 1 : -1;
      ok = h.cols[d] == SparseVec{{d, expect}};
    }
    for (int j = R; j < ad.dim() && ok; ++j) ok = h.cols[j] == SparseVec{{j, 1}};
    if (!ok) fail("h_alpha(-1) is not the expected diagonal", a, a);
    ++rep.hDiagonalChecked;
  }

  for (const auto& [a, b] : pairs) {
    const IntVector& ca = rs.root(a).coords;
    const IntVector& cb = rs.root(b).coords;
    const int g = *rs.indexOf(rs.reflect(ca, cb));
    auto c = sign(a, b);
    ++rep.cr1Checked;
    if (!c) ++rep.cr1Ambiguous;

    if (!(ad.m(a) * ad.h(b) * ad.mInverse(a) == ad.h(g))) fail("CR2", a, b);
    ++rep.cr2Checked;

    const int ab = rs.pairingWithCoroot(ca, cb);
    const int ba = rs.pairingWithCoroot(cb, ca);
    if (ab == 0) {
      auto chain = rs.rootChain(ca, cb);
      if (chain.first == 0 && chain.second == 0) {
        if (!(ad.m(a) * ad.m(b) == ad.m(b) * ad.m(a))) fail("orthogonal commutation", a, b);
        ++rep.commuteChecked;
      } else if (chain.first == 1 && chain.second == 1) {
        if (c && *c != -1) fail("short orthogonal sign", a, b);
        ++rep.shortOrthogonalChecked;
      }
      continue;
    }
    if (ab > 0) continue;
    const int bond = ab * ba;
    if (bond == 1) {
      SparseMat p = ad.m(a) * ad.m(b);
      if (!(p * p * p).isIdentity()) fail("braid (m_j m_k)^3", a, b);
      ++rep.braid3Checked;
      auto cba = sign(b, a);
      if (c && cba) {
        if (*c != -*cba) fail("c(j,k) = -c(k,j)", a, b);
        ++rep.chainSignChecked;
      }
      const int sba = *rs.indexOf(rs.reflect(cb, ca));
      auto c2 = sign(b, sba);
      if (cba && c2) {
        if (*cba * *c2 != -1) fail("c(k,j) c(k,s_k j) = -1", a, b);
        ++rep.chainSignChecked;
      }
    } else if (bond == 2) {
      const bool aShort = rs.lengthOf(ca) == LengthClass::Short;
      const int k = aShort ? a : b;
      const int j = aShort ? b : a;
      SparseMat p = ad.m(j) * ad.m(k);
      SparseMat q = ad.m(k) * ad.m(j);
      SparseMat p2 = p * p, q2 = q * q;
      if (!(p2 * p2 == ad.h(k)) || !(q2 * q2 == ad.h(k))) fail("braid (m_j m_k)^4 = h_k", j, k);
      ++rep.braid4Checked;
      const int skj = *rs.indexOf(rs.reflect(rs.root(k).coords, rs.root(j).coords));
      auto c1 = sign(k, j);
      auto c2 = sign(k, skj);
      if (c1 && c2) {
        if (*c1 * *c2 != 1) fail("c(k,j) c(k,s_k j) = 1", j, k);
        ++rep.chainSignChecked;
      }
    } else {
      ++rep.tripleBondsSkipped;
    }
  }

  rep.simpleSigns.assign(n, std::vector<int>(n, 0));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (i == j) continue;
      auto c = sign(simpleIndex(rs, i), simpleIndex(rs, j));
      rep.simpleSigns[i - 1][j - 1] = c.value_or(0);
    }

  // Tits normal form against honest matrix products
  std::uniform_int_distribution<int> letter(1, n);
  std::uniform_int_distribution<int> length(0, 2 * static_cast<int>(rs.positiveCount()));
  for (int trial = 0; trial < 24; ++trial) {
    std::vector<int> w(length(rng));
    for (int& l : w) l = letter(rng);
    TitsElement t = titsIdentity(rs);
    foldWord(t, w);
    if (!(ad.word(w) == ad.image(t))) rep.failures.push_back("Tits normal form disagrees with matrix product");
    ++rep.titsHomomorphismChecked;
  }

  if (auto w0 = minusIdentity(rs)) {
    SparseMat g = ad.image(lift(*w0));
    for (int a = 0; a < R; ++a) {
      const int na = rs.negativeIndex(a);
      if (g.cols[a].size() != 1 || g.cols[na].size() != 1 || g.cols[a][0].first != na ||
          g.cols[a][0].second != g.cols[na][0].second)
        fail("epsilon_{-a} = epsilon_a for the lift of -1", a, na);
      ++rep.epsilonSymmetryChecked;
    }
  }
  return rep;
}

nlohmann::ordered_json toJson(const RelationReport& r) {
  nlohmann::ordered_json j;
  j["type"] = r.type;
  j["convention"] = r.convention;
  j["pairsSampled"] = r.pairsSampled;
  j["checks"] = {{"cr1", r.cr1Checked},
                 {"cr1SignInvisibleInAdjoint", r.cr1Ambiguous},
                 {"cr2", r.cr2Checked},
                 {"hDiagonal", r.hDiagonalChecked},
                 {"orthogonalCommute", r.commuteChecked},
                 {"shortOrthogonal", r.shortOrthogonalChecked},
                 {"braidOrder3", r.braid3Checked},
                 {"braidOrder4ModuloCenter", r.braid4Checked},
                 {"tripleBondsSkipped", r.tripleBondsSkipped},
                 {"chainSigns", r.chainSignChecked},
                 {"titsHomomorphism", r.titsHomomorphismChecked},
                 {"epsilonSymmetry", r.epsilonSymmetryChecked}};
  j["simpleSigns"] = r.simpleSigns;
  j["failures"] = r.failures;
  j["pass"] = r.pass();
  return j;
}

int adjointSpinCheck(const AdjointOracle& ad, const WeylElement& w) {
  const int d = w.order();
  SparseMat g = ad.word(w.reducedWord().letters);
  SparseMat p = SparseMat::identity(ad.dim());
  for (int k = 0; k < d; ++k) p = p * g;
  int s;
  if (p.isIdentity()) {
    s = 1;
  } else if ((p * p).isIdentity()) {
    s = -1;
  } else {
    throw InvariantViolation("adjoint representative has order neither d nor 2d");
  }
  SpinResult r = computeSpin(w);
  if (r.spinFor("adjoint") != s) throw InvariantViolation("adjoint matrices disagree with the Tits model");
  return s;
}

// ---- dense matrices

DenseMat DenseMat::identity(int dim) {
  DenseMat m = zero(dim);
  for (int i = 0; i < dim; ++i) m(i, i) = 1;
  return m;
}

DenseMat DenseMat::zero(int dim) {
  DenseMat m;
  m.dim = dim;
  m.a.assign(std::size_t(dim) * dim, 0);
  return m;
}

DenseMat operator*(const DenseMat& x, const DenseMat& y) {
  DenseMat z = DenseMat::zero(x.dim);
  for (int i = 0; i < x.dim; ++i)
    for (int k = 0; k < x.dim; ++k) {
      const long long v = x(i, k);
      if (v == 0) continue;
      for (int j = 0; j < x.dim; ++j) z(i, j) += v * y(k, j);
    }
  return z;
}

DenseMat operator+(const DenseMat& x, const DenseMat& y) {
  DenseMat z = x;
  for (std::size_t i = 0; i < z.a.size(); ++i) z.a[i] += y.a[i];
  return z;
}

DenseMat operator-(const DenseMat& x, const DenseMat& y) {
  DenseMat z = x;
  for (std::size_t i = 0; i < z.a.size(); ++i) z.a[i] -= y.a[i];
  return z;
}

DenseMat DenseMat::transpose() const {
  DenseMat t = zero(dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool DenseMat::isIdentity() const { return *this == identity(dim); }

// ---- classical groups

std::string classicalKindName(ClassicalKind k, int dimension) {
  switch (k) {
    case ClassicalKind::SL: return "SL(" + std::to_string(dimension) + ")";
    case ClassicalKind::Sp: return "Sp(" + std::to_string(dimension) + ")";
    case ClassicalKind::SpinOdd:
    case ClassicalKind::SpinEven: return "Spin(" + std::to_string(dimension) + ")";
  }
  return "?";
}

bool ClassicalRealization::supported(const RootSystemType& t) {
  switch (t.family) {
    case Family::A: return t.rank <= 9;
    case Family::C: return t.rank <= 8;
    case Family::B: return t.rank <= 4;
    case Family::D: return t.rank >= 4 && t.rank <= 5;
    default: return false;
  }
}

namespace {

// fermion operators on 2^n states; bit i-1 of a state is the occupation of mode i
DenseMat creation(int n, int i1) {
  DenseMat m = DenseMat::zero(1 << n);
  for (int s = 0; s < (1 << n); ++s) {
    if (s >> (i1 - 1) & 1) continue;
    const int below = std::popcount(static_cast<unsigned>(s) & ((1u << (i1 - 1)) - 1));
    m(s | (1 << (i1 - 1)), s) = (below % 2 == 0) ? 1 : -1;
  }
  return m;
}

DenseMat parity(int n) {
  DenseMat m = DenseMat::zero(1 << n);
  for (int s = 0; s < (1 << n); ++s) m(s, s) = (std::popcount(static_cast<unsigned>(s)) % 2 == 0) ? 1 : -1;
  return m;
}

DenseMat unitMatrix(int dim, int r, int c) {
  DenseMat m = DenseMat::zero(dim);
  m(r, c) = 1;
  return m;
}

}  // namespace

ClassicalRealization::ClassicalRealization(const RootSystem& rs) : rs_(&rs) {
  const RootSystemType& t = rs.type();
  if (!supported(t))
    throw ConfigurationError("no classical matrix realization for " + t.name() + " in this build");
  const int n = t.rank;
  const int R = static_cast<int>(rs.roots().size());
  e_.assign(R, DenseMat{});

  // epsilon coordinates of every root, read from fromEpsilon over all candidates
  const int width = t.family == Family::A ? n + 1 : n;
  std::vector<IntVector> candidates;
  for (int i = 0; i < width; ++i)
    for (int j = 0; j < width; ++j) {
      if (i == j) continue;
      for (int si : {1, -1})
        for (int sj : {1, -1}) {
          if (t.family == Family::A && si == sj) continue;
          IntVector v(width, 0);
          v[i] = si;
          v[j] = sj;
          candidates.push_back(v);
        }
    }
  for (int i = 0; i < width; ++i)
    for (int s : {1, -1}) {
      IntVector v(width, 0);
      v[i] = s;
      candidates.push_back(v);
      v[i] = 2 * s;
      candidates.push_back(v);
    }

  if (t.family == Family::A) {
    kind_ = ClassicalKind::SL;
    natural_ = dim_ = n + 1;
  } else if (t.family == Family::C) {
    kind_ = ClassicalKind::Sp;
    natural_ = dim_ = 2 * n;
  } else if (t.family == Family::B) {
    kind_ = ClassicalKind::SpinOdd;
    natural_ = 2 * n + 1;
    dim_ = 1 << n;
  } else {
    kind_ = ClassicalKind::SpinEven;
    natural_ = 2 * n;
    dim_ = 1 << n;
  }

  std::vector<DenseMat> cr, an;
  for (int i = 1; i <= n && dim_ == (1 << n) && kind_ != ClassicalKind::SL && kind_ != ClassicalKind::Sp; ++i) {
    cr.push_back(creation(n, i));
    an.push_back(creation(n, i).transpose());
  }

  for (const IntVector& eps : candidates) {
    IntVector coords;
    try {
      coords = rs.fromEpsilon(eps);
    } catch (const DomainError&) {
      continue;
    }
    auto idx = rs.indexOf(coords);
    if (!idx) continue;
    std::vector<int> plus, minus;
    int two = 0;
    for (int i = 0; i < width; ++i) {
      if (eps[i] == 1) plus.push_back(i);
      if (eps[i] == -1) minus.push_back(i);
      if (eps[i] == 2) two = 1;
      if (eps[i] == -2) two = -1;
    }
    DenseMat E;
    switch (kind_) {
      case ClassicalKind::SL:
        E = unitMatrix(dim_, plus[0], minus[0]);
        break;
      case ClassicalKind::Sp: {
        // sp(2n): [[A, B], [C, -A^T]] with B, C symmetric
        if (two == 1) {
          int i = static_cast<int>(std::find(eps.begin(), eps.end(), 2) - eps.begin());
          E = unitMatrix(dim_, i, n + i);
        } else if (two == -1) {
          int i = static_cast<int>(std::find(eps.begin(), eps.end(), -2) - eps.begin());
          E = unitMatrix(dim_, n + i, i);
        } else if (plus.size() == 1 && minus.size() == 1) {
          E = unitMatrix(dim_, plus[0], minus[0]) - unitMatrix(dim_, n + minus[0], n + plus[0]);
        } else if (plus.size() == 2) {
          E = unitMatrix(dim_, plus[0], n + plus[1]) + unitMatrix(dim_, plus[1], n + plus[0]);
        } else {
          E = unitMatrix(dim_, n + minus[0], minus[1]) + unitMatrix(dim_, n + minus[1], minus[0]);
        }
        break;
      }
      case ClassicalKind::SpinOdd:
      case ClassicalKind::SpinEven:
        if (plus.size() == 1 && minus.size() == 1) {
          E = cr[plus[0]] * an[minus[0]];
        } else if (plus.size() == 2) {
          E = cr[plus[0]] * cr[plus[1]];
        } else if (minus.size() == 2) {
          E = an[minus[1]] * an[minus[0]];
        } else if (plus.size() == 1) {
          E = parity(n) * cr[plus[0]];
        } else {
          E = an[minus[0]] * parity(n);
        }
        break;
    }
    e_[*idx] = E;
  }
  for (int a = 0; a < R; ++a)
    if (e_[a].dim == 0) throw InvariantViolation("missing root vector in classical realization");

  m_.resize(R);
  for (int a = 0; a < R; ++a) {
    const DenseMat& E = e_[a];
    if (!(E * E == DenseMat::zero(dim_))) throw InvariantViolation("root vector is not square-zero");
    m_[a] = x(a, 1) * x(rs.negativeIndex(a), -1) * x(a, 1);
  }
}

DenseMat ClassicalRealization::x(int rootIndex, long long lambda) const {
  DenseMat out = DenseMat::identity(dim_);
  const DenseMat& E = e_[rootIndex];
  for (std::size_t i = 0; i < out.a.size(); ++i) out.a[i] += lambda * E.a[i];
  return out;
}

DenseMat ClassicalRealization::word(const std::vector<int>& letters) const {
  DenseMat g = DenseMat::identity(dim_);
  for (int i : letters) g = g * m_[simpleIndex(*rs_, i)];
  return g;
}

std::vector<std::string> ClassicalRealization::checkGenerators() const {
  const RootSystem& rs = *rs_;
  const int n = rs.rank();
  const int R = static_cast<int>(rs.roots().size());
  std::vector<std::string> failures;

  // Lie algebra relations for the chosen root vectors: [e_a, e_-a] acts diagonally, and
  // [h_a, e_b] = <b, a^vee> e_b
  for (int a = 0; a < R; ++a) {
    const DenseMat& E = e_[a];
    const DenseMat& F = e_[rs.negativeIndex(a)];
    DenseMat H = E * F - F * E;
    for (int b = 0; b < R; ++b) {
      DenseMat lhs = H * e_[b] - e_[b] * H;
      DenseMat rhs = e_[b];
      const long long c = rs.pairingWithCoroot(rs.root(b).coords, rs.root(a).coords);
      for (long long& v : rhs.a) v *= c;
      if (!(lhs == rhs)) {
        failures.push_back(name() + ": [h_a, e_b] wrong at " + rootText(rs, a) + ", " + rootText(rs, b));
        return failures;
      }
    }
  }

  for (int i = 1; i <= n; ++i) {
    const int a = simpleIndex(rs, i);
    DenseMat h = m_[a] * m_[a];
    bool diag = true;
    for (int r = 0; r < dim_; ++r)
      for (int c = 0; c < dim_; ++c) {
        const long long v = h(r, c);
        if (r == c ? (v != 1 && v != -1) : v != 0) diag = false;
      }
    if (!diag) failures.push_back(name() + ": m_" + std::to_string(i) + "^2 is not a diagonal sign matrix");
    if (!(h * h).isIdentity()) failures.push_back(name() + ": h_" + std::to_string(i) + " has order > 2");
    for (int j = i + 1; j <= n; ++j) {
      const int b = simpleIndex(rs, j);
      const int bond = rs.cartan()(i - 1, j - 1) * rs.cartan()(j - 1, i - 1);
      const DenseMat& mi = m_[a];
      const DenseMat& mj = m_[b];
      if (bond == 0) {
        if (!(mi * mj == mj * mi)) failures.push_back(name() + ": m_i m_j != m_j m_i");
      } else if (bond == 1) {
        DenseMat p = mi * mj;
        if (!(p * p * p).isIdentity()) failures.push_back(name() + ": (m_i m_j)^3 != 1");
      } else if (bond == 2) {
        const bool iShort = rs.lengthOf(rs.simpleRoot(i)) == LengthClass::Short;
        const DenseMat& ms = iShort ? mi : mj;
        const DenseMat& ml = iShort ? mj : mi;
        DenseMat p = ml * ms;
        DenseMat q = ms * ml;
        if (!(p * p * p * p == ms * ms) || !(q * q * q * q == ms * ms))
          failures.push_back(name() + ": (m_j m_k)^4 != h_k");
      }
    }
  }

  // orthogonal roots with a nontrivial chain: conjugation flips m_b(1) to m_b(-1)
  for (int a = 0; a < R; ++a)
    for (int b = 0; b < R; ++b) {
      const IntVector& ca = rs.root(a).coords;
      const IntVector& cb = rs.root(b).coords;
      if (a == b || rs.pairingWithCoroot(ca, cb) != 0) continue;
      auto chain = rs.rootChain(ca, cb);
      const DenseMat& ma = m_[a];
      DenseMat lhs = ma * m_[b] * (ma * ma * ma);
      if (chain.first == 0 && chain.second == 0) {
        if (!(lhs == m_[b])) failures.push_back(name() + ": orthogonal m's do not commute");
      } else if (chain.first == 1 && chain.second == 1) {
        if (!(lhs == m_[b] * m_[b] * m_[b])) failures.push_back(name() + ": m_a m_b m_a^-1 != m_b(-1)");
      }
    }
  return failures;
}

int classicalSpinCheck(const ClassicalRealization& g, const WeylElement& w) {
  const int d = w.order();
  DenseMat x = g.word(w.reducedWord().letters);
  DenseMat p = DenseMat::identity(g.dim());
  for (int k = 0; k < d; ++k) p = p * x;
  if (p.isIdentity()) return 1;
  if ((p * p).isIdentity()) return -1;
  throw InvariantViolation(g.name() + " representative has order neither d nor 2d");
}

}  // namespace ellspin
