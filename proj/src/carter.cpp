#include "ellspin/carter.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <regex>

#include "ellspin/errors.hpp"

namespace ellspin {

namespace {

int rankOf(const std::vector<IntVector>& rows) {
  if (rows.empty()) return 0;
  std::vector<std::vector<Rational>> m;
  for (const auto& r : rows) {
    std::vector<Rational> row;
    for (int x : r) row.emplace_back(x);
    m.push_back(std::move(row));
  }
  const int cols = static_cast<int>(m[0].size());
  int rank = 0;
  for (int c = 0; c < cols && rank < static_cast<int>(m.size()); ++c) {
    int piv = rank;
    while (piv < static_cast<int>(m.size()) && m[piv][c].numerator() == 0) ++piv;
    if (piv == static_cast<int>(m.size())) continue;
    std::swap(m[piv], m[rank]);
    for (int r = 0; r < static_cast<int>(m.size()); ++r) {
      if (r == rank || m[r][c].numerator() == 0) continue;
      Rational f = m[r][c] / m[rank][c];
      for (int k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

int twoAdic(int x) {
  int v = 0;
  while (x % 2 == 0) {
    x /= 2;
    ++v;
  }
  return v;
}

IntVector negate(IntVector v) {
  for (int& x : v) x = -x;
  return v;
}

// Nodes of a path component listed from one end; empty if the component is not a path.
std::vector<int> walkPath(const CarterDiagram& d, const Component& c, int start) {
  std::vector<int> order{start};
  int prev = -1, cur = start;
  while (true) {
    int next = -1;
    for (int v : c.nodes)
      if (v != prev && v != cur && d.bonds[cur][v] > 0) {
        if (next != -1) return {};
        next = v;
      }
    if (next == -1) break;
    prev = cur;
    cur = next;
    order.push_back(cur);
    if (order.size() > c.nodes.size()) return {};
  }
  if (order.size() != c.nodes.size()) return {};
  return order;
}

int degreeIn(const CarterDiagram& d, const Component& c, int v) {
  int deg = 0;
  for (int u : c.nodes)
    if (u != v && d.bonds[v][u] > 0) ++deg;
  return deg;
}

// Path of a B (odd = Short) or C (odd = Long) component, starting at the end far from the
// odd-length node; DomainError if the shape is wrong.
std::vector<int> classicalPath(const CarterDiagram& d, const Component& c, LengthClass odd) {
  const RootSystem& rs = d.rootSystem();
  std::vector<int> oddNodes;
  for (int v : c.nodes)
    if (rs.lengthOf(d.nodes[v]) == odd) oddNodes.push_back(v);
  if (oddNodes.size() != 1) throw DomainError("component is not of the expected classical shape");
  const int special = oddNodes.front();
  if (c.nodes.size() == 1) return {special};
  if (degreeIn(d, c, special) != 1) throw DomainError("component is not of the expected classical shape");
  std::vector<int> path = walkPath(d, c, special);
  if (path.empty()) throw DomainError("component is not a chain");
  for (std::size_t k = 0; k + 1 < path.size(); ++k) {
    int want = k == 0 ? 2 : 1;
    if (d.bonds[path[k]][path[k + 1]] != want) throw DomainError("component has unexpected bonds");
  }
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace

CarterDiagram diagramOf(const RootSystem& rs, std::vector<IntVector> roots, std::string name) {
  for (const auto& r : roots)
    if (static_cast<int>(r.size()) != rs.rank() || !rs.isRoot(r))
      throw DomainError("Carter diagram node is not a root");
  if (rankOf(roots) != static_cast<int>(roots.size()))
    throw DomainError("Carter diagram nodes are linearly dependent");
  CarterDiagram d;
  d.rs = &rs;
  d.name = std::move(name);
  const int m = static_cast<int>(roots.size());
  d.bonds.assign(m, std::vector<int>(m, 0));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      if (a != b)
        d.bonds[a][b] = rs.pairingWithCoroot(roots[a], roots[b]) * rs.pairingWithCoroot(roots[b], roots[a]);
  d.nodes = std::move(roots);
  return d;
}

WeylElement elementOf(const CarterDiagram& d) {
  WeylElement w = WeylElement::identity(d.rootSystem());
  for (const auto& r : d.nodes) w = w * WeylElement::reflection(d.rootSystem(), r);
  return w;
}

std::vector<Gf2Vector> spinLabeling(const CarterDiagram& d) {
  std::vector<Gf2Vector> out;
  for (const auto& r : d.nodes) out.push_back(d.rootSystem().corootMod2(r));
  return out;
}

std::string labelText(const Gf2Vector& label) {
  auto idx = label.indices();
  if (idx.size() == 1) return std::to_string(idx[0]);
  std::string s = "(";
  for (std::size_t k = 0; k < idx.size(); ++k) s += (k ? "," : "") + std::to_string(idx[k]);
  return s + ")";
}

ComponentDecomposition decompose(const CarterDiagram& d) {
  ComponentDecomposition out;
  const int m = d.size();
  std::vector<int> comp(m, -1);
  for (int s = 0; s < m; ++s) {
    if (comp[s] != -1) continue;
    Component c;
    std::vector<int> stack{s};
    comp[s] = static_cast<int>(out.components.size());
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      c.nodes.push_back(v);
      for (int u = 0; u < m; ++u)
        if (comp[u] == -1 && d.bonds[v][u] > 0) {
          comp[u] = comp[s];
          stack.push_back(u);
        }
    }
    std::sort(c.nodes.begin(), c.nodes.end());
    WeylElement w = WeylElement::identity(d.rootSystem());
    for (int v : c.nodes) w = w * WeylElement::reflection(d.rootSystem(), d.nodes[v]);
    c.order = w.order();
    c.content = twoAdic(c.order);
    out.order = std::lcm(out.order, c.order);
    out.components.push_back(std::move(c));
  }
  out.content = twoAdic(out.order);
  for (auto& c : out.components) c.relevant = c.content == out.content;
  return out;
}

int contentOf(const CarterDiagram& d) { return decompose(d).content; }

std::vector<Component> relevantComponents(const CarterDiagram& d) {
  std::vector<Component> out;
  for (auto& c : decompose(d).components)
    if (c.relevant) out.push_back(c);
  return out;
}

int typeBExponent(const std::vector<int>& parts) {
  int d = 1;
  for (int k : parts) d = std::lcm(d, 2 * k);
  const int r = static_cast<int>(parts.size());
  int f = 0;
  for (int k : parts)
    if (twoAdic(2 * k) == twoAdic(d) && (k % 4 == 1 || k % 4 == 2)) ++f;
  if (d % 4 == 2 && (r % 4 == 2 || r % 4 == 3)) return f + 1;
  return f;
}

std::optional<TorusVector> predictSignature(const CarterDiagram& d) {
  const RootSystem& rs = d.rootSystem();
  const int n = rs.rank();
  const Family fam = rs.type().family;
  switch (fam) {
    case Family::A: {
      if (d.size() != n || !elementOf(d).isElliptic()) return std::nullopt;
      TorusVector t = TorusVector::zero(n);
      if ((n + 1) % 2 == 0)
        for (int i = 1; i <= n; i += 2) t += TorusVector::unit(n, i);
      return t;
    }
    case Family::B: {
      auto dec = decompose(d);
      std::vector<int> parts;
      for (const auto& c : dec.components) {
        classicalPath(d, c, LengthClass::Short);
        parts.push_back(static_cast<int>(c.nodes.size()));
      }
      if (std::accumulate(parts.begin(), parts.end(), 0) != n)
        throw DomainError("B components do not partition the rank");
      return typeBExponent(parts) % 2 ? TorusVector::unit(n, n) : TorusVector::zero(n);
    }
    case Family::C: {
      auto dec = decompose(d);
      int total = 0;
      TorusVector t = TorusVector::zero(n);
      for (const auto& c : dec.components) {
        std::vector<int> path = classicalPath(d, c, LengthClass::Long);
        const int m = static_cast<int>(path.size());
        total += m;
        if (!c.relevant) continue;
        const int k = 2 * ((m - 1) / 2) + 1;
        for (int pos = 0; pos < k; pos += 2) t += rs.corootMod2(d.nodes[path[pos]]);
      }
      if (total != n) throw DomainError("C components do not partition the rank");
      return t;
    }
    case Family::D: {
      if (d.size() != n) return std::nullopt;
      WeylElement w = elementOf(d);
      if (!w.isElliptic()) return std::nullopt;
      auto parts = partitionFromCharPoly(w.charPoly());
      if (!parts) throw InvariantViolation("elliptic D element with unexpected characteristic polynomial");
      TorusVector t = TorusVector::zero(n);
      if (typeBExponent(*parts) % 2) t = TorusVector::fromIndices(n, {n - 1, n});
      return t;
    }
    default:
      return std::nullopt;
  }
}

std::optional<TorusVector> labelingSignature(const CarterDiagram& d) {
  const RootSystem& rs = d.rootSystem();
  const int m = d.size();
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b) {
      if (d.bonds[a][b] > 1) return std::nullopt;
      if (d.bonds[a][b] == 0 && rs.rootChain(d.nodes[a], d.nodes[b]) != std::pair{0, 0}) return std::nullopt;
    }
  auto dec = decompose(d);
  TorusVector t = TorusVector::zero(rs.rank());
  for (const auto& c : dec.components) {
    int start = -1;
    for (int v : c.nodes)
      if (degreeIn(d, c, v) <= 1) start = v;
    if (start == -1) return std::nullopt;
    std::vector<int> path = walkPath(d, c, start);
    if (path.empty()) return std::nullopt;
    if (!c.relevant || path.size() % 2 == 0) continue;
    for (std::size_t pos = 0; pos < path.size(); pos += 2) t += rs.corootMod2(d.nodes[path[pos]]);
  }
  return t;
}

namespace {

void requireFamily(const RootSystem& rs, Family f, const std::vector<int>& parts) {
  if (rs.type().family != f) throw DomainError("construction requested for the wrong family");
  int sum = 0;
  for (int k : parts) {
    if (k < 1) throw DomainError("partition parts must be positive");
    sum += k;
  }
  if (sum != rs.rank()) throw DomainError("partition does not sum to the rank");
}

CarterDiagram chainRecursion(const RootSystem& rs, const std::vector<int>& parts, bool shortExtension) {
  std::vector<IntVector> chain;
  for (int i = 1; i <= rs.rank(); ++i) chain.push_back(rs.simpleRoot(i));
  std::vector<IntVector> nodes;
  for (std::size_t p = 0; p < parts.size(); ++p) {
    const int k = parts[p];
    const int m = static_cast<int>(chain.size());
    if (k == m) {
      nodes.insert(nodes.end(), chain.begin(), chain.end());
      chain.clear();
      break;
    }
    IntVector top(rs.rank(), 0);
    for (int j = 0; j < m; ++j)
      for (int c = 0; c < rs.rank(); ++c) top[c] += (shortExtension || j == m - 1 ? 1 : 2) * chain[j][c];
    nodes.push_back(negate(top));
    for (int j = 0; j < k - 1; ++j) nodes.push_back(chain[j]);
    chain.erase(chain.begin(), chain.begin() + k);
  }
  if (!chain.empty()) throw DomainError("partition does not sum to the rank");
  return diagramOf(rs, nodes);
}

}  // namespace

CarterDiagram typeBDiagram(const RootSystem& rs, const std::vector<int>& parts) {
  requireFamily(rs, Family::B, parts);
  CarterDiagram d = chainRecursion(rs, parts, true);
  d.partition = parts;
  d.name = classicalClassName(rs.type(), parts);
  return d;
}

CarterDiagram typeCDiagram(const RootSystem& rs, const std::vector<int>& parts) {
  requireFamily(rs, Family::C, parts);
  CarterDiagram d = chainRecursion(rs, parts, false);
  d.partition = parts;
  d.name = classicalClassName(rs.type(), parts);
  return d;
}

CarterDiagram typeDDiagram(const RootSystem& rs, const std::vector<int>& parts) {
  requireFamily(rs, Family::D, parts);
  if (parts.size() % 2 != 0) throw DomainError("elliptic D classes need an even number of cycles");
  const int n = rs.rank();
  auto eps = [&](int a, int sa, int b, int sb) {
    IntVector v(n, 0);
    v[a] += sa;
    v[b] += sb;
    return rs.fromEpsilon(v);
  };
  std::vector<IntVector> nodes;
  int start = 0;
  for (std::size_t p = 0; p < parts.size(); p += 2) {
    const int a = parts[p], b = parts[p + 1];
    for (int j = start; j < start + a - 1; ++j) nodes.push_back(eps(j, 1, j + 1, -1));
    for (int j = start + a; j < start + a + b - 1; ++j) nodes.push_back(eps(j, 1, j + 1, -1));
    const int x = start + a - 1, y = start + a + b - 1;
    nodes.push_back(eps(x, 1, y, -1));
    nodes.push_back(eps(x, 1, y, 1));
    start += a + b;
  }
  CarterDiagram d = diagramOf(rs, nodes, classicalClassName(rs.type(), parts));
  d.partition = parts;
  return d;
}

CarterDiagram extendedRemoval(const RootSystem& rs, int removed, std::string name) {
  if (removed < 0 || removed > rs.rank()) throw DomainError("extended diagram node out of range");
  std::vector<IntVector> nodes;
  if (removed != 0) nodes.push_back(negate(rs.highestRoot().coords));
  for (int i = 1; i <= rs.rank(); ++i)
    if (i != removed) nodes.push_back(rs.simpleRoot(i));
  return diagramOf(rs, nodes, std::move(name));
}

std::vector<std::vector<int>> partitionsOf(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int left, int maxPart) {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (int k = std::min(left, maxPart); k >= 1; --k) {
      cur.push_back(k);
      rec(left - k, k);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

std::optional<std::vector<int>> partitionFromCharPoly(const IntPolynomial& p) {
  std::vector<int> parts;
  IntPolynomial rest = p;
  while (rest.degree() > 0) {
    auto f = factorCyclotomic(rest);
    if (!f || f->empty()) return std::nullopt;
    const int m = f->rbegin()->first;
    if (m % 2 != 0) return std::nullopt;
    const int k = m / 2;
    IntPolynomial cyc = IntPolynomial::monomial(k) + IntPolynomial::constant(1);
    auto q = rest.divideExactly(cyc);
    if (!q) return std::nullopt;
    parts.push_back(k);
    rest = *q;
  }
  if (rest != IntPolynomial::constant(1)) return std::nullopt;
  return parts;
}

std::string classicalClassName(const RootSystemType& type, const std::vector<int>& parts) {
  const char letter = familyLetter(type.family);
  std::string s;
  auto add = [&](const std::string& piece) { s += (s.empty() ? "" : "x") + piece; };
  switch (type.family) {
    case Family::A:
      return "A" + std::to_string(type.rank);
    case Family::B:
    case Family::C:
      for (int k : parts) add(std::string(1, letter) + std::to_string(k));
      return s;
    case Family::D: {
      int pairsOfOnes = 0;
      for (std::size_t p = 0; p + 1 < parts.size(); p += 2) {
        int a = std::max(parts[p], parts[p + 1]), b = std::min(parts[p], parts[p + 1]);
        if (a == 1) {
          ++pairsOfOnes;
          continue;
        }
        if (a + b == 3) add("A3");
        else if (b == 1) add("D" + std::to_string(a + 1));
        else add("D" + std::to_string(a + b) + "(a" + std::to_string(b - 1) + ")");
      }
      if (pairsOfOnes > 0) add("A1^" + std::to_string(2 * pairsOfOnes));
      return s;
    }
    default:
      throw DomainError("classical class names only exist for A, B, C, D");
  }
}

std::vector<CatalogEntry> exceptionalCatalog(const RootSystemType& type) {
  if (type.family == Family::G) return {{"G2", "Phi6"}, {"A2", "Phi3"}, {"A1x~A1", "Phi2^2"}};
  if (type.family == Family::F)
    return {{"A1^4", "Phi2^4"},       {"D4", "Phi2^2*Phi6"},  {"C3xA1", "Phi2^2*Phi6"},
            {"D4(a1)", "Phi4^2"},     {"A2x~A2", "Phi3^2"},   {"A3x~A1", "Phi2^2*Phi4"},
            {"B4", "Phi8"},           {"F4", "Phi12"},        {"F4(a1)", "Phi6^2"}};
  if (type.family == Family::E && type.rank == 6)
    return {{"E6", "Phi3*Phi12"}, {"E6(a1)", "Phi9"}, {"E6(a2)", "Phi3*Phi6^2"},
            {"A2^3", "Phi3^3"},   {"A1xA5", "Phi2^2*Phi3*Phi6"}};
  if (type.family == Family::E && type.rank == 7)
    return {{"A1^7", "Phi2^7"},
            {"A3^2xA1", "Phi2^3*Phi4^2"},
            {"A5xA2", "Phi2*Phi3^2*Phi6"},
            {"A7", "Phi2*Phi4*Phi8"},
            {"D4xA1^3", "Phi2^5*Phi6"},
            {"D6xA1", "Phi2^3*Phi10"},
            {"D6(a2)xA1", "Phi2^3*Phi6^2"},
            {"E7", "Phi2*Phi18"},
            {"E7(a1)", "Phi2*Phi14"},
            {"E7(a2)", "Phi2*Phi6*Phi12"},
            {"E7(a3)", "Phi2*Phi6*Phi10"},
            {"E7(a4)", "Phi2*Phi6^3"}};
  return {};
}

int expectedClassCount(const RootSystemType& type) {
  const int n = type.rank;
  switch (type.family) {
    case Family::A: return 1;
    case Family::B:
    case Family::C: return static_cast<int>(partitionsOf(n).size());
    case Family::D: {
      int c = 0;
      for (const auto& p : partitionsOf(n))
        if (p.size() % 2 == 0) ++c;
      return c;
    }
    case Family::E: return n == 6 ? 5 : n == 7 ? 12 : 30;
    case Family::F: return 9;
    case Family::G: return 3;
  }
  return 0;
}

namespace {

std::optional<CarterDiagram> orthogonalBasis(const RootSystem& rs, std::string name) {
  const auto pos = rs.positiveRoots();
  std::vector<IntVector> chosen;
  std::function<bool(std::size_t)> rec = [&](std::size_t from) {
    if (static_cast<int>(chosen.size()) == rs.rank()) return true;
    for (std::size_t k = from; k < pos.size(); ++k) {
      const IntVector& cand = pos[pos.size() - 1 - k].coords;
      bool ok = true;
      for (const auto& c : chosen)
        if (rs.innerProduct(c, cand) != 0) ok = false;
      if (!ok) continue;
      chosen.push_back(cand);
      if (rec(k + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  if (!minusIdentity(rs) || !rec(0)) return std::nullopt;
  return diagramOf(rs, chosen, std::move(name));
}

std::string minusIdentityName(const RootSystem& rs) {
  if (rs.type().family == Family::G) return "A1x~A1";
  if (rs.type().family == Family::B || rs.type().family == Family::C || rs.type().family == Family::D)
    return classicalClassName(rs.type(), std::vector<int>(rs.rank(), 1));
  return "A1^" + std::to_string(rs.rank());
}

}  // namespace

std::vector<CarterDiagram> exceptionalConstructions(const RootSystem& rs) {
  const RootSystemType& t = rs.type();
  std::vector<std::pair<int, std::string>> removals;
  if (t.family == Family::G) removals = {{0, "G2"}, {2, "A2"}, {1, "A1x~A1"}};
  if (t.family == Family::F) removals = {{0, "F4"}, {1, "C3xA1"}, {2, "A2x~A2"}, {3, "A3x~A1"}, {4, "B4"}};
  if (t.family == Family::E && t.rank == 6) removals = {{0, "E6"}, {2, "A1xA5"}, {3, "A2^3"}};
  if (t.family == Family::E && t.rank == 7)
    removals = {{0, "E7"}, {2, "D6xA1"}, {4, "A3^2xA1"}, {5, "A7"}, {6, "A5xA2"}};
  if (t.family == Family::E && t.rank == 8)
    removals = {{0, "E8"},   {1, "E7xA1"},     {2, "E6xA2"}, {3, "D5xA3"},
                {4, "A4^2"}, {5, "A5xA1xA2"}, {6, "A8"},    {7, "A7xA1"}};
  std::vector<CarterDiagram> out;
  for (const auto& [k, name] : removals) out.push_back(extendedRemoval(rs, k, name));
  if (t.family != Family::G)
    if (auto d = orthogonalBasis(rs, minusIdentityName(rs))) out.push_back(*d);
  return out;
}

std::optional<CarterDiagram> namedDiagram(const RootSystem& rs, const std::string& name) {
  const RootSystemType& t = rs.type();
  const int n = rs.rank();
  std::string lower = name;
  std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
  if (lower == "coxeter") {
    std::vector<IntVector> simple;
    for (int i = 1; i <= n; ++i) simple.push_back(rs.simpleRoot(i));
    std::string nm = t.name();
    CarterDiagram d = diagramOf(rs, simple, nm);
    if (t.family == Family::B || t.family == Family::C) d.partition = {n};
    if (t.family == Family::D) d.partition = {n - 1, 1};
    return d;
  }
  if (lower == "-i") {
    if (!minusIdentity(rs)) return std::nullopt;
    if (t.family == Family::B) return typeBDiagram(rs, std::vector<int>(n, 1));
    if (t.family == Family::C) return typeCDiagram(rs, std::vector<int>(n, 1));
    if (t.family == Family::D) return typeDDiagram(rs, std::vector<int>(n, 1));
    if (t.family == Family::G) return extendedRemoval(rs, 1, "A1x~A1");
    return orthogonalBasis(rs, minusIdentityName(rs));
  }
  switch (t.family) {
    case Family::A:
      if (name == classicalClassName(t, {})) return namedDiagram(rs, "coxeter");
      return std::nullopt;
    case Family::B:
    case Family::C: {
      static const std::regex piece("([BC])([0-9]+)");
      std::vector<int> parts;
      std::size_t consumed = 0;
      for (auto it = std::sregex_iterator(name.begin(), name.end(), piece); it != std::sregex_iterator(); ++it) {
        if ((*it)[1].str()[0] != familyLetter(t.family)) return std::nullopt;
        parts.push_back(std::stoi((*it)[2].str()));
        consumed += it->length();
      }
      if (parts.empty() || consumed + parts.size() - 1 != name.size()) return std::nullopt;
      if (std::accumulate(parts.begin(), parts.end(), 0) != n) return std::nullopt;
      return t.family == Family::B ? typeBDiagram(rs, parts) : typeCDiagram(rs, parts);
    }
    case Family::D:
      if (name == t.name()) return namedDiagram(rs, "coxeter");
      for (const auto& p : partitionsOf(n))
        if (p.size() % 2 == 0 && classicalClassName(t, p) == name) return typeDDiagram(rs, p);
      return std::nullopt;
    default:
      for (auto& d : exceptionalConstructions(rs))
        if (d.name == name) return d;
      return std::nullopt;
  }
}

}  // namespace ellspin
