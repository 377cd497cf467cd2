#include "ellspin/tits.hpp"

#include "ellspin/errors.hpp"

namespace ellspin {

TitsElement lift(const WeylElement& w) { return {w, TorusVector::zero(w.rank())}; }

TitsElement torusElement(const RootSystem& rs, const TorusVector& t) {
  if (t.size() != rs.rank()) throw DomainError("torus vector has wrong length");
  return {WeylElement::identity(rs), t};
}

TitsElement titsIdentity(const RootSystem& rs) { return lift(WeylElement::identity(rs)); }

TorusVector reflectTorus(const RootSystem& rs, int i1, TorusVector t) {
  // s_i(beta^vee) = beta^vee - <alpha_i, beta^vee> alpha_i^vee
  const IntMatrix& a = rs.cartan();
  int parity = 0;
  for (int j = 1; j <= rs.rank(); ++j)
    if (t.get(j)) parity ^= a(i1 - 1, j - 1) & 1;
  if (parity) t += TorusVector::unit(rs.rank(), i1);
  return t;
}

TorusVector actOnTorus(const WeylElement& w, TorusVector t) {
  const auto& letters = w.reducedWord().letters;
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) t = reflectTorus(w.rootSystem(), *it, t);
  return t;
}

void foldWord(TitsElement& g, const std::vector<int>& letters) {
  const RootSystem& rs = g.w.rootSystem();
  for (int i : letters) {
    // m_w h(t) m_i = m_w m_i h(s_i t); m_w m_i = m_{w s_i} or m_{w s_i} h_i on a descent
    g.t = reflectTorus(rs, i, g.t);
    if (g.w.isRightDescent(i)) g.t += TorusVector::unit(rs.rank(), i);
    g.w.rightMultiplySimple(i);
  }
}

TitsElement multiply(const TitsElement& a, const TitsElement& b) {
  if (&a.w.rootSystem() != &b.w.rootSystem()) throw DomainError("Tits elements belong to different root systems");
  TitsElement r = a;
  foldWord(r, b.w.reducedWord().letters);
  r.t += b.t;
  return r;
}

TitsElement power(const TitsElement& g, long long k) {
  if (k < 0) return power(inverse(g), -k);
  TitsElement acc = titsIdentity(g.w.rootSystem());
  TitsElement base = g;
  while (k > 0) {
    if (k & 1) acc = multiply(acc, base);
    k >>= 1;
    if (k > 0) base = multiply(base, base);
  }
  return acc;
}

int orderOf(const TitsElement& g) {
  const int d = g.w.order();
  return power(g, d).t.isZero() ? d : 2 * d;
}

TitsElement inverse(const TitsElement& g) { return power(g, orderOf(g) - 1); }

TorusVector spinSignature(const WeylElement& w) {
  if (!w.isElliptic())
    throw DomainError(
        "spin signature requested for a non-elliptic element; representatives of non-elliptic "
        "elements need not share an order");
  const int d = w.order();
  const std::vector<int> word = w.reducedWord().letters;
  TitsElement g = titsIdentity(w.rootSystem());
  for (int k = 0; k < d; ++k) foldWord(g, word);
  if (!g.w.isIdentity()) throw InvariantViolation("fold of w^d did not return to the identity");
  return g.t;
}

int spin(const WeylElement& w, const CocharacterLattice& lattice) {
  return w.rootSystem().reducesTrivially(spinSignature(w), lattice) ? 1 : -1;
}

int SpinResult::spinFor(const std::string& label) const {
  for (const auto& [l, s] : spins)
    if (l == label) return s;
  throw ConfigurationError("no lattice '" + label + "' in spin result");
}

SpinResult spinFromSignature(const RootSystem& rs, int order, const TorusVector& signature,
                             const std::string& classId) {
  SpinResult r;
  r.type = rs.type().name();
  r.rank = rs.rank();
  r.classId = classId;
  r.order = order;
  r.signature = signature;
  for (const auto& lat : rs.lattices())
    r.spins.emplace_back(lat.label, rs.reducesTrivially(signature, lat) ? 1 : -1);
  return r;
}

SpinResult computeSpin(const WeylElement& w, const std::string& classId) {
  return spinFromSignature(w.rootSystem(), w.order(), spinSignature(w), classId);
}

nlohmann::ordered_json toJson(const SpinResult& r) {
  nlohmann::ordered_json j;
  j["type"] = r.type;
  j["rank"] = r.rank;
  j["classId"] = r.classId;
  j["order"] = r.order;
  j["signatureBits"] = r.signature.bitString();
  j["signature"] = r.signature.asTorusProduct();
  nlohmann::ordered_json spins;
  for (const auto& [label, s] : r.spins) spins[label] = s;
  j["spins"] = spins;
  nlohmann::ordered_json orders;
  for (const auto& [label, s] : r.spins) orders[label] = s == 1 ? r.order : 2 * r.order;
  j["representativeOrder"] = orders;
  return j;
}

}  // namespace ellspin
