#pragma once

#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "ellspin/gf2.hpp"
#include "ellspin/weyl.hpp"

namespace ellspin {

using TorusVector = Gf2Vector;

/// m_w * h(t) in N_0 of the universal group, m_w the Matsumoto lift of w.
struct TitsElement {
  WeylElement w;
  TorusVector t;

  friend bool operator==(const TitsElement& a, const TitsElement& b) {
    return a.w == b.w && a.t == b.t;
  }
};

/// (w, 0).
TitsElement lift(const WeylElement& w);
/// h(t) alone.
TitsElement torusElement(const RootSystem& rs, const TorusVector& t);
TitsElement titsIdentity(const RootSystem& rs);

/// Coroot action of s_i on Q^vee / 2 Q^vee.
TorusVector reflectTorus(const RootSystem& rs, int i1, TorusVector t);
/// Coroot action of w on Q^vee / 2 Q^vee.
TorusVector actOnTorus(const WeylElement& w, TorusVector t);

/// Fold the letters (each a simple reflection lift m_i) into g.
void foldWord(TitsElement& g, const std::vector<int>& letters);

TitsElement multiply(const TitsElement& a, const TitsElement& b);
TitsElement power(const TitsElement& g, long long k);
TitsElement inverse(const TitsElement& g);
int orderOf(const TitsElement& g);

/// g^d for any lift g of elliptic w of order d. DomainError for non-elliptic w.
TorusVector spinSignature(const WeylElement& w);
/// +1 iff the signature dies in the group with cocharacter lattice L.
int spin(const WeylElement& w, const CocharacterLattice& lattice);

struct SpinResult {
  std::string type;
  int rank = 0;
  std::string classId;
  int order = 0;
  TorusVector signature;
  /// (lattice label, spin) for every lattice, universal first.
  std::vector<std::pair<std::string, int>> spins;

  int spinFor(const std::string& label) const;
};

SpinResult computeSpin(const WeylElement& w, const std::string& classId = "");
SpinResult spinFromSignature(const RootSystem& rs, int order, const TorusVector& signature,
                             const std::string& classId = "");

nlohmann::ordered_json toJson(const SpinResult& r);

}  // namespace ellspin
