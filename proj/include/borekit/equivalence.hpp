#pragma once

#include "borekit/fibrant.hpp"
#include "borekit/homology.hpp"
#include "borekit/nerve.hpp"

#include <memory>
#include <string>
#include <vector>

namespace borekit {

/// An object of sSets over BG.
struct ObjOverBG {
  SpacePtr total;
  SimplicialMap structure;
};

/// hcolim on objects: X -> (q_X: X x_G EG -> BG).
BorelConstruction hcolimObj(const GSpace& A, const UniversalBundle& bundle);
ObjOverBG overBG(const BorelConstruction& b);

/// hcolim on morphisms: the map induced on quotients by m x id_EG. Throws
/// ValidationError if m is not equivariant.
SimplicialMap hcolimMor(const BorelConstruction& from, const BorelConstruction& to, const SimplicialMap& m);

/// hpull on objects: R(Y) x_Rf EG with G acting on the EG coordinate.
struct Hpull {
  MappingPath replacement;
  std::shared_ptr<const PairSpace> pairs;
  GSpace action;

  const SpacePtr& space() const { return pairs->space(); }
};

Hpull hpullObj(const ObjOverBG& f, const UniversalBundle& bundle, const PathSpace& path);
/// hpull on morphisms u: f -> g over BG: (r, e) -> (R(u) r, e).
SimplicialMap hpullMor(const Hpull& from, const Hpull& to, const SimplicialMap& u);

/// K: X x EG -> X_G x_(q_X) EG, (x, e) -> ([x, e], e). The target carries the action
/// on the EG coordinate.
struct KIso {
  std::shared_ptr<const PairSpace> target;
  GSpace targetAction;
  SimplicialMap map;
};
KIso kIso(const BorelConstruction& b, const UniversalBundle& bundle);

/// The composite X_G x_(q_X) EG -> X x EG -> X (inverse of K, then projection).
SimplicialMap hMapObj(const BorelConstruction& b, const KIso& k);

/// Constant map onto the vertex e of EG.
SimplicialMap zeroMorphism(const SpacePtr& R, const UniversalBundle& bundle);

/// hcolim(hpull(f)) = (R(Y) x_Rf EG) x_G EG with its maps F and s.
/// F([(r, e), e']) = r. s(r) = [(r, l), l] for any lift l of Rf(r) to EG; the class
/// does not depend on the lift because lifts differ by the diagonal action.
struct SectionData {
  BorelConstruction quotient;
  SimplicialMap F;
  SimplicialMap s;
};
SectionData sectionData(const Hpull& hp, const UniversalBundle& bundle);

/// Components of the homotopy h on a G-space X.
struct HSide {
  BorelConstruction borel;
  KIso k;
  SimplicialMap arrow;  // h(X, 0 -> 1)

  const SpacePtr& object0() const { return k.target->space(); }
  const SpacePtr& object1() const { return borel.base.space; }
};
HSide hSide(const GSpace& A, const UniversalBundle& bundle);
/// h(m, id_0) for index 0 (([x, e], e') -> (m-bar [x, e], e')), h(m, id_1) = m for index 1.
SimplicialMap hMorphism(const HSide& from, const HSide& to, const SimplicialMap& m, int index);

/// Components of the homotopy k on an object f: Y -> BG.
struct KSide {
  ObjOverBG object;
  Hpull hpull;
  SectionData section;
  SimplicialMap arrow;  // k(f, 0 -> 1) = s o iota

  const SimplicialMap& object0() const { return object.structure; }
  const SimplicialMap& object1() const { return section.quotient.q; }
};
KSide kSide(const ObjOverBG& f, const UniversalBundle& bundle, const PathSpace& path);
/// k(u, id_0) = u for index 0, k(u, id_1) = hcolim(hpull(u)) for index 1.
SimplicialMap kMorphism(const KSide& from, const KSide& to, const SimplicialMap& u, int index);

/// Which object over BG the k side of a theorem run starts from.
enum class OverBGChoice { Hcolim, Basepoint, Identity };
std::string toString(OverBGChoice c);
OverBGChoice overBGChoiceFrom(const std::string& s);

struct TheoremInput {
  GSpace space;
  int maxDim = 0;
  int degreeBound = 0;
  OverBGChoice overBG = OverBGChoice::Hcolim;
};

struct TheoremCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct TheoremReport {
  std::vector<TheoremCheck> checks;
  bool halted = false;

  bool passed() const;
};

/// Runs both homotopies end to end and records every named check. A failed group or
/// action validation halts the run. The test arrow on the G-space side is the action of
/// the first central non-identity element (the identity if there is none); on the side
/// over BG it is its image under hcolim (identity for the other choices).
TheoremReport verifyTheorem(const TheoremInput& input);

}  // namespace borekit
