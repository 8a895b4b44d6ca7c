#pragma once

#include "borekit/category.hpp"
#include "borekit/errors.hpp"
#include "borekit/simplicial.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace borekit {

/// A finite category with a wide subcategory of weak equivalences.
struct RelativeCategory {
  FiniteCategory cat;
  std::vector<bool> weak;  // per morphism

  bool isWeak(int f) const { return weak[static_cast<std::size_t>(f)]; }
};

/// Identities are weak and weak maps are closed under composition.
ValidationReport validateRelativeCategory(const RelativeCategory& R);

struct ZigzagStep {
  int morphism = 0;
  bool forward = true;

  friend bool operator==(const ZigzagStep&, const ZigzagStep&) = default;
  friend auto operator<=>(const ZigzagStep&, const ZigzagStep&) = default;
};

/// A chain from `from` to `to`; a backward step with morphism w: A -> B travels from
/// B to A.
struct Zigzag {
  int from = 0, to = 0;
  std::vector<ZigzagStep> steps;

  std::size_t length() const { return steps.size(); }
  friend bool operator==(const Zigzag&, const Zigzag&) = default;
  friend auto operator<=>(const Zigzag&, const Zigzag&) = default;
};

/// Endpoints chain and every backward step is weak.
ValidationReport validateZigzag(const RelativeCategory& R, const Zigzag& z);
std::string toString(const RelativeCategory& R, const Zigzag& z);

enum class ReductionRule { DropIdentity, Compose, Cancel };
std::string toString(ReductionRule r);

struct Reduction {
  ReductionRule rule;
  std::size_t position;
  Zigzag result;
};

/// Applies the first rule that fits at `position`: (i) drop an identity step,
/// (ii) compose it with the next step of the same direction, (iii) cancel it against
/// the next step carrying the same morphism the other way. nullopt if none applies.
std::optional<Reduction> reduceOnce(const RelativeCategory& R, const Zigzag& z, std::size_t position);

/// Every single-rule reduction of z, in position order.
std::vector<Reduction> reductions(const RelativeCategory& R, const Zigzag& z);
/// Every zigzag that reduces to z in one step and has length <= maxLength.
std::vector<Zigzag> expansions(const RelativeCategory& R, const Zigzag& z, std::size_t maxLength);

struct NormalForm {
  Zigzag result;
  std::vector<Reduction> trace;
};
/// Leftmost-first reduction to a zigzag on which no rule applies.
NormalForm normalForm(const RelativeCategory& R, const Zigzag& z);

struct SearchBudget {
  std::uint64_t maxStates = 100000;
  std::size_t maxLength = 0;  // 0: longest input plus 2
};

struct EquivalenceResult {
  bool equivalent = false;
  bool exhausted = false;   // budget ran out before the search space did
  std::vector<Zigzag> path; // z1 = path.front(), z2 = path.back(); adjacent entries differ by one rule
  std::uint64_t states = 0;
};

/// Bidirectional breadth-first search over rules and their inverses, confined to
/// zigzags no longer than the length cap. A negative answer holds within the cap only.
EquivalenceResult equivalentZigzags(const RelativeCategory& R, const Zigzag& z1, const Zigzag& z2,
                                    const SearchBudget& budget = {});

/// Restricted zigzags X -> Y with at most maxLen steps, merged along single rewrites
/// inside that window.
struct HomSet {
  std::size_t maxLen = 0;
  std::size_t enumerated = 0;
  std::vector<Zigzag> representatives;  // normal form of the shortest member of each class
  std::vector<std::size_t> classSizes;
};
HomSet homSet(const RelativeCategory& R, int from, int to, std::size_t maxLen);

/// All restricted zigzags from -> to with at most maxLen steps.
std::vector<Zigzag> enumerateZigzags(const RelativeCategory& R, int from, int to, std::size_t maxLen);

struct RelativeFunctor {
  const RelativeCategory* source = nullptr;
  const RelativeCategory* target = nullptr;
  std::vector<int> objects, morphisms;
};
ValidationReport validateRelativeFunctor(const RelativeFunctor& F);

/// C x [0 -> 1] with weak maps (w, anything) for w weak in C. Objects (x, i) have index
/// 2x + i; morphism (f, a) has index 3f + a with a in {id_0, 0->1, id_1}.
RelativeCategory homotopyCylinder(const RelativeCategory& C);

/// Checks that H: C x 1h -> D is a relative functor, restricts to F at 0 and G at 1,
/// sends every (id_x, 0->1) to a weak map, and that every naturality square
/// H(f, id_0) then H(y, 0->1) = H(x, 0->1) then H(f, id_1) commutes.
ValidationReport strictHomotopyCheck(const RelativeFunctor& F, const RelativeFunctor& G, const RelativeFunctor& H);

/// Finite category of simplicial maps: closes the generators under composition
/// (maps compared exactly) and adds identities. Weak maps are chosen by `isWeak`.
struct MapCategory {
  RelativeCategory relative;
  std::vector<SpacePtr> objects;
  std::vector<SimplicialMap> maps;

  /// Index of a map equal to f, if present.
  std::optional<int> find(const SimplicialMap& f) const;
};
/// Throws RangeError once more than maxMorphisms maps arise.
MapCategory mapCategory(const std::vector<SpacePtr>& objects, const std::vector<SimplicialMap>& generators,
                        const std::function<bool(const SimplicialMap&)>& isWeak, std::size_t maxMorphisms = 256);

}  // namespace borekit
