#pragma once

#include "borekit/errors.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace borekit {

/// Finite category given by explicit tables. Composition is written in
/// diagrammatic order: then(f, g) is "f followed by g" and is defined iff
/// target(f) == source(g).
class FiniteCategory {
 public:
  struct Morphism {
    int source = 0;
    int target = 0;
    std::string name;
  };

  FiniteCategory() = default;
  /// `composition` is row-major |M| x |M| with -1 for non-composable pairs.
  FiniteCategory(std::vector<std::string> objects, std::vector<Morphism> morphisms, std::vector<int> identities,
                 std::vector<int> composition);

  int objectCount() const { return static_cast<int>(objects_.size()); }
  int morphismCount() const { return static_cast<int>(morphisms_.size()); }
  const std::string& objectName(int o) const { return objects_[o]; }
  const Morphism& morphism(int f) const { return morphisms_[f]; }
  int source(int f) const { return morphisms_[f].source; }
  int target(int f) const { return morphisms_[f].target; }
  int identity(int object) const { return identities_[object]; }
  bool isIdentity(int f) const { return identities_[morphisms_[f].source] == f; }
  /// f followed by g; -1 if not composable.
  int then(int f, int g) const { return composition_[static_cast<std::size_t>(f) * morphisms_.size() + g]; }
  /// Non-identity morphisms with the given source, in index order.
  const std::vector<int>& outgoing(int object) const { return outgoing_[object]; }
  std::vector<int> hom(int from, int to) const;

  std::optional<int> findObject(std::string_view name) const;
  std::optional<int> findMorphism(std::string_view name) const;

 private:
  std::vector<std::string> objects_;
  std::vector<Morphism> morphisms_;
  std::vector<int> identities_;
  std::vector<int> composition_;
  std::vector<std::vector<int>> outgoing_;
};

/// Associativity, identity laws and source/target consistency.
ValidationReport validateCategory(const FiniteCategory& C);

/// Object and morphism assignments between two finite categories.
struct Functor {
  const FiniteCategory* source = nullptr;
  const FiniteCategory* target = nullptr;
  std::vector<int> objects;
  std::vector<int> morphisms;
};

ValidationReport validateFunctor(const Functor& F);

/// The category 0 -> 1 (objects "0", "1"; arrow "0->1").
FiniteCategory intervalCategory();
/// Product category; morphism (f, a) has index f * |B| + a.
FiniteCategory productCategory(const FiniteCategory& A, const FiniteCategory& B);
/// A poset on 0..n-1 given by its order relation leq(i, j).
FiniteCategory posetCategory(const std::vector<std::string>& names, const std::vector<std::vector<bool>>& leq);


/// Arrow category C^[1]: objects are the morphisms of C, a morphism v -> v' is a
/// commuting square (g, t) with v then t = g then v'. Built together with the
/// evaluation functors at the two ends and the constant-square functor C -> C^[1].
struct ArrowCategory {
  FiniteCategory category;
  std::vector<std::pair<int, int>> squares;  // (bottom g, top t) per morphism
  std::vector<int> constant;                 // morphism f of C -> square (f, f)
};
ArrowCategory arrowCategory(const FiniteCategory& C);

}  // namespace borekit
