#pragma once

#include "borekit/category.hpp"
#include "borekit/group.hpp"
#include "borekit/simplicial.hpp"

#include <functional>
#include <memory>
#include <unordered_map>
#include <vector>

namespace borekit {

using CategoryPtr = std::shared_ptr<const FiniteCategory>;

/// Nerve of a finite category truncated at maxDim. Generators of dimension n are
/// the composable strings of n non-identity morphisms; vertex generators are the
/// objects, with the same indices.
class NerveSpace {
 public:
  /// Renders a generator from its start object and morphism string.
  using Naming = std::function<std::string(int object, const std::vector<int>& morphisms)>;

  NerveSpace(CategoryPtr category, int maxDim, const Naming& naming = {});

  const SpacePtr& space() const { return space_; }
  const CategoryPtr& category() const { return category_; }
  int maxDim() const { return space_->maxDim(); }

  /// Morphism string of a generator of dimension >= 1.
  const std::vector<int>& string(int dim, GeneratorIndex g) const { return strings_[dim][g]; }

  /// The simplex of an arbitrary composable string, identities allowed. `object` is
  /// the start object and only matters for the empty string.
  Simplex simplexOf(int object, const std::vector<int>& morphisms) const;
  /// Full string of a simplex, with identities at its degenerate positions.
  std::vector<int> morphismsOf(const Simplex& s) const;
  /// Vertex i of a simplex, as an object.
  int vertex(const Simplex& s, int i) const;

 private:
  struct StringHash {
    std::size_t operator()(const std::vector<int>& v) const noexcept;
  };

  CategoryPtr category_;
  SpacePtr space_;
  std::vector<std::vector<std::vector<int>>> strings_;
  std::vector<std::unordered_map<std::vector<int>, GeneratorIndex, StringHash>> index_;
  std::vector<int> startObject_;
};

/// Simplicial map induced by a functor between the categories of two nerves.
SimplicialMap nerveMap(const NerveSpace& source, const NerveSpace& target, const std::vector<int>& objects,
                       const std::vector<int>& morphisms);

/// G[1]: one object "*", morphisms the group elements, then(a, b) = ab.
FiniteCategory oneObjectCategory(const FiniteGroup& G);
/// G[0,1]: objects the group elements, one arrow a -> b for every pair (index a|G| + b).
FiniteCategory codiscreteCategory(const FiniteGroup& G);

/// BG = N(G[1]), EG = N(G[0,1]) with the right action (g0..gn).h = (g0h..gnh), and
/// the projection EG -> BG sending (g0..gn) to (g0 g1^-1, ..., g(n-1) gn^-1).
struct UniversalBundle {
  GroupPtr group;
  std::shared_ptr<const NerveSpace> BG, EG;
  GSpace action;
  SimplicialMap projection;

  /// The lift of a BG simplex whose last vertex is e.
  Simplex lift(const Simplex& s) const;
};
using BundlePtr = std::shared_ptr<const UniversalBundle>;

BundlePtr universalBundle(const GroupPtr& G, int maxDim);
std::shared_ptr<const NerveSpace> buildBG(const GroupPtr& G, int maxDim);

/// The induced map EG/G -> BG together with the orbit quotient it is defined on.
struct QuotientComparison {
  QuotientSpace quotient;
  SimplicialMap map;
};
QuotientComparison egQuotientIsBG(const UniversalBundle& bundle);

/// X x_G EG: the orbit quotient of X x EG under the diagonal action, and the
/// quotient map q: X x_G EG -> BG.
struct BorelConstruction {
  GSpace base;
  std::shared_ptr<const PairSpace> product;
  GSpace diagonal;
  std::shared_ptr<const QuotientSpace> quotient;
  SimplicialMap q;

  const SpacePtr& total() const { return quotient->space(); }
};

BorelConstruction borel(const GSpace& A, const UniversalBundle& bundle);

}  // namespace borekit
