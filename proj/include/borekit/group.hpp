#pragma once

#include "borekit/errors.hpp"
#include "borekit/simplicial.hpp"

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace borekit {

/// Finite group given by a full multiplication table. The constructor only checks
/// table shape; validateGroup checks the axioms.
class FiniteGroup {
 public:
  FiniteGroup(std::vector<std::string> elements, int identity, std::vector<int> table);

  static FiniteGroup cyclic(int n);
  /// Symmetric group on n letters; elements are one-line permutations, product is
  /// "apply the left factor, then the right one".
  static FiniteGroup symmetric(int n);

  int order() const { return static_cast<int>(elements_.size()); }
  int identity() const { return identity_; }
  int multiply(int a, int b) const { return table_[static_cast<std::size_t>(a) * elements_.size() + b]; }
  /// -1 if the table has no two-sided inverse for a.
  int inverse(int a) const { return inverses_[a]; }
  const std::string& name(int a) const { return elements_[a]; }
  const std::vector<std::string>& elements() const { return elements_; }
  std::optional<int> find(std::string_view name) const;

 private:
  std::vector<std::string> elements_;
  int identity_;
  std::vector<int> table_;
  std::vector<int> inverses_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

ValidationReport validateGroup(const FiniteGroup& G);

/// Simplicial set with a right action: act(g) is the map x -> x.g.
struct GSpace {
  SpacePtr space;
  GroupPtr group;
  std::vector<SimplicialMap> action;

  const SimplicialMap& act(int g) const { return action[static_cast<std::size_t>(g)]; }

  /// Action given on generators; `rule(g, s)` must return the image of the
  /// nondegenerate simplex s under x -> x.g.
  static GSpace fromRule(const SpacePtr& space, const GroupPtr& group,
                         const std::function<Simplex(int, const Simplex&)>& rule);
  static GSpace trivial(const SpacePtr& space, const GroupPtr& group);
};

/// Each act(g) is a simplicial automorphism, act(e) = id and act(gh) = act(h) o act(g).
ValidationReport validateAction(const GSpace& A);

/// No non-identity element fixes a simplex of degree <= maxDim. It suffices to
/// check generators: act(g) commutes with degeneracies and EZ forms are unique.
bool isFree(const GSpace& A);

QuotientSpace orbitQuotient(const GSpace& A);

/// f o act_A(g) = act_B(g) o f for all g. Throws ValidationError if the groups or
/// spaces do not match.
bool validateEquivariant(const SimplicialMap& f, const GSpace& A, const GSpace& B);

/// Action on a pair space induced componentwise (diagonal action on products).
GSpace diagonalAction(const PairSpace& pairs, const GSpace& A, const GSpace& B);
/// Action on a pair space moving only the second coordinate.
GSpace secondFactorAction(const PairSpace& pairs, const GSpace& B);

/// G as a discrete space with right multiplication.
GSpace torsor(const GroupPtr& G, int maxDim);
/// The one-point space with trivial action.
GSpace pointSpace(const GroupPtr& G, int maxDim);
/// Two points "+" and "-" swapped by the elements outside the subgroup generated by
/// squares when that subgroup has index 2, fixed otherwise.
GSpace sphereS0(const GroupPtr& G, int maxDim);

}  // namespace borekit
