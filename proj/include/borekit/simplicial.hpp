#pragma once

#include "borekit/errors.hpp"

#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace borekit {

using GeneratorIndex = std::int32_t;

/// Canonical degeneracy word s_{i1} ... s_{ik} with i1 > ... > ik >= 0.
///
/// Stored as a bitmask: bit j is set iff s_j occurs. For a simplex written
/// s_W(g) with W canonical, the set bits are exactly the j with the simplex in
/// the image of s_j, so two simplices have a common degeneracy iff their masks
/// intersect.
class DegeneracyWord {
 public:
  static constexpr int kMaxIndex = 31;

  constexpr DegeneracyWord() = default;
  constexpr explicit DegeneracyWord(std::uint32_t mask) : mask_(mask) {}

  /// Throws ParseError unless the indices are strictly decreasing and in range.
  static DegeneracyWord fromIndices(std::span<const int> indices);

  constexpr std::uint32_t mask() const { return mask_; }
  constexpr int length() const { return std::popcount(mask_); }
  constexpr bool empty() const { return mask_ == 0; }
  constexpr bool contains(int j) const { return (mask_ >> j) & 1u; }
  /// Largest index (the outermost operator); -1 for the empty word.
  constexpr int top() const { return mask_ == 0 ? -1 : 31 - std::countl_zero(mask_); }

  /// Indices in canonical (strictly decreasing) order.
  std::vector<int> indices() const;

  friend constexpr bool operator==(DegeneracyWord, DegeneracyWord) = default;
  friend constexpr auto operator<=>(DegeneracyWord, DegeneracyWord) = default;

 private:
  std::uint32_t mask_ = 0;
};

/// A simplex in Eilenberg-Zilber form: a degeneracy word applied to a
/// nondegenerate generator of dimension `dim - word.length()`.
struct Simplex {
  int dim = 0;
  DegeneracyWord word;
  GeneratorIndex generator = 0;

  int generatorDim() const { return dim - word.length(); }
  bool nondegenerate() const { return word.empty(); }

  friend bool operator==(const Simplex&, const Simplex&) = default;
  friend auto operator<=>(const Simplex&, const Simplex&) = default;
};

struct SimplexHash {
  std::size_t operator()(const Simplex& s) const noexcept {
    std::uint64_t h = static_cast<std::uint64_t>(static_cast<std::uint32_t>(s.generator));
    h = h * 0x9E3779B97F4A7C15ull ^ (static_cast<std::uint64_t>(s.word.mask()) << 8 | static_cast<unsigned>(s.dim));
    return static_cast<std::size_t>(h ^ (h >> 29));
  }
};

struct SimplexPairHash {
  std::size_t operator()(const std::pair<Simplex, Simplex>& p) const noexcept {
    SimplexHash h;
    return h(p.first) * 31 + h(p.second);
  }
};

/// Apply s_j and re-canonicalize using s_j s_i = s_{i+1} s_j for j <= i.
Simplex degenerate(const Simplex& s, int j);
/// Apply a whole word (innermost index first) to a simplex.
Simplex applyWord(DegeneracyWord word, const Simplex& s);

/// Truncated simplicial set presented by nondegenerate generators and face tables.
/// Immutable after construction; shared through SpacePtr.
class SimplicialSet {
 public:
  /// names[d] lists generator ids of dimension d; faces[d] holds (d+1) entries per
  /// generator of dimension d >= 1 (faces[0] is empty). Throws ValidationError if a
  /// face references a missing generator or has the wrong dimension.
  SimplicialSet(int maxDim, std::vector<std::vector<std::string>> names,
                std::vector<std::vector<Simplex>> faces);

  int maxDim() const { return maxDim_; }
  std::size_t generatorCount(int dim) const {
    return dim < 0 || dim > maxDim_ ? 0 : names_[static_cast<std::size_t>(dim)].size();
  }
  const std::string& name(int dim, GeneratorIndex g) const { return names_[dim][g]; }
  const std::vector<std::string>& names(int dim) const { return names_[dim]; }
  std::optional<std::pair<int, GeneratorIndex>> find(std::string_view name) const;
  Simplex generator(int dim, GeneratorIndex g) const { return Simplex{dim, {}, g}; }

  /// Stored face d_i of a generator.
  const Simplex& generatorFace(int dim, GeneratorIndex g, int i) const {
    return faces_[dim][static_cast<std::size_t>(g) * (dim + 1) + i];
  }

  /// d_i of any simplex, by commuting d_i through the degeneracy word.
  Simplex face(const Simplex& s, int i) const;

  /// Number of (possibly degenerate) simplices of degree n.
  std::size_t simplexCount(int n) const;
  /// Every simplex of degree n, generators ordered by dimension then index.
  void forEachSimplex(int n, const std::function<void(const Simplex&)>& fn) const;
  std::vector<Simplex> simplices(int n) const;

  /// "s1s0(v)" style rendering.
  std::string simplexName(const Simplex& s) const;

  bool contains(const Simplex& s) const;

  /// Structural equality: same truncation, ids and face tables.
  bool sameAs(const SimplicialSet& other) const;

 private:
  int maxDim_;
  std::vector<std::vector<std::string>> names_;
  std::vector<std::vector<Simplex>> faces_;
  std::unordered_map<std::string, std::pair<int, GeneratorIndex>> index_;
};

using SpacePtr = std::shared_ptr<const SimplicialSet>;

/// Incremental construction of a SimplicialSet; generators must be added in an
/// order where faces only reference existing generators.
class SimplicialSetBuilder {
 public:
  explicit SimplicialSetBuilder(int maxDim);
  GeneratorIndex add(int dim, std::string name, std::vector<Simplex> faces = {});
  std::size_t count(int dim) const { return names_[dim].size(); }
  SpacePtr build() &&;

 private:
  int maxDim_;
  std::vector<std::vector<std::string>> names_;
  std::vector<std::vector<Simplex>> faces_;
};

Simplex face(const SimplicialSet& X, const Simplex& s, int i);
Simplex degenerate(const SimplicialSet& X, const Simplex& s, int j);

/// Every violation of d_i d_j = d_{j-1} d_i (i < j) on generators.
ValidationReport validate(const SimplicialSet& X);

/// Generator-wise simplicial map. The assignment covers every source generator of
/// dimension <= min(source.maxDim, target.maxDim).
class SimplicialMap {
 public:
  SimplicialMap(SpacePtr source, SpacePtr target, std::vector<std::vector<Simplex>> assignment);

  static SimplicialMap identity(const SpacePtr& X);
  /// Build from a generator-level rule; `rule` receives nondegenerate simplices.
  static SimplicialMap fromRule(const SpacePtr& source, const SpacePtr& target,
                                const std::function<Simplex(const Simplex&)>& rule);

  const SpacePtr& source() const { return source_; }
  const SpacePtr& target() const { return target_; }
  int maxDim() const { return maxDim_; }

  const Simplex& image(int dim, GeneratorIndex g) const { return assignment_[dim][g]; }
  Simplex operator()(const Simplex& s) const;

  /// Face commutation on every generator; empty report iff simplicial.
  ValidationReport validate() const;

  friend bool operator==(const SimplicialMap& a, const SimplicialMap& b);

 private:
  SpacePtr source_, target_;
  int maxDim_;
  std::vector<std::vector<Simplex>> assignment_;
};

bool sameSpace(const SpacePtr& a, const SpacePtr& b);

/// g o f.
SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f);

/// True iff f is a degreewise bijection up to the common truncation.
bool isIsomorphism(const SimplicialMap& f);

/// Inverse of an isomorphism; throws ValidationError otherwise.
SimplicialMap inverse(const SimplicialMap& f);

/// The constant map onto a vertex.
SimplicialMap constantMap(const SpacePtr& source, const SpacePtr& target, GeneratorIndex vertex);

/// Product or pullback: degreewise pairs with lookup of arbitrary pairs.
class PairSpace {
 public:
  PairSpace(SpacePtr space, SimplicialMap first, SimplicialMap second,
            std::vector<std::unordered_map<std::pair<Simplex, Simplex>, GeneratorIndex, SimplexPairHash>> index);

  const SpacePtr& space() const { return space_; }
  const SimplicialMap& first() const { return first_; }
  const SimplicialMap& second() const { return second_; }

  /// The simplex (a, b). Throws ValidationError if the pair is not in the space.
  Simplex pair(const Simplex& a, const Simplex& b) const;
  std::optional<Simplex> tryPair(const Simplex& a, const Simplex& b) const;

 private:
  SpacePtr space_;
  SimplicialMap first_, second_;
  std::vector<std::unordered_map<std::pair<Simplex, Simplex>, GeneratorIndex, SimplexPairHash>> index_;
};

/// Split a pair of equal-degree simplices into its common degeneracy word and the
/// jointly nondegenerate pair underneath.
struct PeeledPair {
  DegeneracyWord common;
  Simplex first, second;
};
PeeledPair peelCommonDegeneracies(const Simplex& a, const Simplex& b);

PairSpace product(const SpacePtr& X, const SpacePtr& Y, int maxDim);
PairSpace product(const SpacePtr& X, const SpacePtr& Y);
/// Fiber product {(x, y) : f(x) = g(y)}; f and g must share a target.
PairSpace pullback(const SimplicialMap& f, const SimplicialMap& g, int maxDim);
PairSpace pullback(const SimplicialMap& f, const SimplicialMap& g);

/// Map into a pair space assembled from two components.
SimplicialMap pairMap(const PairSpace& target, const SimplicialMap& a, const SimplicialMap& b);

/// Generator-level identification, one pair of same-dimension generators per entry.
struct GeneratorRelation {
  struct Entry {
    int dim;
    GeneratorIndex a, b;
  };
  std::vector<Entry> pairs;
};

class QuotientSpace {
 public:
  QuotientSpace(SpacePtr space, SimplicialMap projection, std::vector<std::vector<GeneratorIndex>> classOf,
                std::vector<std::vector<GeneratorIndex>> representatives);

  const SpacePtr& space() const { return space_; }
  const SimplicialMap& projection() const { return projection_; }
  GeneratorIndex classOf(int dim, GeneratorIndex g) const { return classOf_[dim][g]; }
  const std::vector<GeneratorIndex>& representatives(int dim) const { return representatives_[dim]; }

  /// Induced map out of the quotient for a map constant on classes; throws
  /// ValidationError naming a witness otherwise.
  SimplicialMap descend(const SimplicialMap& f) const;

 private:
  SpacePtr space_;
  SimplicialMap projection_;
  std::vector<std::vector<GeneratorIndex>> classOf_;
  std::vector<std::vector<GeneratorIndex>> representatives_;
};

/// Quotient by the equivalence generated by `rel`. Throws ValidationError if the
/// relation is not compatible with faces.
QuotientSpace quotientBy(const SpacePtr& X, const GeneratorRelation& rel);

/// A standard simplex Delta^n truncated at maxDim (vertices "0".."n").
SpacePtr standardSimplex(int n, int maxDim);
/// Horn Lambda^n_k (boundary of Delta^n minus the k-th face) truncated at maxDim.
SpacePtr horn(int n, int k, int maxDim);
/// Boundary of Delta^n.
SpacePtr simplexBoundary(int n, int maxDim);
/// Discrete space on the given vertex ids.
SpacePtr discreteSpace(const std::vector<std::string>& vertices, int maxDim);

}  // namespace borekit
