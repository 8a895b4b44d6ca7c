#pragma once

#include "borekit/group.hpp"
#include "borekit/integer.hpp"
#include "borekit/simplicial.hpp"

#include <Eigen/SparseCore>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace borekit {

using SparseBoundary = Eigen::SparseMatrix<std::int64_t, Eigen::ColMajor>;

/// Normalized chains: basis of C_n = nondegenerate n-simplices, boundaries[n] is
/// C_n -> C_(n-1) (boundaries[0] has zero rows).
struct ChainComplex {
  std::vector<Eigen::Index> ranks;
  std::vector<SparseBoundary> boundaries;

  int topDegree() const { return static_cast<int>(ranks.size()) - 1; }
};

/// Chains of X in degrees 0..topDegree (defaults to X.maxDim). Throws ValidationError
/// if the boundary does not square to zero.
ChainComplex normalizedChains(const SimplicialSet& X, int topDegree);
ChainComplex normalizedChains(const SimplicialSet& X);

/// Every degree n with boundaries[n-1] * boundaries[n] != 0.
std::vector<int> boundarySquareViolations(const ChainComplex& C);

/// Rank and invariant factors (> 1) of an integer matrix.
struct MatrixInvariants {
  Eigen::Index rank = 0;
  std::vector<Integer> torsion;
};

/// Unit-pivot sparse elimination followed by a dense Smith form of the residual.
/// Runs in checked 64-bit arithmetic and redoes the work exactly on overflow.
MatrixInvariants sparseInvariants(const SparseBoundary& M);

struct HomologyGroup {
  Eigen::Index betti = 0;
  std::vector<Integer> torsion;

  friend bool operator==(const HomologyGroup&, const HomologyGroup&) = default;
};

std::string toString(const HomologyGroup& H);

/// H_n for n <= topDegree - 1. Throws RangeError above that.
HomologyGroup homology(const ChainComplex& C, int n);
/// H_0 .. H_d, sharing the invariants of each boundary.
std::vector<HomologyGroup> homologyUpTo(const ChainComplex& C, int d);

/// Matrix of the chain map C_n(X) -> C_n(Y) (degenerate images contribute 0).
SparseBoundary chainMap(const SimplicialMap& f, int n);

/// Induced map on H_n in the Smith bases of both sides. Columns and rows list
/// torsion summands first, then free ones; torsion coordinates are reduced.
struct InducedMap {
  HomologyGroup source, target;
  IntegerMatrix matrix;
  bool isomorphism = false;
};

/// Dense computation; throws RangeError if a chain group in degrees n-1..n+1 exceeds
/// `denseLimit` generators.
InducedMap inducedHomologyMap(const SimplicialMap& f, int n, Eigen::Index denseLimit = 1500);

struct Components {
  int count = 0;
  std::vector<int> label;  // per vertex generator
};
Components pi0(const SimplicialSet& X);
bool pi0Bijective(const SimplicialMap& f);

/// Edge-path group presentation: generators are the nondegenerate edges outside a
/// spanning tree, one relation d2 d0 d1^-1 per nondegenerate 2-simplex.
struct GroupPresentation {
  std::vector<std::string> generators;
  std::vector<std::vector<std::pair<int, int>>> relations;  // (generator, exponent) words
};
/// Throws ValidationError if X is disconnected, RangeError if maxDim < 2.
GroupPresentation edgePathGroup(const SimplicialSet& X, GeneratorIndex basepoint);

struct AbelianInvariants {
  Eigen::Index freeRank = 0;
  std::vector<Integer> torsion;
};
AbelianInvariants abelianizedInvariants(const GroupPresentation& P);

/// Necessary conditions for a weak equivalence up to a degree bound: pi0 bijection
/// and H_n isomorphisms for n <= d. This is not a proof of weak equivalence.
struct Certificate {
  enum class Status { Iso, NotIso, Undetermined };
  struct Degree {
    int degree = 0;
    Status status = Status::Undetermined;
    HomologyGroup source, target;
  };
  struct SideCondition {
    std::string name;
    bool ok = false;
    std::string witness;
  };

  int degreeBound = 0;
  bool pi0Bijective = false;
  std::vector<Degree> degrees;
  std::optional<SideCondition> side;
  bool verdict = false;
};

std::string toString(Certificate::Status s);

/// Requires d <= min(source.maxDim, target.maxDim, f.maxDim) - 1. Degrees are
/// decided through the mapping cone: with all lower degrees iso, H_n(f) is iso iff
/// H_n(cone) = 0 and H_n(X) and H_n(Y) are isomorphic groups.
Certificate weakEquivalenceCertificate(const SimplicialMap& f, int d);
/// Adds equivariance as the side condition.
Certificate omegaCertificate(const SimplicialMap& f, const GSpace& A, const GSpace& B, int d);
/// u: Y -> Z over BG with structure maps p: Y -> BG, q: Z -> BG; side condition q u = p.
Certificate sigmaCertificate(const SimplicialMap& u, const SimplicialMap& p, const SimplicialMap& q, int d);

}  // namespace borekit
