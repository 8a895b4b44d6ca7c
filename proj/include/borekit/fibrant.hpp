#pragma once

#include "borekit/nerve.hpp"
#include "borekit/simplicial.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace borekit {

/// BG^Delta1 as the nerve of the arrow category of G[1]. A degree-n simplex is a
/// bottom path g1..gn, verticals v0..vn and the top path t_i = v(i-1)^-1 g_i v_i
/// (products read left to right).
struct PathSpace {
  std::shared_ptr<const NerveSpace> nerve;
  SimplicialMap ev0, ev1;  // bottom and top paths
  SimplicialMap constant;  // BG -> path space, vertical arrows e
};

PathSpace pathSpaceBG(const std::shared_ptr<const NerveSpace>& BG);

/// Y x_BG BG^Delta1 (f against ev0) with iota(y) = (y, constant path at f(y)) and
/// Rf = ev1 o pr. Rf o iota = f holds on the nose.
struct MappingPath {
  SimplicialMap f;
  std::shared_ptr<const PairSpace> pairs;
  SimplicialMap iota;
  SimplicialMap Rf;

  const SpacePtr& space() const { return pairs->space(); }
};

/// Throws ValidationError if f does not land in the base of the path space.
MappingPath mappingPath(const SimplicialMap& f, const PathSpace& P);

/// R(u) for u: Y -> Z over BG (to.f o u = from.f): (y, path) -> (u y, path).
SimplicialMap mappingPathMap(const MappingPath& from, const MappingPath& to, const SimplicialMap& u);

struct HornWitness {
  int n = 0, k = 0;
  std::string base;                // the n-simplex of B
  std::vector<std::string> faces;  // horn faces d_i, i != k, in order
};

struct HornCheck {
  enum class Status { Pass, Fail, Exhausted };
  Status status = Status::Pass;
  std::uint64_t problems = 0;
  std::optional<HornWitness> witness;
};

std::string toString(HornCheck::Status s);

/// Enumerates every lifting problem of Lambda^n_k -> E over Delta^n -> B and looks
/// for a filler. Stops with Exhausted once more than `budget` problems were seen.
HornCheck hornFillingCheck(const SimplicialMap& p, int n, int k, std::uint64_t budget);

}  // namespace borekit
