#include "borekit/fibrant.hpp"

#include <unordered_map>

namespace borekit {

PathSpace pathSpaceBG(const std::shared_ptr<const NerveSpace>& BG) {
  const auto& C = *BG->category();
  auto arrows = arrowCategory(C);
  std::vector<int> bottom, top;
  for (const auto& [g, t] : arrows.squares) {
    bottom.push_back(g);
    top.push_back(t);
  }
  // Generators render as <g1,..,gn|v0,..,vn>.
  auto naming = [&](int object, const std::vector<int>& m) {
    std::string bottoms, verticals = C.morphism(object).name;
    for (std::size_t i = 0; i < m.size(); ++i) {
      bottoms += (i ? "," : "") + C.morphism(arrows.squares[m[i]].first).name;
      verticals += "," + C.morphism(arrows.category.target(m[i])).name;
    }
    return "<" + bottoms + "|" + verticals + ">";
  };
  auto nerve = std::make_shared<const NerveSpace>(std::make_shared<const FiniteCategory>(arrows.category), BG->maxDim(),
                                                  naming);
  std::vector<int> sourceObjects, targetObjects;
  for (int v = 0; v < C.morphismCount(); ++v) {
    sourceObjects.push_back(C.source(v));
    targetObjects.push_back(C.target(v));
  }
  std::vector<int> identities;
  for (int o = 0; o < C.objectCount(); ++o) identities.push_back(C.identity(o));
  return PathSpace{nerve, nerveMap(*nerve, *BG, sourceObjects, bottom), nerveMap(*nerve, *BG, targetObjects, top),
                   nerveMap(*BG, *nerve, identities, arrows.constant)};
}

MappingPath mappingPath(const SimplicialMap& f, const PathSpace& P) {
  if (!sameSpace(f.target(), P.ev0.target())) throw ValidationError("mapping path: map does not land in BG");
  const int N = std::min(f.maxDim(), P.ev0.maxDim());
  auto pairs = std::make_shared<const PairSpace>(pullback(f, P.ev0, N));
  auto iota = pairMap(*pairs, SimplicialMap::identity(f.source()), compose(P.constant, f));
  auto Rf = compose(P.ev1, pairs->second());
  return MappingPath{f, std::move(pairs), std::move(iota), std::move(Rf)};
}

SimplicialMap mappingPathMap(const MappingPath& from, const MappingPath& to, const SimplicialMap& u) {
  if (!(compose(to.f, u) == from.f)) throw ValidationError("R(u): map is not over BG");
  const auto& P = *from.pairs;
  return SimplicialMap::fromRule(from.space(), to.space(), [&](const Simplex& s) {
    return to.pairs->pair(u(P.first()(s)), P.second()(s));
  });
}

std::string toString(HornCheck::Status s) {
  switch (s) {
    case HornCheck::Status::Pass: return "pass";
    case HornCheck::Status::Fail: return "fail";
    case HornCheck::Status::Exhausted: return "exhausted";
  }
  return "exhausted";
}

HornCheck hornFillingCheck(const SimplicialMap& p, int n, int k, std::uint64_t budget) {
  if (n < 1 || n > p.maxDim()) throw RangeError("horn dimension outside the map's truncation");
  if (k < 0 || k > n) throw RangeError("horn index out of range");
  const auto& E = *p.source();
  const auto& B = *p.target();

  std::unordered_map<Simplex, std::vector<Simplex>, SimplexHash> lower, upper;
  E.forEachSimplex(n - 1, [&](const Simplex& x) { lower[p(x)].push_back(x); });
  E.forEachSimplex(n, [&](const Simplex& e) { upper[p(e)].push_back(e); });
  const std::vector<Simplex> none;
  auto fiber = [&](const auto& table, const Simplex& b) -> const std::vector<Simplex>& {
    auto it = table.find(b);
    return it == table.end() ? none : it->second;
  };

  HornCheck out;
  std::vector<int> slots;
  for (int i = 0; i <= n; ++i)
    if (i != k) slots.push_back(i);
  std::vector<Simplex> chosen(static_cast<std::size_t>(n) + 1);

  std::vector<Simplex> bases = B.simplices(n);
  for (const auto& b : bases) {
    std::vector<const std::vector<Simplex>*> candidates(static_cast<std::size_t>(n) + 1);
    for (int i : slots) candidates[i] = &fiber(lower, B.face(b, i));
    // Depth-first over compatible horns: d_a x_c = d_(c-1) x_a for a < c.
    bool stop = false;
    auto solve = [&](auto&& self, std::size_t depth) -> void {
      if (stop) return;
      if (depth == slots.size()) {
        if (++out.problems > budget) {
          out.status = HornCheck::Status::Exhausted;
          stop = true;
          return;
        }
        for (const auto& e : fiber(upper, b)) {
          bool ok = true;
          for (int i : slots)
            if (E.face(e, i) != chosen[i]) {
              ok = false;
              break;
            }
          if (ok) return;
        }
        HornWitness w{n, k, B.simplexName(b), {}};
        for (int i : slots) w.faces.push_back(E.simplexName(chosen[i]));
        out.status = HornCheck::Status::Fail;
        out.witness = std::move(w);
        stop = true;
        return;
      }
      const int c = slots[depth];
      for (const auto& x : *candidates[c]) {
        bool ok = true;
        for (std::size_t prev = 0; prev < depth && ok; ++prev) {
          const int a = slots[prev];
          if (n >= 2 && E.face(x, a) != E.face(chosen[a], c - 1)) ok = false;
        }
        if (!ok) continue;
        chosen[c] = x;
        self(self, depth + 1);
        if (stop) return;
      }
    };
    solve(solve, 0);
    if (stop) return out;
  }
  return out;
}

}  // namespace borekit
