#include "borekit/zigzag.hpp"
#include "borekit/union_find.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace borekit {

ValidationReport validateRelativeCategory(const RelativeCategory& R) {
  ValidationReport report = validateCategory(R.cat);
  if (static_cast<int>(R.weak.size()) != R.cat.morphismCount()) {
    report.add("weak-map list must have one entry per morphism");
    return report;
  }
  for (int o = 0; o < R.cat.objectCount(); ++o)
    if (!R.isWeak(R.cat.identity(o))) report.add("identity of " + R.cat.objectName(o) + " is not weak");
  for (int f = 0; f < R.cat.morphismCount(); ++f)
    for (int g = 0; g < R.cat.morphismCount(); ++g) {
      const int fg = R.cat.then(f, g);
      if (fg >= 0 && R.isWeak(f) && R.isWeak(g) && !R.isWeak(fg))
        report.add("weak maps not closed under composition: " + R.cat.morphism(f).name + " then " +
                   R.cat.morphism(g).name);
    }
  return report;
}

namespace {

int stepStart(const FiniteCategory& C, const ZigzagStep& s) {
  return s.forward ? C.source(s.morphism) : C.target(s.morphism);
}
int stepEnd(const FiniteCategory& C, const ZigzagStep& s) {
  return s.forward ? C.target(s.morphism) : C.source(s.morphism);
}
// Object reached after the first p steps.
int objectAt(const FiniteCategory& C, const Zigzag& z, std::size_t p) {
  return p == 0 ? z.from : stepEnd(C, z.steps[p - 1]);
}

Zigzag replaceRange(const Zigzag& z, std::size_t pos, std::size_t count, std::vector<ZigzagStep> with) {
  Zigzag out{z.from, z.to, {}};
  out.steps.reserve(z.steps.size() - count + with.size());
  out.steps.insert(out.steps.end(), z.steps.begin(), z.steps.begin() + static_cast<std::ptrdiff_t>(pos));
  out.steps.insert(out.steps.end(), with.begin(), with.end());
  out.steps.insert(out.steps.end(), z.steps.begin() + static_cast<std::ptrdiff_t>(pos + count), z.steps.end());
  return out;
}

}  // namespace

ValidationReport validateZigzag(const RelativeCategory& R, const Zigzag& z) {
  ValidationReport report;
  const auto& C = R.cat;
  int at = z.from;
  for (std::size_t p = 0; p < z.steps.size(); ++p) {
    const auto& s = z.steps[p];
    if (s.morphism < 0 || s.morphism >= C.morphismCount()) {
      report.add("step " + std::to_string(p) + " names an unknown morphism");
      return report;
    }
    if (stepStart(C, s) != at) report.add("step " + std::to_string(p) + " does not start where the previous ended");
    if (!s.forward && !R.isWeak(s.morphism))
      report.add("backward step " + std::to_string(p) + " (" + C.morphism(s.morphism).name + ") is not weak");
    at = stepEnd(C, s);
  }
  if (at != z.to) report.add("zigzag does not end at its target");
  return report;
}

std::string toString(const RelativeCategory& R, const Zigzag& z) {
  std::string out = R.cat.objectName(z.from);
  for (const auto& s : z.steps)
    out += (s.forward ? " -" : " <-") + R.cat.morphism(s.morphism).name + (s.forward ? "-> " : "- ") +
           R.cat.objectName(stepEnd(R.cat, s));
  return out;
}

std::string toString(ReductionRule r) {
  switch (r) {
    case ReductionRule::DropIdentity: return "drop-identity";
    case ReductionRule::Compose: return "compose";
    case ReductionRule::Cancel: return "cancel";
  }
  return "drop-identity";
}

std::optional<Reduction> reduceOnce(const RelativeCategory& R, const Zigzag& z, std::size_t position) {
  const auto& C = R.cat;
  if (position >= z.steps.size()) return std::nullopt;
  const auto& a = z.steps[position];
  if (C.isIdentity(a.morphism)) return Reduction{ReductionRule::DropIdentity, position, replaceRange(z, position, 1, {})};
  if (position + 1 >= z.steps.size()) return std::nullopt;
  const auto& b = z.steps[position + 1];
  if (a.forward == b.forward) {
    const int c = a.forward ? C.then(a.morphism, b.morphism) : C.then(b.morphism, a.morphism);
    return Reduction{ReductionRule::Compose, position, replaceRange(z, position, 2, {{c, a.forward}})};
  }
  if (a.morphism == b.morphism) return Reduction{ReductionRule::Cancel, position, replaceRange(z, position, 2, {})};
  return std::nullopt;
}

std::vector<Reduction> reductions(const RelativeCategory& R, const Zigzag& z) {
  std::vector<Reduction> out;
  for (std::size_t p = 0; p < z.steps.size(); ++p) {
    const auto& C = R.cat;
    const auto& a = z.steps[p];
    // Every rule that applies here, not only the first.
    if (C.isIdentity(a.morphism)) out.push_back({ReductionRule::DropIdentity, p, replaceRange(z, p, 1, {})});
    if (p + 1 < z.steps.size()) {
      const auto& b = z.steps[p + 1];
      if (a.forward == b.forward) {
        const int c = a.forward ? C.then(a.morphism, b.morphism) : C.then(b.morphism, a.morphism);
        out.push_back({ReductionRule::Compose, p, replaceRange(z, p, 2, {{c, a.forward}})});
      } else if (a.morphism == b.morphism) {
        out.push_back({ReductionRule::Cancel, p, replaceRange(z, p, 2, {})});
      }
    }
  }
  return out;
}

std::vector<Zigzag> expansions(const RelativeCategory& R, const Zigzag& z, std::size_t maxLength) {
  const auto& C = R.cat;
  std::vector<Zigzag> out;
  const std::size_t n = z.steps.size();
  if (n + 1 <= maxLength) {
    for (std::size_t p = 0; p <= n; ++p) {
      const int id = C.identity(objectAt(C, z, p));
      out.push_back(replaceRange(z, p, 0, {{id, true}}));
      out.push_back(replaceRange(z, p, 0, {{id, false}}));
    }
    for (std::size_t p = 0; p < n; ++p) {
      const auto& s = z.steps[p];
      for (int a = 0; a < C.morphismCount(); ++a)
        for (int b = 0; b < C.morphismCount(); ++b) {
          if (s.forward && C.then(a, b) == s.morphism) out.push_back(replaceRange(z, p, 1, {{a, true}, {b, true}}));
          if (!s.forward && R.isWeak(a) && R.isWeak(b) && C.then(b, a) == s.morphism)
            out.push_back(replaceRange(z, p, 1, {{a, false}, {b, false}}));
        }
    }
  }
  if (n + 2 <= maxLength) {
    for (std::size_t p = 0; p <= n; ++p) {
      const int at = objectAt(C, z, p);
      for (int f = 0; f < C.morphismCount(); ++f) {
        if (!R.isWeak(f)) continue;
        if (C.source(f) == at) out.push_back(replaceRange(z, p, 0, {{f, true}, {f, false}}));
        if (C.target(f) == at) out.push_back(replaceRange(z, p, 0, {{f, false}, {f, true}}));
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

NormalForm normalForm(const RelativeCategory& R, const Zigzag& z) {
  NormalForm nf{z, {}};
  for (;;) {
    std::optional<Reduction> step;
    for (std::size_t p = 0; p < nf.result.steps.size() && !step; ++p) step = reduceOnce(R, nf.result, p);
    if (!step) return nf;
    nf.result = step->result;
    nf.trace.push_back(std::move(*step));
  }
}

EquivalenceResult equivalentZigzags(const RelativeCategory& R, const Zigzag& z1, const Zigzag& z2,
                                    const SearchBudget& budget) {
  if (z1.from != z2.from || z1.to != z2.to) throw ValidationError("zigzags have different endpoints");
  const std::size_t cap = budget.maxLength ? budget.maxLength : std::max(z1.length(), z2.length()) + 2;
  EquivalenceResult out;
  using Parents = std::map<Zigzag, std::optional<Zigzag>>;
  Parents side[2];
  std::deque<Zigzag> frontier[2];
  side[0].emplace(z1, std::nullopt);
  side[1].emplace(z2, std::nullopt);
  frontier[0].push_back(z1);
  frontier[1].push_back(z2);
  out.states = z1 == z2 ? 1 : 2;

  auto trace = [](const Parents& parents, Zigzag z) {
    std::vector<Zigzag> path{z};
    while (auto p = parents.at(z)) {
      z = *p;
      path.push_back(z);
    }
    return path;
  };
  auto finish = [&](const Zigzag& meet) {
    auto a = trace(side[0], meet);
    std::reverse(a.begin(), a.end());
    auto b = trace(side[1], meet);
    a.insert(a.end(), b.begin() + 1, b.end());
    out.equivalent = true;
    out.path = std::move(a);
  };
  if (z1 == z2) {
    finish(z1);
    return out;
  }
  while (!frontier[0].empty() && !frontier[1].empty()) {
    const int s = frontier[0].size() <= frontier[1].size() ? 0 : 1;
    std::deque<Zigzag> next;
    for (const auto& z : frontier[s]) {
      std::vector<Zigzag> neighbours = expansions(R, z, cap);
      for (auto& r : reductions(R, z)) neighbours.push_back(std::move(r.result));
      for (auto& y : neighbours) {
        if (side[s].count(y)) continue;
        side[s].emplace(y, z);
        if (side[1 - s].count(y)) {
          finish(y);
          return out;
        }
        if (++out.states > budget.maxStates) {
          out.exhausted = true;
          return out;
        }
        next.push_back(std::move(y));
      }
    }
    frontier[s] = std::move(next);
  }
  return out;
}

std::vector<Zigzag> enumerateZigzags(const RelativeCategory& R, int from, int to, std::size_t maxLen) {
  const auto& C = R.cat;
  std::vector<Zigzag> out;
  Zigzag current{from, to, {}};
  auto walk = [&](auto&& self, int at) -> void {
    if (at == to) out.push_back(current);
    if (current.steps.size() == maxLen) return;
    for (int f = 0; f < C.morphismCount(); ++f) {
      if (C.source(f) == at) {
        current.steps.push_back({f, true});
        self(self, C.target(f));
        current.steps.pop_back();
      }
      if (C.target(f) == at && R.isWeak(f)) {
        current.steps.push_back({f, false});
        self(self, C.source(f));
        current.steps.pop_back();
      }
    }
  };
  walk(walk, from);
  return out;
}

HomSet homSet(const RelativeCategory& R, int from, int to, std::size_t maxLen) {
  auto all = enumerateZigzags(R, from, to, maxLen);
  std::map<Zigzag, std::size_t> index;
  for (std::size_t i = 0; i < all.size(); ++i) index.emplace(all[i], i);
  UnionFind uf(all.size());
  for (std::size_t i = 0; i < all.size(); ++i)
    for (const auto& r : reductions(R, all[i])) uf.unite(i, index.at(r.result));
  auto labels = uf.labels();
  const int classes = all.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
  std::vector<std::optional<std::size_t>> best(static_cast<std::size_t>(classes));
  std::vector<std::size_t> sizes(static_cast<std::size_t>(classes), 0);
  for (std::size_t i = 0; i < all.size(); ++i) {
    auto& b = best[labels[i]];
    ++sizes[labels[i]];
    if (!b || all[i].length() < all[*b].length() || (all[i].length() == all[*b].length() && all[i] < all[*b])) b = i;
  }
  HomSet out;
  out.maxLen = maxLen;
  out.enumerated = all.size();
  for (int c = 0; c < classes; ++c) {
    out.representatives.push_back(normalForm(R, all[*best[c]]).result);
    out.classSizes.push_back(sizes[c]);
  }
  return out;
}

ValidationReport validateRelativeFunctor(const RelativeFunctor& F) {
  ValidationReport report = validateFunctor(Functor{&F.source->cat, &F.target->cat, F.objects, F.morphisms});
  if (!report.ok()) return report;
  for (int f = 0; f < F.source->cat.morphismCount(); ++f)
    if (F.source->isWeak(f) && !F.target->isWeak(F.morphisms[f]))
      report.add("weak map " + F.source->cat.morphism(f).name + " sent to a non-weak map");
  return report;
}

RelativeCategory homotopyCylinder(const RelativeCategory& C) {
  RelativeCategory out{productCategory(C.cat, intervalCategory()), {}};
  for (int f = 0; f < C.cat.morphismCount(); ++f)
    for (int a = 0; a < 3; ++a) out.weak.push_back(C.isWeak(f));
  return out;
}

ValidationReport strictHomotopyCheck(const RelativeFunctor& F, const RelativeFunctor& G, const RelativeFunctor& H) {
  const auto& C = F.source->cat;
  const auto& D = F.target->cat;
  if (G.source != F.source || G.target != F.target || H.target != F.target ||
      H.source->cat.objectCount() != 2 * C.objectCount() || H.source->cat.morphismCount() != 3 * C.morphismCount())
    throw ValidationError("strict homotopy: functors do not share a shape");
  ValidationReport report;
  report.merge(validateRelativeFunctor(H), "H: ");
  if (!report.ok()) return report;
  for (int x = 0; x < C.objectCount(); ++x) {
    if (H.objects[2 * x] != F.objects[x]) report.add("H(" + C.objectName(x) + ",0) != F(" + C.objectName(x) + ")");
    if (H.objects[2 * x + 1] != G.objects[x]) report.add("H(" + C.objectName(x) + ",1) != G(" + C.objectName(x) + ")");
    const int arrow = H.morphisms[3 * C.identity(x) + 1];
    if (!F.target->isWeak(arrow))
      report.add("H(" + C.objectName(x) + ", 0->1) = " + D.morphism(arrow).name + " is not weak");
  }
  for (int f = 0; f < C.morphismCount(); ++f) {
    if (H.morphisms[3 * f] != F.morphisms[f]) report.add("H(" + C.morphism(f).name + ", id_0) != F");
    if (H.morphisms[3 * f + 2] != G.morphisms[f]) report.add("H(" + C.morphism(f).name + ", id_1) != G");
    const int x = C.source(f), y = C.target(f);
    const int left = D.then(H.morphisms[3 * f], H.morphisms[3 * C.identity(y) + 1]);
    const int right = D.then(H.morphisms[3 * C.identity(x) + 1], H.morphisms[3 * f + 2]);
    if (left != right) report.add("naturality square of " + C.morphism(f).name + " does not commute");
  }
  return report;
}

std::optional<int> MapCategory::find(const SimplicialMap& f) const {
  for (std::size_t i = 0; i < maps.size(); ++i)
    if (maps[i] == f) return static_cast<int>(i);
  return std::nullopt;
}

MapCategory mapCategory(const std::vector<SpacePtr>& objects, const std::vector<SimplicialMap>& generators,
                        const std::function<bool(const SimplicialMap&)>& isWeak, std::size_t maxMorphisms) {
  auto objectOf = [&](const SpacePtr& X) {
    for (std::size_t o = 0; o < objects.size(); ++o)
      if (objects[o] == X) return static_cast<int>(o);
    for (std::size_t o = 0; o < objects.size(); ++o)
      if (sameSpace(objects[o], X)) return static_cast<int>(o);
    throw ValidationError("map category: a map leaves the listed objects");
  };
  MapCategory out;
  out.objects = objects;
  std::vector<FiniteCategory::Morphism> morphisms;
  std::vector<int> identities;
  auto add = [&](const SimplicialMap& f, std::string name) {
    if (auto i = out.find(f)) return *i;
    if (out.maps.size() >= maxMorphisms) throw RangeError("map category exceeds the morphism limit");
    out.maps.push_back(f);
    morphisms.push_back({objectOf(f.source()), objectOf(f.target()), std::move(name)});
    return static_cast<int>(out.maps.size() - 1);
  };
  for (std::size_t o = 0; o < objects.size(); ++o)
    identities.push_back(add(SimplicialMap::identity(objects[o]), "id" + std::to_string(o)));
  for (std::size_t g = 0; g < generators.size(); ++g) add(generators[g], "m" + std::to_string(out.maps.size()));
  for (std::size_t known = 0; known != out.maps.size();) {
    known = out.maps.size();
    for (std::size_t a = 0; a < known; ++a)
      for (std::size_t b = 0; b < known; ++b)
        if (morphisms[a].target == morphisms[b].source)
          add(compose(out.maps[b], out.maps[a]), "m" + std::to_string(out.maps.size()));
  }
  const auto m = out.maps.size();
  std::vector<int> composition(m * m, -1);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      if (morphisms[a].target == morphisms[b].source)
        composition[a * m + b] = *out.find(compose(out.maps[b], out.maps[a]));
  std::vector<std::string> names;
  for (std::size_t o = 0; o < objects.size(); ++o) names.push_back("X" + std::to_string(o));
  out.relative.cat = FiniteCategory(std::move(names), std::move(morphisms), std::move(identities), std::move(composition));
  for (const auto& f : out.maps) out.relative.weak.push_back(isWeak(f));
  return out;
}

}  // namespace borekit
