#include "borekit/category.hpp"

#include <array>
#include <map>

namespace borekit {

FiniteCategory::FiniteCategory(std::vector<std::string> objects, std::vector<Morphism> morphisms,
                               std::vector<int> identities, std::vector<int> composition)
    : objects_(std::move(objects)),
      morphisms_(std::move(morphisms)),
      identities_(std::move(identities)),
      composition_(std::move(composition)) {
  const auto nObj = objects_.size(), nMor = morphisms_.size();
  if (identities_.size() != nObj) throw ParseError("category: one identity per object required");
  if (composition_.size() != nMor * nMor) throw ParseError("category: composition table has wrong size");
  for (const auto& m : morphisms_)
    if (m.source < 0 || m.target < 0 || static_cast<std::size_t>(m.source) >= nObj ||
        static_cast<std::size_t>(m.target) >= nObj)
      throw ParseError("category: morphism '" + m.name + "' has an unknown endpoint");
  for (int id : identities_)
    if (id < 0 || static_cast<std::size_t>(id) >= nMor) throw ParseError("category: identity out of range");
  for (int c : composition_)
    if (c < -1 || c >= static_cast<int>(nMor)) throw ParseError("category: composite out of range");
  outgoing_.resize(nObj);
  for (int f = 0; f < static_cast<int>(nMor); ++f)
    if (!isIdentity(f)) outgoing_[morphisms_[f].source].push_back(f);
}

std::vector<int> FiniteCategory::hom(int from, int to) const {
  std::vector<int> out;
  for (int f = 0; f < morphismCount(); ++f)
    if (source(f) == from && target(f) == to) out.push_back(f);
  return out;
}

std::optional<int> FiniteCategory::findObject(std::string_view name) const {
  for (int o = 0; o < objectCount(); ++o)
    if (objects_[o] == name) return o;
  return std::nullopt;
}

std::optional<int> FiniteCategory::findMorphism(std::string_view name) const {
  for (int f = 0; f < morphismCount(); ++f)
    if (morphisms_[f].name == name) return f;
  return std::nullopt;
}

ValidationReport validateCategory(const FiniteCategory& C) {
  ValidationReport report;
  const int n = C.morphismCount();
  for (int o = 0; o < C.objectCount(); ++o) {
    const int id = C.identity(o);
    if (C.source(id) != o || C.target(id) != o) report.add("identity of " + C.objectName(o) + " is not an endomorphism");
  }
  for (int f = 0; f < n; ++f)
    for (int g = 0; g < n; ++g) {
      const int fg = C.then(f, g);
      const bool composable = C.target(f) == C.source(g);
      if (composable != (fg >= 0)) {
        report.add("composite of " + C.morphism(f).name + " then " + C.morphism(g).name +
                   (composable ? " is missing" : " is defined for non-composable arrows"));
        continue;
      }
      if (fg >= 0 && (C.source(fg) != C.source(f) || C.target(fg) != C.target(g)))
        report.add("composite of " + C.morphism(f).name + " then " + C.morphism(g).name + " has wrong endpoints");
    }
  if (!report.ok()) return report;
  for (int f = 0; f < n; ++f) {
    if (C.then(C.identity(C.source(f)), f) != f || C.then(f, C.identity(C.target(f))) != f)
      report.add("identity law fails for " + C.morphism(f).name);
  }
  for (int f = 0; f < n; ++f)
    for (int g = 0; g < n; ++g) {
      const int fg = C.then(f, g);
      if (fg < 0) continue;
      for (int h = 0; h < n; ++h) {
        const int gh = C.then(g, h);
        if (gh < 0) continue;
        if (C.then(fg, h) != C.then(f, gh))
          report.add("associativity fails on " + C.morphism(f).name + ", " + C.morphism(g).name + ", " +
                     C.morphism(h).name);
      }
    }
  return report;
}

ValidationReport validateFunctor(const Functor& F) {
  ValidationReport report;
  const auto& A = *F.source;
  const auto& B = *F.target;
  if (static_cast<int>(F.objects.size()) != A.objectCount() || static_cast<int>(F.morphisms.size()) != A.morphismCount()) {
    report.add("functor tables have wrong size");
    return report;
  }
  for (int f = 0; f < A.morphismCount(); ++f) {
    const int Ff = F.morphisms[f];
    if (Ff < 0 || Ff >= B.morphismCount()) {
      report.add("image of " + A.morphism(f).name + " out of range");
      continue;
    }
    if (B.source(Ff) != F.objects[A.source(f)] || B.target(Ff) != F.objects[A.target(f)])
      report.add("image of " + A.morphism(f).name + " has wrong endpoints");
  }
  if (!report.ok()) return report;
  for (int o = 0; o < A.objectCount(); ++o)
    if (F.morphisms[A.identity(o)] != B.identity(F.objects[o]))
      report.add("identity of " + A.objectName(o) + " not preserved");
  for (int f = 0; f < A.morphismCount(); ++f)
    for (int g = 0; g < A.morphismCount(); ++g) {
      const int fg = A.then(f, g);
      if (fg >= 0 && F.morphisms[fg] != B.then(F.morphisms[f], F.morphisms[g]))
        report.add("composition of " + A.morphism(f).name + " then " + A.morphism(g).name + " not preserved");
    }
  return report;
}

FiniteCategory posetCategory(const std::vector<std::string>& names, const std::vector<std::vector<bool>>& leq) {
  const int n = static_cast<int>(names.size());
  std::vector<FiniteCategory::Morphism> morphisms;
  std::vector<std::vector<int>> index(n, std::vector<int>(n, -1));
  std::vector<int> identities(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (leq[i][j]) {
        index[i][j] = static_cast<int>(morphisms.size());
        morphisms.push_back({i, j, i == j ? "id_" + names[i] : names[i] + "->" + names[j]});
      }
  for (int i = 0; i < n; ++i) identities[i] = index[i][i];
  const auto m = morphisms.size();
  std::vector<int> composition(m * m, -1);
  for (std::size_t f = 0; f < m; ++f)
    for (std::size_t g = 0; g < m; ++g)
      if (morphisms[f].target == morphisms[g].source)
        composition[f * m + g] = index[morphisms[f].source][morphisms[g].target];
  return FiniteCategory(names, std::move(morphisms), std::move(identities), std::move(composition));
}

FiniteCategory intervalCategory() { return posetCategory({"0", "1"}, {{true, true}, {false, true}}); }

FiniteCategory productCategory(const FiniteCategory& A, const FiniteCategory& B) {
  const int oa = A.objectCount(), ob = B.objectCount();
  const int ma = A.morphismCount(), mb = B.morphismCount();
  std::vector<std::string> objects;
  for (int x = 0; x < oa; ++x)
    for (int y = 0; y < ob; ++y) objects.push_back("(" + A.objectName(x) + "," + B.objectName(y) + ")");
  std::vector<FiniteCategory::Morphism> morphisms;
  for (int f = 0; f < ma; ++f)
    for (int a = 0; a < mb; ++a)
      morphisms.push_back({A.source(f) * ob + B.source(a), A.target(f) * ob + B.target(a),
                           "(" + A.morphism(f).name + "," + B.morphism(a).name + ")"});
  std::vector<int> identities;
  for (int x = 0; x < oa; ++x)
    for (int y = 0; y < ob; ++y) identities.push_back(A.identity(x) * mb + B.identity(y));
  const auto m = morphisms.size();
  std::vector<int> composition(m * m, -1);
  for (int f = 0; f < ma; ++f)
    for (int a = 0; a < mb; ++a)
      for (int g = 0; g < ma; ++g)
        for (int b = 0; b < mb; ++b) {
          const int fg = A.then(f, g), ab = B.then(a, b);
          if (fg >= 0 && ab >= 0)
            composition[static_cast<std::size_t>(f * mb + a) * m + static_cast<std::size_t>(g * mb + b)] = fg * mb + ab;
        }
  return FiniteCategory(std::move(objects), std::move(morphisms), std::move(identities), std::move(composition));
}

ArrowCategory arrowCategory(const FiniteCategory& C) {
  const int n = C.morphismCount();
  std::vector<std::string> objects;
  for (int v = 0; v < n; ++v) objects.push_back(C.morphism(v).name);
  ArrowCategory out;
  std::vector<FiniteCategory::Morphism> morphisms;
  std::map<std::array<int, 4>, int> index;  // (v, w, g, t) -> morphism
  for (int v = 0; v < n; ++v)
    for (int w = 0; w < n; ++w)
      for (int g : C.hom(C.source(v), C.source(w)))
        for (int t : C.hom(C.target(v), C.target(w))) {
          if (C.then(v, t) != C.then(g, w)) continue;
          index[{v, w, g, t}] = static_cast<int>(morphisms.size());
          morphisms.push_back({v, w,
                               "(" + C.morphism(v).name + "," + C.morphism(w).name + ";" + C.morphism(g).name + "," +
                                   C.morphism(t).name + ")"});
          out.squares.emplace_back(g, t);
        }
  std::vector<int> identities;
  for (int v = 0; v < n; ++v) identities.push_back(index.at({v, v, C.identity(C.source(v)), C.identity(C.target(v))}));
  const auto m = morphisms.size();
  std::vector<int> composition(m * m, -1);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      if (morphisms[a].target != morphisms[b].source) continue;
      const int g = C.then(out.squares[a].first, out.squares[b].first);
      const int t = C.then(out.squares[a].second, out.squares[b].second);
      composition[a * m + b] = index.at({morphisms[a].source, morphisms[b].target, g, t});
    }
  for (int f = 0; f < n; ++f) {
    const int ida = C.identity(C.source(f)), idb = C.identity(C.target(f));
    out.constant.push_back(index.at({ida, idb, f, f}));
  }
  out.category = FiniteCategory(std::move(objects), std::move(morphisms), std::move(identities), std::move(composition));
  return out;
}

}  // namespace borekit
