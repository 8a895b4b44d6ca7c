#include "borekit/nerve.hpp"

namespace borekit {

std::size_t NerveSpace::StringHash::operator()(const std::vector<int>& v) const noexcept {
  std::size_t h = v.size();
  for (int x : v) h = h * 1000003u ^ static_cast<std::size_t>(x);
  return h;
}

NerveSpace::NerveSpace(CategoryPtr category, int maxDim, const Naming& naming) : category_(std::move(category)) {
  const auto& C = *category_;
  if (auto report = validateCategory(C); !report.ok())
    throw ValidationError("nerve of an invalid category: " + report.violations.front());
  if (maxDim < 0) throw RangeError("nerve: maxDim must be nonnegative");
  strings_.resize(static_cast<std::size_t>(maxDim) + 1);
  index_.resize(static_cast<std::size_t>(maxDim) + 1);
  auto nameOf = [&](int object, const std::vector<int>& m) {
    if (naming) return naming(object, m);
    if (m.empty()) return C.objectName(object);
    std::string out = "[";
    for (std::size_t i = 0; i < m.size(); ++i) out += (i ? "|" : "") + C.morphism(m[i]).name;
    return out + "]";
  };

  SimplicialSetBuilder builder(maxDim);
  for (int o = 0; o < C.objectCount(); ++o) {
    builder.add(0, nameOf(o, {}));
    strings_[0].emplace_back();
  }
  for (int d = 1; d <= maxDim; ++d) {
    std::vector<std::vector<int>> next;
    if (d == 1) {
      for (int o = 0; o < C.objectCount(); ++o)
        for (int f : C.outgoing(o)) next.push_back({f});
    } else {
      for (const auto& s : strings_[d - 1])
        for (int f : C.outgoing(C.target(s.back()))) {
          auto t = s;
          t.push_back(f);
          next.push_back(std::move(t));
        }
    }
    for (auto& s : next) {
      std::vector<Simplex> faces;
      faces.reserve(static_cast<std::size_t>(d) + 1);
      for (int i = 0; i <= d; ++i) {
        std::vector<int> f;
        int start = C.source(s.front());
        if (i == 0) {
          f.assign(s.begin() + 1, s.end());
          start = C.target(s.front());
        } else if (i == d) {
          f.assign(s.begin(), s.end() - 1);
        } else {
          f.assign(s.begin(), s.end());
          f[i - 1] = C.then(s[i - 1], s[i]);
          f.erase(f.begin() + i);
        }
        faces.push_back(simplexOf(start, f));
      }
      const auto g = builder.add(d, nameOf(C.source(s.front()), s), std::move(faces));
      index_[d].emplace(s, g);
      strings_[d].push_back(std::move(s));
    }
  }
  space_ = std::move(builder).build();
}

Simplex NerveSpace::simplexOf(int object, const std::vector<int>& morphisms) const {
  const auto& C = *category_;
  const int n = static_cast<int>(morphisms.size());
  std::uint32_t mask = 0;
  std::vector<int> core;
  for (int p = 0; p < n; ++p) {
    if (p > 0 && C.source(morphisms[p]) != C.target(morphisms[p - 1]))
      throw ValidationError("nerve: string is not composable");
    if (C.isIdentity(morphisms[p]))
      mask |= 1u << p;
    else
      core.push_back(morphisms[p]);
  }
  if (n > 0) object = C.source(morphisms.front());
  if (core.empty()) return Simplex{n, DegeneracyWord(mask), object};
  const int d = static_cast<int>(core.size());
  if (d >= static_cast<int>(index_.size())) throw RangeError("nerve: string above the truncation");
  return Simplex{n, DegeneracyWord(mask), index_[d].at(core)};
}

std::vector<int> NerveSpace::morphismsOf(const Simplex& s) const {
  const auto& C = *category_;
  const int gd = s.generatorDim();
  const auto& core = strings_[gd][s.generator];
  int object = gd == 0 ? s.generator : C.source(core.front());
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(s.dim));
  std::size_t next = 0;
  for (int p = 0; p < s.dim; ++p) {
    if (s.word.contains(p)) {
      out.push_back(C.identity(object));
    } else {
      out.push_back(core[next++]);
      object = C.target(out.back());
    }
  }
  return out;
}

int NerveSpace::vertex(const Simplex& s, int i) const {
  const auto m = morphismsOf(s);
  if (m.empty()) return s.generator;
  return i == 0 ? category_->source(m.front()) : category_->target(m[static_cast<std::size_t>(i) - 1]);
}

SimplicialMap nerveMap(const NerveSpace& source, const NerveSpace& target, const std::vector<int>& objects,
                       const std::vector<int>& morphisms) {
  return SimplicialMap::fromRule(source.space(), target.space(), [&](const Simplex& s) {
    if (s.dim == 0) return target.simplexOf(objects[s.generator], {});
    auto m = source.string(s.dim, s.generator);
    for (int& f : m) f = morphisms[f];
    return target.simplexOf(objects[source.category()->source(source.string(s.dim, s.generator).front())], m);
  });
}

FiniteCategory oneObjectCategory(const FiniteGroup& G) {
  const int n = G.order();
  std::vector<FiniteCategory::Morphism> morphisms;
  for (int a = 0; a < n; ++a) morphisms.push_back({0, 0, G.name(a)});
  std::vector<int> composition(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) composition[static_cast<std::size_t>(a) * n + b] = G.multiply(a, b);
  return FiniteCategory({"*"}, std::move(morphisms), {G.identity()}, std::move(composition));
}

FiniteCategory codiscreteCategory(const FiniteGroup& G) {
  const int n = G.order();
  std::vector<FiniteCategory::Morphism> morphisms;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) morphisms.push_back({a, b, G.name(a) + "->" + G.name(b)});
  std::vector<int> identities;
  for (int a = 0; a < n; ++a) identities.push_back(a * n + a);
  const auto m = static_cast<std::size_t>(n) * n;
  std::vector<int> composition(m * m, -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        composition[static_cast<std::size_t>(a * n + b) * m + static_cast<std::size_t>(b * n + c)] = a * n + c;
  return FiniteCategory(G.elements(), std::move(morphisms), std::move(identities), std::move(composition));
}

std::shared_ptr<const NerveSpace> buildBG(const GroupPtr& G, int maxDim) {
  return std::make_shared<const NerveSpace>(std::make_shared<const FiniteCategory>(oneObjectCategory(*G)), maxDim);
}

Simplex UniversalBundle::lift(const Simplex& s) const {
  const auto m = BG->morphismsOf(s);
  const auto& Gr = *group;
  const int n = static_cast<int>(m.size());
  std::vector<int> vertices(static_cast<std::size_t>(n) + 1);
  vertices[n] = Gr.identity();
  for (int i = n; i >= 1; --i) vertices[i - 1] = Gr.multiply(m[i - 1], vertices[i]);
  std::vector<int> arrows;
  for (int i = 0; i < n; ++i) arrows.push_back(vertices[i] * Gr.order() + vertices[i + 1]);
  return EG->simplexOf(vertices[0], arrows);
}

BundlePtr universalBundle(const GroupPtr& G, int maxDim) {
  if (auto report = validateGroup(*G); !report.ok())
    throw ValidationError("invalid group: " + report.violations.front());
  auto BG = buildBG(G, maxDim);
  auto egCat = std::make_shared<const FiniteCategory>(codiscreteCategory(*G));
  const int n = G->order();
  auto EG = std::make_shared<const NerveSpace>(egCat, maxDim, [&](int object, const std::vector<int>& m) {
    std::string out = "(" + G->name(object);
    for (int f : m) out += "," + G->name(f % n);
    return out + ")";
  });
  std::vector<SimplicialMap> action;
  for (int h = 0; h < n; ++h) {
    std::vector<int> objects, morphisms;
    for (int a = 0; a < n; ++a) objects.push_back(G->multiply(a, h));
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) morphisms.push_back(G->multiply(a, h) * n + G->multiply(b, h));
    action.push_back(nerveMap(*EG, *EG, objects, morphisms));
  }
  std::vector<int> morphisms;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) morphisms.push_back(G->multiply(a, G->inverse(b)));
  auto projection = nerveMap(*EG, *BG, std::vector<int>(static_cast<std::size_t>(n), 0), morphisms);
  GSpace egAction{EG->space(), G, std::move(action)};
  return std::make_shared<const UniversalBundle>(
      UniversalBundle{G, std::move(BG), std::move(EG), std::move(egAction), std::move(projection)});
}

QuotientComparison egQuotientIsBG(const UniversalBundle& bundle) {
  auto quotient = orbitQuotient(bundle.action);
  auto map = quotient.descend(bundle.projection);
  return QuotientComparison{std::move(quotient), std::move(map)};
}

BorelConstruction borel(const GSpace& A, const UniversalBundle& bundle) {
  if (A.group->order() != bundle.group->order()) throw ValidationError("borel: group mismatch");
  const int N = std::min(A.space->maxDim(), bundle.EG->maxDim());
  auto pairs = std::make_shared<const PairSpace>(product(A.space, bundle.EG->space(), N));
  auto diagonal = diagonalAction(*pairs, A, bundle.action);
  auto quotient = std::make_shared<const QuotientSpace>(orbitQuotient(diagonal));
  auto q = quotient->descend(compose(bundle.projection, pairs->second()));
  return BorelConstruction{A, std::move(pairs), std::move(diagonal), std::move(quotient), std::move(q)};
}

}  // namespace borekit
