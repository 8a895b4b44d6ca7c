#include "borekit/simplicial.hpp"
#include "borekit/union_find.hpp"

#include <algorithm>
#include <sstream>

namespace borekit {

DegeneracyWord DegeneracyWord::fromIndices(std::span<const int> indices) {
  std::uint32_t mask = 0;
  int previous = kMaxIndex + 1;
  for (int i : indices) {
    if (i < 0 || i > kMaxIndex) throw ParseError("degeneracy index out of range: " + std::to_string(i));
    if (i >= previous) throw ParseError("degeneracy word must be strictly decreasing");
    mask |= 1u << i;
    previous = i;
  }
  return DegeneracyWord(mask);
}

std::vector<int> DegeneracyWord::indices() const {
  std::vector<int> out;
  for (int j = top(); j >= 0; --j)
    if (contains(j)) out.push_back(j);
  return out;
}

Simplex degenerate(const Simplex& s, int j) {
  if (j < 0 || j > s.dim) throw RangeError("degeneracy index " + std::to_string(j) + " out of range");
  const int top = s.word.top();
  if (j > top) return Simplex{s.dim + 1, DegeneracyWord(s.word.mask() | (1u << j)), s.generator};
  // s_j s_top = s_{top+1} s_j for j <= top
  Simplex rest{s.dim - 1, DegeneracyWord(s.word.mask() & ~(1u << top)), s.generator};
  Simplex inner = degenerate(rest, j);
  return Simplex{inner.dim + 1, DegeneracyWord(inner.word.mask() | (1u << (top + 1))), s.generator};
}

Simplex applyWord(DegeneracyWord word, const Simplex& s) {
  Simplex out = s;
  for (int j = 0; j <= word.top(); ++j)
    if (word.contains(j)) out = degenerate(out, j);
  return out;
}

// ---------------------------------------------------------------------------

SimplicialSet::SimplicialSet(int maxDim, std::vector<std::vector<std::string>> names,
                             std::vector<std::vector<Simplex>> faces)
    : maxDim_(maxDim), names_(std::move(names)), faces_(std::move(faces)) {
  if (maxDim_ < 0) throw RangeError("maxDim must be nonnegative");
  if (maxDim_ > DegeneracyWord::kMaxIndex) throw RangeError("maxDim too large");
  names_.resize(static_cast<std::size_t>(maxDim_) + 1);
  faces_.resize(static_cast<std::size_t>(maxDim_) + 1);
  for (int d = 0; d <= maxDim_; ++d) {
    const auto expected = d == 0 ? 0 : names_[d].size() * static_cast<std::size_t>(d + 1);
    if (faces_[d].size() != expected)
      throw ValidationError("face table of dimension " + std::to_string(d) + " has wrong size");
    for (GeneratorIndex g = 0; g < static_cast<GeneratorIndex>(names_[d].size()); ++g) {
      auto [it, inserted] = index_.emplace(names_[d][g], std::pair{d, g});
      if (!inserted) throw ParseError("duplicate generator id '" + names_[d][g] + "'");
    }
  }
  for (int d = 1; d <= maxDim_; ++d)
    for (const auto& f : faces_[d])
      if (f.dim != d - 1 || !contains(f))
        throw ValidationError("face table of dimension " + std::to_string(d) +
                              " references a missing or misdimensioned simplex");
}

std::optional<std::pair<int, GeneratorIndex>> SimplicialSet::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool SimplicialSet::contains(const Simplex& s) const {
  const int gd = s.generatorDim();
  if (gd < 0 || gd > maxDim_ || s.dim < 0) return false;
  if (s.word.top() >= s.dim) return false;
  return s.generator >= 0 && static_cast<std::size_t>(s.generator) < names_[gd].size();
}

Simplex SimplicialSet::face(const Simplex& s, int i) const {
  if (s.dim < 1 || i < 0 || i > s.dim)
    throw RangeError("face index " + std::to_string(i) + " out of range for a " + std::to_string(s.dim) + "-simplex");
  if (s.word.empty()) return generatorFace(s.dim, s.generator, i);
  const int j = s.word.top();
  Simplex rest{s.dim - 1, DegeneracyWord(s.word.mask() & ~(1u << j)), s.generator};
  if (i < j) return degenerate(face(rest, i), j - 1);
  if (i == j || i == j + 1) return rest;
  return degenerate(face(rest, i - 1), j);
}

namespace {

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

}  // namespace

std::size_t SimplicialSet::simplexCount(int n) const {
  std::size_t total = 0;
  for (int m = 0; m <= std::min(n, maxDim_); ++m) total += names_[m].size() * binomial(n, n - m);
  return total;
}

void SimplicialSet::forEachSimplex(int n, const std::function<void(const Simplex&)>& fn) const {
  if (n < 0) return;
  const std::uint32_t limit = n == 0 ? 1u : (1u << n);
  for (int m = 0; m <= std::min(n, maxDim_); ++m) {
    const int k = n - m;
    for (GeneratorIndex g = 0; g < static_cast<GeneratorIndex>(names_[m].size()); ++g)
      for (std::uint32_t mask = 0; mask < limit; ++mask)
        if (std::popcount(mask) == k) fn(Simplex{n, DegeneracyWord(mask), g});
  }
}

std::vector<Simplex> SimplicialSet::simplices(int n) const {
  std::vector<Simplex> out;
  out.reserve(simplexCount(n));
  forEachSimplex(n, [&](const Simplex& s) { out.push_back(s); });
  return out;
}

std::string SimplicialSet::simplexName(const Simplex& s) const {
  const auto& base = names_[s.generatorDim()][s.generator];
  if (s.word.empty()) return base;
  std::string out;
  for (int j : s.word.indices()) out += "s" + std::to_string(j);
  return out + "(" + base + ")";
}

bool SimplicialSet::sameAs(const SimplicialSet& other) const {
  return maxDim_ == other.maxDim_ && names_ == other.names_ && faces_ == other.faces_;
}

Simplex face(const SimplicialSet& X, const Simplex& s, int i) { return X.face(s, i); }

Simplex degenerate(const SimplicialSet&, const Simplex& s, int j) { return degenerate(s, j); }

ValidationReport validate(const SimplicialSet& X) {
  ValidationReport report;
  for (int d = 2; d <= X.maxDim(); ++d)
    for (GeneratorIndex g = 0; g < static_cast<GeneratorIndex>(X.generatorCount(d)); ++g) {
      const Simplex s = X.generator(d, g);
      for (int j = 1; j <= d; ++j)
        for (int i = 0; i < j; ++i) {
          const Simplex lhs = X.face(X.face(s, j), i);
          const Simplex rhs = X.face(X.face(s, i), j - 1);
          if (lhs != rhs) {
            std::ostringstream msg;
            msg << "d" << i << " d" << j << "(" << X.name(d, g) << ") = " << X.simplexName(lhs) << " but d"
                << j - 1 << " d" << i << "(" << X.name(d, g) << ") = " << X.simplexName(rhs);
            report.add(msg.str());
          }
        }
    }
  return report;
}

// ---------------------------------------------------------------------------

SimplicialSetBuilder::SimplicialSetBuilder(int maxDim)
    : maxDim_(maxDim), names_(static_cast<std::size_t>(maxDim) + 1), faces_(static_cast<std::size_t>(maxDim) + 1) {}

GeneratorIndex SimplicialSetBuilder::add(int dim, std::string name, std::vector<Simplex> faces) {
  if (dim < 0 || dim > maxDim_) throw RangeError("generator dimension out of range");
  if (static_cast<int>(faces.size()) != (dim == 0 ? 0 : dim + 1))
    throw ValidationError("generator '" + name + "' needs " + std::to_string(dim + 1) + " faces");
  names_[dim].push_back(std::move(name));
  faces_[dim].insert(faces_[dim].end(), faces.begin(), faces.end());
  return static_cast<GeneratorIndex>(names_[dim].size() - 1);
}

SpacePtr SimplicialSetBuilder::build() && {
  return std::make_shared<const SimplicialSet>(maxDim_, std::move(names_), std::move(faces_));
}

// ---------------------------------------------------------------------------

SimplicialMap::SimplicialMap(SpacePtr source, SpacePtr target, std::vector<std::vector<Simplex>> assignment)
    : source_(std::move(source)), target_(std::move(target)), assignment_(std::move(assignment)) {
  const int common = std::min(source_->maxDim(), target_->maxDim());
  maxDim_ = static_cast<int>(assignment_.size()) - 1;
  if (maxDim_ > common) throw RangeError("map assignment exceeds the common truncation");
  for (int d = 0; d <= maxDim_; ++d) {
    if (assignment_[d].size() != source_->generatorCount(d))
      throw ValidationError("map assignment misses generators in dimension " + std::to_string(d));
    for (const auto& s : assignment_[d])
      if (s.dim != d || !target_->contains(s))
        throw ValidationError("map assigns a missing or misdimensioned simplex in dimension " + std::to_string(d));
  }
}

SimplicialMap SimplicialMap::identity(const SpacePtr& X) {
  return fromRule(X, X, [](const Simplex& s) { return s; });
}

SimplicialMap SimplicialMap::fromRule(const SpacePtr& source, const SpacePtr& target,
                                      const std::function<Simplex(const Simplex&)>& rule) {
  const int common = std::min(source->maxDim(), target->maxDim());
  std::vector<std::vector<Simplex>> assignment(static_cast<std::size_t>(common) + 1);
  for (int d = 0; d <= common; ++d) {
    assignment[d].reserve(source->generatorCount(d));
    for (GeneratorIndex g = 0; g < static_cast<GeneratorIndex>(source->generatorCount(d)); ++g)
      assignment[d].push_back(rule(source->generator(d, g)));
  }
  return SimplicialMap(source, target, std::move(assignment));
}

Simplex SimplicialMap::operator()(const Simplex& s) const {
  const int gd = s.generatorDim();
  if (gd > maxDim_ || s.dim > maxDim_) throw RangeError("simplex above the map's truncation");
  return applyWord(s.word, assignment_[gd][s.generator]);
}

ValidationReport SimplicialMap::validate() const {
  ValidationReport report;
  for (int d = 1; d <= maxDim_; ++d)
    for (GeneratorIndex g = 0; g < static_cast<GeneratorIndex>(source_->generatorCount(d)); ++g) {
      const Simplex& img = assignment_[d][g];
      for (int i = 0; i <= d; ++i) {
        const Simplex lhs = target_->face(img, i);
        const Simplex rhs = (*this)(source_->generatorFace(d, g, i));
        if (lhs != rhs)
          report.add("d" + std::to_string(i) + " f(" + source_->name(d, g) + ") = " + target_->simplexName(lhs) +
                     " but f(d" + std::to_string(i) + " " + source_->name(d, g) + ") = " + target_->simplexName(rhs));
      }
    }
  return report;
}

bool sameSpace(const SpacePtr& a, const SpacePtr& b) { return a == b || (a && b && a->sameAs(*b)); }

bool operator==(const SimplicialMap& a, const SimplicialMap& b) {
  return a.maxDim_ == b.maxDim_ && a.assignment_ == b.assignment_ && sameSpace(a.source_, b.source_) &&
         sameSpace(a.target_, b.target_);
}

SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f) {
  if (!sameSpace(f.target(), g.source())) throw ValidationError("compose: target of f is not the source of g");
  const int top = std::min(f.maxDim(), g.maxDim());
  std::vector<std::vector<Simplex>> assignment(static_cast<std::size_t>(top) + 1);
  for (int d = 0; d <= top; ++d)
    for (GeneratorIndex x = 0; x < static_cast<GeneratorIndex>(f.source()->generatorCount(d)); ++x)
      assignment[d].push_back(g(f.image(d, x)));
  return SimplicialMap(f.source(), g.target(), std::move(assignment));
}

bool isIsomorphism(const SimplicialMap& f) {
  const int common = std::min(f.source()->maxDim(), f.target()->maxDim());
  if (f.maxDim() < common) return false;
  for (int d = 0; d <= common; ++d) {
    const auto n = f.source()->generatorCount(d);
    if (n != f.target()->generatorCount(d)) return false;
    std::vector<char> hit(n, 0);
    for (GeneratorIndex g = 0; g < static_cast<GeneratorIndex>(n); ++g) {
      const Simplex& img = f.image(d, g);
      if (!img.nondegenerate() || hit[img.generator]) return false;
      hit[img.generator] = 1;
    }
  }
  return true;
}

SimplicialMap inverse(const SimplicialMap& f) {
  if (!isIsomorphism(f)) throw ValidationError("inverse: map is not an isomorphism");
  std::vector<std::vector<Simplex>> assignment(static_cast<std::size_t>(f.maxDim()) + 1);
  for (int d = 0; d <= f.maxDim(); ++d) {
    assignment[d].resize(f.target()->generatorCount(d));
    for (GeneratorIndex g = 0; g < static_cast<GeneratorIndex>(f.source()->generatorCount(d)); ++g)
      assignment[d][f.image(d, g).generator] = f.source()->generator(d, g);
  }
  return SimplicialMap(f.target(), f.source(), std::move(assignment));
}

SimplicialMap constantMap(const SpacePtr& source, const SpacePtr& target, GeneratorIndex vertex) {
  return SimplicialMap::fromRule(source, target, [vertex](const Simplex& s) {
    return Simplex{s.dim, DegeneracyWord((1u << s.dim) - 1u), vertex};
  });
}

// ---------------------------------------------------------------------------

namespace {

std::uint32_t compressMask(std::uint32_t mask, std::uint32_t removed) {
  std::uint32_t out = 0;
  for (int p = 0; p < 32; ++p)
    if ((mask >> p) & 1u) out |= 1u << (p - std::popcount(removed & ((1u << p) - 1u)));
  return out;
}

Simplex stripWord(const Simplex& s, std::uint32_t common) {
  return Simplex{s.dim - std::popcount(common), DegeneracyWord(compressMask(s.word.mask() & ~common, common)),
                 s.generator};
}

using PairIndex = std::unordered_map<std::pair<Simplex, Simplex>, GeneratorIndex, SimplexPairHash>;

// Builds the jointly nondegenerate pairs emitted by `candidates` per degree.
PairSpace buildPairSpace(const SpacePtr& X, const SpacePtr& Y, int N,
                         const std::function<void(int, const std::function<void(const Simplex&, const Simplex&)>&)>&
                             candidates) {
  SimplicialSetBuilder builder(N);
  std::vector<PairIndex> index(static_cast<std::size_t>(N) + 1);
  std::vector<std::vector<Simplex>> firstImg(static_cast<std::size_t>(N) + 1), secondImg(static_cast<std::size_t>(N) + 1);
  for (int n = 0; n <= N; ++n) {
    candidates(n, [&](const Simplex& x, const Simplex& y) {
      if ((x.word.mask() & y.word.mask()) != 0) return;
      std::vector<Simplex> faces;
      if (n > 0) {
        faces.reserve(static_cast<std::size_t>(n) + 1);
        for (int i = 0; i <= n; ++i) {
          const Simplex fx = X->face(x, i), fy = Y->face(y, i);
          const std::uint32_t common = fx.word.mask() & fy.word.mask();
          const Simplex px = stripWord(fx, common), py = stripWord(fy, common);
          auto it = index[px.dim].find({px, py});
          if (it == index[px.dim].end()) throw ValidationError("pair construction: face not enumerated");
          faces.push_back(Simplex{n - 1, DegeneracyWord(common), it->second});
        }
      }
      const auto g = builder.add(n, "(" + X->simplexName(x) + "," + Y->simplexName(y) + ")", std::move(faces));
      index[n].emplace(std::pair{x, y}, g);
      firstImg[n].push_back(x);
      secondImg[n].push_back(y);
    });
  }
  SpacePtr space = std::move(builder).build();
  SimplicialMap first(space, X, std::move(firstImg));
  SimplicialMap second(space, Y, std::move(secondImg));
  return PairSpace(space, std::move(first), std::move(second), std::move(index));
}

}  // namespace

PeeledPair peelCommonDegeneracies(const Simplex& a, const Simplex& b) {
  const std::uint32_t common = a.word.mask() & b.word.mask();
  return PeeledPair{DegeneracyWord(common), stripWord(a, common), stripWord(b, common)};
}

PairSpace::PairSpace(SpacePtr space, SimplicialMap first, SimplicialMap second, std::vector<PairIndex> index)
    : space_(std::move(space)), first_(std::move(first)), second_(std::move(second)), index_(std::move(index)) {}

std::optional<Simplex> PairSpace::tryPair(const Simplex& a, const Simplex& b) const {
  if (a.dim != b.dim) return std::nullopt;
  auto peeled = peelCommonDegeneracies(a, b);
  const int d = peeled.first.dim;
  if (d < 0 || d >= static_cast<int>(index_.size())) return std::nullopt;
  auto it = index_[d].find({peeled.first, peeled.second});
  if (it == index_[d].end()) return std::nullopt;
  return Simplex{a.dim, peeled.common, it->second};
}

Simplex PairSpace::pair(const Simplex& a, const Simplex& b) const {
  auto s = tryPair(a, b);
  if (!s) throw ValidationError("pair (" + first_.target()->simplexName(a) + "," + second_.target()->simplexName(b) +
                                ") is not a simplex of this space");
  return *s;
}

PairSpace product(const SpacePtr& X, const SpacePtr& Y, int maxDim) {
  if (maxDim < 0 || maxDim > std::min(X->maxDim(), Y->maxDim()))
    throw RangeError("product: truncation mismatch");
  return buildPairSpace(X, Y, maxDim, [&](int n, const auto& emit) {
    const auto ys = Y->simplices(n);
    X->forEachSimplex(n, [&](const Simplex& x) {
      for (const auto& y : ys) emit(x, y);
    });
  });
}

PairSpace product(const SpacePtr& X, const SpacePtr& Y) {
  return product(X, Y, std::min(X->maxDim(), Y->maxDim()));
}

PairSpace pullback(const SimplicialMap& f, const SimplicialMap& g, int maxDim) {
  if (!sameSpace(f.target(), g.target())) throw ValidationError("pullback: maps have different targets");
  if (maxDim < 0 || maxDim > std::min(f.maxDim(), g.maxDim())) throw RangeError("pullback: truncation mismatch");
  const SpacePtr& X = f.source();
  const SpacePtr& Y = g.source();
  return buildPairSpace(X, Y, maxDim, [&](int n, const auto& emit) {
    std::unordered_map<Simplex, std::vector<Simplex>, SimplexHash> fibers;
    Y->forEachSimplex(n, [&](const Simplex& y) { fibers[g(y)].push_back(y); });
    X->forEachSimplex(n, [&](const Simplex& x) {
      auto it = fibers.find(f(x));
      if (it == fibers.end()) return;
      for (const auto& y : it->second) emit(x, y);
    });
  });
}

PairSpace pullback(const SimplicialMap& f, const SimplicialMap& g) {
  return pullback(f, g, std::min(f.maxDim(), g.maxDim()));
}

SimplicialMap pairMap(const PairSpace& target, const SimplicialMap& a, const SimplicialMap& b) {
  if (!sameSpace(a.source(), b.source())) throw ValidationError("pairMap: components have different sources");
  return SimplicialMap::fromRule(a.source(), target.space(),
                                 [&](const Simplex& s) { return target.pair(a(s), b(s)); });
}

// ---------------------------------------------------------------------------

QuotientSpace::QuotientSpace(SpacePtr space, SimplicialMap projection, std::vector<std::vector<GeneratorIndex>> classOf,
                             std::vector<std::vector<GeneratorIndex>> representatives)
    : space_(std::move(space)),
      projection_(std::move(projection)),
      classOf_(std::move(classOf)),
      representatives_(std::move(representatives)) {}

SimplicialMap QuotientSpace::descend(const SimplicialMap& f) const {
  if (!sameSpace(f.source(), projection_.source()))
    throw ValidationError("descend: map is not defined on the quotiented space");
  const SpacePtr& X = projection_.source();
  const int top = std::min(f.maxDim(), space_->maxDim());
  for (int d = 0; d <= top; ++d)
    for (GeneratorIndex g = 0; g < static_cast<GeneratorIndex>(X->generatorCount(d)); ++g) {
      const GeneratorIndex rep = representatives_[d][classOf_[d][g]];
      if (f.image(d, g) != f.image(d, rep))
        throw ValidationError("descend: map separates " + X->name(d, g) + " and " + X->name(d, rep));
    }
  std::vector<std::vector<Simplex>> assignment(static_cast<std::size_t>(top) + 1);
  for (int d = 0; d <= top; ++d)
    for (GeneratorIndex rep : representatives_[d]) assignment[d].push_back(f.image(d, rep));
  return SimplicialMap(space_, f.target(), std::move(assignment));
}

QuotientSpace quotientBy(const SpacePtr& X, const GeneratorRelation& rel) {
  const int N = X->maxDim();
  std::vector<UnionFind> sets;
  for (int d = 0; d <= N; ++d) sets.emplace_back(X->generatorCount(d));
  for (const auto& e : rel.pairs) {
    if (e.dim < 0 || e.dim > N || e.a < 0 || e.b < 0 || static_cast<std::size_t>(e.a) >= X->generatorCount(e.dim) ||
        static_cast<std::size_t>(e.b) >= X->generatorCount(e.dim))
      throw RangeError("relation references a missing generator");
    sets[e.dim].unite(static_cast<std::size_t>(e.a), static_cast<std::size_t>(e.b));
  }
  std::vector<std::vector<GeneratorIndex>> classOf(static_cast<std::size_t>(N) + 1), reps(static_cast<std::size_t>(N) + 1);
  std::vector<std::vector<int>> classSize(static_cast<std::size_t>(N) + 1);
  for (int d = 0; d <= N; ++d) {
    auto labels = sets[d].labels();
    classOf[d].assign(labels.begin(), labels.end());
    for (GeneratorIndex g = 0; g < static_cast<GeneratorIndex>(labels.size()); ++g) {
      if (labels[g] == static_cast<int>(reps[d].size())) {
        reps[d].push_back(g);
        classSize[d].push_back(0);
      }
      ++classSize[d][labels[g]];
    }
  }
  auto project = [&](const Simplex& s) {
    return Simplex{s.dim, s.word, classOf[s.generatorDim()][s.generator]};
  };
  for (int d = 1; d <= N; ++d)
    for (GeneratorIndex g = 0; g < static_cast<GeneratorIndex>(X->generatorCount(d)); ++g) {
      const GeneratorIndex rep = reps[d][classOf[d][g]];
      if (rep == g) continue;
      for (int i = 0; i <= d; ++i)
        if (project(X->generatorFace(d, g, i)) != project(X->generatorFace(d, rep, i)))
          throw ValidationError("relation is not compatible with faces: d" + std::to_string(i) + " of " +
                                X->name(d, g) + " and " + X->name(d, rep) + " are not related");
    }
  SimplicialSetBuilder builder(N);
  for (int d = 0; d <= N; ++d)
    for (std::size_t c = 0; c < reps[d].size(); ++c) {
      const GeneratorIndex rep = reps[d][c];
      std::vector<Simplex> faces;
      for (int i = 0; d > 0 && i <= d; ++i) faces.push_back(project(X->generatorFace(d, rep, i)));
      builder.add(d, classSize[d][c] == 1 ? X->name(d, rep) : "[" + X->name(d, rep) + "]", std::move(faces));
    }
  SpacePtr space = std::move(builder).build();
  std::vector<std::vector<Simplex>> assignment(static_cast<std::size_t>(N) + 1);
  for (int d = 0; d <= N; ++d)
    for (GeneratorIndex g = 0; g < static_cast<GeneratorIndex>(X->generatorCount(d)); ++g)
      assignment[d].push_back(Simplex{d, {}, classOf[d][g]});
  SimplicialMap projection(X, space, std::move(assignment));
  return QuotientSpace(space, std::move(projection), std::move(classOf), std::move(reps));
}

// ---------------------------------------------------------------------------

namespace {

// Subcomplex of Delta^n consisting of the vertex subsets accepted by `keep`.
SpacePtr simplexSubcomplex(int n, int maxDim, const std::function<bool(std::uint32_t)>& keep) {
  if (n < 0 || n > 30) throw RangeError("simplex dimension out of range");
  SimplicialSetBuilder builder(maxDim);
  std::unordered_map<std::uint32_t, GeneratorIndex> index;
  const std::uint32_t full = (n == 31) ? ~0u : ((1u << (n + 1)) - 1u);
  for (int d = 0; d <= std::min(n, maxDim); ++d)
    for (std::uint32_t subset = 1; subset <= full; ++subset) {
      if (std::popcount(subset) != d + 1 || !keep(subset)) continue;
      std::string name;
      std::vector<int> vertices;
      for (int v = 0; v <= n; ++v)
        if ((subset >> v) & 1u) {
          if (!name.empty() && n >= 10) name += ",";
          name += std::to_string(v);
          vertices.push_back(v);
        }
      std::vector<Simplex> faces;
      for (int i = 0; d > 0 && i <= d; ++i) {
        auto it = index.find(subset & ~(1u << vertices[static_cast<std::size_t>(i)]));
        if (it == index.end()) throw ValidationError("subcomplex is not closed under faces");
        faces.push_back(Simplex{d - 1, {}, it->second});
      }
      index[subset] = builder.add(d, name, std::move(faces));
    }
  return std::move(builder).build();
}

}  // namespace

SpacePtr standardSimplex(int n, int maxDim) {
  return simplexSubcomplex(n, maxDim, [](std::uint32_t) { return true; });
}

SpacePtr horn(int n, int k, int maxDim) {
  if (k < 0 || k > n) throw RangeError("horn index out of range");
  const std::uint32_t full = (1u << (n + 1)) - 1u;
  const std::uint32_t missing = full & ~(1u << k);
  return simplexSubcomplex(n, maxDim, [=](std::uint32_t s) { return s != full && s != missing; });
}

SpacePtr simplexBoundary(int n, int maxDim) {
  const std::uint32_t full = (1u << (n + 1)) - 1u;
  return simplexSubcomplex(n, maxDim, [=](std::uint32_t s) { return s != full; });
}

SpacePtr discreteSpace(const std::vector<std::string>& vertices, int maxDim) {
  SimplicialSetBuilder builder(maxDim);
  for (const auto& v : vertices) builder.add(0, v);
  return std::move(builder).build();
}

}  // namespace borekit
