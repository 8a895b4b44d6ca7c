#include "borekit/group.hpp"

#include <algorithm>
#include <numeric>

namespace borekit {

FiniteGroup::FiniteGroup(std::vector<std::string> elements, int identity, std::vector<int> table)
    : elements_(std::move(elements)), identity_(identity), table_(std::move(table)) {
  const int n = static_cast<int>(elements_.size());
  if (n == 0) throw ParseError("group must have at least one element");
  if (identity_ < 0 || identity_ >= n) throw ParseError("group identity out of range");
  if (table_.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n))
    throw ParseError("group table must be " + std::to_string(n) + "x" + std::to_string(n));
  for (int x : table_)
    if (x < 0 || x >= n) throw ParseError("group table entry out of range");
  inverses_.assign(static_cast<std::size_t>(n), -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (multiply(a, b) == identity_ && multiply(b, a) == identity_) {
        inverses_[a] = b;
        break;
      }
}

FiniteGroup FiniteGroup::cyclic(int n) {
  if (n < 1) throw RangeError("cyclic group order must be positive");
  std::vector<std::string> names;
  for (int k = 0; k < n; ++k) names.push_back(k == 0 ? "e" : (k == 1 ? "g" : "g" + std::to_string(k)));
  std::vector<int> table;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) table.push_back((a + b) % n);
  return FiniteGroup(std::move(names), 0, std::move(table));
}

FiniteGroup FiniteGroup::symmetric(int n) {
  if (n < 1 || n > 6) throw RangeError("symmetric group degree out of range");
  std::vector<std::vector<int>> perms;
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  std::vector<std::string> names;
  for (const auto& q : perms) {
    std::string s;
    for (int x : q) s += std::to_string(x);
    names.push_back(s);
  }
  const auto m = perms.size();
  std::vector<int> table(m * m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      std::vector<int> c(static_cast<std::size_t>(n));
      for (int x = 0; x < n; ++x) c[x] = perms[b][perms[a][x]];
      table[a * m + b] = static_cast<int>(std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
  return FiniteGroup(std::move(names), 0, std::move(table));
}

std::optional<int> FiniteGroup::find(std::string_view name) const {
  for (int a = 0; a < order(); ++a)
    if (elements_[a] == name) return a;
  return std::nullopt;
}

ValidationReport validateGroup(const FiniteGroup& G) {
  ValidationReport report;
  const int n = G.order();
  const int e = G.identity();
  for (int a = 0; a < n; ++a) {
    if (G.multiply(e, a) != a || G.multiply(a, e) != a) report.add("identity law fails for " + G.name(a));
    if (G.inverse(a) < 0) report.add(G.name(a) + " has no two-sided inverse");
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (G.multiply(G.multiply(a, b), c) != G.multiply(a, G.multiply(b, c)))
          report.add("associativity fails on (" + G.name(a) + ", " + G.name(b) + ", " + G.name(c) + ")");
  return report;
}

// ---------------------------------------------------------------------------

GSpace GSpace::fromRule(const SpacePtr& space, const GroupPtr& group,
                        const std::function<Simplex(int, const Simplex&)>& rule) {
  GSpace out{space, group, {}};
  out.action.reserve(static_cast<std::size_t>(group->order()));
  for (int g = 0; g < group->order(); ++g)
    out.action.push_back(SimplicialMap::fromRule(space, space, [&](const Simplex& s) { return rule(g, s); }));
  return out;
}

GSpace GSpace::trivial(const SpacePtr& space, const GroupPtr& group) {
  return fromRule(space, group, [](int, const Simplex& s) { return s; });
}

ValidationReport validateAction(const GSpace& A) {
  ValidationReport report;
  const auto& G = *A.group;
  if (static_cast<int>(A.action.size()) != G.order()) {
    report.add("action must list one map per group element");
    return report;
  }
  for (int g = 0; g < G.order(); ++g) {
    const auto& m = A.act(g);
    if (!sameSpace(m.source(), A.space) || !sameSpace(m.target(), A.space)) {
      report.add("action of " + G.name(g) + " is not an endomorphism of the space");
      continue;
    }
    report.merge(m.validate(), "action of " + G.name(g) + ": ");
    if (!isIsomorphism(m)) report.add("action of " + G.name(g) + " is not an automorphism");
  }
  if (!report.ok()) return report;
  if (!(A.act(G.identity()) == SimplicialMap::identity(A.space))) report.add("identity element does not act trivially");
  for (int g = 0; g < G.order(); ++g)
    for (int h = 0; h < G.order(); ++h)
      if (!(A.act(G.multiply(g, h)) == compose(A.act(h), A.act(g))))
        report.add("right-action law fails: act(" + G.name(g) + G.name(h) + ") != act(" + G.name(h) + ") o act(" +
                   G.name(g) + ")");
  return report;
}

bool isFree(const GSpace& A) {
  const auto& G = *A.group;
  for (int g = 0; g < G.order(); ++g) {
    if (g == G.identity()) continue;
    const auto& m = A.act(g);
    for (int d = 0; d <= m.maxDim(); ++d)
      for (GeneratorIndex x = 0; x < static_cast<GeneratorIndex>(A.space->generatorCount(d)); ++x)
        if (m.image(d, x) == A.space->generator(d, x)) return false;
  }
  return true;
}

QuotientSpace orbitQuotient(const GSpace& A) {
  GeneratorRelation rel;
  for (int g = 0; g < A.group->order(); ++g) {
    const auto& m = A.act(g);
    for (int d = 0; d <= m.maxDim(); ++d)
      for (GeneratorIndex x = 0; x < static_cast<GeneratorIndex>(A.space->generatorCount(d)); ++x) {
        const Simplex& y = m.image(d, x);
        if (!y.nondegenerate()) throw ValidationError("action sends a generator to a degenerate simplex");
        if (y.generator != x) rel.pairs.push_back({d, x, y.generator});
      }
  }
  return quotientBy(A.space, rel);
}

bool validateEquivariant(const SimplicialMap& f, const GSpace& A, const GSpace& B) {
  if (A.group->order() != B.group->order()) throw ValidationError("equivariance: groups differ");
  if (!sameSpace(f.source(), A.space) || !sameSpace(f.target(), B.space))
    throw ValidationError("equivariance: map does not run between the given G-spaces");
  for (int g = 0; g < A.group->order(); ++g)
    if (!(compose(f, A.act(g)) == compose(B.act(g), f))) return false;
  return true;
}

GSpace diagonalAction(const PairSpace& pairs, const GSpace& A, const GSpace& B) {
  return GSpace::fromRule(pairs.space(), A.group, [&](int g, const Simplex& s) {
    return pairs.pair(A.act(g)(pairs.first()(s)), B.act(g)(pairs.second()(s)));
  });
}

GSpace secondFactorAction(const PairSpace& pairs, const GSpace& B) {
  return GSpace::fromRule(pairs.space(), B.group, [&](int g, const Simplex& s) {
    return pairs.pair(pairs.first()(s), B.act(g)(pairs.second()(s)));
  });
}

GSpace torsor(const GroupPtr& G, int maxDim) {
  auto space = discreteSpace(G->elements(), maxDim);
  return GSpace::fromRule(space, G, [&](int g, const Simplex& s) {
    return Simplex{0, {}, static_cast<GeneratorIndex>(G->multiply(s.generator, g))};
  });
}

GSpace pointSpace(const GroupPtr& G, int maxDim) { return GSpace::trivial(discreteSpace({"pt"}, maxDim), G); }

GSpace sphereS0(const GroupPtr& G, int maxDim) {
  std::vector<char> inSquares(static_cast<std::size_t>(G->order()), 0);
  for (int a = 0; a < G->order(); ++a) inSquares[G->multiply(a, a)] = 1;
  bool grown = true;
  while (grown) {
    grown = false;
    for (int a = 0; a < G->order(); ++a)
      for (int b = 0; b < G->order(); ++b)
        if (inSquares[a] && inSquares[b] && !inSquares[G->multiply(a, b)]) {
          inSquares[G->multiply(a, b)] = 1;
          grown = true;
        }
  }
  const long size = std::count(inSquares.begin(), inSquares.end(), 1);
  if (size != G->order() && 2 * size != G->order())
    throw RangeError("S0 action needs the squares to generate a subgroup of index at most 2");
  auto space = discreteSpace({"+", "-"}, maxDim);
  return GSpace::fromRule(space, G, [inSquares](int g, const Simplex& s) {
    return Simplex{0, {}, inSquares[g] ? s.generator : 1 - s.generator};
  });
}

}  // namespace borekit
