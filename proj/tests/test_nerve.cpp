#include "borekit/homology.hpp"
#include "borekit/nerve.hpp"

#include <doctest.h>

#include <cmath>

using namespace borekit;

namespace {

GroupPtr shared(FiniteGroup G) { return std::make_shared<const FiniteGroup>(std::move(G)); }

std::size_t power(std::size_t b, int e) {
  std::size_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

bool pointLike(const SimplicialSet& X, int upTo) {
  const auto H = homologyUpTo(normalizedChains(X), upTo);
  for (int n = 0; n <= upTo; ++n)
    if (!(H[n] == HomologyGroup{n == 0 ? 1 : 0, {}})) return false;
  return true;
}

}  // namespace

TEST_CASE("nerves of small categories") {
  const auto terminal = std::make_shared<const FiniteCategory>(posetCategory({"*"}, {{true}}));
  const NerveSpace point(terminal, 3);
  CHECK(point.space()->generatorCount(0) == 1);
  for (int d = 1; d <= 3; ++d) CHECK(point.space()->generatorCount(d) == 0);

  const NerveSpace interval(std::make_shared<const FiniteCategory>(intervalCategory()), 3);
  CHECK(interval.space()->generatorCount(0) == 2);
  CHECK(interval.space()->generatorCount(1) == 1);
  CHECK(interval.space()->generatorCount(2) == 0);

  const auto arrows = std::make_shared<const FiniteCategory>(arrowCategory(oneObjectCategory(FiniteGroup::cyclic(2))).category);
  for (const auto& C : {terminal, std::make_shared<const FiniteCategory>(productCategory(intervalCategory(), intervalCategory())), arrows})
    CHECK(validate(*NerveSpace(C, 3).space()).ok());
}

TEST_CASE("nerve strings round-trip through simplices") {
  const auto G = shared(FiniteGroup::cyclic(3));
  const auto BG = buildBG(G, 3);
  for (int n = 0; n <= 3; ++n)
    for (const auto& s : BG->space()->simplices(n)) CHECK(BG->simplexOf(0, BG->morphismsOf(s)) == s);
}

TEST_CASE("BG and EG generator and simplex counts") {
  for (const auto& G : {shared(FiniteGroup::cyclic(1)), shared(FiniteGroup::cyclic(2)), shared(FiniteGroup::cyclic(3)),
                        shared(FiniteGroup::symmetric(3))}) {
    const int N = G->order() == 6 ? 3 : 4;
    const auto bundle = universalBundle(G, N);
    const auto n = static_cast<std::size_t>(G->order());
    for (int d = 0; d <= N; ++d) {
      CHECK(bundle->BG->space()->generatorCount(d) == power(n - 1, d));
      CHECK(bundle->EG->space()->generatorCount(d) == n * power(n - 1, d));
      CHECK(bundle->BG->space()->simplexCount(d) == power(n, d));
      CHECK(bundle->EG->space()->simplexCount(d) == power(n, d + 1));
    }
    CHECK(validate(*bundle->BG->space()).ok());
    CHECK(validate(*bundle->EG->space()).ok());
    CHECK(bundle->projection.validate().ok());
  }
  const auto BC3 = buildBG(shared(FiniteGroup::cyclic(3)), 2);
  CHECK(BC3->space()->generatorCount(1) == 2);
  CHECK(BC3->space()->generatorCount(2) == 4);
}

TEST_CASE("EG/G is BG") {
  for (const auto& [G, N] : {std::pair{shared(FiniteGroup::cyclic(1)), 3}, std::pair{shared(FiniteGroup::cyclic(2)), 3},
                             std::pair{shared(FiniteGroup::cyclic(3)), 3}, std::pair{shared(FiniteGroup::symmetric(3)), 2}}) {
    const auto bundle = universalBundle(G, N);
    const auto cmp = egQuotientIsBG(*bundle);
    CHECK(isIsomorphism(cmp.map));
    // The projection is constant on orbits.
    for (int g = 0; g < G->order(); ++g) CHECK(compose(bundle->projection, bundle->action.act(g)) == bundle->projection);
  }
}

TEST_CASE("lifts to EG end at the identity and project back") {
  const auto G = shared(FiniteGroup::symmetric(3));
  const auto bundle = universalBundle(G, 3);
  for (int n = 0; n <= 3; ++n)
    for (const auto& s : bundle->BG->space()->simplices(n)) {
      const auto l = bundle->lift(s);
      CHECK(bundle->projection(l) == s);
      CHECK(bundle->EG->vertex(l, n) == G->identity());
    }
}

TEST_CASE("Borel constructions") {
  const auto C2 = shared(FiniteGroup::cyclic(2));
  const auto bundle = universalBundle(C2, 4);

  const auto pt = borel(pointSpace(C2, 4), *bundle);
  CHECK(isIsomorphism(pt.q));

  const auto tor = borel(torsor(C2, 4), *bundle);
  CHECK(pointLike(*tor.total(), 3));

  const auto s0 = borel(sphereS0(C2, 4), *bundle);
  CHECK(pointLike(*s0.total(), 3));

  // q after the orbit projection is the projection to EG followed by EG -> BG.
  for (const auto* b : {&pt, &tor, &s0})
    CHECK(compose(b->q, b->quotient->projection()) == compose(bundle->projection, b->product->second()));
}
