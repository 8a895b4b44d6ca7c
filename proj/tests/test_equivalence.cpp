#include "borekit/equivalence.hpp"

#include <doctest.h>

#include <set>

using namespace borekit;

namespace {

GroupPtr shared(FiniteGroup G) { return std::make_shared<const FiniteGroup>(std::move(G)); }

bool pointLike(const SimplicialSet& X, int upTo) {
  const auto H = homologyUpTo(normalizedChains(X), upTo);
  for (int n = 0; n <= upTo; ++n)
    if (H[n].betti != (n == 0 ? 1 : 0) || !H[n].torsion.empty()) return false;
  return true;
}

// x -> g x on the torsor: a left action, which is not a right action for S3.
GSpace leftMultiplication(const GroupPtr& G, int maxDim) {
  const auto base = torsor(G, maxDim);
  return GSpace::fromRule(base.space, G, [&](int g, const Simplex& s) {
    return Simplex{0, {}, static_cast<GeneratorIndex>(G->multiply(g, static_cast<int>(s.generator)))};
  });
}

std::vector<GSpace> samples(const GroupPtr& G, int N) { return {pointSpace(G, N), torsor(G, N), sphereS0(G, N)}; }

}  // namespace

TEST_CASE("hcolim on objects") {
  for (const auto& G : {shared(FiniteGroup::cyclic(2)), shared(FiniteGroup::cyclic(3))}) {
    const auto bundle = universalBundle(G, 3);
    const auto pt = hcolimObj(pointSpace(G, 3), *bundle);
    CHECK(isIsomorphism(pt.q));
    CHECK(pointLike(*hcolimObj(torsor(G, 3), *bundle).total(), 2));
    const auto over = overBG(pt);
    CHECK(sameSpace(over.total, pt.total()));
    CHECK(over.structure == pt.q);
  }
  // C2 swaps the two points, so the Borel construction is EG / C2 x C2 = EG.
  const auto C2 = shared(FiniteGroup::cyclic(2));
  CHECK(pointLike(*hcolimObj(sphereS0(C2, 3), *universalBundle(C2, 3)).total(), 2));
}

TEST_CASE("hcolim on morphisms is a functor over BG") {
  const auto C3 = shared(FiniteGroup::cyclic(3));
  const auto bundle = universalBundle(C3, 3);
  const auto A = torsor(C3, 3);
  const auto b = hcolimObj(A, *bundle);
  CHECK(hcolimMor(b, b, SimplicialMap::identity(A.space)) == SimplicialMap::identity(b.total()));
  for (int g = 0; g < 3; ++g)
    for (int h = 0; h < 3; ++h) {
      const auto mg = hcolimMor(b, b, A.act(g)), mh = hcolimMor(b, b, A.act(h));
      CHECK(hcolimMor(b, b, compose(A.act(h), A.act(g))) == compose(mh, mg));
      CHECK(compose(b.q, mg) == b.q);
    }

  const auto C2 = shared(FiniteGroup::cyclic(2));
  const auto bundle2 = universalBundle(C2, 3);
  const auto S0 = sphereS0(C2, 3), pt = pointSpace(C2, 3);
  const auto from = hcolimObj(S0, *bundle2), to = hcolimObj(pt, *bundle2);
  const auto fold = hcolimMor(from, to, constantMap(S0.space, pt.space, 0));
  CHECK(fold.validate().ok());
  CHECK(compose(to.q, fold) == from.q);
  // hcolim(pt) = BG and hcolim(fold) is q itself up to that isomorphism.
  CHECK(compose(to.q, fold) == compose(to.q, compose(inverse(to.q), from.q)));

  // Left and right translations commute; inversion does not commute with the action.
  const auto S3 = shared(FiniteGroup::symmetric(3));
  const auto bundle3 = universalBundle(S3, 2);
  const auto T = torsor(S3, 2);
  const auto bt = hcolimObj(T, *bundle3);
  const auto left = leftMultiplication(S3, 2);
  for (int g = 0; g < 6; ++g) CHECK(validateEquivariant(left.act(g), T, T));
  const auto inversion = SimplicialMap::fromRule(T.space, T.space, [&](const Simplex& s) {
    return Simplex{0, {}, static_cast<GeneratorIndex>(S3->inverse(static_cast<int>(s.generator)))};
  });
  CHECK_FALSE(validateEquivariant(inversion, T, T));
  CHECK_THROWS_AS(hcolimMor(bt, bt, inversion), ValidationError);
}

TEST_CASE("K is an equivariant isomorphism") {
  for (const auto& G : {shared(FiniteGroup::cyclic(2)), shared(FiniteGroup::cyclic(3))})
    for (const auto& A : samples(G, 3)) {
      const auto bundle = universalBundle(G, 3);
      const auto b = hcolimObj(A, *bundle);
      const auto k = kIso(b, *bundle);
      CHECK(isIsomorphism(k.map));
      CHECK(validateEquivariant(k.map, b.diagonal, k.targetAction));
      CHECK(isFree(k.targetAction));
      // The inverse followed by the first projection is the h arrow.
      const auto arrow = hMapObj(b, k);
      CHECK(compose(arrow, k.map) == b.product->first());
      CHECK(weakEquivalenceCertificate(arrow, 2).verdict);
      CHECK(validateEquivariant(arrow, k.targetAction, A));
    }
}

TEST_CASE("hpull of the basepoint is the discrete fiber") {
  for (const auto& G : {shared(FiniteGroup::cyclic(2)), shared(FiniteGroup::cyclic(3))}) {
    const auto bundle = universalBundle(G, 3);
    const auto P = pathSpaceBG(bundle->BG);
    const auto pt = discreteSpace({"pt"}, 3);
    const auto hp = hpullObj(ObjOverBG{pt, constantMap(pt, bundle->BG->space(), 0)}, *bundle, P);
    const auto H = homologyUpTo(normalizedChains(*hp.space()), 2);
    CHECK(H[0].betti == G->order());
    CHECK(H[1].betti == 0);
    CHECK(H[1].torsion.empty());
    CHECK(validateAction(hp.action).ok());
    CHECK(isFree(hp.action));
  }
}

TEST_CASE("section data") {
  const auto C2 = shared(FiniteGroup::cyclic(2));
  const auto bundle = universalBundle(C2, 3);
  const auto P = pathSpaceBG(bundle->BG);
  for (const auto& A : samples(C2, 3)) {
    const auto b = hcolimObj(A, *bundle);
    const auto k = kSide(overBG(b), *bundle, P);
    const auto& sec = k.section;
    CHECK(sec.F.validate().ok());
    CHECK(sec.s.validate().ok());
    CHECK(compose(sec.F, sec.s) == SimplicialMap::identity(k.hpull.replacement.space()));
    CHECK(compose(sec.quotient.q, sec.s) == k.hpull.replacement.Rf);
    CHECK(weakEquivalenceCertificate(sec.F, 2).verdict);
    CHECK(compose(k.object1(), k.arrow) == k.object0());
    CHECK(kMorphism(k, k, SimplicialMap::identity(b.total()), 1) ==
          SimplicialMap::identity(sec.quotient.total()));
  }
  CHECK(zeroMorphism(standardSimplex(1, 3), *bundle).validate().ok());
}

TEST_CASE("homotopy components are natural") {
  const auto C3 = shared(FiniteGroup::cyclic(3));
  const auto bundle = universalBundle(C3, 2);
  const auto A = torsor(C3, 2);
  const auto h = hSide(A, *bundle);
  for (int g = 0; g < 3; ++g) {
    const auto m = A.act(g);
    CHECK(compose(h.arrow, hMorphism(h, h, m, 0)) == compose(hMorphism(h, h, m, 1), h.arrow));
  }
  CHECK_THROWS_AS(hMorphism(h, h, A.act(0), 2), RangeError);

  const auto P = pathSpaceBG(bundle->BG);
  const auto k = kSide(overBG(h.borel), *bundle, P);
  for (int g = 0; g < 3; ++g) {
    const auto u = hcolimMor(h.borel, h.borel, A.act(g));
    CHECK(compose(kMorphism(k, k, u, 1), k.arrow) == compose(k.arrow, kMorphism(k, k, u, 0)));
  }
}

TEST_CASE("theorem runs") {
  for (const auto& G : {shared(FiniteGroup::cyclic(2)), shared(FiniteGroup::cyclic(3))})
    for (const auto& A : samples(G, G->order() == 2 ? 3 : 2))
      for (auto choice : {OverBGChoice::Hcolim, OverBGChoice::Basepoint, OverBGChoice::Identity}) {
        const int N = A.space->maxDim();
        const auto report = verifyTheorem(TheoremInput{A, N, N - 1, choice});
        std::set<std::string> names;
        for (const auto& c : report.checks) {
          names.insert(c.name);
          CHECK_MESSAGE(c.passed, c.name << ": " << c.detail);
        }
        CHECK(names.size() == report.checks.size());
        CHECK(names.size() == 25);
        CHECK(report.passed());
      }

  const auto S3 = shared(FiniteGroup::symmetric(3));
  const auto S3run = verifyTheorem(TheoremInput{sphereS0(S3, 2), 2, 1, OverBGChoice::Basepoint});
  CHECK(S3run.passed());

  const auto control = verifyTheorem(TheoremInput{leftMultiplication(S3, 2), 2, 1, OverBGChoice::Basepoint});
  CHECK(control.halted);
  CHECK_FALSE(control.passed());
  REQUIRE(control.checks.size() == 2);
  CHECK(control.checks[1].name == "action.valid");
  CHECK_FALSE(control.checks[1].passed);

  const auto truncated = verifyTheorem(TheoremInput{pointSpace(S3, 2), 2, 2, OverBGChoice::Basepoint});
  CHECK(truncated.halted);
  CHECK(truncated.checks.back().name == "input.truncation");

  CHECK(overBGChoiceFrom(toString(OverBGChoice::Identity)) == OverBGChoice::Identity);
  CHECK_THROWS_AS(overBGChoiceFrom("fiber"), ParseError);
}
