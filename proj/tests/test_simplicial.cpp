#include "borekit/nerve.hpp"
#include "borekit/simplicial.hpp"

#include <doctest.h>

#include <random>

using namespace borekit;

namespace {

// Degeneracy operators as monotone surjections [m] -> [k]; the canonical word of
// x o tau has bit i set iff tau(i) == tau(i+1).
std::vector<int> applySurjection(const std::vector<int>& tau, int j) {
  std::vector<int> out;
  for (int i = 0; i <= static_cast<int>(tau.size()); ++i) out.push_back(tau[i <= j ? i : i - 1]);
  return out;
}

std::uint32_t maskOf(const std::vector<int>& tau) {
  std::uint32_t mask = 0;
  for (std::size_t i = 0; i + 1 < tau.size(); ++i)
    if (tau[i] == tau[i + 1]) mask |= 1u << i;
  return mask;
}

// Monotone maps [n] -> [p].
void monotone(int n, int p, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == n + 1) {
    out.push_back(cur);
    return;
  }
  for (int v = cur.empty() ? 0 : cur.back(); v <= p; ++v) {
    cur.push_back(v);
    monotone(n, p, cur, out);
    cur.pop_back();
  }
}

// Nondegenerate n-simplices of Delta^p x Delta^q: pairs of monotone maps that are
// jointly injective.
std::size_t prismCount(int p, int q, int n) {
  std::vector<std::vector<int>> a, b;
  std::vector<int> cur;
  monotone(n, p, cur, a);
  monotone(n, q, cur, b);
  std::size_t count = 0;
  for (const auto& x : a)
    for (const auto& y : b) {
      bool injective = true;
      for (int i = 0; i < n; ++i) injective = injective && !(x[i] == x[i + 1] && y[i] == y[i + 1]);
      count += injective;
    }
  return count;
}

void checkFaceIdentities(const SimplicialSet& X) {
  for (int n = 2; n <= X.maxDim(); ++n)
    for (const auto& s : X.simplices(n))
      for (int j = 1; j <= n; ++j)
        for (int i = 0; i < j; ++i) REQUIRE(X.face(X.face(s, j), i) == X.face(X.face(s, i), j - 1));
}

}  // namespace

TEST_CASE("faces of degenerate vertices") {
  const auto X = standardSimplex(0, 3);
  const Simplex v{0, {}, 0};
  const Simplex s0v = degenerate(v, 0);
  CHECK(X->face(s0v, 0) == v);
  CHECK(X->face(s0v, 1) == v);
  const Simplex s1s0v = degenerate(s0v, 1);
  CHECK(s1s0v.word.indices() == std::vector<int>{1, 0});
  CHECK(X->face(s1s0v, 0) == s0v);
}

TEST_CASE("degeneracies canonicalize") {
  const Simplex v{0, {}, 0};
  CHECK(degenerate(v, 0).word.indices() == std::vector<int>{0});
  CHECK(degenerate(degenerate(v, 0), 0).word.indices() == std::vector<int>{1, 0});
  CHECK(degenerate(degenerate(v, 0), 1).word.indices() == std::vector<int>{1, 0});
  const int bad[] = {0, 1};
  CHECK_THROWS_AS(DegeneracyWord::fromIndices(bad), ParseError);
}

TEST_CASE("random degeneracy strings agree with composed surjections") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    const int base = static_cast<int>(rng() % 3);
    Simplex s{base, {}, 0};
    std::vector<int> tau(static_cast<std::size_t>(base) + 1);
    for (int i = 0; i <= base; ++i) tau[i] = i;
    const int steps = static_cast<int>(rng() % 6);
    for (int k = 0; k < steps; ++k) {
      const int j = static_cast<int>(rng() % (s.dim + 1));
      s = degenerate(s, j);
      tau = applySurjection(tau, j);
      REQUIRE(s.word.mask() == maskOf(tau));
      REQUIRE(s.generatorDim() == base);
      // Re-applying the word to the generator is idempotent.
      REQUIRE(applyWord(s.word, Simplex{base, {}, 0}) == s);
    }
  }
}

TEST_CASE("validation of small spaces") {
  const auto D2 = standardSimplex(2, 2);
  CHECK(validate(*D2).ok());
  CHECK(D2->generatorCount(0) == 3);
  CHECK(D2->generatorCount(1) == 3);
  CHECK(D2->generatorCount(2) == 1);

  // Swap two faces of the triangle.
  std::vector<std::vector<std::string>> names = {D2->names(0), D2->names(1), D2->names(2)};
  std::vector<std::vector<Simplex>> faces(3);
  for (int d = 1; d <= 2; ++d)
    for (GeneratorIndex g = 0; g < static_cast<GeneratorIndex>(D2->generatorCount(d)); ++g)
      for (int i = 0; i <= d; ++i) faces[d].push_back(D2->generatorFace(d, g, i));
  std::swap(faces[2][0], faces[2][1]);
  SimplicialSet broken(2, names, faces);
  CHECK_FALSE(validate(broken).ok());

  const auto bundle = universalBundle(std::make_shared<const FiniteGroup>(FiniteGroup::cyclic(2)), 3);
  CHECK(validate(*bundle->EG->space()).ok());
}

TEST_CASE("face identities hold on every enumerable simplex") {
  checkFaceIdentities(*standardSimplex(3, 4));
  checkFaceIdentities(*horn(3, 1, 3));
  checkFaceIdentities(*product(standardSimplex(1, 3), standardSimplex(2, 3)).space());
  const auto G = std::make_shared<const FiniteGroup>(FiniteGroup::cyclic(3));
  checkFaceIdentities(*universalBundle(G, 3)->EG->space());
}

TEST_CASE("products") {
  const auto D1 = standardSimplex(1, 2);
  const auto P = product(D1, D1, 2);
  CHECK(P.space()->generatorCount(2) == 2);
  CHECK(validate(*P.space()).ok());
  for (int p = 0; p <= 2; ++p)
    for (int q = 0; q <= 2; ++q) {
      const auto X = product(standardSimplex(p, 4), standardSimplex(q, 4), 4);
      for (int n = 0; n <= 4; ++n) CHECK(X.space()->generatorCount(n) == prismCount(p, q, n));
    }

  const auto D2 = standardSimplex(2, 3);
  CHECK(isIsomorphism(product(D2, standardSimplex(0, 3), 3).first()));

  const auto two = discreteSpace({"a", "b"}, 2);
  const auto four = product(two, two, 2);
  CHECK(four.space()->generatorCount(0) == 4);
  CHECK(four.space()->generatorCount(1) == 0);
  CHECK(four.space()->generatorCount(2) == 0);
}

TEST_CASE("product is symmetric up to isomorphism") {
  const auto X = standardSimplex(1, 3), Y = horn(2, 0, 3);
  const auto XY = product(X, Y, 3), YX = product(Y, X, 3);
  const auto swap = pairMap(YX, XY.second(), XY.first());
  CHECK(swap.validate().ok());
  CHECK(isIsomorphism(swap));
}

TEST_CASE("pullbacks") {
  const auto B = standardSimplex(2, 3);
  const auto id = SimplicialMap::identity(B);
  CHECK(isIsomorphism(pullback(id, id).first()));

  const auto pt = standardSimplex(0, 3);
  const auto X = standardSimplex(1, 3), Y = horn(2, 1, 3);
  const auto overPoint = pullback(constantMap(X, pt, 0), constantMap(Y, pt, 0), 3);
  CHECK(overPoint.space()->sameAs(*product(X, Y, 3).space()));

  const auto G = std::make_shared<const FiniteGroup>(FiniteGroup::cyclic(2));
  const auto bundle = universalBundle(G, 3);
  const auto point = discreteSpace({"pt"}, 3);
  const auto fiber = pullback(constantMap(point, bundle->BG->space(), 0), bundle->projection, 3);
  CHECK(fiber.space()->generatorCount(0) == 2);
}

TEST_CASE("quotients") {
  const auto X = standardSimplex(2, 3);
  const auto same = quotientBy(X, {});
  CHECK(same.space()->sameAs(*X));
  CHECK(isIsomorphism(same.projection()));

  const auto D1 = standardSimplex(1, 2);
  const auto loop = quotientBy(D1, GeneratorRelation{{{0, 0, 1}}});
  CHECK(loop.space()->generatorCount(0) == 1);
  CHECK(loop.space()->generatorCount(1) == 1);
  CHECK(validate(*loop.space()).ok());

  // Identifying two edges with unrelated endpoints is rejected.
  CHECK_THROWS_AS(quotientBy(X, GeneratorRelation{{{1, 0, 2}}}), ValidationError);
}

TEST_CASE("isomorphism detection") {
  const auto X = standardSimplex(1, 2);
  CHECK(isIsomorphism(SimplicialMap::identity(X)));
  CHECK_FALSE(isIsomorphism(constantMap(X, standardSimplex(0, 2), 0)));
  CHECK_THROWS_AS(inverse(constantMap(X, standardSimplex(0, 2), 0)), ValidationError);
}

TEST_CASE("maps must commute with faces") {
  const auto D1 = standardSimplex(1, 1);
  const auto two = discreteSpace({"a", "b"}, 1);
  // Send the edge to a degenerate edge on vertex 0 while vertex 1 goes elsewhere.
  SimplicialMap bad(D1, D1, {{Simplex{0, {}, 0}, Simplex{0, {}, 0}}, {Simplex{1, DegeneracyWord(1), 1}}});
  CHECK_FALSE(bad.validate().ok());
  CHECK(constantMap(D1, two, 1).validate().ok());
}
