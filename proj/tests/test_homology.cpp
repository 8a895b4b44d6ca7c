#include "borekit/homology.hpp"
#include "borekit/nerve.hpp"
#include "borekit/smith.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace borekit;

namespace {

GroupPtr shared(FiniteGroup G) { return std::make_shared<const FiniteGroup>(std::move(G)); }

IntegerMatrix dense(const SparseBoundary& M) {
  IntegerMatrix out = IntegerMatrix::Zero(M.rows(), M.cols());
  for (Eigen::Index j = 0; j < M.outerSize(); ++j)
    for (SparseBoundary::InnerIterator it(M, j); it; ++it) out(it.row(), j) = Integer(static_cast<long>(it.value()));
  return out;
}

IntegerMatrix randomMatrix(std::mt19937& rng, int rows, int cols, int lo, int hi) {
  std::uniform_int_distribution<int> entry(lo, hi);
  IntegerMatrix M(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) M(i, j) = entry(rng);
  return M;
}

// H_n from the oracle diagonal of the dense boundaries.
HomologyGroup oracleHomology(const ChainComplex& C, int n) {
  const auto low = n == 0 ? std::vector<Integer>{} : oracle::smithDiagonal(oracle::fromEigen(dense(C.boundaries[n])));
  const auto high = oracle::smithDiagonal(oracle::fromEigen(dense(C.boundaries[n + 1])));
  HomologyGroup H;
  H.betti = C.ranks[n] - static_cast<Eigen::Index>(low.size()) - static_cast<Eigen::Index>(high.size());
  for (const auto& d : high)
    if (d != 1) H.torsion.push_back(d);
  return H;
}

std::string render(const std::vector<HomologyGroup>& hs, std::size_t count) {
  std::string out;
  for (std::size_t n = 0; n < count; ++n) out += (n ? ", " : "") + toString(hs[n]);
  return out;
}

void checkSmith(const IntegerMatrix& M) {
  const auto s = smithNormalForm(M);
  REQUIRE(s.D == s.U * M * s.V);
  REQUIRE(s.U * s.Uinv == IntegerMatrix::Identity(M.rows(), M.rows()));
  REQUIRE(s.V * s.Vinv == IntegerMatrix::Identity(M.cols(), M.cols()));
  REQUIRE(abs(oracle::bareissDeterminant(oracle::fromEigen(s.U))) == 1);
  REQUIRE(abs(oracle::bareissDeterminant(oracle::fromEigen(s.V))) == 1);
  for (Eigen::Index i = 0; i < s.D.rows(); ++i)
    for (Eigen::Index j = 0; j < s.D.cols(); ++j)
      if (i != j) REQUIRE(s.D(i, j) == 0);
  for (Eigen::Index i = 0; i + 1 < s.rank; ++i) REQUIRE(s.D(i + 1, i + 1) % s.D(i, i) == 0);
  for (Eigen::Index i = 0; i < s.rank; ++i) REQUIRE(s.D(i, i) > 0);
  REQUIRE(s.invariantFactors() == oracle::smithDiagonal(oracle::fromEigen(M)));
}

}  // namespace

TEST_CASE("Smith normal form on fixed matrices") {
  const IntegerMatrix Z = IntegerMatrix::Zero(3, 2);
  const auto z = smithNormalForm(Z);
  CHECK(z.rank == 0);
  CHECK(z.U == IntegerMatrix::Identity(3, 3));
  CHECK(z.V == IntegerMatrix::Identity(2, 2));

  IntegerMatrix M(2, 2);
  M << 2, 4, 6, 8;
  const auto s = smithNormalForm(M);
  CHECK(s.invariantFactors() == std::vector<Integer>{2, 4});
  CHECK(abs(oracle::bareissDeterminant(oracle::fromEigen(M))) == 8);

  CHECK(smithNormalForm(IntegerMatrix(IntegerMatrix::Identity(4, 4))).D == IntegerMatrix::Identity(4, 4));
}

TEST_CASE("Smith normal form against both oracles") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 150; ++trial) {
    const int rows = 1 + static_cast<int>(rng() % 5), cols = 1 + static_cast<int>(rng() % 5);
    const IntegerMatrix M = randomMatrix(rng, rows, cols, -6, 6);
    checkSmith(M);
    REQUIRE(smithNormalForm(M).invariantFactors() == oracle::determinantalFactors(oracle::fromEigen(M)));
  }
  // Low-rank products exercise zero rows and repeated factors.
  for (int trial = 0; trial < 50; ++trial) {
    const IntegerMatrix A = randomMatrix(rng, 6, 2, -4, 4), B = randomMatrix(rng, 2, 7, -4, 4);
    checkSmith(IntegerMatrix(3 * A * B));
  }
}

TEST_CASE("Smith form is templated on the scalar") {
  Eigen::Matrix<long, Eigen::Dynamic, Eigen::Dynamic> M(2, 3);
  M << 4, 6, 8, 8, 12, 16;
  const auto s = smithNormalForm(M);
  CHECK(s.rank == 1);
  CHECK(s.D(0, 0) == 2);
  CHECK(s.D == s.U * M * s.V);
}

TEST_CASE("sparse invariants match the oracle, including on overflow") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const int rows = 1 + static_cast<int>(rng() % 9), cols = 1 + static_cast<int>(rng() % 9);
    std::vector<Eigen::Triplet<std::int64_t>> t;
    std::uniform_int_distribution<int> v(-3, 3);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j)
        if (rng() % 3 == 0) t.emplace_back(i, j, v(rng));
    SparseBoundary M(rows, cols);
    M.setFromTriplets(t.begin(), t.end());
    const auto inv = sparseInvariants(M);
    const auto diag = oracle::smithDiagonal(oracle::fromEigen(dense(M)));
    REQUIRE(inv.rank == static_cast<Eigen::Index>(diag.size()));
    std::vector<Integer> torsion;
    for (const auto& d : diag)
      if (d != 1) torsion.push_back(d);
    REQUIRE(inv.torsion == torsion);
  }
  // Unit pivots that push entries past 64 bits.
  const std::int64_t big = std::int64_t{1} << 40;
  SparseBoundary M(3, 3);
  std::vector<Eigen::Triplet<std::int64_t>> t = {{0, 0, 1}, {0, 1, big}, {0, 2, big}, {1, 0, big},
                                                 {1, 1, 3},  {2, 0, big}, {2, 2, 5}};
  M.setFromTriplets(t.begin(), t.end());
  const auto inv = sparseInvariants(M);
  const auto diag = oracle::smithDiagonal(oracle::fromEigen(dense(M)));
  CHECK(inv.rank == static_cast<Eigen::Index>(diag.size()));
  std::vector<Integer> torsion;
  for (const auto& d : diag)
    if (d != 1) torsion.push_back(d);
  CHECK(inv.torsion == torsion);
}

TEST_CASE("normalized chains") {
  const auto point = normalizedChains(*standardSimplex(0, 3));
  CHECK(point.ranks == std::vector<Eigen::Index>{1, 0, 0, 0});

  const auto hollow = normalizedChains(*simplexBoundary(2, 2));
  CHECK(hollow.ranks == std::vector<Eigen::Index>{3, 3, 0});
  IntegerMatrix incidence(3, 3);  // edges 01, 02, 12 against vertices 0, 1, 2
  incidence << -1, -1, 0, 1, 0, -1, 0, 1, 1;
  CHECK(dense(hollow.boundaries[1]) == incidence);

  const auto bc2 = normalizedChains(*buildBG(shared(FiniteGroup::cyclic(2)), 4)->space());
  CHECK(bc2.ranks == std::vector<Eigen::Index>{1, 1, 1, 1, 1});
  for (int n = 1; n <= 4; ++n) CHECK(dense(bc2.boundaries[n])(0, 0) == (n % 2 == 0 ? 2 : 0));
}

TEST_CASE("boundary squares to zero") {
  const auto G = shared(FiniteGroup::symmetric(3));
  const auto bundle = universalBundle(G, 3);
  for (const auto& X : {bundle->BG->space(), bundle->EG->space(), horn(3, 2, 3),
                        product(standardSimplex(2, 3), simplexBoundary(2, 3), 3).space()})
    CHECK(boundarySquareViolations(normalizedChains(*X)).empty());
}

TEST_CASE("homology of standard examples") {
  const auto hollow = normalizedChains(*simplexBoundary(2, 2));
  CHECK(toString(homology(hollow, 0)) == "Z");
  CHECK(toString(homology(hollow, 1)) == "Z");
  CHECK_THROWS_AS(homology(hollow, 2), RangeError);

  const auto bc2 = homologyUpTo(normalizedChains(*buildBG(shared(FiniteGroup::cyclic(2)), 4)->space()), 3);
  CHECK(render(bc2, 4) == "Z, Z/2, 0, Z/2");
  CHECK(bc2[1].torsion == std::vector<Integer>{2});

  const auto eg = homologyUpTo(normalizedChains(*universalBundle(shared(FiniteGroup::cyclic(3)), 4)->EG->space()), 3);
  CHECK(render(eg, 4) == "Z, 0, 0, 0");
}

TEST_CASE("homology agrees with the dense oracle") {
  const auto S3 = shared(FiniteGroup::symmetric(3));
  const auto C3 = shared(FiniteGroup::cyclic(3));
  for (const auto& X : {buildBG(S3, 3)->space(), buildBG(C3, 4)->space(), horn(3, 0, 3), simplexBoundary(3, 3),
                        product(simplexBoundary(2, 3), simplexBoundary(2, 3), 3).space()}) {
    const auto C = normalizedChains(*X);
    for (int n = 0; n + 1 <= C.topDegree(); ++n) CHECK(toString(homology(C, n)) == toString(oracleHomology(C, n)));
  }
}

TEST_CASE("homology is stable under raising the truncation") {
  for (const auto& G : {shared(FiniteGroup::cyclic(2)), shared(FiniteGroup::cyclic(3)), shared(FiniteGroup::symmetric(3))}) {
    const int N = G->order() == 6 ? 2 : 3;
    const auto low = universalBundle(G, N), high = universalBundle(G, N + 1);
    CHECK(render(homologyUpTo(normalizedChains(*low->BG->space()), N - 1), N) ==
          render(homologyUpTo(normalizedChains(*high->BG->space()), N), N));
    CHECK(render(homologyUpTo(normalizedChains(*low->EG->space()), N - 1), N) ==
          render(homologyUpTo(normalizedChains(*high->EG->space()), N), N));
  }
}

TEST_CASE("induced maps on homology") {
  const auto X = simplexBoundary(2, 3);
  const auto id = inducedHomologyMap(SimplicialMap::identity(X), 1);
  CHECK(id.isomorphism);
  CHECK(id.matrix == IntegerMatrix::Identity(1, 1));

  const auto s0 = discreteSpace({"+", "-"}, 2), pt = discreteSpace({"pt"}, 2);
  const auto fold = inducedHomologyMap(constantMap(s0, pt, 0), 0);
  CHECK_FALSE(fold.isomorphism);
  CHECK(fold.matrix.rows() == 1);
  CHECK(fold.matrix.cols() == 2);
  CHECK(fold.matrix(0, 0) != 0);
  CHECK(fold.matrix(0, 1) != 0);

  // The constant self-map of BC2 is zero on H_1 = Z/2.
  const auto bc2 = buildBG(shared(FiniteGroup::cyclic(2)), 3)->space();
  const auto zero = inducedHomologyMap(constantMap(bc2, bc2, 0), 1);
  CHECK_FALSE(zero.isomorphism);
  CHECK(zero.matrix(0, 0) == 0);
}

TEST_CASE("components") {
  CHECK(pi0(*discreteSpace({"+", "-"}, 1)).count == 2);
  CHECK(pi0(*universalBundle(shared(FiniteGroup::cyclic(2)), 2)->EG->space()).count == 1);
  CHECK_FALSE(pi0Bijective(constantMap(discreteSpace({"+", "-"}, 1), discreteSpace({"pt"}, 1), 0)));
}

TEST_CASE("edge-path abelianization matches G^ab") {
  const auto triangle = abelianizedInvariants(edgePathGroup(*standardSimplex(2, 2), 0));
  CHECK(triangle.freeRank == 0);
  CHECK(triangle.torsion.empty());

  for (const auto& G : {shared(FiniteGroup::cyclic(2)), shared(FiniteGroup::cyclic(3)), shared(FiniteGroup::cyclic(4)),
                        shared(FiniteGroup::symmetric(3)), shared(FiniteGroup::symmetric(4))}) {
    const auto inv = abelianizedInvariants(edgePathGroup(*buildBG(G, 2)->space(), 0));
    CHECK(inv.freeRank == 0);
    CHECK(inv.torsion == oracle::abelianization(*G));
  }
  CHECK(oracle::abelianization(FiniteGroup::symmetric(3)) == std::vector<Integer>{2});
  CHECK_THROWS_AS(edgePathGroup(*discreteSpace({"a", "b"}, 2), 0), ValidationError);
}

TEST_CASE("certificates") {
  const auto X = simplexBoundary(2, 3);
  CHECK(weakEquivalenceCertificate(SimplicialMap::identity(X), 2).verdict);

  const auto s0 = discreteSpace({"+", "-"}, 2), pt = discreteSpace({"pt"}, 2);
  const auto fold = weakEquivalenceCertificate(constantMap(s0, pt, 0), 1);
  CHECK_FALSE(fold.verdict);
  CHECK_FALSE(fold.pi0Bijective);
  CHECK(toString(fold.degrees[0].status) == "not-iso");

  const auto bc2 = buildBG(shared(FiniteGroup::cyclic(2)), 3)->space();
  const auto zero = weakEquivalenceCertificate(constantMap(bc2, bc2, 0), 2);
  CHECK(zero.pi0Bijective);
  CHECK(toString(zero.degrees[0].status) == "iso");
  CHECK(toString(zero.degrees[1].status) == "not-iso");
  CHECK_FALSE(zero.verdict);

  CHECK_THROWS_AS(weakEquivalenceCertificate(SimplicialMap::identity(X), 3), RangeError);
}

TEST_CASE("certificates compose") {
  // Delta^1 -> Delta^0 -> Delta^2 and EG -> pt -> EG.
  const auto D1 = standardSimplex(1, 3), D0 = standardSimplex(0, 3), D2 = standardSimplex(2, 3);
  const auto f = constantMap(D1, D0, 0), g = constantMap(D0, D2, 1);
  REQUIRE(weakEquivalenceCertificate(f, 2).verdict);
  REQUIRE(weakEquivalenceCertificate(g, 2).verdict);
  CHECK(weakEquivalenceCertificate(compose(g, f), 2).verdict);

  const auto EG = universalBundle(shared(FiniteGroup::cyclic(3)), 3)->EG->space();
  const auto toPoint = constantMap(EG, D0, 0), back = constantMap(D0, EG, 2);
  REQUIRE(weakEquivalenceCertificate(toPoint, 2).verdict);
  REQUIRE(weakEquivalenceCertificate(back, 2).verdict);
  CHECK(weakEquivalenceCertificate(compose(back, toPoint), 2).verdict);
  CHECK(weakEquivalenceCertificate(compose(toPoint, back), 2).verdict);
}

TEST_CASE("side conditions") {
  const auto C2 = shared(FiniteGroup::cyclic(2));
  const auto A = sphereS0(C2, 2), B = pointSpace(C2, 2);
  const auto fold = constantMap(A.space, B.space, 0);
  const auto omega = omegaCertificate(fold, A, B, 1);
  REQUIRE(omega.side);
  CHECK(omega.side->ok);
  CHECK_FALSE(omega.verdict);

  const auto bundle = universalBundle(C2, 3);
  const auto& BG = bundle->BG->space();
  const auto idBG = SimplicialMap::identity(BG);
  const auto sigma = sigmaCertificate(idBG, idBG, idBG, 2);
  CHECK(sigma.verdict);
  const auto off = sigmaCertificate(idBG, idBG, constantMap(BG, BG, 0), 2);
  CHECK_FALSE(off.side->ok);
  CHECK_FALSE(off.verdict);
}
