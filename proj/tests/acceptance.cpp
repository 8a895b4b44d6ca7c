// One line per acceptance criterion. Run from the project root (ctest does this).
#include "borekit/corpus.hpp"
#include "borekit/io.hpp"
#include "borekit/smith.hpp"
#include "oracles.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>

using namespace borekit;

namespace {

constexpr double kEgSecondsPerGroup = 10.0;
constexpr double kCorpusSeconds = 300.0;
constexpr std::uint64_t kHornBudget = 100000;
constexpr int kSmithTrials = 200;
constexpr int kSmithMaxSize = 8;
constexpr int kSmithEntryBound = 9;
constexpr std::size_t kZigzagMaxLen = 4;

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

std::string fixed(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", x);
  return buf;
}

// Collects failures for one criterion; the first few are printed after the verdict.
struct Criterion {
  int number;
  std::string title;
  std::vector<std::string> failures;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

int failedCriteria = 0;

void run(int number, const std::string& title, const std::function<void(Criterion&)>& body) {
  Criterion c{number, title, {}, {}};
  const auto t = Clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.failures.push_back(std::string("exception: ") + e.what());
  }
  const bool ok = c.failures.empty();
  if (!ok) ++failedCriteria;
  std::printf("[%d] %s  %s (%ss)%s%s\n", number, ok ? "PASS" : "FAIL", title.c_str(), fixed(since(t)).c_str(),
              c.detail.empty() ? "" : "  ", c.detail.c_str());
  for (std::size_t i = 0; i < c.failures.size() && i < 5; ++i) std::printf("      %s\n", c.failures[i].c_str());
  std::fflush(stdout);
}

const Loader data("data");

GroupPtr group(const std::string& name) { return data.group(Json(name + ".json")); }

bool pointHomology(const std::vector<HomologyGroup>& H) {
  for (std::size_t n = 0; n < H.size(); ++n)
    if (H[n].betti != (n == 0 ? 1 : 0) || !H[n].torsion.empty()) return false;
  return true;
}

std::vector<Integer> nontrivial(const std::vector<Integer>& diagonal) {
  std::vector<Integer> out;
  for (const auto& d : diagonal)
    if (d != 1) out.push_back(d);
  return out;
}

// Every restricted zigzag from -> to with at most maxLen steps, independent of the library.
void enumerate(const RelativeCategory& R, Zigzag& z, int at, int to, std::size_t maxLen, std::vector<Zigzag>& out) {
  if (at == to) out.push_back(Zigzag{z.from, to, z.steps});
  if (z.steps.size() == maxLen) return;
  for (int f = 0; f < R.cat.morphismCount(); ++f) {
    if (R.cat.source(f) == at) {
      z.steps.push_back({f, true});
      enumerate(R, z, R.cat.target(f), to, maxLen, out);
      z.steps.pop_back();
    }
    if (R.cat.target(f) == at && R.isWeak(f)) {
      z.steps.push_back({f, false});
      enumerate(R, z, R.cat.source(f), to, maxLen, out);
      z.steps.pop_back();
    }
  }
}

}  // namespace

int main() {
  const std::vector<std::string> groups{"c2", "c3", "s3"};

  run(1, "EG is contractible through degree 3 at N = 4", [&](Criterion& c) {
    std::ostringstream detail;
    for (const auto& name : groups) {
      const auto t = Clock::now();
      const auto bundle = universalBundle(group(name), 4);
      const auto H = homologyUpTo(normalizedChains(*bundle->EG->space()), 3);
      const double s = since(t);
      c.require(pointHomology(H), name + ": EG homology is not that of a point");
      c.require(s < kEgSecondsPerGroup, name + ": " + fixed(s) + "s exceeds the per-group limit");
      detail << name << " " << fixed(s) << "s ";
    }
    c.detail = detail.str();
  });

  run(2, "EG action is free and EG/G is isomorphic to BG", [&](Criterion& c) {
    for (const auto& name : groups) {
      const auto bundle = universalBundle(group(name), 4);
      c.require(validateAction(bundle->action).ok(), name + ": EG action invalid");
      c.require(isFree(bundle->action), name + ": EG action not free");
      const auto cmp = egQuotientIsBG(*bundle);
      c.require(cmp.map.validate().ok(), name + ": EG/G -> BG is not simplicial");
      c.require(isIsomorphism(cmp.map), name + ": EG/G -> BG is not an isomorphism");
    }
  });

  run(3, "BC2 homology and edge-path abelianizations", [&](Criterion& c) {
    const auto bc2 = buildBG(group("c2"), 4)->space();
    const auto H = homologyUpTo(normalizedChains(*bc2), 3);
    c.require(toString(H[0]) == "Z", "H0(BC2) = " + toString(H[0]));
    c.require(toString(H[1]) == "Z/2", "H1(BC2) = " + toString(H[1]));
    c.require(toString(H[2]) == "0", "H2(BC2) = " + toString(H[2]));
    c.require(toString(H[3]) == "Z/2", "H3(BC2) = " + toString(H[3]));
    std::ostringstream detail;
    for (const auto& name : groups) {
      const auto G = group(name);
      const auto inv = abelianizedInvariants(edgePathGroup(*buildBG(G, 2)->space(), 0));
      const auto expected = oracle::abelianization(*G);
      c.require(inv.freeRank == 0 && inv.torsion == expected, name + ": edge-path abelianization differs from G^ab");
      detail << name << "^ab=(";
      for (std::size_t i = 0; i < inv.torsion.size(); ++i) detail << (i ? "," : "") << inv.torsion[i].get_str();
      detail << ") ";
    }
    c.require(oracle::abelianization(*group("s3")) == std::vector<Integer>{2}, "oracle: S3^ab is not (2)");
    c.detail = detail.str();
  });

  run(4, "K is an equivariant isomorphism on {pt, torsor, S0} x {C2, C3}", [&](Criterion& c) {
    for (const std::string g : {"c2", "c3"})
      for (const std::string x : {"pt", "torsor", "s0"}) {
        const auto G = group(g);
        const auto A = data.gspace(Json(g + "_" + x + ".json"), G);
        const auto bundle = universalBundle(G, 4);
        const auto b = hcolimObj(A, *bundle);
        const auto k = kIso(b, *bundle);
        c.require(isIsomorphism(k.map), g + "-" + x + ": K is not an isomorphism");
        c.require(validateEquivariant(k.map, b.diagonal, k.targetAction), g + "-" + x + ": K is not equivariant");
      }
  });

  run(5, "mapping path factorization of pt -> BC2", [&](Criterion& c) {
    const auto f = data.map(Json("pt_to_bc2.json"));
    const auto BG = buildBG(group("c2"), 4);
    c.require(sameSpace(f.target(), BG->space()), "fixture target is not BC2 at N = 4");
    const auto P = pathSpaceBG(BG);
    const auto R = mappingPath(f, P);
    c.require(compose(R.Rf, R.iota) == f, "Rf o iota != f");
    std::uint64_t problems = 0;
    for (int n = 1; n <= 3; ++n)
      for (int k = 0; k <= n; ++k) {
        const auto h = hornFillingCheck(R.Rf, n, k, kHornBudget);
        problems += h.problems;
        c.require(h.status == HornCheck::Status::Pass,
                  "horn (" + std::to_string(n) + "," + std::to_string(k) + "): " + toString(h.status));
      }
    const auto cert = weakEquivalenceCertificate(R.iota, 3);
    c.require(cert.verdict, "iota fails the certificate at d = 3");
    // The fiber of Rf over the base vertex has G as its components.
    const auto pt = discreteSpace({"pt"}, 4);
    const auto fiber = pullback(R.Rf, constantMap(pt, BG->space(), 0), 4);
    const auto components = pi0(*fiber.space()).count;
    c.require(components == 2, "pi0 of the fiber has " + std::to_string(components) + " elements");
    c.detail = std::to_string(problems) + " lifting problems, pi0(fiber) = " + std::to_string(components);
  });

  run(6, "theorem pipeline on the bundled corpus", [&](Criterion& c) {
    const auto entries = loadManifest("data/corpus.json");
    c.require(!entries.empty(), "empty corpus");
    const auto summary = corpusRun(entries, threadsFromEnv());
    const std::vector<std::string> named{"section.F-after-s", "section.s-sigma", "h.arrow-omega",
                                         "kiso.equivariant",  "h.naturality",    "k.naturality"};
    for (const auto& r : summary.results) {
      c.require(r.error.empty(), r.name + ": " + r.error);
      c.require(r.expectPass, r.name + ": corpus entry expected to fail");
      for (const auto& check : r.report.checks)
        c.require(check.passed, r.name + ": " + check.name + " " + check.detail);
      for (const auto& name : named) {
        bool seen = false;
        for (const auto& check : r.report.checks) seen |= check.name == name && check.passed;
        c.require(seen, r.name + ": " + name + " missing or failed");
      }
      c.require(r.passed(), r.name + ": report did not pass");
    }
    c.require(summary.seconds < kCorpusSeconds, "corpus took " + fixed(summary.seconds) + "s");
    c.detail = std::to_string(summary.results.size()) + " entries in " + fixed(summary.seconds) + "s";
  });

  run(7, "Smith normal form against the gcd-reduction oracle", [&](Criterion& c) {
    std::mt19937 rng(20260101);
    std::uniform_int_distribution<int> size(1, kSmithMaxSize), entry(-kSmithEntryBound, kSmithEntryBound);
    for (int trial = 0; trial < kSmithTrials; ++trial) {
      const int rows = size(rng), cols = size(rng);
      IntegerMatrix M(rows, cols);
      for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) M(i, j) = entry(rng);
      const auto s = smithNormalForm(M);
      const std::string tag = "trial " + std::to_string(trial) + ": ";
      c.require(s.D == s.U * M * s.V, tag + "D != U M V");
      c.require(abs(oracle::bareissDeterminant(oracle::fromEigen(s.U))) == 1, tag + "U not unimodular");
      c.require(abs(oracle::bareissDeterminant(oracle::fromEigen(s.V))) == 1, tag + "V not unimodular");
      bool diagonal = true;
      for (Eigen::Index i = 0; i < rows; ++i)
        for (Eigen::Index j = 0; j < cols; ++j) diagonal &= i == j || s.D(i, j) == 0;
      c.require(diagonal, tag + "D not diagonal");
      for (Eigen::Index i = 0; i + 1 < s.rank; ++i)
        c.require(s.D(i + 1, i + 1) % s.D(i, i) == 0, tag + "divisibility chain broken");
      c.require(s.invariantFactors() == oracle::smithDiagonal(oracle::fromEigen(M)), tag + "diagonal differs");
    }
    c.detail = std::to_string(kSmithTrials) + " matrices";
  });

  run(8, "zigzag normal forms and hom-sets of the one-weak-arrow category", [&](Criterion& c) {
    const auto R = data.relcat(Json("one_weak_arrow.json"));
    std::vector<Zigzag> fixtures{zigzagFromJson(R, readJson("data/zigzag_back_and_forth.json"))};
    for (int from = 0; from < 2; ++from)
      for (int to = 0; to < 2; ++to) {
        Zigzag z{from, to, {}};
        enumerate(R, z, from, to, kZigzagMaxLen, fixtures);
      }
    for (const auto& z : fixtures) {
      const auto nf = normalForm(R, z);
      std::size_t length = z.length();
      for (const auto& step : nf.trace) {
        c.require(step.result.length() < length, toString(R, z) + ": length did not decrease");
        length = step.result.length();
      }
      c.require(reductions(R, nf.result).empty(), toString(R, z) + ": normal form still reduces");
    }
    std::ostringstream detail;
    for (int from = 0; from < 2; ++from)
      for (int to = 0; to < 2; ++to) {
        const auto H = homSet(R, from, to, kZigzagMaxLen);
        std::vector<Zigzag> all;
        Zigzag z{from, to, {}};
        enumerate(R, z, from, to, kZigzagMaxLen, all);
        const std::string dir = std::to_string(from) + "->" + std::to_string(to);
        c.require(H.representatives.size() == 1, dir + ": " + std::to_string(H.representatives.size()) + " classes");
        c.require(H.enumerated == all.size(), dir + ": enumeration count differs from brute force");
        if (H.representatives.size() != 1) continue;
        // Brute force: every zigzag in the window rewrites to the representative.
        std::size_t joined = 0;
        for (const auto& w : all) joined += equivalentZigzags(R, w, H.representatives.front()).equivalent;
        c.require(joined == all.size(), dir + ": " + std::to_string(all.size() - joined) + " zigzags not joined");
        detail << dir << " " << all.size() << "/1 ";
      }
    c.detail = std::to_string(fixtures.size()) + " normal forms; " + detail.str();
  });

  run(9, "negative controls are rejected", [&](Criterion& c) {
    const auto fold = weakEquivalenceCertificate(data.map(Json("fold.json")), 1);
    c.require(!fold.verdict && !fold.pi0Bijective, "fold S0 -> pt is not rejected at pi0");
    const auto left = data.gspace(Json("s3_left.json"), group("s3"));
    c.require(!validateAction(left).ok(), "left multiplication on S3 passes validateAction");
    const auto f = data.map(Json("pt_to_bc2.json"));
    const auto h = hornFillingCheck(f, 1, 0, kHornBudget);
    c.require(h.status == HornCheck::Status::Fail && h.witness.has_value(), "pt -> BC2 passes the horn check");
    if (h.witness) c.detail = "witness over " + h.witness->base;
  });

  std::printf("%d of 9 criteria failed\n", failedCriteria);
  return failedCriteria == 0 ? 0 : 1;
}
