#include "borekit/corpus.hpp"
#include "borekit/equivalence.hpp"
#include "borekit/io.hpp"
#include "borekit/zigzag.hpp"

#include <CLI11.hpp>

#include <functional>
#include <iostream>

using namespace borekit;

namespace {

enum Exit { kOk = 0, kCheckFailed = 1, kParse = 2, kValidation = 3 };

std::string outPath;

void emit(const Json& j) {
  if (outPath.empty())
    std::cout << dump(j);
  else
    writeText(outPath, dump(j));
}

Loader here() { return Loader("."); }

void requirePositive(long long v, const char* what) {
  if (v <= 0) throw ValidationError(std::string(what) + " must be positive");
}

void requireDegreeBound(int d, int maxDim) {
  if (d < 0 || d > maxDim - 1) throw ValidationError("degree bound must lie in 0..maxDim-1");
}

/// f with its target replaced by the BG built here; the file's target must match it.
SimplicialMap overBuiltBG(const SimplicialMap& f, const NerveSpace& BG) {
  if (!f.target()->sameAs(*BG.space()))
    throw ValidationError("map target is not BG of the given group at the given truncation");
  return SimplicialMap::fromRule(f.source(), BG.space(), [&](const Simplex& s) { return f(s); });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"borekit: finite simplicial models of Borel constructions"};
  app.require_subcommand(1);
  app.fallthrough();  // --out is accepted after the subcommand too
  app.add_option("--out", outPath, "Write the artifact here instead of stdout");

  std::string groupFile, gspaceFile, spaceFile, mapFile, leftFile, rightFile, reportFile, mode = "plain";
  std::string sourceGSpace, targetGSpace, sourceOver, targetOver, overBGName = "hcolim";
  std::string relcatFile, zigzagFile, fromName, toName, manifestFile;
  int maxDim = 0, degreeBound = 0, maxDegree = 0, hornMaxN = 3;
  long long hornBudget = 100000, rewriteBudget = 100000;
  std::size_t maxLen = 4;
  std::function<int()> run;

  auto groupOpt = [&](CLI::App* c) { c->add_option("--group", groupFile, "Group file")->required(); };
  auto dimOpt = [&](CLI::App* c) { c->add_option("--max-dim", maxDim, "Truncation N")->required(); };

  auto* bg = app.add_subcommand("bg", "Emit BG = N(G[1]) truncated at N");
  groupOpt(bg);
  dimOpt(bg);
  bg->callback([&] {
    run = [&] {
      emit(toJson(*buildBG(here().group(groupFile), maxDim)->space()));
      return kOk;
    };
  });

  auto* eg = app.add_subcommand("eg", "Emit EG = N(G[0,1]) truncated at N");
  groupOpt(eg);
  dimOpt(eg);
  eg->callback([&] {
    run = [&] {
      emit(toJson(*universalBundle(here().group(groupFile), maxDim)->EG->space()));
      return kOk;
    };
  });

  auto* borelCmd = app.add_subcommand("borel", "Emit the Borel construction X x_G EG");
  groupOpt(borelCmd);
  dimOpt(borelCmd);
  borelCmd->add_option("--gspace", gspaceFile, "G-space file")->required();
  borelCmd->callback([&] {
    run = [&] {
      const auto G = here().group(groupFile);
      const auto A = here().gspace(gspaceFile, G);
      if (auto r = validateAction(A); !r.ok()) throw ValidationError("action: " + r.violations.front());
      emit(toJson(*borel(A, *universalBundle(G, maxDim)).total()));
      return kOk;
    };
  });

  auto* productCmd = app.add_subcommand("product", "Emit X x Y");
  productCmd->add_option("--left", leftFile, "Space file")->required();
  productCmd->add_option("--right", rightFile, "Space file")->required();
  productCmd->add_option("--max-dim", maxDim, "Truncation (default: the smaller one)");
  productCmd->callback([&] {
    run = [&] {
      const auto X = here().space(leftFile), Y = here().space(rightFile);
      const int N = maxDim > 0 ? maxDim : std::min(X->maxDim(), Y->maxDim());
      emit(toJson(*product(X, Y, N).space()));
      return kOk;
    };
  });

  auto* pullbackCmd = app.add_subcommand("pullback", "Emit X x_Z Y for maps f: X -> Z, g: Y -> Z");
  pullbackCmd->add_option("--left", leftFile, "Map file f")->required();
  pullbackCmd->add_option("--right", rightFile, "Map file g")->required();
  pullbackCmd->callback([&] {
    run = [&] {
      emit(toJson(*pullback(here().map(leftFile), here().map(rightFile)).space()));
      return kOk;
    };
  });

  auto* replace = app.add_subcommand("replace", "Factor f: Y -> BG as iota then the fibration Rf");
  replace->add_option("--map", mapFile, "Map file f: Y -> BG")->required();
  groupOpt(replace);
  dimOpt(replace);
  replace->add_option("--horn-budget", hornBudget, "Lifting problems per horn check");
  replace->add_option("--horn-max-n", hornMaxN, "Check horns up to this dimension");
  replace->callback([&] {
    run = [&] {
      requirePositive(hornBudget, "horn budget");
      const auto BG = buildBG(here().group(groupFile), maxDim);
      const auto R = mappingPath(overBuiltBG(here().map(mapFile), *BG), pathSpaceBG(BG));
      if (hornMaxN > R.space()->maxDim()) throw ValidationError("horn dimension exceeds the truncation");
      Json horns = Json::array();
      bool ok = true;
      for (int n = 1; n <= hornMaxN; ++n)
        for (int k = 0; k <= n; ++k) {
          const auto h = hornFillingCheck(R.Rf, n, k, static_cast<std::uint64_t>(hornBudget));
          ok = ok && h.status == HornCheck::Status::Pass;
          Json entry = toJson(h);
          entry["n"] = n;
          entry["k"] = k;
          horns.push_back(std::move(entry));
        }
      emit({{"schema", schemaTag("replacement")},
            {"R", toJson(*R.space())},
            {"iota", toJson(R.iota)},
            {"Rf", toJson(R.Rf)},
            {"horns", horns},
            {"factorizationExact", compose(R.Rf, R.iota) == R.f}});
      return ok ? kOk : kCheckFailed;
    };
  });

  auto* homologyCmd = app.add_subcommand("homology", "Integral homology of a space");
  homologyCmd->add_option("--space", spaceFile, "Space file")->required();
  homologyCmd->add_option("--max-degree", maxDegree, "Highest degree")->required();
  homologyCmd->callback([&] {
    run = [&] {
      const auto X = here().space(spaceFile);
      requireDegreeBound(maxDegree, X->maxDim());
      Json degrees = Json::array();
      const auto H = homologyUpTo(normalizedChains(*X), maxDegree);
      for (std::size_t n = 0; n < H.size(); ++n) {
        Json entry = toJson(H[n]);
        entry["degree"] = n;
        degrees.push_back(std::move(entry));
      }
      emit({{"schema", schemaTag("homology")}, {"degrees", degrees}});
      return kOk;
    };
  });

  auto* certify = app.add_subcommand("certify", "Weak-equivalence certificate for a map");
  certify->add_option("--map", mapFile, "Map file")->required();
  certify->add_option("--mode", mode, "plain | omega | sigma")->check(CLI::IsMember({"plain", "omega", "sigma"}));
  auto* certifyBound = certify->add_option("--degree-bound", degreeBound, "Highest homology degree compared (default N-1)");
  certify->add_option("--group", groupFile, "Group file (omega)");
  certify->add_option("--source-gspace", sourceGSpace, "G-space on the source (omega)");
  certify->add_option("--target-gspace", targetGSpace, "G-space on the target (omega)");
  certify->add_option("--source-over", sourceOver, "Structure map of the source to BG (sigma)");
  certify->add_option("--target-over", targetOver, "Structure map of the target to BG (sigma)");
  certify->callback([&] {
    run = [&] {
      const auto f = here().map(mapFile);
      const int top = std::min(f.source()->maxDim(), f.target()->maxDim());
      if (certifyBound->count() == 0) degreeBound = top - 1;
      requireDegreeBound(degreeBound, top);
      Certificate c;
      if (mode == "plain") {
        c = weakEquivalenceCertificate(f, degreeBound);
      } else if (mode == "omega") {
        if (groupFile.empty() || sourceGSpace.empty() || targetGSpace.empty())
          throw ParseError("omega mode needs --group, --source-gspace and --target-gspace");
        const auto G = here().group(groupFile);
        const auto A = here().gspace(sourceGSpace, G), B = here().gspace(targetGSpace, G);
        if (!sameSpace(A.space, f.source()) || !sameSpace(B.space, f.target()))
          throw ValidationError("G-spaces do not match the map's source and target");
        c = omegaCertificate(f, A, B, degreeBound);
      } else {
        if (sourceOver.empty() || targetOver.empty()) throw ParseError("sigma mode needs --source-over and --target-over");
        c = sigmaCertificate(f, here().map(sourceOver), here().map(targetOver), degreeBound);
      }
      emit(toJson(c));
      return c.verdict ? kOk : kCheckFailed;
    };
  });

  auto* hpull = app.add_subcommand("hpull", "Emit hpull(f) = R(Y) x_Rf EG as a G-space");
  hpull->add_option("--map", mapFile, "Map file f: Y -> BG")->required();
  groupOpt(hpull);
  dimOpt(hpull);
  hpull->callback([&] {
    run = [&] {
      const auto G = here().group(groupFile);
      const auto bundle = universalBundle(G, maxDim);
      const auto f = overBuiltBG(here().map(mapFile), *bundle->BG);
      const auto hp = hpullObj(ObjOverBG{f.source(), f}, *bundle, pathSpaceBG(bundle->BG));
      emit(toJson(hp.action));
      return kOk;
    };
  });

  auto* verify = app.add_subcommand("verify-theorem", "Run both homotopies end to end on a G-space");
  groupOpt(verify);
  dimOpt(verify);
  verify->add_option("--gspace", gspaceFile, "G-space file")->required();
  auto* verifyBound = verify->add_option("--degree-bound", degreeBound, "Degree bound for certificates (default N-1)");
  verify->add_option("--over-bg", overBGName, "hcolim | basepoint | identity");
  verify->add_option("--report", reportFile, "Write the report here");
  verify->callback([&] {
    run = [&] {
      const auto G = here().group(groupFile);
      if (verifyBound->count() == 0) degreeBound = maxDim - 1;
      TheoremInput input{here().gspace(gspaceFile, G), maxDim, degreeBound, overBGChoiceFrom(overBGName)};
      requireDegreeBound(degreeBound, maxDim);
      const auto report = verifyTheorem(input);
      if (!reportFile.empty()) outPath = reportFile;
      Json out = toJson(report);
      out["maxDim"] = maxDim;
      out["degreeBound"] = degreeBound;
      out["overBG"] = toString(input.overBG);
      emit(out);
      return report.passed() ? kOk : kCheckFailed;
    };
  });

  auto* zigzag = app.add_subcommand("zigzag", "Zigzags in a finite relative category");
  zigzag->require_subcommand(1);
  auto* reduce = zigzag->add_subcommand("reduce", "Leftmost-first normal form with its trace");
  reduce->add_option("--relcat", relcatFile, "Relative category file")->required();
  reduce->add_option("--zigzag", zigzagFile, "Zigzag file")->required();
  reduce->callback([&] {
    run = [&] {
      const auto R = here().relcat(relcatFile);
      emit(toJson(R, normalForm(R, zigzagFromJson(R, readJson(zigzagFile)))));
      return kOk;
    };
  });
  auto* homset = zigzag->add_subcommand("homset", "Length-windowed hom-set of the homotopy category");
  homset->add_option("--relcat", relcatFile, "Relative category file")->required();
  homset->add_option("--from", fromName, "Source object")->required();
  homset->add_option("--to", toName, "Target object")->required();
  homset->add_option("--max-len", maxLen, "Longest zigzag enumerated");
  homset->add_option("--budget", rewriteBudget, "States per pairwise equivalence search");
  homset->callback([&] {
    run = [&] {
      requirePositive(rewriteBudget, "rewrite budget");
      requirePositive(static_cast<long long>(maxLen), "max length");
      const auto R = here().relcat(relcatFile);
      const auto from = R.cat.findObject(fromName), to = R.cat.findObject(toName);
      if (!from || !to) throw ParseError("unknown object");
      const auto h = homSet(R, *from, *to, maxLen);
      // Distinct classes must not be joined by a longer rewrite path inside the budget.
      Json pairs = Json::array();
      bool ok = true;
      for (std::size_t a = 0; a < h.representatives.size(); ++a)
        for (std::size_t b = a + 1; b < h.representatives.size(); ++b) {
          const auto e = equivalentZigzags(R, h.representatives[a], h.representatives[b],
                                           SearchBudget{static_cast<std::uint64_t>(rewriteBudget), maxLen + 2});
          ok = ok && !e.equivalent;
          pairs.push_back({{"a", a}, {"b", b}, {"equivalent", e.equivalent}, {"exhausted", e.exhausted}});
        }
      Json out = toJson(R, h);
      out["pairwise"] = pairs;
      emit(out);
      return ok ? kOk : kCheckFailed;
    };
  });

  auto* corpus = app.add_subcommand("corpus", "Run verify-theorem over a manifest");
  corpus->add_option("--manifest", manifestFile, "Corpus manifest")->required();
  corpus->add_option("--report", reportFile, "Write the aggregate report here");
  corpus->callback([&] {
    run = [&] {
      const auto entries = loadManifest(manifestFile);
      const auto summary = corpusRun(entries, threadsFromEnv());
      for (const auto& r : summary.results)
        std::cerr << (r.passed() ? "pass " : "FAIL ") << r.name << " (" << r.seconds << " s)\n";
      std::cerr << "total " << summary.seconds << " s\n";
      if (!reportFile.empty()) outPath = reportFile;
      emit(toJson(summary));
      return summary.ok() ? kOk : kCheckFailed;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kParse;
  }
  try {
    return run();
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const Error& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return kValidation;
  }
}
