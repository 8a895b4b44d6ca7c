#include "borekit/equivalence.hpp"

#include <functional>

namespace borekit {

BorelConstruction hcolimObj(const GSpace& A, const UniversalBundle& bundle) { return borel(A, bundle); }

ObjOverBG overBG(const BorelConstruction& b) { return ObjOverBG{b.total(), b.q}; }

SimplicialMap hcolimMor(const BorelConstruction& from, const BorelConstruction& to, const SimplicialMap& m) {
  if (!validateEquivariant(m, from.base, to.base)) throw ValidationError("hcolim: map is not equivariant");
  const auto& P = *from.product;
  auto lifted = SimplicialMap::fromRule(P.space(), to.product->space(), [&](const Simplex& s) {
    return to.product->pair(m(P.first()(s)), P.second()(s));
  });
  return from.quotient->descend(compose(to.quotient->projection(), lifted));
}

Hpull hpullObj(const ObjOverBG& f, const UniversalBundle& bundle, const PathSpace& path) {
  if (!sameSpace(f.structure.source(), f.total)) throw ValidationError("hpull: structure map does not start at the total space");
  auto R = mappingPath(f.structure, path);
  const int N = std::min(R.Rf.maxDim(), bundle.projection.maxDim());
  auto pairs = std::make_shared<const PairSpace>(pullback(R.Rf, bundle.projection, N));
  auto action = secondFactorAction(*pairs, bundle.action);
  return Hpull{std::move(R), std::move(pairs), std::move(action)};
}

SimplicialMap hpullMor(const Hpull& from, const Hpull& to, const SimplicialMap& u) {
  const auto Ru = mappingPathMap(from.replacement, to.replacement, u);
  const auto& P = *from.pairs;
  return SimplicialMap::fromRule(P.space(), to.space(),
                                 [&](const Simplex& s) { return to.pairs->pair(Ru(P.first()(s)), P.second()(s)); });
}

KIso kIso(const BorelConstruction& b, const UniversalBundle& bundle) {
  const int N = std::min(b.q.maxDim(), bundle.projection.maxDim());
  auto target = std::make_shared<const PairSpace>(pullback(b.q, bundle.projection, N));
  auto action = secondFactorAction(*target, bundle.action);
  const auto& P = *b.product;
  const auto& proj = b.quotient->projection();
  auto map = SimplicialMap::fromRule(P.space(), target->space(),
                                     [&](const Simplex& s) { return target->pair(proj(s), P.second()(s)); });
  return KIso{std::move(target), std::move(action), std::move(map)};
}

SimplicialMap hMapObj(const BorelConstruction& b, const KIso& k) {
  return compose(b.product->first(), inverse(k.map));
}

SimplicialMap zeroMorphism(const SpacePtr& R, const UniversalBundle& bundle) {
  return constantMap(R, bundle.EG->space(), static_cast<GeneratorIndex>(bundle.group->identity()));
}

SectionData sectionData(const Hpull& hp, const UniversalBundle& bundle) {
  auto quotient = borel(hp.action, bundle);
  const auto& outer = *quotient.product;
  const auto& inner = *hp.pairs;
  auto F = quotient.quotient->descend(compose(inner.first(), outer.first()));
  const auto& Rf = hp.replacement.Rf;
  const auto& proj = quotient.quotient->projection();
  auto s = SimplicialMap::fromRule(hp.replacement.space(), quotient.total(), [&](const Simplex& r) {
    const Simplex lift = bundle.lift(Rf(r));
    return proj(outer.pair(inner.pair(r, lift), lift));
  });
  return SectionData{std::move(quotient), std::move(F), std::move(s)};
}

HSide hSide(const GSpace& A, const UniversalBundle& bundle) {
  auto b = hcolimObj(A, bundle);
  auto k = kIso(b, bundle);
  auto arrow = hMapObj(b, k);
  return HSide{std::move(b), std::move(k), std::move(arrow)};
}

SimplicialMap hMorphism(const HSide& from, const HSide& to, const SimplicialMap& m, int index) {
  if (index == 1) return m;
  if (index != 0) throw RangeError("homotopy step index must be 0 or 1");
  const auto mbar = hcolimMor(from.borel, to.borel, m);
  const auto& P = *from.k.target;
  return SimplicialMap::fromRule(P.space(), to.k.target->space(),
                                 [&](const Simplex& s) { return to.k.target->pair(mbar(P.first()(s)), P.second()(s)); });
}

KSide kSide(const ObjOverBG& f, const UniversalBundle& bundle, const PathSpace& path) {
  auto hp = hpullObj(f, bundle, path);
  auto section = sectionData(hp, bundle);
  auto arrow = compose(section.s, hp.replacement.iota);
  return KSide{f, std::move(hp), std::move(section), std::move(arrow)};
}

SimplicialMap kMorphism(const KSide& from, const KSide& to, const SimplicialMap& u, int index) {
  if (index == 0) return u;
  if (index != 1) throw RangeError("homotopy step index must be 0 or 1");
  return hcolimMor(from.section.quotient, to.section.quotient, hpullMor(from.hpull, to.hpull, u));
}

std::string toString(OverBGChoice c) {
  switch (c) {
    case OverBGChoice::Hcolim: return "hcolim";
    case OverBGChoice::Basepoint: return "basepoint";
    case OverBGChoice::Identity: return "identity";
  }
  return "hcolim";
}

OverBGChoice overBGChoiceFrom(const std::string& s) {
  if (s == "hcolim") return OverBGChoice::Hcolim;
  if (s == "basepoint") return OverBGChoice::Basepoint;
  if (s == "identity") return OverBGChoice::Identity;
  throw ParseError("unknown over-BG choice '" + s + "' (expected hcolim, basepoint or identity)");
}

bool TheoremReport::passed() const {
  if (halted) return false;
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

namespace {

std::string describe(const Certificate& c) {
  std::string out = "pi0 " + std::string(c.pi0Bijective ? "bijective" : "not bijective");
  for (const auto& d : c.degrees)
    out += "; H" + std::to_string(d.degree) + " " + toString(d.source) + " -> " + toString(d.target) + " " +
           toString(d.status);
  if (c.side) out += "; " + c.side->name + (c.side->ok ? " ok" : " failed " + c.side->witness);
  return out;
}

std::string firstDifference(const SimplicialMap& a, const SimplicialMap& b) {
  if (!sameSpace(a.source(), b.source()) || !sameSpace(a.target(), b.target())) return "endpoints differ";
  for (int n = 0; n <= std::min(a.maxDim(), b.maxDim()); ++n)
    for (GeneratorIndex g = 0; g < static_cast<GeneratorIndex>(a.source()->generatorCount(n)); ++g)
      if (a.image(n, g) != b.image(n, g))
        return "differ on " + a.source()->name(n, g) + ": " + a.target()->simplexName(a.image(n, g)) + " vs " +
               b.target()->simplexName(b.image(n, g));
  return a.maxDim() == b.maxDim() ? "" : "truncations differ";
}

class Recorder {
 public:
  explicit Recorder(TheoremReport& r) : report_(r) {}

  bool check(const std::string& name, const std::function<std::pair<bool, std::string>()>& fn) {
    TheoremCheck c{name, false, {}};
    try {
      auto [ok, detail] = fn();
      c.passed = ok;
      c.detail = std::move(detail);
    } catch (const Error& e) {
      c.detail = std::string("error: ") + e.what();
    }
    report_.checks.push_back(c);
    return c.passed;
  }
  bool equal(const std::string& name, const std::function<std::pair<SimplicialMap, SimplicialMap>()>& fn) {
    return check(name, [&] {
      auto [a, b] = fn();
      auto diff = firstDifference(a, b);
      return std::pair{diff.empty(), diff};
    });
  }
  bool certificate(const std::string& name, const std::function<Certificate()>& fn) {
    return check(name, [&] {
      auto c = fn();
      return std::pair{c.verdict, describe(c)};
    });
  }

 private:
  TheoremReport& report_;
};

int centralTestElement(const FiniteGroup& G) {
  for (int c = 0; c < G.order(); ++c) {
    if (c == G.identity()) continue;
    bool central = true;
    for (int g = 0; g < G.order() && central; ++g) central = G.multiply(c, g) == G.multiply(g, c);
    if (central) return c;
  }
  return G.identity();
}

}  // namespace

TheoremReport verifyTheorem(const TheoremInput& input) {
  TheoremReport report;
  Recorder rec(report);
  const auto& A = input.space;
  const int N = input.maxDim;
  const int d = input.degreeBound;

  const bool groupOk = rec.check("group.valid", [&] {
    auto r = validateGroup(*A.group);
    return std::pair{r.ok(), r.ok() ? std::string() : r.violations.front()};
  });
  const bool actionOk = groupOk && rec.check("action.valid", [&] {
    auto r = validateAction(A);
    return std::pair{r.ok(), r.ok() ? std::string() : r.violations.front()};
  });
  if (!actionOk) {
    report.halted = true;
    return report;
  }
  if (d < 0 || d > N - 1 || A.space->maxDim() < N) {
    rec.check("input.truncation", [&] {
      return std::pair{false, "need degree bound <= maxDim - 1 and a space truncated at >= maxDim"};
    });
    report.halted = true;
    return report;
  }

  const auto bundle = universalBundle(A.group, N);
  const auto path = pathSpaceBG(bundle->BG);
  const int c = centralTestElement(*A.group);
  const SimplicialMap m = A.act(c);

  rec.check("eg.free", [&] { return std::pair{isFree(bundle->action), std::string()}; });
  rec.check("eg.quotient-iso", [&] { return std::pair{isIsomorphism(egQuotientIsBG(*bundle).map), std::string()}; });

  // G-space side: hcolim, K and the homotopy h.
  const HSide h = hSide(A, *bundle);
  const auto& q = h.borel.q;
  rec.check("hcolim.q-simplicial", [&] {
    auto r = q.validate();
    return std::pair{r.ok(), r.ok() ? std::string() : r.violations.front()};
  });
  const SimplicialMap mbar = hcolimMor(h.borel, h.borel, m);
  rec.equal("hcolim.identity", [&] {
    return std::pair{hcolimMor(h.borel, h.borel, SimplicialMap::identity(A.space)), SimplicialMap::identity(h.borel.total())};
  });
  rec.equal("hcolim.composition", [&] {
    return std::pair{hcolimMor(h.borel, h.borel, compose(m, m)), compose(mbar, mbar)};
  });
  rec.equal("hcolim.over-base", [&] { return std::pair{compose(q, mbar), q}; });
  rec.certificate("hcolim.preserves-we", [&] {
    return sigmaCertificate(mbar, q, q, d);
  });
  rec.check("kiso.isomorphism", [&] { return std::pair{isIsomorphism(h.k.map), std::string()}; });
  rec.check("kiso.equivariant", [&] {
    return std::pair{validateEquivariant(h.k.map, h.borel.diagonal, h.k.targetAction), std::string()};
  });
  rec.check("h.boundary", [&] {
    const bool ok = sameSpace(h.arrow.source(), h.object0()) && sameSpace(h.arrow.target(), h.object1()) &&
                    hMorphism(h, h, SimplicialMap::identity(A.space), 0) == SimplicialMap::identity(h.object0());
    return std::pair{ok, std::string()};
  });
  rec.certificate("h.arrow-omega", [&] { return omegaCertificate(h.arrow, h.k.targetAction, A, d); });
  rec.equal("h.naturality", [&] {
    return std::pair{compose(h.arrow, hMorphism(h, h, m, 0)), compose(hMorphism(h, h, m, 1), h.arrow)};
  });

  // Over-BG side: replacement, hpull, F, s and the homotopy k.
  ObjOverBG f = [&] {
    switch (input.overBG) {
      case OverBGChoice::Basepoint: {
        auto pt = discreteSpace({"pt"}, N);
        return ObjOverBG{pt, constantMap(pt, bundle->BG->space(), 0)};
      }
      case OverBGChoice::Identity:
        return ObjOverBG{bundle->BG->space(), SimplicialMap::identity(bundle->BG->space())};
      case OverBGChoice::Hcolim: break;
    }
    return overBG(h.borel);
  }();
  const SimplicialMap u = input.overBG == OverBGChoice::Hcolim ? mbar : SimplicialMap::identity(f.total);

  const KSide k = kSide(f, *bundle, path);
  const auto& R = k.hpull.replacement;
  rec.check("replace.valid", [&] {
    auto r = validate(*R.space());
    r.merge(R.Rf.validate());
    r.merge(R.iota.validate());
    return std::pair{r.ok(), r.ok() ? std::string() : r.violations.front()};
  });
  rec.equal("replace.factorization", [&] { return std::pair{compose(R.Rf, R.iota), f.structure}; });
  rec.certificate("replace.iota-we", [&] { return weakEquivalenceCertificate(R.iota, d); });
  rec.check("hpull.action", [&] {
    auto r = validateAction(k.hpull.action);
    return std::pair{r.ok() && isFree(k.hpull.action), r.ok() ? std::string() : r.violations.front()};
  });
  const SimplicialMap hu = hpullMor(k.hpull, k.hpull, u);
  rec.certificate("hpull.preserves-we", [&] { return omegaCertificate(hu, k.hpull.action, k.hpull.action, d); });
  rec.equal("section.F-after-s", [&] {
    return std::pair{compose(k.section.F, k.section.s), SimplicialMap::identity(R.space())};
  });
  rec.certificate("section.F-we", [&] { return weakEquivalenceCertificate(k.section.F, d); });
  rec.certificate("section.s-sigma", [&] { return sigmaCertificate(k.section.s, R.Rf, k.object1(), d); });
  rec.check("k.boundary", [&] {
    const bool ok = sameSpace(k.arrow.source(), f.total) && sameSpace(k.arrow.target(), k.object1().source()) &&
                    kMorphism(k, k, SimplicialMap::identity(f.total), 1) ==
                        SimplicialMap::identity(k.object1().source());
    return std::pair{ok, std::string()};
  });
  rec.certificate("k.arrow-sigma", [&] { return sigmaCertificate(k.arrow, f.structure, k.object1(), d); });
  rec.equal("k.naturality", [&] {
    return std::pair{compose(kMorphism(k, k, u, 1), k.arrow), compose(k.arrow, kMorphism(k, k, u, 0))};
  });
  return report;
}

}  // namespace borekit
