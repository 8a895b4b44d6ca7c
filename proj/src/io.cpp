#include "borekit/io.hpp"

#include <fstream>
#include <map>

namespace borekit {

namespace fs = std::filesystem;

std::string schemaTag(const std::string& kind) { return "borekit/" + kind + "/" + std::to_string(kSchemaVersion); }

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json readJson(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

void writeText(const fs::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write " + path.string());
  out << text;
}

namespace {

// Typed field access that reports missing or mistyped keys as ParseError.
template <typename T>
T field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const Json::exception&) {
    throw ParseError(std::string("field '") + key + "' has the wrong type");
  }
}

const Json& child(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  return j.at(key);
}

void checkSchema(const Json& j, const std::string& kind) {
  if (j.is_object() && j.contains("schema") && j.at("schema") != schemaTag(kind))
    throw ParseError("expected schema " + schemaTag(kind) + ", got " + j.at("schema").dump());
}

Json wordJson(DegeneracyWord w) { return w.indices(); }

std::pair<int, GeneratorIndex> lookup(const std::map<std::string, std::pair<int, GeneratorIndex>>& ids,
                                      const std::string& id) {
  auto it = ids.find(id);
  if (it == ids.end()) throw ParseError("unknown generator '" + id + "'");
  return it->second;
}

Simplex simplexFrom(const SimplicialSet& X, const Json& entry) {
  const auto id = field<std::string>(entry, "target");
  const auto found = X.find(id);
  if (!found) throw ParseError("unknown generator '" + id + "'");
  const auto indices = field<std::vector<int>>(entry, "word");
  const auto word = DegeneracyWord::fromIndices(indices);
  return Simplex{found->first + word.length(), word, found->second};
}

Json assignmentJson(const SimplicialMap& f) {
  Json out = Json::array();
  const auto& X = *f.source();
  const auto& Y = *f.target();
  for (int d = 0; d <= f.maxDim(); ++d)
    for (GeneratorIndex g = 0; g < static_cast<GeneratorIndex>(X.generatorCount(d)); ++g) {
      const Simplex& s = f.image(d, g);
      out.push_back({{"gen", X.name(d, g)}, {"word", wordJson(s.word)}, {"target", Y.name(s.generatorDim(), s.generator)}});
    }
  return out;
}

SimplicialMap assignmentFrom(const Json& entries, const SpacePtr& source, const SpacePtr& target) {
  const int top = std::min(source->maxDim(), target->maxDim());
  std::vector<std::vector<std::optional<Simplex>>> slots(static_cast<std::size_t>(top) + 1);
  for (int d = 0; d <= top; ++d) slots[d].resize(source->generatorCount(d));
  if (!entries.is_array()) throw ParseError("assignment must be a list");
  for (const auto& e : entries) {
    const auto id = field<std::string>(e, "gen");
    const auto found = source->find(id);
    if (!found) throw ParseError("unknown source generator '" + id + "'");
    if (found->first > top) continue;
    auto& slot = slots[found->first][found->second];
    if (slot) throw ParseError("generator '" + id + "' assigned twice");
    slot = simplexFrom(*target, e);
    if (slot->dim != found->first) throw ParseError("image of '" + id + "' has the wrong dimension");
  }
  std::vector<std::vector<Simplex>> assignment(slots.size());
  for (int d = 0; d <= top; ++d)
    for (std::size_t g = 0; g < slots[d].size(); ++g) {
      if (!slots[d][g]) throw ParseError("no image for generator '" + source->name(d, static_cast<GeneratorIndex>(g)) + "'");
      assignment[d].push_back(*slots[d][g]);
    }
  return SimplicialMap(source, target, std::move(assignment));
}

Json statusJson(Certificate::Status s) { return toString(s); }

}  // namespace

Loader Loader::forFile(const fs::path& file) { return Loader(file.parent_path().empty() ? "." : file.parent_path()); }

std::pair<Json, Loader> Loader::resolve(const Json& ref) const {
  if (ref.is_string()) {
    const fs::path p = base_ / ref.get<std::string>();
    return {readJson(p), forFile(p)};
  }
  if (ref.is_object()) return {ref, *this};
  throw ParseError("a reference must be a path or an inline document");
}

SpacePtr Loader::space(const Json& ref) const {
  auto [j, loader] = resolve(ref);
  auto X = spaceFromJson(j);
  if (auto report = validate(*X); !report.ok()) throw ValidationError("space: " + report.violations.front());
  return X;
}

SimplicialMap Loader::map(const Json& ref) const {
  auto [j, loader] = resolve(ref);
  checkSchema(j, "map");
  auto f = mapFromJson(j, loader.space(child(j, "source")), loader.space(child(j, "target")));
  if (auto report = f.validate(); !report.ok()) throw ValidationError("map: " + report.violations.front());
  return f;
}

GroupPtr Loader::group(const Json& ref) const {
  auto [j, loader] = resolve(ref);
  auto G = std::make_shared<const FiniteGroup>(groupFromJson(j));
  if (auto report = validateGroup(*G); !report.ok()) throw ValidationError("group: " + report.violations.front());
  return G;
}

GSpace Loader::gspace(const Json& ref, const GroupPtr& group) const {
  auto [j, loader] = resolve(ref);
  checkSchema(j, "gspace");
  return gspaceFromJson(j, loader.space(child(j, "space")), group);
}

RelativeCategory Loader::relcat(const Json& ref) const {
  auto [j, loader] = resolve(ref);
  auto R = relcatFromJson(j);
  if (auto report = validateRelativeCategory(R); !report.ok())
    throw ValidationError("relative category: " + report.violations.front());
  return R;
}

Json toJson(const SimplicialSet& X) {
  Json generators = Json::array(), faces = Json::array();
  for (int d = 0; d <= X.maxDim(); ++d) {
    generators.push_back(X.names(d));
    if (d == 0) continue;
    for (GeneratorIndex g = 0; g < static_cast<GeneratorIndex>(X.generatorCount(d)); ++g)
      for (int i = 0; i <= d; ++i) {
        const Simplex& f = X.generatorFace(d, g, i);
        faces.push_back({{"gen", X.name(d, g)},
                         {"i", i},
                         {"word", wordJson(f.word)},
                         {"target", X.name(f.generatorDim(), f.generator)}});
      }
  }
  return {{"schema", schemaTag("space")}, {"maxDim", X.maxDim()}, {"generators", generators}, {"faces", faces}};
}

SpacePtr spaceFromJson(const Json& j) {
  checkSchema(j, "space");
  const int maxDim = field<int>(j, "maxDim");
  if (maxDim < 0 || maxDim > DegeneracyWord::kMaxIndex) throw ParseError("maxDim out of range");
  auto names = field<std::vector<std::vector<std::string>>>(j, "generators");
  if (names.size() > static_cast<std::size_t>(maxDim) + 1) throw ParseError("generators listed above maxDim");
  names.resize(static_cast<std::size_t>(maxDim) + 1);
  std::map<std::string, std::pair<int, GeneratorIndex>> ids;
  for (int d = 0; d <= maxDim; ++d)
    for (std::size_t g = 0; g < names[d].size(); ++g)
      if (!ids.emplace(names[d][g], std::pair{d, static_cast<GeneratorIndex>(g)}).second)
        throw ParseError("duplicate generator id '" + names[d][g] + "'");

  std::vector<std::vector<std::optional<Simplex>>> slots(names.size());
  for (int d = 1; d <= maxDim; ++d) slots[d].resize(names[d].size() * static_cast<std::size_t>(d + 1));
  const auto& faceList = child(j, "faces");
  if (!faceList.is_array()) throw ParseError("faces must be a list");
  for (const auto& e : faceList) {
    const auto [d, g] = lookup(ids, field<std::string>(e, "gen"));
    const int i = field<int>(e, "i");
    if (d == 0 || i < 0 || i > d) throw ParseError("face index out of range for '" + names[d][g] + "'");
    const auto [td, tg] = lookup(ids, field<std::string>(e, "target"));
    const auto indices = field<std::vector<int>>(e, "word");
    const auto word = DegeneracyWord::fromIndices(indices);
    auto& slot = slots[d][static_cast<std::size_t>(g) * (d + 1) + i];
    if (slot) throw ParseError("face " + std::to_string(i) + " of '" + names[d][g] + "' given twice");
    slot = Simplex{td + word.length(), word, tg};
  }
  std::vector<std::vector<Simplex>> faces(names.size());
  for (int d = 1; d <= maxDim; ++d)
    for (std::size_t k = 0; k < slots[d].size(); ++k) {
      if (!slots[d][k])
        throw ParseError("missing face " + std::to_string(k % (d + 1)) + " of '" + names[d][k / (d + 1)] + "'");
      faces[d].push_back(*slots[d][k]);
    }
  return std::make_shared<const SimplicialSet>(maxDim, std::move(names), std::move(faces));
}

Json toJson(const SimplicialMap& f) {
  return {{"schema", schemaTag("map")},
          {"source", toJson(*f.source())},
          {"target", toJson(*f.target())},
          {"assignment", assignmentJson(f)}};
}

SimplicialMap mapFromJson(const Json& j, const SpacePtr& source, const SpacePtr& target) {
  checkSchema(j, "map");
  return assignmentFrom(child(j, "assignment"), source, target);
}

Json toJson(const FiniteGroup& G) {
  Json table = Json::array();
  for (int a = 0; a < G.order(); ++a) {
    Json row = Json::array();
    for (int b = 0; b < G.order(); ++b) row.push_back(G.name(G.multiply(a, b)));
    table.push_back(row);
  }
  return {{"schema", schemaTag("group")}, {"elements", G.elements()}, {"identity", G.name(G.identity())}, {"table", table}};
}

FiniteGroup groupFromJson(const Json& j) {
  checkSchema(j, "group");
  auto elements = field<std::vector<std::string>>(j, "elements");
  std::map<std::string, int> index;
  for (std::size_t a = 0; a < elements.size(); ++a)
    if (!index.emplace(elements[a], static_cast<int>(a)).second) throw ParseError("duplicate element '" + elements[a] + "'");
  auto id = [&](const std::string& name) {
    auto it = index.find(name);
    if (it == index.end()) throw ParseError("unknown element '" + name + "'");
    return it->second;
  };
  const int identity = id(field<std::string>(j, "identity"));
  const auto rows = field<std::vector<std::vector<std::string>>>(j, "table");
  if (rows.size() != elements.size()) throw ParseError("multiplication table must be square");
  std::vector<int> table;
  for (const auto& row : rows) {
    if (row.size() != elements.size()) throw ParseError("multiplication table must be square");
    for (const auto& x : row) table.push_back(id(x));
  }
  return FiniteGroup(std::move(elements), identity, std::move(table));
}

Json toJson(const GSpace& A) {
  Json actions = Json::array();
  for (int g = 0; g < A.group->order(); ++g)
    actions.push_back({{"element", A.group->name(g)}, {"assignment", assignmentJson(A.act(g))}});
  return {{"schema", schemaTag("gspace")}, {"space", toJson(*A.space)}, {"actions", actions}};
}

GSpace gspaceFromJson(const Json& j, const SpacePtr& space, const GroupPtr& group) {
  checkSchema(j, "gspace");
  std::vector<std::optional<SimplicialMap>> maps(static_cast<std::size_t>(group->order()));
  const auto& actions = child(j, "actions");
  if (!actions.is_array()) throw ParseError("actions must be a list");
  for (const auto& a : actions) {
    const auto name = field<std::string>(a, "element");
    const auto g = group->find(name);
    if (!g) throw ParseError("action names unknown element '" + name + "'");
    if (maps[*g]) throw ParseError("action of '" + name + "' given twice");
    maps[*g] = assignmentFrom(child(a, "assignment"), space, space);
  }
  GSpace out{space, group, {}};
  for (int g = 0; g < group->order(); ++g) {
    if (!maps[g] && g != group->identity()) throw ParseError("no action given for '" + group->name(g) + "'");
    out.action.push_back(maps[g] ? *maps[g] : SimplicialMap::identity(space));
  }
  return out;
}

Json toJson(const RelativeCategory& R) {
  const auto& C = R.cat;
  Json objects = Json::array(), morphisms = Json::array(), identities = Json::array(), composition = Json::array(),
       weak = Json::array();
  for (int o = 0; o < C.objectCount(); ++o) {
    objects.push_back(C.objectName(o));
    identities.push_back(C.morphism(C.identity(o)).name);
  }
  for (int f = 0; f < C.morphismCount(); ++f) {
    morphisms.push_back(
        {{"name", C.morphism(f).name}, {"source", C.objectName(C.source(f))}, {"target", C.objectName(C.target(f))}});
    if (R.isWeak(f)) weak.push_back(C.morphism(f).name);
    for (int g = 0; g < C.morphismCount(); ++g)
      if (const int fg = C.then(f, g); fg >= 0)
        composition.push_back({C.morphism(f).name, C.morphism(g).name, C.morphism(fg).name});
  }
  return {{"schema", schemaTag("relcat")}, {"objects", objects},         {"morphisms", morphisms},
          {"identities", identities},      {"composition", composition}, {"weak", weak}};
}

RelativeCategory relcatFromJson(const Json& j) {
  checkSchema(j, "relcat");
  auto objects = field<std::vector<std::string>>(j, "objects");
  std::map<std::string, int> objectIndex, morphismIndex;
  for (std::size_t o = 0; o < objects.size(); ++o)
    if (!objectIndex.emplace(objects[o], static_cast<int>(o)).second)
      throw ParseError("duplicate object '" + objects[o] + "'");
  auto find = [](const std::map<std::string, int>& m, const std::string& k, const char* what) {
    auto it = m.find(k);
    if (it == m.end()) throw ParseError(std::string("unknown ") + what + " '" + k + "'");
    return it->second;
  };
  std::vector<FiniteCategory::Morphism> morphisms;
  for (const auto& m : child(j, "morphisms")) {
    auto name = field<std::string>(m, "name");
    if (!morphismIndex.emplace(name, static_cast<int>(morphisms.size())).second)
      throw ParseError("duplicate morphism '" + name + "'");
    morphisms.push_back({find(objectIndex, field<std::string>(m, "source"), "object"),
                         find(objectIndex, field<std::string>(m, "target"), "object"), std::move(name)});
  }
  std::vector<int> identities;
  for (const auto& id : field<std::vector<std::string>>(j, "identities"))
    identities.push_back(find(morphismIndex, id, "morphism"));
  const auto n = morphisms.size();
  std::vector<int> composition(n * n, -1);
  for (const auto& t : field<std::vector<std::vector<std::string>>>(j, "composition")) {
    if (t.size() != 3) throw ParseError("composition entries are [f, g, then(f, g)]");
    const int f = find(morphismIndex, t[0], "morphism"), g = find(morphismIndex, t[1], "morphism");
    if (morphisms[f].target != morphisms[g].source) throw ParseError("composition of non-composable " + t[0] + ", " + t[1]);
    composition[static_cast<std::size_t>(f) * n + g] = find(morphismIndex, t[2], "morphism");
  }
  for (std::size_t f = 0; f < n; ++f)
    for (std::size_t g = 0; g < n; ++g)
      if (morphisms[f].target == morphisms[g].source && composition[f * n + g] < 0)
        throw ParseError("composition table misses " + morphisms[f].name + " then " + morphisms[g].name);
  RelativeCategory R{FiniteCategory(std::move(objects), std::move(morphisms), std::move(identities), std::move(composition)),
                     std::vector<bool>(n, false)};
  for (const auto& w : field<std::vector<std::string>>(j, "weak")) R.weak[find(morphismIndex, w, "morphism")] = true;
  return R;
}

Json toJson(const RelativeCategory& R, const Zigzag& z) {
  Json steps = Json::array();
  for (const auto& s : z.steps)
    steps.push_back({{"morphism", R.cat.morphism(s.morphism).name}, {"direction", s.forward ? "forward" : "backward"}});
  return {{"schema", schemaTag("zigzag")},
          {"from", R.cat.objectName(z.from)},
          {"to", R.cat.objectName(z.to)},
          {"steps", steps},
          {"text", toString(R, z)}};
}

Zigzag zigzagFromJson(const RelativeCategory& R, const Json& j) {
  checkSchema(j, "zigzag");
  const auto& C = R.cat;
  auto object = [&](const std::string& name) {
    auto o = C.findObject(name);
    if (!o) throw ParseError("unknown object '" + name + "'");
    return *o;
  };
  Zigzag z{object(field<std::string>(j, "from")), object(field<std::string>(j, "to")), {}};
  for (const auto& s : child(j, "steps")) {
    const auto name = field<std::string>(s, "morphism");
    const auto f = C.findMorphism(name);
    if (!f) throw ParseError("unknown morphism '" + name + "'");
    const auto dir = field<std::string>(s, "direction");
    if (dir != "forward" && dir != "backward") throw ParseError("direction must be forward or backward");
    z.steps.push_back({*f, dir == "forward"});
  }
  if (auto report = validateZigzag(R, z); !report.ok()) throw ValidationError("zigzag: " + report.violations.front());
  return z;
}

std::string simplexId(const SimplicialSet& X, const Simplex& s) { return X.simplexName(s); }

Json toJson(const HomologyGroup& H) {
  Json torsion = Json::array();
  for (const auto& t : H.torsion) torsion.push_back(t.get_str());
  return {{"betti", H.betti}, {"torsion", torsion}, {"text", toString(H)}};
}

Json toJson(const Certificate& c) {
  Json degrees = Json::array();
  for (const auto& d : c.degrees)
    degrees.push_back(
        {{"degree", d.degree}, {"status", statusJson(d.status)}, {"source", toJson(d.source)}, {"target", toJson(d.target)}});
  Json side = nullptr;
  if (c.side) side = {{"name", c.side->name}, {"ok", c.side->ok}, {"witness", c.side->witness}};
  return {{"schema", schemaTag("certificate")},
          {"degreeBound", c.degreeBound},
          {"pi0Bijective", c.pi0Bijective},
          {"degrees", degrees},
          {"side", side},
          {"verdict", c.verdict},
          {"note", "necessary conditions up to the degree bound, not a proof of weak equivalence"}};
}

Json toJson(const HornCheck& h) {
  Json witness = nullptr;
  if (h.witness)
    witness = {{"n", h.witness->n}, {"k", h.witness->k}, {"base", h.witness->base}, {"faces", h.witness->faces}};
  return {{"status", toString(h.status)}, {"problems", h.problems}, {"witness", witness}};
}

Json toJson(const TheoremReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  return {{"schema", schemaTag("theorem")}, {"checks", checks}, {"halted", r.halted}, {"passed", r.passed()}};
}

Json toJson(const RelativeCategory& R, const NormalForm& nf) {
  Json trace = Json::array();
  for (const auto& step : nf.trace)
    trace.push_back({{"rule", toString(step.rule)}, {"position", step.position}, {"result", toString(R, step.result)}});
  return {{"schema", schemaTag("normal-form")}, {"result", toJson(R, nf.result)}, {"trace", trace}};
}

Json toJson(const RelativeCategory& R, const HomSet& h) {
  Json classes = Json::array();
  for (std::size_t c = 0; c < h.representatives.size(); ++c)
    classes.push_back({{"representative", toJson(R, h.representatives[c])}, {"size", h.classSizes[c]}});
  return {{"schema", schemaTag("homset")},
          {"maxLen", h.maxLen},
          {"enumerated", h.enumerated},
          {"classes", classes},
          {"note", "classes are exact only within the length window"}};
}

}  // namespace borekit
