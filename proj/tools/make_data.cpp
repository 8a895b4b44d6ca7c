// Regenerates the bundled fixtures under data/. Usage: borekit_make_data <data-dir>
#include "borekit/io.hpp"
#include "borekit/nerve.hpp"

#include <iostream>

using namespace borekit;
namespace fs = std::filesystem;

namespace {

constexpr int kSpaceDim = 4;

void put(const fs::path& dir, const std::string& name, const Json& j) { writeText(dir / name, dump(j)); }

Json mapRef(const std::string& source, const std::string& target, const SimplicialMap& f) {
  Json j = toJson(f);
  j["source"] = source;
  j["target"] = target;
  return j;
}

// x.g = g x: a left action written as a right one, which breaks the right law for
// non-abelian groups.
GSpace leftMultiplication(const GroupPtr& G) {
  auto space = discreteSpace(G->elements(), kSpaceDim);
  return GSpace::fromRule(space, G, [&](int g, const Simplex& s) {
    return Simplex{0, {}, static_cast<GeneratorIndex>(G->multiply(g, s.generator))};
  });
}

RelativeCategory oneArrow(bool weak) {
  return RelativeCategory{intervalCategory(), {true, weak, true}};
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: borekit_make_data <data-dir>\n";
    return 2;
  }
  const fs::path dir = argv[1];
  fs::create_directories(dir);

  const std::vector<std::pair<std::string, GroupPtr>> groups = {
      {"c2", std::make_shared<const FiniteGroup>(FiniteGroup::cyclic(2))},
      {"c3", std::make_shared<const FiniteGroup>(FiniteGroup::cyclic(3))},
      {"s3", std::make_shared<const FiniteGroup>(FiniteGroup::symmetric(3))}};
  for (const auto& [name, G] : groups) {
    put(dir, name + ".json", toJson(*G));
    put(dir, name + "_pt.json", toJson(pointSpace(G, kSpaceDim)));
    put(dir, name + "_torsor.json", toJson(torsor(G, kSpaceDim)));
    put(dir, name + "_s0.json", toJson(sphereS0(G, kSpaceDim)));
  }
  put(dir, "s3_left.json", toJson(leftMultiplication(groups[2].second)));

  // S0 -> pt and pt -> BC2.
  const auto s0 = discreteSpace({"+", "-"}, kSpaceDim);
  const auto pt = discreteSpace({"pt"}, kSpaceDim);
  put(dir, "s0.json", toJson(*s0));
  put(dir, "pt.json", toJson(*pt));
  put(dir, "fold.json", mapRef("s0.json", "pt.json", constantMap(s0, pt, 0)));
  const auto bc2 = buildBG(groups[0].second, kSpaceDim);
  put(dir, "bc2.json", toJson(*bc2->space()));
  put(dir, "pt_to_bc2.json", mapRef("pt.json", "bc2.json", constantMap(pt, bc2->space(), 0)));
  put(dir, "id_bc2.json", mapRef("bc2.json", "bc2.json", SimplicialMap::identity(bc2->space())));

  put(dir, "one_weak_arrow.json", toJson(oneArrow(true)));
  put(dir, "one_arrow.json", toJson(oneArrow(false)));
  const auto R = oneArrow(true);
  put(dir, "zigzag_back_and_forth.json", toJson(R, Zigzag{0, 1, {{1, true}, {1, false}, {1, true}, {2, true}}}));

  auto entry = [](const std::string& g, const std::string& space, int N, const std::string& over) {
    return Json{{"name", g + "-" + space},
                {"group", g + ".json"},
                {"gspace", g + "_" + space + ".json"},
                {"maxDim", N},
                {"degreeBound", N - 1},
                {"overBG", over},
                {"expect", "pass"}};
  };
  Json entries = Json::array();
  for (const auto& space : {"pt", "torsor", "s0"}) entries.push_back(entry("c2", space, 4, "hcolim"));
  for (const auto& space : {"pt", "torsor", "s0"}) entries.push_back(entry("c3", space, 3, "hcolim"));
  for (const auto& space : {"pt", "torsor", "s0"}) entries.push_back(entry("s3", space, 2, "basepoint"));
  put(dir, "corpus.json", {{"schema", schemaTag("corpus")}, {"entries", entries}});

  Json control = entries;
  Json broken = entry("s3", "left", 2, "basepoint");
  broken["expect"] = "fail";
  control.push_back(broken);
  put(dir, "corpus_with_control.json", {{"schema", schemaTag("corpus")}, {"entries", control}});
  put(dir, "corpus_empty.json", {{"schema", schemaTag("corpus")}, {"entries", Json::array()}});
  return 0;
}
