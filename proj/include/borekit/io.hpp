#pragma once

#include "borekit/equivalence.hpp"
#include "borekit/fibrant.hpp"
#include "borekit/group.hpp"
#include "borekit/homology.hpp"
#include "borekit/simplicial.hpp"
#include "borekit/zigzag.hpp"

#include <json.hpp>

#include <filesystem>
#include <string>

namespace borekit {

using Json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

/// "borekit/<kind>/<version>", stored under "schema" in every document.
std::string schemaTag(const std::string& kind);

/// Keys sorted, two-space indent, trailing newline.
std::string dump(const Json& j);

Json readJson(const std::filesystem::path& path);
void writeText(const std::filesystem::path& path, const std::string& text);

/// Resolves references inside documents: a string is a path relative to `base`, an
/// object is the document inline.
class Loader {
 public:
  explicit Loader(std::filesystem::path base = ".") : base_(std::move(base)) {}
  static Loader forFile(const std::filesystem::path& file);

  SpacePtr space(const Json& ref) const;
  SimplicialMap map(const Json& ref) const;
  GroupPtr group(const Json& ref) const;
  GSpace gspace(const Json& ref, const GroupPtr& group) const;
  RelativeCategory relcat(const Json& ref) const;

 private:
  std::pair<Json, Loader> resolve(const Json& ref) const;
  std::filesystem::path base_;
};

// Spaces: {maxDim, generators: [[ids per dim]], faces: [{gen, i, word, target}]}.
Json toJson(const SimplicialSet& X);
SpacePtr spaceFromJson(const Json& j);

// Maps: {source, target, assignment: [{gen, word, target}]} with spaces inline.
Json toJson(const SimplicialMap& f);
SimplicialMap mapFromJson(const Json& j, const SpacePtr& source, const SpacePtr& target);

// Groups: {elements, identity, table} with the table written by element ids.
Json toJson(const FiniteGroup& G);
FiniteGroup groupFromJson(const Json& j);

// G-spaces: {space, actions: [{element, assignment}]}. Elements without an entry act
// as the identity only if they are the group identity.
Json toJson(const GSpace& A);
GSpace gspaceFromJson(const Json& j, const SpacePtr& space, const GroupPtr& group);

// Relative categories: {objects, morphisms: [{name, source, target}], identities,
// composition: [[f, g, then(f, g)]], weak}.
Json toJson(const RelativeCategory& R);
RelativeCategory relcatFromJson(const Json& j);

// Zigzags: {from, to, steps: [{morphism, direction: "forward" | "backward"}]}.
Json toJson(const RelativeCategory& R, const Zigzag& z);
Zigzag zigzagFromJson(const RelativeCategory& R, const Json& j);

std::string simplexId(const SimplicialSet& X, const Simplex& s);

Json toJson(const HomologyGroup& H);
Json toJson(const Certificate& c);
Json toJson(const HornCheck& h);
Json toJson(const TheoremReport& r);
Json toJson(const RelativeCategory& R, const NormalForm& nf);
Json toJson(const RelativeCategory& R, const HomSet& h);

}  // namespace borekit
