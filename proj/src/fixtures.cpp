#include "rmb/fixtures.hpp"

#include "rmb/identify.hpp"
#include "rmb/pd_io.hpp"

#include <json.hpp>

#include <map>
#include <stdexcept>

namespace rmb {

extern const std::map<std::string, std::string> kFixtureFiles;

std::vector<std::string> fixture_names() { return {"U", "example_D", "unknot_D", "twist_F"}; }

Fixture fixture(const std::string& name) {
  auto it = kFixtureFiles.find(name + ".manifest.json");
  if (it == kFixtureFiles.end()) throw std::out_of_range("no fixture named " + name);
  Fixture f;
  f.name = name;
  f.manifest = it->second;
  auto m = nlohmann::json::parse(f.manifest);
  f.diagram = parse_diagram(kFixtureFiles.at(m.at("diagram").get<std::string>()));
  f.moves.initial = f.diagram;
  if (m.contains("moves")) f.moves.events = parse_events(kFixtureFiles.at(m.at("moves").get<std::string>()));
  return f;
}

std::optional<LinkDiagram> named_diagram(const std::string& name) {
  static const std::map<std::string, std::pair<std::string, bool>> aliases = {
      {"U", {"U", false}},          {"example", {"example_D", false}}, {"example_D", {"example_D", false}},
      {"D", {"unknot_D", false}},   {"unknot_D", {"unknot_D", false}}, {"E", {"unknot_D", true}},
      {"F", {"twist_F", false}},    {"twist_F", {"twist_F", false}},   {"G", {"twist_F", true}}};
  if (auto it = aliases.find(name); it != aliases.end()) {
    Fixture f = fixture(it->second.first);
    if (!it->second.second) return f.diagram;
    return run_sequence(f.moves).back();
  }
  if (const CatalogueEntry* e = catalogue_entry(name)) return parse_diagram(e->diagram_json);
  return std::nullopt;
}

}  // namespace rmb
