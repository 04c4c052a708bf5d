// Writes the link catalogue (data/catalogue.json) to standard output.
// Reference diagrams are built from Conway notation; each construction is
// checked against the expected determinant before it is written.

#include "rmb/construct.hpp"
#include "rmb/identify.hpp"
#include "rmb/pd_io.hpp"

#include <json.hpp>

#include <iostream>

namespace {

struct Seed {
  const char* name;
  std::vector<int> conway;  // empty: trivial link
  int components;
  int u;
  const char* citation;
  bool mirror = false;  // store the mirror image of the Conway construction
};

const char* kTable = "Rolfsen knot table; unknotting numbers as tabulated by Kawauchi, A Survey of Knot Theory (1996)";

const std::vector<Seed> kSeeds = {
    {"unknot", {}, 1, 0, "crossing-free diagram"},
    {"trivial 2-link", {}, 2, 0, "crossing-free diagram"},
    {"trivial 3-link", {}, 3, 0, "crossing-free diagram"},
    {"trivial 4-link", {}, 4, 0, "crossing-free diagram"},
    {"Hopf", {2}, 2, 1, "|lk| = 1 lower bound; one crossing change splits it"},
    {"T(2,4)", {4}, 2, 2, "|lk| = 2 lower bound; two crossing changes split it"},
    {"T(2,6)", {6}, 2, 3, "|lk| = 3 lower bound; three crossing changes split it"},
    {"T(2,8)", {8}, 2, 4, "|lk| = 4 lower bound; four crossing changes split it"},
    {"Whitehead", {2, 1, 2}, 2, 1, "nontrivial (Jones), one crossing change gives the trivial link"},
    {"3_1", {3}, 1, 1, kTable},
    {"4_1", {2, 2}, 1, 1, kTable},
    {"5_1", {5}, 1, 2, "signature 4 (Murasugi 1965)"},
    {"5_2", {3, 2}, 1, 1, kTable},
    {"6_1", {4, 2}, 1, 1, kTable},
    {"6_2", {3, 1, 2}, 1, 1, kTable},
    {"6_3", {2, 1, 1, 2}, 1, 1, kTable},
    {"7_1", {7}, 1, 3, "signature 6 (Murasugi 1965)"},
    {"7_2", {5, 2}, 1, 1, kTable},
    {"7_3", {4, 3}, 1, 2, "signature 4 (Murasugi 1965)"},
    {"7_4", {3, 1, 3}, 1, 2, "Lickorish, The unknotting number of a classical knot (1985)"},
    {"7_5", {3, 2, 2}, 1, 2, "signature 4 (Murasugi 1965)"},
    {"7_6", {2, 2, 1, 2}, 1, 1, kTable},
    {"7_7", {2, 1, 1, 1, 2}, 1, 1, kTable},
    {"8_1", {6, 2}, 1, 1, kTable},
    {"9_2", {7, 2}, 1, 1, kTable},
    // Chirality chosen so that the reference diagram has signature -6.
    {"10_2", {7, 1, 2}, 1, 3, "signature 6 (Murasugi 1965)", true},
};

}  // namespace

int main() {
  using nlohmann::json;
  json entries = json::array();
  for (const auto& s : kSeeds) {
    rmb::LinkDiagram d = s.conway.empty() ? rmb::LinkDiagram::trivial(s.components) : rmb::rational_link(s.conway);
    if (d.component_count() != s.components) {
      std::cerr << s.name << ": wrong component count\n";
      return 1;
    }
    std::string construction = "trivial";
    if (!s.conway.empty()) {
      if (rmb::determinant(d) != rmb::continuant(s.conway)) {
        std::cerr << s.name << ": determinant does not match the continued fraction\n";
        return 1;
      }
      construction = s.mirror ? "mirror conway" : "conway";
      if (s.mirror) d = rmb::mirror(d);
      for (int a : s.conway) construction += " " + std::to_string(a);
    }
    json e;
    e["name"] = s.name;
    e["components"] = s.components;
    e["u"] = s.u;
    e["citation"] = s.citation;
    e["construction"] = construction;
    e["diagram"] = json::parse(rmb::to_json(d));
    e["fingerprint"] = rmb::fingerprint(d).to_string();
    entries.push_back(e);
  }
  json out;
  out["version"] = 1;
  out["entries"] = entries;
  std::cout << out.dump(1) << "\n";
  return 0;
}
