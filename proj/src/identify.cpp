#include "rmb/identify.hpp"

#include "rmb/moves.hpp"
#include "rmb/net.hpp"
#include "rmb/pd_io.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>

namespace rmb {

extern const char* const kCatalogueJson;  // generated from data/catalogue.json

namespace {

LaurentPoly unit_normalized(LaurentPoly p) {
  if (p.is_zero()) return p;
  p = p.shifted(-p.min_exponent());
  if (p.coeff(p.max_exponent()) < 0) p = -p;
  return p;
}

}  // namespace

std::string Fingerprint::to_string() const {
  std::ostringstream out;
  out << "n=" << components << ";lk=";
  for (size_t i = 0; i < abs_linking.size(); ++i) out << (i ? "," : "") << abs_linking[i];
  out << ";det=" << det << ";br=" << bracket_class.to_string("A");
  return out.str();
}

Fingerprint fingerprint(const LinkDiagram& d) {
  Fingerprint f;
  f.components = d.component_count();
  auto lk = d.linking_matrix();
  for (int i = 0; i < f.components; ++i)
    for (int j = i + 1; j < f.components; ++j) f.abs_linking.push_back(std::abs(lk[i][j]));
  std::sort(f.abs_linking.begin(), f.abs_linking.end());
  // <D> changes by units +-A^k under RI and orientation changes; mirror
  // image substitutes A -> 1/A.
  LaurentPoly b = kauffman_bracket(d);
  LaurentPoly p = unit_normalized(b), q = unit_normalized(b.inverted());
  f.bracket_class = std::min(p, q);
  auto bb = p.exponents_divided(2);
  auto [re, im] = bb.eval_at_i();
  f.det = abs(re) + abs(im);
  return f;
}

const std::vector<CatalogueEntry>& catalogue() {
  static const std::vector<CatalogueEntry> entries = [] {
    std::vector<CatalogueEntry> out;
    auto j = nlohmann::json::parse(kCatalogueJson);
    for (const auto& e : j.at("entries")) {
      CatalogueEntry c;
      c.name = e.at("name").get<std::string>();
      c.components = e.at("components").get<int>();
      c.unknotting_number = e.at("u").get<int>();
      c.citation = e.at("citation").get<std::string>();
      c.conway = e.at("construction").get<std::string>();
      c.diagram_json = e.at("diagram").dump();
      c.fingerprint = e.at("fingerprint").get<std::string>();
      out.push_back(std::move(c));
    }
    return out;
  }();
  return entries;
}

const CatalogueEntry* catalogue_entry(const std::string& name) {
  for (const auto& e : catalogue())
    if (e.name == name) return &e;
  return nullptr;
}

const CatalogueEntry* catalogue_lookup(const Fingerprint& fp) {
  const std::string key = fp.to_string();
  for (const auto& e : catalogue())
    if (e.fingerprint == key) return &e;
  return nullptr;
}

std::optional<std::pair<LinkDiagram, LinkDiagram>> connected_sum_split(const LinkDiagram& d) {
  if (d.piece_count() != 1 || d.crossing_count() < 2) return std::nullopt;
  auto fs = d.faces();
  auto df = d.dart_faces(fs);
  const int m = d.edge_count();
  auto sides = [&](int e) {
    int a = df[LinkDiagram::dart_index({e, true})], b = df[LinkDiagram::dart_index({e, false})];
    return std::make_pair(std::min(a, b), std::max(a, b));
  };
  const int nx = d.crossing_count();
  for (int e1 = 0; e1 < m; ++e1) {
    auto s1 = sides(e1);
    if (s1.first == s1.second) continue;
    for (int e2 = e1 + 1; e2 < m; ++e2) {
      if (sides(e2) != s1) continue;
      // crossings reachable from the head of e1 without using e1 or e2
      std::vector<char> side(nx, 0);
      std::vector<int> stack{d.head(e1).crossing};
      side[stack[0]] = 1;
      while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (int e : d.crossing(x).e) {
          if (e == e1 || e == e2) continue;
          for (int y : {d.head(e).crossing, d.tail(e).crossing})
            if (!side[y]) {
              side[y] = 1;
              stack.push_back(y);
            }
        }
      }
      if (side[d.tail(e1).crossing]) continue;
      // e1 leaves the tail side, so e2 returns to it: swap heads to close both
      Net n = Net::from_diagram(d);
      Net::End h1 = n.ws[e1].b, h2 = n.ws[e2].b;
      n.ws[e1].b = h2;
      n.xs[h2.x].w[h2.s] = e1;
      n.ws[e2].b = h1;
      n.xs[h1.x].w[h1.s] = e2;
      LinkDiagram cut = n.build(d.oriented());
      auto parts = split_pieces(cut);
      if (parts.size() != 2) continue;
      return std::make_pair(parts[0], parts[1]);
    }
  }
  return std::nullopt;
}

namespace {

std::string trivial_name(int k) { return k == 1 ? "unknot" : "trivial " + std::to_string(k) + "-link"; }

}  // namespace

Identification identify(const LinkDiagram& d, long budget) {
  Identification r;
  r.simplified = simplify(d, budget).diagram;
  const LinkDiagram& s = r.simplified;
  r.fp = fingerprint(s);
  r.name = "unknown";
  if (s.crossing_count() == 0) {
    r.found = true;
    r.entry = catalogue_entry(trivial_name(s.component_count()));
    r.name = trivial_name(s.component_count());
    return r;
  }
  if (const CatalogueEntry* e = catalogue_lookup(r.fp)) {
    r.found = true;
    r.entry = e;
    r.name = e->name;
    return r;
  }
  std::vector<LinkDiagram> parts;
  if (s.piece_count() > 1) {
    parts = split_pieces(s);
    r.split = true;
  } else if (auto cs = connected_sum_split(s)) {
    parts = {cs->first, cs->second};
    r.connected_sum = true;
  } else {
    return r;
  }
  std::vector<std::string> names;
  for (const auto& p : parts) {
    Identification sub = identify(p, budget);
    if (!sub.found) return Identification{false, "unknown", nullptr, {}, r.split, r.connected_sum, r.fp, s};
    if (sub.factors.empty())
      names.push_back(sub.name);
    else
      names.insert(names.end(), sub.factors.begin(), sub.factors.end());
  }
  if (r.connected_sum) names.erase(std::remove(names.begin(), names.end(), "unknot"), names.end());
  std::sort(names.begin(), names.end());
  r.found = true;
  r.factors = names;
  std::string sep = r.split ? " U " : " # ";
  r.name.clear();
  for (size_t i = 0; i < names.size(); ++i) r.name += (i ? sep : "") + names[i];
  return r;
}

}  // namespace rmb
