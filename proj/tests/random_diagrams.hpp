#pragma once

// Random diagrams for property tests: a short braid closure or a trivial
// link, then a random walk of Reidemeister moves under a crossing cap.

#include "rmb/construct.hpp"
#include "rmb/diagram.hpp"
#include "rmb/moves.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace gen {

using Rng = std::mt19937;

inline int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

inline rmb::LinkDiagram start(Rng& rng, int components) {
  if (uniform(rng, 0, 3) == 0) return rmb::LinkDiagram::trivial(components);
  for (;;) {
    int strands = uniform(rng, 2, 3);
    std::vector<int> word;
    int len = uniform(rng, 1, 6);
    for (int k = 0; k < len; ++k) word.push_back(uniform(rng, 1, strands - 1) * (uniform(rng, 0, 1) ? 1 : -1));
    auto d = rmb::braid_closure(strands, word);
    if (d.component_count() == components && d.free_loop_count() == 0 && d.piece_count() == 1) return d;
  }
}

/// A uniformly chosen move among those satisfying `keep` whose result has at
/// most `cap` crossings; nullopt when there is none.
inline std::optional<rmb::MoveEvent> random_move(Rng& rng, const rmb::LinkDiagram& d, int cap,
                                                 const std::function<bool(const rmb::MoveEvent&)>& keep = {}) {
  std::vector<rmb::MoveEvent> ok;
  for (const auto& e : rmb::enumerate_moves(d, true)) {
    int grow = e.kind == rmb::MoveKind::RI_add ? 1 : e.kind == rmb::MoveKind::RII_add ? 2 : 0;
    if (d.crossing_count() + grow > cap) continue;
    if (keep && !keep(e)) continue;
    ok.push_back(e);
  }
  if (ok.empty()) return std::nullopt;
  return ok[uniform(rng, 0, static_cast<int>(ok.size()) - 1)];
}

/// One or two components, at most `cap` crossings.
inline rmb::LinkDiagram random_diagram(Rng& rng, int cap = 8, int components = 0) {
  if (components == 0) components = uniform(rng, 1, 2);
  rmb::LinkDiagram d = start(rng, components);
  while (d.crossing_count() > cap) d = start(rng, components);
  int steps = uniform(rng, 1, 8);
  for (int k = 0; k < steps; ++k)
    if (auto e = random_move(rng, d, cap)) d = rmb::apply(d, *e);
  return d;
}

/// Canonical code ignoring orientations (minimum over component reversals).
inline std::string unoriented_code(const rmb::LinkDiagram& d) {
  std::string best;
  const int n = d.component_count();
  for (int mask = 0; mask < (1 << n); ++mask) {
    rmb::LinkDiagram r = d.with_oriented(true);
    for (int k = 0; k < n; ++k)
      if (mask >> k & 1) r = rmb::reverse_component(r, k);
    std::string c = rmb::canonical_code(r);
    if (best.empty() || c < best) best = c;
  }
  return best;
}

}  // namespace gen
