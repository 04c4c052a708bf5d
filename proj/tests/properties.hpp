#pragma once

// Randomized property suites shared by the unit tests (small sizes) and the
// acceptance binary (full sizes).  Each suite draws until `target` cases
// have been checked and records every violation with enough context to
// replay it.

#include "random_diagrams.hpp"

#include "rmb/identify.hpp"
#include "rmb/invariants.hpp"
#include "rmb/pd_io.hpp"
#include "rmb/smoothing.hpp"

#include <cstdlib>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace props {

struct Tally {
  int checked = 0;
  int skipped = 0;  // an oracle did not resolve
  std::map<std::string, int> by_kind;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
  void fail(const std::string& what, const rmb::LinkDiagram& d, const rmb::MoveEvent* e = nullptr) {
    std::ostringstream s;
    s << what << " on " << rmb::to_json(d);
    if (e) s << " move " << rmb::serialize_event(*e);
    violations.push_back(s.str());
  }
};

inline std::string kind_class(rmb::MoveKind k) {
  switch (k) {
    case rmb::MoveKind::RI_add:
    case rmb::MoveKind::RI_remove: return "RI";
    case rmb::MoveKind::RII_add:
    case rmb::MoveKind::RII_remove: return "RII";
    case rmb::MoveKind::RIII: return "RIII";
  }
  return "?";
}

/// Picks RI, RII or RIII uniformly among the classes that have a move within
/// the crossing cap, then a move of that class.  RIII moves are rare in a
/// flat enumeration, hence the two stages.
inline std::optional<rmb::MoveEvent> balanced_move(gen::Rng& rng, const rmb::LinkDiagram& d, int cap) {
  std::map<std::string, std::vector<rmb::MoveEvent>> by;
  for (const auto& e : rmb::enumerate_moves(d, true)) {
    int grow = e.kind == rmb::MoveKind::RI_add ? 1 : e.kind == rmb::MoveKind::RII_add ? 2 : 0;
    if (d.crossing_count() + grow <= cap) by[kind_class(e.kind)].push_back(e);
  }
  if (by.empty()) return std::nullopt;
  auto it = std::next(by.begin(), gen::uniform(rng, 0, static_cast<int>(by.size()) - 1));
  return it->second[gen::uniform(rng, 0, static_cast<int>(it->second.size()) - 1)];
}

/// Random symmetric S with entries in {-1,0,1} and T vanishing exactly
/// where S does.
inline rmb::IuConfig random_config(gen::Rng& rng, int n) {
  rmb::IuConfig c;
  c.S = c.T = rmb::SignMatrix(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      int s = gen::uniform(rng, -1, 1);
      int t = s == 0 ? 0 : (gen::uniform(rng, 0, 1) ? 1 : -1);
      c.S[i][j] = c.S[j][i] = s;
      c.T[i][j] = c.T[j][i] = t;
    }
  return c;
}

inline long long doubled(const rmb::LinkDiagram& d, const rmb::IuConfig& c, bool& resolved) {
  try {
    auto v = rmb::iu(d, c);
    if (v.exact()) return v.lo2;
  } catch (const rmb::OracleUnresolved&) {
  }
  resolved = false;
  return 0;
}

/// |iu(D) - iu(D')| is 0, at most 1, at most 2 for RI, RII, RIII, in the
/// absolute and the signed variant.  For RI moves the eps,delta variant moves
/// by exactly +2eps when delta*sign(new crossing) = +1 and by -eps otherwise.
inline Tally invariance_suite(gen::Rng& rng, int target) {
  Tally t;
  const long long limit2[] = {0, 2, 4};
  while (t.checked < target) {
    auto d = gen::random_diagram(rng, 7);
    auto e = balanced_move(rng, d, 8);
    if (!e) continue;
    auto d2 = rmb::apply(d, *e);
    auto cfg = random_config(rng, d.component_count());
    cfg.eps = gen::uniform(rng, 0, 1) ? 1 : -1;
    cfg.delta = gen::uniform(rng, 0, 1) ? 1 : -1;
    bool resolved = true;
    long long base[2], after[2];
    for (int m = 0; m < 2; ++m) {
      auto c = cfg;
      c.eps.reset();
      c.delta.reset();
      c.signed_mode = m == 1;
      base[m] = doubled(d, c, resolved);
      after[m] = doubled(d2, c, resolved);
    }
    long long eb = doubled(d, cfg, resolved), ea = doubled(d2, cfg, resolved);
    if (!resolved) {
      ++t.skipped;
      continue;
    }
    ++t.checked;
    std::string k = kind_class(e->kind);
    ++t.by_kind[k];
    int ki = k == "RI" ? 0 : k == "RII" ? 1 : 2;
    if (after[0] != base[0]) ++t.by_kind[k + " changed"];
    if (std::llabs(after[0] - base[0]) == limit2[ki] && ki > 0) ++t.by_kind[k + " at the limit"];
    for (int m = 0; m < 2; ++m)
      if (std::llabs(after[m] - base[m]) > limit2[ki])
        t.fail(k + (m ? " signed" : " absolute") + " change " + rmb::halves(after[m] - base[m]), d, &*e);
    if (ki == 0) {
      // Sign of the kink crossing, and +1 for adding, -1 for removing.
      int dir = e->kind == rmb::MoveKind::RI_add ? 1 : -1;
      int s = dir > 0 ? e->sign : d.sign(rmb::faces(d)[e->face].corners.front());
      long long want2 = dir * *cfg.eps * (*cfg.delta * s > 0 ? 4 : -2);
      if (ea - eb != want2)
        t.fail("eps,delta RI change " + rmb::halves(ea - eb) + " expected " + rmb::halves(want2), d, &*e);
    }
  }
  return t;
}

/// Classical invariants under one random move: Jones polynomial and linking
/// matrix unchanged; for knots g0(ilk) unchanged by RI, g(ilk) moves by at
/// most one, g = g0 + writhe on both diagrams; signature negated by the
/// mirror; u_lower <= u_upper.  `g0_moved` counts RII/RIII moves that change
/// g0, which is allowed.
inline Tally classical_suite(gen::Rng& rng, int target, int* g0_moved = nullptr) {
  Tally t;
  while (t.checked < target) {
    auto d = gen::random_diagram(rng, 7);
    auto e = balanced_move(rng, d, 8);
    if (!e) continue;
    auto d2 = rmb::apply(d, *e);
    ++t.checked;
    std::string k = kind_class(e->kind);
    ++t.by_kind[k];
    if (rmb::jones(d) != rmb::jones(d2)) t.fail("Jones polynomial changed", d, &*e);
    if (rmb::linking_matrix(d) != rmb::linking_matrix(d2)) t.fail("linking matrix changed", d, &*e);
    if (d.component_count() == 1) {
      auto a = rmb::ilk(d), b = rmb::ilk(d2);
      if (k == "RI" && rmb::g0(a) != rmb::g0(b)) t.fail("g0 changed under RI", d, &*e);
      if (k != "RI" && rmb::g0(a) != rmb::g0(b) && g0_moved) ++*g0_moved;
      if (std::abs(rmb::g(a) - rmb::g(b)) > 1) t.fail("g changed by more than one", d, &*e);
      if (rmb::g(a) != rmb::g0(a) + d.writhe()) t.fail("g != g0 + w", d);
      if (rmb::g(b) != rmb::g0(b) + d2.writhe()) t.fail("g != g0 + w", d2);
    }
    if (rmb::seifert(rmb::mirror(d)).signature != -rmb::seifert(d).signature)
      t.fail("signature not negated by the mirror image", d);
    auto lo = rmb::u_lower(d).first;
    auto hi = rmb::u_upper(d).first;
    if (hi && lo > *hi) t.fail("u_lower > u_upper", d);
  }
  return t;
}

/// The bigon of an RII event as (diagram, x, y): after the move for an add,
/// before it for a removal.
inline std::tuple<rmb::LinkDiagram, int, int> bigon(const rmb::LinkDiagram& d, const rmb::MoveEvent& e) {
  if (e.kind == rmb::MoveKind::RII_add) return {rmb::apply(d, e), d.crossing_count(), d.crossing_count() + 1};
  auto c = rmb::faces(d)[e.face].corners;
  return {d, c[0], c[1]};
}

/// Removes the kink at crossing x (which must sit on a monogon).
inline std::optional<rmb::LinkDiagram> remove_kink(const rmb::LinkDiagram& d, int x) {
  auto fs = rmb::faces(d);
  for (const auto& m : rmb::reducing_moves(d))
    if (m.kind == rmb::MoveKind::RI_remove && fs[m.face].corners.front() == x) return rmb::apply(d, m);
  return std::nullopt;
}

/// Irregular smoothings at the two bigon corners: the same diagram once the
/// kink left at the other corner is removed (matched), one crossing change
/// apart (unmatched).  At the crossings of an RIII trigon other than the
/// top/bottom one, both smoothings keep their link type through the move.
inline Tally structural_suite(gen::Rng& rng, int target) {
  using namespace rmb;
  Tally t;
  while (t.checked < target) {
    auto d = gen::random_diagram(rng, 6);
    std::vector<MoveEvent> r2, r3;
    for (const auto& e : enumerate_moves(d, true)) {
      if (e.kind == MoveKind::RII_add || e.kind == MoveKind::RII_remove) r2.push_back(e);
      if (e.kind == MoveKind::RIII) r3.push_back(e);
    }
    bool want_r3 = gen::uniform(rng, 0, 2) == 0 && !r3.empty();
    if (!want_r3) {
      if (r2.empty()) continue;
      auto e = r2[gen::uniform(rng, 0, static_cast<int>(r2.size()) - 1)];
      auto tag = classify_r2(d, e);
      auto [b, x, y] = bigon(d, e);
      auto ex = irregular_smooth(b, x).diagram;
      auto ey = irregular_smooth(b, y).diagram;
      // Ids after deleting one crossing.
      int y_in_ex = y > x ? y - 1 : y;
      int x_in_ey = x > y ? x - 1 : x;
      ++t.checked;
      if (tag == R2Tag::matched) {
        ++t.by_kind["RII matched"];
        auto fx = remove_kink(ex, y_in_ex), fy = remove_kink(ey, x_in_ey);
        if (!fx || !fy)
          t.fail("matched RII: no kink left at the other corner", d, &e);
        else if (gen::unoriented_code(*fx) != gen::unoriented_code(*fy))
          t.fail("matched RII: smoothings differ", d, &e);
      } else {
        ++t.by_kind["RII unmatched"];
        if (gen::unoriented_code(crossing_change(ex, y_in_ex)) != gen::unoriented_code(ey))
          t.fail("unmatched RII: smoothings not one crossing change apart", d, &e);
      }
    } else {
      auto e = r3[gen::uniform(rng, 0, static_cast<int>(r3.size()) - 1)];
      auto d2 = apply(d, e);
      int z = r3_top_bottom_crossing(d, e);
      ++t.checked;
      ++t.by_kind["RIII"];
      auto corners = faces(d)[e.face].corners;
      for (int c : corners) {
        if (c == z) continue;
        for (auto m : {SmoothMode::regular, SmoothMode::irregular})
          if (!(fingerprint(smooth(d, c, m).diagram) == fingerprint(smooth(d2, c, m).diagram)))
            t.fail("RIII: " + to_string(m) + " smoothing at " + std::to_string(c) + " changed", d, &e);
      }
    }
  }
  return t;
}

}  // namespace props
