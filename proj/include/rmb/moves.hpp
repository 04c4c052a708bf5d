#pragma once

#include "rmb/diagram.hpp"

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace rmb {

enum class MoveKind { RI_add, RI_remove, RII_add, RII_remove, RIII };
enum class R2Tag { none, matched, unmatched };

/// One Reidemeister move.  Faces index LinkDiagram::faces(); darts name an
/// arc together with the side whose face is involved (fwd = left side).
/// New crossings are appended after the existing ones; removals delete the
/// corner crossings and keep the order of the rest.
struct MoveEvent {
  MoveKind kind = MoveKind::RIII;
  int face = -1;        // RI_remove, RII_remove, RIII
  Dart d1, d2;          // RI_add uses d1; RII_add uses both
  int sign = +1;        // RI_add: sign of the new crossing
  int over = 1;         // RII_add: which dart passes over (1 or 2)
  R2Tag tag = R2Tag::none;
  friend bool operator==(const MoveEvent&, const MoveEvent&) = default;
};

struct MoveSequence {
  LinkDiagram initial;
  std::vector<MoveEvent> events;
};

class InapplicableMove : public std::runtime_error {
public:
  InapplicableMove(const std::string& msg, int step = -1);
  int step() const { return step_; }

private:
  int step_;
};

/// Removing moves and RIII moves that apply, then a generating family of
/// adding moves: RI_add for every arc, side and sign; RII_add for every pair
/// of darts on a common face (or on distinct pieces), both over choices.
std::vector<MoveEvent> enumerate_moves(const LinkDiagram& d, bool include_adds = true);
std::vector<MoveEvent> reducing_moves(const LinkDiagram& d);
std::vector<MoveEvent> r3_moves(const LinkDiagram& d);

bool applicable(const LinkDiagram& d, const MoveEvent& e, std::string* why = nullptr);
LinkDiagram apply(const LinkDiagram& d, const MoveEvent& e);

/// RIII events only: the crossing where the top strand (over at both trigon
/// corners) meets the bottom strand (under at both).  Crossing ids survive
/// the move, so the same id names that crossing afterwards.
int r3_top_bottom_crossing(const LinkDiagram& d, const MoveEvent& e);

/// RII events only.  Matched iff the bigon edges are oriented in parallel.
R2Tag classify_r2(const LinkDiagram& d, const MoveEvent& e);

struct SimplifyResult {
  LinkDiagram diagram;
  MoveSequence sequence;
  bool budget_exhausted = false;
};

/// Greedy: reducing RI, then reducing RII, then a breadth-first search over
/// RIII moves (deduplicated by canonical form) for a diagram exposing a
/// reduction.  `budget` caps the number of moves applied or explored.
SimplifyResult simplify(const LinkDiagram& d, long budget = 20000);

using Observer = std::function<void(int step, const LinkDiagram&)>;
/// Every intermediate diagram, starting with the initial one.
std::vector<LinkDiagram> run_sequence(const MoveSequence& s, const Observer& observer = {});

std::string to_string(MoveKind k);
std::string serialize_event(const MoveEvent& e);
MoveEvent parse_event(const std::string& line);
std::string serialize_events(const std::vector<MoveEvent>& events);
/// One event per line; '#' starts a comment.  ParseError carries the line.
std::vector<MoveEvent> parse_events(const std::string& text);

}  // namespace rmb
