#pragma once

#include "rmb/diagram.hpp"

#include <array>
#include <vector>

namespace rmb {

/// Mutable unoriented planar 4-valent structure used for diagram surgery.
/// Slots of a crossing are counterclockwise; straight-through passes pair
/// slot s with s+2.  A wire joins two slot ends, or is a free loop.
struct Net {
  struct End {
    int x = -1;
    int s = -1;
    friend bool operator==(const End&, const End&) = default;
  };
  struct Wire {
    End a, b;
    bool free = false;
    bool alive = true;
    int dir = +1;  // +1: oriented a->b, -1: b->a, 0: unknown
    int tag = 0;   // originating component
    long key = 0;  // ordering hint inside a component
  };
  struct Xing {
    std::array<int, 4> w{-1, -1, -1, -1};
    int over_axis = 1;  // 0: slots {0,2} pass over, 1: slots {1,3}
    bool alive = true;
  };

  std::vector<Xing> xs;
  std::vector<Wire> ws;
  long next_key = 1 << 20;

  static Net from_diagram(const LinkDiagram& d);
  /// Renumbers into a LinkDiagram.  Components are ordered by tag, each
  /// traversal starts at its least (tag, key) wire, following its dir hint.
  LinkDiagram build(bool oriented = true) const;

  int add_crossing(int over_axis);
  int add_wire(End a, End b, int dir, int tag, long key);
  int add_free_loop(int dir, int tag, long key);
  void attach(int w, End at_old, End at_new);
  End& end_of(int w, End at);
  End other_end(int w, End at) const;

  /// Removes crossing x, joining the wires at slot pairs (p1,q1) and (p2,q2).
  void dissolve(int x, std::array<int, 2> pair1, std::array<int, 2> pair2);
  /// Removes every wire and loop carrying one of the tags, passing other
  /// strands straight through crossings with them.
  void delete_tags(const std::vector<int>& tags);
};

/// Sub-diagram on the given components (0-based, ascending order kept).
LinkDiagram sublink(const LinkDiagram& d, const std::vector<int>& comps);

/// Components of each connected piece, ordered by least component index.
std::vector<std::vector<int>> piece_components(const LinkDiagram& d);
/// One sub-diagram per piece, in the order of piece_components.
std::vector<LinkDiagram> split_pieces(const LinkDiagram& d);

}  // namespace rmb
