#pragma once

#include "rmb/diagram.hpp"

namespace rmb {

enum class SmoothMode { regular, irregular };

struct SmoothedResult {
  LinkDiagram diagram;
  bool oriented = true;  // true iff mode == regular
  int component_count = 0;
  int source_crossing = -1;
  SmoothMode mode = SmoothMode::regular;
};

/// Deletes crossing x and reconnects the strands so that orientations agree.
/// A self-crossing yields n+1 components, a mixed one n-1.
SmoothedResult regular_smooth(const LinkDiagram& d, int x);

/// Reconnects the other way.  The result is unoriented; the traversal
/// directions stored in its diagram are arbitrary.  A self-crossing keeps n
/// components, a mixed one yields n-1.
SmoothedResult irregular_smooth(const LinkDiagram& d, int x);

SmoothedResult smooth(const LinkDiagram& d, int x, SmoothMode mode);

std::string to_string(SmoothMode m);

}  // namespace rmb
