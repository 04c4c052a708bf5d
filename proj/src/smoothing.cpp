#include "rmb/smoothing.hpp"

#include "rmb/net.hpp"

namespace rmb {

SmoothedResult smooth(const LinkDiagram& d, int x, SmoothMode mode) {
  const int sign = d.crossing(x).sign;  // range-checked
  // Slot 0 enters under; the over strand enters at 1 (sign +) or 3 (sign -).
  // The regular pairing joins each incoming end to the outgoing end of the
  // other strand; the irregular pairing is the other non-crossing one.
  const bool pair_03 = (sign > 0) == (mode == SmoothMode::regular);
  Net n = Net::from_diagram(d);
  if (pair_03)
    n.dissolve(x, {0, 3}, {1, 2});
  else
    n.dissolve(x, {0, 1}, {3, 2});
  SmoothedResult r;
  r.oriented = mode == SmoothMode::regular && d.oriented();
  r.diagram = n.build(r.oriented);
  r.component_count = r.diagram.component_count();
  r.source_crossing = x;
  r.mode = mode;
  return r;
}

SmoothedResult regular_smooth(const LinkDiagram& d, int x) { return smooth(d, x, SmoothMode::regular); }

SmoothedResult irregular_smooth(const LinkDiagram& d, int x) {
  return smooth(d, x, SmoothMode::irregular);
}

std::string to_string(SmoothMode m) { return m == SmoothMode::regular ? "regular" : "irregular"; }

}  // namespace rmb
