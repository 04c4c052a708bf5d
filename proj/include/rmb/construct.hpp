#pragma once

#include "rmb/diagram.hpp"

#include <vector>

namespace rmb {

/// Closure of a braid on `strands` strands.  Letter +i crosses positions i
/// and i+1 (1-based) with a crossing of sign +1 in this library's
/// convention, -i with sign -1.  Strands without crossings become free loops.
LinkDiagram braid_closure(int strands, const std::vector<int>& word);

/// Two-bridge link with Conway notation [a1 ... an] (all ai > 0), drawn as a
/// reduced alternating 4-plat with sum(ai) crossings.
LinkDiagram rational_link(const std::vector<int>& conway);

/// Connected sum joining component ka of a with component kb of b.  The
/// components of b follow those of a, with kb merged away.
LinkDiagram connected_sum(const LinkDiagram& a, const LinkDiagram& b, int ka = 0, int kb = 0);

/// Continuant of the Conway notation: the determinant of the rational link.
long long continuant(const std::vector<int>& conway);

}  // namespace rmb
