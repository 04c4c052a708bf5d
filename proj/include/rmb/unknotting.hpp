#pragma once

#include "rmb/diagram.hpp"

#include <optional>
#include <string>
#include <vector>

namespace rmb {

struct Witness {
  std::string kind;    // catalogue | signature | linking | component | nontrivial | search | crossing-free | split
  int value = 0;
  std::string detail;
};

/// Unknotting number known to lie in [lo, hi]; hi absent when no certificate
/// was found within budget.
struct UInterval {
  int lo = 0;
  std::optional<int> hi;
  std::vector<Witness> witnesses;
  bool exact() const { return hi && *hi == lo; }
};

struct UnknotOptions {
  long budget = 20000;          // crossing-change subsets tried by the search
  long simplify_budget = 3000;  // per simplification
  int threads = 1;
  std::string cache_path;       // optional on-disk cache; empty disables it
};

/// Max of the knot signature bound ceil(|sigma|/2), the linking bound
/// sum |lk|, the component bound sum |lk| + sum lo(u(K_i)) and the
/// nontriviality bound (1 when the bracket differs from the trivial link's).
/// All of them are independent of orientations.
std::pair<int, std::vector<Witness>> u_lower(const LinkDiagram& d, const UnknotOptions& o = {});

/// Smallest k >= start such that changing some k crossings of the simplified
/// diagram simplifies to a crossing-free diagram.  Sound upper bound.
std::pair<std::optional<int>, Witness> u_upper(const LinkDiagram& d, const UnknotOptions& o = {},
                                               int start = 0);

/// Catalogue hit (when the bounds do not contradict it), else [u_lower, u_upper].
UInterval unknotting_number(const LinkDiagram& d, const UnknotOptions& o = {});

/// Drops the in-process memo table (tests use it to measure cold runs).
void clear_unknotting_cache();

std::string to_json(const UInterval& u);

}  // namespace rmb
