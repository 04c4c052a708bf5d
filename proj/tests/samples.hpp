#pragma once

#include "rmb/pd_io.hpp"

namespace samples {

inline rmb::LinkDiagram unknot() { return rmb::LinkDiagram::trivial(1); }

// All three crossings positive in this library's sign convention.
inline rmb::LinkDiagram trefoil() {
  return rmb::parse_diagram("components: [1,6]\nX(1,4,2,5)\nX(3,6,4,1)\nX(5,2,6,3)\n");
}

inline rmb::LinkDiagram figure_eight() {
  return rmb::parse_diagram("components: [1,8]\nX(4,2,5,1)\nX(8,6,1,5)\nX(6,3,7,4)\nX(2,7,3,8)\n");
}

inline rmb::LinkDiagram hopf() {
  return rmb::parse_diagram("components: [1,2] [3,4]\nX(4,1,3,2)\nX(2,3,1,4)\n");
}

}  // namespace samples
