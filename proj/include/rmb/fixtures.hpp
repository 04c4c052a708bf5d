#pragma once

#include "rmb/diagram.hpp"
#include "rmb/moves.hpp"

#include <optional>
#include <string>
#include <vector>

namespace rmb {

/// A reconstructed diagram shipped with the library together with the
/// manifest of facts it was selected for (JSON text).
struct Fixture {
  std::string name;
  LinkDiagram diagram;
  MoveSequence moves;  // no events when the fixture has none
  std::string manifest;
};

/// "U", "example_D", "unknot_D", "twist_F".
std::vector<std::string> fixture_names();
/// Throws std::out_of_range for an unknown name.
Fixture fixture(const std::string& name);

/// A fixture, the diagram after a fixture's move sequence ("E" and "G" for
/// the two RIII witnesses "D" and "F"), or a catalogue reference diagram.
std::optional<LinkDiagram> named_diagram(const std::string& name);

}  // namespace rmb
