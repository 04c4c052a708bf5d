#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace rmb {

// Crossing tuples list four edge ids counterclockwise, starting with the
// incoming under edge.  Slot 2 is therefore the outgoing under edge, and the
// over strand occupies slots 1 and 3.
//
// Sign convention: +1 iff the under direction rotated a quarter turn
// counterclockwise points along the over direction.  With slot 0 at the
// south this means the over strand enters at slot 1.

struct CrossingCode {
  std::array<int, 4> e{};  // 0-based edge ids
  int sign = +1;
  friend bool operator==(const CrossingCode&, const CrossingCode&) = default;
};

struct EdgeEnd {
  int crossing = -1;
  int slot = -1;
};

/// An oriented traversal of one side of an edge.  The face lies on the left.
/// Edge ids >= edge_count() refer to free loops (edge_count() + loop index).
struct Dart {
  int edge = 0;
  bool fwd = true;
  friend bool operator==(const Dart&, const Dart&) = default;
  friend auto operator<=>(const Dart&, const Dart&) = default;
};

struct Face {
  std::vector<Dart> darts;       // cyclic boundary
  std::vector<int> corners;      // crossing at the end of each dart (-1 on free loops)
  int piece = 0;
};

struct ValidationReport {
  std::vector<std::string> problems;
  bool ok() const { return problems.empty(); }
};

class ValidationError : public std::runtime_error {
public:
  explicit ValidationError(ValidationReport r);
  const ValidationReport& report() const { return report_; }

private:
  ValidationReport report_;
};

/// Unchecked diagram data as read from a file.  Labels are 1-based.
struct RawDiagram {
  std::vector<std::array<int, 4>> crossings;
  /// One entry per component; std::nullopt marks a crossing-free loop.
  std::vector<std::optional<std::pair<int, int>>> components;
  /// Explicit crossing signs; required only where labels leave the over
  /// direction undetermined (two-edge components over at both passes).
  std::vector<int> signs;
  bool oriented = true;
};

ValidationReport validate(const RawDiagram& raw);

/// Immutable oriented link diagram on the 2-sphere.  Split pieces carry no
/// placement relative to each other.
class LinkDiagram {
public:
  LinkDiagram() = default;

  /// Checked construction; throws ValidationError.
  static LinkDiagram from_raw(const RawDiagram& raw);
  /// Checked construction from 0-based data.  comp_size 0 marks a free loop.
  static LinkDiagram from_codes(std::vector<CrossingCode> crossings, std::vector<int> comp_first,
                                std::vector<int> comp_size, bool oriented = true);
  static LinkDiagram trivial(int components);

  RawDiagram to_raw() const;

  int crossing_count() const { return static_cast<int>(crossings_.size()); }
  int edge_count() const { return static_cast<int>(edge_comp_.size()); }
  int component_count() const { return static_cast<int>(comp_size_.size()); }
  int free_loop_count() const;
  bool oriented() const { return oriented_; }
  LinkDiagram with_oriented(bool flag) const;

  const std::vector<CrossingCode>& crossings() const { return crossings_; }
  const CrossingCode& crossing(int x) const;
  int sign(int x) const;
  int writhe() const;

  int comp_first(int k) const { return comp_first_[k]; }
  int comp_size(int k) const { return comp_size_[k]; }
  bool is_free_loop(int k) const { return comp_size_[k] == 0; }
  /// Component index of an edge id (free-loop ids included).
  int component_of_edge(int e) const;
  int next_edge(int e) const;
  int prev_edge(int e) const;
  int free_loop_edge(int k) const;
  int dart_edge_count() const { return edge_count() + free_loop_count(); }

  EdgeEnd head(int e) const { return head_[e]; }
  EdgeEnd tail(int e) const { return tail_[e]; }
  int over_in_slot(int x) const { return crossings_[x].sign > 0 ? 1 : 3; }
  int over_component(int x) const;
  int under_component(int x) const;
  bool is_self_crossing(int x) const { return over_component(x) == under_component(x); }
  /// Whether the edge at slot s of crossing x passes over.
  bool slot_is_over(int /*x*/, int s) const { return (s & 1) == 1; }

  std::vector<std::vector<int>> linking_matrix() const;
  std::vector<Face> faces() const;
  /// Connected pieces of the underlying 4-valent graph, free loops included.
  int piece_count() const;
  /// Piece index of each crossing; free loops get indices after them.
  std::vector<int> crossing_piece() const;

  /// Face on the left of a dart.
  std::vector<int> dart_faces(const std::vector<Face>& fs) const;
  static int dart_index(const Dart& d) { return 2 * d.edge + (d.fwd ? 0 : 1); }

  friend bool operator==(const LinkDiagram& a, const LinkDiagram& b);

private:
  void index();
  std::vector<CrossingCode> crossings_;
  std::vector<int> comp_first_;
  std::vector<int> comp_size_;
  bool oriented_ = true;
  std::vector<int> edge_comp_;
  std::vector<EdgeEnd> head_, tail_;
};

ValidationReport validate(const LinkDiagram& d);

int crossing_sign(const LinkDiagram& d, int x);
int writhe(const LinkDiagram& d);
std::vector<std::vector<int>> linking_matrix(const LinkDiagram& d);
std::vector<Face> faces(const LinkDiagram& d);

LinkDiagram mirror(const LinkDiagram& d);
/// Reverses component k (0-based) and renumbers its edges in the same range.
LinkDiagram reverse_component(const LinkDiagram& d, int k);
/// Swaps over and under at crossing x; edge numbering is kept.
LinkDiagram crossing_change(const LinkDiagram& d, int x);
LinkDiagram crossing_change(const LinkDiagram& d, const std::vector<int>& xs);
/// Disjoint union; components of b follow those of a.
LinkDiagram disjoint_union(const LinkDiagram& a, const LinkDiagram& b);

/// Canonical relabeling code.  Equal codes iff the diagrams are related by an
/// orientation-preserving homeomorphism of the sphere (per piece) and a
/// relabeling.  With `labeled`, component indices must correspond as well.
std::string canonical_code(const LinkDiagram& d, bool labeled = false);

}  // namespace rmb
