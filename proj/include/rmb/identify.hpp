#pragma once

#include "rmb/diagram.hpp"
#include "rmb/laurent.hpp"
#include "rmb/linalg.hpp"

#include <optional>
#include <string>
#include <vector>

namespace rmb {

// Polynomial conventions, fixed here once:
//  * kauffman_bracket is a polynomial in A with <O> = 1 and
//    <X> = A<A-smoothing> + A^{-1}<B-smoothing>, where the A-smoothing joins
//    slot pairs {0,1},{2,3} (the over strand lies on slots 1 and 3).
//  * jones is stored in powers of q^{1/2}: exponent k means q^{k/2}.  The
//    all-positive trefoil of this library has V = -q^{-4} + q^{-3} + q^{-1}.

LaurentPoly kauffman_bracket(const LinkDiagram& d);
/// Requires an oriented diagram; throws std::invalid_argument otherwise.
LaurentPoly jones(const LinkDiagram& d);
/// |V(-1)|, i.e. |det(V+V^T)| for any Seifert matrix V.  Orientation-free.
BigInt determinant(const LinkDiagram& d);

struct SeifertData {
  IntMatrix matrix;     // V, rows/cols indexed by a basis of H_1 of the surface
  int circles = 0;      // Seifert circles of the braided diagram
  int genus_bound = 0;  // genus of the constructed surface
  int signature = 0;    // of V + V^T
  int nullity = 0;      // of V + V^T; 0 for the empty matrix
};

/// Seifert's algorithm on a braided form of the diagram (reached by Vogel
/// moves), bands read off as a closed braid.  Split pieces are assembled
/// block-diagonally with one zero row per extra piece (the connecting tubes).
/// Requires an oriented diagram.
SeifertData seifert(const LinkDiagram& d);

/// Orientation-independent fingerprint of the link type up to mirror image.
struct Fingerprint {
  int components = 0;
  std::vector<int> abs_linking;  // sorted |lk(i,j)|, i<j
  LaurentPoly bracket_class;     // normalized bracket, min over mirror
  BigInt det = 0;
  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
  std::string to_string() const;
};

Fingerprint fingerprint(const LinkDiagram& d);

struct CatalogueEntry {
  std::string name;
  int components = 1;
  int unknotting_number = 0;
  std::string citation;
  std::string conway;  // construction recipe of the reference diagram
  std::string diagram_json;
  std::string fingerprint;
};

/// Built-in catalogue (embedded data file).
const std::vector<CatalogueEntry>& catalogue();
/// Name match, or nullptr.
const CatalogueEntry* catalogue_entry(const std::string& name);
/// Lookup by a freshly computed fingerprint, or nullptr.
const CatalogueEntry* catalogue_lookup(const Fingerprint& fp);

struct Identification {
  bool found = false;
  std::string name;  // "unknown" when not found
  /// A single catalogue entry (exact unknotting number applies); composite
  /// results are described by `factors` instead.
  const CatalogueEntry* entry = nullptr;
  std::vector<std::string> factors;
  bool split = false;
  bool connected_sum = false;
  Fingerprint fp;
  LinkDiagram simplified;
};

/// Simplifies, then looks up the fingerprint.  Visibly split diagrams and
/// visible connected sums (two edges sharing two faces that separate the
/// crossings) are factored and identified piecewise, factors sorted by name;
/// otherwise `found` is false.
Identification identify(const LinkDiagram& d, long budget = 20000);

/// Cut of a connected diagram along two edges bounding a common pair of
/// faces.  Returns the two summands, or nothing if no such cut separates the
/// crossings.  Component labels are not preserved.
std::optional<std::pair<LinkDiagram, LinkDiagram>> connected_sum_split(const LinkDiagram& d);

}  // namespace rmb
