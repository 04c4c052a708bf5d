#pragma once

#include "rmb/diagram.hpp"
#include "rmb/moves.hpp"
#include "rmb/smoothing.hpp"
#include "rmb/unknotting.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace rmb {

/// Element of the free abelian group on X_n, Y_n: multiplicity per basis
/// element ('X' or 'Y', n).
using FormalSum = std::map<std::pair<char, int>, int>;

/// X_{lk(D_p)} for each positive crossing p plus Y_{lk(D_m)} for each
/// negative crossing m of a knot diagram.
FormalSum ilk(const LinkDiagram& d);
/// g(X_n) = |n|+1, g(Y_n) = -|n|-1
int g(const FormalSum& s);
/// g0(X_n) = |n|, g0(Y_n) = -|n|
int g0(const FormalSum& s);
std::string to_string(const FormalSum& s);

/// Symmetric matrix with entries in {-1, 0, +1}.
using SignMatrix = std::vector<std::vector<int>>;

struct IuConfig {
  SignMatrix S, T;
  std::optional<int> eps, delta;  // both present or both absent
  bool signed_mode = false;       // drop the absolute value of the differences
  UnknotOptions oracle;
};

/// Throws std::invalid_argument on a malformed configuration for a diagram
/// with n components.
void check_config(const IuConfig& cfg, int n);
/// The n x n all-`v` matrix; the usual choice for knots is S = (v), T = (+1).
SignMatrix constant_matrix(int n, int v);
/// Parses a matrix given as JSON ([[..],[..]]) or as whitespace-separated rows.
SignMatrix parse_sign_matrix(const std::string& text);
std::string to_json(const SignMatrix& m);

class OracleUnresolved : public std::runtime_error {
public:
  OracleUnresolved(const std::string& msg, int step = -1)
      : std::runtime_error(msg), step_(step) {}
  int step() const { return step_; }

private:
  int step_;
};

struct LedgerEntry {
  int crossing = 0;
  enum class Set { regular, irregular, skipped } set = Set::skipped;
  int t = 0;
  int sign = 0;
  UInterval u_smoothed;
  long long lo2 = 0, hi2 = 0;  // twice the contribution bounds
};

/// Values are kept doubled (exact halves).  An unresolved smoothing oracle
/// widens the interval instead of failing.
struct IuValue {
  long long lo2 = 0, hi2 = 0;
  UInterval u_link;
  long long correction2 = 0;  // doubled eps(c/2 + delta 3w/2) term
  std::vector<LedgerEntry> ledger;
  bool exact() const { return lo2 == hi2; }
  /// Exact value; throws OracleUnresolved otherwise.
  long long twice() const;
  std::string value_string() const;
};

/// iu_{S,T} (or the tilde variant, or the eps/delta variant).  u(L) must be
/// exact; otherwise OracleUnresolved is thrown.
IuValue iu(const LinkDiagram& d, const IuConfig& cfg);
std::string to_json(const IuValue& v, bool with_ledger = true);

/// Ceiling of |v1 - v2| / 2; both values exact.
int move_bound(const IuValue& v1, const IuValue& v2);
/// Same, from doubled exact values.
int move_bound_twice(long long a2, long long b2);

/// The invariant after each move, starting with the initial diagram.
/// OracleUnresolved carries the step index of the first unresolved value.
std::vector<IuValue> trace(const MoveSequence& s, const IuConfig& cfg);

/// Half-integer rendering of a doubled value.
std::string halves(long long twice);

}  // namespace rmb
