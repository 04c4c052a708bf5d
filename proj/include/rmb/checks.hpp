#pragma once

#include "rmb/unknotting.hpp"

#include <string>
#include <vector>

namespace rmb {

/// One re-derived fact: the expected value from a manifest or table, and
/// what was computed.
struct Check {
  std::string subject;
  std::string property;
  std::string expected;
  std::string actual;
  bool pass = false;
};

/// Re-derives every fact listed in a fixture's manifest from the diagram
/// alone.  An oracle call that does not resolve fails its check.
std::vector<Check> verify_fixture(const std::string& name, const UnknotOptions& o = {});

/// Exact unknotting numbers of the named links the fixtures rely on, each
/// with the witnesses that certify it.
std::vector<Check> verify_oracle(const UnknotOptions& o = {});

/// Every fixture, then the oracle table.
std::vector<Check> verify_all(const UnknotOptions& o = {});

std::string to_json(const std::vector<Check>& checks);
/// Fixed-width table, one check per line, PASS or FAIL first.
std::string to_table(const std::vector<Check>& checks);

}  // namespace rmb
