#pragma once

#include "rmb/diagram.hpp"

#include <stdexcept>
#include <string>

namespace rmb {

class ParseError : public std::runtime_error {
public:
  ParseError(int line, int column, const std::string& msg);
  int line() const { return line_; }
  int column() const { return column_; }

private:
  int line_, column_;
};

// JSON form:
//   {"crossings": [[a,b,c,d], ...], "components": [[first,last], ...], "free_loops": k}
// An empty component entry [] marks a crossing-free loop in that position;
// free_loops counts further loops appended after the listed components.
// Optional keys: "signs" (needed only for two-edge components passing over at
// both of their crossings) and "oriented": false.
//
// PD text form:
//   components: [1,4] [5,8] []
//   free_loops: 1
//   X(1,5,2,6)
//   ...
// with optional "signs: + - ..." and "oriented: false" lines and '#' comments.

RawDiagram parse_raw_json(const std::string& text);
RawDiagram parse_raw_pd(const std::string& text);
/// Detects the format from the first non-blank character.
RawDiagram parse_raw(const std::string& text);

std::string serialize_json(const RawDiagram& raw);
std::string serialize_pd(const RawDiagram& raw);

/// Parse and validate; ValidationError on invariant violations.
LinkDiagram parse_diagram(const std::string& text);
std::string to_json(const LinkDiagram& d);
std::string to_pd(const LinkDiagram& d);

std::string read_file(const std::string& path);

}  // namespace rmb
