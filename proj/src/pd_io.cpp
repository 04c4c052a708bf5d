#include "rmb/pd_io.hpp"

#include <json.hpp>

#include <cctype>
#include <fstream>
#include <sstream>

namespace rmb {

using nlohmann::json;

ParseError::ParseError(int line, int column, const std::string& msg)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                         ": " + msg),
      line_(line),
      column_(column) {}

namespace {

std::pair<int, int> line_col(const std::string& text, size_t offset) {
  int line = 1, col = 1;
  for (size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

[[noreturn]] void fail_at_key(const std::string& text, const std::string& key, const std::string& msg) {
  size_t pos = text.find("\"" + key + "\"");
  auto [l, c] = line_col(text, pos == std::string::npos ? 0 : pos);
  throw ParseError(l, c, msg);
}

int as_int(const json& v, const std::string& text, const std::string& key, const std::string& what) {
  if (!v.is_number_integer()) fail_at_key(text, key, what + " must be an integer");
  return v.get<int>();
}

}  // namespace

RawDiagram parse_raw_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    auto [l, c] = line_col(text, e.byte > 0 ? e.byte - 1 : 0);
    std::string msg = e.what();
    auto p = msg.find("syntax error");
    throw ParseError(l, c, p == std::string::npos ? msg : msg.substr(p));
  }
  if (!j.is_object()) throw ParseError(1, 1, "diagram JSON must be an object");
  RawDiagram raw;
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string& k = it.key();
    if (k != "crossings" && k != "components" && k != "free_loops" && k != "signs" &&
        k != "oriented")
      fail_at_key(text, k, "unknown key \"" + k + "\"");
  }
  if (!j.contains("crossings")) throw ParseError(1, 1, "missing key \"crossings\"");
  if (!j.contains("components")) throw ParseError(1, 1, "missing key \"components\"");
  const json& cs = j["crossings"];
  if (!cs.is_array()) fail_at_key(text, "crossings", "\"crossings\" must be an array");
  for (size_t i = 0; i < cs.size(); ++i) {
    const json& t = cs[i];
    if (!t.is_array() || t.size() != 4)
      fail_at_key(text, "crossings", "crossing " + std::to_string(i + 1) + " must have 4 arcs");
    std::array<int, 4> a{};
    for (int s = 0; s < 4; ++s) a[s] = as_int(t[s], text, "crossings", "arc label");
    raw.crossings.push_back(a);
  }
  const json& comps = j["components"];
  if (!comps.is_array()) fail_at_key(text, "components", "\"components\" must be an array");
  for (size_t i = 0; i < comps.size(); ++i) {
    const json& r = comps[i];
    if (r.is_array() && r.empty()) {
      raw.components.push_back(std::nullopt);
      continue;
    }
    if (!r.is_array() || r.size() != 2)
      fail_at_key(text, "components",
                  "component " + std::to_string(i + 1) + " must be [first,last] or []");
    raw.components.push_back(std::make_pair(as_int(r[0], text, "components", "range bound"),
                                            as_int(r[1], text, "components", "range bound")));
  }
  if (j.contains("free_loops")) {
    int k = as_int(j["free_loops"], text, "free_loops", "\"free_loops\"");
    if (k < 0) fail_at_key(text, "free_loops", "\"free_loops\" must be nonnegative");
    for (int i = 0; i < k; ++i) raw.components.push_back(std::nullopt);
  }
  if (j.contains("signs")) {
    const json& s = j["signs"];
    if (!s.is_array()) fail_at_key(text, "signs", "\"signs\" must be an array");
    for (const auto& v : s) raw.signs.push_back(as_int(v, text, "signs", "sign"));
  }
  if (j.contains("oriented")) {
    if (!j["oriented"].is_boolean()) fail_at_key(text, "oriented", "\"oriented\" must be a boolean");
    raw.oriented = j["oriented"].get<bool>();
  }
  return raw;
}

namespace {

struct Cursor {
  const std::string& text;
  size_t pos = 0;
  int line = 1;
  size_t line_start = 0;

  int col() const { return static_cast<int>(pos - line_start) + 1; }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(line, col(), msg); }
  bool eof() const { return pos >= text.size(); }
  char peek() const { return eof() ? '\0' : text[pos]; }
  void skip_inline_space() {
    while (!eof() && (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\r' || text[pos] == ','))
      ++pos;
  }
  bool at_line_end() {
    skip_inline_space();
    return eof() || text[pos] == '\n' || text[pos] == '#';
  }
  void next_line() {
    while (!eof() && text[pos] != '\n') ++pos;
    if (!eof()) {
      ++pos;
      ++line;
      line_start = pos;
    }
  }
  void expect(char ch) {
    skip_inline_space();
    if (peek() != ch) fail(std::string("expected '") + ch + "'");
    ++pos;
  }
  int integer() {
    skip_inline_space();
    size_t start = pos;
    if (peek() == '+' || peek() == '-') ++pos;
    if (!std::isdigit(static_cast<unsigned char>(peek()))) {
      pos = start;
      fail("expected an integer");
    }
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos;
    return std::stoi(text.substr(start, pos - start));
  }
  std::string word() {
    skip_inline_space();
    size_t start = pos;
    while (!eof() && (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
      ++pos;
    return text.substr(start, pos - start);
  }
};

}  // namespace

RawDiagram parse_raw_pd(const std::string& text) {
  RawDiagram raw;
  Cursor cur{text};
  bool have_components = false;
  int free_loops = 0;
  while (!cur.eof()) {
    if (cur.at_line_end()) {
      cur.next_line();
      continue;
    }
    size_t save = cur.pos;
    std::string w = cur.word();
    if (w == "X" || w == "PD") {
      if (w == "PD") {
        cur.skip_inline_space();
        if (cur.peek() != '[' && cur.peek() != '(') cur.fail("expected '[' after PD");
        ++cur.pos;
      } else {
        cur.pos = save;
      }
      while (!cur.at_line_end()) {
        cur.skip_inline_space();
        if (cur.peek() == ']' || cur.peek() == ')') {
          ++cur.pos;
          continue;
        }
        std::string x = cur.word();
        if (x != "X") cur.fail("expected X(a,b,c,d)");
        cur.skip_inline_space();
        char open = cur.peek();
        if (open != '(' && open != '[') cur.fail("expected '(' after X");
        ++cur.pos;
        std::array<int, 4> a{};
        for (int s = 0; s < 4; ++s) a[s] = cur.integer();
        cur.expect(open == '(' ? ')' : ']');
        raw.crossings.push_back(a);
      }
      continue;
    }
    cur.skip_inline_space();
    if (cur.peek() != ':') {
      cur.pos = save;
      cur.fail("unrecognized line (expected X(...) or a 'key:' header)");
    }
    ++cur.pos;
    if (w == "components") {
      have_components = true;
      while (!cur.at_line_end()) {
        cur.expect('[');
        cur.skip_inline_space();
        if (cur.peek() == ']') {
          ++cur.pos;
          raw.components.push_back(std::nullopt);
          continue;
        }
        int lo = cur.integer();
        int hi = cur.integer();
        cur.expect(']');
        raw.components.push_back(std::make_pair(lo, hi));
      }
    } else if (w == "free_loops") {
      free_loops = cur.integer();
      if (free_loops < 0) cur.fail("free_loops must be nonnegative");
    } else if (w == "signs") {
      while (!cur.at_line_end()) {
        cur.skip_inline_space();
        char ch = cur.peek();
        if (ch == '+' || ch == '-') {
          ++cur.pos;
          if (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
            if (cur.peek() != '1') cur.fail("sign must be +1 or -1");
            ++cur.pos;
          }
          raw.signs.push_back(ch == '+' ? 1 : -1);
        } else {
          cur.fail("expected + or -");
        }
      }
    } else if (w == "oriented") {
      std::string v = cur.word();
      if (v != "true" && v != "false") cur.fail("oriented must be true or false");
      raw.oriented = v == "true";
    } else {
      cur.pos = save;
      cur.fail("unknown header '" + w + "'");
    }
    if (!cur.at_line_end()) cur.fail("trailing characters");
  }
  if (!have_components) throw ParseError(1, 1, "missing 'components:' header");
  for (int i = 0; i < free_loops; ++i) raw.components.push_back(std::nullopt);
  return raw;
}

RawDiagram parse_raw(const std::string& text) {
  for (char ch : text) {
    if (std::isspace(static_cast<unsigned char>(ch))) continue;
    return ch == '{' ? parse_raw_json(text) : parse_raw_pd(text);
  }
  throw ParseError(1, 1, "empty diagram input");
}

namespace {

// trailing crossing-free loops are written as a count
size_t listed_components(const RawDiagram& raw) {
  size_t n = raw.components.size();
  while (n > 0 && !raw.components[n - 1]) --n;
  return n;
}

}  // namespace

std::string serialize_json(const RawDiagram& raw) {
  std::ostringstream out;
  out << "{\"crossings\": [";
  for (size_t i = 0; i < raw.crossings.size(); ++i) {
    const auto& a = raw.crossings[i];
    out << (i ? ", " : "") << "[" << a[0] << "," << a[1] << "," << a[2] << "," << a[3] << "]";
  }
  out << "], \"components\": [";
  size_t n = listed_components(raw);
  for (size_t k = 0; k < n; ++k) {
    out << (k ? ", " : "");
    if (raw.components[k])
      out << "[" << raw.components[k]->first << "," << raw.components[k]->second << "]";
    else
      out << "[]";
  }
  out << "], \"free_loops\": " << raw.components.size() - n;
  if (!raw.signs.empty()) {
    out << ", \"signs\": [";
    for (size_t i = 0; i < raw.signs.size(); ++i) out << (i ? "," : "") << raw.signs[i];
    out << "]";
  }
  if (!raw.oriented) out << ", \"oriented\": false";
  out << "}\n";
  return out.str();
}

std::string serialize_pd(const RawDiagram& raw) {
  std::ostringstream out;
  out << "components:";
  size_t n = listed_components(raw);
  for (size_t k = 0; k < n; ++k) {
    if (raw.components[k])
      out << " [" << raw.components[k]->first << "," << raw.components[k]->second << "]";
    else
      out << " []";
  }
  out << "\nfree_loops: " << raw.components.size() - n << "\n";
  if (!raw.signs.empty()) {
    out << "signs:";
    for (int s : raw.signs) out << (s > 0 ? " +" : " -");
    out << "\n";
  }
  if (!raw.oriented) out << "oriented: false\n";
  for (const auto& a : raw.crossings)
    out << "X(" << a[0] << "," << a[1] << "," << a[2] << "," << a[3] << ")\n";
  return out.str();
}

LinkDiagram parse_diagram(const std::string& text) { return LinkDiagram::from_raw(parse_raw(text)); }

std::string to_json(const LinkDiagram& d) { return serialize_json(d.to_raw()); }
std::string to_pd(const LinkDiagram& d) { return serialize_pd(d.to_raw()); }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace rmb
