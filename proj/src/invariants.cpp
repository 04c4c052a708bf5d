#include "rmb/invariants.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>
#include <thread>

namespace rmb {

FormalSum ilk(const LinkDiagram& d) {
  if (d.component_count() != 1) throw std::invalid_argument("ilk requires a knot diagram");
  FormalSum s;
  for (int x = 0; x < d.crossing_count(); ++x) {
    SmoothedResult r = regular_smooth(d, x);
    int lk = r.diagram.linking_matrix()[0][1];
    s[{d.sign(x) > 0 ? 'X' : 'Y', lk}] += 1;
  }
  return s;
}

int g(const FormalSum& s) {
  int v = 0;
  for (const auto& [k, m] : s) v += m * (k.first == 'X' ? std::abs(k.second) + 1 : -std::abs(k.second) - 1);
  return v;
}

int g0(const FormalSum& s) {
  int v = 0;
  for (const auto& [k, m] : s) v += m * (k.first == 'X' ? std::abs(k.second) : -std::abs(k.second));
  return v;
}

std::string to_string(const FormalSum& s) {
  if (s.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [k, m] : s) {
    out << (first ? "" : " + ") << (m != 1 ? std::to_string(m) : "") << k.first << "_" << k.second;
    first = false;
  }
  return out.str();
}

SignMatrix constant_matrix(int n, int v) { return SignMatrix(n, std::vector<int>(n, v)); }

void check_config(const IuConfig& cfg, int n) {
  auto check = [&](const SignMatrix& m, const char* name) {
    if (static_cast<int>(m.size()) != n)
      throw std::invalid_argument(std::string(name) + " must have order " + std::to_string(n));
    for (int i = 0; i < n; ++i) {
      if (static_cast<int>(m[i].size()) != n)
        throw std::invalid_argument(std::string(name) + " must be square");
      for (int j = 0; j < n; ++j) {
        if (m[i][j] < -1 || m[i][j] > 1)
          throw std::invalid_argument(std::string(name) + " entries must be -1, 0 or +1");
        if (m[i][j] != m[j][i]) throw std::invalid_argument(std::string(name) + " must be symmetric");
      }
    }
  };
  check(cfg.S, "S");
  check(cfg.T, "T");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if ((cfg.S[i][j] == 0) != (cfg.T[i][j] == 0))
        throw std::invalid_argument("T must vanish exactly where S does");
  if (cfg.eps.has_value() != cfg.delta.has_value())
    throw std::invalid_argument("eps and delta must be given together");
  for (auto v : {cfg.eps, cfg.delta})
    if (v && *v != 1 && *v != -1) throw std::invalid_argument("eps and delta must be +1 or -1");
}

SignMatrix parse_sign_matrix(const std::string& text) {
  auto first = text.find_first_not_of(" \t\r\n");
  SignMatrix m;
  if (first != std::string::npos && text[first] == '[') {
    auto j = nlohmann::json::parse(text);
    m = j.get<SignMatrix>();
  } else {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
      auto hash = line.find('#');
      if (hash != std::string::npos) line.resize(hash);
      std::istringstream row(line);
      std::vector<int> r;
      std::string tok;
      while (row >> tok) {
        if (tok == "+1" || tok == "+") tok = "1";
        if (tok == "-") tok = "-1";
        r.push_back(std::stoi(tok));
      }
      if (!r.empty()) m.push_back(r);
    }
  }
  return m;
}

std::string to_json(const SignMatrix& m) { return nlohmann::json(m).dump(); }

std::string halves(long long twice) {
  if (twice % 2 == 0) return std::to_string(twice / 2);
  return std::to_string(twice) + "/2";
}

long long IuValue::twice() const {
  if (!exact()) throw OracleUnresolved("iu value is not exact: [" + halves(lo2) + ", " + halves(hi2) + "]");
  return lo2;
}

std::string IuValue::value_string() const {
  if (exact()) return halves(lo2);
  return "[" + halves(lo2) + ", " + halves(hi2) + "]";
}

namespace {

// Bounds of |[a, b]| (or the identity in signed mode).
std::pair<long long, long long> magnitude(long long a, long long b, bool signed_mode) {
  if (signed_mode) return {a, b};
  if (a >= 0) return {a, b};
  if (b <= 0) return {-b, -a};
  return {0, std::max(-a, b)};
}

const long long kUnbounded = 1000000;

}  // namespace

IuValue iu(const LinkDiagram& d, const IuConfig& cfg) {
  const int n = d.component_count();
  check_config(cfg, n);
  IuValue v;
  if (cfg.eps) v.correction2 = *cfg.eps * (d.crossing_count() + *cfg.delta * 3 * d.writhe());
  const int c = d.crossing_count();
  v.ledger.resize(c);
  bool any = false;
  for (int x = 0; x < c; ++x) {
    LedgerEntry& e = v.ledger[x];
    e.crossing = x;
    e.sign = d.sign(x);
    int i = d.over_component(x), j = d.under_component(x);
    e.t = cfg.T[i][j];
    int s = cfg.S[i][j];
    e.set = s > 0 ? LedgerEntry::Set::regular : s < 0 ? LedgerEntry::Set::irregular : LedgerEntry::Set::skipped;
    any |= s != 0;
  }
  if (!any) {
    v.lo2 = v.hi2 = v.correction2;
    return v;
  }
  v.u_link = unknotting_number(d, cfg.oracle);
  if (!v.u_link.exact())
    throw OracleUnresolved("unknotting number of the diagram's link is unresolved: " + to_json(v.u_link));
  const long long uL = v.u_link.lo;

  std::vector<int> todo;
  for (int x = 0; x < c; ++x)
    if (v.ledger[x].set != LedgerEntry::Set::skipped) todo.push_back(x);
  auto work = [&](size_t t, size_t nt) {
    for (size_t k = t; k < todo.size(); k += nt) {
      LedgerEntry& e = v.ledger[todo[k]];
      SmoothMode mode = e.set == LedgerEntry::Set::regular ? SmoothMode::regular : SmoothMode::irregular;
      e.u_smoothed = unknotting_number(smooth(d, e.crossing, mode).diagram, cfg.oracle);
    }
  };
  size_t nt = static_cast<size_t>(std::max(1, cfg.oracle.threads));
  if (nt == 1 || todo.size() < 2) {
    work(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (size_t t = 0; t < nt; ++t) pool.emplace_back(work, t, nt);
    for (auto& th : pool) th.join();
  }

  long long lo2 = v.correction2, hi2 = v.correction2;
  for (int x : todo) {
    LedgerEntry& e = v.ledger[x];
    long long a = e.u_smoothed.lo - uL;
    long long b = e.u_smoothed.hi ? *e.u_smoothed.hi - uL : kUnbounded;
    auto [m0, m1] = magnitude(a, b, cfg.signed_mode);
    long long f = static_cast<long long>(e.t) * e.sign;
    e.lo2 = 2 * (f > 0 ? m0 : -m1);
    e.hi2 = 2 * (f > 0 ? m1 : -m0);
    lo2 += e.lo2;
    hi2 += e.hi2;
  }
  v.lo2 = lo2;
  v.hi2 = hi2;
  return v;
}

std::string to_json(const IuValue& v, bool with_ledger) {
  nlohmann::json j;
  j["exact"] = v.exact();
  j["value"] = v.value_string();
  j["twice_lo"] = v.lo2;
  j["twice_hi"] = v.hi2;
  j["correction"] = halves(v.correction2);
  j["u_link"] = nlohmann::json::parse(to_json(v.u_link));
  if (with_ledger) {
    j["ledger"] = nlohmann::json::array();
    for (const auto& e : v.ledger) {
      nlohmann::json r;
      r["crossing"] = e.crossing + 1;
      r["set"] = e.set == LedgerEntry::Set::regular     ? "C"
                 : e.set == LedgerEntry::Set::irregular ? "C-check"
                                                        : "skipped";
      r["t"] = e.t;
      r["sign"] = e.sign;
      if (e.set != LedgerEntry::Set::skipped) {
        r["u_smoothed"] = nlohmann::json::parse(to_json(e.u_smoothed));
        r["contribution"] = e.lo2 == e.hi2 ? halves(e.lo2) : "[" + halves(e.lo2) + ", " + halves(e.hi2) + "]";
      }
      j["ledger"].push_back(r);
    }
  }
  return j.dump();
}

int move_bound_twice(long long a2, long long b2) {
  long long diff = std::llabs(a2 - b2);  // = 2 |v1 - v2|
  return static_cast<int>((diff + 3) / 4);
}

int move_bound(const IuValue& v1, const IuValue& v2) { return move_bound_twice(v1.twice(), v2.twice()); }

std::vector<IuValue> trace(const MoveSequence& s, const IuConfig& cfg) {
  std::vector<IuValue> out;
  auto ds = run_sequence(s);
  for (size_t k = 0; k < ds.size(); ++k) {
    IuValue v;
    try {
      v = iu(ds[k], cfg);
    } catch (const OracleUnresolved& e) {
      throw OracleUnresolved(e.what(), static_cast<int>(k));
    }
    if (!v.exact())
      throw OracleUnresolved("iu unresolved after step " + std::to_string(k) + ": " + v.value_string(),
                             static_cast<int>(k));
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace rmb
