#include "rmb/unknotting.hpp"

#include "rmb/identify.hpp"
#include "rmb/moves.hpp"
#include "rmb/net.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <fstream>
#include <map>
#include <mutex>
#include <thread>

namespace rmb {

namespace {

constexpr const char* kCacheVersion = "rmb-unknotting-cache 1";

struct Memo {
  std::mutex mu;
  std::map<std::string, UInterval> table;
  std::map<std::string, bool> loaded_files;
};

Memo& memo() {
  static Memo m;
  return m;
}

nlohmann::json witness_json(const Witness& w) {
  return {{"kind", w.kind}, {"value", w.value}, {"detail", w.detail}};
}

UInterval from_json(const nlohmann::json& j) {
  UInterval u;
  u.lo = j.at("lo").get<int>();
  if (!j.at("hi").is_null()) u.hi = j.at("hi").get<int>();
  for (const auto& w : j.at("witnesses"))
    u.witnesses.push_back({w.at("kind").get<std::string>(), w.at("value").get<int>(),
                           w.at("detail").get<std::string>()});
  return u;
}

// Disk cache: a version line, then one JSON object per line keyed by the
// canonical code of the simplified diagram.  Only exact values are stored.
void load_disk(const std::string& path) {
  Memo& m = memo();
  if (path.empty() || m.loaded_files[path]) return;
  m.loaded_files[path] = true;
  std::ifstream in(path);
  std::string line;
  if (!in || !std::getline(in, line) || line != kCacheVersion) return;
  while (std::getline(in, line)) {
    auto j = nlohmann::json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.contains("key")) continue;
    m.table.emplace(j["key"].get<std::string>(), from_json(j["u"]));
  }
}

void store_disk(const std::string& path, const std::string& key, const UInterval& u) {
  if (path.empty()) return;
  bool fresh = !std::ifstream(path).good();
  std::ofstream out(path, std::ios::app);
  if (!out) return;
  if (fresh) out << kCacheVersion << "\n";
  nlohmann::json j;
  j["key"] = key;
  j["u"] = nlohmann::json::parse(to_json(u));
  out << j.dump() << "\n";
}

bool is_trivial_class(const LinkDiagram& d) {
  return fingerprint(d).bracket_class == fingerprint(LinkDiagram::trivial(d.component_count())).bracket_class;
}

bool next_combination(std::vector<int>& c, int n) {
  int k = static_cast<int>(c.size());
  for (int i = k - 1; i >= 0; --i) {
    if (c[i] < n - k + i) {
      ++c[i];
      for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

std::string list(const std::vector<int>& xs) {
  std::string s;
  for (size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i] + 1);
  return s;
}

}  // namespace

void clear_unknotting_cache() {
  std::lock_guard<std::mutex> lock(memo().mu);
  memo().table.clear();
}

std::pair<int, std::vector<Witness>> u_lower(const LinkDiagram& d0, const UnknotOptions& o) {
  LinkDiagram d = simplify(d0, o.simplify_budget).diagram.with_oriented(true);
  std::vector<Witness> ws;
  int best = 0;
  const int n = d.component_count();
  if (d.crossing_count() == 0) return {0, {{"crossing-free", 0, "trivial link diagram"}}};
  if (n == 1) {
    int sigma = seifert(d).signature;
    int v = (std::abs(sigma) + 1) / 2;
    ws.push_back({"signature", v, "sigma = " + std::to_string(sigma)});
    best = std::max(best, v);
  } else {
    auto lk = d.linking_matrix();
    int sum = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) sum += std::abs(lk[i][j]);
    ws.push_back({"linking", sum, "sum of |lk| over pairs"});
    best = std::max(best, sum);
    // Changes between distinct components keep every component's knot type.
    int comp = sum;
    std::string detail;
    for (int k = 0; k < n; ++k) {
      UInterval uk = unknotting_number(sublink(d, {k}), o);
      comp += uk.lo;
      detail += (k ? "," : "") + std::to_string(uk.lo);
    }
    ws.push_back({"component", comp, "sum |lk| + component lower bounds (" + detail + ")"});
    best = std::max(best, comp);
  }
  if (!is_trivial_class(d)) {
    ws.push_back({"nontrivial", 1, "bracket differs from the trivial link"});
    best = std::max(best, 1);
  }
  return {best, ws};
}

std::pair<std::optional<int>, Witness> u_upper(const LinkDiagram& d0, const UnknotOptions& o, int start) {
  SimplifyResult sr = simplify(d0, o.simplify_budget);
  const LinkDiagram& d = sr.diagram;
  const int c = d.crossing_count();
  if (c == 0) return {0, {"search", 0, "already crossing-free"}};
  long explored = 0;
  for (int k = std::max(start, 0); k <= c; ++k) {
    std::vector<std::vector<int>> subsets;
    std::vector<int> comb(k);
    for (int i = 0; i < k; ++i) comb[i] = i;
    do {
      subsets.push_back(comb);
    } while (k > 0 && next_combination(comb, c));
    if (explored + static_cast<long>(subsets.size()) > o.budget)
      return {std::nullopt, {"search", -1, "budget exhausted at k = " + std::to_string(k)}};
    explored += static_cast<long>(subsets.size());

    std::atomic<long> found{static_cast<long>(subsets.size())};
    auto work = [&](int t, int nt) {
      for (long i = t; i < static_cast<long>(subsets.size()); i += nt) {
        if (i > found.load()) return;
        LinkDiagram changed = crossing_change(d, subsets[i]);
        if (simplify(changed, o.simplify_budget).diagram.crossing_count() == 0) {
          long cur = found.load();
          while (i < cur && !found.compare_exchange_weak(cur, i)) {
          }
          return;
        }
      }
    };
    int nt = std::max(1, o.threads);
    if (nt == 1) {
      work(0, 1);
    } else {
      std::vector<std::thread> pool;
      for (int t = 0; t < nt; ++t) pool.emplace_back(work, t, nt);
      for (auto& th : pool) th.join();
    }
    if (found < static_cast<long>(subsets.size()))
      return {k, {"search", k,
                  "changing crossings {" + list(subsets[found]) + "} of the simplified " +
                      std::to_string(c) + "-crossing diagram gives a crossing-free diagram"}};
  }
  return {std::nullopt, {"search", -1, "no subset simplified to a crossing-free diagram"}};
}

UInterval unknotting_number(const LinkDiagram& d0, const UnknotOptions& o) {
  LinkDiagram d = simplify(d0, o.simplify_budget).diagram;
  UInterval r;
  if (d.crossing_count() == 0) {
    r.lo = 0;
    r.hi = 0;
    r.witnesses.push_back({"crossing-free", 0, "trivial link diagram"});
    return r;
  }
  const std::string key = canonical_code(d.with_oriented(true));
  {
    std::lock_guard<std::mutex> lock(memo().mu);
    load_disk(o.cache_path);
    auto it = memo().table.find(key);
    if (it != memo().table.end()) return it->second;
  }
  auto [lo, lw] = u_lower(d, o);
  r.lo = lo;
  r.witnesses = lw;
  Identification id = identify(d, o.simplify_budget);
  if (id.found && id.entry && id.entry->unknotting_number >= lo) {
    r.lo = r.hi.emplace(id.entry->unknotting_number);
    r.witnesses.insert(r.witnesses.begin(),
                       {"catalogue", id.entry->unknotting_number, id.entry->name + ": " + id.entry->citation});
  } else {
    if (id.found && id.entry)
      r.witnesses.push_back({"catalogue", id.entry->unknotting_number,
                             "ignored: " + id.entry->name + " contradicts the lower bound"});
    auto [hi, hw] = u_upper(d, o, lo);
    if (hi) r.hi = *hi;
    r.witnesses.push_back(hw);
    if (id.split && id.found) {
      // u of a split union is at most the sum over its pieces
      int sum = 0;
      bool all = true;
      for (const auto& p : split_pieces(d)) {
        UInterval up = unknotting_number(p, o);
        if (!up.hi) all = false;
        else sum += *up.hi;
      }
      if (all && (!r.hi || sum < *r.hi)) {
        r.hi = sum;
        r.witnesses.push_back({"split", sum, "sum over split pieces"});
      }
    }
  }
  std::lock_guard<std::mutex> lock(memo().mu);
  memo().table[key] = r;
  if (r.exact()) store_disk(o.cache_path, key, r);
  return r;
}

std::string to_json(const UInterval& u) {
  nlohmann::json j;
  j["lo"] = u.lo;
  j["hi"] = u.hi ? nlohmann::json(*u.hi) : nlohmann::json(nullptr);
  j["exact"] = u.exact();
  j["witnesses"] = nlohmann::json::array();
  for (const auto& w : u.witnesses) j["witnesses"].push_back(witness_json(w));
  return j.dump();
}

}  // namespace rmb
