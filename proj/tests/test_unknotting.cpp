#include "random_diagrams.hpp"
#include "samples.hpp"

#include "rmb/construct.hpp"
#include "rmb/identify.hpp"
#include "rmb/pd_io.hpp"
#include "rmb/unknotting.hpp"

#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

using namespace rmb;

namespace {

bool has_witness(const std::vector<Witness>& ws, const std::string& kind, int value) {
  for (const auto& w : ws)
    if (w.kind == kind && w.value == value) return true;
  return false;
}

}  // namespace

TEST_CASE("trivial links") {
  for (int k = 1; k <= 4; ++k) {
    auto t = unknotting_number(LinkDiagram::trivial(k));
    CHECK(t.exact());
    CHECK(t.lo == 0);
  }
  // A diagram of the unknot with crossings still resolves to 0.
  gen::Rng rng(3);
  auto d = LinkDiagram::trivial(1);
  for (int k = 0; k < 4; ++k) d = apply(d, *gen::random_move(rng, d, 6));
  auto u = unknotting_number(d);
  CHECK(u.exact());
  CHECK(u.lo == 0);
}

TEST_CASE("torus links by the linking bound and the search") {
  for (int k : {2, 4, 6, 8}) {
    auto d = rational_link({k});
    auto lo = u_lower(d);
    CHECK(lo.first == k / 2);
    CHECK(has_witness(lo.second, "linking", k / 2));
    CHECK(u_upper(d).first == k / 2);
  }
}

TEST_CASE("knots: signature bound and search meet") {
  // Figure eight: signature 0, the nontriviality bound gives 1, one change suffices.
  auto f8 = samples::figure_eight();
  CHECK(u_lower(f8).first == 1);
  CHECK(u_upper(f8).first == 1);
  // 10_2 with signature -6: 3 from below, 3 from the search.
  auto k = parse_diagram(catalogue_entry("10_2")->diagram_json);
  auto lo = u_lower(k);
  CHECK(lo.first == 3);
  CHECK(has_witness(lo.second, "signature", 3));
  CHECK(u_upper(k, {}, 0).first == 3);
  // Star knot 5_1 (the twist knot 5_2 has u = 1).
  CHECK(u_lower(rational_link({5})).first == 2);
  CHECK(unknotting_number(rational_link({3, 2})).lo == 1);
}

TEST_CASE("7_4 relies on the catalogue citation") {
  auto u = unknotting_number(rational_link({3, 1, 3}));
  CHECK(u.exact());
  CHECK(u.lo == 2);
  CHECK(u.witnesses.front().kind == "catalogue");
  CHECK(u_lower(rational_link({3, 1, 3})).first == 1);
}

TEST_CASE("component bound on T(2,6) # 3_1") {
  auto d = connected_sum(rational_link({6}), rational_link({3}));
  auto lo = u_lower(d);
  CHECK(lo.first == 4);
  CHECK(has_witness(lo.second, "component", 4));
  auto u = unknotting_number(d);
  CHECK(u.exact());
  CHECK(u.lo == 4);
}

TEST_CASE("lower bound never exceeds upper bound on random diagrams") {
  gen::Rng rng(21);
  int resolved = 0;
  for (int i = 0; i < 200; ++i) {
    auto d = gen::random_diagram(rng, 8);
    auto lo = u_lower(d).first;
    auto hi = u_upper(d).first;
    if (!hi) continue;
    ++resolved;
    CHECK(lo <= *hi);
  }
  CHECK(resolved > 150);
}

TEST_CASE("one crossing change moves u by at most one") {
  for (const auto& e : catalogue()) {
    auto d = parse_diagram(e.diagram_json);
    if (d.crossing_count() > 8) continue;
    auto u = unknotting_number(d);
    REQUIRE(u.exact());
    for (int x = 0; x < d.crossing_count(); ++x) {
      auto v = unknotting_number(crossing_change(d, x));
      if (v.exact()) CHECK(std::abs(v.lo - u.lo) <= 1);
    }
  }
}

TEST_CASE("u is unchanged by Reidemeister moves") {
  gen::Rng rng(8);
  for (const char* name : {"3_1", "Hopf", "5_2", "T(2,4)"}) {
    auto d = parse_diagram(catalogue_entry(name)->diagram_json);
    int u = unknotting_number(d).lo;
    for (int k = 0; k < 5; ++k) {
      auto e = gen::random_move(rng, d, d.crossing_count() + 2);
      d = apply(d, *e);
      auto v = unknotting_number(d);
      if (v.exact()) CHECK(v.lo == u);
    }
  }
}

TEST_CASE("threads do not change the result") {
  UnknotOptions one, four;
  four.threads = 4;
  for (auto v : std::vector<std::vector<int>>{{2, 1, 1, 2}, {4, 3}, {7}}) {
    auto d = rational_link(v);
    clear_unknotting_cache();
    auto a = u_upper(d, one);
    auto b = u_upper(d, four);
    CHECK(a.first == b.first);
    CHECK(a.second.detail == b.second.detail);
  }
}

TEST_CASE("disk cache is versioned and reused") {
  auto path = (std::filesystem::temp_directory_path() / "rmb_test_unknotting.cache").string();
  std::remove(path.c_str());
  UnknotOptions o;
  o.cache_path = path;
  clear_unknotting_cache();
  auto d = rational_link({4, 2});
  auto first = unknotting_number(d, o);
  REQUIRE(first.exact());
  std::ifstream in(path);
  std::string version;
  std::getline(in, version);
  CHECK(version == "rmb-unknotting-cache 1");
  clear_unknotting_cache();
  auto again = unknotting_number(d, o);
  CHECK(again.lo == first.lo);
  CHECK(to_json(again) == to_json(first));
  std::remove(path.c_str());
}
