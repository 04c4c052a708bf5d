#include "properties.hpp"
#include "samples.hpp"

#include "rmb/construct.hpp"
#include "rmb/invariants.hpp"

#include <doctest.h>

using namespace rmb;

namespace {

IuConfig knot_config(int s) {
  IuConfig c;
  c.S = constant_matrix(1, s);
  c.T = constant_matrix(1, 1);
  return c;
}

void require_clean(const props::Tally& t) {
  for (const auto& v : t.violations) MESSAGE(v);
  CHECK(t.ok());
}

}  // namespace

TEST_CASE("ilk, g and g0 of the trefoil") {
  auto s = ilk(samples::trefoil());
  CHECK(s == FormalSum{{{'X', 1}, 3}});
  CHECK(g(s) == 6);
  CHECK(g0(s) == 3);
  auto m = ilk(mirror(samples::trefoil()));
  CHECK(m == FormalSum{{{'Y', -1}, 3}});
  CHECK(g(m) == -6);
  CHECK(g0(m) == -3);
  CHECK_THROWS_AS(ilk(samples::hopf()), std::invalid_argument);
}

TEST_CASE("g is g0 plus the writhe") {
  gen::Rng rng(12);
  for (int i = 0; i < 100; ++i) {
    auto d = gen::random_diagram(rng, 8, 1);
    auto s = ilk(d);
    CHECK(g(s) == g0(s) + d.writhe());
  }
}

TEST_CASE("crossing-free diagrams have iu = 0") {
  for (int n = 1; n <= 3; ++n)
    for (int s : {-1, 0, 1}) {
      IuConfig c;
      c.S = constant_matrix(n, s);
      c.T = constant_matrix(n, s == 0 ? 0 : 1);
      auto v = iu(LinkDiagram::trivial(n), c);
      CHECK(v.exact());
      CHECK(v.lo2 == 0);
    }
}

TEST_CASE("trefoil values") {
  auto t = samples::trefoil();
  // Regular smoothings give Hopf links (u = 1 = u(3_1)), irregular ones the unknot.
  CHECK(iu(t, knot_config(1)).twice() == 0);
  CHECK(iu(t, knot_config(-1)).twice() == 6);
  CHECK(iu(mirror(t), knot_config(-1)).twice() == -6);
  auto c = knot_config(-1);
  c.signed_mode = true;
  CHECK(iu(t, c).twice() == -6);
  // eps (c/2 + 3 delta w / 2) with c = w = 3.
  c = knot_config(-1);
  c.eps = 1;
  c.delta = 1;
  CHECK(iu(t, c).twice() == 6 + 12);
  c.delta = -1;
  CHECK(iu(t, c).value_string() == "0");
}

TEST_CASE("Hopf link: mixed crossings contribute T_12 sign |0 - 1|") {
  auto h = samples::hopf();
  for (int s : {-1, 1})
    for (int t : {-1, 1}) {
      IuConfig c;
      c.S = {{1, s}, {s, 1}};
      c.T = {{1, t}, {t, 1}};
      CHECK(iu(h, c).twice() == 2 * t * h.writhe());
    }
  IuConfig c;
  c.S = {{1, 0}, {0, 1}};
  c.T = {{1, 0}, {0, 1}};
  CHECK(iu(h, c).twice() == 0);
}

TEST_CASE("malformed configurations are rejected") {
  auto h = samples::hopf();
  IuConfig c;
  c.S = constant_matrix(1, 1);
  c.T = constant_matrix(1, 1);
  CHECK_THROWS_AS(iu(h, c), std::invalid_argument);  // wrong order
  c.S = {{1, 1}, {-1, 1}};
  c.T = constant_matrix(2, 1);
  CHECK_THROWS_AS(check_config(c, 2), std::invalid_argument);  // not symmetric
  c.S = {{1, 2}, {2, 1}};
  CHECK_THROWS_AS(check_config(c, 2), std::invalid_argument);
  c.S = {{1, 0}, {0, 1}};
  CHECK_THROWS_AS(check_config(c, 2), std::invalid_argument);  // T nonzero where S vanishes
  c.S = c.T = constant_matrix(2, 1);
  c.eps = 1;
  CHECK_THROWS_AS(check_config(c, 2), std::invalid_argument);
  c.delta = 2;
  CHECK_THROWS_AS(check_config(c, 2), std::invalid_argument);
  c.delta = -1;
  CHECK_NOTHROW(check_config(c, 2));
}

TEST_CASE("sign matrices parse from JSON and from rows") {
  SignMatrix want{{-1, 0}, {0, 1}};
  CHECK(parse_sign_matrix("[[-1,0],[0,1]]") == want);
  CHECK(parse_sign_matrix("-1 0\n0 1\n") == want);
  CHECK(parse_sign_matrix(to_json(want)) == want);
  CHECK(parse_sign_matrix("1") == SignMatrix{{1}});
}

TEST_CASE("move bounds and traces") {
  CHECK(move_bound_twice(8, 0) == 2);
  CHECK(move_bound_twice(0, 8) == 2);
  CHECK(move_bound_twice(5, 0) == 2);  // ceil(5/4)
  CHECK(move_bound_twice(3, 3) == 0);
  auto t = samples::trefoil();
  CHECK(move_bound(iu(t, knot_config(-1)), iu(LinkDiagram::trivial(1), knot_config(-1))) == 2);

  // Kinks on the unknot: each RI leaves iu at 0; the eps,delta value moves.
  gen::Rng rng(4);
  MoveSequence s{LinkDiagram::trivial(1), {}};
  auto d = s.initial;
  for (int k = 0; k < 3; ++k) {
    std::vector<MoveEvent> adds;
    for (const auto& e : enumerate_moves(d))
      if (e.kind == MoveKind::RI_add) adds.push_back(e);
    s.events.push_back(adds[gen::uniform(rng, 0, static_cast<int>(adds.size()) - 1)]);
    d = apply(d, s.events.back());
  }
  auto plain = trace(s, knot_config(1));
  REQUIRE(plain.size() == 4);
  for (const auto& v : plain) CHECK(v.twice() == 0);
  CHECK(trace(MoveSequence{t, {}}, knot_config(-1)).size() == 1);
}

// With s_ij = -1 on the bigon's strands the two irregular smoothings agree, so
// the change is exactly zero.  Regular smoothings at a matched bigon can differ
// by a twist, so no such exactness holds for s_ij = +1.
TEST_CASE("matched RII moves leave iu unchanged under irregular smoothing") {
  gen::Rng rng(31);
  int seen = 0;
  while (seen < 40) {
    auto d = gen::random_diagram(rng, 5);
    auto e = gen::random_move(rng, d, 7, [](const MoveEvent& m) {
      return m.kind == MoveKind::RII_add && m.tag == R2Tag::matched;
    });
    if (!e) continue;
    auto c = props::random_config(rng, d.component_count());
    c.S = constant_matrix(d.component_count(), -1);
    for (auto& row : c.T)
      for (auto& v : row) v = v == 0 ? 1 : v;
    auto a = iu(d, c), b = iu(apply(d, *e), c);
    if (!a.exact() || !b.exact()) continue;
    ++seen;
    CHECK(a.lo2 == b.lo2);
  }
}

TEST_CASE("invariance under moves, small sample") {
  gen::Rng rng(77);
  auto t = props::invariance_suite(rng, 60);
  require_clean(t);
  CHECK(t.by_kind["RI"] > 0);
  CHECK(t.by_kind["RII"] > 0);
  CHECK(t.by_kind["RIII"] > 0);
}

TEST_CASE("classical invariants, small sample") {
  gen::Rng rng(78);
  require_clean(props::classical_suite(rng, 60));
}

TEST_CASE("smoothing structure around RII and RIII, small sample") {
  gen::Rng rng(79);
  auto t = props::structural_suite(rng, 60);
  require_clean(t);
  CHECK(t.by_kind["RII matched"] > 0);
  CHECK(t.by_kind["RII unmatched"] > 0);
  CHECK(t.by_kind["RIII"] > 0);
}
