#include "random_diagrams.hpp"
#include "samples.hpp"

#include "rmb/identify.hpp"
#include "rmb/smoothing.hpp"

#include <doctest.h>

using namespace rmb;

TEST_CASE("component counts follow the crossing type") {
  gen::Rng rng(5);
  int self = 0, mixed = 0;
  for (int i = 0; i < 150; ++i) {
    auto d = gen::random_diagram(rng, 8);
    const int n = d.component_count();
    for (int x = 0; x < d.crossing_count(); ++x) {
      auto r = regular_smooth(d, x);
      auto s = irregular_smooth(d, x);
      CHECK(r.oriented);
      CHECK_FALSE(s.oriented);
      CHECK(r.diagram.oriented());
      CHECK_FALSE(s.diagram.oriented());
      CHECK(r.diagram.crossing_count() == d.crossing_count() - 1);
      CHECK(validate(r.diagram).ok());
      CHECK(validate(s.diagram).ok());
      if (d.is_self_crossing(x)) {
        ++self;
        CHECK(r.component_count == n + 1);
        CHECK(s.component_count == n);
      } else {
        ++mixed;
        CHECK(r.component_count == n - 1);
        CHECK(s.component_count == n - 1);
      }
      CHECK(r.component_count == r.diagram.component_count());
      CHECK(s.component_count == s.diagram.component_count());
    }
  }
  CHECK(self > 100);
  CHECK(mixed > 100);
}

TEST_CASE("regular smoothing keeps orientations and the remaining signs") {
  gen::Rng rng(6);
  for (int i = 0; i < 80; ++i) {
    auto d = gen::random_diagram(rng, 7);
    for (int x = 0; x < d.crossing_count(); ++x) {
      auto r = regular_smooth(d, x).diagram;
      int k = 0;
      for (int y = 0; y < d.crossing_count(); ++y)
        if (y != x) CHECK(crossing_sign(r, k++) == crossing_sign(d, y));
    }
  }
}

TEST_CASE("smoothings of small diagrams") {
  auto t = samples::trefoil();
  for (int x = 0; x < 3; ++x) {
    CHECK(identify(regular_smooth(t, x).diagram).name == "Hopf");
    CHECK(linking_matrix(regular_smooth(t, x).diagram)[0][1] == 1);
    CHECK(identify(irregular_smooth(t, x).diagram).name == "unknot");
  }
  auto h = samples::hopf();
  for (int x = 0; x < 2; ++x) {
    CHECK(identify(regular_smooth(h, x).diagram).name == "unknot");
    CHECK(identify(irregular_smooth(h, x).diagram).name == "unknot");
  }
  // A kink: one smoothing splits off a free loop, the other removes it.
  auto kink = apply(LinkDiagram::trivial(1), enumerate_moves(LinkDiagram::trivial(1)).front());
  REQUIRE(kink.crossing_count() == 1);
  CHECK(regular_smooth(kink, 0).diagram.free_loop_count() + irregular_smooth(kink, 0).diagram.free_loop_count() == 3);
}

TEST_CASE("smooth dispatches on the mode") {
  auto f = samples::figure_eight();
  for (int x = 0; x < 4; ++x) {
    CHECK(smooth(f, x, SmoothMode::regular).diagram == regular_smooth(f, x).diagram);
    CHECK(smooth(f, x, SmoothMode::irregular).diagram == irregular_smooth(f, x).diagram);
    CHECK(smooth(f, x, SmoothMode::irregular).source_crossing == x);
  }
  CHECK(to_string(SmoothMode::regular) == "regular");
  CHECK(to_string(SmoothMode::irregular) == "irregular");
}
