#include "oracles.hpp"
#include "random_diagrams.hpp"
#include "samples.hpp"

#include "rmb/construct.hpp"
#include "rmb/identify.hpp"
#include "rmb/pd_io.hpp"

#include <doctest.h>

#include <set>

using namespace rmb;

namespace {

std::vector<LinkDiagram> seifert_corpus() {
  std::vector<LinkDiagram> out;
  gen::Rng rng(5);
  while (out.size() < 150) {
    int strands = gen::uniform(rng, 2, 6);
    std::vector<int> w;
    int len = gen::uniform(rng, 3, 16);
    for (int k = 0; k < len; ++k) w.push_back(gen::uniform(rng, 1, strands - 1) * (gen::uniform(rng, 0, 1) ? 1 : -1));
    auto d = braid_closure(strands, w);
    if (d.free_loop_count() || d.piece_count() != 1) continue;
    out.push_back(d);
  }
  for (auto v : std::vector<std::vector<int>>{{3}, {2, 2}, {3, 2}, {3, 1, 3}, {7, 1, 2}, {2, 1, 2}, {4}, {2, 1, 1, 2}})
    out.push_back(rational_link(v));
  return out;
}

}  // namespace

TEST_CASE("bracket agrees with the state sum") {
  gen::Rng rng(11);
  for (int i = 0; i < 150; ++i) {
    auto d = gen::random_diagram(rng, 9);
    CHECK(kauffman_bracket(d) == oracle::bracket(d));
  }
}

TEST_CASE("Jones polynomial of the trefoil and the figure eight") {
  // Exponents count powers of q^{1/2}: -q^-4 + q^-3 + q^-1.
  auto expected = LaurentPoly::monomial(-1, -8) + LaurentPoly::monomial(1, -6) + LaurentPoly::monomial(1, -2);
  CHECK(jones(samples::trefoil()) == expected);
  CHECK(jones(mirror(samples::trefoil())) == expected.inverted());
  CHECK(jones(samples::figure_eight()) == jones(samples::figure_eight()).inverted());
  CHECK(jones(samples::trefoil()) != jones(mirror(samples::trefoil())));
  CHECK_THROWS_AS(jones(samples::trefoil().with_oriented(false)), std::invalid_argument);
}

TEST_CASE("Seifert matrices: unimodularity, determinant, signature, Alexander polynomial") {
  for (const auto& d : seifert_corpus()) {
    auto s = seifert(d);
    const IntMatrix& v = s.matrix;
    CHECK(abs(rmb::determinant(add(v, transpose(v)))) == determinant(d));
    CHECK(s.signature == oracle::gl_signature(d));
    CHECK(s.signature == oracle::gl_signature(d, true));
    if (d.component_count() == 1) {
      CHECK(abs(rmb::determinant(subtract(v, transpose(v)))) == 1);
      CHECK(oracle::alexander(d) == oracle::alexander_from_seifert(v));
    }
  }
}

TEST_CASE("signature changes sign under mirror image") {
  for (const auto& d : seifert_corpus()) CHECK(seifert(mirror(d)).signature == -seifert(d).signature);
  CHECK(seifert(samples::trefoil()).signature == 2);
}

TEST_CASE("catalogue fingerprints recompute and are distinct") {
  std::set<std::string> seen;
  for (const auto& e : catalogue()) {
    auto d = parse_diagram(e.diagram_json);
    CHECK(d.component_count() == e.components);
    CHECK(fingerprint(d).to_string() == e.fingerprint);
    CHECK(seen.insert(e.fingerprint).second);
    CHECK(identify(d).name == e.name);
  }
  CHECK(seifert(parse_diagram(catalogue_entry("10_2")->diagram_json)).signature == -6);
}

TEST_CASE("identification survives random moves and mirror images") {
  gen::Rng rng(3);
  for (const char* name : {"3_1", "4_1", "5_2", "7_4", "Hopf", "Whitehead", "T(2,4)"}) {
    auto d = parse_diagram(catalogue_entry(name)->diagram_json);
    for (int k = 0; k < 4; ++k)
      if (auto e = gen::random_move(rng, d, d.crossing_count() + 2)) d = apply(d, *e);
    CHECK(identify(d).name == name);
    CHECK(identify(mirror(d)).name == name);
  }
}

TEST_CASE("composite and split links are named by their factors") {
  auto sum = connected_sum(rational_link({3}), rational_link({2}));
  CHECK(identify(sum).name == "3_1 # Hopf");
  CHECK(identify(connected_sum(rational_link({2}), rational_link({2}), 1, 0)).name == "Hopf # Hopf");
  auto split = disjoint_union(rational_link({3}), rational_link({2, 2}));
  CHECK(identify(split).name == "3_1 U 4_1");
  CHECK(identify(rational_link({3, 3, 2})).name == "unknown");  // 8 crossings, determinant 23
}
