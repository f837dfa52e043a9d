#include <doctest.h>

#include <random>

#include "linearr/constructions.hpp"
#include "linearr/cups_caps.hpp"
#include "linearr/errors.hpp"
#include "oracles.hpp"

using namespace linearr;

TEST_CASE("cups and caps on small families") {
  const LineFamily one({Line{0, 0}});
  CHECK(is_cup(one));
  CHECK(is_cap(one));
  const LineFamily wedge({Line{1, 0}, Line{-1, 0}});
  CHECK(is_cup(wedge));
  CHECK(is_cap(wedge));
  const LineFamily p3 = pencil(Point{0, 0}, 3);
  CHECK_FALSE(is_cup(p3));
  CHECK_FALSE(is_cap(p3));
  CHECK_FALSE(is_cup(LineFamily()));
}

TEST_CASE("longest chains") {
  for (std::size_t n = 2; n <= 6; ++n) {
    const LineFamily p = pencil(Point{1, -1}, n);
    CHECK(longest_cup(p).size == 2);
    CHECK(longest_cap(p).size == 2);
  }
  // Tangents to y = x^2 form a cup of every size.
  std::vector<Line> tangents;
  for (int t = -3; t <= 3; ++t) tangents.push_back(Line{2 * t, -t * t});
  const LineFamily parabola(tangents);
  CHECK(longest_cup(parabola).size == 7);
  CHECK(longest_cap(parabola).size == 2);
  CHECK(longest_cup(LineFamily({Line{4, 4}})).size == 1);
  CHECK(longest_cup(LineFamily()).size == 0);
}

TEST_CASE("chain DP agrees with subset brute force") {
  std::mt19937_64 rng(2024);
  for (int round = 0; round < 60; ++round) {
    const LineFamily f = oracle::random_family(rng, 1 + round % 7, round % 2 == 0);
    const ChainResult cup = longest_cup(f);
    const ChainResult cap = longest_cap(f);
    CHECK(cup.size == oracle::max_cup_brute(f));
    CHECK(cap.size == oracle::max_cap_brute(f));
    CHECK(is_cup(f.subset(cup.witness)));
    CHECK(is_cap(f.subset(cap.witness)));
    CHECK(is_cup(f) == oracle::cup_by_envelope(f));
    CHECK(is_cap(f) == oracle::cap_by_envelope(f));
  }
}

TEST_CASE("base families have short caps") {
  for (int p = 2; p <= 7; ++p) {
    for (int l = 3; l <= 5; ++l) {
      const LineFamily f = construct_base(p, l);
      CHECK(longest_cap(f).size == 2);
      CHECK(longest_cup(f).size <= static_cast<std::size_t>(p));
    }
  }
  const LineFamily seven = construct_base(7, 4);
  CHECK(longest_cup(seven).size <= 7);
}

TEST_CASE("cells unbounded to one side") {
  const LineFamily four({Line{0, 0}, Line{1, -1}, Line{2, 10}, Line{3, 5}});
  const auto w = find_k_cell_unbounded(four, 4, Side::right);
  REQUIRE(w.has_value());
  CHECK(w->lines.size() == 4);
  CHECK(has_k_cell_unbounded(four, 4, Side::right, CellScope::arrangement));
  CHECK_FALSE(has_k_cell_unbounded(four, 4, Side::left));

  const LineFamily base = construct_base(5, 3);
  CHECK_FALSE(has_k_cell_unbounded(base, 4, Side::right));
  CHECK_FALSE(has_k_cell_unbounded(reflect_y(base), 4, Side::left));
  CHECK_THROWS_AS(has_k_cell_unbounded(base, 1, Side::right), ParameterError);
  CHECK_FALSE(has_k_cell_unbounded(LineFamily({Line{1, 0}, Line{2, 0}}), 3, Side::right));
}

TEST_CASE("unbounded cells agree with the far-field oracle") {
  std::mt19937_64 rng(77);
  for (int round = 0; round < 40; ++round) {
    const LineFamily f = oracle::random_family(rng, 4 + round % 3, round % 2 == 1);
    for (bool right : {true, false}) {
      const Side side = right ? Side::right : Side::left;
      CHECK(has_k_cell_unbounded(f, 4, side) == oracle::k_cell_unbounded_brute(f, 4, right));
      auto lib = unbounded_cell_signs(f.size(), side);
      auto far = oracle::far_cells(f, right);
      std::sort(lib.begin(), lib.end());
      std::sort(far.begin(), far.end());
      CHECK(lib == far);
    }
  }
}
