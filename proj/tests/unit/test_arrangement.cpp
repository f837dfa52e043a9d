#include <doctest.h>

#include <algorithm>
#include <random>

#include "linearr/arrangement.hpp"
#include "linearr/constructions.hpp"
#include "linearr/errors.hpp"
#include "oracles.hpp"

using namespace linearr;

namespace {

LineFamily triangle() { return LineFamily({Line{1, 0}, Line{-1, 0}, Line{0, 1}}); }

// Index order after sorting is y=-x, y=1, y=x.
SignVector triangle_inside() { return parse_sign_vector("+-+"); }

}  // namespace

TEST_CASE("cell counts") {
  CHECK(enumerate_cells(LineFamily({Line{0, 0}})).size() == 2);
  CHECK(enumerate_cells(LineFamily({Line{1, 0}, Line{-1, 0}})).size() == 4);
  const auto cells = enumerate_cells(triangle());
  CHECK(cells.size() == 7);
  std::vector<SignVector> oracle_signs;
  for (const auto& f : oracle::all_faces(triangle())) oracle_signs.push_back(f.signs);
  std::vector<SignVector> lib_signs;
  for (const auto& c : cells) lib_signs.push_back(c.signs);
  std::sort(oracle_signs.begin(), oracle_signs.end());
  CHECK(lib_signs == oracle_signs);
  CHECK(cell_sign_vectors(triangle()) == lib_signs);
}

TEST_CASE("bounding lines") {
  CHECK(bounding_lines(triangle(), triangle_inside()) == std::vector<std::size_t>{0, 1, 2});
  const LineFamily wedge({Line{1, 0}, Line{-1, 0}});
  CHECK(bounding_lines(wedge, parse_sign_vector("++")).size() == 2);
  const LineFamily pencil3 = pencil(Point{0, 0}, 3);
  for (const Cell& c : enumerate_cells(pencil3)) CHECK(c.bounding.size() == 2);
  CHECK_THROWS_AS(bounding_lines(pencil3, parse_sign_vector("+-+")), InfeasibleSignVectorError);
  CHECK_THROWS_AS(bounding_lines(pencil3, parse_sign_vector("++")), InfeasibleSignVectorError);
}

TEST_CASE("cell classes") {
  CHECK(classify_cell(triangle(), triangle_inside()) == BoundClass::bounded);
  const LineFamily wedge({Line{1, 0}, Line{-1, 0}});
  CHECK(classify_cell(wedge, parse_sign_vector("++")) == BoundClass::unbounded_other);
  CHECK(classify_cell(wedge, parse_sign_vector("+-")) == BoundClass::unbounded_right);
  CHECK(classify_cell(wedge, parse_sign_vector("-+")) == BoundClass::unbounded_left);

  // Two lines below and two above, the cell opening toward +x.
  const LineFamily four({Line{0, 0}, Line{1, -1}, Line{2, 10}, Line{3, 5}});
  const SignVector s = parse_sign_vector("++--");
  CHECK(bounding_lines(four, s).size() == 4);
  CHECK(classify_cell(four, s) == BoundClass::unbounded_right);
}

TEST_CASE("cell witnesses lie inside their cells") {
  std::mt19937_64 rng(5);
  for (int round = 0; round < 20; ++round) {
    const LineFamily f = oracle::random_family(rng, 5, round % 2 == 0);
    for (const Cell& c : enumerate_cells(f)) {
      for (std::size_t i = 0; i < f.size(); ++i) CHECK(side_of(f[i], c.witness) == c.signs[i]);
      const Point w = cell_witness(f, c.signs);
      for (std::size_t i = 0; i < f.size(); ++i) CHECK(side_of(f[i], w) == c.signs[i]);
    }
  }
}

TEST_CASE("concurrency") {
  CHECK(max_concurrency(pencil(Point{0, -1}, 5)).max_count == 5);
  CHECK(max_concurrency(triangle()).max_count == 2);
  CHECK(max_concurrency(figure10_family(4)).max_count == 3);
  CHECK(max_concurrency(LineFamily()).max_count == 0);
  CHECK(max_concurrency(LineFamily({Line{1, 0}})).max_count == 1);
  const auto profile = concurrency_profile(figure10_family(4));
  CHECK(profile.at(3) == 2);
}

TEST_CASE("convex position") {
  CHECK(is_convex_position(triangle()));
  CHECK_FALSE(is_convex_position(pencil(Point{0, 0}, 3)));
  CHECK(is_convex_position(LineFamily({Line{5, 1}, Line{-2, 7}})));
  CHECK_FALSE(is_convex_position(LineFamily({Line{5, 1}})));
  const auto w = convex_position_witness(triangle());
  REQUIRE(w.has_value());
  // The three cells across the triangle's edges also touch all three lines.
  CHECK(w->bounding.size() == 3);
  std::size_t three_cells = 0;
  for (const Cell& c : enumerate_cells(triangle())) three_cells += c.bounding.size() == 3 ? 1 : 0;
  CHECK(three_cells == 4);
}

TEST_CASE("arrangement matches the polygon oracle on random families") {
  std::mt19937_64 rng(99);
  for (int round = 0; round < 40; ++round) {
    const std::size_t n = 1 + round % 6;
    const LineFamily f = oracle::random_family(rng, n, round % 3 == 0);
    const auto faces = oracle::all_faces(f);
    const auto cells = enumerate_cells(f);
    REQUIRE(cells.size() == faces.size());
    for (std::size_t i = 0; i < cells.size(); ++i) {
      const auto match = std::find_if(faces.begin(), faces.end(), [&](const auto& fc) { return fc.signs == cells[i].signs; });
      REQUIRE(match != faces.end());
      CHECK(std::vector<std::size_t>(match->lines.begin(), match->lines.end()) == cells[i].bounding);
      CHECK(is_feasible(f, cells[i].signs));
    }
    CHECK(is_convex_position(f) == oracle::convex_brute(f));
  }
}
