#include <doctest.h>

#include <random>

#include "linearr/arrangement.hpp"
#include "linearr/combinations.hpp"
#include "linearr/constructions.hpp"
#include "linearr/cups_caps.hpp"
#include "linearr/family_io.hpp"
#include "linearr/verify.hpp"
#include "oracles.hpp"

using namespace linearr;

TEST_CASE("cell count follows the vertex multiplicities") {
  // Each vertex where k lines meet adds k - 1 cells beyond the first 1 + n.
  std::mt19937_64 rng(1);
  for (int round = 0; round < 60; ++round) {
    const LineFamily f = oracle::random_family(rng, 1 + round % 7, round % 2 == 0);
    std::size_t expected = 1 + f.size();
    for (const auto& [mult, count] : concurrency_profile(f)) expected += count * (mult - 1);
    CHECK(enumerate_cells(f).size() == expected);
    CHECK(cell_sign_vectors(f).size() == expected);
  }
}

TEST_CASE("convex position is hereditary") {
  std::mt19937_64 rng(2);
  for (int round = 0; round < 40; ++round) {
    const LineFamily f = oracle::random_family(rng, 3 + round % 4, round % 3 == 0);
    if (!is_convex_position(f)) continue;
    for (std::size_t drop = 0; drop < f.size(); ++drop) {
      std::vector<std::size_t> keep;
      for (std::size_t i = 0; i < f.size(); ++i) {
        if (i != drop) keep.push_back(i);
      }
      CHECK(is_convex_position(f.subset(keep)));
    }
  }
}

TEST_CASE("cups and caps are convex position") {
  std::mt19937_64 rng(3);
  for (int round = 0; round < 40; ++round) {
    const LineFamily f = oracle::random_family(rng, 2 + round % 5, round % 2 == 0);
    const auto cup = longest_cup(f);
    if (cup.size >= 2) CHECK(is_convex_position(f.subset(cup.witness)));
  }
}

TEST_CASE("affine images preserve the invariants") {
  // (x, y) -> (2x + 1, 3y - x + 5) keeps up/down and left/right.
  auto image = [](const LineFamily& f) {
    std::vector<Line> out;
    for (const Line& l : f) {
      const Rat m = (Rat(3) * l.m - Rat(1)) / Rat(2);
      out.push_back(Line{m, Rat(3) * l.c + Rat(5) - m});
    }
    return LineFamily(out);
  };
  std::mt19937_64 rng(4);
  for (int round = 0; round < 30; ++round) {
    const LineFamily f = oracle::random_family(rng, 2 + round % 5, round % 2 == 1);
    const LineFamily g = image(f);
    CHECK(concurrency_profile(g) == concurrency_profile(f));
    CHECK(longest_cup(g).size == longest_cup(f).size);
    CHECK(longest_cap(g).size == longest_cap(f).size);
    CHECK(has_k_cell_unbounded(g, 4, Side::right) == has_k_cell_unbounded(f, 4, Side::right));
    CHECK(has_k_cell_unbounded(g, 4, Side::left) == has_k_cell_unbounded(f, 4, Side::left));
    CHECK(cell_sign_vectors(g) == cell_sign_vectors(f));
  }
}

TEST_CASE("cap is a cup of the mirror image") {
  std::mt19937_64 rng(5);
  for (int round = 0; round < 100; ++round) {
    const LineFamily f = oracle::random_family(rng, 1 + round % 6, round % 2 == 0);
    CHECK(is_cap(f) == is_cup(reflect_x(f)));
  }
}

TEST_CASE("concurrency matches dual collinearity") {
  std::mt19937_64 rng(6);
  for (int round = 0; round < 50; ++round) {
    const LineFamily f = oracle::random_family(rng, 3 + round % 5, true);
    std::vector<std::size_t> idx{0, 1, 2};
    do {
      const Point x = intersect(f[idx[0]], f[idx[1]]);
      const bool concurrent = side_of(f[idx[2]], x) == 0;
      const bool collinear =
          orientation(dual_line(f[idx[0]]), dual_line(f[idx[1]]), dual_line(f[idx[2]])) == 0;
      CHECK(concurrent == collinear);
    } while (next_combination(idx, f.size()));
  }
}

TEST_CASE("serialization round trips random families") {
  std::mt19937_64 rng(7);
  for (int round = 0; round < 50; ++round) {
    const LineFamily f = oracle::random_family(rng, 1 + round % 8, round % 2 == 0);
    CHECK(parse_family(serialize_family(f)) == f);
  }
}

TEST_CASE("unbounded right cells are the slope splits") {
  std::mt19937_64 rng(8);
  for (int round = 0; round < 30; ++round) {
    const LineFamily f = oracle::random_family(rng, 2 + round % 5, round % 2 == 0);
    std::size_t right = 0;
    std::size_t left = 0;
    for (const Cell& c : enumerate_cells(f)) {
      right += c.bound_class == BoundClass::unbounded_right ? 1 : 0;
      left += c.bound_class == BoundClass::unbounded_left ? 1 : 0;
    }
    CHECK(right == f.size() - 1);
    CHECK(left == f.size() - 1);
    for (const SignVector& s : unbounded_cell_signs(f.size(), Side::right)) {
      CHECK(classify_cell(f, s) == BoundClass::unbounded_right);
    }
  }
}
