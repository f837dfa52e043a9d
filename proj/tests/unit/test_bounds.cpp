#include <doctest.h>

#include "linearr/bounds.hpp"
#include "linearr/constructions.hpp"
#include "linearr/errors.hpp"

using namespace linearr;

TEST_CASE("binomials") {
  CHECK(binomial(8, 4) == 70);
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(60, 30) == BigInt("118264581564861424"));
}

TEST_CASE("lower bound table") {
  CHECK(lower_bound_value(3, 6) == 8);
  CHECK(lower_bound_value(3, 5) == 6);
  CHECK(lower_bound_value(4, 5) == 7);
  CHECK(lower_bound_value(4, 6) == 10);
  CHECK_THROWS_AS(lower_bound_value(3, 4), ParameterError);
  CHECK_THROWS_AS(lower_bound_value(2, 6), ParameterError);
}

TEST_CASE("upper bound") {
  CHECK(upper_bound_value(3, 3, {}) == Rat(10));
  CHECK(upper_bound_value(3, 5, {}) == Rat(140));
  CHECK(upper_bound_value(3, 6, {}) == Rat(8 * 70));
  CHECK(upper_bound_value(3, 6, {Rat(5, 2)}) == Rat(1400));
  for (int l = 3; l <= 6; ++l) {
    for (int n = 3; n <= 8; ++n) {
      CHECK(upper_bound_value(l, n, {}) < upper_bound_value(l + 1, n, {}));
      CHECK(upper_bound_value(l, n, {}) < upper_bound_value(l, n + 1, {}));
    }
  }
  CHECK_THROWS_AS(upper_bound_value(3, 5, {Rat(1, 2)}), ParameterError);
}

TEST_CASE("recursive bound") {
  CHECK(f_L_bound(3, 3, 3, {}) == Rat(10));
  for (int n = 3; n <= 8; ++n) CHECK(f_L_bound(3, n, n, {}) == upper_bound_value(3, n, {}));
  for (int p = 3; p <= 6; ++p) {
    for (int q = 3; q <= 6; ++q) CHECK(f_L_bound(4, p, q, {}) == f_L_bound(4, q, p, {}));
  }
}

TEST_CASE("known exact values") {
  CHECK(known_exact(5, 3) == 5);
  CHECK(known_exact(5, 4) == 6);
  CHECK(known_exact(7, 2) == 2);
  CHECK_FALSE(known_exact(5, 5).has_value());
}

TEST_CASE("size bounds track the constructions") {
  for (int p = 2; p <= 4; ++p) {
    for (int q = 2; q <= 4; ++q) {
      for (int l = 3; l <= 4; ++l) {
        CHECK(Rat(static_cast<std::int64_t>(construct_F(p, q, l).size())) >= recursive_family_size_bound(p, q, l));
      }
    }
  }
  CHECK(single_copy_size_bound(3, 2, Parity::even) == Rat(4));
  CHECK(single_copy_size_bound(4, 2, Parity::even) == Rat(5));
  CHECK(single_copy_size_bound(3, 2, Parity::odd) == Rat(3));
}
