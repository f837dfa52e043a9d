#include <doctest.h>

#include <random>
#include <sstream>

#include "linearr/errors.hpp"
#include "linearr/geometry.hpp"
#include "oracles.hpp"

using namespace linearr;

TEST_CASE("rationals stay canonical") {
  const Rat a(6, -4);
  CHECK(a.num() == -3);
  CHECK(a.den() == 2);
  CHECK(a.to_string() == "-3/2");
  CHECK(Rat(4, 2).is_integer());
  CHECK(Rat(1, 3) + Rat(1, 6) == Rat(1, 2));
  CHECK(Rat(2, 3) * Rat(3, 4) == Rat(1, 2));
  CHECK(Rat(1) / Rat(3) < Rat(1, 2));
  CHECK(Rat(-5, 3).abs() == Rat(5, 3));
  CHECK(Rat(-5, 3).sign() == -1);
  CHECK(Rat(0).sign() == 0);
}

TEST_CASE("rational parsing") {
  CHECK(Rat::parse("-3/4") == Rat(-3, 4));
  CHECK(Rat::parse("+7") == Rat(7));
  CHECK(Rat::parse("10/4") == Rat(5, 2));
  CHECK(Rat::parse("123456789012345678901234567890/3").to_string() == "41152263004115226300411522630");
  CHECK_THROWS_AS(Rat::parse("1/0"), std::domain_error);
  CHECK_THROWS_AS(Rat::parse("abc"), std::invalid_argument);
  CHECK_THROWS_AS(Rat::parse("1/"), std::invalid_argument);
  CHECK_THROWS_AS(Rat::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Rat(1) / Rat(0), std::domain_error);
}

TEST_CASE("decimal rendering") {
  CHECK(Rat(1, 4).to_decimal() == "0.25");
  CHECK(Rat(-1, 3).to_decimal(5) == "-0.33333");
  std::ostringstream os;
  os << Rat(7, 9);
  CHECK(os.str() == "7/9");
}

TEST_CASE("intersect") {
  CHECK(intersect(Line{1, 0}, Line{-1, 0}) == Point{0, 0});
  // 2x + 3 = x + 1 gives x = -2, and both lines give y = -1 there.
  const Point p = intersect(Line{2, 3}, Line{1, 1});
  CHECK(p == Point{-2, -1});
  CHECK(Line{2, 3}.eval(p.x) == p.y);
  CHECK(Line{1, 1}.eval(p.x) == p.y);
  CHECK_THROWS_AS(intersect(Line{1, 0}, Line{1, 1}), ParallelLinesError);
}

TEST_CASE("duality") {
  CHECK(dual_line(Line{2, 3}) == Point{2, 3});
  CHECK(dual_line(Line{0, 0}) == Point{0, 0});
  CHECK(dual_line(Line{-1, 5}) == Point{-1, 5});
  CHECK(dual_point(Point{2, 3}) == Line{2, 3});
  CHECK(dual_point(Point{0, 0}) == Line{0, 0});
  std::mt19937_64 rng(7);
  for (int i = 0; i < 100; ++i) {
    const Point p{oracle::random_rat(rng, 50, 9), oracle::random_rat(rng, 50, 9)};
    CHECK(dual_line(dual_point(p)) == p);
  }
}

TEST_CASE("orientation and side") {
  CHECK(orientation({0, 0}, {1, 0}, {2, 0}) == 0);
  CHECK(orientation({0, 0}, {1, 0}, {1, 1}) == 1);
  CHECK(orientation({0, 0}, {1, 0}, {1, -1}) == -1);
  CHECK(side_of(Line{0, 0}, {0, 1}) == 1);
  CHECK(side_of(Line{1, 0}, {1, 1}) == 0);
  CHECK(side_of(Line{2, 3}, {0, 0}) == -1);
  // side_of agrees with orientation of two points of the line taken left to right.
  std::mt19937_64 rng(11);
  for (int i = 0; i < 100; ++i) {
    const Line l{oracle::random_rat(rng, 9, 4), oracle::random_rat(rng, 9, 4)};
    const Point p{oracle::random_rat(rng, 9, 4), oracle::random_rat(rng, 9, 4)};
    CHECK(side_of(l, p) == orientation({0, l.eval(0)}, {1, l.eval(1)}, p));
  }
}

TEST_CASE("reflections") {
  CHECK(reflect_y(Line{2, 3}) == Line{-2, 3});
  CHECK(reflect_x(Line{2, 3}) == Line{-2, -3});
}

TEST_CASE("line family keeps slope order") {
  const LineFamily f({Line{3, 0}, Line{-1, 2}, Line{1, 1}}, "t");
  REQUIRE(f.size() == 3);
  CHECK(f[0].m == -1);
  CHECK(f[2].m == 3);
  CHECK(f.name() == "t");
  const std::vector<std::size_t> idx{0, 2};
  CHECK(f.subset(idx).size() == 2);
  CHECK_THROWS_AS(LineFamily({Line{1, 0}, Line{1, 5}}), DuplicateSlopeError);
  CHECK(LineFamily({Line{1, 0}}, "a") == LineFamily({Line{1, 0}}, "b"));
}
