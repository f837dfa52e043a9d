#include <doctest.h>

#include <algorithm>
#include <regex>

#include "linearr/constructions.hpp"
#include "linearr/errors.hpp"
#include "linearr/svg.hpp"

using namespace linearr;

namespace {

std::size_t count(const std::string& hay, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = hay.find(needle); pos != std::string::npos; pos = hay.find(needle, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("triangle with its inner cell") {
  const LineFamily tri({Line{1, 0}, Line{-1, 0}, Line{0, 1}});
  RenderOptions opts;
  // Viewport [-2,2]x[-1,3] at 100px: scale 25, so (x, y) -> (25x + 50, 75 - 25y).
  opts.viewport = Viewport{-2, 2, -1, 3};
  opts.width_px = 100;
  opts.highlight_cell = parse_sign_vector("+-+");
  const std::string svg = render_svg(tri, opts);
  CHECK(count(svg, "<path") == 3);
  CHECK(count(svg, "<polygon") == 1);
  const std::smatch m = [&] {
    std::smatch r;
    std::regex_search(svg, r, std::regex("points=\"([^\"]*)\""));
    return r;
  }();
  REQUIRE(m.size() == 2);
  // Triangle (0,0), (1,1), (-1,1).
  const std::string pts = m[1];
  for (const char* v : {"50,75", "75,50", "25,50"}) CHECK(pts.find(v) != std::string::npos);
  CHECK(count(pts, ",") == 3);
}

TEST_CASE("single line and determinism") {
  const LineFamily one({Line{1, 0}});
  const std::string svg = render_svg(one);
  CHECK(count(svg, "<path") == 1);
  CHECK(count(svg, "<polygon") == 0);
  CHECK(render_svg(one) == svg);
}

TEST_CASE("pencils in the auto viewport") {
  const LineFamily f = figure10_family(4);
  const std::string svg = render_svg(f);
  CHECK(count(svg, "<path") == 8);
  // Both pencil apexes lie inside the auto viewport.
  const Viewport v = auto_viewport(f);
  for (const Point& apex : {Point{-1, 0}, Point{1, 0}}) {
    CHECK(v.xmin < apex.x);
    CHECK(apex.x < v.xmax);
    CHECK(v.ymin < apex.y);
    CHECK(apex.y < v.ymax);
  }
}

TEST_CASE("auto viewport margin") {
  const LineFamily tri({Line{1, 0}, Line{-1, 0}, Line{0, 1}});
  const Viewport v = auto_viewport(tri);
  CHECK(v.xmin == Rat(-6, 5));
  CHECK(v.xmax == Rat(6, 5));
  CHECK(v.ymin == Rat(-1, 10));
  CHECK(v.ymax == Rat(11, 10));
}

TEST_CASE("render errors") {
  const LineFamily one({Line{0, 100}});
  RenderOptions opts;
  opts.viewport = Viewport{0, 1, 0, 1};
  CHECK_THROWS_AS(render_svg(one, opts), EmptyViewportError);
  CHECK_THROWS_AS(render_svg(LineFamily()), ParameterError);
  CHECK_THROWS_AS(parse_viewport("0,1,2"), ParameterError);
  CHECK(parse_viewport("0,1/2,-1,1").xmax == Rat(1, 2));
}
