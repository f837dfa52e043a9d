#include "linearr/geometry.hpp"

#include <algorithm>

#include "linearr/errors.hpp"

namespace linearr {

std::string to_string(const Point& p) { return "(" + p.x.to_string() + ", " + p.y.to_string() + ")"; }

std::string to_string(const Line& l) { return "y = " + l.m.to_string() + "*x + " + l.c.to_string(); }

LineFamily::LineFamily(std::vector<Line> lines, std::optional<std::string> name)
    : lines_(std::move(lines)), name_(std::move(name)) {
  std::sort(lines_.begin(), lines_.end());
  for (std::size_t i = 1; i < lines_.size(); ++i) {
    if (lines_[i].m == lines_[i - 1].m) throw DuplicateSlopeError(lines_[i].m.to_string());
  }
}

LineFamily LineFamily::subset(std::span<const std::size_t> indices) const {
  std::vector<Line> out;
  out.reserve(indices.size());
  for (std::size_t i : indices) out.push_back(lines_.at(i));
  return LineFamily(std::move(out));
}

Point intersect(const Line& a, const Line& b) {
  if (a.m == b.m) throw ParallelLinesError();
  Rat x = (b.c - a.c) / (a.m - b.m);
  Rat y = a.eval(x);
  return {std::move(x), std::move(y)};
}

Point dual_line(const Line& l) { return {l.m, l.c}; }

Line dual_point(const Point& p) { return {p.x, p.y}; }

int orientation(const Point& p, const Point& q, const Point& r) {
  const Rat cross = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
  return cross.sign();
}

int side_of(const Line& l, const Point& p) { return (p.y - l.eval(p.x)).sign(); }

Line reflect_y(const Line& l) { return {-l.m, l.c}; }

Line reflect_x(const Line& l) { return {-l.m, -l.c}; }

}  // namespace linearr
