#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "linearr/rational.hpp"

namespace linearr {

struct Point {
  Rat x;
  Rat y;

  friend bool operator==(const Point&, const Point&) = default;
  friend std::strong_ordering operator<=>(const Point&, const Point&) = default;
};

/// The non-vertical line y = m*x + c. Vertical lines have no representation.
struct Line {
  Rat m;
  Rat c;

  Rat eval(const Rat& x) const { return m * x + c; }

  friend bool operator==(const Line&, const Line&) = default;
  friend std::strong_ordering operator<=>(const Line&, const Line&) = default;
};

std::string to_string(const Point& p);
std::string to_string(const Line& l);

/// Lines in nearly general position: pairwise distinct slopes, kept sorted by
/// strictly increasing slope. Indices used throughout the library refer to
/// this canonical order.
class LineFamily {
 public:
  LineFamily() = default;
  /// Sorts by slope. Throws DuplicateSlopeError if two slopes coincide.
  explicit LineFamily(std::vector<Line> lines, std::optional<std::string> name = std::nullopt);

  const std::vector<Line>& lines() const { return lines_; }
  std::size_t size() const { return lines_.size(); }
  bool empty() const { return lines_.empty(); }
  const Line& operator[](std::size_t i) const { return lines_[i]; }
  auto begin() const { return lines_.begin(); }
  auto end() const { return lines_.end(); }

  const std::optional<std::string>& name() const { return name_; }
  void set_name(std::optional<std::string> name) { name_ = std::move(name); }

  /// Sub-family of the given (strictly increasing) indices.
  LineFamily subset(std::span<const std::size_t> indices) const;

  /// Equality compares the lines only; the label is metadata.
  friend bool operator==(const LineFamily& a, const LineFamily& b) { return a.lines_ == b.lines_; }

 private:
  std::vector<Line> lines_;
  std::optional<std::string> name_;
};

/// Throws ParallelLinesError when the slopes are equal.
Point intersect(const Line& a, const Line& b);

/// The dual transform y = m*x + c  ->  (m, c).
Point dual_line(const Line& l);
/// Inverse of dual_line: (m, c)  ->  y = m*x + c.
Line dual_point(const Point& p);

/// Sign of the cross product (q - p) x (r - p): +1 left turn, -1 right turn,
/// 0 collinear.
int orientation(const Point& p, const Point& q, const Point& r);

/// +1 if p lies strictly above l, -1 strictly below, 0 on l. Equals
/// orientation(a, b, p) for any two points a, b of l with a.x < b.x.
int side_of(const Line& l, const Point& p);

/// Reflection over the y-axis: y = m*x + c  ->  y = -m*x + c.
Line reflect_y(const Line& l);
/// Reflection over the x-axis: y = m*x + c  ->  y = -m*x - c.
Line reflect_x(const Line& l);

}  // namespace linearr
