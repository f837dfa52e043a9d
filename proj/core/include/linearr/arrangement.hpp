#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "linearr/geometry.hpp"

namespace linearr {

/// Per-line strict side (+1 above, -1 below), indexed parallel to a
/// LineFamily. A sign vector names the open region where every line is on
/// its prescribed side; only non-empty regions are cells.
using SignVector = std::vector<std::int8_t>;

std::string to_string(const SignVector& s);
/// Inverse of to_string: a string over {'+', '-'}. Throws std::invalid_argument.
SignVector parse_sign_vector(const std::string& text);

enum class BoundClass { bounded, unbounded_left, unbounded_right, unbounded_other };

std::string to_string(BoundClass c);

/// Open interval of the parameter x along a line; nullopt ends are infinite.
struct Interval {
  std::optional<Rat> lo;
  std::optional<Rat> hi;

  bool nonempty() const { return !lo || !hi || *lo < *hi; }
  bool bounded() const { return lo.has_value() && hi.has_value(); }
};

/// The x-interval of points on line `i` that satisfy every other strict
/// inequality of `signs`. Line i bounds the cell iff the interval is
/// non-empty (rays and full lines count as positive length).
Interval boundary_interval(const LineFamily& family, const SignVector& signs, std::size_t i);

struct Cell {
  SignVector signs;
  std::vector<std::size_t> bounding;
  BoundClass bound_class = BoundClass::bounded;
  Point witness;
};

/// Every cell of the arrangement exactly once, sorted by sign vector.
/// Precondition: family non-empty.
std::vector<Cell> enumerate_cells(const LineFamily& family);

/// Sign vectors of all cells without witnesses or boundary data; cheaper,
/// used by the subset searches. Sorted.
std::vector<SignVector> cell_sign_vectors(const LineFamily& family);

bool is_feasible(const LineFamily& family, const SignVector& signs);

/// Throws InfeasibleSignVectorError if `signs` names no cell (or has the
/// wrong length).
std::vector<std::size_t> bounding_lines(const LineFamily& family, const SignVector& signs);

/// An unbounded cell has exactly two unbounded boundary pieces (rays). It is
/// unbounded to the right (left) when both rays run toward +x (-x); other
/// unbounded cells (cup- and cap-shaped ones) are unbounded_other.
/// Throws InfeasibleSignVectorError.
BoundClass classify_cell(const LineFamily& family, const SignVector& signs);

/// A point strictly inside the cell. Throws InfeasibleSignVectorError.
Point cell_witness(const LineFamily& family, const SignVector& signs);

struct ConcurrencyReport {
  std::size_t max_count = 0;
  std::optional<Point> point;
  std::vector<Point> all_points_at_max;
};

/// Largest number of lines through a common point. Families of size 0 or 1
/// report 0 or 1 with no point.
ConcurrencyReport max_concurrency(const LineFamily& family);

/// Multiplicity -> number of vertices with that many incident lines.
std::map<std::size_t, std::size_t> concurrency_profile(const LineFamily& family);

/// Some cell is bounded by all lines of the family (an |S|-cell). Families
/// of size < 2 are never in convex position.
bool is_convex_position(const LineFamily& family);
std::optional<Cell> convex_position_witness(const LineFamily& family);

}  // namespace linearr
