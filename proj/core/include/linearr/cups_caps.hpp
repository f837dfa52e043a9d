#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "linearr/arrangement.hpp"
#include "linearr/geometry.hpp"

namespace linearr {

enum class ChainKind { cup, cap };

struct ChainResult {
  std::size_t size = 0;
  std::vector<std::size_t> witness;  // ascending (slope order)
  ChainKind kind = ChainKind::cup;
};

/// Every line of the family bounds the region above all lines. A single
/// line is a 1-cup.
bool is_cup(const LineFamily& family);
/// Mirror of is_cup for the region below all lines.
bool is_cap(const LineFamily& family);

/// Longest cup/cap, computed on the dual points. The region above all lines
/// is cut out by the upper envelope, which dualizes to the upper hull, so a
/// cup of lines is a strictly concave chain of dual points (and a cap a
/// strictly convex one). Collinear duals (concurrent lines) never extend a
/// chain. O(N^3).
ChainResult longest_cup(const LineFamily& family);
ChainResult longest_cap(const LineFamily& family);

enum class Side { left, right };

std::string to_string(Side s);

/// subsets: some k-subset of the family defines a k-cell unbounded to the
/// given side (the meaning of "the family contains a k-cell unbounded to the
/// right"). arrangement: some cell of the family's own arrangement is
/// unbounded to that side with at least k bounding lines. An arrangement
/// cell with >= k bounding lines always yields a k-subset witness, so
/// `subsets` is the stronger check.
enum class CellScope { subsets, arrangement };

struct UnboundedCellWitness {
  std::vector<std::size_t> lines;  // family indices of the defining lines
  SignVector signs;                // over `lines` (subsets) or the family (arrangement)
};

std::optional<UnboundedCellWitness> find_k_cell_unbounded(const LineFamily& family, std::size_t k, Side side,
                                                          CellScope scope = CellScope::subsets);

/// Precondition k >= 2 (throws ParameterError otherwise).
bool has_k_cell_unbounded(const LineFamily& family, std::size_t k, Side side,
                          CellScope scope = CellScope::subsets);

/// Sign vectors of the cells unbounded to `side` in the family's own
/// arrangement: for slope-adjacent lines (j-1, j) the cell between them at
/// +-infinity. There are |F|-1 of them.
std::vector<SignVector> unbounded_cell_signs(std::size_t family_size, Side side);

}  // namespace linearr
