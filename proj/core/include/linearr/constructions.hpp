#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "linearr/bounds.hpp"
#include "linearr/geometry.hpp"

namespace linearr {

/// Knobs shared by the generators. Every "sufficiently small epsilon" step is
/// a verified retry: start at `epsilon`, halve until the checks pass, give
/// up (ConstructionError) after `max_attempts` halvings.
struct ConstructOptions {
  Rat epsilon{Rat(1) / Rat(4)};
  int max_attempts = 40;
  /// Run the full property verifier on recursive families, and the
  /// exhaustive convex-position search on assemblies whose subset count is
  /// within `subset_budget`.
  bool verify = true;
  std::uint64_t subset_budget = 2'000'000;
};

/// Lines through `apex` with the given slopes. Throws DuplicateSlopeError.
LineFamily pencil(const Point& apex, std::span<const Rat> slopes);
/// `count` lines through `apex` with slopes 1, 2, ..., count.
LineFamily pencil(const Point& apex, std::size_t count);

LineFamily reflect_y(const LineFamily& family);
LineFamily reflect_x(const LineFamily& family);

/// Affine image of `family` with every slope within `epsilon` of the
/// anchor's slope, every pairwise intersection below the x-axis, and all
/// intersections inside a box of diagonal <= epsilon (hence pairwise
/// distance <= epsilon). The map (x, y) -> (s x + u, s r y + k x + v) with
/// s, r > 0 keeps up, down, left and right, so cups, caps, cells unbounded
/// to either side and concurrency are preserved; this is re-checked and the
/// scale is halved until everything holds. The cluster sits around the
/// point of the anchor at height `target_y` (< 0).
LineFamily contract(const LineFamily& family, const Line& anchor, const Rat& epsilon, const Rat& target_y = Rat(-1));

/// Replace every scaffold line a_i by a contracted copy of clusters[i]
/// placed on a_i, shrinking epsilon until (a) slopes stay distinct, (b)
/// every vertex of the union sees every line of a foreign cluster on the
/// same side as the matching scaffold point sees that cluster's scaffold
/// line, and (c) `accept` holds for the union.
LineFamily assemble(std::span<const Line> scaffold, std::span<const LineFamily> clusters,
                    const std::function<bool(const LineFamily&)>& accept, const ConstructOptions& options = {});

/// F_{p,2}^l: (l-1)-pencils on a floor(p/2)-cup, plus one steeper line when
/// p is odd. No l concurrent lines, no (p+1)-cup, no 3-cap, no 4-cell
/// unbounded to the right. Throws ParameterError unless p >= 2, l >= 3.
LineFamily construct_base(std::int64_t p, std::int64_t l, const ConstructOptions& options = {});
/// F_{2,q}^l: the x-axis mirror of F_{q,2}^l (cups and caps swap).
LineFamily construct_base_caps(std::int64_t q, std::int64_t l, const ConstructOptions& options = {});

/// F_{p,q}^l, built by merging contracted F_{p-1,q}^l and F_{p,q-1}^l onto
/// two positive-slope lines meeting above the x-axis. p = 1 or q = 1 gives a
/// single line (two lines always form both a 2-cup and a 2-cap). Throws
/// ParameterError unless p, q >= 1 and l >= 3.
LineFamily construct_F(std::int64_t p, std::int64_t q, std::int64_t l, const ConstructOptions& options = {});

/// Single-copy assembly with no l concurrent lines and no n lines in convex
/// position, n = 2k+2 (even) or 2k+1 (odd). Throws ParameterError unless
/// l >= 3, k >= 2.
LineFamily construct_prop32(std::int64_t l, std::int64_t k, Parity parity, const ConstructOptions& options = {});

/// Double-copy assembly for n = 2k+1 or 2k+2 (k >= 2): no l concurrent lines,
/// no n lines in convex position, at least lower_bound_value(l, n) lines.
/// Throws ParameterError unless l >= 3, n >= 5.
LineFamily construct_thm12(std::int64_t l, std::int64_t n, const ConstructOptions& options = {});

/// Two (l-1)-pencils and two steep lines: 2l lines, maximum concurrency l-1,
/// no 5 lines in convex position. Throws ParameterError unless l >= 3.
LineFamily figure10_family(std::int64_t l);

enum class ConstructionKind {
  pencil,
  base_pq2,
  base_2q,
  recursive_pq,
  prop32_even,
  prop32_odd,
  thm12,
  thm12_even,
  thm12_odd,
  figure10,
};

std::string to_string(ConstructionKind kind);
/// Throws ParameterError on an unknown name.
ConstructionKind parse_construction_kind(const std::string& name);

struct ConstructionSpec {
  ConstructionKind kind = ConstructionKind::pencil;
  std::int64_t p = 2;
  std::int64_t q = 2;
  std::int64_t l = 3;
  std::int64_t k = 2;
  std::int64_t n = 0;  // pencil: line count; thm12*: target n

  /// Parameters that matter for `kind`, as key=value pairs.
  std::vector<std::pair<std::string, std::string>> to_pairs() const;
};

LineFamily generate(const ConstructionSpec& spec, const ConstructOptions& options = {});

}  // namespace linearr
