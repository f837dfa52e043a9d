#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "linearr/arrangement.hpp"
#include "linearr/combinations.hpp"
#include "linearr/cups_caps.hpp"
#include "linearr/geometry.hpp"

namespace linearr {

struct UnboundedCheck {
  Side side = Side::right;
  bool found = false;
  std::optional<UnboundedCellWitness> witness;
};

/// Outcome of checking a family against the forbidden patterns of the
/// recursive construction: l concurrent lines, a (p+1)-cup, a (q+1)-cap and
/// a 4-cell unbounded to each requested side.
struct VerifyReport {
  std::size_t family_size = 0;
  std::int64_t l = 3;
  std::int64_t p = 2;
  std::int64_t q = 2;
  ConcurrencyReport concurrency;
  ChainResult longest_cup;
  ChainResult longest_cap;
  std::vector<UnboundedCheck> unbounded;
  std::optional<std::vector<std::size_t>> largest_convex_subset;

  bool concurrency_ok = false;
  bool cup_ok = false;
  bool cap_ok = false;
  bool unbounded_ok = false;
  bool pass = false;
};

/// Requires l >= 3 and p, q >= 2 (throws ParameterError).
VerifyReport verify_properties(const LineFamily& family, std::int64_t l, std::int64_t p, std::int64_t q,
                               std::span<const Side> check_unbounded);

/// Re-checks every witness in the report against its defining predicate.
bool witnesses_valid(const LineFamily& family, const VerifyReport& report);

enum class PruneMode {
  off,         // every n-subset is tested
  hereditary,  // subsets extending a non-convex subset are skipped
};

struct ConvexSearchOptions {
  PruneMode prune = PruneMode::off;
  unsigned threads = 1;
};

/// First n-subset (lexicographic over slope-ordered indices) in convex
/// position, if any. Requires 2 <= n <= |F| (throws ParameterError).
std::optional<std::vector<std::size_t>> find_n_convex(const LineFamily& family, std::size_t n,
                                                      const ConvexSearchOptions& options = {});
bool exists_n_convex(const LineFamily& family, std::size_t n, const ConvexSearchOptions& options = {});

/// A largest subset in convex position (size >= 2 when |F| >= 2). Without
/// pruning this tests every size from |F| downward.
std::vector<std::size_t> largest_convex_subset(const LineFamily& family, const ConvexSearchOptions& options = {});

std::string format_report(const LineFamily& family, const VerifyReport& report);

}  // namespace linearr
