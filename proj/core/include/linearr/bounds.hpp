#pragma once

#include <cstdint>
#include <optional>

#include "linearr/rational.hpp"

namespace linearr {

/// Binomial coefficient; zero outside 0 <= k <= n.
BigInt binomial(std::int64_t n, std::int64_t k);

/// The absolute constant c of the upper bounds. Its true value is tied to an
/// unquantified incidence-geometry constant, so it is a user parameter.
struct BoundsParams {
  Rat c{1};
};

/// Lower bound X with ES_l(l, n) > X, for n = 2k+1 or 2k+2 with k >= 2.
/// Throws ParameterError unless l >= 3 and n >= 5.
BigInt lower_bound_value(std::int64_t l, std::int64_t n);

/// c (n + l - 1) C(2n - 4, n - 2). Throws ParameterError unless l, n >= 3
/// and c >= 1.
Rat upper_bound_value(std::int64_t l, std::int64_t n, const BoundsParams& params = {});

/// c (min(p-1, q-1) + l) C(p + q - 4, q - 2), the bound on the number of
/// lines forcing l concurrent lines, a p-cup or a q-cap. Throws
/// ParameterError unless l, p, q >= 3 and c >= 1.
Rat f_L_bound(std::int64_t l, std::int64_t p, std::int64_t q, const BoundsParams& params = {});

/// Exact values for n <= 4: 2, l, l + 1 for n = 2, 3, 4. Empty otherwise.
std::optional<std::int64_t> known_exact(std::int64_t l, std::int64_t n);

/// (l-1)/2 C(p+q-2, q-1) - (l-3)/2 C(p+q-4, q-2): guaranteed size of the
/// recursive family avoiding l concurrent lines, (p+1)-cups, (q+1)-caps.
Rat recursive_family_size_bound(std::int64_t p, std::int64_t q, std::int64_t l);

enum class Parity { even, odd };

/// Size guaranteed for the single-copy assembly avoiding n = 2k+2 (even) or
/// n = 2k+1 (odd) lines in convex position.
Rat single_copy_size_bound(std::int64_t l, std::int64_t k, Parity parity);

}  // namespace linearr
