#include "linearr/bounds.hpp"

#include <algorithm>

#include "linearr/errors.hpp"

namespace linearr {

BigInt binomial(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

BigInt lower_bound_value(std::int64_t l, std::int64_t n) {
  if (l < 3 || n < 5) throw ParameterError("lower_bound_value needs l >= 3 and n >= 5");
  const std::int64_t k = n % 2 == 0 ? (n - 2) / 2 : (n - 1) / 2;
  const BigInt central = binomial(2 * k - 2, k - 1);
  const BigInt correction = BigInt(l - 3) * binomial(2 * k - 4, k - 2) * central;
  if (n % 2 == 0) return BigInt(l - 1) * central * central - correction;
  return BigInt(l - 1) * (central + 1) * binomial(2 * k - 3, k - 1) - correction;
}

Rat upper_bound_value(std::int64_t l, std::int64_t n, const BoundsParams& params) {
  if (l < 3 || n < 3) throw ParameterError("upper_bound_value needs l, n >= 3");
  if (params.c < Rat(1)) throw ParameterError("constant c must be >= 1");
  return params.c * Rat(BigInt(BigInt(n + l - 1) * binomial(2 * n - 4, n - 2)));
}

Rat f_L_bound(std::int64_t l, std::int64_t p, std::int64_t q, const BoundsParams& params) {
  if (l < 3 || p < 3 || q < 3) throw ParameterError("f_L_bound needs l, p, q >= 3");
  if (params.c < Rat(1)) throw ParameterError("constant c must be >= 1");
  return params.c * Rat(BigInt(BigInt(std::min(p - 1, q - 1) + l) * binomial(p + q - 4, q - 2)));
}

std::optional<std::int64_t> known_exact(std::int64_t l, std::int64_t n) {
  if (l < 3) throw ParameterError("known_exact needs l >= 3");
  switch (n) {
    case 2: return 2;
    case 3: return l;
    case 4: return l + 1;
    default: return std::nullopt;
  }
}

Rat recursive_family_size_bound(std::int64_t p, std::int64_t q, std::int64_t l) {
  if (p < 2 || q < 2 || l < 3) throw ParameterError("size bound needs p, q >= 2 and l >= 3");
  return Rat(BigInt(l - 1) * binomial(p + q - 2, q - 1), BigInt(2)) -
         Rat(BigInt(l - 3) * binomial(p + q - 4, q - 2), BigInt(2));
}

Rat single_copy_size_bound(std::int64_t l, std::int64_t k, Parity parity) {
  if (l < 3 || k < 2) throw ParameterError("size bound needs l >= 3 and k >= 2");
  const BigInt central = binomial(2 * k - 2, k - 1);
  const Rat correction(BigInt(l - 3) * binomial(2 * k - 4, k - 2) * central, BigInt(2));
  if (parity == Parity::even) return Rat(BigInt(l - 1) * central * central, BigInt(2)) - correction;
  return Rat(BigInt(l - 1) * (central + 1) * binomial(2 * k - 3, k - 1), BigInt(2)) - correction;
}

}  // namespace linearr
