#include "linearr/cups_caps.hpp"

#include <algorithm>
#include <limits>

#include "linearr/combinations.hpp"
#include "linearr/errors.hpp"

namespace linearr {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

// Is every member of `idx` on the boundary of the region named by `signs`
// (indexed parallel to idx) in the arrangement of just those lines?
bool all_bound(const LineFamily& family, const std::vector<std::size_t>& idx, const SignVector& signs) {
  for (std::size_t a = 0; a < idx.size(); ++a) {
    const Line& la = family[idx[a]];
    std::optional<Rat> lo;
    std::optional<Rat> hi;
    for (std::size_t b = 0; b < idx.size(); ++b) {
      if (b == a) continue;
      const Line& lb = family[idx[b]];
      Rat da = la.m - lb.m;
      Rat db = la.c - lb.c;
      if (signs[b] < 0) {
        da = -da;
        db = -db;
      }
      Rat root = -db / da;
      if (da.sign() > 0) {
        if (!lo || *lo < root) lo = std::move(root);
      } else {
        if (!hi || root < *hi) hi = std::move(root);
      }
      if (lo && hi && !(*lo < *hi)) return false;
    }
  }
  return true;
}

bool all_bound_uniform(const LineFamily& family, int sign) {
  const SignVector signs(family.size(), static_cast<std::int8_t>(sign));
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (!boundary_interval(family, signs, i).nonempty()) return false;
  }
  return true;
}

ChainResult longest_chain(const LineFamily& family, ChainKind kind) {
  const std::size_t n = family.size();
  ChainResult r;
  r.kind = kind;
  if (n == 0) return r;
  if (n == 1) {
    r.size = 1;
    r.witness = {0};
    return r;
  }
  // Cup of lines = strictly concave dual chain = right turns.
  const int wanted = kind == ChainKind::cup ? -1 : 1;
  std::vector<Point> dual;
  dual.reserve(n);
  for (const Line& l : family) dual.push_back(dual_line(l));

  std::vector<std::vector<std::size_t>> len(n, std::vector<std::size_t>(n, 2));
  std::vector<std::vector<std::size_t>> prev(n, std::vector<std::size_t>(n, kNone));
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      for (std::size_t k = j + 1; k < n; ++k) {
        if (len[i][j] + 1 <= len[j][k]) continue;
        if (orientation(dual[i], dual[j], dual[k]) != wanted) continue;
        len[j][k] = len[i][j] + 1;
        prev[j][k] = i;
      }
    }
  }
  std::size_t bi = 0;
  std::size_t bj = 1;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (len[i][j] > len[bi][bj]) {
        bi = i;
        bj = j;
      }
    }
  }
  r.size = len[bi][bj];
  std::vector<std::size_t> chain{bj, bi};
  for (std::size_t a = bi, b = bj; prev[a][b] != kNone;) {
    const std::size_t p = prev[a][b];
    chain.push_back(p);
    b = a;
    a = p;
  }
  std::reverse(chain.begin(), chain.end());
  r.witness = std::move(chain);
  return r;
}

}  // namespace

std::string to_string(Side s) { return s == Side::left ? "left" : "right"; }

bool is_cup(const LineFamily& family) { return !family.empty() && all_bound_uniform(family, 1); }

bool is_cap(const LineFamily& family) { return !family.empty() && all_bound_uniform(family, -1); }

ChainResult longest_cup(const LineFamily& family) { return longest_chain(family, ChainKind::cup); }

ChainResult longest_cap(const LineFamily& family) { return longest_chain(family, ChainKind::cap); }

std::vector<SignVector> unbounded_cell_signs(std::size_t family_size, Side side) {
  // Toward +x, smaller slopes lie lower; toward -x they lie higher.
  const std::int8_t low = side == Side::right ? 1 : -1;
  std::vector<SignVector> out;
  for (std::size_t j = 1; j < family_size; ++j) {
    SignVector s(family_size);
    for (std::size_t i = 0; i < family_size; ++i) s[i] = i < j ? low : static_cast<std::int8_t>(-low);
    out.push_back(std::move(s));
  }
  return out;
}

std::optional<UnboundedCellWitness> find_k_cell_unbounded(const LineFamily& family, std::size_t k, Side side,
                                                          CellScope scope) {
  if (k < 2) throw ParameterError("k-cell query needs k >= 2");
  const std::size_t n = family.size();
  if (n < k) return std::nullopt;

  if (scope == CellScope::arrangement) {
    for (SignVector& s : unbounded_cell_signs(n, side)) {
      std::vector<std::size_t> b = bounding_lines(family, s);
      if (b.size() >= k) return UnboundedCellWitness{std::move(b), std::move(s)};
    }
    return std::nullopt;
  }

  const std::vector<SignVector> splits = unbounded_cell_signs(k, side);
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  do {
    for (const SignVector& s : splits) {
      if (all_bound(family, idx, s)) return UnboundedCellWitness{idx, s};
    }
  } while (next_combination(idx, n));
  return std::nullopt;
}

bool has_k_cell_unbounded(const LineFamily& family, std::size_t k, Side side, CellScope scope) {
  return find_k_cell_unbounded(family, k, side, scope).has_value();
}

}  // namespace linearr
