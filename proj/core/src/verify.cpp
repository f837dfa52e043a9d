#include "linearr/verify.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>

#include "linearr/errors.hpp"

namespace linearr {

namespace {

bool subset_convex(const LineFamily& family, const std::vector<std::size_t>& idx) {
  return is_convex_position(family.subset(idx));
}

// Lexicographically first convex n-subset whose smallest index is `first`.
std::optional<std::vector<std::size_t>> search_from(const LineFamily& family, std::size_t n, std::size_t first,
                                                    PruneMode prune) {
  const std::size_t size = family.size();
  if (first + n > size) return std::nullopt;
  if (n == 1) return std::vector<std::size_t>{first};

  if (prune == PruneMode::off) {
    // Tail combinations are over the offsets 0 .. size-first-2.
    std::vector<std::size_t> tail(n - 1);
    for (std::size_t i = 0; i < n - 1; ++i) tail[i] = i;
    std::vector<std::size_t> idx(n, first);
    do {
      for (std::size_t i = 0; i < n - 1; ++i) idx[i + 1] = first + 1 + tail[i];
      if (subset_convex(family, idx)) return idx;
    } while (next_combination(tail, size - first - 1));
    return std::nullopt;
  }

  // Depth-first in lexicographic order; a prefix that is not in convex
  // position cannot be extended (convex position is hereditary).
  std::vector<std::size_t> stack{first};
  std::optional<std::vector<std::size_t>> found;
  auto dfs = [&](auto&& self) -> bool {
    if (stack.size() == n) {
      found = stack;
      return true;
    }
    const std::size_t need = n - stack.size();
    for (std::size_t next = stack.back() + 1; next + need <= size; ++next) {
      stack.push_back(next);
      if (subset_convex(family, stack) && self(self)) return true;
      stack.pop_back();
    }
    return false;
  };
  dfs(dfs);
  return found;
}

}  // namespace

VerifyReport verify_properties(const LineFamily& family, std::int64_t l, std::int64_t p, std::int64_t q,
                               std::span<const Side> check_unbounded) {
  if (l < 3 || p < 2 || q < 2) throw ParameterError("verify_properties needs l >= 3 and p, q >= 2");
  VerifyReport r;
  r.family_size = family.size();
  r.l = l;
  r.p = p;
  r.q = q;
  r.concurrency = max_concurrency(family);
  r.longest_cup = longest_cup(family);
  r.longest_cap = longest_cap(family);
  r.concurrency_ok = r.concurrency.max_count < static_cast<std::size_t>(l);
  r.cup_ok = r.longest_cup.size <= static_cast<std::size_t>(p);
  r.cap_ok = r.longest_cap.size <= static_cast<std::size_t>(q);
  r.unbounded_ok = true;
  for (Side side : check_unbounded) {
    UnboundedCheck c;
    c.side = side;
    c.witness = find_k_cell_unbounded(family, 4, side, CellScope::subsets);
    c.found = c.witness.has_value();
    r.unbounded_ok = r.unbounded_ok && !c.found;
    r.unbounded.push_back(std::move(c));
  }
  r.pass = r.concurrency_ok && r.cup_ok && r.cap_ok && r.unbounded_ok;
  return r;
}

bool witnesses_valid(const LineFamily& family, const VerifyReport& report) {
  if (report.concurrency.point) {
    std::size_t through = 0;
    for (const Line& line : family) through += side_of(line, *report.concurrency.point) == 0 ? 1 : 0;
    if (through != report.concurrency.max_count) return false;
  }
  auto chain_ok = [&](const ChainResult& c, bool cup) {
    if (c.witness.size() != c.size) return false;
    if (c.size == 0) return family.empty();
    const LineFamily sub = family.subset(c.witness);
    return cup ? is_cup(sub) : is_cap(sub);
  };
  if (!chain_ok(report.longest_cup, true) || !chain_ok(report.longest_cap, false)) return false;
  for (const UnboundedCheck& c : report.unbounded) {
    if (!c.witness) continue;
    const LineFamily sub = family.subset(c.witness->lines);
    const auto b = bounding_lines(sub, c.witness->signs);
    const BoundClass want = c.side == Side::right ? BoundClass::unbounded_right : BoundClass::unbounded_left;
    if (b.size() != sub.size() || classify_cell(sub, c.witness->signs) != want) return false;
  }
  if (report.largest_convex_subset && !is_convex_position(family.subset(*report.largest_convex_subset))) return false;
  return true;
}

std::optional<std::vector<std::size_t>> find_n_convex(const LineFamily& family, std::size_t n,
                                                      const ConvexSearchOptions& options) {
  if (n < 2 || n > family.size()) throw ParameterError("find_n_convex needs 2 <= n <= |F|");
  const std::size_t size = family.size();
  const unsigned threads = std::max(1u, options.threads);
  if (threads == 1) {
    for (std::size_t first = 0; first + n <= size; ++first) {
      if (auto w = search_from(family, n, first, options.prune)) return w;
    }
    return std::nullopt;
  }

  // Workers claim blocks by smallest index; the answer is the hit with the
  // smallest block, which matches the sequential lexicographic order.
  std::vector<std::optional<std::vector<std::size_t>>> hits(size);
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> best{size};
  auto worker = [&] {
    for (;;) {
      const std::size_t first = next.fetch_add(1);
      if (first + n > size || first >= best.load()) return;
      hits[first] = search_from(family, n, first, options.prune);
      if (hits[first]) {
        std::size_t cur = best.load();
        while (first < cur && !best.compare_exchange_weak(cur, first)) {
        }
      }
    }
  };
  std::vector<std::jthread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  pool.clear();
  for (auto& h : hits) {
    if (h) return h;
  }
  return std::nullopt;
}

bool exists_n_convex(const LineFamily& family, std::size_t n, const ConvexSearchOptions& options) {
  return find_n_convex(family, n, options).has_value();
}

std::vector<std::size_t> largest_convex_subset(const LineFamily& family, const ConvexSearchOptions& options) {
  const std::size_t size = family.size();
  if (size < 2) return {};
  if (options.prune == PruneMode::hereditary) {
    std::vector<std::size_t> best = *find_n_convex(family, 2, options);
    for (std::size_t n = 3; n <= size; ++n) {
      auto w = find_n_convex(family, n, options);
      if (!w) break;
      best = std::move(*w);
    }
    return best;
  }
  for (std::size_t n = size; n >= 2; --n) {
    if (auto w = find_n_convex(family, n, options)) return *w;
  }
  return {};
}

namespace {

std::string join(const std::vector<std::size_t>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? " " : "") + std::to_string(v[i]);
  return out + "]";
}

const char* verdict(bool ok) { return ok ? "ok" : "FAIL"; }

}  // namespace

std::string format_report(const LineFamily& family, const VerifyReport& r) {
  std::ostringstream os;
  if (family.name()) os << "name = " << *family.name() << "\n";
  os << "family_size = " << r.family_size << "\n";
  os << "max_concurrency = " << r.concurrency.max_count;
  if (r.concurrency.point) os << " at " << to_string(*r.concurrency.point);
  os << " (limit < " << r.l << ": " << verdict(r.concurrency_ok) << ")\n";
  os << "longest_cup = " << r.longest_cup.size << " " << join(r.longest_cup.witness) << " (limit <= " << r.p << ": "
     << verdict(r.cup_ok) << ")\n";
  os << "longest_cap = " << r.longest_cap.size << " " << join(r.longest_cap.witness) << " (limit <= " << r.q << ": "
     << verdict(r.cap_ok) << ")\n";
  for (const UnboundedCheck& c : r.unbounded) {
    os << "4_cell_unbounded_" << to_string(c.side) << " = " << (c.found ? "yes" : "no");
    if (c.witness) os << " " << join(c.witness->lines) << " " << to_string(c.witness->signs);
    os << " (" << verdict(!c.found) << ")\n";
  }
  if (r.largest_convex_subset) {
    os << "largest_convex_subset = " << r.largest_convex_subset->size() << " " << join(*r.largest_convex_subset)
       << "\n";
  }
  os << "result = " << (r.pass ? "pass" : "fail") << "\n";
  return os.str();
}

}  // namespace linearr
