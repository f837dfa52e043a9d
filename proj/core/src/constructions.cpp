#include "linearr/constructions.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <tuple>

#include "linearr/arrangement.hpp"
#include "linearr/cups_caps.hpp"
#include "linearr/errors.hpp"
#include "linearr/verify.hpp"

namespace linearr {

namespace {

std::vector<Point> vertices_of(const LineFamily& family) {
  std::vector<Point> out;
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = i + 1; j < family.size(); ++j) out.push_back(intersect(family[i], family[j]));
  }
  return out;
}

struct Box {
  Rat xmin, xmax, ymin, ymax;
};

Box bbox(const std::vector<Point>& pts) {
  Box b{pts.front().x, pts.front().x, pts.front().y, pts.front().y};
  for (const Point& p : pts) {
    b.xmin = min(b.xmin, p.x);
    b.xmax = max(b.xmax, p.x);
    b.ymin = min(b.ymin, p.y);
    b.ymax = max(b.ymax, p.y);
  }
  return b;
}

// Everything the contraction must leave untouched.
struct Fingerprint {
  std::map<std::size_t, std::size_t> profile;
  std::size_t cup = 0;
  std::size_t cap = 0;
  bool right4 = false;
  bool left4 = false;
  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

Fingerprint fingerprint(const LineFamily& f) {
  Fingerprint fp;
  fp.profile = concurrency_profile(f);
  fp.cup = longest_cup(f).size;
  fp.cap = longest_cap(f).size;
  fp.right4 = has_k_cell_unbounded(f, 4, Side::right);
  fp.left4 = has_k_cell_unbounded(f, 4, Side::left);
  return fp;
}

// The contraction proper; `target` lies on `anchor`. Vertices must end up
// strictly on the side of the x-axis that `target` is on (if it is off it).
LineFamily contract_at(const LineFamily& family, const Line& anchor, const Rat& epsilon, const Point& target,
                       int max_attempts) {
  if (family.empty()) throw ParameterError("cannot contract an empty family");
  if (epsilon.sign() <= 0) throw ParameterError("epsilon must be positive");

  Rat x0(0);
  Rat y0 = family[0].c;
  if (family.size() >= 2) {
    const Box b = bbox(vertices_of(family));
    x0 = (b.xmin + b.xmax) / Rat(2);
    y0 = (b.ymin + b.ymax) / Rat(2);
  }
  const Rat mbar = (family[0].m + family[family.size() - 1].m) / Rat(2);
  const Rat eps2 = epsilon * epsilon;

  Rat t(1);
  for (int attempt = 0; attempt < max_attempts; ++attempt, t = t / Rat(2)) {
    std::vector<Line> out;
    out.reserve(family.size());
    bool slopes_ok = true;
    for (const Line& l : family) {
      const Rat m = anchor.m + t * (l.m - mbar);
      const Rat y_at = target.y + t * t * (l.eval(x0) - y0);
      slopes_ok = slopes_ok && (m - anchor.m).abs() < epsilon;
      out.push_back(Line{m, y_at - m * target.x});
    }
    if (!slopes_ok) continue;
    LineFamily g(std::move(out), family.name());
    if (g.size() >= 2) {
      const std::vector<Point> vs = vertices_of(g);
      const Box b = bbox(vs);
      const Rat dx = b.xmax - b.xmin;
      const Rat dy = b.ymax - b.ymin;
      if (dx * dx + dy * dy > eps2) continue;
      const int want = target.y.sign();
      if (want != 0 &&
          !std::all_of(vs.begin(), vs.end(), [&](const Point& p) { return p.y.sign() == want; })) {
        continue;
      }
    }
    return g;
  }
  throw ConstructionError("contraction did not converge");
}

Point default_target(const Line& anchor, const Rat& target_y) {
  if (anchor.m.is_zero()) return Point{Rat(0), anchor.c};
  return Point{(target_y - anchor.c) / anchor.m, target_y};
}

std::string label(const std::string& kind, std::initializer_list<std::pair<const char*, std::int64_t>> params) {
  std::string s = kind;
  for (const auto& [k, v] : params) s += std::string(" ") + k + "=" + std::to_string(v);
  return s;
}

bool budget_allows(std::size_t size, std::int64_t n, std::uint64_t budget) {
  return binomial(static_cast<std::int64_t>(size), n) <= BigInt(static_cast<unsigned long>(budget));
}

}  // namespace

LineFamily pencil(const Point& apex, std::span<const Rat> slopes) {
  std::vector<Line> lines;
  lines.reserve(slopes.size());
  for (const Rat& m : slopes) lines.push_back(Line{m, apex.y - m * apex.x});
  return LineFamily(std::move(lines));
}

LineFamily pencil(const Point& apex, std::size_t count) {
  std::vector<Rat> slopes;
  for (std::size_t i = 1; i <= count; ++i) slopes.emplace_back(static_cast<std::int64_t>(i));
  return pencil(apex, slopes);
}

LineFamily reflect_y(const LineFamily& family) {
  std::vector<Line> out;
  for (const Line& l : family) out.push_back(reflect_y(l));
  return LineFamily(std::move(out), family.name());
}

LineFamily reflect_x(const LineFamily& family) {
  std::vector<Line> out;
  for (const Line& l : family) out.push_back(reflect_x(l));
  return LineFamily(std::move(out), family.name());
}

LineFamily contract(const LineFamily& family, const Line& anchor, const Rat& epsilon, const Rat& target_y) {
  if (target_y.sign() >= 0) throw ParameterError("contraction target must lie below the x-axis");
  if (anchor.m.is_zero() && anchor.c != target_y) {
    throw ParameterError("horizontal anchor does not reach the requested height");
  }
  LineFamily g = contract_at(family, anchor, epsilon, default_target(anchor, target_y), 64);
  if (fingerprint(g) != fingerprint(family)) throw ConstructionError("contraction changed the combinatorics");
  return g;
}

LineFamily assemble(std::span<const Line> scaffold, std::span<const LineFamily> clusters,
                    const std::function<bool(const LineFamily&)>& accept, const ConstructOptions& options) {
  const std::size_t k = scaffold.size();
  if (k == 0 || clusters.size() != k) throw ParameterError("assemble needs one cluster per scaffold line");
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      if (scaffold[i].m == scaffold[j].m) throw DuplicateSlopeError(scaffold[i].m.to_string());
    }
  }

  // Scaffold points: the cluster target on each line, and pairwise crossings.
  std::vector<Point> target(k);
  for (std::size_t i = 0; i < k; ++i) {
    bool found = false;
    for (std::int64_t step = 1; step <= 1000 && !found; ++step) {
      const Point p = scaffold[i].m.is_zero() ? Point{Rat(step - 1), scaffold[i].c}
                                              : default_target(scaffold[i], Rat(-step));
      found = true;
      for (std::size_t m = 0; m < k && found; ++m) found = m == i || side_of(scaffold[m], p) != 0;
      if (found) target[i] = p;
    }
    if (!found) throw ConstructionError("no free target point on scaffold line");
  }
  std::vector<std::vector<Point>> cross(k, std::vector<Point>(k));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) cross[i][j] = cross[j][i] = intersect(scaffold[i], scaffold[j]);
  }
  // expected[m][i][j]: side of scaffold line m at the point standing for
  // vertices between clusters i and j.
  std::vector<std::vector<std::vector<int>>> expected(k, std::vector<std::vector<int>>(k, std::vector<int>(k, 0)));
  for (std::size_t m = 0; m < k; ++m) {
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = i; j < k; ++j) {
        if (m == i || m == j) continue;
        const int s = side_of(scaffold[m], i == j ? target[i] : cross[i][j]);
        if (s == 0) throw ConstructionError("scaffold has three concurrent lines");
        expected[m][i][j] = expected[m][j][i] = s;
      }
    }
  }

  Rat eps = options.epsilon;
  for (int attempt = 0; attempt < options.max_attempts; ++attempt, eps = eps / Rat(2)) {
    std::vector<Line> lines;
    std::vector<std::size_t> owner;
    for (std::size_t i = 0; i < k; ++i) {
      const LineFamily c = contract_at(clusters[i], scaffold[i], eps, target[i], 64);
      for (const Line& l : c) {
        lines.push_back(l);
        owner.push_back(i);
      }
    }
    std::vector<std::size_t> order(lines.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return lines[a].m < lines[b].m; });
    bool distinct = true;
    for (std::size_t i = 1; i < order.size(); ++i) distinct = distinct && lines[order[i - 1]].m != lines[order[i]].m;
    if (!distinct) continue;

    bool consistent = true;
    for (std::size_t u = 0; u < lines.size() && consistent; ++u) {
      for (std::size_t v = u + 1; v < lines.size() && consistent; ++v) {
        const Point x = intersect(lines[u], lines[v]);
        for (std::size_t w = 0; w < lines.size() && consistent; ++w) {
          const std::size_t m = owner[w];
          if (m == owner[u] || m == owner[v]) continue;
          consistent = side_of(lines[w], x) == expected[m][owner[u]][owner[v]];
        }
      }
    }
    if (!consistent) continue;

    LineFamily result(std::move(lines));
    if (accept(result)) return result;
  }
  throw ConstructionError("assembly did not satisfy its checks at any epsilon tried");
}

LineFamily construct_base(std::int64_t p, std::int64_t l, const ConstructOptions& options) {
  if (p < 2 || l < 3) throw ParameterError("base family needs p >= 2 and l >= 3");
  const std::int64_t h = p / 2;
  // Offsets symmetric about 0 with |offset| <= width * (l-2) / 2.
  Rat width = l == 3 ? Rat(1, 4) : Rat(BigInt(1), BigInt(2 * (l - 2)));
  for (int attempt = 0; attempt < options.max_attempts; ++attempt, width = width / Rat(2)) {
    std::vector<Line> lines;
    for (std::int64_t i = 1; i <= h; ++i) {
      const Point apex{Rat(i), Rat(i * i)};
      std::vector<Rat> slopes;
      for (std::int64_t j = 0; j <= l - 2; ++j) {
        slopes.push_back(Rat(2 * i) + width * (Rat(j) - Rat(BigInt(l - 2), BigInt(2))));
      }
      for (const Line& ln : pencil(apex, slopes)) lines.push_back(ln);
    }
    if (p % 2 == 1) lines.push_back(Line{Rat(2 * (h + 1)), Rat(-(h + 1) * (h + 1))});

    bool below = true;
    for (const Line& ln : lines) {
      // Every apex a line does not pass through lies above it.
      for (std::int64_t i = 1; i <= h; ++i) {
        const int s = side_of(ln, Point{Rat(i), Rat(i * i)});
        below = below && s >= 0;
      }
    }
    if (!below) continue;
    LineFamily f(std::move(lines), label("base", {{"p", p}, {"q", 2}, {"l", l}}));
    if (max_concurrency(f).max_count >= static_cast<std::size_t>(l)) continue;
    if (options.verify) {
      const Side right = Side::right;
      if (!verify_properties(f, l, p, 2, std::span<const Side>(&right, 1)).pass) continue;
    }
    return f;
  }
  throw ConstructionError("base family failed verification");
}

LineFamily construct_base_caps(std::int64_t q, std::int64_t l, const ConstructOptions& options) {
  LineFamily f = reflect_x(construct_base(q, l, options));
  f.set_name(label("base", {{"p", 2}, {"q", q}, {"l", l}}));
  return f;
}

LineFamily construct_F(std::int64_t p, std::int64_t q, std::int64_t l, const ConstructOptions& options) {
  if (p < 1 || q < 1 || l < 3) throw ParameterError("recursive family needs p, q >= 1 and l >= 3");
  if (p == 1 || q == 1) {
    return LineFamily({Line{Rat(1), Rat(0)}}, label("recursive", {{"p", p}, {"q", q}, {"l", l}}));
  }
  if (q == 2) return construct_base(p, l, options);
  if (p == 2) return construct_base_caps(q, l, options);

  using Key = std::tuple<std::int64_t, std::int64_t, std::int64_t, std::string, int, bool>;
  static std::mutex mu;
  static std::map<Key, LineFamily> memo;
  const Key key{p, q, l, options.epsilon.to_string(), options.max_attempts, options.verify};
  {
    std::lock_guard lock(mu);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
  }

  const std::vector<Line> scaffold{Line{Rat(1), Rat(2)}, Line{Rat(2), Rat(2)}};
  const std::vector<LineFamily> clusters{construct_F(p - 1, q, l, options), construct_F(p, q - 1, l, options)};
  auto accept = [&](const LineFamily& f) {
    if (!options.verify) return max_concurrency(f).max_count < static_cast<std::size_t>(l);
    const Side right = Side::right;
    return verify_properties(f, l, p, q, std::span<const Side>(&right, 1)).pass;
  };
  LineFamily f = assemble(scaffold, clusters, accept, options);
  f.set_name(label("recursive", {{"p", p}, {"q", q}, {"l", l}}));
  std::lock_guard lock(mu);
  memo.emplace(key, f);
  return f;
}

LineFamily construct_prop32(std::int64_t l, std::int64_t k, Parity parity, const ConstructOptions& options) {
  if (l < 3 || k < 2) throw ParameterError("single-copy assembly needs l >= 3 and k >= 2");
  const std::int64_t n = parity == Parity::even ? 2 * k + 2 : 2 * k + 1;

  // Scaffold: mirrored F_{k,k}^3, sheared to minimum slope 1, lifted so
  // every crossing is at height >= 1.
  const LineFamily base = reflect_y(construct_F(k, k, 3, options));
  const Rat shear = Rat(1) - base[0].m;
  std::vector<Line> scaffold;
  for (const Line& ln : base) scaffold.push_back(Line{ln.m + shear, ln.c});
  if (scaffold.size() >= 2) {
    const Box b = bbox(vertices_of(LineFamily(scaffold)));
    const Rat lift = Rat(1) - b.ymin;
    for (Line& ln : scaffold) ln.c = ln.c + lift;
  }

  std::vector<LineFamily> clusters;
  for (std::size_t i = 0; i < scaffold.size(); ++i) {
    clusters.push_back(parity == Parity::odd && i > 0 ? construct_F(k - 1, k, l, options)
                                                      : construct_F(k, k, l, options));
  }
  auto accept = [&](const LineFamily& f) {
    if (max_concurrency(f).max_count >= static_cast<std::size_t>(l)) return false;
    if (options.verify && f.size() >= static_cast<std::size_t>(n) && budget_allows(f.size(), n, options.subset_budget)) {
      return !exists_n_convex(f, static_cast<std::size_t>(n), {PruneMode::hereditary, 1});
    }
    return true;
  };
  LineFamily f = assemble(scaffold, clusters, accept, options);
  f.set_name(label(parity == Parity::even ? "prop32_even" : "prop32_odd", {{"l", l}, {"k", k}}));
  return f;
}

LineFamily construct_thm12(std::int64_t l, std::int64_t n, const ConstructOptions& options) {
  if (l < 3 || n < 5) throw ParameterError("double-copy assembly needs l >= 3 and n >= 5");
  const bool even = n % 2 == 0;
  const std::int64_t k = even ? (n - 2) / 2 : (n - 1) / 2;

  // Two mirrored copies of F_{k,k}^3 on y = x + 2 and y = -x + 2, flipped
  // upside down and lifted so every crossing is above the x-axis.
  const LineFamily a = construct_F(k, k, 3, options);
  const std::vector<Line> pair_scaffold{Line{Rat(1), Rat(2)}, Line{Rat(-1), Rat(2)}};
  const std::vector<LineFamily> pair_clusters{a, reflect_y(a)};
  const LineFamily pair = assemble(
      pair_scaffold, pair_clusters, [](const LineFamily& f) { return max_concurrency(f).max_count < 3; }, options);
  std::vector<Line> g;
  for (const Line& ln : pair) g.push_back(reflect_x(ln));
  {
    const Box b = bbox(vertices_of(LineFamily(g)));
    if (b.ymin.sign() <= 0) {
      const Rat lift = Rat(1) - b.ymin;
      for (Line& ln : g) ln.c = ln.c + lift;
    }
  }
  std::sort(g.begin(), g.end(), [](const Line& x, const Line& y) { return x.m < y.m; });

  const std::size_t half = g.size() / 2;
  std::vector<LineFamily> clusters;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const bool mirrored = i < half;
    const bool first = i == 0 || i == half;
    LineFamily c = (even || first) ? construct_F(k, k, l, options) : construct_F(k - 1, k, l, options);
    clusters.push_back(mirrored ? reflect_y(c) : c);
  }
  auto accept = [&](const LineFamily& f) {
    if (max_concurrency(f).max_count >= static_cast<std::size_t>(l)) return false;
    if (options.verify && f.size() >= static_cast<std::size_t>(n) && budget_allows(f.size(), n, options.subset_budget)) {
      return !exists_n_convex(f, static_cast<std::size_t>(n), {PruneMode::hereditary, 1});
    }
    return true;
  };
  LineFamily f = assemble(g, clusters, accept, options);
  f.set_name(label("thm12", {{"l", l}, {"n", n}}));
  return f;
}

LineFamily figure10_family(std::int64_t l) {
  if (l < 3) throw ParameterError("two-pencil family needs l >= 3");
  std::vector<Rat> left;
  std::vector<Rat> right;
  for (std::int64_t j = 0; j <= l - 2; ++j) {
    const Rat m = l == 3 ? Rat(3, 5) + Rat(j) * Rat(3, 10)
                         : Rat(3, 5) + Rat(j) * Rat(BigInt(3), BigInt(10 * (l - 2)));
    left.push_back(m);
    right.push_back(-m);
  }
  std::vector<Line> lines;
  for (const Line& ln : pencil(Point{Rat(-1), Rat(0)}, left)) lines.push_back(ln);
  for (const Line& ln : pencil(Point{Rat(1), Rat(0)}, right)) lines.push_back(ln);
  lines.push_back(Line{Rat(10, 3), Rat(-1, 20)});
  lines.push_back(Line{Rat(-10, 3), Rat(-1, 20)});
  return LineFamily(std::move(lines), label("figure10", {{"l", l}}));
}

std::string to_string(ConstructionKind kind) {
  switch (kind) {
    case ConstructionKind::pencil: return "pencil";
    case ConstructionKind::base_pq2: return "base_pq2";
    case ConstructionKind::base_2q: return "base_2q";
    case ConstructionKind::recursive_pq: return "recursive_pq";
    case ConstructionKind::prop32_even: return "prop32_even";
    case ConstructionKind::prop32_odd: return "prop32_odd";
    case ConstructionKind::thm12: return "thm12";
    case ConstructionKind::thm12_even: return "thm12_even";
    case ConstructionKind::thm12_odd: return "thm12_odd";
    case ConstructionKind::figure10: return "figure10";
  }
  return "?";
}

ConstructionKind parse_construction_kind(const std::string& name) {
  std::string s = name;
  std::replace(s.begin(), s.end(), '-', '_');
  for (auto k : {ConstructionKind::pencil, ConstructionKind::base_pq2, ConstructionKind::base_2q,
                 ConstructionKind::recursive_pq, ConstructionKind::prop32_even, ConstructionKind::prop32_odd,
                 ConstructionKind::thm12, ConstructionKind::thm12_even, ConstructionKind::thm12_odd,
                 ConstructionKind::figure10}) {
    if (to_string(k) == s) return k;
  }
  throw ParameterError("unknown construction kind '" + name + "'");
}

std::vector<std::pair<std::string, std::string>> ConstructionSpec::to_pairs() const {
  std::vector<std::pair<std::string, std::string>> out{{"kind", to_string(kind)}};
  auto add = [&](const char* key, std::int64_t v) { out.emplace_back(key, std::to_string(v)); };
  switch (kind) {
    case ConstructionKind::pencil: add("n", n); break;
    case ConstructionKind::base_pq2: add("p", p); add("l", l); break;
    case ConstructionKind::base_2q: add("q", q); add("l", l); break;
    case ConstructionKind::recursive_pq: add("p", p); add("q", q); add("l", l); break;
    case ConstructionKind::prop32_even:
    case ConstructionKind::prop32_odd:
    case ConstructionKind::thm12_even:
    case ConstructionKind::thm12_odd: add("l", l); add("k", k); break;
    case ConstructionKind::thm12: add("l", l); add("n", n); break;
    case ConstructionKind::figure10: add("l", l); break;
  }
  return out;
}

LineFamily generate(const ConstructionSpec& spec, const ConstructOptions& options) {
  switch (spec.kind) {
    case ConstructionKind::pencil: {
      if (spec.n < 1) throw ParameterError("pencil needs n >= 1");
      LineFamily f = pencil(Point{Rat(0), Rat(0)}, static_cast<std::size_t>(spec.n));
      f.set_name(label("pencil", {{"n", spec.n}}));
      return f;
    }
    case ConstructionKind::base_pq2: return construct_base(spec.p, spec.l, options);
    case ConstructionKind::base_2q: return construct_base_caps(spec.q, spec.l, options);
    case ConstructionKind::recursive_pq: return construct_F(spec.p, spec.q, spec.l, options);
    case ConstructionKind::prop32_even: return construct_prop32(spec.l, spec.k, Parity::even, options);
    case ConstructionKind::prop32_odd: return construct_prop32(spec.l, spec.k, Parity::odd, options);
    case ConstructionKind::thm12: return construct_thm12(spec.l, spec.n, options);
    case ConstructionKind::thm12_even:
      if (spec.k < 2) throw ParameterError("thm12 needs k >= 2");
      return construct_thm12(spec.l, 2 * spec.k + 2, options);
    case ConstructionKind::thm12_odd:
      if (spec.k < 2) throw ParameterError("thm12 needs k >= 2");
      return construct_thm12(spec.l, 2 * spec.k + 1, options);
    case ConstructionKind::figure10: return figure10_family(spec.l);
  }
  throw ParameterError("unknown construction kind");
}

}  // namespace linearr
