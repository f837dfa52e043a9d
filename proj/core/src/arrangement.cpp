#include "linearr/arrangement.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>

#include "linearr/errors.hpp"

namespace linearr {

namespace {

struct Vertex {
  Point point;
  std::vector<std::size_t> incident;  // ascending, hence slope-ordered
};

std::vector<Vertex> vertices(const LineFamily& family) {
  std::map<Point, std::set<std::size_t>> by_point;
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = i + 1; j < family.size(); ++j) {
      auto& inc = by_point[intersect(family[i], family[j])];
      inc.insert(i);
      inc.insert(j);
    }
  }
  std::vector<Vertex> out;
  out.reserve(by_point.size());
  for (auto& [p, inc] : by_point) out.push_back({p, std::vector<std::size_t>(inc.begin(), inc.end())});
  return out;
}

// One direction strictly inside each of the 2d angular sectors around a
// vertex whose incident slopes are m_1 < ... < m_d.
std::vector<Point> sector_directions(const LineFamily& family, const std::vector<std::size_t>& incident) {
  std::vector<Point> dirs;
  dirs.reserve(2 * incident.size());
  for (std::size_t k = 0; k + 1 < incident.size(); ++k) {
    const Rat mid = (family[incident[k]].m + family[incident[k + 1]].m) / Rat(2);
    dirs.push_back({Rat(1), mid});
    dirs.push_back({Rat(-1), -mid});
  }
  dirs.push_back({Rat(0), Rat(1)});
  dirs.push_back({Rat(0), Rat(-1)});
  return dirs;
}

// Signs of the cell entered from vertex v along direction d. Lines through v
// take the sign of the direction; the others keep their sign at v.
SignVector sector_signs(const LineFamily& family, const Vertex& v, const SignVector& at_vertex, const Point& d) {
  SignVector s = at_vertex;
  for (std::size_t i : v.incident) {
    s[i] = static_cast<std::int8_t>((d.y - family[i].m * d.x).sign());
  }
  return s;
}

SignVector signs_at(const LineFamily& family, const Point& p) {
  SignVector s(family.size());
  for (std::size_t i = 0; i < family.size(); ++i) s[i] = static_cast<std::int8_t>(side_of(family[i], p));
  return s;
}

bool realizes(const LineFamily& family, const SignVector& signs, const Point& p) {
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (side_of(family[i], p) != signs[i]) return false;
  }
  return true;
}

void check_length(const LineFamily& family, const SignVector& signs) {
  if (signs.size() != family.size()) throw InfeasibleSignVectorError();
  for (auto s : signs) {
    if (s != 1 && s != -1) throw InfeasibleSignVectorError();
  }
}

template <typename Fn>
void for_each_sector(const LineFamily& family, Fn&& fn) {
  for (const Vertex& v : vertices(family)) {
    const SignVector at_v = signs_at(family, v.point);
    for (const Point& d : sector_directions(family, v.incident)) fn(v, at_v, d, sector_signs(family, v, at_v, d));
  }
}

}  // namespace

std::string to_string(const SignVector& s) {
  std::string out;
  out.reserve(s.size());
  for (auto v : s) out.push_back(v > 0 ? '+' : '-');
  return out;
}

SignVector parse_sign_vector(const std::string& text) {
  SignVector s;
  s.reserve(text.size());
  for (char ch : text) {
    if (ch == '+') {
      s.push_back(1);
    } else if (ch == '-') {
      s.push_back(-1);
    } else {
      throw std::invalid_argument("sign vector must consist of '+' and '-'");
    }
  }
  return s;
}

std::string to_string(BoundClass c) {
  switch (c) {
    case BoundClass::bounded: return "bounded";
    case BoundClass::unbounded_left: return "unbounded_left";
    case BoundClass::unbounded_right: return "unbounded_right";
    case BoundClass::unbounded_other: return "unbounded_other";
  }
  return "?";
}

Interval boundary_interval(const LineFamily& family, const SignVector& signs, std::size_t i) {
  Interval iv;
  const Line& li = family[i];
  for (std::size_t j = 0; j < family.size(); ++j) {
    if (j == i) continue;
    // signs[j] * ((m_i - m_j) x + (c_i - c_j)) > 0; the slope difference is
    // nonzero in a nearly-general family.
    Rat a = li.m - family[j].m;
    Rat b = li.c - family[j].c;
    if (signs[j] < 0) {
      a = -a;
      b = -b;
    }
    Rat root = -b / a;
    if (a.sign() > 0) {
      if (!iv.lo || *iv.lo < root) iv.lo = std::move(root);
    } else {
      if (!iv.hi || root < *iv.hi) iv.hi = std::move(root);
    }
  }
  return iv;
}

bool is_feasible(const LineFamily& family, const SignVector& signs) {
  if (signs.size() != family.size() || family.empty()) return false;
  for (auto s : signs) {
    if (s != 1 && s != -1) return false;
  }
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (boundary_interval(family, signs, i).nonempty()) return true;
  }
  return false;
}

std::vector<std::size_t> bounding_lines(const LineFamily& family, const SignVector& signs) {
  check_length(family, signs);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (boundary_interval(family, signs, i).nonempty()) out.push_back(i);
  }
  if (out.empty()) throw InfeasibleSignVectorError();
  return out;
}

BoundClass classify_cell(const LineFamily& family, const SignVector& signs) {
  check_length(family, signs);
  int right_rays = 0;
  int left_rays = 0;
  bool any = false;
  for (std::size_t i = 0; i < family.size(); ++i) {
    const Interval iv = boundary_interval(family, signs, i);
    if (!iv.nonempty()) continue;
    any = true;
    if (!iv.lo) ++left_rays;
    if (!iv.hi) ++right_rays;
  }
  if (!any) throw InfeasibleSignVectorError();
  if (left_rays + right_rays == 0) return BoundClass::bounded;
  if (right_rays == 2 && left_rays == 0) return BoundClass::unbounded_right;
  if (left_rays == 2 && right_rays == 0) return BoundClass::unbounded_left;
  return BoundClass::unbounded_other;
}

Point cell_witness(const LineFamily& family, const SignVector& signs) {
  check_length(family, signs);
  for (std::size_t i = 0; i < family.size(); ++i) {
    const Interval iv = boundary_interval(family, signs, i);
    if (!iv.nonempty()) continue;
    Rat x0;
    if (iv.lo && iv.hi) {
      x0 = (*iv.lo + *iv.hi) / Rat(2);
    } else if (iv.lo) {
      x0 = *iv.lo + Rat(1);
    } else if (iv.hi) {
      x0 = *iv.hi - Rat(1);
    }
    const Point on_line{x0, family[i].eval(x0)};
    Rat step(signs[i]);
    for (;;) {
      Point p{on_line.x, on_line.y + step};
      if (realizes(family, signs, p)) return p;
      step /= Rat(2);
    }
  }
  throw InfeasibleSignVectorError();
}

std::vector<Cell> enumerate_cells(const LineFamily& family) {
  if (family.empty()) throw std::invalid_argument("enumerate_cells needs at least one line");
  std::map<SignVector, Point> found;
  if (family.size() == 1) {
    found.emplace(SignVector{1}, Point{Rat(0), family[0].c + Rat(1)});
    found.emplace(SignVector{-1}, Point{Rat(0), family[0].c - Rat(1)});
  } else {
    for_each_sector(family, [&](const Vertex& v, const SignVector& at_v, const Point& d, SignVector s) {
      if (found.contains(s)) return;
      // Step outward until no non-incident line has been crossed.
      Rat t(1);
      for (;;) {
        Point p{v.point.x + t * d.x, v.point.y + t * d.y};
        bool ok = true;
        for (std::size_t i = 0; i < family.size() && ok; ++i) {
          if (at_v[i] != 0) ok = side_of(family[i], p) == at_v[i];
        }
        if (ok) {
          found.emplace(std::move(s), std::move(p));
          return;
        }
        t /= Rat(2);
      }
    });
  }
  std::vector<Cell> cells;
  cells.reserve(found.size());
  for (auto& [signs, witness] : found) {
    Cell c;
    c.bounding = bounding_lines(family, signs);
    c.bound_class = classify_cell(family, signs);
    c.signs = signs;
    c.witness = witness;
    cells.push_back(std::move(c));
  }
  return cells;
}

std::vector<SignVector> cell_sign_vectors(const LineFamily& family) {
  if (family.empty()) return {};
  if (family.size() == 1) return {SignVector{-1}, SignVector{1}};
  std::set<SignVector> found;
  for_each_sector(family, [&](const Vertex&, const SignVector&, const Point&, SignVector s) { found.insert(std::move(s)); });
  return {found.begin(), found.end()};
}

ConcurrencyReport max_concurrency(const LineFamily& family) {
  ConcurrencyReport r;
  r.max_count = std::min<std::size_t>(family.size(), 1);
  if (family.size() < 2) return r;
  for (Vertex& v : vertices(family)) {
    if (v.incident.size() > r.max_count) {
      r.max_count = v.incident.size();
      r.all_points_at_max.clear();
    }
    if (v.incident.size() == r.max_count) r.all_points_at_max.push_back(std::move(v.point));
  }
  r.point = r.all_points_at_max.front();
  return r;
}

std::map<std::size_t, std::size_t> concurrency_profile(const LineFamily& family) {
  std::map<std::size_t, std::size_t> profile;
  if (family.size() < 2) return profile;
  for (const Vertex& v : vertices(family)) ++profile[v.incident.size()];
  return profile;
}

std::optional<Cell> convex_position_witness(const LineFamily& family) {
  if (family.size() < 2) return std::nullopt;
  for (const SignVector& s : cell_sign_vectors(family)) {
    bool all = true;
    for (std::size_t i = 0; i < family.size() && all; ++i) all = boundary_interval(family, s, i).nonempty();
    if (!all) continue;
    Cell c;
    c.signs = s;
    c.bounding.resize(family.size());
    for (std::size_t i = 0; i < family.size(); ++i) c.bounding[i] = i;
    c.bound_class = classify_cell(family, s);
    c.witness = cell_witness(family, s);
    return c;
  }
  return std::nullopt;
}

bool is_convex_position(const LineFamily& family) { return convex_position_witness(family).has_value(); }

}  // namespace linearr
