#include "linearr/svg.hpp"

#include <algorithm>
#include <sstream>

#include "linearr/errors.hpp"

namespace linearr {

namespace {

struct Segment {
  Point a;
  Point b;
};

std::optional<Segment> clip(const Line& l, const Viewport& v) {
  Rat lo = v.xmin;
  Rat hi = v.xmax;
  if (l.m.is_zero()) {
    if (l.c < v.ymin || l.c > v.ymax) return std::nullopt;
  } else {
    Rat x1 = (v.ymin - l.c) / l.m;
    Rat x2 = (v.ymax - l.c) / l.m;
    if (x2 < x1) std::swap(x1, x2);
    lo = max(lo, x1);
    hi = min(hi, x2);
  }
  if (!(lo < hi)) return std::nullopt;
  return Segment{{lo, l.eval(lo)}, {hi, l.eval(hi)}};
}

// Keep the part of `poly` where sign * (y - m x - c) >= 0.
std::vector<Point> clip_halfplane(const std::vector<Point>& poly, const Line& l, int sign) {
  std::vector<Point> out;
  auto value = [&](const Point& p) { return Rat(sign) * (p.y - l.eval(p.x)); };
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Point& p = poly[i];
    const Point& q = poly[(i + 1) % poly.size()];
    const Rat vp = value(p);
    const Rat vq = value(q);
    if (vp.sign() >= 0) out.push_back(p);
    if ((vp.sign() > 0 && vq.sign() < 0) || (vp.sign() < 0 && vq.sign() > 0)) {
      const Rat t = vp / (vp - vq);
      out.push_back(Point{p.x + t * (q.x - p.x), p.y + t * (q.y - p.y)});
    }
  }
  return out;
}

}  // namespace

Viewport auto_viewport(const LineFamily& family) {
  if (family.empty()) throw ParameterError("cannot render an empty family");
  Viewport v{Rat(-1), Rat(1), Rat(0), Rat(0)};
  if (family.size() == 1) {
    v.ymin = min(family[0].eval(Rat(-1)), family[0].eval(Rat(1)));
    v.ymax = max(family[0].eval(Rat(-1)), family[0].eval(Rat(1)));
  } else {
    bool first = true;
    for (std::size_t i = 0; i < family.size(); ++i) {
      for (std::size_t j = i + 1; j < family.size(); ++j) {
        const Point p = intersect(family[i], family[j]);
        if (first) {
          v = Viewport{p.x, p.x, p.y, p.y};
          first = false;
        }
        v.xmin = min(v.xmin, p.x);
        v.xmax = max(v.xmax, p.x);
        v.ymin = min(v.ymin, p.y);
        v.ymax = max(v.ymax, p.y);
      }
    }
  }
  auto margin = [](const Rat& lo, const Rat& hi) { return lo == hi ? Rat(1) : (hi - lo) / Rat(10); };
  const Rat mx = margin(v.xmin, v.xmax);
  const Rat my = margin(v.ymin, v.ymax);
  return Viewport{v.xmin - mx, v.xmax + mx, v.ymin - my, v.ymax + my};
}

Viewport parse_viewport(const std::string& text) {
  std::vector<Rat> parts;
  std::stringstream ss(text);
  try {
    for (std::string tok; std::getline(ss, tok, ',');) parts.push_back(Rat::parse(tok));
  } catch (const std::exception& e) {
    throw ParameterError(std::string("bad viewport: ") + e.what());
  }
  if (parts.size() != 4) throw ParameterError("viewport needs xmin,xmax,ymin,ymax");
  Viewport v{parts[0], parts[1], parts[2], parts[3]};
  if (!(v.xmin < v.xmax) || !(v.ymin < v.ymax)) throw ParameterError("viewport must have positive extent");
  return v;
}

std::string render_svg(const LineFamily& family, const RenderOptions& options) {
  if (family.empty()) throw ParameterError("cannot render an empty family");
  const Viewport v = options.viewport ? *options.viewport : auto_viewport(family);
  const Rat scale = Rat(options.width_px) / (v.xmax - v.xmin);
  const Rat height = (v.ymax - v.ymin) * scale;
  auto sx = [&](const Rat& x) { return ((x - v.xmin) * scale).to_decimal(12); };
  auto sy = [&](const Rat& y) { return ((v.ymax - y) * scale).to_decimal(12); };

  std::vector<std::optional<Segment>> segments;
  bool any = false;
  for (const Line& l : family) {
    segments.push_back(clip(l, v));
    any = any || segments.back().has_value();
  }
  if (!any) throw EmptyViewportError();

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << options.width_px << "\" height=\""
     << height.to_decimal(12) << "\" viewBox=\"0 0 " << options.width_px << " " << height.to_decimal(12) << "\">\n";
  if (family.name()) os << "  <title>" << *family.name() << "</title>\n";

  if (options.highlight_cell) {
    const SignVector& s = *options.highlight_cell;
    if (!is_feasible(family, s)) throw InfeasibleSignVectorError();
    std::vector<Point> poly{{v.xmin, v.ymin}, {v.xmax, v.ymin}, {v.xmax, v.ymax}, {v.xmin, v.ymax}};
    for (std::size_t i = 0; i < family.size() && poly.size() >= 3; ++i) poly = clip_halfplane(poly, family[i], s[i]);
    if (poly.size() >= 3) {
      os << "  <polygon class=\"cell\" fill=\"" << options.fill << "\" stroke=\"none\" points=\"";
      for (std::size_t i = 0; i < poly.size(); ++i) os << (i ? " " : "") << sx(poly[i].x) << "," << sy(poly[i].y);
      os << "\"/>\n";
    }
  }

  for (std::size_t i = 0; i < family.size(); ++i) {
    if (!segments[i]) continue;
    const bool hot = std::find(options.highlight_lines.begin(), options.highlight_lines.end(), i) !=
                     options.highlight_lines.end();
    os << "  <path class=\"line\" data-index=\"" << i << "\" d=\"M " << sx(segments[i]->a.x) << " "
       << sy(segments[i]->a.y) << " L " << sx(segments[i]->b.x) << " " << sy(segments[i]->b.y) << "\" stroke=\""
       << (hot ? options.highlight_stroke : options.stroke) << "\" stroke-width=\""
       << (hot ? 2 * options.stroke_width : options.stroke_width) << "\" fill=\"none\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace linearr
