#pragma once

// SVG rendering of planar tropical curves next to their dual subdivisions.

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdio>
#include <optional>
#include <set>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "tropcomp/cells.hpp"
#include "tropcomp/error.hpp"
#include "tropcomp/lp.hpp"
#include "tropcomp/polynomial.hpp"
#include "tropcomp/rational.hpp"

namespace tropcomp {

/// Axis-aligned box [xmin, xmax] x [ymin, ymax].
struct Viewport {
  Rational xmin = -5, xmax = 5, ymin = -5, ymax = 5;

  bool contains(std::span<const Rational> p) const {
    return p[0] >= xmin && p[0] <= xmax && p[1] >= ymin && p[1] <= ymax;
  }
};

/// Parses "xmin,xmax,ymin,ymax".
inline std::optional<Viewport> parse_viewport(std::string_view text) {
  std::vector<Rational> v;
  std::size_t start = 0;
  for (;;) {
    auto comma = text.find(',', start);
    auto piece = text.substr(start, comma == std::string_view::npos ? std::string_view::npos
                                                                    : comma - start);
    auto r = parse_rational(piece);
    if (!r) return std::nullopt;
    v.push_back(*r);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (v.size() != 4 || v[0] >= v[1] || v[2] >= v[3]) return std::nullopt;
  return Viewport{v[0], v[1], v[2], v[3]};
}

/// Part of a 1-dimensional cell inside the viewport. `open_*` marks an end
/// where the cell continues beyond the box.
struct CurveSegment {
  Point from, to;
  bool open_from = false, open_to = false;

  friend bool operator==(const CurveSegment&, const CurveSegment&) = default;
  friend auto operator<=>(const CurveSegment&, const CurveSegment&) = default;
};

struct CurveGeometry {
  std::vector<CurveSegment> segments;  // clipped, deduplicated
  std::vector<Point> vertices;         // every vertex of the curve, in or out of view
  std::vector<SubdivisionFace> faces;  // maximal faces of the dual subdivision
};

namespace detail {

inline LinearSystem boxed(const LinearSystem& sys, const Viewport& vp) {
  LinearSystem s = sys;
  s.add_inequality({Rational(1), Rational(0)}, vp.xmax);
  s.add_inequality({Rational(-1), Rational(0)}, -vp.xmin);
  s.add_inequality({Rational(0), Rational(1)}, vp.ymax);
  s.add_inequality({Rational(0), Rational(-1)}, -vp.ymin);
  return s;
}

/// Clips a 1-dimensional cell to the box by optimizing along its direction.
inline std::optional<CurveSegment> clip_cell(const Cell& c, const Viewport& vp) {
  const Vector& normal = c.system.equalities.front().coeffs;
  const Vector dir{-normal[1], normal[0]};
  const Vector back{normal[1], -normal[0]};
  const LinearSystem box = boxed(c.system, vp);
  auto hi = maximize(box, dir);
  if (!hi.is_feasible()) return std::nullopt;
  auto lo = maximize(box, back);
  CurveSegment s{*lo.witness, *hi.witness, false, false};
  s.open_to = maximize(c.system, dir).status == LpStatus::unbounded;
  s.open_from = maximize(c.system, back).status == LpStatus::unbounded;
  if (s.from == s.to) return std::nullopt;
  if (s.to < s.from) {
    std::swap(s.from, s.to);
    std::swap(s.open_from, s.open_to);
  }
  return s;
}

}  // namespace detail

inline CurveGeometry curve_geometry(const TropicalPolynomial& f, const Viewport& vp,
                                    const EnumerationOptions& opts = {}) {
  if (f.dimension() != 2) throw InvalidArgument("plot: polynomial must be bivariate");
  CurveGeometry g;
  const std::vector<TropicalPolynomial> system{f};
  std::set<CurveSegment> segments;
  for (const auto& c : enumerate_cells(system, opts)) {
    if (c.dimension != 1) continue;
    if (auto s = detail::clip_cell(c, vp)) segments.insert(std::move(*s));
  }
  // overlapping pair cells along one line yield nested pieces; keep the longest
  for (const auto& s : segments) {
    bool nested = std::any_of(segments.begin(), segments.end(), [&](const CurveSegment& t) {
      if (t == s) return false;
      const Vector d{s.to[0] - s.from[0], s.to[1] - s.from[1]};
      auto cross = [&](const Point& p) -> Rational {
        return d[0] * (p[1] - s.from[1]) - d[1] * (p[0] - s.from[0]);
      };
      if (sgn(cross(t.from)) != 0 || sgn(cross(t.to)) != 0) return false;
      if (t.from == s.from && t.to == s.to) return t < s;
      return t.from <= s.from && s.to <= t.to;
    });
    if (!nested) g.segments.push_back(s);
  }
  g.vertices = curve_vertices(f, opts);
  g.faces = regular_subdivision_2d(f, opts);
  return g;
}

namespace detail {

inline std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  std::string s(buf);
  if (s == "-0.00") s = "0.00";
  return s;
}

/// Convex hull of integer points, counterclockwise, collinear points dropped.
inline std::vector<std::array<long, 2>> convex_hull(std::vector<std::array<long, 2>> p) {
  std::sort(p.begin(), p.end());
  p.erase(std::unique(p.begin(), p.end()), p.end());
  if (p.size() <= 2) return p;
  auto cross = [](const auto& o, const auto& a, const auto& b) {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
  };
  std::vector<std::array<long, 2>> h(2 * p.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    while (k >= 2 && cross(h[k - 2], h[k - 1], p[i]) <= 0) --k;
    h[k++] = p[i];
  }
  for (std::size_t i = p.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(h[k - 2], h[k - 1], p[i]) <= 0) --k;
    h[k++] = p[i];
  }
  h.resize(k - 1);
  return h;
}

}  // namespace detail

/// SVG document: the curve clipped to `vp` (drawn with a 5% margin, clipped
/// rays end in arrowheads) and, to its right, the dual subdivision of the
/// Newton polygon with the first exponent axis pointing left and the second
/// pointing down.
inline std::string plot_curve(const TropicalPolynomial& f, const Viewport& vp,
                              const EnumerationOptions& opts = {}) {
  const CurveGeometry g = curve_geometry(f, vp, opts);
  constexpr double panel = 400.0;
  constexpr double gap = 40.0;

  const double w = to_double(vp.xmax - vp.xmin), h = to_double(vp.ymax - vp.ymin);
  const double x0 = to_double(vp.xmin) - 0.05 * w, y1 = to_double(vp.ymax) + 0.05 * h;
  const double sx = panel / (1.1 * w), sy = panel / (1.1 * h);
  auto px = [&](const Rational& x) { return detail::fmt((to_double(x) - x0) * sx); };
  auto py = [&](const Rational& y) { return detail::fmt((y1 - to_double(y)) * sy); };

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
     << detail::fmt(2 * panel + gap) << "\" height=\"" << detail::fmt(panel) << "\" viewBox=\"0 0 "
     << detail::fmt(2 * panel + gap) << ' ' << detail::fmt(panel) << "\">\n"
     << "<defs><marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"9\" refY=\"5\" "
        "markerWidth=\"6\" markerHeight=\"6\" orient=\"auto\">"
        "<path d=\"M0,0 L10,5 L0,10 z\" fill=\"black\"/></marker>"
        "<marker id=\"arrow-back\" viewBox=\"0 0 10 10\" refX=\"1\" refY=\"5\" "
        "markerWidth=\"6\" markerHeight=\"6\" orient=\"auto\">"
        "<path d=\"M10,0 L0,5 L10,10 z\" fill=\"black\"/></marker></defs>\n";

  os << "<g id=\"curve\">\n"
     << "<rect x=\"" << px(vp.xmin) << "\" y=\"" << py(vp.ymax) << "\" width=\""
     << detail::fmt(w * sx) << "\" height=\"" << detail::fmt(h * sy)
     << "\" fill=\"none\" stroke=\"#cccccc\" stroke-dasharray=\"4,4\"/>\n";
  for (const auto& s : g.segments) {
    // arrowheads sit at marker-end, so draw from the bounded end outwards
    const bool flip = s.open_from && !s.open_to;
    const Point& a = flip ? s.to : s.from;
    const Point& b = flip ? s.from : s.to;
    os << "<line x1=\"" << px(a[0]) << "\" y1=\"" << py(a[1]) << "\" x2=\"" << px(b[0])
       << "\" y2=\"" << py(b[1]) << "\" stroke=\"black\" stroke-width=\"2\"";
    if (s.open_from || s.open_to) os << " marker-end=\"url(#arrow)\"";
    if (s.open_from && s.open_to) os << " marker-start=\"url(#arrow-back)\"";
    os << "/>\n";
  }
  for (const auto& v : g.vertices) {
    if (!vp.contains(v)) continue;
    os << "<circle cx=\"" << px(v[0]) << "\" cy=\"" << py(v[1])
       << "\" r=\"3\" fill=\"black\"/>\n";
  }
  os << "</g>\n";

  unsigned amax = 1;
  for (const auto& t : f.terms()) amax = std::max({amax, t.exponent[0], t.exponent[1]});
  const double s = (panel - 2 * gap) / amax;
  const double right = 2 * panel + gap - gap;  // exponent (0,0) sits top-right
  auto qx = [&](long a) { return detail::fmt(right - static_cast<double>(a) * s); };
  auto qy = [&](long a) { return detail::fmt(gap + static_cast<double>(a) * s); };

  os << "<g id=\"subdivision\">\n"
     << "<line x1=\"" << qx(0) << "\" y1=\"" << qy(0) << "\" x2=\"" << qx(amax) << "\" y2=\""
     << qy(0) << "\" stroke=\"#999999\"/>\n"
     << "<line x1=\"" << qx(0) << "\" y1=\"" << qy(0) << "\" x2=\"" << qx(0) << "\" y2=\""
     << qy(amax) << "\" stroke=\"#999999\"/>\n";
  for (const auto& face : g.faces) {
    std::vector<std::array<long, 2>> pts;
    for (auto i : face.tight_set) {
      pts.push_back({static_cast<long>(f.term(i).exponent[0]),
                     static_cast<long>(f.term(i).exponent[1])});
    }
    auto hull = detail::convex_hull(std::move(pts));
    if (hull.size() >= 3) {
      os << "<polygon points=\"";
      for (std::size_t k = 0; k < hull.size(); ++k) {
        os << (k ? " " : "") << qx(hull[k][0]) << ',' << qy(hull[k][1]);
      }
      os << "\" fill=\"#e8eef8\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
    } else if (hull.size() == 2) {
      os << "<line x1=\"" << qx(hull[0][0]) << "\" y1=\"" << qy(hull[0][1]) << "\" x2=\""
         << qx(hull[1][0]) << "\" y2=\"" << qy(hull[1][1])
         << "\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
    }
  }
  for (const auto& t : f.terms()) {
    os << "<circle cx=\"" << qx(t.exponent[0]) << "\" cy=\"" << qy(t.exponent[1])
       << "\" r=\"3\" fill=\"black\"/>\n";
  }
  os << "</g>\n</svg>\n";
  return os.str();
}

}  // namespace tropcomp
