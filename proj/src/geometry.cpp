#include <algorithm>
#include <cmath>

#include "lipsel/geometry.hpp"

namespace lipsel {

double linf_dist(Point p, Point q) { return std::max(std::abs(p.x1 - q.x1), std::abs(p.x2 - q.x2)); }
double linf_norm(Point p) { return std::max(std::abs(p.x1), std::abs(p.x2)); }

Interval Interval::make(double lo, double hi) {
  if (lo > hi) return none();
  return Interval{lo, hi, false};
}

Interval intersect(const Interval& a, const Interval& b) {
  if (a.empty || b.empty) return Interval::none();
  return Interval::make(std::max(a.lo, b.lo), std::min(a.hi, b.hi));
}

Interval inflate(const Interval& a, double r) {
  if (a.empty) return a;
  return Interval{a.lo - r, a.hi + r, false};
}

double dist(const Interval& a, const Interval& b) {
  if (a.empty || b.empty) return 0.0;
  return std::max({0.0, ext_sub(a.lo, b.hi), ext_sub(b.lo, a.hi)});
}

Rect intersect(const Rect& a, const Rect& b) {
  Rect r{intersect(a.ix, b.ix), intersect(a.iy, b.iy)};
  if (r.empty()) return Rect::none();
  return r;
}

Rect inflate(const Rect& a, double r) {
  if (r < 0) throw std::invalid_argument("inflate: negative radius");
  if (a.empty()) return Rect::none();
  return Rect{inflate(a.ix, r), inflate(a.iy, r)};
}

Rect intersect_tol(const Rect& a, const Rect& b, double tol) {
  if (a.empty() || b.empty()) return Rect::none();
  Rect r;
  for (int i = 0; i < 2; ++i) {
    const double lo = std::max(a.side(i).lo, b.side(i).lo), hi = std::min(a.side(i).hi, b.side(i).hi);
    if (lo <= hi) {
      r.side(i) = Interval{lo, hi, false};
    } else if (lo - hi <= tol * (1.0 + std::abs(lo) + std::abs(hi))) {
      r.side(i) = Interval::point(0.5 * (lo + hi));
    } else {
      return Rect::none();
    }
  }
  return r;
}

Rect intersect_all(const std::vector<Rect>& rects) {
  Rect acc = Rect::plane();
  for (const Rect& r : rects) acc = intersect(acc, r);
  return acc;
}

namespace {
double interval_hausdorff(const Interval& a, const Interval& b) {
  return std::max(std::abs(ext_sub(a.lo, b.lo)), std::abs(ext_sub(a.hi, b.hi)));
}
}  // namespace

double hausdorff_rect(const Rect& a, const Rect& b) {
  if (a.empty() || b.empty()) throw std::invalid_argument("hausdorff_rect: empty rectangle");
  return std::max(interval_hausdorff(a.ix, b.ix), interval_hausdorff(a.iy, b.iy));
}

Point center_rect(const Rect& r) {
  if (r.empty()) throw std::invalid_argument("center_rect: empty rectangle");
  if (!r.bounded()) throw std::invalid_argument("center_rect: unbounded rectangle");
  return {0.5 * (r.ix.lo + r.ix.hi), 0.5 * (r.iy.lo + r.iy.hi)};
}

double dist(const Rect& a, const Rect& b) {
  if (a.empty() || b.empty()) return 0.0;
  return std::max(dist(a.ix, b.ix), dist(a.iy, b.iy));
}

Point project_center(Point a, const Rect& r) {
  if (r.empty()) throw std::invalid_argument("project_center: empty rectangle");
  double d = 0.0;
  for (int i = 0; i < 2; ++i) d = std::max(d, dist(Interval::point(a[i]), r.side(i)));
  Point out;
  for (int i = 0; i < 2; ++i) {
    Interval s = intersect(r.side(i), Interval::make(a[i] - d, a[i] + d));
    if (s.empty) {
      // Only reachable through rounding: snap to the closer endpoint.
      s = Interval::point(std::clamp(a[i], r.side(i).lo, r.side(i).hi));
    }
    out[i] = 0.5 * (s.lo + s.hi);
  }
  return out;
}

HalfPlane make_halfplane(double a, double b, double c) {
  const double len = std::hypot(a, b);
  if (len == 0.0) throw std::invalid_argument("make_halfplane: zero normal");
  return HalfPlane{a / len, b / len, c / len};
}

bool unit_normal(const HalfPlane& h, double tol) {
  return std::abs(h.n1 * h.n1 + h.n2 * h.n2 - 1.0) <= tol;
}

SetExpr& SetExpr::add(const SetSpec& s, double r) {
  if (!(r >= 0)) throw std::invalid_argument("SetExpr: negative or NaN radius");
  if (std::isinf(r)) return *this;  // S + inf Q0 is the plane
  Term t;
  std::visit([&t](const auto& v) { t.set = v; }, s);
  t.radius = r;
  if (const Rect* rect = std::get_if<Rect>(&t.set); rect && rect->empty()) empty_ = true;
  terms_.push_back(std::move(t));
  return *this;
}

SetExpr& SetExpr::add(const SetExpr& e, double r) {
  if (!(r >= 0)) throw std::invalid_argument("SetExpr: negative or NaN radius");
  if (e.known_empty()) {
    empty_ = true;
    return *this;
  }
  if (std::isinf(r)) return *this;
  if (r == 0.0) {
    for (const Term& t : e.terms()) terms_.push_back(t);
    return *this;
  }
  terms_.push_back(Term{std::make_shared<const SetExpr>(e), r});
  return *this;
}

SetExpr inflate(const SetSpec& s, double r) {
  if (!(r >= 0) || std::isinf(r)) throw std::invalid_argument("inflate: radius must be finite and >= 0");
  return SetExpr(s, r);
}

Rect rect_hull(const SetSpec& s) { return rect_hull(SetExpr(s)); }

double det2(Point nx, Point ny) { return nx.x1 * ny.x2 - nx.x2 * ny.x1; }

HalfPlane inflate_halfplane(const HalfPlane& h, double r) { return HalfPlane{h.n1, h.n2, h.alpha - r * h.l1()}; }

bool axis_in_cone(Point a, Point b, int axis, int s) {
  const double d = det2(a, b);
  const Point e = axis == 0 ? Point{double(s), 0} : Point{0, double(s)};
  const double ca = det2(e, b) / d, cb = det2(a, e) / d;
  return ca >= -1e-12 && cb >= -1e-12;
}

namespace {
constexpr double kParallel = 1e-12;

// Axis index when n is (numerically) +-e_axis, else -1; sign in *s.
int axis_of(const HalfPlane& h, int* s) {
  if (std::abs(h.n2) <= kParallel) {
    *s = h.n1 > 0 ? 1 : -1;
    return 0;
  }
  if (std::abs(h.n1) <= kParallel) {
    *s = h.n2 > 0 ? 1 : -1;
    return 1;
  }
  return -1;
}

// Bound s*u_axis <= off applied to r.
void clip(Rect& r, int axis, int s, double off) {
  Interval& side = r.side(axis);
  if (s > 0) side.hi = std::min(side.hi, off);
  else side.lo = std::max(side.lo, -off);
}
}  // namespace

Rect hull_two_halfplanes(const HalfPlane& h, const HalfPlane& g) {
  Rect r = Rect::plane();
  const double d = det2(h.normal(), g.normal());
  if (std::abs(d) > kParallel) {
    const Point w{(-h.alpha * g.n2 + g.alpha * h.n2) / d, (-h.n1 * g.alpha + g.n1 * h.alpha) / d};
    for (int axis = 0; axis < 2; ++axis)
      for (int s = -1; s <= 1; s += 2)
        if (axis_in_cone(h.normal(), g.normal(), axis, s)) clip(r, axis, s, s * w[axis]);
    return r;
  }
  const bool same = h.n1 * g.n1 + h.n2 * g.n2 > 0;
  if (!same) {
    // Strip alpha_g <= <n_h,u> <= -alpha_h (g's normal is -n_h).
    const double gap = h.alpha + g.alpha;
    if (gap > 1e-9 * (1.0 + std::abs(h.alpha) + std::abs(g.alpha))) return Rect::none();
  }
  int s = 0;
  const int axis = axis_of(h, &s);
  if (axis < 0) return r;
  if (same) {
    clip(r, axis, s, std::min(-h.alpha, -g.alpha));
  } else {
    double hi = -h.alpha, lo = g.alpha;  // lo <= s*u_axis <= hi
    if (lo > hi) lo = hi = 0.5 * (lo + hi);
    clip(r, axis, s, hi);
    clip(r, axis, -s, -lo);
  }
  return r;
}

double sin_angle(const HalfPlane& a, const HalfPlane& b) {
  return std::min(1.0, std::abs(det2(a.normal(), b.normal())));
}

std::vector<Point> vertices(const ConvexPoly& p, double tol) {
  std::vector<Point> out;
  const auto& e = p.edges;
  for (std::size_t i = 0; i < e.size(); ++i) {
    for (std::size_t j = i + 1; j < e.size(); ++j) {
      const double d = e[i].n1 * e[j].n2 - e[i].n2 * e[j].n1;
      if (std::abs(d) < 1e-12) continue;
      Point v{(-e[i].alpha * e[j].n2 + e[j].alpha * e[i].n2) / d,
              (-e[i].n1 * e[j].alpha + e[j].n1 * e[i].alpha) / d};
      bool inside = true;
      for (const HalfPlane& h : e) {
        if (h.eval(v) > tol * (1.0 + std::abs(h.alpha))) {
          inside = false;
          break;
        }
      }
      if (!inside) continue;
      bool dup = false;
      for (const Point& q : out)
        if (linf_dist(q, v) <= tol * (1.0 + linf_norm(v))) dup = true;
      if (!dup) out.push_back(v);
    }
  }
  // Order counter-clockwise around the centroid.
  if (out.size() > 2) {
    Point c{0, 0};
    for (const Point& v : out) {
      c.x1 += v.x1 / out.size();
      c.x2 += v.x2 / out.size();
    }
    std::sort(out.begin(), out.end(), [c](Point a, Point b) {
      return std::atan2(a.x2 - c.x2, a.x1 - c.x1) < std::atan2(b.x2 - c.x2, b.x1 - c.x1);
    });
  }
  return out;
}

}  // namespace lipsel
