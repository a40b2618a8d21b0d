#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <stdexcept>
#include <variant>
#include <vector>

#include "lipsel/extreal.hpp"
#include "lipsel/lp.hpp"

namespace lipsel {

struct Point {
  double x1 = 0.0;
  double x2 = 0.0;

  double operator[](int i) const { return i == 0 ? x1 : x2; }
  double& operator[](int i) { return i == 0 ? x1 : x2; }
  friend bool operator==(const Point&, const Point&) = default;
};

double linf_dist(Point p, Point q);
double linf_norm(Point p);

// Closed interval of extended reals; the empty interval is a flag, never
// lo > hi.
struct Interval {
  double lo = -kInf;
  double hi = kInf;
  bool empty = false;

  static Interval make(double lo, double hi);  // empty when lo > hi
  static Interval none() { return Interval{0.0, 0.0, true}; }
  static Interval point(double v) { return Interval{v, v, false}; }

  bool bounded() const { return !empty && is_finite(lo) && is_finite(hi); }
  bool contains(double v, double tol = 0.0) const { return !empty && v >= lo - tol && v <= hi + tol; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

Interval intersect(const Interval& a, const Interval& b);
Interval inflate(const Interval& a, double r);
// dist(A, B) with dist(empty, B) = 0.
double dist(const Interval& a, const Interval& b);

struct Rect {
  Interval ix;
  Interval iy;

  static Rect plane() { return Rect{}; }
  static Rect none() { return Rect{Interval::none(), Interval::none()}; }
  static Rect square(Point c, double r) { return Rect{Interval::make(c.x1 - r, c.x1 + r), Interval::make(c.x2 - r, c.x2 + r)}; }
  static Rect from_point(Point p) { return Rect{Interval::point(p.x1), Interval::point(p.x2)}; }

  bool empty() const { return ix.empty || iy.empty; }
  bool bounded() const { return !empty() && ix.bounded() && iy.bounded(); }
  const Interval& side(int i) const { return i == 0 ? ix : iy; }
  Interval& side(int i) { return i == 0 ? ix : iy; }
  bool contains(Point p, double tol = 0.0) const { return ix.contains(p.x1, tol) && iy.contains(p.x2, tol); }
  friend bool operator==(const Rect&, const Rect&) = default;
};

Rect intersect(const Rect& a, const Rect& b);
Rect inflate(const Rect& a, double r);
// Intersection of a family; the plane for an empty family.
Rect intersect_all(const std::vector<Rect>& rects);
// max over factors of the interval Hausdorff distance. Throws on empty input.
double hausdorff_rect(const Rect& a, const Rect& b);
// Like intersect, but a factor that is empty by at most tol*(1+|lo|+|hi|)
// collapses to its midpoint instead.
Rect intersect_tol(const Rect& a, const Rect& b, double tol);
// Midpoint of the closure. Throws for empty or unbounded input.
Point center_rect(const Rect& r);
// l_inf distance between rectangles; 0 if either is empty.
double dist(const Rect& a, const Rect& b);
// Center of the set of nearest points of r to a (a rectangle itself).
Point project_center(Point a, const Rect& r);

// {u : <n,u> + alpha <= 0} with unit outward normal n.
struct HalfPlane {
  double n1 = 1.0;
  double n2 = 0.0;
  double alpha = 0.0;

  double eval(Point u) const { return n1 * u.x1 + n2 * u.x2 + alpha; }
  double l1() const { return std::abs(n1) + std::abs(n2); }
  Point normal() const { return {n1, n2}; }
  friend bool operator==(const HalfPlane&, const HalfPlane&) = default;
};

// Normalizes (a, b, c) describing a*u1 + b*u2 + c <= 0.
HalfPlane make_halfplane(double a, double b, double c);
bool unit_normal(const HalfPlane& h, double tol = 1e-12);

// Intersection of half-planes. `tight` marks a support-function
// representation: the edge set contains every edge normal of the set plus
// each axis direction in which the set is bounded, with supporting offsets.
// Tight polygons inflate exactly by shifting offsets.
struct ConvexPoly {
  std::vector<HalfPlane> edges;
  bool tight = false;

  friend bool operator==(const ConvexPoly&, const ConvexPoly&) = default;
};

using SetSpec = std::variant<HalfPlane, Rect, ConvexPoly>;

// Lazily evaluated intersection of inflated sets: the intersection over
// terms of (S_i + r_i Q0). Terms may nest other expressions.
class SetExpr {
 public:
  struct Term {
    std::variant<HalfPlane, Rect, ConvexPoly, std::shared_ptr<const SetExpr>> set;
    double radius = 0.0;
  };

  SetExpr() = default;  // the whole plane
  explicit SetExpr(const SetSpec& s, double r = 0.0) { add(s, r); }

  static SetExpr empty_set() {
    SetExpr e;
    e.empty_ = true;
    return e;
  }

  SetExpr& add(const SetSpec& s, double r = 0.0);
  SetExpr& add(const SetExpr& e, double r = 0.0);

  bool known_empty() const { return empty_; }
  const std::vector<Term>& terms() const { return terms_; }

 private:
  std::vector<Term> terms_;
  bool empty_ = false;
};

class ContractViolation : public std::logic_error {
 public:
  explicit ContractViolation(const std::string& what) : std::logic_error(what) {}
};

SetExpr inflate(const SetSpec& s, double r);
Rect rect_hull(const SetSpec& s);

// Constraint assembly of an expression: u occupies variables 0 and 1;
// auxiliary variables follow. `empty` is set for literal empty terms.
struct Assembly {
  LinProg lp;
  bool empty = false;
};
Assembly assemble(const SetExpr& e);
// Appends the constraints of e acting on variables (i, j) of p.
bool assemble_into(const SetExpr& e, std::size_t i, std::size_t j, LinProg& p);

LpStatus optimize_over(const SetExpr& e, Point objective);
bool is_empty(const SetExpr& e);
Rect rect_hull(const SetExpr& e);
// Support value sup <n,u>; +inf if unbounded, -inf if empty.
double support(const SetExpr& e, Point n);
double dist_point(Point a, const SetExpr& e);
// inf of |p - q| over p in a, q in b; 0 if either is empty.
double dist_sets(const SetExpr& a, const SetExpr& b);
bool contains(const SetExpr& e, Point p, double tol);

// Support-function H-representation; nullopt when empty.
std::optional<ConvexPoly> materialize(const SetExpr& e);
// Single-term expression holding the materialized polygon (or empty).
SetExpr tighten(const SetExpr& e);
// Distinct unit normals appearing in e plus the four axis directions.
std::vector<Point> candidate_normals(const SetExpr& e);
// Hausdorff distance (l_inf) between polyhedral sets. 0 if both empty,
// +inf if exactly one is.
double hausdorff(const SetExpr& a, const SetExpr& b);

// Nearest point in l_inf: center of the hull of e intersect Q(a, dist(a,e)).
// Throws ContractViolation for empty e.
Point metric_project(Point a, const SetExpr& e);
// Also requires a in the closure of rect_hull(e) (within tolerance).
Point metric_project_checked(Point a, const SetExpr& e);

double det2(Point nx, Point ny);
// Closed-form rect_hull(h intersect g) for two half-planes.
Rect hull_two_halfplanes(const HalfPlane& h, const HalfPlane& g);
// Half-plane h + r Q0.
HalfPlane inflate_halfplane(const HalfPlane& h, double r);
// Whether s*e_axis lies in cone(a, b) for non-parallel a, b.
bool axis_in_cone(Point a, Point b, int axis, int s);
double sin_angle(const HalfPlane& a, const HalfPlane& b);

// Vertices of a bounded polygon (counter-clockwise not guaranteed).
std::vector<Point> vertices(const ConvexPoly& p, double tol = 1e-9);

}  // namespace lipsel
