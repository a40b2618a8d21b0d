#include <algorithm>
#include <cmath>

#include "lipsel/geometry.hpp"

namespace lipsel {
namespace {

std::vector<double> row2(const LinProg& p, std::size_t i, std::size_t j, double ai, double aj) {
  std::vector<double> a(p.dim, 0.0);
  a[i] = ai;
  a[j] = aj;
  return a;
}

void add_halfplane(const HalfPlane& h, double r, std::size_t i, std::size_t j, LinProg& p) {
  p.add(row2(p, i, j, h.n1, h.n2), -h.alpha + r * h.l1());
}

bool add_rect(const Rect& rect, double r, std::size_t i, std::size_t j, LinProg& p) {
  if (rect.empty()) return false;
  const std::size_t idx[2] = {i, j};
  for (int k = 0; k < 2; ++k) {
    const Interval& s = rect.side(k);
    if (is_finite(s.hi)) {
      std::vector<double> a(p.dim, 0.0);
      a[idx[k]] = 1.0;
      p.add(a, s.hi + r);
    }
    if (is_finite(s.lo)) {
      std::vector<double> a(p.dim, 0.0);
      a[idx[k]] = -1.0;
      p.add(a, -(s.lo - r));
    }
  }
  return true;
}

// |u - v|_inf <= r for u = (i, j), v = (k, l).
void add_linf_ball(std::size_t i, std::size_t j, std::size_t k, std::size_t l, double r, LinProg& p) {
  const std::size_t u[2] = {i, j}, v[2] = {k, l};
  for (int c = 0; c < 2; ++c) {
    std::vector<double> a(p.dim, 0.0);
    a[u[c]] = 1.0;
    a[v[c]] = -1.0;
    p.add(a, r);
    a[u[c]] = -1.0;
    a[v[c]] = 1.0;
    p.add(a, r);
  }
}

const SetExpr::Term* single_term(const SetExpr& e) {
  if (e.known_empty() || e.terms().size() != 1) return nullptr;
  return &e.terms().front();
}

void push_normal(std::vector<Point>& out, Point n) {
  const double len = std::hypot(n.x1, n.x2);
  if (len == 0.0) return;
  n = {n.x1 / len, n.x2 / len};
  for (const Point& m : out)
    if (linf_dist(m, n) < 1e-12) return;
  out.push_back(n);
}

void collect_normals(const SetExpr& e, std::vector<Point>& out) {
  for (const SetExpr::Term& t : e.terms()) {
    if (const auto* h = std::get_if<HalfPlane>(&t.set)) {
      push_normal(out, h->normal());
    } else if (const auto* poly = std::get_if<ConvexPoly>(&t.set)) {
      for (const HalfPlane& h : poly->edges) push_normal(out, h.normal());
    } else if (const auto* sub = std::get_if<std::shared_ptr<const SetExpr>>(&t.set)) {
      collect_normals(**sub, out);
    }
  }
}

}  // namespace

bool assemble_into(const SetExpr& e, std::size_t i, std::size_t j, LinProg& p) {
  if (e.known_empty()) return false;
  for (const SetExpr::Term& t : e.terms()) {
    const double r = t.radius;
    if (const auto* h = std::get_if<HalfPlane>(&t.set)) {
      add_halfplane(*h, r, i, j, p);
    } else if (const auto* rect = std::get_if<Rect>(&t.set)) {
      if (!add_rect(*rect, r, i, j, p)) return false;
    } else if (const auto* poly = std::get_if<ConvexPoly>(&t.set)) {
      if (r == 0.0 || poly->tight) {
        for (const HalfPlane& h : poly->edges) add_halfplane(h, r, i, j, p);
      } else {
        const std::size_t k = p.new_var(), l = p.new_var();
        for (const HalfPlane& h : poly->edges) add_halfplane(h, 0.0, k, l, p);
        add_linf_ball(i, j, k, l, r, p);
      }
    } else {
      const SetExpr& sub = *std::get<std::shared_ptr<const SetExpr>>(t.set);
      if (const SetExpr::Term* one = single_term(sub)) {
        // (S + r0 Q0) + r Q0 = S + (r0 + r) Q0.
        SetExpr flat;
        std::visit(
            [&](const auto& s) {
              using T = std::decay_t<decltype(s)>;
              if constexpr (std::is_same_v<T, std::shared_ptr<const SetExpr>>) {
                flat.add(*s, one->radius + r);
              } else {
                flat.add(SetSpec(s), one->radius + r);
              }
            },
            one->set);
        if (!assemble_into(flat, i, j, p)) return false;
        continue;
      }
      const std::size_t k = p.new_var(), l = p.new_var();
      if (!assemble_into(sub, k, l, p)) return false;
      add_linf_ball(i, j, k, l, r, p);
    }
  }
  return true;
}

Assembly assemble(const SetExpr& e) {
  Assembly out;
  out.lp.dim = 2;
  out.empty = !assemble_into(e, 0, 1, out.lp);
  return out;
}

LpStatus optimize_over(const SetExpr& e, Point objective) {
  Assembly a = assemble(e);
  if (a.empty) return LpStatus{};
  a.lp.objective.assign(a.lp.dim, 0.0);
  a.lp.objective[0] = objective.x1;
  a.lp.objective[1] = objective.x2;
  return solve(a.lp);
}

bool is_empty(const SetExpr& e) {
  if (e.known_empty()) return true;
  if (const SetExpr::Term* t = single_term(e)) {
    if (const auto* poly = std::get_if<ConvexPoly>(&t->set); poly && poly->tight) return false;
    if (std::holds_alternative<HalfPlane>(t->set)) return false;
    if (const auto* rect = std::get_if<Rect>(&t->set)) return rect->empty();
  }
  return optimize_over(e, {0.0, 0.0}).infeasible();
}

double support(const SetExpr& e, Point n) {
  LpStatus s = optimize_over(e, {-n.x1, -n.x2});
  if (s.infeasible()) return -kInf;
  if (s.unbounded()) return kInf;
  return -s.value;
}

Rect rect_hull(const SetExpr& e) {
  if (e.known_empty()) return Rect::none();
  if (const SetExpr::Term* t = single_term(e)) {
    if (const auto* rect = std::get_if<Rect>(&t->set)) return inflate(*rect, t->radius);
    if (const auto* poly = std::get_if<ConvexPoly>(&t->set); poly && poly->tight) {
      Rect r = Rect::plane();
      for (const HalfPlane& h : poly->edges) {
        const double off = -h.alpha + t->radius * h.l1();
        if (h.n2 == 0.0 && h.n1 == 1.0) r.ix.hi = std::min(r.ix.hi, off);
        if (h.n2 == 0.0 && h.n1 == -1.0) r.ix.lo = std::max(r.ix.lo, -off);
        if (h.n1 == 0.0 && h.n2 == 1.0) r.iy.hi = std::min(r.iy.hi, off);
        if (h.n1 == 0.0 && h.n2 == -1.0) r.iy.lo = std::max(r.iy.lo, -off);
      }
      // A degenerate tight polygon may carry lo > hi by rounding.
      for (int i = 0; i < 2; ++i) {
        Interval& s = r.side(i);
        if (s.lo > s.hi) s.lo = s.hi = 0.5 * (s.lo + s.hi);
      }
      return r;
    }
  }
  Assembly a = assemble(e);
  if (a.empty) return Rect::none();
  Rect r;
  for (int axis = 0; axis < 2; ++axis) {
    for (int sgn = -1; sgn <= 1; sgn += 2) {
      LinProg p = a.lp;
      p.objective.assign(p.dim, 0.0);
      p.objective[axis] = sgn;
      LpStatus s = solve(p);
      if (s.infeasible()) return Rect::none();
      double v = s.unbounded() ? -kInf : s.value;
      if (sgn > 0) r.side(axis).lo = v;
      else r.side(axis).hi = -v;
    }
    Interval& s = r.side(axis);
    if (s.lo > s.hi) s.lo = s.hi = 0.5 * (s.lo + s.hi);
  }
  return r;
}

double dist_point(Point a, const SetExpr& e) {
  Assembly as = assemble(e);
  if (as.empty) return kInf;
  LinProg& p = as.lp;
  const std::size_t t = p.new_var();
  for (int c = 0; c < 2; ++c) {
    std::vector<double> row(p.dim, 0.0);
    row[c] = 1.0;
    row[t] = -1.0;
    p.add(row, a[c]);
    row[c] = -1.0;
    p.add(row, -a[c]);
  }
  p.objective.assign(p.dim, 0.0);
  p.objective[t] = 1.0;
  LpStatus s = solve(p);
  if (s.infeasible()) return kInf;
  return std::max(0.0, s.value);
}

bool contains(const SetExpr& e, Point p, double tol) { return dist_point(p, e) <= tol; }

std::vector<Point> candidate_normals(const SetExpr& e) {
  std::vector<Point> out{{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
  collect_normals(e, out);
  return out;
}

std::optional<ConvexPoly> materialize(const SetExpr& e) {
  if (e.known_empty()) return std::nullopt;
  if (const SetExpr::Term* t = single_term(e)) {
    if (const auto* poly = std::get_if<ConvexPoly>(&t->set); poly && poly->tight) {
      ConvexPoly out = *poly;
      for (HalfPlane& h : out.edges) h.alpha -= t->radius * h.l1();
      return out;
    }
  }
  Assembly a = assemble(e);
  if (a.empty) return std::nullopt;
  ConvexPoly out;
  out.tight = true;
  for (const Point& n : candidate_normals(e)) {
    LinProg p = a.lp;
    p.objective.assign(p.dim, 0.0);
    p.objective[0] = -n.x1;
    p.objective[1] = -n.x2;
    LpStatus s = solve(p);
    if (s.infeasible()) return std::nullopt;
    if (s.unbounded()) continue;
    out.edges.push_back(HalfPlane{n.x1, n.x2, s.value});
  }
  return out;
}

SetExpr tighten(const SetExpr& e) {
  std::optional<ConvexPoly> p = materialize(e);
  if (!p) return SetExpr::empty_set();
  return SetExpr(*p);
}

double dist_sets(const SetExpr& a, const SetExpr& b) {
  std::optional<ConvexPoly> tb = materialize(b);
  if (!tb) return 0.0;
  Assembly as = assemble(a);
  if (as.empty) return 0.0;
  LinProg& p = as.lp;
  const std::size_t t = p.new_var();
  // u in tb + t Q0.
  for (const HalfPlane& h : tb->edges) {
    std::vector<double> row(p.dim, 0.0);
    row[0] = h.n1;
    row[1] = h.n2;
    row[t] = -h.l1();
    p.add(row, -h.alpha);
  }
  std::vector<double> nonneg(p.dim, 0.0);
  nonneg[t] = -1.0;
  p.add(nonneg, 0.0);
  p.objective.assign(p.dim, 0.0);
  p.objective[t] = 1.0;
  LpStatus s = solve(p);
  if (s.infeasible()) return 0.0;  // a itself empty
  return std::max(0.0, s.value);
}

double hausdorff(const SetExpr& a, const SetExpr& b) {
  std::optional<ConvexPoly> ta = materialize(a), tb = materialize(b);
  if (!ta && !tb) return 0.0;
  if (!ta || !tb) return kInf;
  SetExpr ea(*ta), eb(*tb);
  std::vector<Point> normals = candidate_normals(ea);
  for (const Point& n : candidate_normals(eb)) push_normal(normals, n);
  double worst = 0.0;
  for (const Point& n : normals) {
    const double ha = support(ea, n), hb = support(eb, n);
    const double d = std::abs(ext_sub(ha, hb)) / (std::abs(n.x1) + std::abs(n.x2));
    worst = std::max(worst, d);
  }
  return worst;
}

Point metric_project(Point a, const SetExpr& e) {
  if (is_empty(e)) throw ContractViolation("metric_project: empty set");
  const double r = dist_point(a, e);
  if (r == 0.0) return a;
  for (double slack : {0.0, 1e-12, 1e-10, 1e-9}) {
    SetExpr near = e;
    near.add(Rect::square(a, r * (1.0 + slack) + slack));
    Rect h = rect_hull(near);
    if (!h.empty()) return center_rect(h);
  }
  throw LpNumericalError("metric_project: nearest-point set not found");
}

Point metric_project_checked(Point a, const SetExpr& e) {
  if (is_empty(e)) throw ContractViolation("metric_project: empty set");
  Rect h = rect_hull(e);
  const double tol = 1e-9 * (1.0 + linf_norm(a));
  if (!h.contains(a, tol)) throw ContractViolation("metric_project: point outside the rectangular hull");
  return metric_project(a, e);
}

}  // namespace lipsel
