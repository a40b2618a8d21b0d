#include <algorithm>

#include "lipsel/parallel.hpp"
#include "lipsel/refine.hpp"

namespace lipsel {
namespace {

std::vector<SetExpr> as_exprs(const std::vector<SetSpec>& specs) {
  std::vector<SetExpr> out;
  out.reserve(specs.size());
  for (const SetSpec& s : specs) out.emplace_back(s);
  return out;
}

Rect inflate_pair(const Rect& r, double lambda, double rho) { return inflate(r, ext_mul(lambda, rho)); }

// Any point of a non-empty expression.
std::optional<Point> sample_point(const SetExpr& e) {
  Rect h = rect_hull(e);
  if (h.empty()) return std::nullopt;
  if (h.bounded()) {
    const Point c = center_rect(h);
    if (contains(e, c, 1e-12 * (1.0 + linf_norm(c)))) return c;
  }
  LpStatus s = optimize_over(e, {0.0, 0.0});
  if (!s.optimal()) return std::nullopt;
  return Point{s.point[0], s.point[1]};
}

// u in F^[2][x] iff dist(u, F^[1][z]) <= lambda2 rho(x,z) for every z.
bool in_f2(const Instance& inst, const std::vector<SetExpr>& f1s, std::size_t x, Point u, double lambda2,
           double tol) {
  for (std::size_t z = 0; z < inst.size(); ++z) {
    const double r = inst.rho(x, z);
    if (!is_finite(r)) continue;
    if (dist_point(u, f1s[z]) > ext_mul(lambda2, r) + tol) return false;
  }
  return true;
}

struct F2Result {
  std::vector<SetExpr> f2;
  bool fast = false;
};

F2Result f2_from(const Instance& inst, const std::vector<SetExpr>& f1s, const std::vector<Rect>& t1, double lambda1,
                 double lambda2) {
  const std::size_t n = inst.size();
  F2Result out;
  if (lambda1 <= lambda2) {
    std::vector<SetExpr> fast(n);
    std::vector<char> ok(n, 0);
    const double tol = 1e-9 * coordinate_scale(inst);
    parallel_for(n, [&](std::size_t x) {
      if (t1[x].empty() || f1s[x].known_empty()) return;
      SetExpr e = f1s[x];
      e.add(t1[x]);
      fast[x] = tighten(e);
      if (fast[x].known_empty()) return;
      std::optional<Point> u = sample_point(fast[x]);
      ok[x] = u && in_f2(inst, f1s, x, *u, lambda2, tol);
    });
    if (std::all_of(ok.begin(), ok.end(), [](char c) { return c != 0; })) {
      out.f2 = std::move(fast);
      out.fast = true;
      return out;
    }
  }
  out.f2 = refine_step_all(inst, f1s, lambda2);
  return out;
}

}  // namespace

std::vector<SetSpec> tight_targets(const Instance& inst) {
  std::vector<SetSpec> out;
  out.reserve(inst.size());
  for (const SetSpec& s : inst.targets) {
    if (const auto* p = std::get_if<ConvexPoly>(&s); p && !p->tight) {
      std::optional<ConvexPoly> t = materialize(SetExpr(s));
      if (!t) out.push_back(Rect::none());
      else out.push_back(*t);
    } else {
      out.push_back(s);
    }
  }
  return out;
}

SetExpr refine_step(const Instance& inst, const std::vector<SetExpr>& prev, std::size_t x, double lambda) {
  SetExpr e;
  for (std::size_t z = 0; z < inst.size(); ++z) {
    const double r = inst.rho(x, z);
    if (!is_finite(r)) continue;
    e.add(prev[z], ext_mul(lambda, r));
    if (e.known_empty()) break;
  }
  return e;
}

std::vector<SetExpr> refine_step_all(const Instance& inst, const std::vector<SetExpr>& prev, double lambda) {
  std::vector<SetExpr> out(inst.size());
  parallel_for(inst.size(), [&](std::size_t x) { out[x] = tighten(refine_step(inst, prev, x, lambda)); });
  return out;
}

SetExpr f1(const Instance& inst, std::size_t x, double lambda) {
  return refine_step(inst, as_exprs(tight_targets(inst)), x, lambda);
}

std::vector<SetExpr> f1_all(const Instance& inst, double lambda) {
  return refine_step_all(inst, as_exprs(tight_targets(inst)), lambda);
}

namespace {

// rect_hull((F(a) + ra Q0) intersect (F(b) + rb Q0)); an infinite radius drops the term.
Rect hull_pair(const Instance& inst, std::size_t a, double ra, std::size_t b, double rb) {
  const auto* ha = std::get_if<HalfPlane>(&inst.targets[a]);
  const auto* hb = std::get_if<HalfPlane>(&inst.targets[b]);
  if (ha && hb && is_finite(ra) && is_finite(rb))
    return hull_two_halfplanes(inflate_halfplane(*ha, ra), inflate_halfplane(*hb, rb));
  SetExpr e;
  if (is_finite(ra)) e.add(inflate(inst.targets[a], ra));
  if (is_finite(rb)) e.add(inflate(inst.targets[b], rb));
  return rect_hull(e);
}

}  // namespace

Rect rect_RF(const Instance& inst, std::size_t x, std::size_t xp, double lambda) {
  const double r = inst.rho(x, xp);
  if (std::holds_alternative<HalfPlane>(inst.targets[x]))
    return hull_pair(inst, x, 0.0, xp, is_finite(r) ? ext_mul(lambda, r) : kInf);
  SetExpr e(inst.targets[x]);
  if (is_finite(r)) e.add(inflate(inst.targets[xp], ext_mul(lambda, r)));
  return rect_hull(e);
}

Rect rect_WF(const Instance& inst, std::size_t x, std::size_t xp, std::size_t xpp, double lambda) {
  const double r1 = inst.rho(xp, x), r2 = inst.rho(xpp, x);
  if (is_finite(r1) && is_finite(r2)) return hull_pair(inst, xp, ext_mul(lambda, r1), xpp, ext_mul(lambda, r2));
  SetExpr e;
  for (std::size_t z : {xp, xpp}) {
    const double r = inst.rho(z, x);
    if (is_finite(r)) e.add(inflate(inst.targets[z], ext_mul(lambda, r)));
  }
  return rect_hull(e);
}

Rect tau_TF(const Instance& inst, std::size_t x, double lambda) { return rect_hull(f1(inst, x, lambda)); }

std::vector<Rect> tau_TF_all(const Instance& inst, double lambda) {
  const std::vector<SetExpr> base = as_exprs(tight_targets(inst));
  std::vector<Rect> out(inst.size());
  parallel_for(inst.size(), [&](std::size_t x) { out[x] = rect_hull(refine_step(inst, base, x, lambda)); });
  return out;
}

std::vector<Rect> tau_T1_all(const Instance& inst, const std::vector<Rect>& tf, double lambda2) {
  const std::size_t n = inst.size();
  std::vector<Rect> out(n);
  for (std::size_t x = 0; x < n; ++x) {
    Rect acc = Rect::plane();
    for (std::size_t z = 0; z < n && !acc.empty(); ++z) {
      const double r = inst.rho(x, z);
      if (!is_finite(r)) continue;
      acc = tf[z].empty() ? Rect::none() : intersect_tol(acc, inflate_pair(tf[z], lambda2, r), 1e-9);
    }
    out[x] = acc;
  }
  return out;
}

Rect tau_T1(const Instance& inst, std::size_t x, double lambda1, double lambda2) {
  return tau_T1_all(inst, tau_TF_all(inst, lambda1), lambda2)[x];
}

SetExpr f2(const Instance& inst, std::size_t x, double lambda1, double lambda2) {
  return f2_all(inst, lambda1, lambda2)[x];
}

std::vector<SetExpr> f2_all(const Instance& inst, double lambda1, double lambda2) {
  return build_cache(inst, lambda1, lambda2).f2;
}

SetExpr f2_definitional(const Instance& inst, std::size_t x, double lambda1, double lambda2) {
  const std::vector<SetExpr> base = as_exprs(tight_targets(inst));
  SetExpr e;
  for (std::size_t z = 0; z < inst.size(); ++z) {
    const double r = inst.rho(x, z);
    if (!is_finite(r)) continue;
    e.add(refine_step(inst, base, z, lambda1), ext_mul(lambda2, r));
    if (e.known_empty()) break;
  }
  return e;
}

SetExpr f3(const Instance& inst, std::size_t x, double lambda1, double lambda2, double lambda3) {
  return refine_step(inst, refine_k(inst, {lambda1, lambda2}), x, lambda3);
}

std::vector<SetExpr> refine_k(const Instance& inst, const std::vector<double>& schedule) {
  std::vector<SetExpr> level = as_exprs(tight_targets(inst));
  for (double lambda : schedule) level = refine_step_all(inst, level, lambda);
  return level;
}

RefinementCache build_cache(const Instance& inst, double lambda1, double lambda2) {
  RefinementCache c;
  c.lambda1 = lambda1;
  c.lambda2 = lambda2;
  c.f1 = f1_all(inst, lambda1);
  c.tf.resize(inst.size());
  for (std::size_t x = 0; x < inst.size(); ++x) c.tf[x] = rect_hull(c.f1[x]);
  c.t1 = tau_T1_all(inst, c.tf, lambda2);
  F2Result r = f2_from(inst, c.f1, c.t1, lambda1, lambda2);
  c.f2 = std::move(r.f2);
  c.fast_path = r.fast;
  return c;
}

}  // namespace lipsel
