#include <algorithm>
#include <cmath>
#include <numeric>

#include "lipsel/constants.hpp"
#include "lipsel/oracle.hpp"
#include "lipsel/parallel.hpp"
#include "lipsel/refine.hpp"
#include "lipsel/select.hpp"

namespace lipsel {

std::string to_string(NoGoStage s) {
  switch (s) {
    case NoGoStage::Refine1: return "refine1";
    case NoGoStage::Refine2: return "refine2";
    case NoGoStage::Refine3: return "refine3";
    case NoGoStage::Lambda: return "lambda";
  }
  return "?";
}

namespace {

// Component labels of the relation rho < inf.
std::vector<std::size_t> components(const PseudoMetric& rho) {
  const std::size_t n = rho.size();
  std::vector<std::size_t> label(n, n);
  std::size_t next = 0;
  for (std::size_t x = 0; x < n; ++x) {
    if (label[x] != n) continue;
    for (std::size_t y = x; y < n; ++y)
      if (label[y] == n && is_finite(rho(x, y))) label[y] = next;
    ++next;
  }
  return label;
}

double seminorm_1d(const std::vector<double>& v, const PseudoMetric& rho, double tol) {
  double worst = 0.0;
  for (std::size_t x = 0; x < v.size(); ++x)
    for (std::size_t y = x + 1; y < v.size(); ++y) {
      const double r = rho(x, y);
      if (!is_finite(r)) continue;
      const double d = std::abs(v[x] - v[y]);
      if (r == 0.0) {
        if (d > tol) return kInf;
        continue;
      }
      worst = std::max(worst, d / r);
    }
  return worst;
}

Outcome nogo(Outcome o, NoGoStage stage, std::optional<std::size_t> x) {
  o.nogo = NoGo{stage, x};
  return o;
}

double tol_for(const Instance& inst) { return 1e-9 * coordinate_scale(inst); }

Selection finish_selection(const Instance& inst, std::vector<Point> values) {
  Selection s;
  s.seminorm = seminorm(values, inst.rho, tol_for(inst));
  s.values = std::move(values);
  return s;
}

// rect_hull(e intersect Q(0, r)), widening by rounding slack if needed.
Rect clipped_hull(const SetExpr& e, double r) {
  for (double slack : {0.0, 1e-12, 1e-10, 1e-9}) {
    SetExpr c = e;
    c.add(Rect::square({0.0, 0.0}, r * (1.0 + slack) + slack));
    Rect h = rect_hull(c);
    if (!h.empty()) return h;
  }
  throw LpNumericalError("iterative_algorithm: clipped set not found");
}

}  // namespace

double lambda_1d(const std::vector<Interval>& values, const PseudoMetric& rho) {
  double best = 0.0;
  for (std::size_t x = 0; x < values.size(); ++x)
    for (std::size_t y = 0; y < values.size(); ++y) {
      if (x == y || !is_finite(rho(x, y))) continue;
      best = std::max(best, ext_div(dist(values[x], values[y]), rho(x, y)));
    }
  return best;
}

Selection1d select_1d(const std::vector<Interval>& values, const PseudoMetric& rho, double eta, OneDRule rule) {
  const std::size_t n = values.size();
  if (rho.size() != n) throw std::invalid_argument("select_1d: size mismatch");
  std::vector<double> a1(n, -kInf), b1(n, kInf);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const double r = rho(x, y);
      if (!is_finite(r)) continue;
      if (values[y].empty) throw std::invalid_argument("select_1d: empty interval");
      const double d = ext_mul(eta, r);
      a1[x] = std::max(a1[x], values[y].lo - d);
      b1[x] = std::min(b1[x], values[y].hi + d);
    }
  for (std::size_t x = 0; x < n; ++x)
    if (a1[x] > b1[x] + 1e-9 * (1.0 + std::abs(a1[x]) + std::abs(b1[x])))
      throw std::invalid_argument("select_1d: eta is below the two-point requirement");

  const std::vector<std::size_t> comp = components(rho);
  const std::size_t ncomp = n == 0 ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
  Selection1d out;
  out.values.assign(n, 0.0);
  for (std::size_t c = 0; c < ncomp; ++c) {
    bool lower = false, upper = false;
    double min_b = kInf, max_a = -kInf;
    for (std::size_t x = 0; x < n; ++x) {
      if (comp[x] != c) continue;
      lower = lower || is_finite(a1[x]);
      upper = upper || is_finite(b1[x]);
      min_b = std::min(min_b, b1[x]);
      max_a = std::max(max_a, a1[x]);
    }
    for (std::size_t x = 0; x < n; ++x) {
      if (comp[x] != c) continue;
      double v;
      if (lower && upper) {
        // Within a component a finite end is finite everywhere.
        if (rule == OneDRule::Lower) v = a1[x];
        else if (rule == OneDRule::Upper) v = b1[x];
        else v = 0.5 * (a1[x] + b1[x]);
        if (a1[x] > b1[x]) v = 0.5 * (a1[x] + b1[x]);
      } else if (upper) {
        v = rule == OneDRule::Upper ? b1[x] : min_b;
      } else if (lower) {
        v = rule == OneDRule::Lower ? a1[x] : max_a;
      } else {
        v = 0.0;
      }
      out.values[x] = v;
    }
  }
  out.seminorm = seminorm_1d(out.values, rho, 1e-9);
  return out;
}

Selection select_rect(const std::vector<Rect>& values, const PseudoMetric& rho, double eta) {
  const std::size_t n = values.size();
  for (std::size_t x = 0; x < n; ++x) {
    if (values[x].empty()) throw std::invalid_argument("select_rect: empty rectangle");
    for (std::size_t y = x + 1; y < n; ++y) {
      const double r = rho(x, y);
      if (!is_finite(r)) continue;
      const double need = dist(values[x], values[y]);
      if (need > ext_mul(eta, r) + 1e-9 * (1.0 + need)) throw std::invalid_argument("select_rect: eta too small for a pair");
    }
  }
  std::vector<Interval> ix(n), iy(n);
  for (std::size_t x = 0; x < n; ++x) {
    ix[x] = values[x].ix;
    iy[x] = values[x].iy;
  }
  const Selection1d s1 = select_1d(ix, rho, eta), s2 = select_1d(iy, rho, eta);
  Selection out;
  for (std::size_t x = 0; x < n; ++x) out.values.push_back({s1.values[x], s2.values[x]});
  out.seminorm = seminorm(out.values, rho, 1e-9);
  return out;
}

Outcome projection_algorithm(const Instance& inst, double lambda1, double lambda2, const ProjectionOptions& opt) {
  Outcome o;
  o.algorithm = "projection";
  o.params = {{"lambda1", lambda1}, {"lambda2", lambda2}};
  o.seminorm_bound = lambda1 + 2.0 * lambda2;
  const std::size_t n = inst.size();

  // STEP 1-2: F^[1] and its rectangular hull.
  std::vector<SetExpr> base;
  for (const SetSpec& s : tight_targets(inst)) base.emplace_back(s);
  std::vector<SetExpr> f1s(n);
  std::vector<Rect> tf(n);
  parallel_for(n, [&](std::size_t x) {
    f1s[x] = refine_step(inst, base, x, lambda1);
    tf[x] = rect_hull(f1s[x]);
  });
  for (std::size_t x = 0; x < n; ++x)
    if (tf[x].empty()) return nogo(std::move(o), NoGoStage::Refine1, x);

  // STEP 3.
  const std::vector<Rect> t1 = tau_T1_all(inst, tf, lambda2);
  for (std::size_t x = 0; x < n; ++x)
    if (t1[x].empty()) return nogo(std::move(o), NoGoStage::Refine3, x);

  // STEP 4.
  bool plain = opt.rule == CenterRule::Plain;
  if (opt.rule == CenterRule::Auto)
    plain = std::all_of(t1.begin(), t1.end(), [](const Rect& r) { return r.bounded(); });
  std::vector<Point> g(n);
  for (std::size_t x = 0; x < n; ++x) g[x] = plain ? center_rect(t1[x]) : project_center(opt.anchor, t1[x]);

  // STEP 5.
  std::vector<Point> f(n);
  parallel_for(n, [&](std::size_t x) { f[x] = metric_project(g[x], f1s[x]); });
  o.selection = finish_selection(inst, std::move(f));
  return o;
}

Outcome iterative_algorithm(const Instance& inst, double lambda, IterativeVariant v) {
  Outcome o;
  o.algorithm = v == IterativeVariant::Clipped ? "iterative" : "iterative-bounded";
  o.params = {{"lambda", lambda}};
  o.seminorm_bound = (v == IterativeVariant::Clipped ? 420.0 : 15.0) * lambda;
  const std::size_t n = inst.size();
  const RefinementCache c = build_cache(inst, lambda, 3.0 * lambda);
  for (std::size_t x = 0; x < n; ++x)
    if (c.f1[x].known_empty()) return nogo(std::move(o), NoGoStage::Refine1, x);
  for (std::size_t x = 0; x < n; ++x)
    if (c.f2[x].known_empty()) return nogo(std::move(o), NoGoStage::Refine2, x);

  std::vector<Point> f(n);
  parallel_for(n, [&](std::size_t x) {
    if (v == IterativeVariant::Bounded) {
      const Rect h = rect_hull(c.f2[x]);
      if (!h.bounded()) throw std::invalid_argument("iterative_algorithm: bounded variant needs bounded refinements");
      f[x] = center_rect(h);
      return;
    }
    const double r = dist_point({0.0, 0.0}, c.f2[x]);
    f[x] = center_rect(clipped_hull(c.f2[x], 2.0 * r));
  });
  o.selection = finish_selection(inst, std::move(f));
  return o;
}

Outcome driver_lambdaR(const Instance& inst, double gamma) {
  if (!(gamma >= 1.0)) throw std::invalid_argument("driver_lambdaR: gamma must be >= 1");
  const LambdaReport lr = lambda_R(inst);
  if (std::isinf(lr.value)) {
    Outcome o;
    o.algorithm = "driverR";
    o.params = {{"gamma", gamma}, {"lambda_R", lr.value}};
    std::optional<std::size_t> w;
    if (!lr.witness.empty()) w = lr.witness.front();
    return nogo(std::move(o), NoGoStage::Lambda, w);
  }
  Outcome o = projection_algorithm(inst, 3.0 * gamma * lr.value, gamma * lr.value);
  o.algorithm = "driverR";
  o.params.insert(o.params.begin(), {{"gamma", gamma}, {"lambda_R", lr.value}});
  return o;
}

Outcome driver_lambdaFP(const Instance& inst, double gamma) {
  if (!(gamma >= 1.0)) throw std::invalid_argument("driver_lambdaFP: gamma must be >= 1");
  const LambdaReport lf = lambda_FP(inst);
  if (std::isinf(lf.value)) {
    Outcome o;
    o.algorithm = "driverFP";
    o.params = {{"gamma", gamma}, {"lambda_FP", lf.value}};
    std::optional<std::size_t> w;
    if (!lf.witness.empty()) w = lf.witness.front();
    return nogo(std::move(o), NoGoStage::Lambda, w);
  }
  Outcome o = projection_algorithm(inst, gamma * lf.value, gamma * lf.value);
  o.algorithm = "driverFP";
  o.params.insert(o.params.begin(), {{"gamma", gamma}, {"lambda_FP", lf.value}});
  return o;
}

Outcome polygon_driver(const Instance& inst, double m) {
  for (const SetSpec& s : inst.targets)
    if (edges_of(s).empty()) throw std::invalid_argument("polygon_driver: target without edges");
  const LiftedInstance l = lift_polygons(inst);
  Outcome lifted = projection_algorithm(l.lifted, m, m);
  Outcome o;
  o.algorithm = "polygon";
  o.params = {{"M", m}};
  o.seminorm_bound = 3.0 * m;
  if (!lifted.success()) {
    std::optional<std::size_t> w;
    if (lifted.nogo->element) w = l.origin[*lifted.nogo->element];
    return nogo(std::move(o), lifted.nogo->stage, w);
  }
  o.selection = finish_selection(inst, push_down(l, lifted.selection->values));
  return o;
}

StabilizationReport stabilization_check(const Instance& inst, double lambda, std::optional<double> lambda_fp) {
  StabilizationReport rep;
  const double lfp = lambda_fp ? *lambda_fp : lambda_FP(inst).value;
  rep.precondition_met = lambda >= lfp - 1e-9 * (1.0 + lfp);
  const std::size_t n = inst.size();
  const std::vector<SetExpr> f2 = refine_k(inst, {lambda, 3.0 * lambda});
  const std::vector<SetExpr> f3 = refine_step_all(inst, f2, 15.0 * lambda);
  rep.deviation.assign(n, 0.0);
  std::vector<char> member(n, 1);
  parallel_for(n, [&](std::size_t x) {
    rep.deviation[x] = hausdorff(f3[x], f2[x]);
    if (f2[x].known_empty()) return;
    LpStatus s = optimize_over(f2[x], {1.0, 1.0});
    if (!s.optimal()) s = optimize_over(f2[x], {0.0, 0.0});
    if (s.optimal()) member[x] = dist_point({s.point[0], s.point[1]}, f3[x]) <= 1e-6 * coordinate_scale(inst);
  });
  for (std::size_t x = 0; x < n; ++x) {
    rep.max_deviation = std::max(rep.max_deviation, rep.deviation[x]);
    rep.membership_ok = rep.membership_ok && member[x];
    rep.empty_refinement = rep.empty_refinement || f2[x].known_empty();
  }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y) {
      const double r = inst.rho(x, y);
      if (!is_finite(r) || f2[x].known_empty() || f2[y].known_empty()) continue;
      rep.max_lipschitz_excess = std::max(rep.max_lipschitz_excess, ext_sub(hausdorff(f2[x], f2[y]), 15.0 * lambda * r));
    }
  return rep;
}

}  // namespace lipsel
