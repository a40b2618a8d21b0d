#include <algorithm>
#include <cmath>

#include "lipsel/oracle.hpp"

namespace lipsel {
namespace {

// Variables: u_x = (2x, 2x+1), lambda = 2N. With `fixed` set, lambda is a
// constant and the program is a feasibility problem in 2N variables.
LinProg selection_program(const Instance& inst, std::optional<double> fixed) {
  const std::size_t n = inst.size();
  LinProg p;
  p.dim = fixed ? 2 * n : 2 * n + 1;
  const std::size_t lam = 2 * n;
  for (std::size_t x = 0; x < n; ++x) {
    for (const HalfPlane& h : edges_of(inst.targets[x])) {
      std::vector<double> a(p.dim, 0.0);
      a[2 * x] = h.n1;
      a[2 * x + 1] = h.n2;
      p.add(a, -h.alpha);
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x + 1; y < n; ++y) {
      const double r = inst.rho(x, y);
      if (!is_finite(r)) continue;
      for (int c = 0; c < 2; ++c) {
        for (int s = -1; s <= 1; s += 2) {
          std::vector<double> a(p.dim, 0.0);
          a[2 * x + c] = s;
          a[2 * y + c] = -s;
          double b = 0.0;
          if (fixed) b = ext_mul(*fixed, r);
          else a[lam] = -r;
          p.add(a, b);
        }
      }
    }
  }
  if (!fixed) {
    std::vector<double> a(p.dim, 0.0);
    a[lam] = -1.0;
    p.add(a, 0.0);
    p.objective.assign(p.dim, 0.0);
    p.objective[lam] = 1.0;
  }
  return p;
}

std::vector<Point> unpack(const std::vector<double>& v, std::size_t n) {
  std::vector<Point> out(n);
  for (std::size_t x = 0; x < n; ++x) out[x] = {v[2 * x], v[2 * x + 1]};
  return out;
}

}  // namespace

OracleResult optimal_selection(const Instance& inst) {
  OracleResult out;
  const std::size_t n = inst.size();
  if (n == 0) return out;
  LpStatus s = solve_general(selection_program(inst, std::nullopt));
  if (!s.optimal()) return out;
  out.lambda = std::max(0.0, s.value);
  Selection sel;
  sel.values = unpack(s.point, n);
  sel.seminorm = seminorm(sel.values, inst.rho, 1e-9 * coordinate_scale(inst));
  out.selection = std::move(sel);
  return out;
}

bool feasible_at(const Instance& inst, double lambda) {
  if (inst.size() == 0) return true;
  return !solve_general(selection_program(inst, lambda)).infeasible();
}

double seminorm(const std::vector<Point>& values, const PseudoMetric& rho, double tol) {
  double worst = 0.0;
  for (std::size_t x = 0; x < values.size(); ++x) {
    for (std::size_t y = x + 1; y < values.size(); ++y) {
      const double r = rho(x, y);
      if (!is_finite(r)) continue;
      const double d = linf_dist(values[x], values[y]);
      if (r == 0.0) {
        if (d > tol) return kInf;
        continue;
      }
      worst = std::max(worst, d / r);
    }
  }
  return worst;
}

VerifyReport verify_selection(const Instance& inst, const Selection& sel, double eps) {
  VerifyReport rep;
  if (sel.values.size() != inst.size()) {
    rep.recomputed_seminorm = kInf;
    return rep;
  }
  for (std::size_t x = 0; x < inst.size(); ++x) {
    const double d = dist_point(sel.values[x], SetExpr(inst.targets[x]));
    if (d > eps) rep.violations.emplace_back(x, d);
  }
  rep.recomputed_seminorm = seminorm(sel.values, inst.rho, eps);
  rep.pass = rep.violations.empty() && sel.seminorm >= rep.recomputed_seminorm - 1e-9;
  return rep;
}

double lambda_FP_brute(const Instance& inst) {
  const std::size_t n = inst.size();
  double best = 0.0;
  std::vector<std::size_t> pick;
  // Enumerate all subsets of size 1..4 in lexicographic order.
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (!pick.empty()) {
      best = std::max(best, optimal_selection(restrict(inst, pick)).lambda);
      if (std::isinf(best)) return;
    }
    if (pick.size() == 4) return;
    for (std::size_t i = start; i < n; ++i) {
      pick.push_back(i);
      self(self, i + 1);
      pick.pop_back();
      if (std::isinf(best)) return;
    }
  };
  rec(rec, 0);
  return best;
}

}  // namespace lipsel
