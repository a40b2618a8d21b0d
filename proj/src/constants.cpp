#include <algorithm>
#include <cmath>
#include <mutex>

#include "lipsel/constants.hpp"
#include "lipsel/oracle.hpp"
#include "lipsel/parallel.hpp"
#include "lipsel/refine.hpp"

namespace lipsel {
namespace {

struct Best {
  double value = 0.0;
  std::vector<std::size_t> witness;
  int axis = -1;
};

// Keeps the maximum; ties go to the lexicographically smaller witness so the
// result does not depend on scheduling.
void merge(Best& into, const Best& b) {
  if (b.value > into.value || (b.value == into.value && !b.witness.empty() &&
                               (into.witness.empty() || b.witness < into.witness))) {
    into = b;
  }
}

void add_membership(LinProg& p, const SetSpec& s, std::size_t i, std::size_t j) {
  for (const HalfPlane& h : edges_of(s)) {
    std::vector<double> a(p.dim, 0.0);
    a[i] = h.n1;
    a[j] = h.n2;
    p.add(a, -h.alpha);
  }
}

// |u_c - v_c| <= lambda * r on the given coordinates, lambda at index 0.
void add_close(LinProg& p, std::size_t u, std::size_t v, double r) {
  if (!is_finite(r)) return;
  for (int s = -1; s <= 1; s += 2) {
    std::vector<double> a(p.dim, 0.0);
    a[u] = s;
    a[v] = -s;
    a[0] = -r;
    p.add(a, 0.0);
  }
}

// Lambda_{R,T} restricted to coordinate `axis`. Variables: lambda, A, A', B, B'.
double quadruple_axis(const Instance& inst, std::size_t x, std::size_t xp, std::size_t y, std::size_t yp, int axis) {
  LinProg p;
  p.dim = 9;
  add_membership(p, inst.targets[x], 1, 2);
  add_membership(p, inst.targets[xp], 3, 4);
  add_membership(p, inst.targets[y], 5, 6);
  add_membership(p, inst.targets[yp], 7, 8);
  for (int c = 0; c < 2; ++c) {
    add_close(p, 1 + c, 3 + c, inst.rho(x, xp));
    add_close(p, 5 + c, 7 + c, inst.rho(y, yp));
  }
  add_close(p, 1 + axis, 5 + axis, inst.rho(x, y));
  std::vector<double> nonneg(p.dim, 0.0);
  nonneg[0] = -1.0;
  p.add(nonneg, 0.0);
  p.objective.assign(p.dim, 0.0);
  p.objective[0] = 1.0;
  LpStatus s = solve_general(p);
  if (s.infeasible()) return kInf;
  if (!s.optimal()) throw LpNumericalError("lambda_R_quadruple: unexpected LP status");
  return std::max(0.0, s.value);
}

// Rows s*u_axis <= c0 + c1*lambda, before the rho(x,y) inflation.
struct BoundRow {
  int axis;
  int sign;
  double c0;
  double c1;
};

struct PairData {
  std::vector<BoundRow> rows;
};

void push_axis_rows(const HalfPlane& h, double c1, std::vector<BoundRow>& out, double c0) {
  if (std::abs(h.n2) <= 1e-12) out.push_back({0, h.n1 > 0 ? 1 : -1, c0, c1});
  else if (std::abs(h.n1) <= 1e-12) out.push_back({1, h.n2 > 0 ? 1 : -1, c0, c1});
}

// Endpoints of R_F[y,y':lambda] as linear functions of lambda. Also returns
// the lower bound on lambda for R to be non-empty (opposite normals).
PairData pair_rows(const HalfPlane& h, const HalfPlane& g, double r, double* lambda_min) {
  PairData out;
  *lambda_min = 0.0;
  if (!is_finite(r)) {
    push_axis_rows(h, 0.0, out.rows, -h.alpha);
    return out;
  }
  const double d = det2(h.normal(), g.normal());
  const double gl1 = g.l1();
  if (std::abs(d) > 1e-12) {
    // Apex of the wedge h intersect (g + delta Q0), delta = lambda * r.
    const double w0[2] = {(-h.alpha * g.n2 + g.alpha * h.n2) / d, (-h.n1 * g.alpha + g.n1 * h.alpha) / d};
    const double dw[2] = {-gl1 * h.n2 / d, gl1 * h.n1 / d};
    for (int axis = 0; axis < 2; ++axis)
      for (int s = -1; s <= 1; s += 2)
        if (axis_in_cone(h.normal(), g.normal(), axis, s))
          out.rows.push_back({axis, s, s * w0[axis], s * dw[axis] * r});
    return out;
  }
  if (h.n1 * g.n1 + h.n2 * g.n2 > 0) {
    push_axis_rows(h, 0.0, out.rows, -h.alpha);
    push_axis_rows(g, r * gl1, out.rows, -g.alpha);
    return out;
  }
  // Strip alpha_g - delta |n|_1 <= <n_h,u> <= -alpha_h.
  const double gap = h.alpha + g.alpha;
  if (r > 0) *lambda_min = std::max(0.0, gap / (r * gl1));
  else if (gap > 1e-9 * (1.0 + std::abs(h.alpha) + std::abs(g.alpha))) *lambda_min = kInf;
  push_axis_rows(h, 0.0, out.rows, -h.alpha);
  push_axis_rows(g, r * gl1, out.rows, -g.alpha);
  return out;
}

}  // namespace

LambdaReport lambda_R_quadruple(const Instance& inst) {
  const std::size_t n = inst.size();
  LambdaReport rep;
  rep.method = "R-quadruple";
  if (n == 0) return rep;
  std::vector<Best> per(n);
  parallel_for(n, [&](std::size_t x) {
    Best& b = per[x];
    for (std::size_t xp = 0; xp < n; ++xp)
      for (std::size_t y = 0; y < n; ++y)
        for (std::size_t yp = 0; yp < n; ++yp) {
          // (y,y',x,x') has the same value as (x,x',y,y').
          if (std::make_pair(y, yp) < std::make_pair(x, xp)) continue;
          for (int axis = 0; axis < 2; ++axis) {
            const double v = quadruple_axis(inst, x, xp, y, yp, axis);
            if (v > b.value || (b.witness.empty() && v == b.value)) b = Best{v, {x, xp, y, yp}, axis};
            if (std::isinf(v)) return;
          }
        }
  });
  Best best;
  for (const Best& b : per) merge(best, b);
  rep.value = best.value;
  rep.witness = best.witness;
  rep.axis = best.axis;
  return rep;
}

LambdaReport lambda_R_3var(const Instance& inst) {
  const std::size_t n = inst.size();
  LambdaReport rep;
  rep.method = "R-3var";
  if (!inst.all_halfplanes()) throw std::invalid_argument("lambda_R_3var: targets must be half-planes");
  if (n == 0) return rep;
  std::vector<HalfPlane> h(n);
  for (std::size_t x = 0; x < n; ++x) h[x] = std::get<HalfPlane>(inst.targets[x]);

  // Pair data is independent of x.
  std::vector<PairData> pairs(n * n);
  double floor = 0.0;
  std::vector<std::size_t> floor_witness;
  for (std::size_t y = 0; y < n; ++y)
    for (std::size_t yp = 0; yp < n; ++yp) {
      double lmin = 0.0;
      pairs[y * n + yp] = pair_rows(h[y], h[yp], inst.rho(y, yp), &lmin);
      if (lmin > floor) {
        floor = lmin;
        floor_witness = {y, yp};
      }
    }
  if (std::isinf(floor)) {
    rep.value = kInf;
    rep.witness = floor_witness;
    return rep;
  }

  std::vector<double> per(n, 0.0);
  parallel_for(n, [&](std::size_t x) {
    LinProg p;
    p.dim = 3;
    p.add({0, 0, -1}, -floor);
    for (std::size_t y = 0; y < n; ++y) {
      const double rxy = inst.rho(x, y);
      if (!is_finite(rxy)) continue;
      for (std::size_t yp = 0; yp < n; ++yp)
        for (const BoundRow& b : pairs[y * n + yp].rows) {
          std::vector<double> a(3, 0.0);
          a[b.axis] = b.sign;
          a[2] = -(b.c1 + rxy);
          p.add(std::move(a), b.c0);
        }
    }
    p.objective = {0, 0, 1};
    LpStatus s = solve_lowdim(p);
    if (s.infeasible()) per[x] = kInf;
    else if (s.optimal()) per[x] = std::max(0.0, s.value);
    else throw LpNumericalError("lambda_R_3var: unexpected LP status");
  });
  std::size_t arg = 0;
  for (std::size_t x = 1; x < n; ++x)
    if (per[x] > per[arg]) arg = x;
  rep.value = std::max(per[arg], floor);
  rep.witness = per[arg] >= floor ? std::vector<std::size_t>{arg} : floor_witness;
  return rep;
}

LambdaReport lambda_R(const Instance& inst) {
  return inst.all_halfplanes() ? lambda_R_3var(inst) : lambda_R_quadruple(inst);
}

LambdaReport lambda_FP(const Instance& inst) {
  const std::size_t n = inst.size();
  LambdaReport rep;
  rep.method = "FP";
  if (n == 0) return rep;
  const std::size_t k = std::min<std::size_t>(n, 4);
  std::vector<std::vector<std::size_t>> subsets;
  std::vector<std::size_t> pick(k);
  for (std::size_t i = 0; i < k; ++i) pick[i] = i;
  while (true) {
    subsets.push_back(pick);
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  std::vector<double> vals(subsets.size(), 0.0);
  parallel_for(subsets.size(), [&](std::size_t s) { vals[s] = optimal_selection(restrict(inst, subsets[s])).lambda; });
  std::size_t arg = 0;
  for (std::size_t s = 1; s < vals.size(); ++s)
    if (vals[s] > vals[arg]) arg = s;
  rep.value = vals[arg];
  rep.witness = subsets[arg];
  return rep;
}

bool w_predicate(const Instance& inst, double lambda) {
  const std::size_t n = inst.size();
  // Per x: the largest lower and smallest upper endpoint over its W family.
  // Two families meet pairwise after inflation iff these extremes do.
  std::vector<Rect> ext(n);
  std::vector<char> empty(n, 0);
  parallel_for(n, [&](std::size_t x) {
    Rect e{Interval{-kInf, kInf, false}, Interval{-kInf, kInf, false}};
    double maxlo[2] = {-kInf, -kInf}, minhi[2] = {kInf, kInf};
    for (std::size_t a = 0; a < n && !empty[x]; ++a)
      for (std::size_t b = a; b < n; ++b) {
        Rect w = rect_WF(inst, x, a, b, lambda);
        if (w.empty()) {
          empty[x] = 1;
          break;
        }
        for (int i = 0; i < 2; ++i) {
          maxlo[i] = std::max(maxlo[i], w.side(i).lo);
          minhi[i] = std::min(minhi[i], w.side(i).hi);
        }
      }
    for (int i = 0; i < 2; ++i) e.side(i) = Interval{maxlo[i], minhi[i], false};
    ext[x] = e;
  });
  if (std::any_of(empty.begin(), empty.end(), [](char c) { return c != 0; })) return false;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const double r = inst.rho(x, y);
      if (!is_finite(r)) continue;
      const double d = ext_mul(lambda, r);
      for (int i = 0; i < 2; ++i) {
        // max lo over x's family <= min hi over y's family + d.
        const double lhs = ext_sub(ext[x].side(i).lo, ext[y].side(i).hi);
        if (lhs > d + 1e-9 * (1.0 + std::abs(d) + (is_finite(ext[x].side(i).lo) ? std::abs(ext[x].side(i).lo) : 0.0)))
          return false;
      }
    }
  return true;
}

LambdaReport lambda_W(const Instance& inst, double rel_tol) {
  LambdaReport rep;
  rep.method = "W";
  if (inst.size() == 0) return rep;
  const double r = lambda_R(inst).value;
  if (std::isinf(r)) {
    rep.value = kInf;
    return rep;
  }
  if (w_predicate(inst, 0.0)) return rep;
  double lo = 0.0, hi = std::max(5.0 * r, 1e-12);
  for (int k = 0; !w_predicate(inst, hi); ++k) {
    if (k == 60) {
      rep.value = kInf;
      return rep;
    }
    lo = hi;
    hi *= 2.0;
  }
  while (hi - lo > rel_tol * hi) {
    const double mid = 0.5 * (lo + hi);
    if (w_predicate(inst, mid)) hi = mid;
    else lo = mid;
  }
  rep.value = hi;
  return rep;
}

}  // namespace lipsel
