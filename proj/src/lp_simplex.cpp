#include <algorithm>
#include <cmath>
#include <limits>

#include "lipsel/lp.hpp"

namespace lipsel {
namespace {

constexpr double kPivotEps = 1e-11;
constexpr double kCostEps = 1e-11;
constexpr double kHarris = 1e-10;
constexpr std::size_t kMaxPivots = 200000;

class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols)
      : m_(rows), n_(cols), t_((rows + 1) * (cols + 1), 0.0), basis_(rows, 0) {}

  double& at(std::size_t i, std::size_t j) { return t_[i * (n_ + 1) + j]; }
  double& rhs(std::size_t i) { return t_[i * (n_ + 1) + n_]; }
  double& cost(std::size_t j) { return t_[m_ * (n_ + 1) + j]; }
  double& cost_rhs() { return t_[m_ * (n_ + 1) + n_]; }
  std::size_t rows() const { return m_; }
  std::size_t cols() const { return n_; }
  std::vector<std::size_t>& basis() { return basis_; }
  const std::vector<std::size_t>& basis() const { return basis_; }
  double at(std::size_t i, std::size_t j) const { return t_[i * (n_ + 1) + j]; }
  double rhs(std::size_t i) const { return t_[i * (n_ + 1) + n_]; }

  void pivot(std::size_t r, std::size_t c) {
    const std::size_t w = n_ + 1;
    double* pr = &t_[r * w];
    const double inv = 1.0 / pr[c];
    for (std::size_t j = 0; j < w; ++j) pr[j] *= inv;
    pr[c] = 1.0;
    for (std::size_t i = 0; i <= m_; ++i) {
      if (i == r) continue;
      double* pi = &t_[i * w];
      const double f = pi[c];
      if (f == 0.0) continue;
      for (std::size_t j = 0; j < w; ++j) pi[j] -= f * pr[j];
      pi[c] = 0.0;
    }
    basis_[r] = c;
  }

  // Bland's rule over columns [0, limit). Returns false when unbounded.
  bool run(std::size_t limit, std::size_t& pivots) {
    for (;;) {
      std::size_t enter = limit;
      for (std::size_t j = 0; j < limit; ++j) {
        if (cost(j) < -kCostEps) { enter = j; break; }
      }
      if (enter == limit) return true;
      // Harris two-pass ratio test: the largest pivot among rows whose ratio
      // is within the feasibility slack of the minimum.
      double theta = std::numeric_limits<double>::infinity();
      for (std::size_t i = 0; i < m_; ++i) {
        const double a = at(i, enter);
        if (a > kPivotEps) theta = std::min(theta, (std::max(rhs(i), 0.0) + kHarris) / a);
      }
      std::size_t leave = m_;
      double big = 0.0;
      for (std::size_t i = 0; i < m_; ++i) {
        const double a = at(i, enter);
        if (a <= kPivotEps || std::max(rhs(i), 0.0) / a > theta) continue;
        if (a > big || (a == big && basis_[i] < basis_[leave])) {
          big = a;
          leave = i;
        }
      }
      if (leave == m_) {
        // A ray whose improvement rate is at noise level is not a ray.
        double scale = 1.0;
        for (std::size_t j = 0; j < limit; ++j) scale = std::max(scale, std::abs(cost(j)));
        if (cost(enter) < -1e-9 * scale) return false;
        cost(enter) = 0.0;
        continue;
      }
      pivot(leave, enter);
      for (std::size_t i = 0; i < m_; ++i)
        if (rhs(i) < 0.0 && rhs(i) > -kHarris) rhs(i) = 0.0;
      if (++pivots > kMaxPivots) throw LpNumericalError("simplex: pivot limit exceeded");
    }
  }

 private:
  std::size_t m_, n_;
  std::vector<double> t_;
  std::vector<std::size_t> basis_;
};

// Rebuilds every row of t as B^-1 times the initial rows, B being the
// current basis in `init`, by elimination with partial pivoting; then the
// reduced costs for cost vector c. False if the basis is singular.
bool reinvert(const Tableau& init, Tableau& t, const std::vector<double>& c) {
  const std::size_t m = t.rows(), w = t.cols() + 1;
  const std::vector<std::size_t> basis = t.basis();
  std::vector<double> bm(m * m), rows(m * w);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t k = 0; k < m; ++k) bm[i * m + k] = init.at(i, basis[k]);
    for (std::size_t j = 0; j + 1 < w; ++j) rows[i * w + j] = init.at(i, j);
    rows[i * w + w - 1] = init.rhs(i);
  }
  for (std::size_t col = 0; col < m; ++col) {
    std::size_t piv = col;
    for (std::size_t i = col + 1; i < m; ++i)
      if (std::abs(bm[i * m + col]) > std::abs(bm[piv * m + col])) piv = i;
    if (std::abs(bm[piv * m + col]) < 1e-12) return false;
    if (piv != col) {
      for (std::size_t k = 0; k < m; ++k) std::swap(bm[col * m + k], bm[piv * m + k]);
      for (std::size_t j = 0; j < w; ++j) std::swap(rows[col * w + j], rows[piv * w + j]);
    }
    const double inv = 1.0 / bm[col * m + col];
    for (std::size_t k = 0; k < m; ++k) bm[col * m + k] *= inv;
    for (std::size_t j = 0; j < w; ++j) rows[col * w + j] *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == col) continue;
      const double f = bm[i * m + col];
      if (f == 0.0) continue;
      for (std::size_t k = 0; k < m; ++k) bm[i * m + k] -= f * bm[col * m + k];
      for (std::size_t j = 0; j < w; ++j) rows[i * w + j] -= f * rows[col * w + j];
    }
  }
  // Row k of `rows` now belongs to basic variable basis[k].
  for (std::size_t k = 0; k < m; ++k) {
    for (std::size_t j = 0; j + 1 < w; ++j) t.at(k, j) = rows[k * w + j];
    t.rhs(k) = rows[k * w + w - 1];
    t.at(k, basis[k]) = 1.0;
  }
  for (std::size_t j = 0; j + 1 < w; ++j) t.cost(j) = c[j];
  t.cost_rhs() = 0.0;
  for (std::size_t k = 0; k < m; ++k) {
    const double cb = c[basis[k]];
    if (cb == 0.0) continue;
    for (std::size_t j = 0; j + 1 < w; ++j) t.cost(j) -= cb * t.at(k, j);
    t.cost_rhs() -= cb * t.rhs(k);
  }
  return true;
}

// Runs the simplex over columns [0, limit), reinverting whenever a phase
// ends and resuming if the fresh tableau disagrees with the conclusion.
bool run_phase(const Tableau& init, Tableau& t, const std::vector<double>& c, std::size_t limit, std::size_t& pivots) {
  bool ok = true;
  for (int round = 0; round < 4; ++round) {
    ok = t.run(limit, pivots);
    if (!reinvert(init, t, c)) return ok;
    if (!ok) {
      if (round > 0) return false;
      continue;
    }
    bool optimal = true;
    for (std::size_t j = 0; j < limit; ++j) optimal = optimal && t.cost(j) >= -kCostEps;
    if (optimal) return true;
  }
  return ok;
}

}  // namespace

LpStatus solve_general(const LinProg& p) {
  LpStatus out;
  const std::size_t n = p.dim;

  struct NRow {
    std::vector<double> a;
    double b;
  };
  std::vector<NRow> rows;
  rows.reserve(p.constraints.size());
  for (const LinConstraint& lc : p.constraints) {
    if (lc.a.size() > n) throw std::invalid_argument("solve_general: row longer than dim");
    double s = 0.0;
    for (double v : lc.a) s = std::max(s, std::abs(v));
    if (s <= 1e-300) {
      if (lc.b < -row_tolerance(lc.b)) return out;
      continue;
    }
    NRow r{std::vector<double>(n, 0.0), lc.b / s};
    for (std::size_t j = 0; j < lc.a.size(); ++j) r.a[j] = lc.a[j] / s;
    rows.push_back(std::move(r));
  }
  const std::size_t m = rows.size();

  std::size_t n_art = 0;
  for (const NRow& r : rows)
    if (r.b < 0) ++n_art;
  // Columns: x+ (n), x- (n), slacks (m), artificials.
  const std::size_t c_slack = 2 * n, c_art = 2 * n + m, cols = c_art + n_art;
  Tableau t(m, cols);
  std::size_t art = 0;
  for (std::size_t i = 0; i < m; ++i) {
    const double sgn = rows[i].b < 0 ? -1.0 : 1.0;
    for (std::size_t j = 0; j < n; ++j) {
      t.at(i, j) = sgn * rows[i].a[j];
      t.at(i, n + j) = -sgn * rows[i].a[j];
    }
    t.at(i, c_slack + i) = sgn;
    t.rhs(i) = sgn * rows[i].b;
    if (sgn < 0) {
      t.at(i, c_art + art) = 1.0;
      t.basis()[i] = c_art + art;
      ++art;
    } else {
      t.basis()[i] = c_slack + i;
    }
  }

  const Tableau init = t;
  std::size_t pivots = 0;
  if (n_art > 0) {
    for (std::size_t j = 0; j <= cols; ++j) {
      double s = 0.0;
      for (std::size_t i = 0; i < m; ++i)
        if (t.basis()[i] >= c_art) s += (j == cols ? t.rhs(i) : t.at(i, j));
      if (j == cols) t.cost_rhs() = -s;
      else t.cost(j) = (j >= c_art) ? 0.0 : -s;
    }
    std::vector<double> c1(cols, 0.0);
    for (std::size_t j = c_art; j < cols; ++j) c1[j] = 1.0;
    run_phase(init, t, c1, cols, pivots);
    double infeas = 0.0;
    for (std::size_t i = 0; i < m; ++i)
      if (t.basis()[i] >= c_art) infeas += t.rhs(i);
    double scale = 1.0;
    for (const NRow& r : rows) scale = std::max(scale, std::abs(r.b));
    if (infeas > 1e-9 * scale) return out;
    // Drive zero-level artificials out of the basis.
    for (std::size_t i = 0; i < m; ++i) {
      if (t.basis()[i] < c_art) continue;
      std::size_t best = c_art;
      // Rows with only noise-level entries are redundant; their artificial
      // stays basic at zero.
      double big = 1e-9;
      for (std::size_t j = 0; j < c_art; ++j) {
        if (std::abs(t.at(i, j)) > big) { big = std::abs(t.at(i, j)); best = j; }
      }
      if (best < c_art) t.pivot(i, best);
    }
  }

  // Phase 2 costs.
  std::vector<double> c(cols, 0.0);
  double cscale = 0.0;
  for (std::size_t j = 0; j < p.objective.size() && j < n; ++j) cscale = std::max(cscale, std::abs(p.objective[j]));
  if (cscale > 0) {
    for (std::size_t j = 0; j < p.objective.size() && j < n; ++j) {
      c[j] = p.objective[j] / cscale;
      c[n + j] = -p.objective[j] / cscale;
    }
  }
  for (std::size_t j = 0; j < cols; ++j) t.cost(j) = c[j];
  t.cost_rhs() = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    const double cb = c[t.basis()[i]];
    if (cb == 0.0) continue;
    for (std::size_t j = 0; j < cols; ++j) t.cost(j) -= cb * t.at(i, j);
    t.cost_rhs() -= cb * t.rhs(i);
  }
  if (!run_phase(init, t, c, c_art, pivots)) {
    out.kind = LpStatusKind::Unbounded;
    return out;
  }

  std::vector<double> x(n, 0.0);
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t b = t.basis()[i];
    if (b < n) x[b] += t.rhs(i);
    else if (b < 2 * n) x[b - n] -= t.rhs(i);
  }
  out.kind = LpStatusKind::Optimal;
  out.value = 0.0;
  for (std::size_t j = 0; j < p.objective.size() && j < n; ++j) out.value += p.objective[j] * x[j];
  out.point = std::move(x);
  if (const double v = max_violation(p, out.point); v > 1e-6)
    throw LpNumericalError("simplex: returned point violates constraints by " + std::to_string(v));
  return out;
}

LpStatus solve(const LinProg& p) {
  if (p.dim >= 1 && p.dim <= 3) return solve_lowdim(p);
  return solve_general(p);
}

void LinProg::add(std::vector<double> a, double b) {
  if (std::isinf(b) && b > 0) return;
  constraints.push_back({std::move(a), b});
}

double max_violation(const LinProg& p, const std::vector<double>& u) {
  double worst = -std::numeric_limits<double>::infinity();
  for (const LinConstraint& lc : p.constraints) {
    double s = 0.0, v = 0.0;
    for (std::size_t j = 0; j < lc.a.size(); ++j) {
      s = std::max(s, std::abs(lc.a[j]));
      v += lc.a[j] * u[j];
    }
    if (s == 0.0) s = 1.0;
    worst = std::max(worst, (v - lc.b) / s);
  }
  return worst;
}

}  // namespace lipsel
