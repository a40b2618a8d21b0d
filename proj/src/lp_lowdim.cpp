#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <random>

#include "lipsel/lp.hpp"

namespace lipsel {
namespace {

constexpr int kMaxDim = 3;
constexpr double kBox = 1e9;
constexpr double kParallel = 1e-11;
constexpr double kZeroCost = 1e-12;

struct Row {
  std::array<double, kMaxDim> a{};
  double b = 0.0;
  double tol = 0.0;
};

// Scales a row to max|a_j| = 1. Returns false for a zero row.
bool normalize(Row& r, int d) {
  double s = 0.0;
  for (int j = 0; j < d; ++j) s = std::max(s, std::abs(r.a[j]));
  if (s <= kParallel) return false;
  for (int j = 0; j < d; ++j) r.a[j] /= s;
  r.b /= s;
  r.tol = row_tolerance(r.b);
  return true;
}

std::uint64_t fnv1a(const std::vector<Row>& rows, int d) {
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&h](double v) {
    unsigned char bytes[sizeof(double)];
    std::memcpy(bytes, &v, sizeof(double));
    for (unsigned char c : bytes) {
      h ^= c;
      h *= 1099511628211ULL;
    }
  };
  mix(static_cast<double>(d));
  for (const Row& r : rows) {
    for (int j = 0; j < d; ++j) mix(r.a[j]);
    mix(r.b);
  }
  return h;
}

double dot(const Row& r, const double* v, int d) {
  double s = 0.0;
  for (int j = 0; j < d; ++j) s += r.a[j] * v[j];
  return s;
}

bool solve_1d(const std::vector<Row>& rows, std::size_t count, double c,
              double box, double* v) {
  double lo = -box, hi = box;
  double lo_tol = 0.0, hi_tol = 0.0;
  for (std::size_t i = 0; i < count; ++i) {
    const Row& r = rows[i];
    if (r.a[0] > 0) {
      double t = r.b / r.a[0];
      if (t < hi) { hi = t; hi_tol = r.tol / r.a[0]; }
    } else {
      double t = r.b / r.a[0];
      if (t > lo) { lo = t; lo_tol = -r.tol / r.a[0]; }
    }
  }
  if (lo > hi) {
    if (lo - hi > lo_tol + hi_tol) return false;
    v[0] = 0.5 * (lo + hi);
    return true;
  }
  if (c > kZeroCost) v[0] = lo;
  else if (c < -kZeroCost) v[0] = hi;
  else v[0] = std::clamp(0.0, lo, hi);
  return true;
}

// Rows are already in randomized order. On success v holds an optimum of
// min <c,u> over the rows intersected with the box |u_j| <= box.
bool seidel(const std::vector<Row>& rows, std::size_t count, int d,
            const double* c, double box, double* v) {
  if (d == 1) return solve_1d(rows, count, c[0], box, v);

  for (int j = 0; j < d; ++j) {
    if (c[j] > kZeroCost) v[j] = -box;
    else if (c[j] < -kZeroCost) v[j] = box;
    else v[j] = 0.0;
  }

  std::vector<Row> sub;
  for (std::size_t i = 0; i < count; ++i) {
    const Row& h = rows[i];
    if (dot(h, v, d) <= h.b + h.tol) continue;

    // The optimum moves onto the boundary of h: eliminate u_k.
    int k = 0;
    for (int j = 1; j < d; ++j)
      if (std::abs(h.a[j]) > std::abs(h.a[k])) k = j;
    const double ak = h.a[k];

    auto project = [&](const Row& r, Row& out) {
      double f = r.a[k] / ak;
      int jj = 0;
      for (int j = 0; j < d; ++j) {
        if (j == k) continue;
        out.a[jj++] = r.a[j] - f * h.a[j];
      }
      for (; jj < kMaxDim; ++jj) out.a[jj] = 0.0;
      out.b = r.b - f * h.b;
    };

    sub.clear();
    sub.reserve(i + 2);
    auto push = [&](const Row& r) -> bool {
      Row out;
      project(r, out);
      if (!normalize(out, d - 1)) {
        // Parallel to h: either redundant or contradicts it.
        return out.b >= -std::max(r.tol, h.tol) * 2.0;
      }
      sub.push_back(out);
      return true;
    };
    for (std::size_t q = 0; q < i; ++q)
      if (!push(rows[q])) return false;
    Row box_hi, box_lo;
    box_hi.a[k] = 1.0;
    box_hi.b = box;
    box_lo.a[k] = -1.0;
    box_lo.b = box;
    box_hi.tol = box_lo.tol = row_tolerance(box);
    if (!push(box_hi) || !push(box_lo)) return false;

    std::array<double, kMaxDim> csub{};
    {
      double f = c[k] / ak;
      int jj = 0;
      for (int j = 0; j < d; ++j) {
        if (j == k) continue;
        csub[jj++] = c[j] - f * h.a[j];
      }
    }
    std::array<double, kMaxDim> w{};
    if (!seidel(sub, sub.size(), d - 1, csub.data(), box, w.data())) return false;

    double rest = h.b;
    int jj = 0;
    for (int j = 0; j < d; ++j) {
      if (j == k) continue;
      v[j] = w[jj++];
      rest -= h.a[j] * v[j];
    }
    v[k] = rest / ak;
  }
  return true;
}

}  // namespace

LpStatus solve_lowdim(const LinProg& p) {
  const int d = static_cast<int>(p.dim);
  if (d < 1 || d > kMaxDim) throw std::invalid_argument("solve_lowdim: dim must be 1..3");

  LpStatus out;
  std::vector<Row> rows;
  rows.reserve(p.constraints.size());
  for (const LinConstraint& lc : p.constraints) {
    if (lc.a.size() > p.dim) throw std::invalid_argument("solve_lowdim: row longer than dim");
    Row r;
    for (std::size_t j = 0; j < lc.a.size(); ++j) r.a[j] = lc.a[j];
    r.b = lc.b;
    if (!normalize(r, d)) {
      if (lc.b < -row_tolerance(lc.b)) return out;  // 0 <= b < 0
      continue;
    }
    rows.push_back(r);
  }

  std::mt19937_64 rng(fnv1a(rows, d));
  for (std::size_t i = rows.size(); i > 1; --i) {
    std::size_t j = static_cast<std::size_t>(rng() % i);
    std::swap(rows[i - 1], rows[j]);
  }

  std::array<double, kMaxDim> c{};
  double cscale = 0.0;
  for (std::size_t j = 0; j < p.objective.size() && j < p.dim; ++j)
    cscale = std::max(cscale, std::abs(p.objective[j]));
  if (cscale > 0)
    for (std::size_t j = 0; j < p.objective.size() && j < p.dim; ++j) c[j] = p.objective[j] / cscale;

  std::array<double, kMaxDim> v{};
  if (!seidel(rows, rows.size(), d, c.data(), kBox, v.data())) return out;

  auto value_of = [&](const double* u) {
    double s = 0.0;
    for (std::size_t j = 0; j < p.objective.size() && j < p.dim; ++j) s += p.objective[j] * u[j];
    return s;
  };

  bool on_box = false;
  for (int j = 0; j < d; ++j)
    if (std::abs(v[j]) >= 0.5 * kBox) on_box = true;
  if (on_box && cscale > 0) {
    std::array<double, kMaxDim> v2{};
    const double big = kBox * 1e3;
    if (seidel(rows, rows.size(), d, c.data(), big, v2.data())) {
      double f1 = value_of(v.data()), f2 = value_of(v2.data());
      if (f2 < f1 - 1e-6 * (1.0 + std::abs(f1))) {
        out.kind = LpStatusKind::Unbounded;
        return out;
      }
    }
  }

  out.kind = LpStatusKind::Optimal;
  out.point.assign(v.begin(), v.begin() + d);
  out.value = value_of(v.data());
  return out;
}

}  // namespace lipsel
