// Acceptance gate: runs every acceptance criterion on a seeded corpus and
// prints one PASS/FAIL line per criterion. Exit status is non-zero if any
// criterion fails.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "lipsel/constants.hpp"
#include "lipsel/criteria.hpp"
#include "lipsel/generate.hpp"
#include "lipsel/oracle.hpp"
#include "lipsel/refine.hpp"
#include "lipsel/select.hpp"

using namespace lipsel;

namespace {

enum class Family { HalfPlanes, Polygons, Line1d, Fixture };

struct Case {
  std::string name;
  Family family;
  Instance inst;
  double oracle = kInf;
  double lambda_r = kInf;
  double lambda_fp = kInf;
};

using Clock = std::chrono::steady_clock;
double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

// a <= b up to tol * (1 + |b|); +inf on the right always holds.
bool le(double a, double b, double tol) {
  if (std::isinf(b) && b > 0) return true;
  if (std::isinf(a)) return a < 0;
  return a <= b + tol * (1.0 + std::abs(b));
}

bool close(double a, double b, double tol) {
  if (std::isinf(a) || std::isinf(b)) return a == b;
  return std::abs(a - b) <= tol * (1.0 + std::abs(b));
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

Instance two_point(const SetSpec& fa, const SetSpec& fb, double r) {
  Instance inst;
  inst.elements = {"a", "b"};
  inst.rho = PseudoMetric(2);
  inst.rho.set(0, 1, r);
  inst.rho.set(1, 0, r);
  inst.targets = {fa, fb};
  return inst;
}

ConvexPoly square(Point c, double r) {
  return ConvexPoly{{{1, 0, -(c.x1 + r)}, {-1, 0, c.x1 - r}, {0, 1, -(c.x2 + r)}, {0, -1, c.x2 - r}}, false};
}

std::vector<Case> build_corpus() {
  std::vector<Case> out;
  for (std::uint64_t i = 0; i < 500; ++i) {
    GenOptions opt;
    opt.duplicate_prob = i % 10 == 9 ? 0.3 : 0.0;
    out.push_back({"halfplanes/" + std::to_string(i), Family::HalfPlanes,
                   generate(CorpusKind::HalfPlanes, 2 + i % 6, i, opt)});
  }
  for (std::uint64_t i = 0; i < 100; ++i)
    out.push_back({"polygons/" + std::to_string(i), Family::Polygons, generate(CorpusKind::Polygons, 1 + i % 5, i)});
  for (std::uint64_t i = 0; i < 200; ++i)
    out.push_back({"line1d/" + std::to_string(i), Family::Line1d, generate(CorpusKind::Line1d, 1 + i % 8, i)});
  out.push_back({"INST-A", Family::Fixture, two_point(HalfPlane{1, 0, 0}, HalfPlane{-1, 0, 1}, 1.0)});
  out.push_back({"INST-B", Family::Fixture, two_point(square({0, 0}, 0.5), square({3, 0}, 0.5), 1.0)});
  return out;
}

struct Result {
  bool pass = true;
  std::string detail;
  std::vector<std::string> failures;

  void fail(const std::string& s) {
    pass = false;
    if (failures.size() < 5) failures.push_back(s);
  }
};

bool is_halfplane_case(const Case& c) { return c.inst.all_halfplanes(); }

bool verified(const Instance& inst, const Selection& sel) {
  return verify_selection(inst, sel, 1e-7 * coordinate_scale(inst)).pass;
}

// ---- criteria

Result c1_sandwich_R(std::vector<Case>& corpus) {
  Result r;
  std::size_t n = 0;
  for (Case& c : corpus) {
    if (!is_halfplane_case(c)) continue;
    ++n;
    if (!le(c.lambda_r, c.oracle, 1e-6) || !le(c.oracle, 5.0 * c.lambda_r, 1e-6))
      r.fail(c.name + ": Lambda_R=" + fmt(c.lambda_r) + " |F|=" + fmt(c.oracle));
  }
  r.detail = std::to_string(n) + " half-plane instances";
  return r;
}

Result c2_sandwich_FP(std::vector<Case>& corpus) {
  Result r;
  std::size_t n = 0;
  for (Case& c : corpus) {
    if (c.family == Family::Line1d) continue;
    ++n;
    if (!le(c.lambda_fp, c.oracle, 1e-6) || !le(c.oracle, 3.0 * c.lambda_fp, 1e-6))
      r.fail(c.name + ": Lambda_FP=" + fmt(c.lambda_fp) + " |F|=" + fmt(c.oracle));
    if (!le(c.lambda_r, c.lambda_fp, 1e-6)) r.fail(c.name + ": chain Lambda_R=" + fmt(c.lambda_r) + " > Lambda_FP=" + fmt(c.lambda_fp));
  }
  r.detail = std::to_string(n) + " instances";
  return r;
}

Result c3_driver_R(std::vector<Case>& corpus) {
  Result r;
  std::size_t n = 0;
  double worst = 0.0;
  for (Case& c : corpus) {
    if (c.family == Family::Line1d || std::isinf(c.lambda_r)) continue;
    ++n;
    const Outcome o = driver_lambdaR(c.inst);
    if (!o.success()) {
      r.fail(c.name + ": NoGo(" + to_string(o.nogo->stage) + ")");
      continue;
    }
    const double s = o.selection->seminorm;
    if (!verified(c.inst, *o.selection)) r.fail(c.name + ": selection does not verify");
    if (!le(s, 5.0 * c.lambda_r, 1e-9) || !le(s, 5.0 * c.oracle, 1e-9))
      r.fail(c.name + ": seminorm " + fmt(s) + " vs 5*Lambda_R=" + fmt(5 * c.lambda_r));
    if (c.oracle > 1e-6) worst = std::max(worst, s / c.oracle);
  }
  r.detail = std::to_string(n) + " instances, max seminorm/|F| = " + fmt(worst);
  return r;
}

Result c4_driver_FP(std::vector<Case>& corpus) {
  Result r;
  std::size_t n = 0;
  double worst = 0.0;
  for (Case& c : corpus) {
    if (c.family == Family::Line1d || std::isinf(c.lambda_fp)) continue;
    ++n;
    const Outcome o = driver_lambdaFP(c.inst);
    if (!o.success()) {
      r.fail(c.name + ": NoGo(" + to_string(o.nogo->stage) + ")");
      continue;
    }
    const double s = o.selection->seminorm;
    if (!verified(c.inst, *o.selection)) r.fail(c.name + ": selection does not verify");
    if (!le(s, 3.0 * c.lambda_fp, 1e-9) || !le(s, 3.0 * c.oracle, 1e-9))
      r.fail(c.name + ": seminorm " + fmt(s) + " vs 3*Lambda_FP=" + fmt(3 * c.lambda_fp));
    if (c.oracle > 1e-6) worst = std::max(worst, s / c.oracle);
  }
  r.detail = std::to_string(n) + " instances, max seminorm/|F| = " + fmt(worst);
  return r;
}

Result c5_projection_sweep(std::vector<Case>& corpus) {
  Result r;
  static const std::vector<std::pair<double, double>> rel = {{0.5, 0.5}, {0.9, 1.2}, {1.0, 1.0}, {1.2, 0.9},
                                                             {3.0, 1.0}, {1.0, 3.0}, {2.0, 2.0}, {0.3, 3.0}};
  static const std::vector<std::pair<double, double>> abs_ = {{0.0, 0.0}, {0.5, 0.5}, {1.0, 2.0}};
  std::size_t runs = 0, nogos = 0;
  for (Case& c : corpus) {
    if (c.family == Family::Line1d) continue;
    const bool relative = std::isfinite(c.oracle) && c.oracle > 0;
    for (const auto& [f1, f2] : relative ? rel : abs_) {
      const double l1 = relative ? f1 * c.oracle : f1, l2 = relative ? f2 * c.oracle : f2;
      const Outcome o = projection_algorithm(c.inst, l1, l2);
      ++runs;
      if (!o.success()) {
        ++nogos;
        const double m = std::min(l1, l2);
        if (!(c.oracle > m * (1.0 - 1e-9) - 1e-12))
          r.fail(c.name + ": NoGo at (" + fmt(l1) + "," + fmt(l2) + ") but |F|=" + fmt(c.oracle));
        continue;
      }
      if (!verified(c.inst, *o.selection)) r.fail(c.name + ": selection does not verify");
      if (!le(o.selection->seminorm, l1 + 2.0 * l2, 1e-9))
        r.fail(c.name + ": seminorm " + fmt(o.selection->seminorm) + " > " + fmt(l1 + 2 * l2));
    }
  }
  r.detail = std::to_string(runs) + " runs, " + std::to_string(nogos) + " NoGo";
  return r;
}

Result c6_iterative(std::vector<Case>& corpus) {
  Result r;
  std::size_t n = 0, nb = 0;
  double worst = 0.0, worst_b = 0.0;
  for (Case& c : corpus) {
    if (std::isinf(c.lambda_fp)) continue;
    const double lam = c.lambda_fp;
    ++n;
    const Outcome o = iterative_algorithm(c.inst, lam);
    if (!o.success()) {
      r.fail(c.name + ": NoGo(" + to_string(o.nogo->stage) + ")");
      continue;
    }
    if (!verified(c.inst, *o.selection)) r.fail(c.name + ": selection does not verify");
    if (!le(o.selection->seminorm, 420.0 * lam, 1e-9)) r.fail(c.name + ": seminorm " + fmt(o.selection->seminorm));
    if (lam > 1e-6) worst = std::max(worst, o.selection->seminorm / lam);

    if (c.family != Family::Polygons) continue;
    ++nb;
    const Outcome b = iterative_algorithm(c.inst, lam, IterativeVariant::Bounded);
    if (!b.success()) {
      r.fail(c.name + ": bounded variant NoGo");
      continue;
    }
    if (!verified(c.inst, *b.selection)) r.fail(c.name + ": bounded selection does not verify");
    if (!le(b.selection->seminorm, 15.0 * lam, 1e-9)) r.fail(c.name + ": bounded seminorm " + fmt(b.selection->seminorm));
    if (lam > 1e-6) worst_b = std::max(worst_b, b.selection->seminorm / lam);
  }
  r.detail = std::to_string(n) + " instances (max ratio " + fmt(worst) + "), bounded variant on " + std::to_string(nb) +
             " (max ratio " + fmt(worst_b) + ")";
  return r;
}

Result c7_stabilization(std::vector<Case>& corpus) {
  Result r;
  std::size_t n = 0;
  double worst = 0.0;
  for (Case& c : corpus) {
    if (std::isinf(c.lambda_fp)) continue;
    ++n;
    const StabilizationReport s = stabilization_check(c.inst, c.lambda_fp, c.lambda_fp);
    worst = std::max(worst, s.max_deviation);
    if (s.empty_refinement) r.fail(c.name + ": empty second refinement");
    if (!(s.max_deviation <= 1e-6)) r.fail(c.name + ": deviation " + fmt(s.max_deviation));
    if (!s.membership_ok) r.fail(c.name + ": membership cross-check failed");
  }
  r.detail = std::to_string(n) + " instances, max deviation " + fmt(worst);
  return r;
}

Result c8_fast_path(std::vector<Case>& corpus) {
  Result r;
  std::size_t n = 0, sets = 0;
  double worst = 0.0;
  for (Case& c : corpus) {
    if (std::isinf(c.lambda_fp)) continue;
    const double lam = c.lambda_fp;
    const RefinementCache cache = build_cache(c.inst, lam, 3.0 * lam);
    ++n;
    for (std::size_t x = 0; x < c.inst.size(); ++x) {
      SetExpr fast = cache.f1[x];
      fast.add(cache.t1[x]);
      const SetExpr def = f2_definitional(c.inst, x, lam, 3.0 * lam);
      const double d = hausdorff(fast, def);
      ++sets;
      worst = std::max(worst, d);
      if (!(d <= 1e-9 * coordinate_scale(c.inst))) r.fail(c.name + ": element " + std::to_string(x) + " d_H=" + fmt(d));
    }
  }
  r.detail = std::to_string(n) + " instances, " + std::to_string(sets) + " sets, max d_H " + fmt(worst);
  return r;
}

Result c9_lambdaR_backends(std::vector<Case>& corpus) {
  Result r;
  std::size_t n = 0;
  double worst = 0.0;
  for (Case& c : corpus) {
    if (!is_halfplane_case(c)) continue;
    ++n;
    const double a = lambda_R_3var(c.inst).value, b = lambda_R_quadruple(c.inst).value;
    if (std::isfinite(a) && std::isfinite(b)) worst = std::max(worst, std::abs(a - b));
    if (!close(a, b, 1e-6)) r.fail(c.name + ": 3var=" + fmt(a) + " quadruple=" + fmt(b));
  }
  const Instance big = generate(CorpusKind::HalfPlanes, 100, 20240101);
  const auto t0 = Clock::now();
  const double v = lambda_R_3var(big).value;
  const double secs = seconds_since(t0);
  if (secs >= 10.0) r.fail("N=100 took " + fmt(secs) + " s");
  r.detail = std::to_string(n) + " instances, max |diff| " + fmt(worst) + "; N=100 in " + fmt(secs) + " s (value " + fmt(v) + ")";
  return r;
}

Result c10_cr1l(std::vector<Case>& corpus) {
  Result r;
  std::size_t n = 0, comparisons = 0, below = 0, above = 0;
  double worst_agree = 0.0, lo_ratio = kInf, hi_ratio = 0.0;
  for (Case& c : corpus) {
    if (!is_halfplane_case(c)) continue;
    std::size_t k = 0;
    const double agree = star2_agreement(c.inst, &k);
    comparisons += k;
    worst_agree = std::max(worst_agree, agree);
    if (!(agree <= 1e-7)) r.fail(c.name + ": star2 disagreement " + fmt(agree));
    if (!general_position(c.inst)) continue;
    ++n;
    const double ls = criterion_CR1L(c.inst).lambda_star;
    const bool lower = le(ls / std::sqrt(2.0), c.oracle, 1e-6), upper = le(c.oracle, 5.0 * ls, 1e-6);
    below += lower ? 0 : 1;
    above += upper ? 0 : 1;
    if (!lower || !upper) r.fail(c.name + ": lambda*=" + fmt(ls) + " |F|=" + fmt(c.oracle));
    if (ls > 0 && std::isfinite(ls)) {
      lo_ratio = std::min(lo_ratio, c.oracle / ls);
      hi_ratio = std::max(hi_ratio, c.oracle / ls);
    }
  }
  r.detail = std::to_string(n) + " general-position instances, |F|/lambda* in [" + fmt(lo_ratio) + ", " +
             fmt(hi_ratio) + "], lower bound violated on " + std::to_string(below) + ", upper on " +
             std::to_string(above) + "; " + std::to_string(comparisons) + " star2 comparisons, max diff " + fmt(worst_agree);
  return r;
}

Result c11_line(std::vector<Case>& corpus) {
  Result r;
  std::size_t n = 0, variants = 0;
  for (Case& c : corpus) {
    if (c.family != Family::Line1d) continue;
    ++n;
    std::vector<Interval> iv;
    for (const SetSpec& s : c.inst.targets) iv.push_back(std::get<Rect>(s).ix);
    const double lf = lambda_1d(iv, c.inst.rho);
    if (!close(lf, c.oracle, 1e-9)) r.fail(c.name + ": lambda_F=" + fmt(lf) + " |F|=" + fmt(c.oracle));
    if (std::isinf(lf)) continue;
    const Selection1d s = select_1d(iv, c.inst.rho, lf);
    if (!close(s.seminorm, lf, 1e-9)) r.fail(c.name + ": c_F seminorm " + fmt(s.seminorm) + " vs " + fmt(lf));
    for (std::size_t x = 0; x < iv.size(); ++x)
      if (!iv[x].contains(s.values[x], 1e-9 * (1 + std::abs(s.values[x])))) r.fail(c.name + ": c_F leaves F");
    // Variants need closed intervals (always) bounded on the matching side somewhere.
    const bool below = std::any_of(iv.begin(), iv.end(), [](const Interval& i) { return std::isfinite(i.lo); });
    const bool above = std::any_of(iv.begin(), iv.end(), [](const Interval& i) { return std::isfinite(i.hi); });
    for (auto [rule, ok] : {std::pair{OneDRule::Lower, below}, std::pair{OneDRule::Upper, above}}) {
      if (!ok) continue;
      ++variants;
      const Selection1d v = select_1d(iv, c.inst.rho, lf, rule);
      if (!close(v.seminorm, lf, 1e-9)) r.fail(c.name + ": variant seminorm " + fmt(v.seminorm) + " vs " + fmt(lf));
      for (std::size_t x = 0; x < iv.size(); ++x)
        if (!iv[x].contains(v.values[x], 1e-9 * (1 + std::abs(v.values[x])))) r.fail(c.name + ": variant leaves F");
    }
  }
  r.detail = std::to_string(n) + " instances, " + std::to_string(variants) + " variant runs";
  return r;
}

// ---- geometry property suites

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : g_(seed) {}
  double u(double a, double b) { return std::uniform_real_distribution<double>(a, b)(g_); }
  bool chance(double p) { return u(0, 1) < p; }
  int pick(int a, int b) { return std::uniform_int_distribution<int>(a, b)(g_); }

  Rect rect(double spread, double max_half, double open_prob) {
    const Point c{u(-spread, spread), u(-spread, spread)};
    Rect r{Interval::make(c.x1 - u(0, max_half), c.x1 + u(0, max_half)),
           Interval::make(c.x2 - u(0, max_half), c.x2 + u(0, max_half))};
    if (chance(open_prob)) r.ix.lo = -kInf;
    if (chance(open_prob)) r.ix.hi = kInf;
    if (chance(open_prob)) r.iy.lo = -kInf;
    if (chance(open_prob)) r.iy.hi = kInf;
    return r;
  }

  HalfPlane halfplane(double spread) {
    const double th = chance(0.15) ? pick(0, 7) * 0.7853981633974483 : u(0, 6.283185307179586);
    HalfPlane h{std::cos(th), std::sin(th), 0.0};
    h.alpha = -(h.n1 * u(-spread, spread) + h.n2 * u(-spread, spread));
    return h;
  }

  // Uniform point of r clipped to [-b, b]^2; nullopt if the clip is empty.
  std::optional<Point> point_in(const Rect& r, double b) {
    const Rect c = intersect(r, Rect::square({0, 0}, b));
    if (c.empty()) return std::nullopt;
    return Point{u(c.ix.lo, c.ix.hi), u(c.iy.lo, c.iy.hi)};
  }

 private:
  std::mt19937_64 g_;
};

constexpr int kTrials = 10000;
constexpr double kGeomTol = 1e-7;

bool rect_close(const Rect& a, const Rect& b, double tol) {
  if (a.empty() || b.empty()) return a.empty() == b.empty();
  for (int i = 0; i < 2; ++i) {
    const Interval &p = a.side(i), &q = b.side(i);
    if (!close(p.lo, q.lo, tol) || !close(p.hi, q.hi, tol)) return false;
  }
  return true;
}

// Residual of q from the segment [p, a] in l_inf.
double segment_residual(Point p, Point a, Point q) {
  const double dx = a.x1 - p.x1, dy = a.x2 - p.x2, len2 = dx * dx + dy * dy;
  double t = len2 > 0 ? ((q.x1 - p.x1) * dx + (q.x2 - p.x2) * dy) / len2 : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  return linf_dist(q, {p.x1 + t * dx, p.x2 + t * dy});
}

Result c12_geometry() {
  Result r;
  Sampler s(12);
  std::size_t helly_cases = 0, ab_cases = 0, hp_cases = 0, hp_attempts = 0;

  // Helly for rectangles.
  for (int t = 0; t < kTrials; ++t) {
    std::vector<Rect> fam;
    const int k = s.pick(2, 6);
    for (int i = 0; i < k; ++i) fam.push_back(s.rect(2.0, 2.5, 0.1));
    bool pairwise = true;
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j) pairwise = pairwise && !intersect(fam[i], fam[j]).empty();
    if (!pairwise) continue;
    ++helly_cases;
    if (intersect_all(fam).empty()) r.fail("Helly: pairwise-meeting family without a common point");
  }

  // Minkowski-intersection identity.
  for (int t = 0; t < kTrials; ++t) {
    std::vector<Rect> fam;
    const int k = s.pick(1, 5);
    for (int i = 0; i < k; ++i) {
      Rect q = s.rect(1.0, 3.0, 0.1);
      q = Rect{Interval::make(std::min(q.ix.lo, 0.0), std::max(q.ix.hi, 0.0)),
               Interval::make(std::min(q.iy.lo, 0.0), std::max(q.iy.hi, 0.0))};
      fam.push_back(q);
    }
    const double rad = s.chance(0.1) ? 0.0 : s.u(0, 3);
    std::vector<Rect> inflated;
    for (const Rect& q : fam) inflated.push_back(inflate(q, rad));
    if (!rect_close(inflate(intersect_all(fam), rad), intersect_all(inflated), kGeomTol))
      r.fail("Minkowski identity violated");
  }

  // Centers against Hausdorff distance.
  for (int t = 0; t < kTrials; ++t) {
    const Rect a = s.rect(3.0, 2.0, 0.0), b = s.rect(3.0, 2.0, 0.0);
    if (linf_dist(center_rect(a), center_rect(b)) > hausdorff_rect(a, b) + kGeomTol) r.fail("center vs Hausdorff");
  }

  // Projection monotonicity for nested sets A in B.
  while (ab_cases < static_cast<std::size_t>(kTrials)) {
    const HalfPlane h1 = s.halfplane(2.0);
    SetExpr a(h1), b(h1);
    const int extra = s.pick(1, 2);
    for (int i = 0; i < extra; ++i) a.add(s.halfplane(2.0));
    if (s.chance(0.3)) {
      // Parallel nested pair.
      HalfPlane wider = h1;
      wider.alpha -= s.u(0, 2);
      b = SetExpr(wider);
      a = SetExpr(h1);
    }
    if (is_empty(a)) continue;
    const std::optional<Point> pt = s.point_in(rect_hull(a), 8.0);
    if (!pt) continue;
    ++ab_cases;
    const Point pa = metric_project(*pt, a), pb = metric_project(*pt, b);
    const double da = dist_point(*pt, a), db = dist_point(*pt, b);
    if (segment_residual(pa, *pt, pb) > kGeomTol) r.fail("Pr(a,B) off the segment [Pr(a,A), a]");
    if (std::abs(linf_dist(pa, pb) - (da - db)) > kGeomTol) r.fail("projection distance identity");
  }

  // Two-half-plane projection bound.
  while (hp_cases < static_cast<std::size_t>(kTrials) && hp_attempts < 50u * kTrials) {
    ++hp_attempts;
    const HalfPlane h1 = s.halfplane(1.0), h2 = s.halfplane(1.0);
    const double delta = s.chance(0.1) ? 0.0 : s.u(0, 2);
    SetExpr s1(h1), s2(h2);
    s1.add(SetSpec(h2), delta);
    s2.add(SetSpec(h1), delta);
    if (is_empty(s1) || is_empty(s2)) continue;
    const std::optional<Point> a1 = s.point_in(rect_hull(s1), 4.0);
    std::optional<Point> a2;
    if (a1 && s.chance(0.5)) {
      // Nearby second point, to probe the 2|a1 - a2| term at small scale.
      const Point q{a1->x1 + s.u(-0.5, 0.5), a1->x2 + s.u(-0.5, 0.5)};
      if (rect_hull(s2).contains(q)) a2 = q;
    } else {
      a2 = s.point_in(rect_hull(s2), 4.0);
    }
    if (!a1 || !a2) continue;
    const Point p1 = metric_project(*a1, SetExpr(h1)), p2 = metric_project(*a2, SetExpr(h2));
    const double tol = 1e-12;
    if (inflate_halfplane(h2, delta).eval(p1) > tol || inflate_halfplane(h1, delta).eval(p2) > tol) continue;
    ++hp_cases;
    if (linf_dist(p1, p2) > 2.0 * linf_dist(*a1, *a2) + delta + kGeomTol) r.fail("two-half-plane bound");
  }
  if (hp_cases < static_cast<std::size_t>(kTrials)) r.fail("two-half-plane suite: only " + std::to_string(hp_cases) + " admissible trials");

  r.detail = "Helly " + std::to_string(helly_cases) + " qualifying of " + std::to_string(kTrials) +
             "; Minkowski, center " + std::to_string(kTrials) + " each; projection monotonicity " +
             std::to_string(ab_cases) + "; two-half-plane " + std::to_string(hp_cases) + " admissible of " +
             std::to_string(hp_attempts) + " draws";
  return r;
}

}  // namespace

int main() {
  const auto start = Clock::now();
  std::vector<Case> corpus = build_corpus();

  // Shared quantities. Criterion 1 times its own share below.
  const auto t_sand = Clock::now();
  for (Case& c : corpus) {
    c.oracle = optimal_selection(c.inst).lambda;
    if (is_halfplane_case(c)) c.lambda_r = lambda_R(c.inst).value;
  }
  const double sandwich_secs = seconds_since(t_sand);
  for (Case& c : corpus) {
    if (!is_halfplane_case(c) && c.family != Family::Line1d) c.lambda_r = lambda_R(c.inst).value;
    c.lambda_fp = lambda_FP(c.inst).value;
  }
  std::printf("corpus: %zu instances prepared in %.1f s\n", corpus.size(), seconds_since(start));

  struct Entry {
    int id;
    const char* name;
    std::function<Result()> run;
  };
  const std::vector<Entry> entries = {
      {1, "sandwich Lambda_R <= |F| <= 5 Lambda_R",
       [&] {
         Result r = c1_sandwich_R(corpus);
         if (sandwich_secs >= 60.0) r.fail("runtime " + fmt(sandwich_secs) + " s");
         r.detail += ", oracle + Lambda_R in " + fmt(sandwich_secs) + " s";
         return r;
       }},
      {2, "sandwich Lambda_FP <= |F| <= 3 Lambda_FP and Lambda_R <= Lambda_FP", [&] { return c2_sandwich_FP(corpus); }},
      {3, "driver Lambda_R: seminorm <= 5 Lambda_R", [&] { return c3_driver_R(corpus); }},
      {4, "driver Lambda_FP: seminorm <= 3 Lambda_FP", [&] { return c4_driver_FP(corpus); }},
      {5, "projection algorithm soundness over a lambda sweep", [&] { return c5_projection_sweep(corpus); }},
      {6, "iterative algorithm at Lambda_FP (420 / bounded 15)", [&] { return c6_iterative(corpus); }},
      {7, "stabilization at the third refinement", [&] { return c7_stabilization(corpus); }},
      {8, "second refinement: fast path equals definition", [&] { return c8_fast_path(corpus); }},
      {9, "Lambda_R backends agree; N=100 under 10 s", [&] { return c9_lambdaR_backends(corpus); }},
      {10, "half-plane criterion sandwich and projection form", [&] { return c10_cr1l(corpus); }},
      {11, "1-D selection optimality", [&] { return c11_line(corpus); }},
      {12, "geometry property suites", [] { return c12_geometry(); }},
  };

  int failed = 0;
  for (const Entry& e : entries) {
    const auto t0 = Clock::now();
    Result r;
    try {
      r = e.run();
    } catch (const std::exception& ex) {
      r.fail(std::string("exception: ") + ex.what());
    }
    std::printf("[%s] %2d %s: %s (%.1f s)\n", r.pass ? "PASS" : "FAIL", e.id, e.name, r.detail.c_str(), seconds_since(t0));
    for (const std::string& f : r.failures) std::printf("       %s\n", f.c_str());
    std::fflush(stdout);
    failed += r.pass ? 0 : 1;
  }
  std::printf("%d of %zu criteria passed (%.1f s)\n", static_cast<int>(entries.size()) - failed, entries.size(),
              seconds_since(start));
  return failed == 0 ? 0 : 1;
}
