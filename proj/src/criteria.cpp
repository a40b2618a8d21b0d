#include <algorithm>
#include <cmath>
#include <numbers>

#include "lipsel/criteria.hpp"
#include "lipsel/parallel.hpp"
#include "lipsel/refine.hpp"

namespace lipsel {
namespace {

constexpr double kSignTol = 1e-12;

std::vector<HalfPlane> halfplanes(const Instance& inst, const char* who) {
  if (!inst.all_halfplanes()) throw std::invalid_argument(std::string(who) + ": targets must be half-planes");
  std::vector<HalfPlane> h;
  for (const SetSpec& s : inst.targets) h.push_back(std::get<HalfPlane>(s));
  return h;
}

bool parallel(const HalfPlane& a, const HalfPlane& b) { return std::abs(det2(a.normal(), b.normal())) <= kSignTol; }

double ratio(double num, double den) { return ext_div(positive_part(num), den); }

void offer(std::vector<Witness>& best, const std::string& tag, std::vector<std::size_t> el, double r) {
  for (Witness& w : best) {
    if (w.tag != tag) continue;
    if (r > w.ratio) w = Witness{tag, std::move(el), r};
    return;
  }
  if (r > 0) best.push_back(Witness{tag, std::move(el), r});
}

CriterionReport finish(std::vector<Witness> w) {
  CriterionReport rep;
  w.erase(std::remove_if(w.begin(), w.end(), [](const Witness& v) { return !(v.ratio > 0); }), w.end());
  for (const Witness& v : w) rep.lambda_star = std::max(rep.lambda_star, v.ratio);
  rep.witnesses = std::move(w);
  return rep;
}

// Sign conditions for the quadruple form along axis i (0: first, 1: second).
bool sign_ok(const HalfPlane& x, const HalfPlane& xp, const HalfPlane& y, const HalfPlane& yp, int i) {
  auto c = [](const HalfPlane& h, int k) { return k == 0 ? h.n1 : h.n2; };
  const int o = 1 - i;
  return c(x, o) * c(xp, o) <= kSignTol && c(x, i) + c(xp, i) <= kSignTol && c(y, o) * c(yp, o) <= kSignTol &&
         c(y, i) + c(yp, i) >= -kSignTol;
}

void star1(const Instance& inst, const std::vector<HalfPlane>& h, std::vector<Witness>& best) {
  for (std::size_t x = 0; x < h.size(); ++x)
    for (std::size_t y = x + 1; y < h.size(); ++y) {
      if (std::abs(h[x].n1 + h[y].n1) > kSignTol || std::abs(h[x].n2 + h[y].n2) > kSignTol) continue;
      if (!is_finite(inst.rho(x, y))) continue;
      offer(best, "star1", {x, y}, ratio(h[x].alpha + h[y].alpha, inst.rho(x, y)));
    }
}

double quad_ratio(const Instance& inst, const std::vector<HalfPlane>& h, std::size_t x, std::size_t xp, std::size_t y,
                  std::size_t yp, int i) {
  const double wx = w_point(h[x], h[xp])[i], wy = w_point(h[y], h[yp])[i];
  return ratio(wx - wy, d_coefficient(inst, x, xp, y, yp, i));
}

double proj_ratio(const Instance& inst, const std::vector<HalfPlane>& h, std::size_t x, std::size_t xp, std::size_t y,
                  std::size_t yp, int i) {
  const Interval a = hull_two_halfplanes(h[x], h[xp]).side(i);
  const Interval b = hull_two_halfplanes(h[y], h[yp]).side(i);
  return ext_div(dist(a, b), d_coefficient(inst, x, xp, y, yp, i));
}

// Visits ordered quadruples with non-parallel pairs.
template <class Fn>
void for_quadruples(const std::vector<HalfPlane>& h, Fn&& fn) {
  const std::size_t n = h.size();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t xp = 0; xp < n; ++xp) {
      if (parallel(h[x], h[xp])) continue;
      for (std::size_t y = 0; y < n; ++y)
        for (std::size_t yp = 0; yp < n; ++yp) {
          if (parallel(h[y], h[yp])) continue;
          fn(x, xp, y, yp);
        }
    }
}

double diam4(const Instance& inst, std::size_t a, std::size_t b, std::size_t c, std::size_t d) {
  const std::size_t e[4] = {a, b, c, d};
  double m = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) m = std::max(m, inst.rho(e[i], e[j]));
  return m;
}

std::size_t lifted_origin(const LiftedInstance& l, std::size_t k) { return l.origin[k]; }

void map_back(CriterionReport& r, const LiftedInstance& l) {
  for (Witness& w : r.witnesses)
    for (std::size_t& e : w.elements) e = lifted_origin(l, e);
}

}  // namespace

bool general_position(const Instance& inst) {
  std::vector<double> ang;
  for (const HalfPlane& h : halfplanes(inst, "general_position")) ang.push_back(std::atan2(h.n2, h.n1));
  if (ang.size() < 3) return false;
  std::sort(ang.begin(), ang.end());
  double gap = ang.front() + 2 * std::numbers::pi - ang.back();
  for (std::size_t i = 1; i < ang.size(); ++i) gap = std::max(gap, ang[i] - ang[i - 1]);
  return gap < std::numbers::pi - 1e-12;
}

Point w_point(const HalfPlane& hx, const HalfPlane& hxp) {
  const double d = det2(hx.normal(), hxp.normal());
  if (std::abs(d) <= kSignTol) throw std::invalid_argument("w_point: parallel boundaries");
  return {(hxp.alpha * hx.n2 - hx.alpha * hxp.n2) / d, (hx.alpha * hxp.n1 - hxp.alpha * hx.n1) / d};
}

double d_coefficient(const Instance& inst, std::size_t x, std::size_t xp, std::size_t y, std::size_t yp, int i) {
  const auto& a = std::get<HalfPlane>(inst.targets[x]);
  const auto& ap = std::get<HalfPlane>(inst.targets[xp]);
  const auto& b = std::get<HalfPlane>(inst.targets[y]);
  const auto& bp = std::get<HalfPlane>(inst.targets[yp]);
  auto other = [i](const HalfPlane& h) { return std::abs(i == 0 ? h.n2 : h.n1); };
  const double t1 = ext_mul(ext_div(inst.rho(x, xp), std::abs(det2(a.normal(), ap.normal()))), std::min(other(a), other(ap)));
  const double t2 = ext_mul(ext_div(inst.rho(y, yp), std::abs(det2(b.normal(), bp.normal()))), std::min(other(b), other(bp)));
  return t1 + t2 + inst.rho(x, y);
}

CriterionReport criterion_CR1L(const Instance& inst) {
  const std::vector<HalfPlane> h = halfplanes(inst, "criterion_CR1L");
  std::vector<Witness> best;
  star1(inst, h, best);
  for_quadruples(h, [&](std::size_t x, std::size_t xp, std::size_t y, std::size_t yp) {
    for (int i = 0; i < 2; ++i) {
      if (!sign_ok(h[x], h[xp], h[y], h[yp], i)) continue;
      offer(best, i == 0 ? "star2-1" : "star2-2", {x, xp, y, yp}, quad_ratio(inst, h, x, xp, y, yp, i));
    }
  });
  return finish(std::move(best));
}

CriterionReport criterion_CR1L_projection(const Instance& inst) {
  const std::vector<HalfPlane> h = halfplanes(inst, "criterion_CR1L_projection");
  std::vector<Witness> best;
  star1(inst, h, best);
  for_quadruples(h, [&](std::size_t x, std::size_t xp, std::size_t y, std::size_t yp) {
    for (int i = 0; i < 2; ++i)
      offer(best, i == 0 ? "star2p-1" : "star2p-2", {x, xp, y, yp}, proj_ratio(inst, h, x, xp, y, yp, i));
  });
  return finish(std::move(best));
}

bool criterion_star2_projection(const Instance& inst, double lambda) {
  return criterion_CR1L_projection(inst).lambda_star <= lambda * (1.0 + 1e-9) + 1e-12;
}

double star2_agreement(const Instance& inst, std::size_t* count) {
  const std::vector<HalfPlane> h = halfplanes(inst, "star2_agreement");
  double worst = 0.0;
  std::size_t k = 0;
  for_quadruples(h, [&](std::size_t x, std::size_t xp, std::size_t y, std::size_t yp) {
    for (int i = 0; i < 2; ++i) {
      if (!sign_ok(h[x], h[xp], h[y], h[yp], i)) continue;
      ++k;
      const double a = quad_ratio(inst, h, x, xp, y, yp, i), b = proj_ratio(inst, h, x, xp, y, yp, i);
      worst = std::max(worst, std::abs(ext_sub(a, b)));
    }
  });
  if (count) *count = k;
  return worst;
}

CriterionReport criterion_CF(const Instance& inst) {
  const std::vector<HalfPlane> h = halfplanes(inst, "criterion_CF");
  const std::size_t n = h.size();
  // Unordered pairs {x, x'} with their (tight) intersections.
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t xp = x; xp < n; ++xp) pairs.emplace_back(x, xp);
  std::vector<SetExpr> cap(pairs.size());
  parallel_for(pairs.size(), [&](std::size_t k) {
    SetExpr e(h[pairs[k].first]);
    e.add(h[pairs[k].second]);
    cap[k] = tighten(e);
  });
  auto dtilde = [&](std::size_t a, std::size_t b) {
    const auto [x, xp] = pairs[a];
    const auto [y, yp] = pairs[b];
    return ext_div(inst.rho(x, xp), sin_angle(h[x], h[xp])) + ext_div(inst.rho(y, yp), sin_angle(h[y], h[yp])) +
           diam4(inst, x, xp, y, yp);
  };
  // LP round-off on touching sets must not meet a zero denominator.
  const double noise = 1e-12 * coordinate_scale(inst);
  std::vector<std::vector<Witness>> per(pairs.size());
  parallel_for(pairs.size(), [&](std::size_t a) {
    for (std::size_t b = a; b < pairs.size(); ++b) {
      if (cap[a].known_empty() || cap[b].known_empty()) continue;
      const double d = dist_sets(cap[a], cap[b]);
      if (d <= noise) continue;
      offer(per[a], "cf", {pairs[a].first, pairs[a].second, pairs[b].first, pairs[b].second}, ext_div(d, dtilde(a, b)));
    }
  });
  std::vector<Witness> best;
  for (auto& w : per)
    for (Witness& v : w) offer(best, v.tag, v.elements, v.ratio);
  return finish(std::move(best));
}

KrtReport criterion_KRT(const Instance& inst) {
  for (const SetSpec& s : inst.targets)
    if (edges_of(s).empty()) throw std::invalid_argument("criterion_KRT: target without edges");
  const LiftedInstance l = lift_polygons(inst);
  KrtReport rep;
  rep.cr1l = criterion_CR1L(l.lifted);
  map_back(rep.cr1l, l);
  std::vector<Witness> dist_w;
  for (std::size_t x = 0; x < inst.size(); ++x)
    for (std::size_t y = x + 1; y < inst.size(); ++y) {
      const double r = inst.rho(x, y);
      if (!is_finite(r)) continue;
      offer(dist_w, "dist", {x, y}, ext_div(dist_sets(SetExpr(inst.targets[x]), SetExpr(inst.targets[y])), r));
    }
  for (Witness& w : dist_w) rep.cr1l.witnesses.push_back(w);
  rep.cr1l = finish(std::move(rep.cr1l.witnesses));
  rep.cf = criterion_CF(l.lifted);
  map_back(rep.cf, l);
  return rep;
}

bool check_R_criterion(const Instance& inst, double lambda) {
  const std::size_t n = inst.size();
  std::vector<Rect> r(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t xp = 0; xp < n; ++xp) {
      r[x * n + xp] = rect_RF(inst, x, xp, lambda);
      if (r[x * n + xp].empty()) return false;
    }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const double rho = inst.rho(x, y);
      if (!is_finite(rho)) continue;
      for (std::size_t xp = 0; xp < n; ++xp)
        for (std::size_t yp = 0; yp < n; ++yp)
          if (intersect_tol(r[x * n + xp], inflate(r[y * n + yp], ext_mul(lambda, rho)), 1e-9).empty()) return false;
    }
  return true;
}

bool check_intersection_criterion(const Instance& inst, double lambda) {
  const std::size_t n = inst.size();
  std::vector<Rect> r(n * n);
  for (std::size_t y = 0; y < n; ++y)
    for (std::size_t yp = 0; yp < n; ++yp) {
      r[y * n + yp] = rect_RF(inst, y, yp, lambda);
      if (r[y * n + yp].empty()) return false;
    }
  for (std::size_t x = 0; x < n; ++x) {
    Rect acc = Rect::plane();
    for (std::size_t y = 0; y < n; ++y) {
      const double rho = inst.rho(x, y);
      if (!is_finite(rho)) continue;
      for (std::size_t yp = 0; yp < n; ++yp) acc = intersect_tol(acc, inflate(r[y * n + yp], ext_mul(lambda, rho)), 1e-9);
      if (acc.empty()) return false;
    }
  }
  return true;
}

}  // namespace lipsel
