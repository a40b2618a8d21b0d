#pragma once

#include <cmath>
#include <vector>

#include "lipsel/geometry.hpp"
#include "lipsel/space.hpp"

namespace lipsel::testing {

inline Instance two_point(const SetSpec& fa, const SetSpec& fb, double r) {
  Instance inst;
  inst.elements = {"a", "b"};
  inst.rho = PseudoMetric(2);
  inst.rho.set(0, 1, r);
  inst.rho.set(1, 0, r);
  inst.targets = {fa, fb};
  return inst;
}

inline ConvexPoly square(Point c, double r) {
  return ConvexPoly{{{1, 0, -(c.x1 + r)}, {-1, 0, c.x1 - r}, {0, 1, -(c.x2 + r)}, {0, -1, c.x2 - r}}, false};
}

// F(a) = {u1 <= 0}, F(b) = {u1 >= 1}, rho(a,b) = 1.
inline Instance inst_a() { return two_point(HalfPlane{1, 0, 0}, HalfPlane{-1, 0, 1}, 1.0); }

// Unit squares (half-size 0.5) at distance 2, rho = 1.
inline Instance inst_b() { return two_point(square({0, 0}, 0.5), square({3, 0}, 0.5), 1.0); }

inline Instance from_points(const std::vector<Point>& pts, std::vector<SetSpec> targets) {
  Instance inst;
  for (std::size_t i = 0; i < pts.size(); ++i) inst.elements.push_back("p" + std::to_string(i));
  inst.rho = PseudoMetric::from_points(pts, PseudoMetric::Norm::Linf);
  inst.targets = std::move(targets);
  return inst;
}

// Same target everywhere on a line of n points.
inline Instance constant_targets(std::size_t n, const SetSpec& s) {
  std::vector<Point> pts;
  for (std::size_t i = 0; i < n; ++i) pts.push_back({double(i), 0.0});
  return from_points(pts, std::vector<SetSpec>(n, s));
}

inline double max_dist(const std::vector<Point>& a, const std::vector<Point>& b) {
  double m = 0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, linf_dist(a[i], b[i]));
  return m;
}

}  // namespace lipsel::testing
