#include <algorithm>
#include <cmath>
#include <set>

#include "lipsel/space.hpp"

namespace lipsel {

PseudoMetric PseudoMetric::from_matrix(const std::vector<std::vector<double>>& m) {
  PseudoMetric p(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i].size() != m.size()) throw std::invalid_argument("distance matrix is not square");
    for (std::size_t j = 0; j < m.size(); ++j) p.set(i, j, m[i][j]);
  }
  return p;
}

PseudoMetric PseudoMetric::from_points(const std::vector<Point>& pts, Norm norm) {
  PseudoMetric p(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = 0; j < pts.size(); ++j) {
      const double dx = pts[i].x1 - pts[j].x1, dy = pts[i].x2 - pts[j].x2;
      p.set(i, j, norm == Norm::Linf ? std::max(std::abs(dx), std::abs(dy)) : std::hypot(dx, dy));
    }
  }
  return p;
}

double PseudoMetric::finite_max() const {
  double m = 0.0;
  for (double v : d_)
    if (is_finite(v)) m = std::max(m, v);
  return m;
}

bool Instance::all_halfplanes() const {
  return std::all_of(targets.begin(), targets.end(),
                     [](const SetSpec& s) { return std::holds_alternative<HalfPlane>(s); });
}

std::size_t Instance::index_of(const std::string& id) const {
  auto it = std::find(elements.begin(), elements.end(), id);
  if (it == elements.end()) throw std::invalid_argument("unknown element: " + id);
  return static_cast<std::size_t>(it - elements.begin());
}

ValidationReport validate(const Instance& inst) {
  ValidationReport rep;
  auto fail = [&rep](const std::string& s) { rep.violations.push_back(s); };
  const std::size_t n = inst.size();
  if (inst.rho.size() != n) fail("distance matrix size does not match element count");
  if (inst.targets.size() != n) fail("target count does not match element count");
  if (!rep.ok()) return rep;

  std::set<std::string> ids(inst.elements.begin(), inst.elements.end());
  if (ids.size() != n) fail("duplicate element identifiers");

  const auto& d = inst.rho;
  for (std::size_t i = 0; i < n; ++i) {
    if (d(i, i) != 0.0) fail("diagonal: d(" + inst.elements[i] + "," + inst.elements[i] + ") != 0");
    for (std::size_t j = 0; j < n; ++j) {
      const double v = d(i, j);
      if (std::isnan(v) || v < 0) {
        fail("non-negativity: d(" + inst.elements[i] + "," + inst.elements[j] + ")");
        continue;
      }
      if (j > i && std::abs(ext_sub(v, d(j, i))) > 1e-12 * (1.0 + (is_finite(v) ? v : 0.0)))
        fail("symmetry: d(" + inst.elements[i] + "," + inst.elements[j] + ") != d(" + inst.elements[j] + "," +
             inst.elements[i] + ")");
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const double lhs = d(i, k), rhs = d(i, j) + d(j, k);
        if (is_finite(lhs) && lhs > rhs + 1e-12 * (1.0 + rhs))
          fail("triangle: d(" + inst.elements[i] + "," + inst.elements[k] + ") > d(" + inst.elements[i] + "," +
               inst.elements[j] + ") + d(" + inst.elements[j] + "," + inst.elements[k] + ")");
        else if (!is_finite(lhs) && is_finite(rhs))
          fail("triangle: d(" + inst.elements[i] + "," + inst.elements[k] + ") = inf through " + inst.elements[j]);
      }

  for (std::size_t i = 0; i < n; ++i) {
    const std::string& id = inst.elements[i];
    if (const auto* h = std::get_if<HalfPlane>(&inst.targets[i])) {
      if (!unit_normal(*h)) fail("normal of " + id + " is not a unit vector");
      if (!std::isfinite(h->alpha)) fail("offset of " + id + " is not finite");
    } else if (const auto* r = std::get_if<Rect>(&inst.targets[i])) {
      if (r->empty()) fail("rectangle of " + id + " is empty");
    } else {
      const auto& poly = std::get<ConvexPoly>(inst.targets[i]);
      for (const HalfPlane& h : poly.edges)
        if (!unit_normal(h)) fail("edge normal of " + id + " is not a unit vector");
      if (rep.ok() && is_empty(SetExpr(inst.targets[i]))) fail("polygon of " + id + " is empty");
    }
  }
  return rep;
}

std::vector<HalfPlane> edges_of(const SetSpec& s) {
  if (const auto* h = std::get_if<HalfPlane>(&s)) return {*h};
  if (const auto* p = std::get_if<ConvexPoly>(&s)) return p->edges;
  const Rect& r = std::get<Rect>(s);
  std::vector<HalfPlane> out;
  if (is_finite(r.ix.hi)) out.push_back({1, 0, -r.ix.hi});
  if (is_finite(r.ix.lo)) out.push_back({-1, 0, r.ix.lo});
  if (is_finite(r.iy.hi)) out.push_back({0, 1, -r.iy.hi});
  if (is_finite(r.iy.lo)) out.push_back({0, -1, r.iy.lo});
  return out;
}

LiftedInstance lift_polygons(const Instance& inst) {
  LiftedInstance out;
  out.original_size = inst.size();
  std::vector<std::size_t> origin;
  for (std::size_t x = 0; x < inst.size(); ++x) {
    std::vector<HalfPlane> edges = edges_of(inst.targets[x]);
    if (edges.empty()) throw std::invalid_argument("lift_polygons: target of " + inst.elements[x] + " has no edges");
    for (std::size_t k = 0; k < edges.size(); ++k) {
      out.lifted.elements.push_back(inst.elements[x] + "#" + std::to_string(k));
      out.lifted.targets.push_back(edges[k]);
      origin.push_back(x);
    }
  }
  const std::size_t m = origin.size();
  out.lifted.rho = PseudoMetric(m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) out.lifted.rho.set(i, j, inst.rho(origin[i], origin[j]));
  out.origin = std::move(origin);
  return out;
}

std::vector<Point> push_down(const LiftedInstance& lifted, const std::vector<Point>& values) {
  if (values.size() != lifted.origin.size()) throw std::invalid_argument("push_down: size mismatch");
  std::vector<Point> out(lifted.original_size);
  std::vector<bool> seen(lifted.original_size, false);
  for (std::size_t k = 0; k < values.size(); ++k) {
    const std::size_t x = lifted.origin[k];
    if (!seen[x]) {
      out[x] = values[k];
      seen[x] = true;
    }
  }
  return out;
}

Instance restrict(const Instance& inst, const std::vector<std::size_t>& subset) {
  if (subset.empty()) throw std::invalid_argument("restrict: empty subset");
  Instance out;
  out.rho = PseudoMetric(subset.size());
  for (std::size_t a = 0; a < subset.size(); ++a) {
    if (subset[a] >= inst.size()) throw std::invalid_argument("restrict: index out of range");
    out.elements.push_back(inst.elements[subset[a]]);
    out.targets.push_back(inst.targets[subset[a]]);
    for (std::size_t b = 0; b < subset.size(); ++b) out.rho.set(a, b, inst.rho(subset[a], subset[b]));
  }
  return out;
}

Instance restrict(const Instance& inst, const std::vector<std::string>& ids) {
  std::vector<std::size_t> idx;
  for (const std::string& id : ids) idx.push_back(inst.index_of(id));
  return restrict(inst, idx);
}

double coordinate_scale(const Instance& inst) {
  double s = 0.0;
  for (const SetSpec& t : inst.targets) {
    for (const HalfPlane& h : edges_of(t)) s = std::max(s, std::abs(h.alpha));
  }
  return 1.0 + s;
}

}  // namespace lipsel
