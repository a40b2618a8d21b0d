#include <cmath>
#include <random>

#include "lipsel/generate.hpp"

namespace lipsel {
namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

// std distributions are implementation-defined; draw from raw bits instead.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : g_(seed) {}
  double uniform() { return static_cast<double>(g_() >> 11) * 0x1.0p-53; }
  double uniform(double a, double b) { return a + (b - a) * uniform(); }
  std::size_t index(std::size_t n) { return static_cast<std::size_t>(g_() % n); }
  bool chance(double p) { return uniform() < p; }

 private:
  std::mt19937_64 g_;
};

std::vector<Point> scatter(Rng& rng, std::size_t n, const GenOptions& opt) {
  std::vector<Point> pts;
  for (std::size_t i = 0; i < n; ++i) {
    if (i > 0 && rng.chance(opt.duplicate_prob)) {
      pts.push_back(pts[rng.index(i)]);
      continue;
    }
    Point p;
    for (int attempt = 0; attempt < 100; ++attempt) {
      p = {rng.uniform(0, 10), rng.uniform(0, 10)};
      bool far = true;
      for (const Point& q : pts)
        if (linf_dist(p, q) < 0.5) far = false;
      if (far) break;
    }
    pts.push_back(p);
  }
  return pts;
}

HalfPlane random_halfplane(Rng& rng) {
  const double th = rng.uniform(0, kTwoPi);
  const Point c{rng.uniform(-5, 5), rng.uniform(-5, 5)};
  HalfPlane h{std::cos(th), std::sin(th), 0.0};
  h.alpha = -(h.n1 * c.x1 + h.n2 * c.x2);
  return h;
}

ConvexPoly random_polygon(Rng& rng, std::size_t max_edges) {
  const std::size_t lo = 3, hi = std::max<std::size_t>(3, max_edges);
  const std::size_t L = lo + rng.index(hi - lo + 1);
  const Point c{rng.uniform(-5, 5), rng.uniform(-5, 5)};
  const double phase = rng.uniform(0, kTwoPi);
  const double step = kTwoPi / static_cast<double>(L);
  ConvexPoly p;
  for (std::size_t k = 0; k < L; ++k) {
    // Jitter below step/2 keeps every angular gap under pi: bounded polygon.
    const double th = phase + step * static_cast<double>(k) + 0.4 * step * (rng.uniform() - 0.5);
    const double r = rng.uniform(0.3, 1.5);
    HalfPlane h{std::cos(th), std::sin(th), 0.0};
    h.alpha = -(h.n1 * c.x1 + h.n2 * c.x2) - r;
    p.edges.push_back(h);
  }
  return p;
}

Interval random_interval(Rng& rng, double open_prob, double max_width) {
  const double lo = rng.uniform(-5, 5);
  const double hi = lo + rng.uniform(0, max_width);
  return Interval{rng.chance(open_prob) ? -kInf : lo, rng.chance(open_prob) ? kInf : hi, false};
}

}  // namespace

CorpusKind corpus_kind_from_string(const std::string& s) {
  if (s == "halfplanes") return CorpusKind::HalfPlanes;
  if (s == "polygons") return CorpusKind::Polygons;
  if (s == "rects") return CorpusKind::Rects;
  if (s == "line1d") return CorpusKind::Line1d;
  throw std::invalid_argument("unknown corpus kind: " + s);
}

Instance generate(CorpusKind kind, std::size_t n, std::uint64_t seed, const GenOptions& opt) {
  if (n == 0) throw std::invalid_argument("generate: n must be positive");
  Rng rng(seed * 0x9E3779B97F4A7C15ULL + static_cast<std::uint64_t>(kind) + 1);
  Instance inst;
  for (std::size_t i = 0; i < n; ++i) inst.elements.push_back("e" + std::to_string(i));

  if (kind == CorpusKind::Line1d) {
    std::vector<Point> pts;
    for (std::size_t i = 0; i < n; ++i) {
      const double t = (i > 0 && rng.chance(opt.duplicate_prob)) ? pts[rng.index(i)].x1 : rng.uniform(0, 10);
      pts.push_back({t, 0.0});
    }
    inst.rho = PseudoMetric::from_points(pts, PseudoMetric::Norm::Linf);
    for (std::size_t i = 0; i < n; ++i) {
      Interval iv = random_interval(rng, i == 0 ? 0.0 : 0.2, 2.0);
      inst.targets.push_back(Rect{iv, Interval::point(0.0)});
    }
    return inst;
  }

  std::vector<Point> pts = scatter(rng, n, opt);
  inst.rho = PseudoMetric::from_points(pts, PseudoMetric::Norm::Linf);
  for (std::size_t i = 0; i < n; ++i) {
    switch (kind) {
      case CorpusKind::HalfPlanes:
        inst.targets.push_back(random_halfplane(rng));
        break;
      case CorpusKind::Polygons:
        inst.targets.push_back(random_polygon(rng, opt.max_edges));
        break;
      case CorpusKind::Rects:
        inst.targets.push_back(Rect{random_interval(rng, 0.15, 3.0), random_interval(rng, 0.15, 3.0)});
        break;
      case CorpusKind::Line1d:
        break;
    }
  }
  return inst;
}

}  // namespace lipsel
