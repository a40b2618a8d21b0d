#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "lipsel/geometry.hpp"

namespace lipsel {

// Symmetric matrix of distances in [0, +inf].
class PseudoMetric {
 public:
  PseudoMetric() = default;
  explicit PseudoMetric(std::size_t n) : n_(n), d_(n * n, 0.0) {}

  static PseudoMetric from_matrix(const std::vector<std::vector<double>>& m);
  enum class Norm { Linf, L2 };
  static PseudoMetric from_points(const std::vector<Point>& pts, Norm norm);

  std::size_t size() const { return n_; }
  double operator()(std::size_t i, std::size_t j) const { return d_[i * n_ + j]; }
  void set(std::size_t i, std::size_t j, double v) { d_[i * n_ + j] = v; }
  // Largest finite entry (0 if none).
  double finite_max() const;

 private:
  std::size_t n_ = 0;
  std::vector<double> d_;
};

struct Instance {
  std::vector<std::string> elements;
  PseudoMetric rho;
  std::vector<SetSpec> targets;

  std::size_t size() const { return elements.size(); }
  bool all_halfplanes() const;
  std::size_t index_of(const std::string& id) const;  // throws if unknown
};

struct Selection {
  std::vector<Point> values;
  double seminorm = 0.0;
};

struct ValidationReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

ValidationReport validate(const Instance& inst);

// Lifted space {(x,H)}: one element per edge of F(x), distance rho(x,x'),
// target H. origin[k] is the original element of lifted element k.
struct LiftedInstance {
  Instance lifted;
  std::vector<std::size_t> origin;
  std::size_t original_size = 0;
};

LiftedInstance lift_polygons(const Instance& inst);
// f(x) = f~((x,H)) for the first lifted element of each block.
std::vector<Point> push_down(const LiftedInstance& lifted, const std::vector<Point>& values);

Instance restrict(const Instance& inst, const std::vector<std::size_t>& subset);
Instance restrict(const Instance& inst, const std::vector<std::string>& ids);

// Edges describing a polyhedral target (a whole-plane rect has none).
std::vector<HalfPlane> edges_of(const SetSpec& s);
// Tolerance scale for an instance: 1 + largest finite coordinate magnitude.
double coordinate_scale(const Instance& inst);

}  // namespace lipsel
