#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lipsel/space.hpp"

namespace lipsel {

enum class NoGoStage { Refine1, Refine2, Refine3, Lambda };
std::string to_string(NoGoStage s);

struct NoGo {
  NoGoStage stage = NoGoStage::Refine1;
  std::optional<std::size_t> element;  // first element in order whose set was empty
};

struct Outcome {
  std::string algorithm;
  std::vector<std::pair<std::string, double>> params;
  double seminorm_bound = kInf;  // guaranteed bound on Success
  std::optional<Selection> selection;
  std::optional<NoGo> nogo;

  bool success() const { return selection.has_value(); }
};

// ---- one dimension and rectangles

struct Selection1d {
  std::vector<double> values;
  double seminorm = 0.0;
};

enum class OneDRule { Center, Lower, Upper };

// sup over pairs of dist(F(x), F(y)) / rho(x, y).
double lambda_1d(const std::vector<Interval>& values, const PseudoMetric& rho);
// c_F[.:eta] (or a^[1], b^[1]) per finite-distance component; constant
// selections where the component's refined ends are all infinite on one side.
// Throws std::invalid_argument if eta is below the two-point requirement.
Selection1d select_1d(const std::vector<Interval>& values, const PseudoMetric& rho, double eta,
                      OneDRule rule = OneDRule::Center);
// Coordinatewise select_1d. Throws if some pair of rectangles is farther apart
// than eta * rho.
Selection select_rect(const std::vector<Rect>& values, const PseudoMetric& rho, double eta);

// ---- plane algorithms

enum class CenterRule {
  Auto,    // plain center when every T^[1] is bounded, else projection center
  Origin,  // center of the projection of `anchor` onto T^[1]
  Plain,   // center of T^[1] (requires bounded rectangles)
};

struct ProjectionOptions {
  CenterRule rule = CenterRule::Auto;
  Point anchor{0.0, 0.0};
};

Outcome projection_algorithm(const Instance& inst, double lambda1, double lambda2, const ProjectionOptions& opt = {});

enum class IterativeVariant { Clipped, Bounded };
Outcome iterative_algorithm(const Instance& inst, double lambda, IterativeVariant v = IterativeVariant::Clipped);

Outcome driver_lambdaR(const Instance& inst, double gamma = 1.0);
Outcome driver_lambdaFP(const Instance& inst, double gamma = 1.0);
Outcome polygon_driver(const Instance& inst, double m);

struct StabilizationReport {
  double max_deviation = 0.0;         // max_x d_H(F^[3][x], F^[2][x])
  std::vector<double> deviation;      // per element
  double max_lipschitz_excess = 0.0;  // max over pairs of d_H(F^[2][x], F^[2][y]) - 15 lambda rho(x,y)
  bool membership_ok = true;          // a sample point of each F^[2][x] lies in F^[3][x]
  bool precondition_met = true;       // lambda >= Lambda^FP (within 1e-9)
  bool empty_refinement = false;      // some F^[2][x] is empty
};

// With lambda_fp unset, Lambda^FP is computed here.
StabilizationReport stabilization_check(const Instance& inst, double lambda, std::optional<double> lambda_fp = {});

}  // namespace lipsel
