#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "lipsel/space.hpp"

namespace lipsel {

struct OracleResult {
  double lambda = kInf;                // |F|_M
  std::optional<Selection> selection;  // a minimizer, absent when infeasible
};

// Exact |F|_M by one LP in 2N+1 variables.
OracleResult optimal_selection(const Instance& inst);

// Whether a selection with seminorm <= lambda exists.
bool feasible_at(const Instance& inst, double lambda);

// max ||f(x)-f(y)|| / rho(x,y) over pairs with finite rho; a rho = 0 pair
// contributes 0 if its points agree within `tol` and +inf otherwise.
double seminorm(const std::vector<Point>& values, const PseudoMetric& rho, double tol = 1e-9);

struct VerifyReport {
  std::vector<std::pair<std::size_t, double>> violations;  // (element, distance to target)
  double recomputed_seminorm = 0.0;
  bool pass = false;
};

VerifyReport verify_selection(const Instance& inst, const Selection& sel, double eps);

// max over subsets of at most four elements of optimal_selection on the
// restriction.
double lambda_FP_brute(const Instance& inst);

}  // namespace lipsel
