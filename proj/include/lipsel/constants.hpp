#pragma once

#include <string>
#include <vector>

#include "lipsel/space.hpp"

namespace lipsel {

struct LambdaReport {
  double value = 0.0;
  std::string method;
  // Maximizing elements: quadruple (x,x',y,y'), element x, or a subset.
  std::vector<std::size_t> witness;
  int axis = -1;  // quadruple route: coordinate of the binding LP
};

// max over ordered quadruples of the per-quadruple LP value. Accepts any
// polyhedral targets.
LambdaReport lambda_R_quadruple(const Instance& inst);
// Per-element 3-variable LP over (u1, u2, lambda); half-plane targets only.
LambdaReport lambda_R_3var(const Instance& inst);
// 3var for half-plane instances, quadruple otherwise.
LambdaReport lambda_R(const Instance& inst);
// max over subsets of size min(N, 4) of the optimal seminorm.
LambdaReport lambda_FP(const Instance& inst);

// The W-rectangle condition at lambda for all sextuples.
bool w_predicate(const Instance& inst, double lambda);
// Bisection of w_predicate on [0, 5 Lambda_R] with relative tolerance rel_tol.
LambdaReport lambda_W(const Instance& inst, double rel_tol = 1e-6);

}  // namespace lipsel
