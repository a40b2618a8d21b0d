#pragma once

#include <vector>

#include "lipsel/space.hpp"

namespace lipsel {

// Targets with every ConvexPoly replaced by its tight form, so that all
// inflations below stay in constraint form on (u1, u2).
std::vector<SetSpec> tight_targets(const Instance& inst);

// One refinement step: G[x] = intersection over z of (prev[z] + lambda rho(x,z) Q0),
// pairs at rho = +inf dropped. `prev` holds one expression per element.
SetExpr refine_step(const Instance& inst, const std::vector<SetExpr>& prev, std::size_t x, double lambda);
// All elements, each result tightened (empty results are explicit empty sets).
std::vector<SetExpr> refine_step_all(const Instance& inst, const std::vector<SetExpr>& prev, double lambda);

// F^[1][x:lambda].
SetExpr f1(const Instance& inst, std::size_t x, double lambda);
std::vector<SetExpr> f1_all(const Instance& inst, double lambda);

// rect_hull(F(x) intersect (F(x') + lambda rho(x,x') Q0)).
Rect rect_RF(const Instance& inst, std::size_t x, std::size_t xp, double lambda);
// rect_hull((F(x') + lambda rho(x',x) Q0) intersect (F(x'') + lambda rho(x'',x) Q0)).
Rect rect_WF(const Instance& inst, std::size_t x, std::size_t xp, std::size_t xpp, double lambda);

// T_F(x) = rect_hull(F^[1][x:lambda]).
Rect tau_TF(const Instance& inst, std::size_t x, double lambda);
std::vector<Rect> tau_TF_all(const Instance& inst, double lambda);

// T^[1][x] = intersection over z of (T_{F,lambda1}(z) + lambda2 rho(x,z) Q0).
Rect tau_T1(const Instance& inst, std::size_t x, double lambda1, double lambda2);
// Same from precomputed T_F rectangles.
std::vector<Rect> tau_T1_all(const Instance& inst, const std::vector<Rect>& tf, double lambda2);

// F^[2][x:lambda1,lambda2]. Uses F^[1] intersect T^[1] when lambda1 <= lambda2
// and the result is certified non-empty for every element; otherwise the
// tight definitional intersection.
SetExpr f2(const Instance& inst, std::size_t x, double lambda1, double lambda2);
std::vector<SetExpr> f2_all(const Instance& inst, double lambda1, double lambda2);
// Definitional F^[2] with each F^[1][z] kept as a nested lazy expression
// (auxiliary variables per z). Independent of the fast path.
SetExpr f2_definitional(const Instance& inst, std::size_t x, double lambda1, double lambda2);

SetExpr f3(const Instance& inst, std::size_t x, double lambda1, double lambda2, double lambda3);

// k-th successive refinement for schedule (lambda_1, ..., lambda_k); k = 0
// returns the (tight) targets.
std::vector<SetExpr> refine_k(const Instance& inst, const std::vector<double>& schedule);

struct RefinementCache {
  double lambda1 = 0.0;
  double lambda2 = 0.0;
  std::vector<SetExpr> f1;  // tight
  std::vector<Rect> tf;
  std::vector<Rect> t1;
  std::vector<SetExpr> f2;  // tight
  bool fast_path = false;   // whether f2 came from F^[1] intersect T^[1]
};

RefinementCache build_cache(const Instance& inst, double lambda1, double lambda2);

}  // namespace lipsel
