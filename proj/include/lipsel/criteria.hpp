#pragma once

#include <string>
#include <vector>

#include "lipsel/space.hpp"

namespace lipsel {

struct Witness {
  std::string tag;                    // "star1", "star2-1", "star2-2", "cf", "dist"
  std::vector<std::size_t> elements;  // element indices in the input instance
  double ratio = 0.0;
};

struct CriterionReport {
  double lambda_star = 0.0;
  std::vector<Witness> witnesses;  // the maximizer of each condition that contributed
};

// Whether the outward normals are not contained in any closed half-plane
// through the origin (angular gaps all below pi).
bool general_position(const Instance& inst);

// Intersection of the boundary lines. Throws std::invalid_argument for
// parallel boundaries.
Point w_point(const HalfPlane& hx, const HalfPlane& hxp);

// D_i[x,x':y,y'] for i = 0 (uses the second normal coordinate) or 1.
double d_coefficient(const Instance& inst, std::size_t x, std::size_t xp, std::size_t y, std::size_t yp, int i);

// Half-plane criterion: max over the opposite-normal pairs and over the
// sign-qualified quadruples of the corresponding ratios.
CriterionReport criterion_CR1L(const Instance& inst);

// Same with the projection form of the quadruple condition (all
// non-parallel quadruples, both axes).
CriterionReport criterion_CR1L_projection(const Instance& inst);
bool criterion_star2_projection(const Instance& inst, double lambda);

// Largest |ratio - projection ratio| over quadruples meeting the sign
// conditions; `count` receives the number of comparisons.
double star2_agreement(const Instance& inst, std::size_t* count = nullptr);

// Coordinate-free criterion: max over quadruples of
// dist(F(x) cap F(x'), F(y) cap F(y')) / D~[x,x';y,y'].
CriterionReport criterion_CF(const Instance& inst);

struct KrtReport {
  CriterionReport cr1l;  // pairwise target distances plus the half-plane criterion on edges
  CriterionReport cf;    // coordinate-free criterion on edges
};
// Polygon targets: both criteria over the edge half-planes. Witness elements
// refer to the original instance.
KrtReport criterion_KRT(const Instance& inst);

bool check_R_criterion(const Instance& inst, double lambda);
bool check_intersection_criterion(const Instance& inst, double lambda);

}  // namespace lipsel
