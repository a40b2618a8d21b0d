#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace lipsel {

// <a, u> <= b. `a` may be shorter than the program dimension (missing
// entries are zero).
struct LinConstraint {
  std::vector<double> a;
  double b = 0.0;
};

struct LinProg {
  std::size_t dim = 0;
  std::vector<LinConstraint> constraints;
  std::vector<double> objective;  // minimized; empty means pure feasibility

  // Appends a row; rows with b = +inf are vacuous and skipped.
  void add(std::vector<double> a, double b);
  std::size_t new_var() { return dim++; }
};

enum class LpStatusKind { Optimal, Infeasible, Unbounded };

struct LpStatus {
  LpStatusKind kind = LpStatusKind::Infeasible;
  std::vector<double> point;
  double value = 0.0;

  bool optimal() const { return kind == LpStatusKind::Optimal; }
  bool infeasible() const { return kind == LpStatusKind::Infeasible; }
  bool unbounded() const { return kind == LpStatusKind::Unbounded; }
};

class LpNumericalError : public std::runtime_error {
 public:
  explicit LpNumericalError(const std::string& what) : std::runtime_error(what) {}
};

// Feasibility slack used by both solvers for a row after normalization to
// max|a_j| = 1.
inline double row_tolerance(double b) { return 1e-9 * (1.0 + (b < 0 ? -b : b)); }

// Randomized incremental (Seidel) solver for dim <= 3.
LpStatus solve_lowdim(const LinProg& p);

// Dense two-phase simplex with Bland's rule.
LpStatus solve_general(const LinProg& p);

// solve_lowdim when dim <= 3, solve_general otherwise.
LpStatus solve(const LinProg& p);

// Largest scaled violation max_i (<a_i,u> - b_i) / max(1, max_j |a_ij|).
double max_violation(const LinProg& p, const std::vector<double>& u);

}  // namespace lipsel
