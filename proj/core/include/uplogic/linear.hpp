#pragma once

#include <vector>

#include "uplogic/rational.hpp"

namespace uplogic {

enum class LinRel { Geq, Gt, Eq };

struct LinConstraint {
  std::vector<Rat> coeffs;  // length equals the system dimension
  LinRel rel = LinRel::Geq;
  Rat rhs;
};

struct LinSystem {
  int dimension = 0;
  std::vector<LinConstraint> constraints;
  bool nonneg = false;  // when set, adds x_i >= 0 for every variable
};

struct LPOutcome {
  bool feasible = false;
  std::vector<Rat> witness;  // dimension entries when feasible
};

// Exact rational re-substitution of every row (and the nonneg bounds).
bool satisfies_exactly(const LinSystem& sys, const std::vector<Rat>& x);

// Exact feasibility via two-phase simplex with Bland's pivoting. Strict rows
// are decided by one shared slack t: a.x > b becomes a.x - t >= b, t <= 1 is
// added, t is maximized, and the system is feasible iff the optimum is
// positive. Free variables (nonneg unset) are split into differences of
// nonnegative parts. Throws std::invalid_argument on dimension mismatch.
LPOutcome solve_feasibility(const LinSystem& sys);

// Basic feasible witness of a nonneg system with r rows: at most r positive
// entries. Requires the nonneg flag.
LPOutcome small_support_solution(const LinSystem& sys);

}  // namespace uplogic
