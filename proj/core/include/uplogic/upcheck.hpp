#pragma once

#include <vector>

#include "uplogic/covers.hpp"
#include "uplogic/linear.hpp"
#include "uplogic/structure.hpp"

namespace uplogic {

inline constexpr int kDefaultGroundCap = 10;

struct UPVerdict {
  enum class Reason { None, UP1, UP2, Infeasible };

  bool yes = false;
  // When yes: one measure per subset X (indexed by mask) with mu_X(X) = v(X);
  // the family's pointwise max reconstructs v exactly.
  std::vector<Measure> witness_measures;
  // When no: the subset whose check failed, with the reason.
  SubsetMask witness_set = 0;
  Reason reason = Reason::None;
};

// The per-set dominated-measure feasibility problem: mu >= 0, total mass 1,
// mu(Y) <= v(Y) for every Y, and mu(X) = v(X).
LinSystem dominated_measure_system(const SetFunction& v, SubsetMask x);

// Decides whether v is an upper probability measure: checks v(empty) = 0 and
// v(ground) = 1, then solves the dominated-measure problem for every subset.
// Ground sets beyond ground_cap raise CapError.
UPVerdict is_upper_probability(const SetFunction& v,
                               int ground_cap = kDefaultGroundCap);

// UPF1, UPF2, and UP3 over every (n,k)-cover with m, n, k <= bound.
// Enumeration work beyond work_cap raises CapError.
bool check_upf(const SetFunction& v, int bound,
               long long work_cap = 4'000'000);

// Pointwise max of the measures over each subset of the ground set.
SetFunction envelope_of(const std::vector<std::string>& ground,
                        const std::vector<Measure>& measures);

}  // namespace uplogic
