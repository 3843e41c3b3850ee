#pragma once

#include <vector>

#include "uplogic/formula.hpp"
#include "uplogic/linear.hpp"
#include "uplogic/structure.hpp"

namespace uplogic {

// Conjunction of basic likelihood formulas and negations of basic likelihood
// formulas, leaves in canonical >=/> form.
struct Conjunct {
  BasicL basic;
  bool negated = false;
};

struct Disjunct {
  std::vector<Conjunct> conjuncts;
};

struct SatResult {
  bool sat = false;
  UPStructure model;  // when sat; always passes the model checker on f
};

// Disjunctive normal form, satisfaction-equivalent to f on every structure.
std::vector<Disjunct> to_dnf(const LPtr& f);

// The linear system over variables x_ij (i indexes the disjunct's distinct
// propositional formulas up to equivalence, j its atoms): row sums
// x_i1 + ... + x_i2^N = 1, dominance sum_{j in E_i} x_ij >= sum_{j in E_i}
// x_i'j for i != i', and one row per conjunct (strict for negated ones).
// Nonnegative variables. CapError when the disjunct has more than atom_cap
// propositions.
LinSystem build_disjunct_system(const Disjunct& g,
                                int atom_cap = kDefaultAtomCap);

// Decides satisfiability; on success extracts a small witness model from a
// small-support solution of the first feasible disjunct system (states are
// the atoms carrying positive mass, one measure per distinct formula).
// The witness has at most |f|^2 states and at most |f| measures and is
// re-verified against f before being returned.
SatResult solve(const LPtr& f, int atom_cap = kDefaultAtomCap);

// f is valid iff ~f is unsatisfiable.
bool is_valid(const LPtr& f, int atom_cap = kDefaultAtomCap);

}  // namespace uplogic
