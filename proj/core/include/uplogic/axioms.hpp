#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "uplogic/formula.hpp"
#include "uplogic/structure.hpp"

namespace uplogic {

enum class AxiomKind { Taut, Ineq, L1, L2, L3, L4, L5 };

struct AxiomInstance {
  AxiomKind kind;
  LPtr formula;
  std::string provenance;  // parameters the instance was built from
};

// True iff phi => OR_{|J|=k+n} AND_{j in J} parts[j] and
// OR_{|J|=k} AND_{j in J} parts[j] are propositional tautologies (J ranges
// over subsets of {1..m}). n = 0 is permitted.
bool l4_side_condition(const PropPtr& phi, const std::vector<PropPtr>& parts,
                       int n, int k, int atom_cap = kDefaultAtomCap);

AxiomInstance axiom_l1();                     // l(false) = 0
AxiomInstance axiom_l2();                     // l(true) = 1
AxiomInstance axiom_l3(const PropPtr& phi);   // l(phi) >= 0
// l(phi_1) + ... + l(phi_m) - n l(phi) >= k; throws std::invalid_argument
// when a side condition fails.
AxiomInstance axiom_l4(const PropPtr& phi, const std::vector<PropPtr>& parts,
                       int n, int k);
// l(phi) = l(psi); requires phi <=> psi to be a tautology.
AxiomInstance axiom_l5(const PropPtr& phi, const PropPtr& psi);
AxiomInstance axiom_taut(const LPtr& f);      // f | ~f
// An instance of a valid inequality formula; validated by the linear solver
// (valid iff the negation is infeasible over free real variables).
AxiomInstance axiom_ineq(const LPtr& f);

// Validity of f read as a pure linear-inequality formula: each distinct
// likelihood term is a free real variable, no upper-probability coupling.
bool inequality_valid(const LPtr& f);

struct SuiteLine {
  std::string label;
  LPtr formula;
  bool expect_valid = true;
  bool got_valid = false;
  // Countermodel for formulas reported invalid (satisfies the negation).
  std::optional<UPStructure> countermodel;
};

struct SuiteReport {
  std::vector<SuiteLine> lines;
  int failures = 0;  // lines whose verdict differs from the expectation

  std::string text() const;  // one line per instance with its verdict
};

// Generates instances of every axiom kind (L4 with m, n, k <= 3 over at most
// three propositions) plus a negative control, and checks each against the
// decision procedure.
SuiteReport soundness_suite(std::uint64_t seed);

}  // namespace uplogic
