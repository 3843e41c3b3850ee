#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "uplogic/formula.hpp"
#include "uplogic/rational.hpp"

namespace uplogic {

// Probability measure over a fixed state list: nonnegative masses summing to
// exactly 1, indexed by state position.
struct Measure {
  std::vector<Rat> mass;
};

// Finite upper probability structure (Omega, 2^Omega, P, pi). The event
// algebra is always the full powerset; propositions absent from a state's
// valuation read false.
struct UPStructure {
  std::vector<std::string> states;
  std::vector<std::map<std::string, bool>> valuation;  // one map per state
  std::vector<Measure> measures;
};

// Throws Error when the invariants fail: nonempty states and measures, one
// valuation per state, every measure defined on exactly the state list with
// masses >= 0 summing to 1.
void validate(const UPStructure& m);

// State indices whose valuation satisfies f, ascending.
std::vector<int> extension(const UPStructure& m, const PropPtr& f);

// Max over measures of the exact mass of X (indices into m.states).
Rat upper(const UPStructure& m, const std::vector<int>& x);
Rat upper_f(const UPStructure& m, const PropPtr& f);

// 1 - upper(~f); equals the min over measures.
Rat lower_f(const UPStructure& m, const PropPtr& f);

// Exact model checking of a likelihood formula.
bool satisfies(const UPStructure& m, const LPtr& f);

// Text format:
//   states s1 s2 ...
//   valuation s1 p:true q:false ...
//   measure a/b a/b ...            (one rational per state, in state order)
// Valuation lines are optional per state; measure masses must sum to 1.
UPStructure read_structure(std::istream& in);
UPStructure parse_structure(std::string_view text);
std::string format_structure(const UPStructure& m);

}  // namespace uplogic
