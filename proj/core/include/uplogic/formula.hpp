#pragma once

#include <memory>
#include <string>
#include <vector>

#include "uplogic/prop.hpp"
#include "uplogic/rational.hpp"

namespace uplogic {

// One addend theta * l(phi) of a term. Coefficients may be zero or negative.
struct Addend {
  Rat coeff;
  PropPtr formula;
};

// theta_1 l(phi_1) + ... + theta_k l(phi_k) with k >= 1.
struct Term {
  std::vector<Addend> addends;
};

// Canonical relations. Surface <=, <, = are rewritten away at construction:
//   t <= a  ->  -t >= -a
//   t <  a  ->  ~(t >= a)
//   t  = a  ->  (t >= a) & (-t >= -a)
enum class Rel { Geq, Gt };
enum class SurfaceRel { Geq, Gt, Leq, Lt, Eq };

struct BasicL {
  Term term;
  Rel rel = Rel::Geq;
  Rat bound;
};

enum class LKind { Basic, Not, And, Or };

struct LFormula;
using LPtr = std::shared_ptr<const LFormula>;

// Boolean combinations of basic likelihood formulas.
struct LFormula {
  LKind kind;
  BasicL basic;  // Basic only
  LPtr lhs;      // Not uses lhs only
  LPtr rhs;
};

LPtr l_basic(BasicL b);
LPtr l_not(LPtr a);
LPtr l_and(LPtr a, LPtr b);
LPtr l_or(LPtr a, LPtr b);

// Builds the canonical formula for "t rel bound", applying the rewrites
// above.
LPtr l_compare(Term t, SurfaceRel rel, Rat bound);

Term negate_term(const Term& t);

// |f|: token count of the canonical printed form. Each printed coefficient
// (those with |coeff| != 1), each l(...) wrapper, each propositional symbol
// or connective, each relation, each bound and each Boolean connective
// counts one token.
std::size_t length(const LPtr& f);

// ||f||: max over coefficients and bounds a/b of bit_length(|a|) +
// bit_length(b).
std::size_t coeff_size(const LPtr& f);

bool struct_equal(const LPtr& a, const LPtr& b);

// Canonical print; reparses to a structurally identical AST.
std::string to_string(const LPtr& f);

}  // namespace uplogic
