#pragma once

#include <memory>
#include <span>
#include <string>
#include <vector>

namespace uplogic {

enum class PropKind { Prim, True, False, Not, And, Or, Implies, Iff };

struct PropFormula;
using PropPtr = std::shared_ptr<const PropFormula>;

// Immutable propositional AST. Implies/Iff are kept for faithful parsing and
// printing; they are normalized away when masks are computed.
struct PropFormula {
  PropKind kind;
  std::string name;  // Prim only
  PropPtr lhs;       // Not uses lhs only
  PropPtr rhs;
};

PropPtr prop(std::string name);
PropPtr prop_true();
PropPtr prop_false();
PropPtr operator!(const PropPtr& a);
PropPtr operator&(const PropPtr& a, const PropPtr& b);
PropPtr operator|(const PropPtr& a, const PropPtr& b);
PropPtr implies(const PropPtr& a, const PropPtr& b);
PropPtr iff(const PropPtr& a, const PropPtr& b);

bool struct_equal(const PropPtr& a, const PropPtr& b);

// Semantics of a formula over a fixed proposition order, as one bit per atom.
// Atom j is the conjunction q_1 & ... & q_N with q_i = order[i] when bit i of
// j is set and its negation otherwise (little-endian index convention).
struct AtomMask {
  int num_props = 0;
  std::vector<bool> bits;  // size 1 << num_props

  static AtomMask zeros(int n);
  static AtomMask ones(int n);

  AtomMask operator~() const;
  AtomMask operator&(const AtomMask& o) const;
  AtomMask operator|(const AtomMask& o) const;
  bool all_true() const;
  bool all_false() const;
  bool subset_of(const AtomMask& o) const;
  std::vector<int> true_indices() const;

  bool operator==(const AtomMask&) const = default;
};

// Masks are 2^N bits, so N beyond the cap is an explicit error rather than a
// silent truncation.
inline constexpr int kDefaultAtomCap = 16;

// Proposition names of a formula in first-occurrence, left-to-right order,
// duplicates removed.
std::vector<std::string> prop_vars(const PropPtr& f);

// Appends names of f not already present to order (first-occurrence).
void collect_prop_vars(const PropPtr& f, std::vector<std::string>& order);

// Bit j is set iff the truth assignment encoded by j makes f true. Every
// proposition of f must appear in order; an unknown one raises Error naming
// it. order.size() beyond atom_cap raises CapError.
AtomMask atom_mask(const PropPtr& f, std::span<const std::string> order,
                   int atom_cap = kDefaultAtomCap);

bool is_tautology(const PropPtr& f, int atom_cap = kDefaultAtomCap);
bool is_equivalent(const PropPtr& a, const PropPtr& b,
                   int atom_cap = kDefaultAtomCap);

// Truth of f under the assignment encoded by atom index j over order.
bool eval_prop(const PropPtr& f, std::span<const std::string> order,
               unsigned long long atom_index);

std::string to_string(const PropPtr& f);

}  // namespace uplogic
