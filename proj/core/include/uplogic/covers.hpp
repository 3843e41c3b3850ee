#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "uplogic/rational.hpp"

namespace uplogic {

// Subsets of a small ground set, one bit per state position.
using SubsetMask = std::uint32_t;

// Multiset of subsets of a ground set; duplicates allowed.
struct MultisetCover {
  int ground_size = 0;
  std::vector<SubsetMask> members;

  SubsetMask full() const { return (SubsetMask)((1u << ground_size) - 1); }
};

// Total rational-valued function on the powerset of a named ground set.
struct SetFunction {
  std::vector<std::string> ground;
  std::vector<Rat> values;  // size 1 << ground.size(), indexed by subset mask

  int size() const { return (int)ground.size(); }
  SubsetMask full() const { return (SubsetMask)((1u << ground.size()) - 1); }
  const Rat& at(SubsetMask s) const { return values[s]; }
};

inline constexpr int kDefaultCoverCap = 6;

// Every element of a lies in at least n members, with multiplicity.
bool covers_n_times(const MultisetCover& c, SubsetMask a, int n);

// Covers the ground set k times and a n+k times.
bool is_nk_cover(const MultisetCover& c, SubsetMask a, int n, int k);

// Multiplicity exactly n+k on a and exactly k elsewhere.
bool is_exact_nk_cover(const MultisetCover& c, SubsetMask a, int n, int k);

struct ExactCoverPart {
  MultisetCover cover;
  int n = 0;
  int k = 0;
};

// Splits an exact (n,k)-cover into two exact covers whose parameters sum to
// (n,k), or nullopt when nondecomposable. Exhaustive over sub-multisets, so
// the member count is capped (CapError beyond member_cap). Throws
// std::invalid_argument when c is not an exact (n,k)-cover of (a, ground).
std::optional<std::pair<ExactCoverPart, ExactCoverPart>> decompose(
    const MultisetCover& c, SubsetMask a, int n, int k,
    int member_cap = kDefaultCoverCap);

// k + n*v(a) <= sum of v over members, exactly. Requires is_nk_cover.
bool up3_holds(const SetFunction& v, SubsetMask a, const MultisetCover& c,
               int n, int k);

// Properties (1)-(10) of upper/lower envelope pairs. upper_fn plays P*,
// lower_fn plays P_*. Args: (1)-(2) take n >= 1 sets, the rest take exactly
// two; (6) and (10) require a disjoint pair. Arity or disjointness
// violations throw std::invalid_argument.
bool check_property(int index, const SetFunction& upper_fn,
                    const SetFunction& lower_fn,
                    const std::vector<SubsetMask>& args);

// Dual set function X -> 1 - v(complement of X).
SetFunction dual_of(const SetFunction& v);

// The counterexample function over {a,b,c,d}: the envelope of the fixed
// four-measure family, bumped by eps at {a,b,c}. Requires 0 < eps < 1/8.
SetFunction make_upsilon_epsilon(const Rat& eps);

// Text format:
//   ground a b c
//   {} 0
//   {a} 1/2
//   ...                            (one line per subset, each exactly once)
SetFunction read_set_function(std::istream& in);
SetFunction parse_set_function(std::string_view text);
std::string format_set_function(const SetFunction& v);

}  // namespace uplogic
