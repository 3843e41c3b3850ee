#include "uplogic/upcheck.hpp"

#include <string>

#include "uplogic/error.hpp"

namespace uplogic {

LinSystem dominated_measure_system(const SetFunction& v, SubsetMask x) {
  int n = v.size();
  LinSystem sys;
  sys.dimension = n;
  sys.nonneg = true;
  auto indicator_row = [&](SubsetMask s) {
    std::vector<Rat> row(n, Rat(0));
    for (int e = 0; e < n; ++e)
      if ((s >> e) & 1u) row[e] = 1;
    return row;
  };
  // total mass one
  sys.constraints.push_back({std::vector<Rat>(n, Rat(1)), LinRel::Eq, Rat(1)});
  // dominated on every subset: mu(Y) <= v(Y), written as -mu(Y) >= -v(Y)
  for (SubsetMask y = 0; y < v.values.size(); ++y) {
    auto row = indicator_row(y);
    for (auto& q : row) q = -q;
    sys.constraints.push_back({std::move(row), LinRel::Geq, -v.at(y)});
  }
  // attains v at the designated set
  sys.constraints.push_back({indicator_row(x), LinRel::Eq, v.at(x)});
  return sys;
}

UPVerdict is_upper_probability(const SetFunction& v, int ground_cap) {
  if (v.ground.empty()) throw Error("set function with empty ground set");
  if (v.size() > ground_cap)
    throw CapError("ground set of " + std::to_string(v.size()) +
                   " states exceeds cap " + std::to_string(ground_cap));
  UPVerdict out;
  if (v.at(0) != 0) {
    out.reason = UPVerdict::Reason::UP1;
    out.witness_set = 0;
    return out;
  }
  if (v.at(v.full()) != 1) {
    out.reason = UPVerdict::Reason::UP2;
    out.witness_set = v.full();
    return out;
  }
  out.witness_measures.resize(v.values.size());
  for (SubsetMask x = 0; x < v.values.size(); ++x) {
    LPOutcome lp = small_support_solution(dominated_measure_system(v, x));
    if (!lp.feasible) {
      out.reason = UPVerdict::Reason::Infeasible;
      out.witness_set = x;
      out.witness_measures.clear();
      return out;
    }
    out.witness_measures[x] = Measure{std::move(lp.witness)};
  }
  out.yes = true;
  return out;
}

bool check_upf(const SetFunction& v, int bound, long long work_cap) {
  if (v.ground.empty()) throw Error("set function with empty ground set");
  if (v.at(0) != 0) return false;          // UPF1
  if (v.at(v.full()) != 1) return false;   // UPF2

  int n = v.size();
  SubsetMask full = v.full();
  long long work = 0;

  // Walks multisets of nonempty subsets (nondecreasing member lists) of size
  // up to bound; empty members never matter since v(empty) = 0 here.
  std::vector<SubsetMask> members;
  std::vector<int> counts(n, 0);
  Rat member_sum = 0;

  auto violates = [&]() -> bool {
    int ground_cover = counts[0];
    for (int e = 1; e < n; ++e) ground_cover = std::min(ground_cover, counts[e]);
    for (SubsetMask a = 0; a <= full; ++a) {
      int a_cover;
      if (a == 0) {
        a_cover = -1;  // vacuous: n only bounded by the enumeration cap
      } else {
        a_cover = bound + 1;
        for (int e = 0; e < n; ++e)
          if ((a >> e) & 1u) a_cover = std::min(a_cover, counts[e]);
      }
      int kmax = std::min(ground_cover, bound);
      for (int k = 0; k <= kmax; ++k) {
        int nmax = a == 0 ? bound : std::min(a_cover - k, bound);
        for (int cn = 0; cn <= nmax; ++cn)
          if (Rat(k) + cn * v.at(a) > member_sum) return true;
      }
    }
    return false;
  };

  // Depth-first enumeration with members chosen in nondecreasing mask order.
  auto rec = [&](auto&& self, SubsetMask start) -> bool {
    if (!members.empty()) {
      work += (long long)(full + 1);
      if (work > work_cap)
        throw CapError("UPF cover enumeration exceeds the work cap");
      if (violates()) return true;
    }
    if ((int)members.size() == bound) return false;
    for (SubsetMask s = start; s <= full; ++s) {
      if (s == 0) continue;
      members.push_back(s);
      member_sum += v.at(s);
      for (int e = 0; e < n; ++e)
        if ((s >> e) & 1u) ++counts[e];
      if (self(self, s)) return true;
      for (int e = 0; e < n; ++e)
        if ((s >> e) & 1u) --counts[e];
      member_sum -= v.at(s);
      members.pop_back();
    }
    return false;
  };

  return !rec(rec, 1);
}

SetFunction envelope_of(const std::vector<std::string>& ground,
                        const std::vector<Measure>& measures) {
  if (ground.empty()) throw Error("envelope over an empty ground set");
  if (measures.empty()) throw Error("envelope of no measures");
  for (const auto& mu : measures)
    if (mu.mass.size() != ground.size())
      throw Error("measure not defined on exactly the ground set");
  SetFunction v;
  v.ground = ground;
  v.values.resize(std::size_t{1} << ground.size());
  for (SubsetMask s = 0; s < v.values.size(); ++s) {
    Rat best = 0;
    bool first = true;
    for (const auto& mu : measures) {
      Rat mass = 0;
      for (std::size_t e = 0; e < ground.size(); ++e)
        if ((s >> e) & 1u) mass += mu.mass[e];
      if (first || mass > best) best = mass;
      first = false;
    }
    v.values[s] = best;
  }
  return v;
}

}  // namespace uplogic
