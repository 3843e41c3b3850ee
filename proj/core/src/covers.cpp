#include "uplogic/covers.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

#include "uplogic/error.hpp"

namespace uplogic {

namespace {

// Multiplicity of each ground element across the members.
std::vector<int> element_counts(const MultisetCover& c) {
  std::vector<int> counts(c.ground_size, 0);
  for (SubsetMask m : c.members)
    for (int e = 0; e < c.ground_size; ++e)
      if ((m >> e) & 1u) ++counts[e];
  return counts;
}

void check_member_bounds(const MultisetCover& c) {
  for (SubsetMask m : c.members)
    if (m & ~c.full()) throw Error("cover member outside the ground set");
}

}  // namespace

bool covers_n_times(const MultisetCover& c, SubsetMask a, int n) {
  check_member_bounds(c);
  if (a & ~c.full()) throw Error("target set outside the ground set");
  auto counts = element_counts(c);
  for (int e = 0; e < c.ground_size; ++e)
    if (((a >> e) & 1u) && counts[e] < n) return false;
  return true;
}

bool is_nk_cover(const MultisetCover& c, SubsetMask a, int n, int k) {
  return covers_n_times(c, c.full(), k) && covers_n_times(c, a, n + k);
}

bool is_exact_nk_cover(const MultisetCover& c, SubsetMask a, int n, int k) {
  check_member_bounds(c);
  if (a & ~c.full()) throw Error("target set outside the ground set");
  auto counts = element_counts(c);
  for (int e = 0; e < c.ground_size; ++e) {
    int want = ((a >> e) & 1u) ? n + k : k;
    if (counts[e] != want) return false;
  }
  return true;
}

std::optional<std::pair<ExactCoverPart, ExactCoverPart>> decompose(
    const MultisetCover& c, SubsetMask a, int n, int k, int member_cap) {
  if (!is_exact_nk_cover(c, a, n, k))
    throw std::invalid_argument("decompose requires an exact (n,k)-cover");
  int m = (int)c.members.size();
  if (m > member_cap)
    throw CapError("cover with " + std::to_string(m) +
                   " members exceeds the decomposition cap " +
                   std::to_string(member_cap));
  if (m < 2) return std::nullopt;

  // The split parameters of a part: uniform multiplicity over A gives
  // n_i + k_i, uniform multiplicity over the rest gives k_i. When one side
  // is empty its parameter is only constrained by the (n,k) budget.
  auto part_params = [&](const MultisetCover& part, int& pn,
                         int& pk) -> bool {
    auto counts = element_counts(part);
    int on_a = -1, off_a = -1;
    for (int e = 0; e < c.ground_size; ++e) {
      int& slot = ((a >> e) & 1u) ? on_a : off_a;
      if (slot == -1)
        slot = counts[e];
      else if (slot != counts[e])
        return false;
    }
    if (off_a >= 0) {
      pk = off_a;
      if (pk > k) return false;
    } else {
      pk = std::min(k, on_a < 0 ? 0 : on_a);
    }
    if (on_a >= 0) {
      pn = on_a - pk;
      if (pn < 0 || pn > n) return false;
    } else {
      pn = 0;
    }
    return true;
  };

  for (std::uint32_t pick = 1; pick + 1 < (1u << m); ++pick) {
    MultisetCover left{c.ground_size, {}}, right{c.ground_size, {}};
    for (int i = 0; i < m; ++i)
      ((pick >> i) & 1u ? left : right).members.push_back(c.members[i]);
    int n1, k1, n2, k2;
    if (!part_params(left, n1, k1)) continue;
    n2 = n - n1;
    k2 = k - k1;
    if (n2 < 0 || k2 < 0) continue;
    if (!is_exact_nk_cover(left, a, n1, k1)) continue;
    if (!is_exact_nk_cover(right, a, n2, k2)) continue;
    return std::make_pair(ExactCoverPart{std::move(left), n1, k1},
                          ExactCoverPart{std::move(right), n2, k2});
  }
  return std::nullopt;
}

bool up3_holds(const SetFunction& v, SubsetMask a, const MultisetCover& c,
               int n, int k) {
  if (c.ground_size != v.size())
    throw std::invalid_argument("cover and set function ground sets differ");
  if (!is_nk_cover(c, a, n, k))
    throw std::invalid_argument("up3_holds requires an (n,k)-cover");
  Rat rhs = 0;
  for (SubsetMask m : c.members) rhs += v.at(m);
  return k + n * v.at(a) <= rhs;
}

namespace {

Rat alternating_sum(const SetFunction& up, const SetFunction& lo,
                    const std::vector<SubsetMask>& args, bool odd_is_upper) {
  // sum over nonempty I of (-1)^{|I|+1} * P^{sign}(intersection), where the
  // odd/even cardinality picks the upper or lower function.
  int n = (int)args.size();
  Rat total = 0;
  for (std::uint32_t pick = 1; pick < (1u << n); ++pick) {
    SubsetMask inter = up.full();
    for (int i = 0; i < n; ++i)
      if ((pick >> i) & 1u) inter &= args[i];
    int size = std::popcount(pick);
    bool use_upper = (size % 2 == 1) == odd_is_upper;
    const Rat& val = use_upper ? up.at(inter) : lo.at(inter);
    if (size % 2 == 1)
      total += val;
    else
      total -= val;
  }
  return total;
}

}  // namespace

bool check_property(int index, const SetFunction& up, const SetFunction& lo,
                    const std::vector<SubsetMask>& args) {
  if (up.ground != lo.ground)
    throw std::invalid_argument("upper/lower ground sets differ");
  auto need = [&](std::size_t arity) {
    if (args.size() != arity)
      throw std::invalid_argument("property " + std::to_string(index) +
                                  " takes " + std::to_string(arity) +
                                  " sets, got " + std::to_string(args.size()));
  };
  auto need_disjoint = [&] {
    need(2);
    if (args[0] & args[1])
      throw std::invalid_argument("property " + std::to_string(index) +
                                  " requires disjoint sets");
  };

  switch (index) {
    case 1: {
      if (args.empty())
        throw std::invalid_argument("property 1 needs at least one set");
      SubsetMask u = 0;
      for (SubsetMask s : args) u |= s;
      return up.at(u) <= alternating_sum(up, lo, args, true);
    }
    case 2: {
      if (args.empty())
        throw std::invalid_argument("property 2 needs at least one set");
      SubsetMask u = 0;
      for (SubsetMask s : args) u |= s;
      return lo.at(u) >= alternating_sum(up, lo, args, false);
    }
    case 3: {
      need(2);
      SubsetMask un = args[0] | args[1], in = args[0] & args[1];
      Rat mid = lo.at(args[0]) + up.at(args[1]);
      return lo.at(un) + lo.at(in) <= mid && mid <= up.at(un) + up.at(in);
    }
    case 4: {
      need(2);
      SubsetMask un = args[0] | args[1], in = args[0] & args[1];
      Rat mid = lo.at(un) + up.at(in);
      return lo.at(args[0]) + lo.at(args[1]) <= mid &&
             mid <= up.at(args[0]) + up.at(args[1]);
    }
    case 5: {
      need(2);
      SubsetMask un = args[0] | args[1], in = args[0] & args[1];
      Rat mid = lo.at(in) + up.at(un);
      return lo.at(args[0]) + lo.at(args[1]) <= mid &&
             mid <= up.at(args[0]) + up.at(args[1]);
    }
    case 6: {
      need_disjoint();
      SubsetMask un = args[0] | args[1];
      return up.at(args[0]) + lo.at(args[1]) <= up.at(un) &&
             up.at(un) <= up.at(args[0]) + up.at(args[1]);
    }
    case 7: {
      need(2);
      return lo.at(args[0]) + lo.at(args[1]) <=
             lo.at(args[0] | args[1]) + up.at(args[0] & args[1]);
    }
    case 8: {
      need(2);
      return lo.at(args[0]) + lo.at(args[1]) <=
             lo.at(args[0] & args[1]) + up.at(args[0] | args[1]);
    }
    case 9: {
      need(2);
      return lo.at(args[0] | args[1]) + lo.at(args[0] & args[1]) <=
             lo.at(args[0]) + up.at(args[1]);
    }
    case 10: {
      need_disjoint();
      SubsetMask un = args[0] | args[1];
      return lo.at(args[0]) + lo.at(args[1]) <= lo.at(un) &&
             lo.at(un) <= lo.at(args[0]) + up.at(args[1]) &&
             lo.at(args[0]) + up.at(args[1]) <= up.at(un) &&
             up.at(un) <= up.at(args[0]) + up.at(args[1]);
    }
    default:
      throw std::invalid_argument("property index must be 1..10");
  }
}

SetFunction dual_of(const SetFunction& v) {
  SetFunction d;
  d.ground = v.ground;
  d.values.resize(v.values.size());
  SubsetMask full = v.full();
  for (SubsetMask s = 0; s < v.values.size(); ++s)
    d.values[s] = 1 - v.at(full & ~s);
  return d;
}

SetFunction make_upsilon_epsilon(const Rat& eps) {
  if (eps <= 0 || eps >= Rat(1, 8))
    throw std::invalid_argument("epsilon must lie strictly between 0 and 1/8");
  // Singleton masses of the four measures over {a, b, c, d}.
  const Rat table[4][4] = {
      {Rat(1, 4), Rat(1, 4), Rat(1, 4), Rat(1, 4)},
      {Rat(0), Rat(1, 8), Rat(3, 8), Rat(1, 2)},
      {Rat(1, 8), Rat(3, 8), Rat(0), Rat(1, 2)},
      {Rat(3, 8), Rat(0), Rat(1, 8), Rat(1, 2)},
  };
  SetFunction v;
  v.ground = {"a", "b", "c", "d"};
  v.values.resize(16);
  for (SubsetMask s = 0; s < 16; ++s) {
    Rat best = 0;
    for (int mu = 0; mu < 4; ++mu) {
      Rat mass = 0;
      for (int e = 0; e < 4; ++e)
        if ((s >> e) & 1u) mass += table[mu][e];
      if (mass > best) best = mass;
    }
    v.values[s] = best;
  }
  v.values[0b0111] += eps;  // {a,b,c}
  return v;
}

namespace {

std::vector<std::string> split_ws(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

}  // namespace

SetFunction read_set_function(std::istream& in) {
  SetFunction v;
  std::string line;
  int lineno = 0;
  bool have_ground = false;
  std::vector<bool> seen;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto pos = line.find('#'); pos != std::string::npos)
      line.erase(pos);
    auto words = split_ws(line);
    if (words.empty()) continue;
    if (words[0] == "ground") {
      if (have_ground) throw ParseError(lineno, 1, "duplicate ground line");
      if (words.size() < 2) throw ParseError(lineno, 1, "empty ground set");
      v.ground.assign(words.begin() + 1, words.end());
      if (v.ground.size() > 20)
        throw CapError("ground set too large for a powerset table");
      v.values.assign(std::size_t{1} << v.ground.size(), Rat(0));
      seen.assign(v.values.size(), false);
      have_ground = true;
      continue;
    }
    if (!have_ground)
      throw ParseError(lineno, 1, "subset line before the ground line");
    if (words.size() != 2)
      throw ParseError(lineno, 1, "expected '{ids} value'");
    const std::string& subset = words[0];
    if (subset.size() < 2 || subset.front() != '{' || subset.back() != '}')
      throw ParseError(lineno, 1, "subset must be written {a,b,...}");
    SubsetMask mask = 0;
    std::string inner = subset.substr(1, subset.size() - 2);
    std::istringstream items(inner);
    std::string id;
    while (std::getline(items, id, ',')) {
      if (id.empty()) throw ParseError(lineno, 1, "empty id in subset");
      auto it = std::find(v.ground.begin(), v.ground.end(), id);
      if (it == v.ground.end())
        throw ParseError(lineno, 1, "unknown state '" + id + "'");
      SubsetMask bit = 1u << (it - v.ground.begin());
      if (mask & bit)
        throw ParseError(lineno, 1, "repeated state '" + id + "'");
      mask |= bit;
    }
    auto q = rat_parse(words[1]);
    if (!q) throw ParseError(lineno, 1, "bad rational '" + words[1] + "'");
    if (seen[mask])
      throw ParseError(lineno, 1, "duplicate subset line");
    seen[mask] = true;
    v.values[mask] = *q;
  }
  if (!have_ground) throw Error("set function file without a ground line");
  for (std::size_t s = 0; s < seen.size(); ++s)
    if (!seen[s])
      throw Error("set function is not total: " +
                  std::to_string(seen.size() -
                                 std::count(seen.begin(), seen.end(), true)) +
                  " subsets missing");
  return v;
}

SetFunction parse_set_function(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_set_function(in);
}

std::string format_set_function(const SetFunction& v) {
  std::string out = "ground";
  for (const auto& s : v.ground) out += " " + s;
  out += "\n";
  for (SubsetMask s = 0; s < v.values.size(); ++s) {
    out += "{";
    bool first = true;
    for (int e = 0; e < v.size(); ++e) {
      if (!((s >> e) & 1u)) continue;
      if (!first) out += ",";
      out += v.ground[e];
      first = false;
    }
    out += "} " + rat_str(v.values[s]) + "\n";
  }
  return out;
}

}  // namespace uplogic
