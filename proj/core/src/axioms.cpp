#include "uplogic/axioms.hpp"

#include <random>
#include <stdexcept>

#include "uplogic/error.hpp"
#include "uplogic/linear.hpp"
#include "uplogic/parser.hpp"
#include "uplogic/satsolver.hpp"

namespace uplogic {

namespace {

// OR over all J of size c of AND_{j in J} parts[j], as a mask. The empty
// conjunction is true, so c = 0 yields the all-true mask.
AtomMask size_c_disjunction(const std::vector<AtomMask>& parts, int c, int n) {
  int m = (int)parts.size();
  AtomMask acc = AtomMask::zeros(n);
  if (c == 0) return AtomMask::ones(n);
  if (c > m) return acc;
  std::vector<int> idx(c);
  for (int i = 0; i < c; ++i) idx[i] = i;
  for (;;) {
    AtomMask conj = AtomMask::ones(n);
    for (int i : idx) conj = conj & parts[i];
    acc = acc | conj;
    int pos = c - 1;
    while (pos >= 0 && idx[pos] == m - c + pos) --pos;
    if (pos < 0) break;
    ++idx[pos];
    for (int i = pos + 1; i < c; ++i) idx[i] = idx[i - 1] + 1;
  }
  return acc;
}

}  // namespace

bool l4_side_condition(const PropPtr& phi, const std::vector<PropPtr>& parts,
                       int n, int k, int atom_cap) {
  if (parts.empty()) throw std::invalid_argument("L4 needs m >= 1 formulas");
  if (n < 0 || k < 0) throw std::invalid_argument("L4 needs n, k >= 0");
  std::vector<std::string> order;
  collect_prop_vars(phi, order);
  for (const auto& p : parts) collect_prop_vars(p, order);
  int width = (int)order.size();

  AtomMask phi_mask = atom_mask(phi, order, atom_cap);
  std::vector<AtomMask> part_masks;
  part_masks.reserve(parts.size());
  for (const auto& p : parts)
    part_masks.push_back(atom_mask(p, order, atom_cap));

  return phi_mask.subset_of(size_c_disjunction(part_masks, n + k, width)) &&
         size_c_disjunction(part_masks, k, width).all_true();
}

AxiomInstance axiom_l1() {
  return {AxiomKind::L1,
          l_compare(Term{{{Rat(1), prop_false()}}}, SurfaceRel::Eq, Rat(0)),
          "l(false) = 0"};
}

AxiomInstance axiom_l2() {
  return {AxiomKind::L2,
          l_compare(Term{{{Rat(1), prop_true()}}}, SurfaceRel::Eq, Rat(1)),
          "l(true) = 1"};
}

AxiomInstance axiom_l3(const PropPtr& phi) {
  return {AxiomKind::L3,
          l_compare(Term{{{Rat(1), phi}}}, SurfaceRel::Geq, Rat(0)),
          "l(" + to_string(phi) + ") >= 0"};
}

AxiomInstance axiom_l4(const PropPtr& phi, const std::vector<PropPtr>& parts,
                       int n, int k) {
  if (!l4_side_condition(phi, parts, n, k))
    throw std::invalid_argument("L4 side condition fails");
  Term t;
  for (const auto& p : parts) t.addends.push_back({Rat(1), p});
  if (n > 0) t.addends.push_back({Rat(-n), phi});
  std::string prov = "m=" + std::to_string(parts.size()) +
                     " n=" + std::to_string(n) + " k=" + std::to_string(k) +
                     " phi=" + to_string(phi);
  return {AxiomKind::L4, l_compare(std::move(t), SurfaceRel::Geq, Rat(k)),
          std::move(prov)};
}

AxiomInstance axiom_l5(const PropPtr& phi, const PropPtr& psi) {
  if (!is_equivalent(phi, psi))
    throw std::invalid_argument("L5 needs propositionally equivalent formulas");
  Term t{{{Rat(1), phi}, {Rat(-1), psi}}};
  return {AxiomKind::L5, l_compare(std::move(t), SurfaceRel::Eq, Rat(0)),
          "l(" + to_string(phi) + ") = l(" + to_string(psi) + ")"};
}

AxiomInstance axiom_taut(const LPtr& f) {
  return {AxiomKind::Taut, l_or(f, l_not(f)), to_string(f) + " | ~(...)"};
}

AxiomInstance axiom_ineq(const LPtr& f) {
  if (!inequality_valid(f))
    throw std::invalid_argument("not a valid inequality formula");
  return {AxiomKind::Ineq, f, to_string(f)};
}

bool inequality_valid(const LPtr& f) {
  // Each distinct primitive likelihood term is one free real variable; f is
  // valid iff every disjunct of ~f is infeasible.
  std::vector<PropPtr> terms;
  auto term_index = [&](const PropPtr& p) {
    for (std::size_t i = 0; i < terms.size(); ++i)
      if (struct_equal(terms[i], p)) return (int)i;
    terms.push_back(p);
    return (int)terms.size() - 1;
  };

  for (const Disjunct& g : to_dnf(l_not(f))) {
    std::vector<std::vector<std::pair<int, Rat>>> rows;
    for (const auto& c : g.conjuncts) {
      auto& row = rows.emplace_back();
      for (const auto& a : c.basic.term.addends)
        row.emplace_back(term_index(a.formula), a.coeff);
    }
    LinSystem sys;
    sys.dimension = (int)terms.size();
    sys.nonneg = false;
    for (std::size_t ci = 0; ci < g.conjuncts.size(); ++ci) {
      const Conjunct& c = g.conjuncts[ci];
      LinConstraint row{std::vector<Rat>(sys.dimension, Rat(0)), LinRel::Geq,
                       c.basic.bound};
      for (const auto& [i, coeff] : rows[ci]) row.coeffs[i] += coeff;
      bool strict = c.basic.rel == Rel::Gt;
      if (c.negated) {
        for (auto& q : row.coeffs) q = -q;
        row.rhs = -row.rhs;
        strict = !strict;
      }
      row.rel = strict ? LinRel::Gt : LinRel::Geq;
      sys.constraints.push_back(std::move(row));
    }
    if (solve_feasibility(sys).feasible) return false;
  }
  return true;
}

std::string SuiteReport::text() const {
  std::string out;
  for (const auto& line : lines) {
    bool ok = line.expect_valid == line.got_valid;
    out += ok ? "ok   " : "FAIL ";
    out += line.got_valid ? "VALID   " : "INVALID ";
    out += line.label + ": " + to_string(line.formula) + "\n";
  }
  out += std::to_string(failures) + " failures in " +
         std::to_string(lines.size()) + " instances\n";
  return out;
}

SuiteReport soundness_suite(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  SuiteReport report;

  auto check = [&](const std::string& label, const LPtr& f,
                   bool expect_valid) {
    SuiteLine line{label, f, expect_valid, is_valid(f), std::nullopt};
    if (!line.got_valid) {
      SatResult counter = solve(l_not(f));
      if (counter.sat) line.countermodel = std::move(counter.model);
    }
    if (line.expect_valid != line.got_valid) ++report.failures;
    report.lines.push_back(std::move(line));
  };

  PropPtr p = prop("p"), q = prop("q"), r = prop("r");
  std::vector<PropPtr> pool = {prop_true(), prop_false(), p,     q,
                               !p,          p & q,        p | q, p | r};

  check("L1", axiom_l1().formula, true);
  check("L2", axiom_l2().formula, true);
  for (const auto& phi : pool)
    check("L3 " + to_string(phi), axiom_l3(phi).formula, true);
  std::vector<std::pair<PropPtr, PropPtr>> l5_pairs = {
      {p & q, q & p},      {p | q, q | p}, {!(p & q), !p | !q},
      {p, !(!p)},          {implies(p, q), !p | q},
      {p | !p, prop_true()}};
  for (const auto& [a, b] : l5_pairs)
    check("L5", axiom_l5(a, b).formula, true);

  // L4 instances with m, n, k <= 3 over at most three propositions, sampled
  // per (n,k) bucket so nontrivial covers get exercised.
  constexpr int kPerBucket = 7;
  for (int n = 0; n <= 3; ++n)
    for (int k = 0; k <= 3; ++k) {
      std::vector<AxiomInstance> bucket;
      std::vector<int> idx;
      int m_pool = (int)pool.size();
      for (int m = 1; m <= 3; ++m) {
        idx.assign(m, 0);
        for (;;) {
          std::vector<PropPtr> parts;
          for (int i : idx) parts.push_back(pool[i]);
          for (const auto& phi : pool)
            if (l4_side_condition(phi, parts, n, k))
              bucket.push_back(axiom_l4(phi, parts, n, k));
          int pos = m - 1;
          while (pos >= 0 && idx[pos] == m_pool - 1) --pos;
          if (pos < 0) break;
          ++idx[pos];
          for (int i = pos + 1; i < m; ++i) idx[i] = idx[pos];
        }
      }
      for (int taken = 0; taken < kPerBucket && !bucket.empty(); ++taken) {
        std::size_t pick = rng() % bucket.size();
        check("L4 " + bucket[pick].provenance, bucket[pick].formula, true);
        bucket.erase(bucket.begin() + pick);
      }
    }

  for (const char* text :
       {"l(p) >= 1/2", "l(p) + l(q) > 1/3", "~(l(p) = 1)", "l(p & q) <= 2/3",
        "l(p) >= 0 & l(q) < 1"}) {
    LPtr f = parse_lformula(text);
    check("Taut " + std::string(text), axiom_taut(f).formula, true);
  }

  for (const char* text :
       {"l(p) >= 1/2 | l(p) <= 1/2", "~(l(p) >= 1/2) | l(p) > 1/3",
        "~(l(p) >= 1/3) | ~(l(q) >= 1/3) | l(p) + l(q) >= 2/3",
        "~(2 l(p) >= 1) | 4 l(p) >= 2",
        "~(l(p) + 2 l(q) >= 1) | 2 l(q) + l(p) >= 1"}) {
    LPtr f = parse_lformula(text);
    check("Ineq " + std::string(text), axiom_ineq(f).formula, true);
  }

  check("negative control (not an axiom)",
        parse_lformula("l(p) + l(~p) >= 3/2"), false);

  return report;
}

}  // namespace uplogic
