#include "uplogic/satsolver.hpp"

#include <map>

#include "uplogic/error.hpp"

namespace uplogic {

namespace {

void dnf_rec(const LPtr& f, bool neg, std::vector<Disjunct>& out) {
  switch (f->kind) {
    case LKind::Basic:
      out.push_back(Disjunct{{Conjunct{f->basic, neg}}});
      return;
    case LKind::Not:
      dnf_rec(f->lhs, !neg, out);
      return;
    case LKind::And:
    case LKind::Or: {
      bool conjunctive = (f->kind == LKind::And) != neg;
      std::vector<Disjunct> left, right;
      dnf_rec(f->lhs, neg, left);
      dnf_rec(f->rhs, neg, right);
      if (!conjunctive) {
        out.insert(out.end(), left.begin(), left.end());
        out.insert(out.end(), right.begin(), right.end());
      } else {
        for (const auto& a : left)
          for (const auto& b : right) {
            Disjunct d = a;
            d.conjuncts.insert(d.conjuncts.end(), b.conjuncts.begin(),
                               b.conjuncts.end());
            out.push_back(std::move(d));
          }
      }
      return;
    }
  }
  throw Error("corrupt likelihood formula");
}

struct DisjunctContext {
  std::vector<std::string> props;
  std::vector<std::vector<int>> atom_sets;  // E_i per distinct formula
  int k = 0;       // distinct propositional formulas, up to equivalence
  int natoms = 1;  // 2^N
  LinSystem sys;
};

DisjunctContext make_context(const Disjunct& g, int atom_cap) {
  if (g.conjuncts.empty()) throw Error("empty disjunct");
  DisjunctContext ctx;
  for (const auto& c : g.conjuncts)
    for (const auto& a : c.basic.term.addends)
      collect_prop_vars(a.formula, ctx.props);

  // Conjuncts sharing a propositional formula up to equivalence share one
  // variable block.
  std::vector<AtomMask> masks;
  auto formula_index = [&](const PropPtr& f) {
    AtomMask m = atom_mask(f, ctx.props, atom_cap);
    for (std::size_t i = 0; i < masks.size(); ++i)
      if (masks[i] == m) return (int)i;
    masks.push_back(std::move(m));
    ctx.atom_sets.push_back(masks.back().true_indices());
    return (int)masks.size() - 1;
  };

  std::vector<std::vector<std::pair<int, Rat>>> conjunct_terms;
  for (const auto& c : g.conjuncts) {
    auto& terms = conjunct_terms.emplace_back();
    for (const auto& a : c.basic.term.addends)
      terms.emplace_back(formula_index(a.formula), a.coeff);
  }

  ctx.k = (int)masks.size();
  ctx.natoms = 1 << ctx.props.size();
  int dim = ctx.k * ctx.natoms;
  ctx.sys.dimension = dim;
  ctx.sys.nonneg = true;
  auto var = [&](int i, int j) { return i * ctx.natoms + j; };

  // row sums: each block is a probability distribution over the atoms
  for (int i = 0; i < ctx.k; ++i) {
    LinConstraint row{std::vector<Rat>(dim, Rat(0)), LinRel::Eq, Rat(1)};
    for (int j = 0; j < ctx.natoms; ++j) row.coeffs[var(i, j)] = 1;
    ctx.sys.constraints.push_back(std::move(row));
  }
  // dominance: block i maximizes the mass of its own formula
  for (int i = 0; i < ctx.k; ++i)
    for (int o = 0; o < ctx.k; ++o) {
      if (o == i) continue;
      LinConstraint row{std::vector<Rat>(dim, Rat(0)), LinRel::Geq, Rat(0)};
      for (int j : ctx.atom_sets[i]) {
        row.coeffs[var(i, j)] = 1;
        row.coeffs[var(o, j)] = -1;
      }
      ctx.sys.constraints.push_back(std::move(row));
    }
  // one row per conjunct; negation flips into a strict inequality
  for (std::size_t ci = 0; ci < g.conjuncts.size(); ++ci) {
    const Conjunct& c = g.conjuncts[ci];
    LinConstraint row{std::vector<Rat>(dim, Rat(0)), LinRel::Geq,
                      c.basic.bound};
    for (const auto& [i, coeff] : conjunct_terms[ci])
      for (int j : ctx.atom_sets[i]) row.coeffs[var(i, j)] += coeff;
    bool strict = c.basic.rel == Rel::Gt;
    if (c.negated) {
      for (auto& q : row.coeffs) q = -q;
      row.rhs = -row.rhs;
      strict = !strict;
    }
    row.rel = strict ? LinRel::Gt : LinRel::Geq;
    ctx.sys.constraints.push_back(std::move(row));
  }
  return ctx;
}

UPStructure extract_model(const DisjunctContext& ctx,
                          const std::vector<Rat>& x) {
  auto var = [&](int i, int j) { return i * ctx.natoms + j; };
  std::vector<int> support;
  for (int j = 0; j < ctx.natoms; ++j)
    for (int i = 0; i < ctx.k; ++i)
      if (x[var(i, j)] > 0) {
        support.push_back(j);
        break;
      }

  UPStructure m;
  if (support.empty()) {
    // row sums force mass somewhere whenever k >= 1; kept as a guard
    m.states = {"w0"};
    m.valuation.emplace_back();
    for (const auto& p : ctx.props) m.valuation[0][p] = false;
    for (int i = 0; i < ctx.k; ++i)
      m.measures.push_back(Measure{{Rat(1)}});
    return m;
  }
  for (int j : support) {
    m.states.push_back("w" + std::to_string(j));
    std::map<std::string, bool> val;
    for (int b = 0; b < (int)ctx.props.size(); ++b)
      val[ctx.props[b]] = (j >> b) & 1;
    m.valuation.push_back(std::move(val));
  }
  for (int i = 0; i < ctx.k; ++i) {
    Measure mu;
    for (int j : support) mu.mass.push_back(x[var(i, j)]);
    m.measures.push_back(std::move(mu));
  }
  return m;
}

}  // namespace

std::vector<Disjunct> to_dnf(const LPtr& f) {
  std::vector<Disjunct> out;
  dnf_rec(f, false, out);
  return out;
}

LinSystem build_disjunct_system(const Disjunct& g, int atom_cap) {
  return make_context(g, atom_cap).sys;
}

SatResult solve(const LPtr& f, int atom_cap) {
  for (const Disjunct& g : to_dnf(f)) {
    DisjunctContext ctx = make_context(g, atom_cap);
    LPOutcome lp = small_support_solution(ctx.sys);
    if (!lp.feasible) continue;
    UPStructure model = extract_model(ctx, lp.witness);
    validate(model);
    if (!satisfies(model, f))
      throw std::logic_error("extracted witness fails the model checker");
    return SatResult{true, std::move(model)};
  }
  return SatResult{false, {}};
}

bool is_valid(const LPtr& f, int atom_cap) {
  return !solve(l_not(f), atom_cap).sat;
}

}  // namespace uplogic
