#include "uplogic/formula.hpp"

#include "uplogic/error.hpp"

namespace uplogic {

namespace {

LPtr node(LKind k, BasicL b, LPtr l, LPtr r) {
  auto f = std::make_shared<LFormula>();
  f->kind = k;
  f->basic = std::move(b);
  f->lhs = std::move(l);
  f->rhs = std::move(r);
  return f;
}

}  // namespace

LPtr l_basic(BasicL b) {
  if (b.term.addends.empty()) throw Error("term with no addends");
  return node(LKind::Basic, std::move(b), nullptr, nullptr);
}

LPtr l_not(LPtr a) { return node(LKind::Not, {}, std::move(a), nullptr); }

LPtr l_and(LPtr a, LPtr b) {
  return node(LKind::And, {}, std::move(a), std::move(b));
}

LPtr l_or(LPtr a, LPtr b) {
  return node(LKind::Or, {}, std::move(a), std::move(b));
}

Term negate_term(const Term& t) {
  Term r = t;
  for (auto& a : r.addends) a.coeff = -a.coeff;
  return r;
}

LPtr l_compare(Term t, SurfaceRel rel, Rat bound) {
  switch (rel) {
    case SurfaceRel::Geq:
      return l_basic({std::move(t), Rel::Geq, std::move(bound)});
    case SurfaceRel::Gt:
      return l_basic({std::move(t), Rel::Gt, std::move(bound)});
    case SurfaceRel::Leq:
      return l_basic({negate_term(t), Rel::Geq, -bound});
    case SurfaceRel::Lt:
      return l_not(l_basic({std::move(t), Rel::Geq, std::move(bound)}));
    case SurfaceRel::Eq:
      return l_and(l_basic({t, Rel::Geq, bound}),
                   l_basic({negate_term(t), Rel::Geq, -bound}));
  }
  throw Error("corrupt relation");
}

namespace {

std::size_t prop_tokens(const PropPtr& f) {
  switch (f->kind) {
    case PropKind::Prim:
    case PropKind::True:
    case PropKind::False:
      return 1;
    case PropKind::Not:
      return 1 + prop_tokens(f->lhs);
    default:
      return 1 + prop_tokens(f->lhs) + prop_tokens(f->rhs);
  }
}

std::size_t basic_tokens(const BasicL& b) {
  std::size_t n = 2;  // relation and bound
  for (const auto& a : b.term.addends) {
    if (boost::multiprecision::abs(a.coeff) != 1) ++n;  // printed coefficient
    n += 1 + prop_tokens(a.formula);                    // l(...) wrapper
  }
  return n;
}

}  // namespace

std::size_t length(const LPtr& f) {
  switch (f->kind) {
    case LKind::Basic:
      return basic_tokens(f->basic);
    case LKind::Not:
      return 1 + length(f->lhs);
    default:
      return 1 + length(f->lhs) + length(f->rhs);
  }
}

std::size_t coeff_size(const LPtr& f) {
  switch (f->kind) {
    case LKind::Basic: {
      std::size_t m = coeff_bits(f->basic.bound);
      for (const auto& a : f->basic.term.addends)
        m = std::max(m, coeff_bits(a.coeff));
      return m;
    }
    case LKind::Not:
      return coeff_size(f->lhs);
    default:
      return std::max(coeff_size(f->lhs), coeff_size(f->rhs));
  }
}

bool struct_equal(const LPtr& a, const LPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->kind != b->kind) return false;
  if (a->kind == LKind::Basic) {
    const BasicL &x = a->basic, &y = b->basic;
    if (x.rel != y.rel || x.bound != y.bound) return false;
    if (x.term.addends.size() != y.term.addends.size()) return false;
    for (std::size_t i = 0; i < x.term.addends.size(); ++i) {
      if (x.term.addends[i].coeff != y.term.addends[i].coeff) return false;
      if (!struct_equal(x.term.addends[i].formula, y.term.addends[i].formula))
        return false;
    }
    return true;
  }
  return struct_equal(a->lhs, b->lhs) && struct_equal(a->rhs, b->rhs);
}

namespace {

void print_basic(const BasicL& b, std::string& out) {
  for (std::size_t i = 0; i < b.term.addends.size(); ++i) {
    const auto& a = b.term.addends[i];
    Rat mag = boost::multiprecision::abs(a.coeff);
    if (i == 0) {
      if (a.coeff < 0) out += "-";
    } else {
      out += a.coeff < 0 ? " - " : " + ";
    }
    if (mag != 1) out += rat_str(mag) + " ";
    out += "l(" + to_string(a.formula) + ")";
  }
  out += b.rel == Rel::Geq ? " >= " : " > ";
  out += rat_str(b.bound);
}

int l_prec(LKind k) {
  switch (k) {
    case LKind::Or:
      return 1;
    case LKind::And:
      return 2;
    case LKind::Not:
      return 3;
    default:
      return 4;
  }
}

void print_l(const LPtr& f, int parent_prec, bool tight_side,
             std::string& out) {
  int prec = l_prec(f->kind);
  bool parens = prec < parent_prec || (prec == parent_prec && tight_side);
  // a basic formula under ~ always needs parentheses to keep the relation
  // from swallowing the negation on reparse
  if (f->kind == LKind::Basic && parent_prec >= 3) parens = true;
  if (parens) out += "(";
  switch (f->kind) {
    case LKind::Basic:
      print_basic(f->basic, out);
      break;
    case LKind::Not:
      out += "~";
      print_l(f->lhs, prec, false, out);
      break;
    case LKind::And:
    case LKind::Or:
      print_l(f->lhs, prec, false, out);
      out += f->kind == LKind::And ? " & " : " | ";
      print_l(f->rhs, prec, true, out);
      break;
  }
  if (parens) out += ")";
}

}  // namespace

std::string to_string(const LPtr& f) {
  std::string out;
  print_l(f, 0, false, out);
  return out;
}

}  // namespace uplogic
