#include "uplogic/prop.hpp"

#include <algorithm>

#include "uplogic/error.hpp"

namespace uplogic {

namespace {

PropPtr node(PropKind k, std::string name, PropPtr l, PropPtr r) {
  auto f = std::make_shared<PropFormula>();
  f->kind = k;
  f->name = std::move(name);
  f->lhs = std::move(l);
  f->rhs = std::move(r);
  return f;
}

}  // namespace

PropPtr prop(std::string name) {
  if (name.empty()) throw Error("empty proposition name");
  return node(PropKind::Prim, std::move(name), nullptr, nullptr);
}

PropPtr prop_true() { return node(PropKind::True, "", nullptr, nullptr); }
PropPtr prop_false() { return node(PropKind::False, "", nullptr, nullptr); }

PropPtr operator!(const PropPtr& a) {
  return node(PropKind::Not, "", a, nullptr);
}
PropPtr operator&(const PropPtr& a, const PropPtr& b) {
  return node(PropKind::And, "", a, b);
}
PropPtr operator|(const PropPtr& a, const PropPtr& b) {
  return node(PropKind::Or, "", a, b);
}
PropPtr implies(const PropPtr& a, const PropPtr& b) {
  return node(PropKind::Implies, "", a, b);
}
PropPtr iff(const PropPtr& a, const PropPtr& b) {
  return node(PropKind::Iff, "", a, b);
}

bool struct_equal(const PropPtr& a, const PropPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->kind != b->kind || a->name != b->name) return false;
  return struct_equal(a->lhs, b->lhs) && struct_equal(a->rhs, b->rhs);
}

AtomMask AtomMask::zeros(int n) {
  return AtomMask{n, std::vector<bool>(std::size_t{1} << n, false)};
}

AtomMask AtomMask::ones(int n) {
  return AtomMask{n, std::vector<bool>(std::size_t{1} << n, true)};
}

AtomMask AtomMask::operator~() const {
  AtomMask r = *this;
  r.bits.flip();
  return r;
}

AtomMask AtomMask::operator&(const AtomMask& o) const {
  if (num_props != o.num_props) throw Error("atom mask width mismatch");
  AtomMask r = *this;
  for (std::size_t j = 0; j < r.bits.size(); ++j)
    r.bits[j] = r.bits[j] && o.bits[j];
  return r;
}

AtomMask AtomMask::operator|(const AtomMask& o) const {
  if (num_props != o.num_props) throw Error("atom mask width mismatch");
  AtomMask r = *this;
  for (std::size_t j = 0; j < r.bits.size(); ++j)
    r.bits[j] = r.bits[j] || o.bits[j];
  return r;
}

bool AtomMask::all_true() const {
  return std::all_of(bits.begin(), bits.end(), [](bool b) { return b; });
}

bool AtomMask::all_false() const {
  return std::none_of(bits.begin(), bits.end(), [](bool b) { return b; });
}

bool AtomMask::subset_of(const AtomMask& o) const {
  if (num_props != o.num_props) throw Error("atom mask width mismatch");
  for (std::size_t j = 0; j < bits.size(); ++j)
    if (bits[j] && !o.bits[j]) return false;
  return true;
}

std::vector<int> AtomMask::true_indices() const {
  std::vector<int> out;
  for (std::size_t j = 0; j < bits.size(); ++j)
    if (bits[j]) out.push_back((int)j);
  return out;
}

void collect_prop_vars(const PropPtr& f, std::vector<std::string>& order) {
  if (!f) return;
  if (f->kind == PropKind::Prim) {
    if (std::find(order.begin(), order.end(), f->name) == order.end())
      order.push_back(f->name);
    return;
  }
  collect_prop_vars(f->lhs, order);
  collect_prop_vars(f->rhs, order);
}

std::vector<std::string> prop_vars(const PropPtr& f) {
  std::vector<std::string> order;
  collect_prop_vars(f, order);
  return order;
}

namespace {

AtomMask mask_rec(const PropPtr& f, std::span<const std::string> order) {
  int n = (int)order.size();
  switch (f->kind) {
    case PropKind::Prim: {
      auto it = std::find(order.begin(), order.end(), f->name);
      if (it == order.end())
        throw Error("unknown proposition '" + f->name + "'");
      int bit = (int)(it - order.begin());
      AtomMask m = AtomMask::zeros(n);
      for (std::size_t j = 0; j < m.bits.size(); ++j)
        m.bits[j] = (j >> bit) & 1u;
      return m;
    }
    case PropKind::True:
      return AtomMask::ones(n);
    case PropKind::False:
      return AtomMask::zeros(n);
    case PropKind::Not:
      return ~mask_rec(f->lhs, order);
    case PropKind::And:
      return mask_rec(f->lhs, order) & mask_rec(f->rhs, order);
    case PropKind::Or:
      return mask_rec(f->lhs, order) | mask_rec(f->rhs, order);
    case PropKind::Implies:
      return ~mask_rec(f->lhs, order) | mask_rec(f->rhs, order);
    case PropKind::Iff: {
      AtomMask a = mask_rec(f->lhs, order), b = mask_rec(f->rhs, order);
      return (a & b) | (~a & ~b);
    }
  }
  throw Error("corrupt propositional formula");
}

}  // namespace

AtomMask atom_mask(const PropPtr& f, std::span<const std::string> order,
                   int atom_cap) {
  if ((int)order.size() > atom_cap)
    throw CapError("proposition count " + std::to_string(order.size()) +
                   " exceeds atom cap " + std::to_string(atom_cap));
  return mask_rec(f, order);
}

bool is_tautology(const PropPtr& f, int atom_cap) {
  auto order = prop_vars(f);
  return atom_mask(f, order, atom_cap).all_true();
}

bool is_equivalent(const PropPtr& a, const PropPtr& b, int atom_cap) {
  std::vector<std::string> order;
  collect_prop_vars(a, order);
  collect_prop_vars(b, order);
  return atom_mask(a, order, atom_cap) == atom_mask(b, order, atom_cap);
}

bool eval_prop(const PropPtr& f, std::span<const std::string> order,
               unsigned long long atom_index) {
  switch (f->kind) {
    case PropKind::Prim: {
      auto it = std::find(order.begin(), order.end(), f->name);
      if (it == order.end())
        throw Error("unknown proposition '" + f->name + "'");
      return (atom_index >> (it - order.begin())) & 1u;
    }
    case PropKind::True:
      return true;
    case PropKind::False:
      return false;
    case PropKind::Not:
      return !eval_prop(f->lhs, order, atom_index);
    case PropKind::And:
      return eval_prop(f->lhs, order, atom_index) &&
             eval_prop(f->rhs, order, atom_index);
    case PropKind::Or:
      return eval_prop(f->lhs, order, atom_index) ||
             eval_prop(f->rhs, order, atom_index);
    case PropKind::Implies:
      return !eval_prop(f->lhs, order, atom_index) ||
             eval_prop(f->rhs, order, atom_index);
    case PropKind::Iff:
      return eval_prop(f->lhs, order, atom_index) ==
             eval_prop(f->rhs, order, atom_index);
  }
  throw Error("corrupt propositional formula");
}

namespace {

// ~ binds over &, & over |, | over =>, <=> lowest.
int prop_prec(PropKind k) {
  switch (k) {
    case PropKind::Iff:
      return 1;
    case PropKind::Implies:
      return 2;
    case PropKind::Or:
      return 3;
    case PropKind::And:
      return 4;
    case PropKind::Not:
      return 5;
    default:
      return 6;
  }
}

void print_rec(const PropPtr& f, int parent_prec, bool tight_side,
               std::string& out) {
  int prec = prop_prec(f->kind);
  bool parens = prec < parent_prec || (prec == parent_prec && tight_side);
  if (parens) out += "(";
  switch (f->kind) {
    case PropKind::Prim:
      out += f->name;
      break;
    case PropKind::True:
      out += "true";
      break;
    case PropKind::False:
      out += "false";
      break;
    case PropKind::Not:
      out += "~";
      print_rec(f->lhs, prec, false, out);
      break;
    case PropKind::And:
    case PropKind::Or:
    case PropKind::Iff: {
      // left-associative
      print_rec(f->lhs, prec, false, out);
      out += f->kind == PropKind::And ? " & "
             : f->kind == PropKind::Or ? " | "
                                       : " <=> ";
      print_rec(f->rhs, prec, true, out);
      break;
    }
    case PropKind::Implies:
      // right-associative
      print_rec(f->lhs, prec, true, out);
      out += " => ";
      print_rec(f->rhs, prec, false, out);
      break;
  }
  if (parens) out += ")";
}

}  // namespace

std::string to_string(const PropPtr& f) {
  std::string out;
  print_rec(f, 0, false, out);
  return out;
}

}  // namespace uplogic
