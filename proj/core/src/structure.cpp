#include "uplogic/structure.hpp"

#include <algorithm>
#include <sstream>

#include "uplogic/error.hpp"

namespace uplogic {

void validate(const UPStructure& m) {
  if (m.states.empty()) throw Error("structure with no states");
  if (m.measures.empty()) throw Error("structure with no measures");
  if (m.valuation.size() != m.states.size())
    throw Error("valuation entry count differs from state count");
  for (std::size_t i = 0; i < m.states.size(); ++i)
    for (std::size_t j = i + 1; j < m.states.size(); ++j)
      if (m.states[i] == m.states[j])
        throw Error("duplicate state id '" + m.states[i] + "'");
  for (const auto& mu : m.measures) {
    if (mu.mass.size() != m.states.size())
      throw Error("measure not defined on exactly the state set");
    Rat total = 0;
    for (const auto& v : mu.mass) {
      if (v < 0) throw Error("negative mass in measure");
      total += v;
    }
    if (total != 1) throw Error("measure masses sum to " + rat_str(total) +
                                ", expected 1");
  }
}

namespace {

bool holds_at(const UPStructure& m, int state, const PropPtr& f) {
  switch (f->kind) {
    case PropKind::Prim: {
      const auto& val = m.valuation[state];
      auto it = val.find(f->name);
      return it != val.end() && it->second;  // absent propositions read false
    }
    case PropKind::True:
      return true;
    case PropKind::False:
      return false;
    case PropKind::Not:
      return !holds_at(m, state, f->lhs);
    case PropKind::And:
      return holds_at(m, state, f->lhs) && holds_at(m, state, f->rhs);
    case PropKind::Or:
      return holds_at(m, state, f->lhs) || holds_at(m, state, f->rhs);
    case PropKind::Implies:
      return !holds_at(m, state, f->lhs) || holds_at(m, state, f->rhs);
    case PropKind::Iff:
      return holds_at(m, state, f->lhs) == holds_at(m, state, f->rhs);
  }
  throw Error("corrupt propositional formula");
}

}  // namespace

std::vector<int> extension(const UPStructure& m, const PropPtr& f) {
  std::vector<int> out;
  for (int s = 0; s < (int)m.states.size(); ++s)
    if (holds_at(m, s, f)) out.push_back(s);
  return out;
}

Rat upper(const UPStructure& m, const std::vector<int>& x) {
  Rat best = 0;  // empty X has mass 0 under every measure
  bool first = true;
  for (const auto& mu : m.measures) {
    Rat mass = 0;
    for (int s : x) mass += mu.mass.at(s);
    if (first || mass > best) best = mass;
    first = false;
  }
  return best;
}

Rat upper_f(const UPStructure& m, const PropPtr& f) {
  return upper(m, extension(m, f));
}

Rat lower_f(const UPStructure& m, const PropPtr& f) {
  return 1 - upper_f(m, !f);
}

bool satisfies(const UPStructure& m, const LPtr& f) {
  switch (f->kind) {
    case LKind::Basic: {
      Rat lhs = 0;
      for (const auto& a : f->basic.term.addends)
        lhs += a.coeff * upper_f(m, a.formula);
      return f->basic.rel == Rel::Geq ? lhs >= f->basic.bound
                                      : lhs > f->basic.bound;
    }
    case LKind::Not:
      return !satisfies(m, f->lhs);
    case LKind::And:
      return satisfies(m, f->lhs) && satisfies(m, f->rhs);
    case LKind::Or:
      return satisfies(m, f->lhs) || satisfies(m, f->rhs);
  }
  throw Error("corrupt likelihood formula");
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

UPStructure read_structure(std::istream& in) {
  UPStructure m;
  std::string line;
  int lineno = 0;
  bool have_states = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto pos = line.find('#'); pos != std::string::npos)
      line.erase(pos);
    auto words = split_ws(line);
    if (words.empty()) continue;
    const std::string& head = words[0];
    if (head == "states") {
      if (have_states) throw ParseError(lineno, 1, "duplicate states line");
      if (words.size() < 2) throw ParseError(lineno, 1, "states line is empty");
      m.states.assign(words.begin() + 1, words.end());
      m.valuation.assign(m.states.size(), {});
      have_states = true;
    } else if (head == "valuation") {
      if (!have_states)
        throw ParseError(lineno, 1, "valuation before states line");
      if (words.size() < 2)
        throw ParseError(lineno, 1, "valuation line without a state id");
      auto it = std::find(m.states.begin(), m.states.end(), words[1]);
      if (it == m.states.end())
        throw ParseError(lineno, 1, "unknown state '" + words[1] + "'");
      auto& val = m.valuation[it - m.states.begin()];
      for (std::size_t i = 2; i < words.size(); ++i) {
        auto colon = words[i].rfind(':');
        if (colon == std::string::npos)
          throw ParseError(lineno, 1,
                           "expected name:bool, got '" + words[i] + "'");
        std::string name = words[i].substr(0, colon);
        std::string flag = words[i].substr(colon + 1);
        if (name.empty() || (flag != "true" && flag != "false"))
          throw ParseError(lineno, 1,
                           "expected name:bool, got '" + words[i] + "'");
        val[name] = flag == "true";
      }
    } else if (head == "measure") {
      if (!have_states)
        throw ParseError(lineno, 1, "measure before states line");
      if (words.size() != m.states.size() + 1)
        throw ParseError(lineno, 1,
                         "measure needs " + std::to_string(m.states.size()) +
                             " masses, got " +
                             std::to_string(words.size() - 1));
      Measure mu;
      for (std::size_t i = 1; i < words.size(); ++i) {
        auto q = rat_parse(words[i]);
        if (!q) throw ParseError(lineno, 1, "bad rational '" + words[i] + "'");
        mu.mass.push_back(*q);
      }
      m.measures.push_back(std::move(mu));
    } else {
      throw ParseError(lineno, 1, "unknown directive '" + head + "'");
    }
  }
  if (!have_states) throw Error("structure file without a states line");
  try {
    validate(m);
  } catch (const Error& e) {
    throw Error(std::string("invalid structure: ") + e.what());
  }
  return m;
}

UPStructure parse_structure(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_structure(in);
}

std::string format_structure(const UPStructure& m) {
  std::string out = "states";
  for (const auto& s : m.states) out += " " + s;
  out += "\n";
  for (std::size_t i = 0; i < m.states.size(); ++i) {
    if (m.valuation[i].empty()) continue;
    out += "valuation " + m.states[i];
    for (const auto& [name, flag] : m.valuation[i])
      out += " " + name + ":" + (flag ? "true" : "false");
    out += "\n";
  }
  for (const auto& mu : m.measures) {
    out += "measure";
    for (const auto& v : mu.mass) out += " " + rat_str(v);
    out += "\n";
  }
  return out;
}

}  // namespace uplogic
