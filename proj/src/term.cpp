#include "scleq/term.hpp"

#include <algorithm>
#include <sstream>

namespace scleq {

namespace {
const std::vector<Term> kNoArgs;
}

int Signature::add(const std::string& name, int arity) {
  auto it = byName_.find(name);
  if (it != byName_.end()) {
    if (symbols_[static_cast<size_t>(it->second)].arity != arity)
      throw std::runtime_error("symbol '" + name + "' redeclared with different arity");
    return it->second;
  }
  int id = static_cast<int>(symbols_.size());
  symbols_.push_back({name, arity});
  byName_[name] = id;
  return id;
}

std::optional<int> Signature::find(const std::string& name) const {
  auto it = byName_.find(name);
  if (it == byName_.end()) return std::nullopt;
  return it->second;
}

std::vector<int> Signature::constants() const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i)
    if (symbols_[static_cast<size_t>(i)].arity == 0) out.push_back(i);
  return out;
}

Term Term::var(int index) { return Term(-1, index, nullptr); }

Term Term::app(int symbol, std::vector<Term> args) {
  std::shared_ptr<const std::vector<Term>> shared;
  if (!args.empty()) shared = std::make_shared<const std::vector<Term>>(std::move(args));
  return Term(symbol, 0, std::move(shared));
}

const std::vector<Term>& Term::args() const {
  return args_ ? *args_ : kNoArgs;
}

bool Term::operator==(const Term& other) const {
  if (sym_ != other.sym_) return false;
  if (isVar()) return var_ == other.var_;
  if (args_ == other.args_) return true;
  const auto& a = args();
  const auto& b = other.args();
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (!(a[i] == b[i])) return false;
  return true;
}

bool Term::operator<(const Term& other) const {
  if (sym_ != other.sym_) return sym_ < other.sym_;
  if (isVar()) return var_ < other.var_;
  const auto& a = args();
  const auto& b = other.args();
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

bool Term::ground() const {
  if (isVar()) return false;
  for (const Term& a : args())
    if (!a.ground()) return false;
  return true;
}

bool Term::contains(int varIndex) const {
  if (isVar()) return var_ == varIndex;
  for (const Term& a : args())
    if (a.contains(varIndex)) return true;
  return false;
}

void Term::collectVars(std::vector<int>& out) const {
  if (isVar()) {
    out.push_back(var_);
    return;
  }
  for (const Term& a : args()) a.collectVars(out);
}

int Term::maxVar() const {
  if (isVar()) return var_;
  int m = -1;
  for (const Term& a : args()) m = std::max(m, a.maxVar());
  return m;
}

size_t Term::size() const {
  if (isVar()) return 1;
  size_t n = 1;
  for (const Term& a : args()) n += a.size();
  return n;
}

bool Literal::operator<(const Literal& o) const {
  if (positive != o.positive) return positive < o.positive;
  if (lhs != o.lhs) return lhs < o.lhs;
  return rhs < o.rhs;
}

bool Clause::ground() const {
  for (const Literal& l : lits)
    if (!l.ground()) return false;
  return true;
}

int Clause::maxVar() const {
  int m = -1;
  for (const Literal& l : lits) m = std::max({m, l.lhs.maxVar(), l.rhs.maxVar()});
  return m;
}

Subst::Subst(std::map<int, Term> bindings) : bindings_(std::move(bindings)) {
  // Drop identity bindings so dom(s) = {x | xs != x} holds.
  for (auto it = bindings_.begin(); it != bindings_.end();) {
    if (it->second.isVar() && it->second.varIndex() == it->first)
      it = bindings_.erase(it);
    else
      ++it;
  }
}

void Subst::bind(int var, Term t) {
  if (t.isVar() && t.varIndex() == var) return;
  bindings_.insert_or_assign(var, std::move(t));
}

std::optional<Term> Subst::lookup(int var) const {
  auto it = bindings_.find(var);
  if (it == bindings_.end()) return std::nullopt;
  return it->second;
}

Term Subst::operator()(const Term& t) const {
  if (t.isVar()) {
    auto it = bindings_.find(t.varIndex());
    return it == bindings_.end() ? t : it->second;
  }
  if (t.ground() || bindings_.empty()) return t;
  std::vector<Term> args;
  args.reserve(t.args().size());
  for (const Term& a : t.args()) args.push_back((*this)(a));
  return Term::app(t.symbol(), std::move(args));
}

Literal Subst::operator()(const Literal& l) const {
  return Literal{l.positive, (*this)(l.lhs), (*this)(l.rhs)};
}

Clause Subst::operator()(const Clause& c) const {
  Clause out;
  out.lits.reserve(c.lits.size());
  for (const Literal& l : c.lits) out.lits.push_back((*this)(l));
  return out;
}

Subst Subst::merged(const Subst& a, const Subst& b) {
  Subst out = a;
  for (const auto& [v, t] : b.bindings_) {
    auto existing = out.lookup(v);
    if (existing && *existing != t)
      throw std::runtime_error("Subst::merged: conflicting bindings");
    out.bind(v, t);
  }
  return out;
}

std::vector<Position> positions(const Term& t) {
  std::vector<Position> out{{}};
  for (size_t i = 0; i < t.args().size(); ++i) {
    for (Position p : positions(t.args()[i])) {
      Position q{static_cast<int>(i) + 1};
      q.insert(q.end(), p.begin(), p.end());
      out.push_back(std::move(q));
    }
  }
  return out;
}

std::vector<Position> positions(const Literal& l) {
  std::vector<Position> out;
  for (int side = 1; side <= 2; ++side) {
    const Term& t = side == 1 ? l.lhs : l.rhs;
    for (Position p : positions(t)) {
      Position q{side};
      q.insert(q.end(), p.begin(), p.end());
      out.push_back(std::move(q));
    }
  }
  return out;
}

const Term& subtermAt(const Term& t, const Position& p) {
  const Term* cur = &t;
  for (int i : p) {
    if (cur->isVar() || i < 1 || i > static_cast<int>(cur->args().size()))
      throw PositionError("invalid position");
    cur = &cur->args()[static_cast<size_t>(i - 1)];
  }
  return *cur;
}

const Term& subtermAt(const Literal& l, const Position& p) {
  if (p.empty() || (p[0] != 1 && p[0] != 2)) throw PositionError("invalid literal position");
  Position rest(p.begin() + 1, p.end());
  return subtermAt(p[0] == 1 ? l.lhs : l.rhs, rest);
}

Term replaceAt(const Term& t, const Position& p, const Term& s) {
  if (p.empty()) return s;
  if (t.isVar() || p[0] < 1 || p[0] > static_cast<int>(t.args().size()))
    throw PositionError("invalid position");
  std::vector<Term> args = t.args();
  Position rest(p.begin() + 1, p.end());
  size_t i = static_cast<size_t>(p[0] - 1);
  args[i] = replaceAt(args[i], rest, s);
  return Term::app(t.symbol(), std::move(args));
}

Literal replaceAt(const Literal& l, const Position& p, const Term& s) {
  if (p.empty() || (p[0] != 1 && p[0] != 2)) throw PositionError("invalid literal position");
  Position rest(p.begin() + 1, p.end());
  Literal out = l;
  if (p[0] == 1)
    out.lhs = replaceAt(l.lhs, rest, s);
  else
    out.rhs = replaceAt(l.rhs, rest, s);
  return out;
}

Literal complement(const Literal& l) { return Literal{!l.positive, l.lhs, l.rhs}; }

bool trivialReflexive(const Literal& l) { return l.lhs == l.rhs; }

bool sameModuloSymmetry(const Literal& a, const Literal& b) {
  return a.positive == b.positive &&
         ((a.lhs == b.lhs && a.rhs == b.rhs) || (a.lhs == b.rhs && a.rhs == b.lhs));
}

namespace {

// Robinson unification over an explicit equation worklist. When two
// variables meet, the higher-indexed one is bound to the lower-indexed one.
bool unify(std::vector<std::pair<Term, Term>> work, Subst& sigma) {
  while (!work.empty()) {
    auto [s, t] = work.back();
    work.pop_back();
    s = sigma(s);
    t = sigma(t);
    if (s == t) continue;
    if (s.isVar() || t.isVar()) {
      if (s.isVar() && t.isVar()) {
        int a = s.varIndex(), b = t.varIndex();
        int lo = std::min(a, b), hi = std::max(a, b);
        Subst step;
        step.bind(hi, Term::var(lo));
        // Fold the new binding into sigma, keeping it idempotent.
        Subst folded;
        for (const auto& [v, u] : sigma.bindings()) folded.bind(v, step(u));
        folded.bind(hi, Term::var(lo));
        sigma = folded;
        continue;
      }
      if (t.isVar()) std::swap(s, t);
      if (t.contains(s.varIndex())) return false;  // occurs check
      Subst step;
      step.bind(s.varIndex(), t);
      Subst folded;
      for (const auto& [v, u] : sigma.bindings()) folded.bind(v, step(u));
      folded.bind(s.varIndex(), t);
      sigma = folded;
      continue;
    }
    if (s.symbol() != t.symbol()) return false;
    for (size_t i = 0; i < s.args().size(); ++i)
      work.emplace_back(s.args()[i], t.args()[i]);
  }
  return true;
}

}  // namespace

std::optional<Subst> mgu(const Term& a, const Term& b) {
  Subst sigma;
  if (!unify({{a, b}}, sigma)) return std::nullopt;
  return sigma;
}

std::optional<Subst> mgu(const std::vector<Term>& items) {
  if (items.empty()) return std::nullopt;
  std::vector<std::pair<Term, Term>> work;
  for (size_t i = 1; i < items.size(); ++i) work.emplace_back(items[0], items[i]);
  Subst sigma;
  if (!unify(std::move(work), sigma)) return std::nullopt;
  return sigma;
}

std::optional<Subst> mgu(const Literal& a, const Literal& b) {
  if (a.positive != b.positive) return std::nullopt;
  Subst sigma;
  if (!unify({{a.lhs, b.lhs}, {a.rhs, b.rhs}}, sigma)) return std::nullopt;
  return sigma;
}

std::optional<Subst> mguLiterals(const std::vector<Literal>& items) {
  if (items.empty()) return std::nullopt;
  std::vector<std::pair<Term, Term>> work;
  for (size_t i = 1; i < items.size(); ++i) {
    if (items[i].positive != items[0].positive) return std::nullopt;
    work.emplace_back(items[0].lhs, items[i].lhs);
    work.emplace_back(items[0].rhs, items[i].rhs);
  }
  Subst sigma;
  if (!unify(std::move(work), sigma)) return std::nullopt;
  return sigma;
}

namespace {

bool matchInto(const Term& pattern, const Term& target, Subst& sigma) {
  if (pattern.isVar()) {
    auto bound = sigma.lookup(pattern.varIndex());
    if (bound) return *bound == target;
    sigma.bind(pattern.varIndex(), target);
    return true;
  }
  if (target.isVar() || pattern.symbol() != target.symbol()) return false;
  for (size_t i = 0; i < pattern.args().size(); ++i)
    if (!matchInto(pattern.args()[i], target.args()[i], sigma)) return false;
  return true;
}

}  // namespace

std::optional<Subst> matchTerm(const Term& pattern, const Term& target) {
  Subst sigma;
  if (!matchInto(pattern, target, sigma)) return std::nullopt;
  return sigma;
}

std::optional<Subst> matchLiteral(const Literal& pattern, const Literal& target) {
  if (pattern.positive != target.positive) return std::nullopt;
  Subst sigma;
  if (!matchInto(pattern.lhs, target.lhs, sigma)) return std::nullopt;
  if (!matchInto(pattern.rhs, target.rhs, sigma)) return std::nullopt;
  return sigma;
}

Term renameVars(const Term& t, int offset) {
  if (t.isVar()) return Term::var(t.varIndex() + offset);
  if (t.ground()) return t;
  std::vector<Term> args;
  args.reserve(t.args().size());
  for (const Term& a : t.args()) args.push_back(renameVars(a, offset));
  return Term::app(t.symbol(), std::move(args));
}

Literal renameVars(const Literal& l, int offset) {
  return Literal{l.positive, renameVars(l.lhs, offset), renameVars(l.rhs, offset)};
}

Clause renameVars(const Clause& c, int offset) {
  Clause out;
  out.lits.reserve(c.lits.size());
  for (const Literal& l : c.lits) out.lits.push_back(renameVars(l, offset));
  return out;
}

Subst renameVars(const Subst& s, int offset) {
  Subst out;
  for (const auto& [v, t] : s.bindings()) out.bind(v + offset, t);
  return out;
}

namespace {

template <typename Eq>
bool multisetEqual(const std::vector<Literal>& a, const std::vector<Literal>& b, Eq eq) {
  if (a.size() != b.size()) return false;
  std::vector<bool> used(b.size(), false);
  for (const Literal& la : a) {
    bool found = false;
    for (size_t j = 0; j < b.size(); ++j) {
      if (!used[j] && eq(la, b[j])) {
        used[j] = true;
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

}  // namespace

bool clauseEqualMultiset(const Clause& a, const Clause& b) {
  return multisetEqual(a.lits, b.lits, [](const Literal& x, const Literal& y) { return x == y; });
}

bool clauseEqualModuloSymmetry(const Clause& a, const Clause& b) {
  return multisetEqual(a.lits, b.lits, sameModuloSymmetry);
}

namespace {

// Tries to extend a variable bijection so that sa maps onto sb.
bool alphaEqual(const Term& sa, const Term& sb, std::map<int, int>& fwd, std::map<int, int>& bwd) {
  if (sa.isVar() != sb.isVar()) return false;
  if (sa.isVar()) {
    auto f = fwd.find(sa.varIndex());
    auto g = bwd.find(sb.varIndex());
    if (f == fwd.end() && g == bwd.end()) {
      fwd[sa.varIndex()] = sb.varIndex();
      bwd[sb.varIndex()] = sa.varIndex();
      return true;
    }
    return f != fwd.end() && f->second == sb.varIndex() && g != bwd.end() &&
           g->second == sa.varIndex();
  }
  if (sa.symbol() != sb.symbol()) return false;
  for (size_t i = 0; i < sa.args().size(); ++i)
    if (!alphaEqual(sa.args()[i], sb.args()[i], fwd, bwd)) return false;
  return true;
}

bool clauseRenamingSearch(const Clause& a, const Clause& b, size_t i, std::vector<bool>& used,
                          std::map<int, int>& fwd, std::map<int, int>& bwd) {
  if (i == a.lits.size()) return true;
  const Literal& la = a.lits[i];
  for (size_t j = 0; j < b.lits.size(); ++j) {
    if (used[j]) continue;
    const Literal& lb = b.lits[j];
    if (la.positive != lb.positive) continue;
    auto savedFwd = fwd;
    auto savedBwd = bwd;
    if (alphaEqual(la.lhs, lb.lhs, fwd, bwd) && alphaEqual(la.rhs, lb.rhs, fwd, bwd)) {
      used[j] = true;
      if (clauseRenamingSearch(a, b, i + 1, used, fwd, bwd)) return true;
      used[j] = false;
    }
    fwd = savedFwd;
    bwd = savedBwd;
  }
  return false;
}

}  // namespace

bool clauseEqualModuloRenaming(const Clause& a, const Clause& b) {
  if (a.lits.size() != b.lits.size()) return false;
  std::vector<bool> used(b.lits.size(), false);
  std::map<int, int> fwd, bwd;
  return clauseRenamingSearch(a, b, 0, used, fwd, bwd);
}

std::string toString(const Term& t, const Signature& sig) {
  if (t.isVar()) return "X" + std::to_string(t.varIndex());
  std::string out = sig[t.symbol()].name;
  if (!t.args().empty()) {
    out += "(";
    for (size_t i = 0; i < t.args().size(); ++i) {
      if (i) out += ",";
      out += toString(t.args()[i], sig);
    }
    out += ")";
  }
  return out;
}

std::string toString(const Literal& l, const Signature& sig) {
  return toString(l.lhs, sig) + (l.positive ? " = " : " != ") + toString(l.rhs, sig);
}

std::string toString(const Clause& c, const Signature& sig) {
  if (c.lits.empty()) return "<empty>";
  std::string out;
  for (size_t i = 0; i < c.lits.size(); ++i) {
    if (i) out += " | ";
    out += toString(c.lits[i], sig);
  }
  return out;
}

std::string toString(const Subst& s, const Signature& sig) {
  std::string out = "{";
  bool first = true;
  for (const auto& [v, t] : s.bindings()) {
    if (!first) out += ", ";
    first = false;
    out += "X" + std::to_string(v) + " -> " + toString(t, sig);
  }
  return out + "}";
}

}  // namespace scleq
