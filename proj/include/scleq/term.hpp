#pragma once

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace scleq {

/// A function symbol declaration. Constants have arity 0.
struct Symbol {
  std::string name;
  int arity = 0;
};

/// Symbol table for one problem. Symbol ids are dense indices.
class Signature {
 public:
  int add(const std::string& name, int arity);
  std::optional<int> find(const std::string& name) const;
  const Symbol& operator[](int id) const { return symbols_.at(static_cast<size_t>(id)); }
  int size() const { return static_cast<int>(symbols_.size()); }
  std::vector<int> constants() const;

 private:
  std::vector<Symbol> symbols_;
  std::map<std::string, int> byName_;
};

/// First-order term: either a variable (global integer index) or an
/// application of a signature symbol. Immutable, cheap to copy.
class Term {
 public:
  Term() : sym_(-1), var_(0) {}
  static Term var(int index);
  static Term app(int symbol, std::vector<Term> args = {});

  bool isVar() const { return sym_ < 0; }
  int varIndex() const { return var_; }
  int symbol() const { return sym_; }
  const std::vector<Term>& args() const;

  bool operator==(const Term& other) const;
  bool operator!=(const Term& other) const { return !(*this == other); }
  /// Arbitrary total structural order, for use as a map key.
  bool operator<(const Term& other) const;

  bool ground() const;
  bool contains(int varIndex) const;
  void collectVars(std::vector<int>& out) const;
  int maxVar() const;  // -1 if ground
  size_t size() const; // number of nodes

 private:
  Term(int sym, int var, std::shared_ptr<const std::vector<Term>> args)
      : sym_(sym), var_(var), args_(std::move(args)) {}
  int sym_;  // >= 0: symbol id; < 0: variable
  int var_;
  std::shared_ptr<const std::vector<Term>> args_;
};

/// Equational literal s = t or s != t. Storage is oriented: the two sides
/// are kept as given. Semantic symmetry is handled by the operations that
/// need it (see sameModuloSymmetry).
struct Literal {
  bool positive = true;
  Term lhs, rhs;

  bool operator==(const Literal& o) const {
    return positive == o.positive && lhs == o.lhs && rhs == o.rhs;
  }
  bool operator!=(const Literal& o) const { return !(*this == o); }
  bool operator<(const Literal& o) const;
  bool ground() const { return lhs.ground() && rhs.ground(); }
};

/// Multiset of literals; an empty clause denotes the contradiction.
struct Clause {
  std::vector<Literal> lits;

  bool empty() const { return lits.empty(); }
  bool ground() const;
  int maxVar() const;
};

/// Finite map from variables to terms. dom(s) = {x | xs != x}.
class Subst {
 public:
  Subst() = default;
  explicit Subst(std::map<int, Term> bindings);

  const std::map<int, Term>& bindings() const { return bindings_; }
  bool empty() const { return bindings_.empty(); }
  void bind(int var, Term t);
  std::optional<Term> lookup(int var) const;

  Term operator()(const Term& t) const;
  Literal operator()(const Literal& l) const;
  Clause operator()(const Clause& c) const;

  /// Union of two substitutions with disjoint (or agreeing) domains.
  static Subst merged(const Subst& a, const Subst& b);
  bool operator==(const Subst& o) const { return bindings_ == o.bindings_; }

 private:
  std::map<int, Term> bindings_;
};

/// Clause (or literal) paired with a grounding substitution.
struct Closure {
  Clause clause;
  Subst grounding;
};

/// Path of 1-based argument indices; empty is the root position.
/// For literal positions the first index selects the side (1 = lhs, 2 = rhs).
using Position = std::vector<int>;

struct PositionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<Position> positions(const Term& t);
std::vector<Position> positions(const Literal& l);
const Term& subtermAt(const Term& t, const Position& p);
const Term& subtermAt(const Literal& l, const Position& p);
Term replaceAt(const Term& t, const Position& p, const Term& s);
Literal replaceAt(const Literal& l, const Position& p, const Term& s);

Literal complement(const Literal& l);
/// True for s = s' literals with syntactically equal sides.
bool trivialReflexive(const Literal& l);
/// Literal equality up to swapping the two sides.
bool sameModuloSymmetry(const Literal& a, const Literal& b);

std::optional<Subst> mgu(const Term& a, const Term& b);
std::optional<Subst> mgu(const std::vector<Term>& items);
/// Unifies lhs with lhs and rhs with rhs; polarities must agree.
std::optional<Subst> mgu(const Literal& a, const Literal& b);
std::optional<Subst> mguLiterals(const std::vector<Literal>& items);

std::optional<Subst> matchTerm(const Term& pattern, const Term& target);
std::optional<Subst> matchLiteral(const Literal& pattern, const Literal& target);

/// Adds `offset` to every variable index; used to make premises
/// variable disjoint before an inference.
Term renameVars(const Term& t, int offset);
Literal renameVars(const Literal& l, int offset);
Clause renameVars(const Clause& c, int offset);
Subst renameVars(const Subst& s, int offset);

/// Multiset equality of clauses under oriented literal equality.
bool clauseEqualMultiset(const Clause& a, const Clause& b);
/// Multiset equality treating s=t and t=s as the same literal.
bool clauseEqualModuloSymmetry(const Clause& a, const Clause& b);
/// Equality up to a variable renaming (bijective) and literal order.
bool clauseEqualModuloRenaming(const Clause& a, const Clause& b);

std::string toString(const Term& t, const Signature& sig);
std::string toString(const Literal& l, const Signature& sig);
std::string toString(const Clause& c, const Signature& sig);
std::string toString(const Subst& s, const Signature& sig);

}  // namespace scleq
