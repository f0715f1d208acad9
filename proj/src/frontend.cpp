#include "scleq/frontend.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

namespace scleq {

namespace {

// ---------------------------------------------------------------------------
// Tokenizer shared by the native and TPTP readers.

struct Token {
  enum Kind { Ident, Int, Punct, End } kind = End;
  std::string text;
  int line = 1, col = 1;
};

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) { advance(); }

  const Token& peek() const { return tok_; }
  Token next() {
    Token t = tok_;
    advance();
    return t;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, tok_.line, tok_.col);
  }

 private:
  void advance() {
    skipSpace();
    tok_ = Token{Token::End, "", line_, col_};
    if (pos_ >= text_.size()) return;
    char c = text_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '$') {
      tok_.kind = Token::Ident;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
              text_[pos_] == '_' || text_[pos_] == '$'))
        tok_.text += take();
      return;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      tok_.kind = Token::Int;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
        tok_.text += take();
      return;
    }
    tok_.kind = Token::Punct;
    if (c == '!' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '=') {
      tok_.text += take();
      tok_.text += take();
      return;
    }
    tok_.text += take();
  }

  void skipSpace() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '%' || c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') take();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        take();
      } else {
        break;
      }
    }
    // Token start position.
    line_ = curLine_;
    col_ = curCol_;
  }

  char take() {
    char c = text_[pos_++];
    if (c == '\n') {
      ++curLine_;
      curCol_ = 1;
    } else {
      ++curCol_;
    }
    return c;
  }

  const std::string& text_;
  size_t pos_ = 0;
  int curLine_ = 1, curCol_ = 1;
  int line_ = 1, col_ = 1;
  Token tok_;
};

bool isPunct(const Token& t, const char* s) {
  return t.kind == Token::Punct && t.text == s;
}

bool upperInitial(const std::string& s) {
  return !s.empty() && std::isupper(static_cast<unsigned char>(s[0]));
}

// ---------------------------------------------------------------------------
// Term and literal parsing over an explicit signature; uppercase identifiers
// are clause-scoped variables.

struct VarScope {
  std::map<std::string, int> byName;
  int lookup(const std::string& name) {
    auto it = byName.find(name);
    if (it != byName.end()) return it->second;
    int idx = static_cast<int>(byName.size());
    byName.emplace(name, idx);
    return idx;
  }
};

Term parseTerm(Lexer& lx, const Signature& sig, VarScope* vars) {
  Token t = lx.peek();
  if (t.kind != Token::Ident) lx.fail("expected a term");
  lx.next();
  if (upperInitial(t.text)) {
    if (!vars) throw ParseError("variable '" + t.text + "' in a ground context", t.line, t.col);
    if (isPunct(lx.peek(), "("))
      throw ParseError("variable '" + t.text + "' cannot take arguments", t.line, t.col);
    return Term::var(vars->lookup(t.text));
  }
  auto id = sig.find(t.text);
  if (!id) throw ParseError("unknown symbol '" + t.text + "'", t.line, t.col);
  std::vector<Term> args;
  if (isPunct(lx.peek(), "(")) {
    lx.next();
    for (;;) {
      args.push_back(parseTerm(lx, sig, vars));
      if (isPunct(lx.peek(), ",")) {
        lx.next();
        continue;
      }
      if (isPunct(lx.peek(), ")")) {
        lx.next();
        break;
      }
      lx.fail("expected ',' or ')' in argument list");
    }
  }
  if (static_cast<int>(args.size()) != sig[*id].arity)
    throw ParseError("symbol '" + t.text + "' has arity " +
                         std::to_string(sig[*id].arity) + " but got " +
                         std::to_string(args.size()) + " arguments",
                     t.line, t.col);
  return Term::app(*id, std::move(args));
}

Literal parseLiteral(Lexer& lx, const Signature& sig, VarScope* vars) {
  Term lhs = parseTerm(lx, sig, vars);
  Token op = lx.peek();
  bool positive;
  if (isPunct(op, "="))
    positive = true;
  else if (isPunct(op, "!="))
    positive = false;
  else
    lx.fail("expected '=' or '!='");
  lx.next();
  Term rhs = parseTerm(lx, sig, vars);
  return Literal{positive, std::move(lhs), std::move(rhs)};
}

void expectTerminator(Lexer& lx, bool clauseStmt) {
  const Token& t = lx.peek();
  if (isPunct(t, ".") || (!clauseStmt && isPunct(t, ";"))) {
    lx.next();
    return;
  }
  lx.fail(clauseStmt ? "expected '.' ending the clause" : "expected ';' or '.'");
}

}  // namespace

// ---------------------------------------------------------------------------
// Native format.

Problem parseNative(const std::string& text) {
  Lexer lx(text);
  Problem p;
  bool sawPrecedence = false;
  std::vector<std::pair<int, int>> weightOverrides;  // symbol id, weight
  std::vector<int> precOrder;                        // symbol ids, ascending

  while (lx.peek().kind != Token::End) {
    Token kw = lx.peek();
    if (kw.kind != Token::Ident) lx.fail("expected a statement keyword");
    lx.next();
    if (kw.text == "sig") {
      while (lx.peek().kind == Token::Ident) {
        Token name = lx.next();
        if (upperInitial(name.text))
          throw ParseError("symbol '" + name.text + "' must not start uppercase",
                           name.line, name.col);
        if (!isPunct(lx.peek(), "/")) lx.fail("expected '/' after symbol name");
        lx.next();
        Token ar = lx.peek();
        if (ar.kind != Token::Int) lx.fail("expected an arity");
        lx.next();
        if (p.sig.find(name.text))
          throw ParseError("symbol '" + name.text + "' declared twice", name.line, name.col);
        p.sig.add(name.text, std::stoi(ar.text));
      }
      expectTerminator(lx, false);
    } else if (kw.text == "order") {
      Token o = lx.peek();
      if (o.kind != Token::Ident || o.text != "kbo")
        lx.fail("unsupported order (only 'kbo')");
      lx.next();
      expectTerminator(lx, false);
    } else if (kw.text == "weights") {
      bool braced = isPunct(lx.peek(), "{");
      if (braced) lx.next();
      while (lx.peek().kind == Token::Ident) {
        Token name = lx.next();
        auto id = p.sig.find(name.text);
        if (!id) throw ParseError("unknown symbol '" + name.text + "'", name.line, name.col);
        if (!isPunct(lx.peek(), "=") && !isPunct(lx.peek(), ":"))
          lx.fail("expected ':' or '=' after symbol name");
        lx.next();
        Token w = lx.peek();
        if (w.kind != Token::Int) lx.fail("expected a weight");
        lx.next();
        weightOverrides.emplace_back(*id, std::stoi(w.text));
        if (isPunct(lx.peek(), ",")) lx.next();
      }
      if (braced) {
        if (!isPunct(lx.peek(), "}")) lx.fail("expected '}'");
        lx.next();
      }
      expectTerminator(lx, false);
    } else if (kw.text == "precedence") {
      sawPrecedence = true;
      for (;;) {
        Token name = lx.peek();
        if (name.kind != Token::Ident) lx.fail("expected a symbol name");
        lx.next();
        auto id = p.sig.find(name.text);
        if (!id) throw ParseError("unknown symbol '" + name.text + "'", name.line, name.col);
        precOrder.push_back(*id);
        if (isPunct(lx.peek(), "<")) {
          lx.next();
          continue;
        }
        break;
      }
      expectTerminator(lx, false);
    } else if (kw.text == "beta") {
      p.beta = parseTerm(lx, p.sig, nullptr);
      expectTerminator(lx, false);
    } else if (kw.text == "decide") {
      Token at = lx.peek();
      Literal l = parseLiteral(lx, p.sig, nullptr);
      (void)at;
      p.decisions.push_back(std::move(l));
      expectTerminator(lx, false);
    } else if (kw.text == "clause") {
      Clause c;
      VarScope vars;
      if (!isPunct(lx.peek(), ".")) {
        for (;;) {
          c.lits.push_back(parseLiteral(lx, p.sig, &vars));
          if (isPunct(lx.peek(), "|")) {
            lx.next();
            continue;
          }
          break;
        }
      }
      expectTerminator(lx, true);
      p.clauses.push_back(std::move(c));
    } else {
      throw ParseError("unknown statement '" + kw.text + "'", kw.line, kw.col);
    }
  }

  p.cfg = KboConfig::uniform(p.sig);
  for (auto [id, w] : weightOverrides) p.cfg.weights[static_cast<size_t>(id)] = w;
  if (sawPrecedence) {
    if (static_cast<int>(precOrder.size()) != p.sig.size())
      throw ParseError("precedence must list every declared symbol exactly once", 1, 1);
    std::vector<bool> seen(static_cast<size_t>(p.sig.size()), false);
    for (size_t rank = 0; rank < precOrder.size(); ++rank) {
      size_t id = static_cast<size_t>(precOrder[rank]);
      if (seen[id])
        throw ParseError("symbol '" + p.sig[precOrder[rank]].name + "' listed twice in precedence", 1, 1);
      seen[id] = true;
      p.cfg.precRank[id] = static_cast<int>(rank);
    }
  }
  return p;
}

// ---------------------------------------------------------------------------
// TPTP CNF subset. The signature is built from use; arities must be
// consistent and every atom must be an equality.

namespace {

Term parseTptpTerm(Lexer& lx, Signature& sig, VarScope& vars) {
  Token t = lx.peek();
  if (t.kind != Token::Ident) lx.fail("expected a term");
  lx.next();
  if (upperInitial(t.text)) {
    if (isPunct(lx.peek(), "("))
      throw ParseError("variable '" + t.text + "' cannot take arguments", t.line, t.col);
    return Term::var(vars.lookup(t.text));
  }
  std::vector<Term> args;
  if (isPunct(lx.peek(), "(")) {
    lx.next();
    for (;;) {
      args.push_back(parseTptpTerm(lx, sig, vars));
      if (isPunct(lx.peek(), ",")) {
        lx.next();
        continue;
      }
      if (isPunct(lx.peek(), ")")) {
        lx.next();
        break;
      }
      lx.fail("expected ',' or ')' in argument list");
    }
  }
  auto id = sig.find(t.text);
  if (!id) {
    id = sig.add(t.text, static_cast<int>(args.size()));
  } else if (sig[*id].arity != static_cast<int>(args.size())) {
    throw ParseError("symbol '" + t.text + "' used with arity " +
                         std::to_string(args.size()) + " but declared with " +
                         std::to_string(sig[*id].arity),
                     t.line, t.col);
  }
  return Term::app(*id, std::move(args));
}

Literal parseTptpLiteral(Lexer& lx, Signature& sig, VarScope& vars) {
  bool negated = false;
  while (isPunct(lx.peek(), "~")) {
    lx.next();
    negated = !negated;
  }
  bool paren = false;
  if (negated && isPunct(lx.peek(), "(")) {
    lx.next();
    paren = true;
  }
  Token head = lx.peek();
  Term lhs = parseTptpTerm(lx, sig, vars);
  Token op = lx.peek();
  bool positive;
  if (isPunct(op, "="))
    positive = true;
  else if (isPunct(op, "!="))
    positive = false;
  else
    throw ParseError("unsupported feature: non-equality predicate '" + head.text + "'",
                     head.line, head.col);
  lx.next();
  Term rhs = parseTptpTerm(lx, sig, vars);
  if (paren) {
    if (!isPunct(lx.peek(), ")")) lx.fail("expected ')'");
    lx.next();
  }
  if (negated) positive = !positive;
  return Literal{positive, std::move(lhs), std::move(rhs)};
}

}  // namespace

Problem parseTptpCnf(const std::string& text) {
  Lexer lx(text);
  Problem p;
  while (lx.peek().kind != Token::End) {
    Token kw = lx.peek();
    if (kw.kind != Token::Ident) lx.fail("expected 'cnf'");
    if (kw.text != "cnf")
      throw ParseError("unsupported feature: " + kw.text, kw.line, kw.col);
    lx.next();
    if (!isPunct(lx.peek(), "(")) lx.fail("expected '('");
    lx.next();
    if (lx.peek().kind != Token::Ident && lx.peek().kind != Token::Int)
      lx.fail("expected a formula name");
    lx.next();
    if (!isPunct(lx.peek(), ",")) lx.fail("expected ','");
    lx.next();
    if (lx.peek().kind != Token::Ident) lx.fail("expected a formula role");
    lx.next();
    if (!isPunct(lx.peek(), ",")) lx.fail("expected ','");
    lx.next();
    bool outerParen = false;
    if (isPunct(lx.peek(), "(")) {
      lx.next();
      outerParen = true;
    }
    Clause c;
    VarScope vars;
    if (lx.peek().kind == Token::Ident && lx.peek().text == "$false") {
      lx.next();  // empty clause
    } else {
      for (;;) {
        c.lits.push_back(parseTptpLiteral(lx, p.sig, vars));
        if (isPunct(lx.peek(), "|")) {
          lx.next();
          continue;
        }
        break;
      }
    }
    if (outerParen) {
      if (!isPunct(lx.peek(), ")")) lx.fail("expected ')'");
      lx.next();
    }
    if (!isPunct(lx.peek(), ")")) lx.fail("expected ')'");
    lx.next();
    if (!isPunct(lx.peek(), ".")) lx.fail("expected '.'");
    lx.next();
    p.clauses.push_back(std::move(c));
  }
  p.cfg = KboConfig::uniform(p.sig);
  return p;
}

// ---------------------------------------------------------------------------
// Printing. Clause variables are renamed to X0, X1, ... in order of first
// occurrence so that reparsing the output reproduces the structure exactly.

namespace {

void collectFirstOccurrence(const Term& t, std::map<int, int>& rename) {
  if (t.isVar()) {
    if (!rename.count(t.varIndex()))
      rename.emplace(t.varIndex(), static_cast<int>(rename.size()));
    return;
  }
  for (const Term& a : t.args()) collectFirstOccurrence(a, rename);
}

Clause canonicalVars(const Clause& c) {
  std::map<int, int> rename;
  for (const Literal& l : c.lits) {
    collectFirstOccurrence(l.lhs, rename);
    collectFirstOccurrence(l.rhs, rename);
  }
  Subst s;
  for (auto [from, to] : rename) s.bind(from, Term::var(to));
  return s(c);
}

}  // namespace

std::string printProblem(const Problem& p) {
  std::ostringstream out;
  out << "sig";
  for (int i = 0; i < p.sig.size(); ++i)
    out << " " << p.sig[i].name << "/" << p.sig[i].arity;
  out << ";\norder kbo;\n";
  if (p.sig.size() > 0) {
    out << "weights {";
    for (int i = 0; i < p.sig.size(); ++i)
      out << (i ? ", " : "") << p.sig[i].name << ":" << p.cfg.weights[static_cast<size_t>(i)];
    out << "};\n";
    std::vector<int> ids(static_cast<size_t>(p.sig.size()));
    for (size_t i = 0; i < ids.size(); ++i) ids[i] = static_cast<int>(i);
    std::sort(ids.begin(), ids.end(), [&](int a, int b) {
      return p.cfg.precRank[static_cast<size_t>(a)] < p.cfg.precRank[static_cast<size_t>(b)];
    });
    out << "precedence";
    for (size_t i = 0; i < ids.size(); ++i)
      out << (i ? " < " : " ") << p.sig[ids[i]].name;
    out << ";\n";
  }
  if (p.beta) out << "beta " << toString(*p.beta, p.sig) << ";\n";
  for (const Literal& l : p.decisions)
    out << "decide " << toString(l, p.sig) << ";\n";
  for (const Clause& c : p.clauses) {
    Clause canon = canonicalVars(c);
    out << "clause";
    if (!canon.lits.empty()) out << " " << toString(canon, p.sig);
    out << " .\n";
  }
  return out.str();
}

Term parseGroundTerm(const std::string& text, const Signature& sig) {
  Lexer lx(text);
  Term t = parseTerm(lx, sig, nullptr);
  if (lx.peek().kind != Token::End) lx.fail("trailing input after term");
  return t;
}

Clause parseClauseText(const std::string& text, const Signature& sig) {
  Lexer lx(text);
  Clause c;
  VarScope vars;
  for (;;) {
    c.lits.push_back(parseLiteral(lx, sig, &vars));
    if (isPunct(lx.peek(), "|")) {
      lx.next();
      continue;
    }
    break;
  }
  if (lx.peek().kind != Token::End) lx.fail("trailing input after clause");
  return c;
}

Literal parseLiteralText(const std::string& text, const Signature& sig) {
  Clause c = parseClauseText(text, sig);
  if (c.lits.size() != 1) throw ParseError("expected a single literal", 1, 1);
  return c.lits[0];
}

// ---------------------------------------------------------------------------
// Trace files. One rule application per line:
//   rule=<name> [clause=<i>] [lit=<j>] [aux=<k>] [subst={X0=t;...}] [detail=...]
// Lines starting with '#' are comments.

namespace {

std::string termNoSpace(const Term& t, const Signature& sig) {
  return toString(t, sig);  // toString never emits spaces inside a term
}

}  // namespace

std::string formatTrace(const std::vector<RuleApplication>& trace, const Signature& sig) {
  std::ostringstream out;
  for (const RuleApplication& ra : trace) {
    out << "rule=" << ra.rule;
    if (ra.clauseIndex >= 0) out << " clause=" << ra.clauseIndex;
    if (ra.litIndex >= 0) out << " lit=" << ra.litIndex;
    if (ra.auxIndex >= 0) out << " aux=" << ra.auxIndex;
    if (!ra.subst.empty()) {
      out << " subst={";
      bool first = true;
      for (const auto& [v, t] : ra.subst.bindings()) {
        if (!first) out << ";";
        first = false;
        out << "X" << v << "=" << termNoSpace(t, sig);
      }
      out << "}";
    }
    if (!ra.detail.empty()) out << " detail=" << ra.detail;
    out << "\n";
  }
  return out.str();
}

std::vector<RuleApplication> parseTrace(const std::string& text, const Signature& sig) {
  std::vector<RuleApplication> out;
  std::istringstream in(text);
  std::string line;
  int lineNo = 0;
  while (std::getline(in, line)) {
    ++lineNo;
    if (line.empty() || line[0] == '#') continue;
    RuleApplication ra;
    size_t pos = 0;
    while (pos < line.size()) {
      while (pos < line.size() && line[pos] == ' ') ++pos;
      if (pos >= line.size()) break;
      size_t eq = line.find('=', pos);
      if (eq == std::string::npos)
        throw ParseError("malformed trace field", lineNo, static_cast<int>(pos) + 1);
      std::string key = line.substr(pos, eq - pos);
      if (key == "detail") {
        ra.detail = line.substr(eq + 1);
        break;
      }
      size_t end = line.find(' ', eq + 1);
      if (end == std::string::npos) end = line.size();
      std::string val = line.substr(eq + 1, end - eq - 1);
      if (key == "rule") {
        ra.rule = val;
      } else if (key == "clause") {
        ra.clauseIndex = std::stoi(val);
      } else if (key == "lit") {
        ra.litIndex = std::stoi(val);
      } else if (key == "aux") {
        ra.auxIndex = std::stoi(val);
      } else if (key == "subst") {
        if (val.size() < 2 || val.front() != '{' || val.back() != '}')
          throw ParseError("malformed substitution", lineNo, static_cast<int>(eq) + 2);
        std::string body = val.substr(1, val.size() - 2);
        size_t p = 0;
        while (p < body.size()) {
          size_t sep = body.find(';', p);
          if (sep == std::string::npos) sep = body.size();
          std::string item = body.substr(p, sep - p);
          size_t ieq = item.find('=');
          if (ieq == std::string::npos || item.empty() || item[0] != 'X')
            throw ParseError("malformed binding '" + item + "'", lineNo, 1);
          int var = std::stoi(item.substr(1, ieq - 1));
          ra.subst.bind(var, parseGroundTerm(item.substr(ieq + 1), sig));
          p = sep + 1;
        }
      } else {
        throw ParseError("unknown trace field '" + key + "'", lineNo,
                         static_cast<int>(pos) + 1);
      }
      pos = end;
    }
    if (ra.rule.empty())
      throw ParseError("trace line without a rule", lineNo, 1);
    out.push_back(std::move(ra));
  }
  return out;
}

// ---------------------------------------------------------------------------

int emitResult(const RunResult& r, const Problem& p, const CliOptions& opt,
               std::ostream& out) {
  const Signature& sig = r.state.sig;
  switch (r.verdict) {
    case Verdict::Unsatisfiable:
      out << "status: Unsatisfiable\n";
      break;
    case Verdict::BoundedModel:
      out << "status: BoundedModel\n";
      break;
    case Verdict::ResourceOut:
      out << "status: ResourceOut\n";
      break;
  }
  for (const std::string& v : r.auditViolations) out << "audit: " << v << "\n";
  if (r.verdict == Verdict::Unsatisfiable) {
    for (const LearnEvent& le : r.learns)
      out << "learned: " << toString(le.clause, sig) << "\n";
    out << "steps: " << r.trace.size() << "\n";
  } else if (r.verdict == Verdict::BoundedModel) {
    out << "beta: " << toString(r.state.beta, sig) << "\n";
    out << r.state.trail.dump(sig);
  } else {
    out << "reason: " << r.stopReason << "\n";
  }
  if (opt.tracePath) {
    std::ofstream f(*opt.tracePath);
    if (!f) {
      out << "error: cannot write trace file " << *opt.tracePath << "\n";
      return 2;
    }
    f << "# " << p.clauses.size() << " input clauses\n";
    f << formatTrace(r.trace, sig);
    for (const LearnEvent& le : r.learns)
      f << "# learned " << toString(le.clause, sig) << "\n";
  }
  switch (r.verdict) {
    case Verdict::Unsatisfiable:
      return 0;
    case Verdict::BoundedModel:
      return 1;
    case Verdict::ResourceOut:
      return 2;
  }
  return 2;
}

}  // namespace scleq
