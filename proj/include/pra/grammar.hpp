#ifndef PRA_GRAMMAR_HPP
#define PRA_GRAMMAR_HPP

#include <sstream>

#include "pra/table.hpp"

namespace pra {

// ---------------------------------------------------------------------------
// ASCII surface grammar.
//
// Terms use parentheses as groupers, formulas use brackets or braces; the
// connective tokens are  ~  |  &  ->  <->  over relations  =  !=  <=  <
// pre<=  pre<  begins_with  ends_with  and the postfix  is_power_of_two.
// Bounded quantifiers are written  exists x <= b [ A ]  etc.
// Term operators:  +  -.  (+)  *  ^  ^^  and the dotted connectives
// =.  ~.  |.  &.  ->.  <->.  (function symbols, not logic).
// ~ binds tightly; | and & bind more tightly than -> and <->; infix
// operators associate to the right.
// ---------------------------------------------------------------------------

struct ParseError : Error {
  std::size_t pos;
  ParseError(const std::string& msg, std::size_t at)
      : Error("parse-error", msg + " at offset " + std::to_string(at)), pos(at) {}
};

namespace lex {

enum class Tok : std::uint8_t {
  Ident, Number, LParen, RParen, LBrack, RBrack, Comma,
  Plus, Monus, Concat, Times, Pow, PowPow,
  DotEq, DotNeg, DotOr, DotAnd, DotImp, DotIff,
  Eq, Neq, Le, Lt, PreLe, PreLt,
  Neg, Or, And, Imp, Iff,
  Exists, Forall, BeginsWith, EndsWith, IsPow2,
  End
};

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

inline bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'' ||
         c == '#' || c == '@';
}

inline std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto push = [&](Tok k, std::size_t len) {
    out.push_back(Token{k, std::string(s.substr(i, len)), i});
    i += len;
  };
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) { ++i; continue; }
    if (s.compare(i, 3, "(+)") == 0) { push(Tok::Concat, 3); continue; }
    if (c == '(') { push(Tok::LParen, 1); continue; }
    if (c == ')') { push(Tok::RParen, 1); continue; }
    if (c == '[' || c == '{') { push(Tok::LBrack, 1); continue; }
    if (c == ']' || c == '}') { push(Tok::RBrack, 1); continue; }
    if (c == ',') { push(Tok::Comma, 1); continue; }
    if (s.compare(i, 5, "pre<=") == 0) { push(Tok::PreLe, 5); continue; }
    if (s.compare(i, 4, "pre<") == 0) { push(Tok::PreLt, 4); continue; }
    if (s.compare(i, 4, "<->.") == 0) { push(Tok::DotIff, 4); continue; }
    if (s.compare(i, 3, "<->") == 0) { push(Tok::Iff, 3); continue; }
    if (s.compare(i, 3, "->.") == 0) { push(Tok::DotImp, 3); continue; }
    if (s.compare(i, 2, "->") == 0) { push(Tok::Imp, 2); continue; }
    if (s.compare(i, 2, "-.") == 0) { push(Tok::Monus, 2); continue; }
    if (s.compare(i, 2, "<=") == 0) { push(Tok::Le, 2); continue; }
    if (c == '<') { push(Tok::Lt, 1); continue; }
    if (s.compare(i, 2, "=.") == 0) { push(Tok::DotEq, 2); continue; }
    if (c == '=') { push(Tok::Eq, 1); continue; }
    if (s.compare(i, 2, "!=") == 0) { push(Tok::Neq, 2); continue; }
    if (s.compare(i, 2, "~.") == 0) { push(Tok::DotNeg, 2); continue; }
    if (c == '~') { push(Tok::Neg, 1); continue; }
    if (s.compare(i, 2, "|.") == 0) { push(Tok::DotOr, 2); continue; }
    if (c == '|') { push(Tok::Or, 1); continue; }
    if (s.compare(i, 2, "&.") == 0) { push(Tok::DotAnd, 2); continue; }
    if (c == '&') { push(Tok::And, 1); continue; }
    if (c == '+') { push(Tok::Plus, 1); continue; }
    if (c == '*') { push(Tok::Times, 1); continue; }
    if (s.compare(i, 2, "^^") == 0) { push(Tok::PowPow, 2); continue; }
    if (c == '^') { push(Tok::Pow, 1); continue; }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back(Token{Tok::Number, std::string(s.substr(i, j - i)), i});
      i = j;
      continue;
    }
    if (ident_char(c) && !std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && ident_char(s[j])) ++j;
      std::string word(s.substr(i, j - i));
      Tok k = Tok::Ident;
      if (word == "exists") k = Tok::Exists;
      else if (word == "forall") k = Tok::Forall;
      else if (word == "begins_with") k = Tok::BeginsWith;
      else if (word == "ends_with") k = Tok::EndsWith;
      else if (word == "is_power_of_two") k = Tok::IsPow2;
      out.push_back(Token{k, word, i});
      i = j;
      continue;
    }
    throw ParseError("unexpected character '" + std::string(1, c) + "'", i);
  }
  out.push_back(Token{Tok::End, "", s.size()});
  return out;
}

}  // namespace lex

class Parser {
 public:
  Parser(std::string_view text, FunctionTable& table)
      : toks_(lex::tokenize(text)), table_(table) {}

  // Symbols being introduced by the entry under parse (prefix-unary style,
  // e.g. "P 0 = 0 & P S x = x" before P is registered).
  void declare_unary(std::string name) { pending_.insert(std::move(name)); }

  TermId parse_term_all() {
    TermId t = parse_term();
    expect(lex::Tok::End, "end of input");
    return t;
  }
  FormulaId parse_formula_all() {
    FormulaId f = parse_formula();
    expect(lex::Tok::End, "end of input");
    return f;
  }

  // exposed for hint parsing (stops at unconsumed delimiters)
  TermId parse_term() { return parse_term_level(0); }
  FormulaId parse_formula() { return parse_iff(); }
  bool at_end() const { return peek().kind == lex::Tok::End; }

 private:
  using Tok = lex::Tok;

  const lex::Token& peek(std::size_t ahead = 0) const {
    std::size_t i = std::min(pos_ + ahead, toks_.size() - 1);
    return toks_[i];
  }
  const lex::Token& next() { return toks_[std::min(pos_++, toks_.size() - 1)]; }
  bool accept(Tok k) {
    if (peek().kind == k) { ++pos_; return true; }
    return false;
  }
  void expect(Tok k, const std::string& what) {
    if (!accept(k)) throw ParseError("expected " + what, peek().pos);
  }

  // ---- formulas -----------------------------------------------------------

  FormulaId parse_iff() {
    FormulaId lhs = parse_imp();
    if (accept(Tok::Iff)) return mk_iff(lhs, parse_iff());
    return lhs;
  }
  FormulaId parse_imp() {
    FormulaId lhs = parse_or_and();
    if (accept(Tok::Imp)) return mk_imp(lhs, parse_imp());
    return lhs;
  }
  FormulaId parse_or_and() {
    FormulaId lhs = parse_funit();
    if (accept(Tok::Or)) return mk_or(lhs, parse_or_and());
    if (accept(Tok::And)) return mk_and(lhs, parse_or_and());
    return lhs;
  }
  FormulaId parse_funit() {
    if (accept(Tok::Neg)) return mk_neg(parse_funit());
    if (peek().kind == Tok::LBrack) {
      next();
      FormulaId f = parse_formula();
      expect(Tok::RBrack, "']'");
      return f;
    }
    if (peek().kind == Tok::Exists || peek().kind == Tok::Forall)
      return parse_bounded();
    return parse_atom();
  }

  FormulaId parse_bounded() {
    bool ex = next().kind == Tok::Exists;
    if (peek().kind != Tok::Ident) throw ParseError("expected variable", peek().pos);
    Sym v = var(next().text);
    QKind q;
    Sym bsym = kNoId;
    switch (peek().kind) {
      case Tok::Le: next(); q = ex ? QKind::ExistsLe : QKind::ForallLe; break;
      case Tok::Lt: next(); q = ex ? QKind::ExistsLt : QKind::ForallLt; break;
      case Tok::PreLe:
        next(); q = ex ? QKind::ExistsSym : QKind::ForallSym;
        bsym = fn("pre<=", 2);
        break;
      case Tok::PreLt:
        next(); q = ex ? QKind::ExistsSym : QKind::ForallSym;
        bsym = fn("pre<", 2);
        break;
      default:
        throw ParseError("expected bound relation", peek().pos);
    }
    TermId bound = parse_term();
    expect(Tok::LBrack, "'[' before quantifier body");
    FormulaId body = parse_formula();
    expect(Tok::RBrack, "']' after quantifier body");
    return mk_bounded(q, v, bound, body, bsym);
  }

  FormulaId parse_atom() {
    // predicate call  p(args)  where p is a registered predicate
    if (peek().kind == Tok::Ident && peek(1).kind == Tok::LParen &&
        table_.has_pred(peek().text)) {
      std::string name = next().text;
      next();  // (
      std::vector<TermId> args;
      if (!accept(Tok::RParen)) {
        do args.push_back(parse_term());
        while (accept(Tok::Comma));
        expect(Tok::RParen, "')'");
      }
      Sym p = fn(name, static_cast<std::uint32_t>(args.size()));
      return mk_pred(p, std::move(args));
    }
    TermId lhs = parse_term();
    switch (peek().kind) {
      case Tok::Eq: next(); return mk_eq(lhs, parse_term());
      case Tok::Neq: next(); return mk_neq(lhs, parse_term());
      case Tok::Le: next(); return mk_pred(fn("<=", 2), {lhs, parse_term()});
      case Tok::Lt: next(); return mk_pred(fn("<", 2), {lhs, parse_term()});
      case Tok::PreLe: next(); return mk_pred(fn("pre<=", 2), {lhs, parse_term()});
      case Tok::PreLt: next(); return mk_pred(fn("pre<", 2), {lhs, parse_term()});
      case Tok::BeginsWith: next(); return mk_pred(fn("begins_with", 2), {lhs, parse_term()});
      case Tok::EndsWith: next(); return mk_pred(fn("ends_with", 2), {lhs, parse_term()});
      case Tok::IsPow2: next(); return mk_pred(fn("is_power_of_two", 1), {lhs});
      default: {
        // predicate-definition heads parse before registration: a bare
        // application at atom position is a predicate application
        const TermNode n = terms().node(lhs);
        if (!is_var(n.head) && !n.args.empty() && !table_.has(n.head))
          return mk_pred(n.head, n.args);
        throw ParseError("expected relation", peek().pos);
      }
    }
  }

  // ---- terms --------------------------------------------------------------
  // level 0: =. (dotted connective tier: <->. ->. |. &. =.), right assoc
  // level 1: + -. (+)    level 2: *    level 3: ^ ^^    then prefix/primary

  TermId parse_term_level(int level) {
    switch (level) {
      case 0: {  // dotted iff/imp
        TermId lhs = parse_term_level(1);
        if (accept(Tok::DotIff)) return app2("<->.", lhs, parse_term_level(0));
        if (accept(Tok::DotImp)) return app2("->.", lhs, parse_term_level(0));
        return lhs;
      }
      case 1: {  // dotted or/and
        TermId lhs = parse_term_level(2);
        if (accept(Tok::DotOr)) return app2("|.", lhs, parse_term_level(1));
        if (accept(Tok::DotAnd)) return app2("&.", lhs, parse_term_level(1));
        return lhs;
      }
      case 2: {  // dotted equality
        TermId lhs = parse_term_level(3);
        if (accept(Tok::DotEq)) return app2("=.", lhs, parse_term_level(2));
        return lhs;
      }
      case 3: {  // additive
        TermId lhs = parse_term_level(4);
        for (;;) {
          if (accept(Tok::Plus)) { lhs = app2("+", lhs, parse_term_level(4)); continue; }
          if (accept(Tok::Monus)) { lhs = app2("-.", lhs, parse_term_level(4)); continue; }
          if (accept(Tok::Concat)) {
            // (+) associates to the right, matching the paper's notation
            return app2("(+)", lhs, parse_term_level(3));
          }
          return lhs;
        }
      }
      case 4: {  // multiplicative
        TermId lhs = parse_term_level(5);
        while (accept(Tok::Times)) lhs = app2("*", lhs, parse_term_level(5));
        return lhs;
      }
      case 5: {  // exponentiation, right assoc
        TermId lhs = parse_primary();
        if (accept(Tok::Pow)) return app2("^", lhs, parse_term_level(5));
        if (accept(Tok::PowPow)) return app2("^^", lhs, parse_term_level(5));
        return lhs;
      }
      default:
        return parse_primary();
    }
  }

  TermId app2(std::string_view name, TermId a, TermId b) {
    return mk_term(fn(name, 2), {a, b});
  }

  TermId parse_primary() {
    if (accept(Tok::DotNeg)) return mk_term(fn("~.", 1), {parse_primary()});
    const lex::Token& t = peek();
    if (t.kind == Tok::LParen) {
      next();
      TermId inner = parse_term();
      expect(Tok::RParen, "')'");
      return inner;
    }
    if (t.kind == Tok::Number) {
      next();
      if (t.text == "0") return mk_zero();
      if (auto c = symbols().lookup(t.text, SymKind::Function);
          c && arity(*c) == 0 && table_.has(*c))
        return mk_term(*c);
      return mk_numeral(std::stoull(t.text));
    }
    if (t.kind != Tok::Ident) throw ParseError("expected term", t.pos);
    std::string name = next().text;
    // explicit call syntax f(args)
    if (peek().kind == Tok::LParen) {
      next();
      std::vector<TermId> args;
      if (!accept(Tok::RParen)) {
        do args.push_back(parse_term());
        while (accept(Tok::Comma));
        expect(Tok::RParen, "')'");
      }
      Sym f = fn(name, static_cast<std::uint32_t>(args.size()));
      return mk_term(f, std::move(args));
    }
    // registered unary function symbols act as tight prefixes: S, P, Q, ...
    if (pending_.count(name)) return mk_term(fn(name, 1), {parse_primary()});
    if (auto f = symbols().lookup(name, SymKind::Function)) {
      if (table_.has(*f)) {
        if (arity(*f) == 0) return mk_term(*f);
        if (arity(*f) == 1) return mk_term(*f, {parse_primary()});
      }
    }
    return mk_var_term(name);
  }

  std::vector<lex::Token> toks_;
  std::size_t pos_ = 0;
  FunctionTable& table_;
  std::set<std::string> pending_;
};

inline TermId parse_term(std::string_view s, FunctionTable& t) {
  return Parser(s, t).parse_term_all();
}
inline FormulaId parse_formula(std::string_view s, FunctionTable& t) {
  return Parser(s, t).parse_formula_all();
}

// ---------------------------------------------------------------------------
// Printing (inverse of the parser; minimal parentheses).
// ---------------------------------------------------------------------------

namespace detail {

inline int term_op_level(const std::string& n) {
  if (n == "<->." || n == "->.") return 0;
  if (n == "|." || n == "&.") return 1;
  if (n == "=.") return 2;
  if (n == "+" || n == "-." || n == "(+)") return 3;
  if (n == "*") return 4;
  if (n == "^" || n == "^^") return 5;
  return -1;
}

inline bool term_op_left_assoc(const std::string& n) {
  return n == "+" || n == "-." || n == "*";
}

// parentLevel: minimum level a child may have without parentheses; the
// second component carries "same-level same-op on the assoc side is fine".
inline void print_term(std::ostream& os, TermId t, int parentLevel,
                       const std::string& parentOp = "", bool assocSide = false);

inline void print_term(std::ostream& os, TermId t, int parentLevel,
                       const std::string& parentOp, bool assocSide) {
  const TermNode n = terms().node(t);
  std::string name = sym_name(n.head);
  if (n.args.empty()) { os << name; return; }
  int lv = n.args.size() == 2 ? term_op_level(name) : -1;
  if (lv >= 0) {
    bool paren = lv < parentLevel ||
                 (lv == parentLevel && !(assocSide && name == parentOp));
    if (paren) os << "( ";
    bool leftAssoc = term_op_left_assoc(name);
    print_term(os, n.args[0], lv, name, leftAssoc);
    os << ' ' << name << ' ';
    print_term(os, n.args[1], lv, name, !leftAssoc);
    if (paren) os << " )";
    return;
  }
  if (n.args.size() == 1 && name != "~.") {
    os << name << ' ';
    print_term(os, n.args[0], 1000);
    return;
  }
  if (name == "~.") {
    os << "~. ";
    print_term(os, n.args[0], 1000);
    return;
  }
  os << name << " ( ";
  for (std::size_t i = 0; i < n.args.size(); ++i) {
    if (i) os << " , ";
    print_term(os, n.args[i], -1);
  }
  os << " )";
}

// formula levels: 0 iff, 1 imp, 2 or/and, 3 unit
inline void print_formula(std::ostream& os, FormulaId f, int level);

inline bool print_sugar(std::ostream& os, FormulaId f, int level) {
  // iff:  A <-> B  ==  [~A|B] & [A|~B]
  if (auto both = match_and(f)) {
    auto [l, r] = *both;
    auto li = match_imp(l);
    auto rn = formulas().node(r);
    if (li && rn.kind == FKind::Or) {
      auto rr = formulas().node(rn.f1);
      if (rr.kind == FKind::Neg && rn.f0 == li->first && rr.f0 == li->second) {
        bool paren = level > 0;
        if (paren) os << "[ ";
        print_formula(os, li->first, 1);
        os << " <-> ";
        print_formula(os, li->second, 0);
        if (paren) os << " ]";
        return true;
      }
    }
    bool paren = level > 2;
    if (paren) os << "[ ";
    print_formula(os, l, 3);
    os << " & ";
    print_formula(os, r, 2);
    if (paren) os << " ]";
    return true;
  }
  if (auto imp = match_imp(f);
      imp && formulas().node(imp->first).kind != FKind::Eq) {
    bool paren = level > 1;
    if (paren) os << "[ ";
    print_formula(os, imp->first, 2);
    os << " -> ";
    print_formula(os, imp->second, 1);
    if (paren) os << " ]";
    return true;
  }
  return false;
}

inline void print_formula(std::ostream& os, FormulaId f, int level) {
  FormulaNode n = formulas().node(f);
  switch (n.kind) {
    case FKind::Eq:
      print_term(os, n.t0, -1);
      os << " = ";
      print_term(os, n.t1, -1);
      return;
    case FKind::Neg: {
      FormulaNode m = formulas().node(n.f0);
      if (m.kind == FKind::Eq) {
        print_term(os, m.t0, -1);
        os << " != ";
        print_term(os, m.t1, -1);
        return;
      }
      if (print_sugar(os, f, level)) return;
      os << "~ ";
      print_formula(os, n.f0, 3);
      return;
    }
    case FKind::Or: {
      if (print_sugar(os, f, level)) return;
      bool paren = level > 2;
      if (paren) os << "[ ";
      print_formula(os, n.f0, 3);
      os << " | ";
      print_formula(os, n.f1, 2);
      if (paren) os << " ]";
      return;
    }
    case FKind::Pred: {
      std::string name = sym_name(n.sym);
      if (name == "<=" || name == "<" || name == "pre<=" || name == "pre<" ||
          name == "begins_with" || name == "ends_with") {
        print_term(os, n.args[0], -1);
        os << ' ' << name << ' ';
        print_term(os, n.args[1], -1);
        return;
      }
      if (name == "is_power_of_two") {
        print_term(os, n.args[0], -1);
        os << " is_power_of_two";
        return;
      }
      os << name << " ( ";
      for (std::size_t i = 0; i < n.args.size(); ++i) {
        if (i) os << " , ";
        print_term(os, n.args[i], -1);
      }
      os << " )";
      return;
    }
    case FKind::Bounded: {
      bool ex = n.q == QKind::ExistsLe || n.q == QKind::ExistsLt || n.q == QKind::ExistsSym;
      os << (ex ? "exists " : "forall ") << sym_name(n.v) << ' ';
      if (n.q == QKind::ExistsLe || n.q == QKind::ForallLe) os << "<=";
      else if (n.q == QKind::ExistsLt || n.q == QKind::ForallLt) os << "<";
      else os << sym_name(n.sym);
      os << ' ';
      print_term(os, n.t0, 1000);
      os << " [ ";
      print_formula(os, n.f0, 0);
      os << " ]";
      return;
    }
  }
}

}  // namespace detail

inline std::string show_term(TermId t) {
  std::ostringstream os;
  detail::print_term(os, t, -1);
  return os.str();
}
inline std::string show_formula(FormulaId f) {
  std::ostringstream os;
  detail::print_formula(os, f, 0);
  return os.str();
}

}  // namespace pra

#endif  // PRA_GRAMMAR_HPP
