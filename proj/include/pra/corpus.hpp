#ifndef PRA_CORPUS_HPP
#define PRA_CORPUS_HPP

#include "pra/grammar.hpp"

namespace pra {

// ---------------------------------------------------------------------------
// Corpus files: one entry per block, blank-line separated.
//
//   r /12. x + 0 = x & x + S y = S ( x + y )
//
//   t /13b. 0 + 0 = 0 + 0
//   proof.
//   H
//   /5 ; 0 + 0
//   qed.
//
//   d /157. Q x = q <-> p150 ( q , x )
//   ucec /151 /156
//
//   schema T/51. chi A = 0 <-> A
//   pragma bounding pre<= 2 * Q @b by /267
//
// Kinds: r (primitive recursion), d (predicate definition), e (explicit
// definition), t (theorem; a t without proof closes the preceding induction
// group), schema (template slot), pragma (loader directive).
// ---------------------------------------------------------------------------

enum class EntryKind : std::uint8_t { R, D, E, T, Schema, Pragma };

struct CorpusEntry {
  EntryKind kind = EntryKind::T;
  std::string label;             // without the leading slash
  std::string text;              // statement source text
  std::vector<std::string> proof;  // raw hint lines (empty for at-entries)
  std::string ucLabel, ecLabel;  // d-entries defined via UC/EC
  std::size_t line = 0;          // 1-based line of the header
  // filled by the loader:
  FormulaId statement = kNoId;   // surface formula (t/d/e/r)
};

struct Corpus {
  std::vector<CorpusEntry> entries;
  std::map<std::string, std::size_t> byLabel;

  const CorpusEntry* find(const std::string& label) const {
    auto it = byLabel.find(label);
    return it == byLabel.end() ? nullptr : &entries[it->second];
  }
};

inline Corpus parse_corpus(std::string_view text) {
  Corpus c;
  std::vector<std::string> lines;
  {
    std::string cur;
    for (char ch : text) {
      if (ch == '\n') { lines.push_back(cur); cur.clear(); }
      else cur.push_back(ch);
    }
    if (!cur.empty()) lines.push_back(cur);
  }
  auto trim = [](std::string s) {
    std::size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return std::string();
    std::size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
  };
  std::size_t i = 0;
  while (i < lines.size()) {
    std::string ln = trim(lines[i]);
    if (ln.empty() || ln[0] == '#') { ++i; continue; }
    CorpusEntry e;
    e.line = i + 1;
    std::istringstream hs(ln);
    std::string kindTok;
    hs >> kindTok;
    if (kindTok == "pragma") {
      e.kind = EntryKind::Pragma;
      e.text = trim(ln.substr(6));
      e.label = "pragma@" + std::to_string(e.line);
      c.entries.push_back(std::move(e));
      ++i;
      continue;
    }
    std::string lbl;
    hs >> lbl;
    if (kindTok == "r") e.kind = EntryKind::R;
    else if (kindTok == "d") e.kind = EntryKind::D;
    else if (kindTok == "e") e.kind = EntryKind::E;
    else if (kindTok == "t") e.kind = EntryKind::T;
    else if (kindTok == "schema") e.kind = EntryKind::Schema;
    else fail("parse-error", "line " + std::to_string(e.line) + ": unknown kind " + kindTok);
    // label forms: /13b.  T/51.
    auto slash = lbl.find('/');
    auto dot = lbl.rfind('.');
    if (slash == std::string::npos || dot == std::string::npos || dot < slash)
      fail("parse-error", "line " + std::to_string(e.line) + ": bad label " + lbl);
    e.label = lbl.substr(slash + 1, dot - slash - 1);
    e.text = trim(ln.substr(ln.find(lbl) + lbl.size()));
    ++i;
    // optional annotations and proof block
    while (i < lines.size()) {
      std::string next = trim(lines[i]);
      if (next.rfind("ucec", 0) == 0) {
        std::istringstream us(next.substr(4));
        std::string uc, ec;
        us >> uc >> ec;
        if (uc.size() < 2 || ec.size() < 2) fail("parse-error", "bad ucec line");
        e.ucLabel = uc.substr(1);
        e.ecLabel = ec.substr(1);
        ++i;
        continue;
      }
      if (next == "proof.") {
        ++i;
        while (i < lines.size() && trim(lines[i]) != "qed.") {
          std::string pl = trim(lines[i]);
          if (pl.empty())
            fail("parse-error", "line " + std::to_string(i + 1) + ": unterminated proof");
          e.proof.push_back(pl);
          ++i;
        }
        if (i >= lines.size()) fail("parse-error", "missing qed.");
        ++i;
        continue;
      }
      break;
    }
    if (c.byLabel.count(e.label))
      fail("parse-error", "duplicate label /" + e.label);
    c.byLabel[e.label] = c.entries.size();
    c.entries.push_back(std::move(e));
  }
  return c;
}

// ---------------------------------------------------------------------------
// Definition loading: registers r/d/e entries and pragmas into the
// FunctionTable in corpus order and parses every statement.  Proof checking
// is layered on top (see check.hpp).
// ---------------------------------------------------------------------------

namespace detail {

inline std::vector<FormulaId> conjuncts(FormulaId f) {
  if (auto p = match_and(f)) {
    std::vector<FormulaId> l = conjuncts(p->first);
    std::vector<FormulaId> r = conjuncts(p->second);
    l.insert(l.end(), r.begin(), r.end());
    return l;
  }
  return {f};
}

// the unary-prefix symbol a definition entry introduces, if any
inline std::optional<std::string> pending_unary_of(const std::string& text) {
  auto toks = lex::tokenize(text);
  if (toks.size() >= 2 && toks[0].kind == lex::Tok::Ident) {
    auto k = toks[1].kind;
    if (k == lex::Tok::Ident || k == lex::Tok::Number) return toks[0].text;
  }
  return std::nullopt;
}

}  // namespace detail

class DefinitionLoader {
 public:
  explicit DefinitionLoader(FunctionTable& table) : table_(table) {}

  // Parses the statement and performs any registration the entry requires.
  void load(CorpusEntry& e, const Corpus& corpus) {
    switch (e.kind) {
      case EntryKind::R: load_r(e); break;
      case EntryKind::D: load_d(e, corpus); break;
      case EntryKind::E: load_e(e); break;
      case EntryKind::T: e.statement = parse_formula(e.text, table_); break;
      case EntryKind::Schema: break;  // statements carry metavariables
      case EntryKind::Pragma: load_pragma(e); break;
    }
  }

 private:
  void load_r(CorpusEntry& e) {
    Parser p(e.text, table_);
    if (auto u = detail::pending_unary_of(e.text)) p.declare_unary(*u);
    FormulaId stmt = p.parse_formula_all();
    e.statement = stmt;
    auto cs = detail::conjuncts(stmt);
    if (cs.size() == 2) load_numeric_rec(e, cs);
    else if (cs.size() == 3) load_string_rec(e, cs);
    else fail("parse-error", "r-entry /" + e.label + " has unexpected shape");
  }

  void load_numeric_rec(CorpusEntry& e, const std::vector<FormulaId>& cs) {
    auto eq1 = formulas().node(cs[0]);
    auto eq2 = formulas().node(cs[1]);
    if (eq1.kind != FKind::Eq || eq2.kind != FKind::Eq)
      fail("parse-error", "r-entry /" + e.label + " is not a pair of equations");
    const TermNode l1 = terms().node(eq1.t0);
    const TermNode l2 = terms().node(eq2.t0);
    if (l1.head != l2.head || is_var(l1.head))
      fail("parse-error", "r-entry /" + e.label + " heads differ");
    // recursion slot: 0 in the first equation, S y in the second
    std::uint32_t recPos = kNoId;
    for (std::size_t k = 0; k < l1.args.size(); ++k) {
      if (terms().node(l1.args[k]).head == sym_zero() &&
          terms().node(l2.args[k]).head == sym_succ()) {
        recPos = static_cast<std::uint32_t>(k);
        break;
      }
    }
    if (recPos == kNoId) fail("parse-error", "r-entry /" + e.label + ": no recursion slot");
    Sym recVar = terms().node(terms().node(l2.args[recPos]).args[0]).head;
    std::vector<Sym> params;
    for (std::size_t k = 0; k < l1.args.size(); ++k) {
      if (k == recPos) continue;
      Sym v = terms().node(l1.args[k]).head;
      if (!is_var(v) || l1.args[k] != l2.args[k])
        fail("parse-error", "r-entry /" + e.label + ": parameters must be variables");
      params.push_back(v);
    }
    // step: replace the recursive call f(params..., recVar) by the aux var
    Sym aux = var("@z");
    TermId call = eq2.t1;
    std::vector<TermId> prevArgs;
    std::size_t pi = 0;
    for (std::size_t k = 0; k < l1.args.size(); ++k)
      prevArgs.push_back(k == recPos ? mk_term(recVar) : mk_term(params[pi++]));
    TermId prev = mk_term(l1.head, prevArgs);
    TermId step = replace_subterm(call, prev, mk_term(aux));
    table_.register_prim_rec(sym_name(l1.head), params, recPos, recVar, aux,
                             eq1.t1, step);
  }

  void load_string_rec(CorpusEntry& e, const std::vector<FormulaId>& cs) {
    // f(eps)=a & f(w (+) b0)=b & f(w (+) b1)=c, per string recursion
    auto eq1 = formulas().node(cs[0]);
    auto eq2 = formulas().node(cs[1]);
    auto eq3 = formulas().node(cs[2]);
    const TermNode l2 = terms().node(eq2.t0);
    Sym f = l2.head;
    // the string variable w: argument of (+) in the second equation's lhs
    TermId cat2 = l2.args.back();
    Sym w = terms().node(terms().node(cat2).args[0]).head;
    std::vector<Sym> params;
    for (std::size_t k = 0; k + 1 < l2.args.size(); ++k)
      params.push_back(terms().node(l2.args[k]).head);
    Sym z = var("@z");
    TermId wTerm = mk_term(w), zTerm = mk_term(z);
    TermId b = subst_term(eq2.t1, single_subst(w, zTerm));
    TermId c = subst_term(eq3.t1, single_subst(w, zTerm));
    register_string_rec(table_, sym_name(f), params, eq1.t1, b, c, z);
    (void)wTerm;
  }

  void load_d(CorpusEntry& e, const Corpus& corpus) {
    Parser p(e.text, table_);
    if (auto u = detail::pending_unary_of(e.text)) p.declare_unary(*u);
    FormulaId stmt = p.parse_formula_all();
    e.statement = stmt;
    auto iff = match_iff(stmt);
    if (!iff) fail("parse-error", "d-entry /" + e.label + " is not an iff");
    FormulaNode lhs = formulas().node(iff->first);
    if (lhs.kind == FKind::Pred) {
      std::vector<Sym> params;
      for (TermId a : lhs.args) {
        const TermNode an = terms().node(a);
        if (!is_var(an.head))
          fail("parse-error", "d-entry /" + e.label + ": non-variable parameter");
        params.push_back(an.head);
      }
      table_.register_pred(sym_name(lhs.sym), params, iff->second);
      return;
    }
    if (lhs.kind == FKind::Eq && !e.ucLabel.empty()) {
      // Prop 7 definition:  f(y...) = x  <->  A   with UC and EC on record
      const TermNode fn = terms().node(lhs.t0);
      const TermNode xn = terms().node(lhs.t1);
      if (is_var(fn.head) || !is_var(xn.head))
        fail("parse-error", "d-entry /" + e.label + ": bad UC/EC shape");
      std::vector<Sym> params;
      for (TermId a : fn.args) params.push_back(terms().node(a).head);
      const CorpusEntry* ec = corpus.find(e.ecLabel);
      if (!ec || ec->statement == kNoId)
        fail("unknown-label", "EC /" + e.ecLabel + " for /" + e.label);
      FormulaNode ecn = formulas().node(ec->statement);
      if (ecn.kind != FKind::Bounded || ecn.q != QKind::ExistsLe)
        fail("parse-error", "EC /" + e.ecLabel + " is not a bounded exists");
      if (ecn.v != xn.head || ecn.f0 != iff->second)
        fail("side-condition-violated",
             "EC /" + e.ecLabel + " does not match definition /" + e.label);
      table_.register_defined_ucec(sym_name(fn.head), params, iff->second,
                                   xn.head, ecn.t0);
      return;
    }
    fail("parse-error", "d-entry /" + e.label + " has unsupported head");
  }

  void load_e(CorpusEntry& e) {
    auto toks = lex::tokenize(e.text);
    // constants:  1 = S 0,  eps = 0
    if (toks.size() >= 2 &&
        (toks[0].kind == lex::Tok::Number || toks[0].kind == lex::Tok::Ident) &&
        toks[1].kind == lex::Tok::Eq) {
      std::string name = toks[0].text;
      std::size_t eqPos = e.text.find('=');
      TermId rhs = parse_term(e.text.substr(eqPos + 1), table_);
      table_.register_explicit(name, {}, rhs);
      e.statement = mk_eq(mk_term(fn(name, 0)), rhs);
      return;
    }
    Parser p(e.text, table_);
    if (auto u = detail::pending_unary_of(e.text)) p.declare_unary(*u);
    FormulaId stmt = p.parse_formula_all();
    e.statement = stmt;
    FormulaNode n = formulas().node(stmt);
    if (n.kind != FKind::Eq) fail("parse-error", "e-entry /" + e.label + " is not an equation");
    const TermNode l = terms().node(n.t0);
    std::vector<Sym> params;
    for (TermId a : l.args) {
      const TermNode an = terms().node(a);
      if (!is_var(an.head))
        fail("parse-error", "e-entry /" + e.label + ": non-variable parameter");
      params.push_back(an.head);
    }
    table_.register_explicit(sym_name(l.head), params, n.t1);
  }

  void load_pragma(CorpusEntry& e) {
    std::istringstream ps(e.text);
    std::string what;
    ps >> what;
    if (what != "bounding") fail("parse-error", "unknown pragma: " + e.text);
    std::string sym;
    ps >> sym;
    std::string rest, tok;
    while (ps >> tok && tok != "by") rest += tok + " ";
    TermId d = parse_term(rest, table_);
    table_.register_bounding(string_pool().intern(sym), d);
  }

  static Subst single_subst(Sym v, TermId t) {
    Subst s;
    s.bind(v, t);
    return s;
  }

  static TermId replace_subterm(TermId in, TermId what, TermId with) {
    if (in == what) return with;
    const TermNode n = terms().node(in);
    if (is_var(n.head)) return in;
    std::vector<TermId> args;
    bool changed = false;
    for (TermId a : n.args) {
      TermId b = replace_subterm(a, what, with);
      changed |= (b != a);
      args.push_back(b);
    }
    return changed ? terms().make(n.head, std::move(args)) : in;
  }

  FunctionTable& table_;

 public:
  // Prop 8 table-side construction (/6): register the underlying primitive
  // recursion by cases for a string recursion f(eps)=a, f(w(+)b0)=b_z(w),
  // f(w(+)b1)=c_z(w); b and c are stated over z (the previous string) and
  // may mention f itself at Chop S y.
  static Sym register_string_rec(FunctionTable& table, const std::string& name,
                                 std::vector<Sym> params, TermId a, TermId b,
                                 TermId c, Sym z) {
    Sym recv = var("@r");
    TermId sy = mk_succ(mk_term(recv));
    Sym chop = fn("Chop", 1);
    if (!table.has(chop)) fail("missing-symbol", "Chop (needed for string recursion)");
    TermId chopSy = mk_term(chop, {sy});
    Sym cat = fn("(+)", 2);
    Sym b0 = fn("b0", 0), b1 = fn("b1", 0);
    FormulaId is0 = mk_eq(sy, mk_term(cat, {chopSy, mk_term(b0)}));
    FormulaId is1 = mk_eq(sy, mk_term(cat, {chopSy, mk_term(b1)}));
    Subst sz;
    sz.bind(z, chopSy);
    TermId bAt = subst_term(b, sz);
    TermId cAt = subst_term(c, sz);
    Sym caseSym = fn("C", 3);
    TermId inner = mk_term(caseSym, {table.chi(is1), cAt, mk_zero()});
    TermId step = mk_term(caseSym, {table.chi(is0), bAt, inner});
    return table.register_prim_rec(name, std::move(params), /*recPos=*/
                                   static_cast<std::uint32_t>(0) + 0, recv,
                                   var("@z2"), a, step, /*selfRec=*/true);
  }
};

}  // namespace pra

#endif  // PRA_CORPUS_HPP
