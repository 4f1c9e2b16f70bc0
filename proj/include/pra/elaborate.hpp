#ifndef PRA_ELABORATE_HPP
#define PRA_ELABORATE_HPP

#include "pra/derive.hpp"
#include "pra/schemata.hpp"

namespace pra {

// ---------------------------------------------------------------------------
// The proof-script elaborator.  A script is the goal statement plus hint
// lines: the hypothesis line H with fixed variables, citations with
// substitutions, witness markers, remnant labels, and claims.  Elaboration
// produces an extended proof: an indirect proof whose contradiction is
// closed by the ground refuter (equality lemmas + tautological consequence).
// ---------------------------------------------------------------------------

struct ScriptArg {
  enum class Kind : std::uint8_t { Term, Fix, Remnant } kind;
  std::string text;   // term source or variable/remnant name
  std::size_t lineNo;
};

struct ScriptLine {
  enum class Kind : std::uint8_t { Hyp, Cite, RemnantUse, Claim } kind;
  std::string label;       // Cite: label without slash; may end in -> / <-
  int direction = 0;
  std::string remnant;     // RemnantUse
  std::string claimText;   // Claim
  std::vector<ScriptArg> args;
  std::size_t lineNo = 0;
};

struct Script {
  std::string label;
  FormulaId goal = kNoId;  // surface
  std::vector<ScriptLine> lines;
};

// split a hint line into whitespace tokens and parse its structure
inline ScriptLine parse_hint_line(const std::string& text, std::size_t lineNo) {
  std::vector<std::string> toks;
  {
    std::istringstream is(text);
    std::string t;
    while (is >> t) {
      // the source occasionally writes ":x" or ";x" without a space
      if (t.size() > 1 && (t[0] == ':' || t[0] == ';') && t != ";" && t != ":") {
        toks.push_back(std::string(1, t[0]));
        toks.push_back(t.substr(1));
      } else {
        toks.push_back(t);
      }
    }
  }
  if (toks.empty()) fail("parse-error", "empty hint line");
  ScriptLine ln;
  ln.lineNo = lineNo;
  std::size_t i = 1;
  const std::string& head = toks[0];
  if (head == "H") {
    ln.kind = ScriptLine::Kind::Hyp;
  } else if (head == "?") {
    ln.kind = ScriptLine::Kind::Claim;
    std::string rest;
    for (; i < toks.size(); ++i) rest += toks[i] + " ";
    ln.claimText = rest;
    return ln;
  } else if (head.size() > 2 && head[0] == '/' && head[1] == '^') {
    ln.kind = ScriptLine::Kind::RemnantUse;
    ln.remnant = head.substr(2);
  } else if (head.size() > 1 && head[0] == '/') {
    ln.kind = ScriptLine::Kind::Cite;
    std::string lbl = head.substr(1);
    if (lbl.size() > 2 && lbl.substr(lbl.size() - 2) == "->") {
      ln.direction = +1;
      lbl.resize(lbl.size() - 2);
    } else if (lbl.size() > 2 && lbl.substr(lbl.size() - 2) == "<-") {
      ln.direction = -1;
      lbl.resize(lbl.size() - 2);
    }
    ln.label = lbl;
  } else {
    fail("parse-error", "line " + std::to_string(lineNo) + ": bad hint head " + head);
  }
  // arguments: ; TERM... | : VAR | ^NAME
  while (i < toks.size()) {
    if (toks[i] == ";") {
      ++i;
      std::string term;
      while (i < toks.size() && toks[i] != ";" && toks[i] != ":" &&
             !(toks[i].size() > 1 && toks[i][0] == '^'))
        term += toks[i++] + " ";
      if (term.empty())
        fail("parse-error", "line " + std::to_string(lineNo) + ": empty substitute");
      ln.args.push_back(ScriptArg{ScriptArg::Kind::Term, term, lineNo});
      continue;
    }
    if (toks[i] == ":") {
      ++i;
      if (i >= toks.size())
        fail("parse-error", "line " + std::to_string(lineNo) + ": missing fix variable");
      ln.args.push_back(ScriptArg{ScriptArg::Kind::Fix, toks[i++], lineNo});
      continue;
    }
    if (toks[i].size() > 1 && toks[i][0] == '^') {
      ln.args.push_back(ScriptArg{ScriptArg::Kind::Remnant, toks[i].substr(1), lineNo});
      ++i;
      continue;
    }
    fail("parse-error", "line " + std::to_string(lineNo) + ": unexpected token " + toks[i]);
  }
  if (ln.kind == ScriptLine::Kind::RemnantUse)
    for (const auto& a : ln.args)
      if (a.kind != ScriptArg::Kind::Term)
        fail("parse-error", "line " + std::to_string(lineNo) +
                                ": a remnant may only be instantiated with terms");
  return ln;
}

inline Script parse_script(const CorpusEntry& e) {
  Script s;
  s.label = e.label;
  s.goal = e.statement;
  for (std::size_t i = 0; i < e.proof.size(); ++i)
    s.lines.push_back(parse_hint_line(e.proof[i], e.line + 2 + i));
  return s;
}

// ---------------------------------------------------------------------------
// Hypothesis decomposition: the conjuncts of the goal's negation, with
// double negations removed and bounded quantifiers flipped so that the
// exists/forall structure is visible for witness and remnant devices.
// ---------------------------------------------------------------------------

namespace detail_elab {

inline FormulaId flip_bounded(const FormulaNode& n) {
  QKind q;
  switch (n.q) {
    case QKind::ExistsLe: q = QKind::ForallLe; break;
    case QKind::ForallLe: q = QKind::ExistsLe; break;
    case QKind::ExistsLt: q = QKind::ForallLt; break;
    case QKind::ForallLt: q = QKind::ExistsLt; break;
    case QKind::ExistsSym: q = QKind::ForallSym; break;
    case QKind::ForallSym: q = QKind::ExistsSym; break;
    default: fail("unreachable", "flip_bounded");
  }
  FormulaId body = neg_normalize(mk_neg(n.f0));
  return mk_bounded(q, n.v, n.t0, body, n.sym);
}

inline void neg_conjuncts(FormulaId g, std::vector<FormulaId>& out);

inline void pos_conjuncts(FormulaId h, std::vector<FormulaId>& out) {
  FormulaNode n = formulas().node(h);
  if (n.kind == FKind::Neg) {
    neg_conjuncts(n.f0, out);
    return;
  }
  if (auto both = match_and(h)) {
    pos_conjuncts(both->first, out);
    pos_conjuncts(both->second, out);
    return;
  }
  out.push_back(h);
}

inline void neg_conjuncts(FormulaId g, std::vector<FormulaId>& out) {
  FormulaNode n = formulas().node(g);
  switch (n.kind) {
    case FKind::Or:
      neg_conjuncts(n.f0, out);
      neg_conjuncts(n.f1, out);
      return;
    case FKind::Neg:
      pos_conjuncts(n.f0, out);
      return;
    case FKind::Bounded:
      out.push_back(flip_bounded(n));
      return;
    default:
      out.push_back(mk_neg(g));
      return;
  }
}

}  // namespace detail_elab

// ---------------------------------------------------------------------------
// Elaborator.
// ---------------------------------------------------------------------------

class Elaborator {
 public:
  Elaborator(TheoremDB& db, std::size_t atomCap = 24)
      : db_(db), table_(db.table()), cap_(atomCap) {}

  Proof elaborate(const Script& script) {
    Proof proof;
    RefutationBuilder b(db_, proof, cap_);
    FormulaId goalCore = table_.expand(script.goal);
    b.open(goalCore);

    // state
    aliases_ = Subst{};
    remnants_.clear();
    usedNames_.clear();
    for (Sym v : distinct_vars_in_order(script.goal))
      usedNames_.insert(sym_name(v));

    std::vector<FormulaId> hypConjuncts;
    detail_elab::neg_conjuncts(script.goal, hypConjuncts);

    for (const ScriptLine& ln : script.lines) {
      switch (ln.kind) {
        case ScriptLine::Kind::Hyp:
          process_hyp(b, script, ln, hypConjuncts);
          break;
        case ScriptLine::Kind::Cite:
          process_cite(b, ln);
          break;
        case ScriptLine::Kind::RemnantUse: {
          auto it = remnants_.find(ln.remnant);
          if (it == remnants_.end())
            fail("unresolved-hint", "line " + std::to_string(ln.lineNo) +
                                        ": unknown remnant ^" + ln.remnant);
          for (const auto& a : ln.args)
            b.assert_step(forall_device(it->second, parse_arg_term(a)));
          break;
        }
        case ScriptLine::Kind::Claim: {
          // Prop 1(v): the claim's block spans the remaining lines; the
          // builder closes queued claims (in order) before the final
          // contradiction, so later citations are usable inside the block
          FormulaId f = parse_claim(ln.claimText);
          b.queue_claim(table_.expand(f), "/" + script.label + " claim at line " +
                                              std::to_string(ln.lineNo));
          break;
        }
      }
    }
    b.finish("/" + script.label);
    return proof;
  }

 private:
  // --- argument helpers ----------------------------------------------------

  TermId parse_arg_term(const ScriptArg& a) {
    TermId t = parse_term(a.text, table_);
    return subst_term(t, aliases_);
  }
  FormulaId parse_claim(const std::string& text) {
    FormulaId f = parse_formula(text, table_);
    return subst_formula(f, aliases_);
  }

  void bind_witness(const std::string& name, TermId witness, std::size_t lineNo) {
    if (usedNames_.count(name))
      fail("witness-not-fresh",
           "line " + std::to_string(lineNo) + ": " + name + " already used");
    usedNames_.insert(name);
    aliases_.bind(var(name), witness);
  }

  // --- quantifier scanning -------------------------------------------------

  // first exists-like node in traversal order
  static std::optional<FormulaNode> find_exists(FormulaId f) {
    FormulaNode n = formulas().node(f);
    switch (n.kind) {
      case FKind::Bounded:
        if (n.q == QKind::ExistsLe || n.q == QKind::ExistsLt || n.q == QKind::ExistsSym)
          return n;
        return std::nullopt;
      case FKind::Neg:
        return find_exists_negated(n.f0);
      case FKind::Or: {
        if (auto l = find_exists(n.f0)) return l;
        return find_exists(n.f1);
      }
      default:
        return std::nullopt;
    }
  }
  static std::optional<FormulaNode> find_exists_negated(FormulaId f) {
    // inside a negation, a forall acts existentially only through flips the
    // corpus never uses; ignore
    FormulaNode n = formulas().node(f);
    if (n.kind == FKind::Neg) return find_exists(n.f0);
    if (n.kind == FKind::Or) {
      if (auto l = find_exists_negated(n.f0)) return l;
      return find_exists_negated(n.f1);
    }
    return std::nullopt;
  }

  // forall-like nodes: a Bounded forall, or the negation of an exists
  static std::optional<FormulaNode> find_forall(FormulaId f) {
    FormulaNode n = formulas().node(f);
    switch (n.kind) {
      case FKind::Bounded:
        if (n.q == QKind::ForallLe || n.q == QKind::ForallLt || n.q == QKind::ForallSym)
          return n;
        return std::nullopt;
      case FKind::Neg: {
        FormulaNode m = formulas().node(n.f0);
        if (m.kind == FKind::Bounded &&
            (m.q == QKind::ExistsLe || m.q == QKind::ExistsLt || m.q == QKind::ExistsSym))
          return formulas().node(detail_elab::flip_bounded(m));
        return find_forall(n.f0);
      }
      case FKind::Or: {
        if (auto l = find_forall(n.f0)) return l;
        return find_forall(n.f1);
      }
      default:
        return std::nullopt;
    }
  }

  // the T/90 device: from a forall-like node, the instance implication
  //   [forall-core] -> [t <= bound -> body(t)]
  ProofStep forall_device(const FormulaNode& node, TermId t) {
    FormulaNode le = table_.bounded_le_form(node);
    FormulaId coreBody = table_.expand(le.f0);
    Subst su = subst2(le.v, t, slot_v(), le.t0);
    return schema_cite(db_, "T/90", SchemaParams{coreBody, le.v}, std::move(su));
  }

  // --- line processing -------------------------------------------------------

  void process_hyp(RefutationBuilder& b, const Script& script, const ScriptLine& ln,
                   const std::vector<FormulaId>& conjuncts) {
    std::vector<Sym> goalVars = distinct_vars_in_order(script.goal);
    std::size_t nextFix = 0;
    std::size_t nextExists = 0;
    std::size_t nextForall = 0;

    auto exists_at = [&](std::size_t k) -> std::optional<FormulaNode> {
      std::size_t seen = 0;
      for (FormulaId c : conjuncts)
        if (auto e = find_exists(c)) {
          if (seen == k) return e;
          ++seen;
        }
      return std::nullopt;
    };
    auto forall_at = [&](std::size_t k) -> std::optional<FormulaNode> {
      std::size_t seen = 0;
      std::optional<FormulaNode> last;
      for (FormulaId c : conjuncts)
        if (auto e = find_forall(c)) {
          last = e;
          if (seen == k) return e;
          ++seen;
        }
      return last;  // cycle onto the last universal when exhausted
    };

    for (const ScriptArg& a : ln.args) {
      switch (a.kind) {
        case ScriptArg::Kind::Fix: {
          if (nextFix < goalVars.size()) {
            if (a.text != sym_name(goalVars[nextFix]))
              fail("parse-error", "line " + std::to_string(a.lineNo) + ": fixed " +
                                      a.text + " but the next goal variable is " +
                                      sym_name(goalVars[nextFix]));
            ++nextFix;
            break;
          }
          // extra fix: witness for the next existential hypothesis conjunct
          auto e = exists_at(nextExists++);
          if (!e)
            fail("unresolved-hint", "line " + std::to_string(a.lineNo) +
                                        ": no existential conjunct to witness");
          bind_witness(a.text, table_.bounded_witness(*e), a.lineNo);
          break;
        }
        case ScriptArg::Kind::Term: {
          TermId t = parse_arg_term(a);
          // a bare variable naming the next goal variable counts as a fix
          const TermNode tn = terms().node(t);
          if (nextFix < goalVars.size() && is_var(tn.head) &&
              tn.head == goalVars[nextFix]) {
            ++nextFix;
            break;
          }
          auto fa = forall_at(nextForall);
          ++nextForall;
          if (!fa)
            fail("unresolved-hint", "line " + std::to_string(a.lineNo) +
                                        ": no universal conjunct to instantiate");
          b.assert_step(forall_device(*fa, t));
          break;
        }
        case ScriptArg::Kind::Remnant: {
          auto fa = forall_at(nextForall);  // bind without consuming
          if (!fa)
            fail("unresolved-hint", "line " + std::to_string(a.lineNo) +
                                        ": no universal conjunct for ^" + a.text);
          remnants_[a.text] = *fa;
          break;
        }
      }
    }
  }

  void process_cite(RefutationBuilder& b, const ScriptLine& ln) {
    FormulaId stmt = resolve_statement(db_, ln.label, ln.direction);
    std::vector<Sym> vars = distinct_vars_in_order(stmt);
    Subst surface;
    std::size_t ai = 0;
    for (; ai < ln.args.size(); ++ai) {
      if (ln.args[ai].kind != ScriptArg::Kind::Term) break;
      if (surface.pairs.size() >= vars.size()) break;
      surface.bind(vars[surface.pairs.size()], parse_arg_term(ln.args[ai]));
    }
    FormulaId instSurface = subst_formula(stmt, surface);
    // the citation step itself
    {
      Subst coreSub;
      for (auto& [v, t] : surface.pairs) coreSub.bind(v, table_.expand_term(t));
      std::string lbl = ln.label;
      if (ln.direction > 0) lbl += "->";
      if (ln.direction < 0) lbl += "<-";
      FormulaId coreF = subst_formula(table_.expand(stmt), coreSub);
      b.assert_step(step_cite(lbl, std::move(coreSub), coreF));
    }
    // trailing arguments work through the instance's quantifier shells
    for (; ai < ln.args.size(); ++ai) {
      const ScriptArg& a = ln.args[ai];
      switch (a.kind) {
        case ScriptArg::Kind::Fix: {
          auto e = find_exists(instSurface);
          if (!e)
            fail("unresolved-hint", "line " + std::to_string(a.lineNo) +
                                        ": no existential to witness in /" + ln.label);
          bind_witness(a.text, table_.bounded_witness(*e), a.lineNo);
          break;
        }
        case ScriptArg::Kind::Term: {
          auto fa = find_forall(instSurface);
          if (!fa)
            fail("unresolved-hint",
                 "line " + std::to_string(a.lineNo) +
                     ": no universal to instantiate in /" + ln.label);
          b.assert_step(forall_device(*fa, parse_arg_term(a)));
          break;
        }
        case ScriptArg::Kind::Remnant: {
          auto fa = find_forall(instSurface);
          if (!fa)
            fail("unresolved-hint", "line " + std::to_string(a.lineNo) +
                                        ": no universal for ^" + a.text);
          remnants_[a.text] = *fa;
          break;
        }
      }
    }
  }

  TheoremDB& db_;
  FunctionTable& table_;
  std::size_t cap_;
  Subst aliases_;
  std::map<std::string, FormulaNode> remnants_;
  std::set<std::string> usedNames_;
};

}  // namespace pra

#endif  // PRA_ELABORATE_HPP
