#ifndef PRA_DERIVE_HPP
#define PRA_DERIVE_HPP

#include "pra/kernel.hpp"
#include "pra/refute.hpp"

namespace pra {

// ---------------------------------------------------------------------------
// Step builders shared by the elaborator and the schema templates.
// ---------------------------------------------------------------------------

// reserved slot variables used in schema template statements
inline Sym slot_v() { return var("@v"); }  // bound slot (T/88..T/93)
inline Sym slot_w() { return var("@w"); }  // second numeric slot (T/86, T/87)
inline Sym slot_u() { return var("@u"); }  // witness slot (T/94)

// The successor and logical axioms are citable by their labels /3../6
// (instances arrive through the citation substitution).
inline void register_axiom_entries(TheoremDB& db, FunctionTable& table) {
  auto add = [&](const char* label, const char* text) {
    DBEntry e;
    e.kind = DBEntry::Kind::Theorem;
    e.label = label;
    e.statement = parse_formula(text, table);
    e.mode = TheoremMode::Primitive;
    db.add(std::move(e));
  };
  add("3", "~ S x = 0");
  add("4", "S x = S y -> x = y");
  add("5", "x = x");
  add("6", "x = y -> y = x");
}

// the statement of `label` as cited: plain, or the directional reading of a
// predicate definition (x -> : p -> D, x <- : p | ~D)
inline FormulaId resolve_statement(const TheoremDB& db, const std::string& label,
                                   int direction) {
  const DBEntry& e = db.get(label);
  if (e.statement == kNoId) fail("unknown-label", "/" + label + " has no statement");
  if (direction == 0) return e.statement;
  auto iff = match_iff(e.statement);
  if (!iff) fail("rule-mismatch", "/" + label + " is not a definition iff");
  return direction > 0 ? mk_or(mk_neg(iff->first), iff->second)
                       : mk_or(iff->first, mk_neg(iff->second));
}

// citation by positional arguments: substitute the statement's first n
// distinct variables (first-occurrence order)
inline ProofStep cite(TheoremDB& db, const std::string& label,
                      const std::vector<TermId>& args, int direction = 0) {
  FormulaId stmt = resolve_statement(db, label, direction);
  auto vars = distinct_vars_in_order(stmt);
  if (args.size() > vars.size())
    fail("arity-overflow", "/" + label + ": " + std::to_string(args.size()) +
                               " substitutes for " + std::to_string(vars.size()) +
                               " variables");
  Subst s;
  for (std::size_t i = 0; i < args.size(); ++i)
    s.bind(vars[i], db.table().expand_term(args[i]));
  FormulaId core = subst_formula(db.table().expand(stmt), s);
  std::string lbl = label;
  if (direction > 0) lbl += "->";
  if (direction < 0) lbl += "<-";
  return step_cite(lbl, std::move(s), core);
}

inline ProofStep schema_cite(TheoremDB& db, const std::string& label,
                             SchemaParams params, Subst su = {}) {
  SchemaInstance inst = db.instantiate(label, params);
  Subst coreSu;
  for (auto& [v, t] : su.pairs) coreSu.bind(v, db.table().expand_term(t));
  FormulaId f = subst_formula(inst.statement, coreSu);
  ProofStep s = step_schema(label, params.a, params.x, std::move(coreSu), f, params.b);
  return s;
}

// construction axiom steps (A/1, A/2) for a prim-rec symbol, optionally
// instantiated
inline ProofStep axiom_a1(FunctionTable& table, Sym f, const Subst& su = {}) {
  auto [a1, a2] = table.construction_axioms(f);
  (void)a2;
  Subst cs;
  for (auto& [v, t] : su.pairs) cs.bind(v, table.expand_term(t));
  ProofStep s = step_axiom(AxiomKind::A1, subst_formula(a1, cs));
  return s;
}
inline ProofStep axiom_a2(FunctionTable& table, Sym f, const Subst& su = {}) {
  auto [a1, a2] = table.construction_axioms(f);
  (void)a1;
  Subst cs;
  for (auto& [v, t] : su.pairs) cs.bind(v, table.expand_term(t));
  ProofStep s = step_axiom(AxiomKind::A2, subst_formula(a2, cs));
  return s;
}

inline Subst subst1(Sym v, TermId t) {
  Subst s;
  s.bind(v, t);
  return s;
}
inline Subst subst2(Sym v1, TermId t1, Sym v2, TermId t2) {
  Subst s;
  s.bind(v1, t1);
  if (v2 != v1) s.bind(v2, t2);
  return s;
}

// ---------------------------------------------------------------------------
// prove_by_refutation: the uniform indirect-proof shape.  States the goal as
// a claim, hypothesizes its negation (double negations removed), asserts the
// given steps, and closes by the ground refuter's equality lemmas plus one
// tautological consequence.
// ---------------------------------------------------------------------------

struct RefutationFailed : Error {
  RefuterOutcome outcome;
  RefutationFailed(std::string what, RefuterOutcome oc)
      : Error("refutation-failed", std::move(what)), outcome(std::move(oc)) {}
};

inline std::string describe_model(const RefuterOutcome& oc) {
  std::string out = "satisfying assignment:";
  std::vector<std::string> lines;
  for (const auto& [atom, val] : oc.model)
    lines.push_back("\n  " + show_formula(atom) + " := " + (val ? "T" : "F"));
  std::sort(lines.begin(), lines.end());
  for (const auto& l : lines) out += l;
  if (!oc.classes.empty()) {
    out += "\ncongruence classes:";
    for (const auto& cls : oc.classes) {
      out += "\n  {";
      for (std::size_t i = 0; i < cls.size(); ++i)
        out += (i ? ", " : " ") + show_term(cls[i]);
      out += " }";
    }
  }
  return out;
}

class RefutationBuilder {
 public:
  RefutationBuilder(TheoremDB& db, Proof& proof, std::size_t atomCap = 24)
      : db_(db), p_(proof), cap_(atomCap) {}

  Proof& proof() { return p_; }

  // open the indirect proof of `goal` (a core formula)
  void open(FormulaId goalCore) {
    goal_ = goalCore;
    claimIdx_ = p_.add(step_claim_open(goal_));
    FormulaId hyp = neg_normalize(mk_neg(goal_));
    hypIdx_ = p_.add(step_hypothesis(hyp));
    asserted_.push_back(hypIdx_);
  }

  std::uint32_t assert_step(ProofStep s) {
    std::uint32_t i = p_.add(std::move(s));
    asserted_.push_back(i);
    return i;
  }

  // bring an existing (outer) step into the refutation scope
  void include_step(std::uint32_t idx) { asserted_.push_back(idx); }

  // nested claim: prove `claim` by contradiction from everything asserted
  // so far, then make it available
  void claim(FormulaId claimCore, const std::string& what) {
    std::uint32_t open = p_.add(step_claim_open(claimCore));
    FormulaId hyp = neg_normalize(mk_neg(claimCore));
    std::uint32_t h = p_.add(step_hypothesis(hyp));
    std::vector<std::uint32_t> scope = asserted_;
    scope.push_back(h);
    refute_scope(scope, h, what);
    std::uint32_t c = p_.add(step_claim_close(open, claimCore));
    asserted_.push_back(c);
  }

  // a claim whose block should span everything asserted later: realized by
  // closing the block just before the final contradiction
  void queue_claim(FormulaId claimCore, std::string what) {
    queued_.emplace_back(claimCore, std::move(what));
  }

  // close the whole indirect proof; returns the goal step index
  std::uint32_t finish(const std::string& what) {
    for (auto& [f, w] : queued_) claim(f, w);
    queued_.clear();
    refute_scope(asserted_, hypIdx_, what);
    return p_.add(step_claim_close(claimIdx_, goal_));
  }

 private:
  void refute_scope(const std::vector<std::uint32_t>& scope, std::uint32_t hypIdx,
                    const std::string& what) {
    std::vector<FormulaId> fs;
    for (std::uint32_t i : scope) fs.push_back(p_.steps[i].formula);
    GroundRefuter r(cap_);
    RefuterOutcome oc = r.refute(fs);
    if (!oc.refuted) {
      std::string detail = what + "\n" + describe_model(oc);
      throw RefutationFailed(std::move(detail), std::move(oc));
    }
    std::vector<std::uint32_t> prem = scope;
    for (const auto& lem : oc.lemmas)
      prem.push_back(p_.add(step_axiom(lem.kind, lem.formula)));
    FormulaId contra = mk_neg(p_.steps[hypIdx].formula);
    p_.add(step_tautcons(std::move(prem), contra));
  }

  TheoremDB& db_;
  Proof& p_;
  FormulaId goal_ = kNoId;
  std::uint32_t claimIdx_ = kNoId, hypIdx_ = kNoId;
  std::vector<std::uint32_t> asserted_;
  std::vector<std::pair<FormulaId, std::string>> queued_;
  std::size_t cap_;
};

// convenience: goal + list of steps, no nested claims
inline Proof prove_by_refutation(TheoremDB& db, FormulaId goalCore,
                                 std::vector<ProofStep> steps,
                                 const std::string& what, std::size_t cap = 24) {
  Proof p;
  RefutationBuilder b(db, p, cap);
  b.open(goalCore);
  for (auto& s : steps) b.assert_step(std::move(s));
  b.finish(what);
  return p;
}

}  // namespace pra

#endif  // PRA_DERIVE_HPP
