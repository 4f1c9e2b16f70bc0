#ifndef PRA_CHECK_HPP
#define PRA_CHECK_HPP

#include "pra/elaborate.hpp"

namespace pra {

// ---------------------------------------------------------------------------
// Group closers and proposition-level generators used by the corpus check:
// numeric induction groups (t-xi-b/i closed by t-xi), string induction via
// the least number principle (Props 6 and 9), explicit/predicate definition
// theorems, UC/EC definitions (Prop 7), and string recursion (/7) via
// primitive recursion by cases (Props 4 and 8).
// ---------------------------------------------------------------------------

// find the induction variable: basis == goal[v:=0] and premise ==
// goal[v:=v'] -> goal[v:=Sv'] for some v'
inline std::optional<Sym> numeric_induction_var(FormulaId basis, FormulaId premise,
                                                FormulaId goal) {
  for (Sym v : distinct_vars_in_order(goal)) {
    if (subst_formula(goal, subst1(v, mk_zero())) != basis) continue;
    std::vector<Sym> cands = distinct_vars_in_order(premise);
    cands.push_back(v);
    for (Sym vp : cands) {
      FormulaId prem = mk_imp(subst_formula(goal, subst1(v, mk_term(vp))),
                              subst_formula(goal, subst1(v, mk_succ(mk_term(vp)))));
      if (prem == premise) return v;
    }
  }
  return std::nullopt;
}

inline Proof close_numeric_induction(TheoremDB& db, const std::string& bLabel,
                                     const std::string& iLabel, FormulaId goalCore) {
  Proof p;
  std::uint32_t b = p.add(cite(db, bLabel, {}));
  std::uint32_t i = p.add(cite(db, iLabel, {}));
  auto v = numeric_induction_var(p.steps[b].formula, p.steps[i].formula, goalCore);
  if (!v) fail("shape-mismatch", "induction premises do not fit /" + bLabel);
  p.add(step_induction(b, i, *v, goalCore));
  return p;
}

// --- Prop 6: the least number principle -------------------------------------
//
// Given a step proving  ~{ ~A_x(z) & forall y < z [A_x(y)] }  (z, y fresh),
// derive A_x(x).  The generated refutation follows the proposition's proof:
// T/85, T/95 and T/96 at ~A, and the premise instantiated at mu_{~A}(x).

inline Sym lnp_z() { return var("@n"); }
inline Sym lnp_y() { return var("@m"); }

inline FormulaId least_number_premise(TheoremDB& db, FormulaId aCore, Sym x) {
  TermId zv = mk_term(lnp_z());
  FormulaId az = subst_formula(aCore, subst1(x, zv));
  FormulaId all = mk_bounded(QKind::ForallLt, lnp_y(), zv,
                             subst_formula(aCore, subst1(x, mk_term(lnp_y()))));
  return db.table().expand(mk_neg(mk_and(mk_neg(az), all)));
}

// appends to `p`; premiseIdx proves least_number_premise(a, x); returns the
// index of the concluding step A_x(x)
inline std::uint32_t least_number_rule(TheoremDB& db, Proof& p,
                                       std::uint32_t premiseIdx, FormulaId aCore,
                                       Sym x, std::size_t cap = 30) {
  FormulaId want = least_number_premise(db, aCore, x);
  if (p.steps[premiseIdx].formula != want)
    fail("premise-shape-mismatch",
         "least number principle needs " + show_formula(want));
  FormulaId negA = neg_normalize(mk_neg(aCore));
  TermId muNegA = db.table().mu_term(negA, x, mk_term(x));
  // the premise instance at z := mu_{~A}(x)
  std::uint32_t inst = p.add(step_instance(
      premiseIdx, subst1(lnp_z(), muNegA),
      subst_formula(p.steps[premiseIdx].formula, subst1(lnp_z(), muNegA))));
  RefutationBuilder b(db, p, cap);
  b.open(aCore);
  b.include_step(inst);
  b.assert_step(schema_cite(db, "T/85", SchemaParams{negA, x}));
  b.assert_step(schema_cite(db, "T/95", SchemaParams{negA, x}));
  b.assert_step(schema_cite(db, "T/96", SchemaParams{negA, x}));
  return b.finish("least number principle");
}

// --- Prop 9: string induction ------------------------------------------------
//
// From A_x(eps), A_x(x') -> A_x(x' (+) b0), A_x(x') -> A_x(x' (+) b1)
// (cited by label; the two steps may be combined into one conjunction),
// infer A_x(x).

// string-induction group close: premises cited as b / i / j (or combined ij).
// Follows Prop 9: derive "A has no least counterexample" from the premises
// at Chop z (using /253, /258), then apply the least number principle.
inline Proof close_string_group(TheoremDB& db, const std::string& bLabel,
                                const std::vector<std::string>& stepLabels,
                                FormulaId goalCore, std::size_t cap = 30) {
  FunctionTable& table = db.table();
  // induction variable: basis == goal[x := eps] (eps expands to 0)
  std::optional<Sym> x;
  FormulaId basis = table.expand(db.get(bLabel).statement);
  for (Sym v : distinct_vars_in_order(goalCore))
    if (subst_formula(goalCore, subst1(v, mk_zero())) == basis) { x = v; break; }
  if (!x) fail("shape-mismatch", "string induction basis /" + bLabel);

  TermId b0c = table.expand_term(mk_term(fn("b0", 0)));
  TermId b1c = table.expand_term(mk_term(fn("b1", 0)));
  Sym cat = fn("(+)", 2);
  auto goal_at_cat = [&](Sym vp, TermId bit) {
    TermId t = table.expand_term(mk_term(cat, {mk_term(vp), bit}));
    return subst_formula(goalCore, subst1(*x, t));
  };
  // classify each step premise; every bit must be covered
  struct StepInst { std::string label; Sym vp; };
  std::vector<StepInst> insts;
  bool has0 = false, has1 = false;
  for (const auto& lbl : stepLabels) {
    FormulaId stepCore = table.expand(resolve_statement(db, lbl, 0));
    bool matched = false;
    std::vector<Sym> cands = distinct_vars_in_order(stepCore);
    for (Sym vp : cands) {
      FormulaId ante = subst_formula(goalCore, subst1(*x, mk_term(vp)));
      FormulaId i0 = mk_imp(ante, goal_at_cat(vp, b0c));
      FormulaId i1 = mk_imp(ante, goal_at_cat(vp, b1c));
      FormulaId ij = mk_imp(ante, mk_and(goal_at_cat(vp, b0c), goal_at_cat(vp, b1c)));
      if (stepCore == i0) { has0 = true; matched = true; }
      else if (stepCore == i1) { has1 = true; matched = true; }
      else if (stepCore == ij) { has0 = has1 = true; matched = true; }
      if (matched) { insts.push_back({lbl, vp}); break; }
    }
    if (!matched)
      fail("shape-mismatch", "/" + lbl + " is not a string induction step for /" + bLabel);
  }
  if (!has0 || !has1)
    fail("shape-mismatch", "string induction steps do not cover both bits");

  Proof p;
  FormulaId nPrem = least_number_premise(db, goalCore, *x);
  TermId zv = mk_term(lnp_z());
  TermId chopZ = mk_term(fn("Chop", 1), {zv});
  {
    RefutationBuilder b(db, p, cap);
    b.open(nPrem);
    b.assert_step(cite(db, bLabel, {}));
    b.assert_step(cite(db, "253", {zv}));
    b.assert_step(cite(db, "258", {zv}));
    b.assert_step(cite(db, "56", {chopZ, zv}, /*direction=*/+1));
    // instantiate forall y < z [A(y)] at Chop z
    FormulaId body = mk_imp(
        table.expand(mk_pred(fn("<", 2), {mk_term(lnp_y()), zv})),
        subst_formula(goalCore, subst1(*x, mk_term(lnp_y()))));
    b.assert_step(schema_cite(db, "T/90", SchemaParams{table.expand(body), lnp_y()},
                              subst2(lnp_y(), chopZ, slot_v(), zv)));
    // the step premises at Chop z
    for (const auto& si : insts) {
      FormulaId stepCore = db.table().expand(resolve_statement(db, si.label, 0));
      Subst s = subst1(si.vp, chopZ);
      b.assert_step(step_cite(si.label, s, subst_formula(stepCore, s)));
    }
    b.finish("/" + bLabel + " group: no least counterexample");
  }
  std::uint32_t nIdx = static_cast<std::uint32_t>(p.steps.size() - 1);
  least_number_rule(db, p, nIdx, goalCore, *x, cap);
  return p;
}

// --- Prop 7: UC/EC definitions -----------------------------------------------

inline Proof prove_ucec(TheoremDB& db, const CorpusEntry& e) {
  FunctionTable& table = db.table();
  auto iff = match_iff(e.statement);
  if (!iff) fail("shape-mismatch", "/" + e.label + " is not an iff");
  FormulaNode lhs = formulas().node(iff->first);
  const TermNode fnode = terms().node(lhs.t0);
  Sym resultVar = terms().node(lhs.t1).head;
  // UC: A_x(x) & A_x(x') -> x = x'
  FormulaId ucStmt = resolve_statement(db, e.ucLabel, 0);
  {
    FormulaId aCore = table.expand(iff->second);
    auto uc = match_imp(table.expand(ucStmt));
    bool ok = false;
    if (uc) {
      if (auto conj = match_and(uc->first)) {
        FormulaNode concl = formulas().node(uc->second);
        if (concl.kind == FKind::Eq && conj->first == aCore) ok = true;
      }
    }
    if (!ok)
      fail("shape-mismatch", "UC /" + e.ucLabel + " does not fit /" + e.label);
  }
  TermId fTermCore = table.expand_term(lhs.t0);
  std::vector<ProofStep> steps;
  steps.push_back(cite(db, e.ecLabel, {}));
  // UC instance at (x := f-term, x' := the result variable)
  {
    FormulaId ucSurface = ucStmt;
    auto vars = distinct_vars_in_order(ucSurface);
    // substitute the distinguished variable by the f-term and the primed
    // copy by the result variable; middle parameters stay
    Subst s;
    s.bind(vars.front(), fTermCore);
    if (vars.back() != vars.front()) s.bind(vars.back(), mk_term(resultVar));
    FormulaId coreF = subst_formula(table.expand(ucSurface), s);
    steps.push_back(step_cite(e.ucLabel, std::move(s), coreF));
  }
  (void)fnode;
  return prove_by_refutation(db, table.expand(e.statement), std::move(steps),
                             "/" + e.label + " (UC/EC definition)");
}

// --- Props 4 and 8: string recursions prove their (/7) statements ------------

inline Proof prove_string_rec_statement(TheoremDB& db, const CorpusEntry& e) {
  FunctionTable& table = db.table();
  auto cs = detail::conjuncts(e.statement);
  if (cs.size() != 3) fail("shape-mismatch", "r-entry /" + e.label);
  FormulaId goalCore = table.expand(e.statement);
  auto eq2 = formulas().node(cs[1]);
  const TermNode l2 = terms().node(eq2.t0);
  Sym f = l2.head;
  Sym w = terms().node(terms().node(l2.args.back()).args[0]).head;
  TermId wv = mk_term(w);
  Sym cat = fn("(+)", 2);
  Sym b0 = fn("b0", 0), b1 = fn("b1", 0);
  FunctionDef d = table.def(f);

  std::vector<ProofStep> steps;
  // conjunct 1: f(..., eps) = a is A/1 itself (eps expands to 0)
  steps.push_back(axiom_a1(table, f));
  for (int bit = 0; bit <= 1; ++bit) {
    TermId bTerm = mk_term(bit ? b1 : b0);
    TermId wb = table.expand_term(mk_term(cat, {wv, bTerm}));
    TermId pwb = mk_term(fn("P", 1), {wb});
    TermId spwb = mk_succ(pwb);
    TermId chopSP = mk_term(fn("Chop", 1), {spwb});
    // A/2 at the predecessor of w (+) bit
    steps.push_back(axiom_a2(table, f, subst1(d.recVar, pwb)));
    steps.push_back(cite(db, "242", {wv}));
    steps.push_back(cite(db, "22", {wb}));
    steps.push_back(cite(db, bit ? "244" : "243", {wv}));
    // the case guards
    FormulaId g0 = mk_eq(spwb, mk_term(cat, {chopSP, mk_term(b0)}));
    FormulaId g1 = mk_eq(spwb, mk_term(cat, {chopSP, mk_term(b1)}));
    steps.push_back(schema_cite(db, "T/51", SchemaParams{table.expand(g0)}));
    if (bit == 1) {
      steps.push_back(schema_cite(db, "T/53", SchemaParams{table.expand(g0)}));
      steps.push_back(schema_cite(db, "T/51", SchemaParams{table.expand(g1)}));
      steps.push_back(cite(db, "217", {chopSP, wv}));
    }
    // select through the case chain: C(chi[g0], bAt, C(chi[g1], cAt, 0))
    Subst sRec;
    sRec.bind(d.recVar, pwb);
    FormulaId a2inst = subst_formula(
        table.construction_axioms(f).second, sRec);
    FormulaNode a2n = formulas().node(a2inst);
    const TermNode outerC = terms().node(a2n.t1);
    steps.push_back(cite(db, "33", {outerC.args[1], outerC.args[2], mk_zero()}));
    if (bit == 1) {
      const TermNode innerC = terms().node(outerC.args[2]);
      steps.push_back(cite(db, "33", {innerC.args[1], innerC.args[2], mk_zero()}));
    }
  }
  return prove_by_refutation(db, goalCore, std::move(steps),
                             "/" + e.label + " (string recursion)", 40);
}

// --- d- and e-entry statements ------------------------------------------------

inline Proof prove_definitional(TheoremDB& db, const CorpusEntry& e) {
  FunctionTable& table = db.table();
  FormulaId core = table.expand(e.statement);
  Proof p;
  if (e.kind == EntryKind::E) {
    // explicit definitions unfold to reflexivity instances
    FormulaNode n = formulas().node(core);
    if (n.kind == FKind::Eq && n.t0 == n.t1) {
      p.add(step_axiom(AxiomKind::a5, core));
      return p;
    }
  }
  // predicate definitions unfold to tautologies D <-> D
  p.add(step_tautcons({}, core));
  return p;
}

inline Proof prove_numeric_rec_statement(TheoremDB& db, const CorpusEntry& e) {
  FunctionTable& table = db.table();
  auto cs = detail::conjuncts(e.statement);
  auto eq1 = formulas().node(cs[0]);
  Sym f = terms().node(eq1.t0).head;
  Proof p;
  std::uint32_t a = p.add(axiom_a1(table, f));
  std::uint32_t b = p.add(axiom_a2(table, f));
  FormulaId core = table.expand(e.statement);
  p.add(step_tautcons({a, b}, core));
  return p;
}

}  // namespace pra

#endif  // PRA_CHECK_HPP
