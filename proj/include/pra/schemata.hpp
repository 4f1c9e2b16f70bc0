#ifndef PRA_SCHEMATA_HPP
#define PRA_SCHEMATA_HPP

#include "pra/derive.hpp"

namespace pra {

// ---------------------------------------------------------------------------
// The theorem schemata T/51..T/54 and T/83..T/96, realized as generators:
// each instantiation produces a concrete statement plus an extended proof,
// which the TheoremDB kernel-checks and caches.  Statements follow the
// paper's formulations; the distinguished variable of A is params.x, and
// extra statement slots use the reserved variables @v, @w, @u so that
// citations can instantiate them.
// ---------------------------------------------------------------------------

namespace schemata {

inline FormulaId need_core(TheoremDB& db, FormulaId a) { return db.table().expand(a); }

inline TermId chi_core(TheoremDB& db, FormulaId coreF) {
  return db.table().expand_term(db.table().chi(coreF));
}

inline TermId mu_at(TheoremDB& db, FormulaId coreA, Sym x, TermId arg) {
  return db.table().mu_term(coreA, x, arg);
}

inline FormulaId at(FormulaId a, Sym x, TermId t) {
  return subst_formula(a, subst1(x, t));
}

// R/82's construction axioms for mu_A, instantiated at the application's
// parameter slots (and, for A/2, at the recursion argument)
inline ProofStep mu_a1(TheoremDB& db, FormulaId coreA, Sym x) {
  auto app = db.table().mu_application(coreA, x);
  FunctionDef d = db.table().def(app.symbol);
  Subst s;
  for (std::size_t i = 0; i < d.params.size(); ++i) s.bind(d.params[i], app.args[i]);
  return axiom_a1(db.table(), app.symbol, s);
}
inline ProofStep mu_a2(TheoremDB& db, FormulaId coreA, Sym x, TermId recArg) {
  auto app = db.table().mu_application(coreA, x);
  FunctionDef d = db.table().def(app.symbol);
  Subst s;
  for (std::size_t i = 0; i < d.params.size(); ++i) s.bind(d.params[i], app.args[i]);
  s.bind(d.recVar, recArg);
  return axiom_a2(db.table(), app.symbol, s);
}

inline FormulaId pred_le(TheoremDB& db, TermId a, TermId b) {
  return db.table().expand(mk_pred(fn("<=", 2), {a, b}));
}
inline FormulaId pred_lt(TheoremDB& db, TermId a, TermId b) {
  return db.table().expand(mk_pred(fn("<", 2), {a, b}));
}

// --- Prop 2: T/51 .. T/54 ---------------------------------------------------

inline SchemaInstance t51(const SchemaParams& p, TheoremDB& db) {
  FormulaId a = need_core(db, p.a);
  auto proof = std::make_shared<Proof>();
  std::function<std::uint32_t(FormulaId)> go = [&](FormulaId s) -> std::uint32_t {
    FormulaId target = mk_iff(mk_eq(chi_core(db, s), mk_zero()), s);
    FormulaNode n = formulas().node(s);
    switch (n.kind) {
      case FKind::Eq: {
        TermId eqT = mk_term(fn("Eq", 2), {n.t0, n.t1});
        std::uint32_t i36 = proof->add(cite(db, "36", {eqT}));
        std::uint32_t i32 = proof->add(cite(db, "32", {n.t0, n.t1}));
        return proof->add(step_tautcons({i36, i32}, target));
      }
      case FKind::Neg: {
        std::uint32_t ib = go(n.f0);
        std::uint32_t i37 = proof->add(cite(db, "37", {chi_core(db, n.f0)}));
        return proof->add(step_tautcons({ib, i37}, target));
      }
      case FKind::Or: {
        std::uint32_t ib = go(n.f0);
        std::uint32_t ic = go(n.f1);
        std::uint32_t i41 = proof->add(
            cite(db, "41", {chi_core(db, n.f0), chi_core(db, n.f1)}));
        return proof->add(step_tautcons({ib, ic, i41}, target));
      }
      default:
        fail("not-core-formula", "T/51");
    }
  };
  go(a);
  SchemaInstance inst;
  inst.statement = mk_iff(mk_eq(chi_core(db, a), mk_zero()), a);
  inst.proof = proof;
  return inst;
}

inline SchemaInstance t52(const SchemaParams& p, TheoremDB& db) {
  FormulaId a = need_core(db, p.a);
  FormulaNode n = formulas().node(a);
  auto proof = std::make_shared<Proof>();
  switch (n.kind) {
    case FKind::Eq:
      proof->add(cite(db, "45", {n.t0, n.t1}));
      break;
    case FKind::Neg:
      proof->add(cite(db, "46", {chi_core(db, n.f0)}));
      break;
    case FKind::Or:
      proof->add(cite(db, "47", {chi_core(db, n.f0), chi_core(db, n.f1)}));
      break;
    default:
      fail("not-core-formula", "T/52");
  }
  SchemaInstance inst;
  TermId c = chi_core(db, a);
  inst.statement = mk_or(mk_eq(c, mk_zero()), mk_eq(c, mk_succ(mk_zero())));
  inst.proof = proof;
  if (proof->conclusion() != inst.statement)
    fail("schema-mismatch", "T/52 citation does not match");
  return inst;
}

inline SchemaInstance t53(const SchemaParams& p, TheoremDB& db) {
  FormulaId a = need_core(db, p.a);
  TermId c = chi_core(db, a);
  FormulaId stmt = mk_iff(mk_eq(c, mk_succ(mk_zero())), mk_neg(a));
  std::vector<ProofStep> steps;
  steps.push_back(schema_cite(db, "T/51", SchemaParams{a}));
  steps.push_back(schema_cite(db, "T/52", SchemaParams{a}));
  steps.push_back(cite(db, "3", {mk_zero()}));
  SchemaInstance inst;
  inst.statement = stmt;
  inst.proof = std::make_shared<Proof>(
      prove_by_refutation(db, stmt, std::move(steps), "T/53"));
  return inst;
}

inline SchemaInstance t54(const SchemaParams& p, TheoremDB& db) {
  FormulaId a = need_core(db, p.a), b = need_core(db, p.b);
  FormulaId stmt = mk_iff(mk_iff(a, b), mk_eq(chi_core(db, a), chi_core(db, b)));
  std::vector<ProofStep> steps;
  steps.push_back(schema_cite(db, "T/51", SchemaParams{a}));
  steps.push_back(schema_cite(db, "T/51", SchemaParams{b}));
  steps.push_back(schema_cite(db, "T/52", SchemaParams{a}));
  steps.push_back(schema_cite(db, "T/52", SchemaParams{b}));
  steps.push_back(cite(db, "3", {mk_zero()}));
  SchemaInstance inst;
  inst.statement = stmt;
  inst.proof = std::make_shared<Proof>(
      prove_by_refutation(db, stmt, std::move(steps), "T/54"));
  return inst;
}

// --- the mu schemata T/83 .. T/96 -------------------------------------------

// statements
inline FormulaId stmt_t83(TheoremDB& db, FormulaId a, Sym x) {
  TermId xv = mk_term(x);
  TermId mu = mu_at(db, a, x, xv);
  return mk_imp(pred_le(db, mu, xv), at(a, x, mu));
}
inline FormulaId stmt_t84(TheoremDB& db, FormulaId a, Sym x) {
  TermId xv = mk_term(x);
  TermId mu = mu_at(db, a, x, xv);
  return mk_imp(a, pred_le(db, mu, xv));
}
inline FormulaId stmt_t85(TheoremDB& db, FormulaId a, Sym x) {
  TermId xv = mk_term(x);
  TermId mu = mu_at(db, a, x, xv);
  return mk_imp(a, mk_and(at(a, x, mu), pred_le(db, mu, xv)));
}
inline FormulaId stmt_t86(TheoremDB& db, FormulaId a, Sym x) {
  TermId xv = mk_term(x), wv = mk_term(slot_w());
  TermId plus = mk_term(fn("+", 2), {xv, wv});
  return mk_imp(pred_le(db, mu_at(db, a, x, xv), xv),
                mk_eq(mu_at(db, a, x, plus), mu_at(db, a, x, xv)));
}
inline FormulaId stmt_t87(TheoremDB& db, FormulaId a, Sym x) {
  TermId xv = mk_term(x), zv = mk_term(slot_w());
  return mk_imp(mk_and(pred_le(db, mu_at(db, a, x, xv), xv), pred_le(db, xv, zv)),
                mk_eq(mu_at(db, a, x, zv), mu_at(db, a, x, xv)));
}
inline FormulaId stmt_t88(TheoremDB& db, FormulaId a, Sym x) {
  TermId xv = mk_term(x), bv = mk_term(slot_v());
  return mk_imp(mk_and(pred_le(db, xv, bv), a), at(a, x, mu_at(db, a, x, bv)));
}
inline FormulaId stmt_t89(TheoremDB& db, FormulaId a, Sym x) {
  TermId bv = mk_term(slot_v());
  TermId mu = mu_at(db, a, x, bv);
  return mk_imp(at(a, x, mu), mk_and(pred_le(db, mu, bv), at(a, x, mu)));
}
inline FormulaId stmt_t90(TheoremDB& db, FormulaId a, Sym x) {
  TermId xv = mk_term(x), bv = mk_term(slot_v());
  FormulaId coreA = need_core(db, a);
  TermId muNeg = mu_at(db, mk_neg(coreA), x, bv);
  FormulaId all = subst_formula(coreA, subst1(x, muNeg));
  return mk_imp(all, mk_imp(pred_le(db, xv, bv), coreA));
}
inline FormulaId stmt_t91(TheoremDB& db, FormulaId a, Sym x) {
  TermId bv = mk_term(slot_v()), cv = mk_term(slot_w());
  return mk_imp(mk_and(at(a, x, mu_at(db, a, x, cv)), pred_le(db, cv, bv)),
                at(a, x, mu_at(db, a, x, bv)));
}
inline FormulaId stmt_t92(TheoremDB& db, FormulaId a, Sym x) {
  TermId bv = mk_term(slot_v()), cv = mk_term(slot_w());
  FormulaId coreA = need_core(db, a);
  auto all_at = [&](TermId bound) {
    return subst_formula(coreA, subst1(x, mu_at(db, mk_neg(coreA), x, bound)));
  };
  return mk_imp(mk_and(all_at(bv), pred_le(db, cv, bv)), all_at(cv));
}
inline FormulaId stmt_t94(TheoremDB& db, FormulaId a, Sym x) {
  TermId xv = mk_term(x), uv = mk_term(slot_u());
  TermId mu = mu_at(db, a, x, xv);
  return mk_imp(a, mk_imp(pred_lt(db, uv, mu), mk_neg(at(a, x, uv))));
}
inline FormulaId stmt_t95(TheoremDB& db, FormulaId a, Sym x) {
  TermId xv = mk_term(x);
  TermId mu = mu_at(db, a, x, xv);
  FormulaId body = mk_neg(at(a, x, mk_term(slot_u())));
  FormulaId all = mk_bounded(QKind::ForallLt, slot_u(), mu, body);
  return db.table().expand(mk_imp(a, all));
}
inline FormulaId stmt_t96(TheoremDB& db, FormulaId a, Sym x) {
  TermId xv = mk_term(x);
  TermId mu = mu_at(db, a, x, xv);
  TermId mumu = mu_at(db, a, x, mu);
  return mk_imp(a, mk_eq(mumu, mu));
}

// the mu dichotomy (internal): mu_A(@v) <= @v | mu_A(@v) = S @v
inline FormulaId stmt_dicho(TheoremDB& db, FormulaId a, Sym x) {
  TermId bv = mk_term(slot_v());
  TermId mu = mu_at(db, a, x, bv);
  return mk_or(pred_le(db, mu, bv), mk_eq(mu, mk_succ(bv)));
}

// generators

inline SchemaInstance refutation_schema(TheoremDB& db, const std::string& name,
                                        FormulaId stmt, std::vector<ProofStep> steps,
                                        std::size_t cap = 26) {
  SchemaInstance inst;
  inst.statement = stmt;
  inst.proof = std::make_shared<Proof>(
      prove_by_refutation(db, stmt, std::move(steps), name, cap));
  return inst;
}

inline SchemaInstance t83b(const SchemaParams& p, TheoremDB& db) {
  FormulaId a = need_core(db, p.a);
  Sym x = p.x;
  TermId mu0 = mu_at(db, a, x, mk_zero());
  Sym muSym = terms().node(mu0).head;
  FormulaId a0 = at(a, x, mk_zero());
  FormulaId stmt = mk_imp(pred_le(db, mu0, mk_zero()), at(a, x, mu0));
  (void)muSym;
  std::vector<ProofStep> steps;
  steps.push_back(mu_a1(db, a, x));
  steps.push_back(cite(db, "57", {mu0}));
  steps.push_back(cite(db, "36", {chi_core(db, a0)}));
  steps.push_back(schema_cite(db, "T/51", SchemaParams{a0}));
  return refutation_schema(db, "T/83b", stmt, std::move(steps));
}

inline SchemaInstance t83i(const SchemaParams& p, TheoremDB& db) {
  FormulaId a = need_core(db, p.a);
  Sym x = p.x;
  TermId xv = mk_term(x);
  TermId mux = mu_at(db, a, x, xv), muSx = mu_at(db, a, x, mk_succ(xv));
  Sym muSym = terms().node(mux).head;
  FormulaId found = pred_le(db, mux, xv);
  FormulaId aSx = at(a, x, mk_succ(xv));
  TermId inner = mk_term(fn("C", 3),
                         {chi_core(db, aSx), mk_succ(xv), mk_succ(mk_succ(xv))});
  FormulaId stmt = mk_imp(mk_imp(found, at(a, x, mux)),
                          mk_imp(pred_le(db, muSx, mk_succ(xv)), at(a, x, muSx)));
  (void)muSym;
  std::vector<ProofStep> steps;
  steps.push_back(mu_a2(db, a, x, xv));
  steps.push_back(schema_cite(db, "T/51", SchemaParams{found}));
  steps.push_back(schema_cite(db, "T/53", SchemaParams{found}));
  steps.push_back(schema_cite(db, "T/51", SchemaParams{aSx}));
  steps.push_back(schema_cite(db, "T/52", SchemaParams{aSx}));
  steps.push_back(cite(db, "33", {mux, inner, mk_zero()}));
  steps.push_back(cite(db, "33", {mk_succ(xv), mk_succ(mk_succ(xv)), mk_zero()}));
  steps.push_back(cite(db, "59", {mk_succ(xv)}));
  return refutation_schema(db, "T/83i", stmt, std::move(steps));
}

inline SchemaInstance induction_schema(TheoremDB& db, const std::string& bLabel,
                                       const std::string& iLabel,
                                       const SchemaParams& p, FormulaId stmt,
                                       Sym indVar) {
  auto proof = std::make_shared<Proof>();
  SchemaInstance bi = db.instantiate(bLabel, p);
  SchemaInstance ii = db.instantiate(iLabel, p);
  std::uint32_t b = proof->add(step_schema(bLabel, p.a, p.x, {}, bi.statement, p.b));
  std::uint32_t i = proof->add(step_schema(iLabel, p.a, p.x, {}, ii.statement, p.b));
  proof->add(step_induction(b, i, indVar, stmt));
  SchemaInstance inst;
  inst.statement = stmt;
  inst.proof = proof;
  return inst;
}

inline SchemaInstance t83(const SchemaParams& p, TheoremDB& db) {
  FormulaId a = need_core(db, p.a);
  return induction_schema(db, "T/83b", "T/83i", SchemaParams{a, p.x},
                          stmt_t83(db, a, p.x), p.x);
}

inline SchemaInstance t84b(const SchemaParams& p, TheoremDB& db) {
  FormulaId a = need_core(db, p.a);
  Sym x = p.x;
  TermId mu0 = mu_at(db, a, x, mk_zero());
  Sym muSym = terms().node(mu0).head;
  FormulaId a0 = at(a, x, mk_zero());
  FormulaId stmt = mk_imp(a0, pred_le(db, mu0, mk_zero()));
  (void)muSym;
  std::vector<ProofStep> steps;
  steps.push_back(mu_a1(db, a, x));
  steps.push_back(schema_cite(db, "T/51", SchemaParams{a0}));
  // C(0, 0, S0) = 0 by the first conjunct of /33 at (y,z) := (0, S0)
  steps.push_back(cite(db, "33", {mk_zero(), mk_succ(mk_zero()), mk_zero()}));
  steps.push_back(cite(db, "60", {mk_zero()}));
  return refutation_schema(db, "T/84b", stmt, std::move(steps));
}

inline SchemaInstance t84i(const SchemaParams& p, TheoremDB& db) {
  FormulaId a = need_core(db, p.a);
  Sym x = p.x;
  TermId xv = mk_term(x);
  TermId mux = mu_at(db, a, x, xv), muSx = mu_at(db, a, x, mk_succ(xv));
  Sym muSym = terms().node(mux).head;
  FormulaId found = pred_le(db, mux, xv);
  FormulaId aSx = at(a, x, mk_succ(xv));
  TermId inner = mk_term(fn("C", 3),
                         {chi_core(db, aSx), mk_succ(xv), mk_succ(mk_succ(xv))});
  FormulaId ax = at(a, x, xv);
  FormulaId stmt = mk_imp(mk_imp(ax, found),
                          mk_imp(aSx, pred_le(db, muSx, mk_succ(xv))));
  (void)muSym;
  std::vector<ProofStep> steps;
  steps.push_back(mu_a2(db, a, x, xv));
  steps.push_back(schema_cite(db, "T/51", SchemaParams{aSx}));
  steps.push_back(schema_cite(db, "T/51", SchemaParams{found}));
  steps.push_back(schema_cite(db, "T/53", SchemaParams{found}));
  steps.push_back(cite(db, "33", {mux, inner, mk_zero()}));
  steps.push_back(cite(db, "33", {mk_succ(xv), mk_succ(mk_succ(xv)), mk_zero()}));
  steps.push_back(cite(db, "60", {mk_succ(xv)}));
  steps.push_back(cite(db, "63", {xv}));
  steps.push_back(cite(db, "73", {mux, xv, mk_succ(xv)}));
  return refutation_schema(db, "T/84i", stmt, std::move(steps));
}

inline SchemaInstance t84(const SchemaParams& p, TheoremDB& db) {
  FormulaId a = need_core(db, p.a);
  return induction_schema(db, "T/84b", "T/84i", SchemaParams{a, p.x},
                          stmt_t84(db, a, p.x), p.x);
}

inline SchemaInstance t85(const SchemaParams& p, TheoremDB& db) {
  FormulaId a = need_core(db, p.a);
  std::vector<ProofStep> steps;
  steps.push_back(schema_cite(db, "T/83", SchemaParams{a, p.x}));
  steps.push_back(schema_cite(db, "T/84", SchemaParams{a, p.x}));
  return refutation_schema(db, "T/85", stmt_t85(db, a, p.x), std::move(steps));
}

inline SchemaInstance t86b(const SchemaParams& p, TheoremDB& db) {
  FormulaId a = need_core(db, p.a);
  Sym x = p.x;
  TermId xv = mk_term(x);
  TermId plus0 = mk_term(fn("+", 2), {xv, mk_zero()});
  FormulaId stmt = mk_imp(pred_le(db, mu_at(db, a, x, xv), xv),
                          mk_eq(mu_at(db, a, x, plus0), mu_at(db, a, x, xv)));
  std::vector<ProofStep> steps;
  steps.push_back(cite(db, "12", {xv}));
  return refutation_schema(db, "T/86b", stmt, std::move(steps));
}

inline SchemaInstance t86i(const SchemaParams& p, TheoremDB& db) {
  FormulaId a = need_core(db, p.a);
  Sym x = p.x;
  Sym w = slot_w();
  TermId xv = mk_term(x), wv = mk_term(w);
  TermId xw = mk_term(fn("+", 2), {xv, wv});
  TermId xSw = mk_term(fn("+", 2), {xv, mk_succ(wv)});
  TermId muX = mu_at(db, a, x, xv);
  TermId muXW = mu_at(db, a, x, xw);
  TermId muXSW = mu_at(db, a, x, xSw);
  Sym muSym = terms().node(muX).head;
  FormulaId foundX = pred_le(db, muX, xv);
  FormulaId foundXW = pred_le(db, muXW, xw);
  FormulaId aSxw = at(a, x, mk_succ(xw));
  TermId inner = mk_term(fn("C", 3),
                         {chi_core(db, aSxw), mk_succ(xw), mk_succ(mk_succ(xw))});
  FormulaId stmt = mk_imp(mk_imp(foundX, mk_eq(muXW, muX)),
                          mk_imp(foundX, mk_eq(muXSW, muX)));
  (void)muSym;
  std::vector<ProofStep> steps;
  steps.push_back(cite(db, "12", {xv, wv}));
  steps.push_back(cite(db, "71", {xv, wv}));
  steps.push_back(cite(db, "73", {muXW, xv, xw}));
  steps.push_back(mu_a2(db, a, x, xw));
  steps.push_back(schema_cite(db, "T/51", SchemaParams{foundXW}));
  steps.push_back(cite(db, "33", {muXW, inner, mk_zero()}));
  return refutation_schema(db, "T/86i", stmt, std::move(steps), 30);
}

inline SchemaInstance t86(const SchemaParams& p, TheoremDB& db) {
  FormulaId a = need_core(db, p.a);
  return induction_schema(db, "T/86b", "T/86i", SchemaParams{a, p.x},
                          stmt_t86(db, a, p.x), slot_w());
}

inline SchemaInstance t87(const SchemaParams& p, TheoremDB& db) {
  FormulaId a = need_core(db, p.a);
  Sym x = p.x;
  TermId xv = mk_term(x), zv = mk_term(slot_w());
  std::vector<ProofStep> steps;
  steps.push_back(cite(db, "68", {xv, zv}));
  TermId diff = mk_term(fn("-.", 2), {zv, xv});
  steps.push_back(
      schema_cite(db, "T/86", SchemaParams{a, x}, subst1(slot_w(), diff)));
  return refutation_schema(db, "T/87", stmt_t87(db, a, p.x), std::move(steps));
}

inline SchemaInstance t88(const SchemaParams& p, TheoremDB& db) {
  FormulaId a = need_core(db, p.a);
  Sym x = p.x;
  TermId xv = mk_term(x), bv = mk_term(slot_v());
  std::vector<ProofStep> steps;
  steps.push_back(schema_cite(db, "T/85", SchemaParams{a, x}));
  steps.push_back(schema_cite(db, "T/87", SchemaParams{a, x},
                              subst2(x, xv, slot_w(), bv)));
  return refutation_schema(db, "T/88", stmt_t88(db, a, p.x), std::move(steps));
}

inline SchemaInstance t89(const SchemaParams& p, TheoremDB& db) {
  // The manuscript's T/89 claims mu_A(b) <= b from the abbreviation
  // exists x<=b A alone; with the section's abbreviation that conjunct has
  // counterexamples (A == [x=S0], b == 0), so the proof attempt below is
  // expected to fail; see the corpus notes.
  FormulaId a = need_core(db, p.a);
  Sym x = p.x;
  TermId bv = mk_term(slot_v());
  std::vector<ProofStep> steps;
  steps.push_back(schema_cite(db, "T/83", SchemaParams{a, x}, subst1(x, bv)));
  return refutation_schema(db, "T/89", stmt_t89(db, a, p.x), std::move(steps));
}

inline SchemaInstance t90(const SchemaParams& p, TheoremDB& db) {
  FormulaId a = need_core(db, p.a);
  Sym x = p.x;
  FormulaId negA = neg_normalize(mk_neg(a));
  std::vector<ProofStep> steps;
  steps.push_back(schema_cite(db, "T/88", SchemaParams{negA, x}));
  return refutation_schema(db, "T/90", stmt_t90(db, a, p.x), std::move(steps));
}

inline SchemaInstance dicho_b(const SchemaParams& p, TheoremDB& db) {
  FormulaId a = need_core(db, p.a);
  Sym x = p.x;
  TermId mu0 = mu_at(db, a, x, mk_zero());
  Sym muSym = terms().node(mu0).head;
  FormulaId a0 = at(a, x, mk_zero());
  FormulaId stmt = mk_or(pred_le(db, mu0, mk_zero()), mk_eq(mu0, mk_succ(mk_zero())));
  (void)muSym;
  std::vector<ProofStep> steps;
  steps.push_back(mu_a1(db, a, x));
  steps.push_back(cite(db, "38", {chi_core(db, a0)}));
  steps.push_back(cite(db, "60", {mk_zero()}));
  return refutation_schema(db, "T/mu-dichotomy-b", stmt, std::move(steps));
}

inline SchemaInstance dicho_i(const SchemaParams& p, TheoremDB& db) {
  FormulaId a = need_core(db, p.a);
  Sym x = p.x;
  Sym r = slot_v();
  TermId rv = mk_term(r);
  TermId muR = mu_at(db, a, x, rv), muSR = mu_at(db, a, x, mk_succ(rv));
  Sym muSym = terms().node(muR).head;
  FormulaId found = pred_le(db, muR, rv);
  FormulaId aSr = at(a, x, mk_succ(rv));
  TermId inner = mk_term(fn("C", 3),
                         {chi_core(db, aSr), mk_succ(rv), mk_succ(mk_succ(rv))});
  auto dis = [&](TermId mu, TermId b) {
    return mk_or(pred_le(db, mu, b), mk_eq(mu, mk_succ(b)));
  };
  FormulaId stmt = mk_imp(dis(muR, rv), dis(muSR, mk_succ(rv)));
  (void)muSym;
  std::vector<ProofStep> steps;
  steps.push_back(mu_a2(db, a, x, rv));
  steps.push_back(schema_cite(db, "T/51", SchemaParams{found}));
  steps.push_back(schema_cite(db, "T/53", SchemaParams{found}));
  steps.push_back(schema_cite(db, "T/52", SchemaParams{aSr}));
  steps.push_back(cite(db, "33", {muR, inner, mk_zero()}));
  steps.push_back(cite(db, "33", {mk_succ(rv), mk_succ(mk_succ(rv)), mk_zero()}));
  steps.push_back(cite(db, "59", {rv}));
  steps.push_back(cite(db, "63", {rv}));
  steps.push_back(cite(db, "73", {muR, rv, mk_succ(rv)}));
  steps.push_back(cite(db, "60", {mk_succ(rv)}));
  return refutation_schema(db, "T/mu-dichotomy-i", stmt, std::move(steps), 30);
}

inline SchemaInstance dicho(const SchemaParams& p, TheoremDB& db) {
  FormulaId a = need_core(db, p.a);
  return induction_schema(db, "T/mu-dichotomy-b", "T/mu-dichotomy-i",
                          SchemaParams{a, p.x}, stmt_dicho(db, a, p.x), slot_v());
}

inline SchemaInstance t91(const SchemaParams& p, TheoremDB& db) {
  FormulaId a = need_core(db, p.a);
  Sym x = p.x;
  TermId bv = mk_term(slot_v()), cv = mk_term(slot_w());
  TermId muC = mu_at(db, a, x, cv);
  std::vector<ProofStep> steps;
  steps.push_back(schema_cite(db, "T/mu-dichotomy", SchemaParams{a, x},
                              subst1(slot_v(), cv)));
  steps.push_back(schema_cite(db, "T/87", SchemaParams{a, x},
                              subst2(x, cv, slot_w(), bv)));
  steps.push_back(cite(db, "61", {cv, bv}));
  steps.push_back(cite(db, "114", {cv, bv}));
  steps.push_back(schema_cite(db, "T/88", SchemaParams{a, x},
                              subst2(x, mk_succ(cv), slot_v(), bv)));
  (void)muC;
  return refutation_schema(db, "T/91", stmt_t91(db, a, p.x), std::move(steps), 30);
}

inline SchemaInstance t92(const SchemaParams& p, TheoremDB& db) {
  FormulaId a = need_core(db, p.a);
  Sym x = p.x;
  FormulaId negA = neg_normalize(mk_neg(a));
  std::vector<ProofStep> steps;
  steps.push_back(schema_cite(db, "T/91", SchemaParams{negA, x},
                              subst2(slot_v(), mk_term(slot_v()), slot_w(),
                                     mk_term(slot_w()))));
  return refutation_schema(db, "T/92", stmt_t92(db, a, p.x), std::move(steps));
}

inline SchemaInstance t93b(const SchemaParams& p, TheoremDB& db) {
  FormulaId a = need_core(db, p.a);
  Sym x = p.x;
  // the instance at 0:  A(0) & forall x'<=P0[...] -> A(0), a tautology
  FormulaId t93 = Kernel::t93_statement(db.table(), a, x);
  FormulaId stmt = subst_formula(t93, subst1(x, mk_zero()));
  return refutation_schema(db, "T/93b", stmt, {});
}

inline SchemaInstance t93i(const SchemaParams& p, TheoremDB& db) {
  FormulaId a = need_core(db, p.a);
  Sym x = p.x;
  TermId xv = mk_term(x);
  Sym xp = var("@i");
  FormulaId body = mk_imp(at(a, x, mk_term(xp)), at(a, x, mk_succ(mk_term(xp))));
  FormulaId coreBody = db.table().expand(body);
  TermId px = mk_term(fn("P", 1), {xv});
  TermId pSx = mk_term(fn("P", 1), {mk_succ(xv)});
  auto forall_le = [&](TermId bound) {
    return db.table().expand(mk_bounded(QKind::ForallLe, xp, bound, body));
  };
  FormulaId full = [&](TermId atT, TermId bound) {
    return mk_imp(mk_and(at(a, x, mk_zero()), forall_le(bound)), at(a, x, atT));
  }(xv, px);
  FormulaId fullS = mk_imp(mk_and(at(a, x, mk_zero()), forall_le(pSx)),
                           at(a, x, mk_succ(xv)));
  FormulaId stmt = mk_imp(full, fullS);
  std::vector<ProofStep> steps;
  steps.push_back(cite(db, "16", {xv}));
  steps.push_back(cite(db, "60", {xv}));
  steps.push_back(cite(db, "64", {xv}));
  // instantiate the PSx-universal at x, and narrow it to Px
  steps.push_back(schema_cite(db, "T/90", SchemaParams{coreBody, xp},
                              subst2(xp, xv, slot_v(), pSx)));
  steps.push_back(schema_cite(db, "T/92", SchemaParams{coreBody, xp},
                              subst2(slot_v(), pSx, slot_w(), px)));
  return refutation_schema(db, "T/93i", stmt, std::move(steps), 30);
}

inline SchemaInstance t93(const SchemaParams& p, TheoremDB& db) {
  FormulaId a = need_core(db, p.a);
  return induction_schema(db, "T/93b", "T/93i", SchemaParams{a, p.x},
                          Kernel::t93_statement(db.table(), a, p.x), p.x);
}

inline SchemaInstance t94(const SchemaParams& p, TheoremDB& db) {
  FormulaId a = need_core(db, p.a);
  Sym x = p.x;
  TermId xv = mk_term(x), uv = mk_term(slot_u());
  TermId muX = mu_at(db, a, x, xv);
  TermId muU = mu_at(db, a, x, uv);
  std::vector<ProofStep> steps;
  steps.push_back(schema_cite(db, "T/85", SchemaParams{a, x}));
  steps.push_back(schema_cite(db, "T/85", SchemaParams{a, x}, subst1(x, uv)));
  steps.push_back(cite(db, "56", {uv, muX}, /*direction=*/+1));
  steps.push_back(cite(db, "73", {uv, muX, xv}));
  steps.push_back(schema_cite(db, "T/87", SchemaParams{a, x},
                              subst2(x, uv, slot_w(), xv)));
  steps.push_back(cite(db, "80", {uv, muU}));
  return refutation_schema(db, "T/94", stmt_t94(db, a, p.x), std::move(steps), 30);
}

inline SchemaInstance t95(const SchemaParams& p, TheoremDB& db) {
  FormulaId a = need_core(db, p.a);
  Sym x = p.x;
  TermId xv = mk_term(x);
  TermId mu = mu_at(db, a, x, xv);
  FormulaId body = mk_neg(at(a, x, mk_term(slot_u())));
  FormulaNode bq = formulas().node(mk_bounded(QKind::ForallLt, slot_u(), mu, body));
  TermId witness = db.table().bounded_witness(bq);
  SchemaInstance t94i = db.instantiate("T/94", SchemaParams{a, x});
  auto proof = std::make_shared<Proof>();
  std::uint32_t i = proof->add(step_schema("T/94", a, x, {}, t94i.statement));
  FormulaId instF = subst_formula(t94i.statement, subst1(slot_u(), witness));
  proof->add(step_instance(i, subst1(slot_u(), witness), instF));
  FormulaId stmt = stmt_t95(db, a, x);
  if (instF != stmt)
    fail("schema-mismatch", "T/95 expansion does not match the T/94 instance");
  SchemaInstance inst;
  inst.statement = stmt;
  inst.proof = proof;
  return inst;
}

inline SchemaInstance t96(const SchemaParams& p, TheoremDB& db) {
  FormulaId a = need_core(db, p.a);
  Sym x = p.x;
  TermId xv = mk_term(x);
  TermId mu = mu_at(db, a, x, xv);
  TermId mumu = mu_at(db, a, x, mu);
  std::vector<ProofStep> steps;
  steps.push_back(schema_cite(db, "T/85", SchemaParams{a, x}));
  steps.push_back(schema_cite(db, "T/85", SchemaParams{a, x}, subst1(x, mu)));
  steps.push_back(cite(db, "56", {mumu, mu}, /*direction=*/-1));
  steps.push_back(schema_cite(db, "T/94", SchemaParams{a, x}, subst1(slot_u(), mumu)));
  return refutation_schema(db, "T/96", stmt_t96(db, a, p.x), std::move(steps), 30);
}

inline void register_all(TheoremDB& db) {
  auto add = [&](const std::string& label, SchemaFn fn) {
    DBEntry e;
    e.kind = DBEntry::Kind::Schema;
    e.label = label;
    e.schema = std::move(fn);
    db.add(std::move(e));
  };
  add("T/51", t51);
  add("T/52", t52);
  add("T/53", t53);
  add("T/54", t54);
  add("T/83b", t83b);
  add("T/83i", t83i);
  add("T/83", t83);
  add("T/84b", t84b);
  add("T/84i", t84i);
  add("T/84", t84);
  add("T/85", t85);
  add("T/86b", t86b);
  add("T/86i", t86i);
  add("T/86", t86);
  add("T/87", t87);
  add("T/88", t88);
  add("T/89", t89);
  add("T/90", t90);
  add("T/mu-dichotomy-b", dicho_b);
  add("T/mu-dichotomy-i", dicho_i);
  add("T/mu-dichotomy", dicho);
  add("T/91", t91);
  add("T/92", t92);
  add("T/93b", t93b);
  add("T/93i", t93i);
  add("T/93", t93);
  add("T/94", t94);
  add("T/95", t95);
  add("T/96", t96);
}

}  // namespace schemata

}  // namespace pra

#endif  // PRA_SCHEMATA_HPP
