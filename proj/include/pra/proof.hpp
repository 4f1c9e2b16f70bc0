#ifndef PRA_PROOF_HPP
#define PRA_PROOF_HPP

#include "pra/table.hpp"

namespace pra {

// ---------------------------------------------------------------------------
// Proof objects for the four systems.  Formulas are stored at the PRA level
// (core syntax); chi-system proofs round-trip through the chi bijection at
// the serialization boundary.
// ---------------------------------------------------------------------------

enum class SystemId : std::uint8_t { PRA, chiPRA, PRAstar, chiPRAstar };

inline bool is_star(SystemId s) {
  return s == SystemId::PRAstar || s == SystemId::chiPRAstar;
}
inline bool is_chi(SystemId s) {
  return s == SystemId::chiPRA || s == SystemId::chiPRAstar;
}
inline const char* system_name(SystemId s) {
  switch (s) {
    case SystemId::PRA: return "PRA";
    case SystemId::chiPRA: return "chiPRA";
    case SystemId::PRAstar: return "PRA*";
    case SystemId::chiPRAstar: return "chiPRA*";
  }
  return "?";
}

enum class StepKind : std::uint8_t {
  Axiom,        // axiom (or, in star systems, an instance of one)
  Instance,     // from ref1, by substitution
  ModusPonens,  // from ref1 (A) and ref2 (A -> formula)
  Induction,    // from ref1 (basis) and ref2 (step), on `var`
  Cite,         // theorem `label` under `subst`            (extended)
  SchemaCite,   // schema `label` at (schemaA[, schemaB], schemaVar), `subst`
  Hypothesis,   // opens a deduction block                  (extended)
  Discharge,    // closes the block opened by ref1 -> H -> B_nu
  ClaimOpen,    // states the claim `formula`, opens a block whose first
                //   step is the hypothesis                 (extended)
  ClaimClose,   // closes claim block ref1; asserts the claim
  TautCons,     // tautological consequence of `refs`       (extended)
};

enum class AxiomKind : std::uint8_t {
  a3, a4, a5, a6, A7, A8, A9, A10, A11, A1, A2, T93, None
};

inline const char* axiom_name(AxiomKind k) {
  switch (k) {
    case AxiomKind::a3: return "a3";
    case AxiomKind::a4: return "a4";
    case AxiomKind::a5: return "a5";
    case AxiomKind::a6: return "a6";
    case AxiomKind::A7: return "A7";
    case AxiomKind::A8: return "A8";
    case AxiomKind::A9: return "A9";
    case AxiomKind::A10: return "A10";
    case AxiomKind::A11: return "A11";
    case AxiomKind::A1: return "A1";
    case AxiomKind::A2: return "A2";
    case AxiomKind::T93: return "T93";
    case AxiomKind::None: return "none";
  }
  return "?";
}

struct ProofStep {
  FormulaId formula = kNoId;  // core formula asserted by this step
  StepKind kind = StepKind::Axiom;
  AxiomKind axiom = AxiomKind::None;
  std::uint32_t ref1 = kNoId, ref2 = kNoId;
  std::vector<std::uint32_t> refs;  // TautCons premises
  Subst subst;                      // Instance / Cite / SchemaCite
  Sym var = kNoId;                  // Induction / T93 variable
  std::string label;                // Cite / SchemaCite
  FormulaId schemaA = kNoId, schemaB = kNoId;  // schema parameters
  Sym schemaVar = kNoId;
};

struct Proof {
  SystemId system = SystemId::PRA;
  std::vector<ProofStep> steps;

  std::uint32_t add(ProofStep s) {
    steps.push_back(std::move(s));
    return static_cast<std::uint32_t>(steps.size() - 1);
  }
  FormulaId conclusion() const {
    if (steps.empty()) fail("empty-proof", "no steps");
    return steps.back().formula;
  }
};

// convenience constructors -------------------------------------------------

inline ProofStep step_axiom(AxiomKind k, FormulaId f) {
  ProofStep s;
  s.kind = StepKind::Axiom;
  s.axiom = k;
  s.formula = f;
  return s;
}
inline ProofStep step_instance(std::uint32_t from, Subst su, FormulaId f) {
  ProofStep s;
  s.kind = StepKind::Instance;
  s.ref1 = from;
  s.subst = std::move(su);
  s.formula = f;
  return s;
}
inline ProofStep step_mp(std::uint32_t a, std::uint32_t imp, FormulaId f) {
  ProofStep s;
  s.kind = StepKind::ModusPonens;
  s.ref1 = a;
  s.ref2 = imp;
  s.formula = f;
  return s;
}
inline ProofStep step_induction(std::uint32_t basis, std::uint32_t stp, Sym x, FormulaId f) {
  ProofStep s;
  s.kind = StepKind::Induction;
  s.ref1 = basis;
  s.ref2 = stp;
  s.var = x;
  s.formula = f;
  return s;
}
inline ProofStep step_cite(std::string label, Subst su, FormulaId f) {
  ProofStep s;
  s.kind = StepKind::Cite;
  s.label = std::move(label);
  s.subst = std::move(su);
  s.formula = f;
  return s;
}
inline ProofStep step_schema(std::string label, FormulaId a, Sym x, Subst su, FormulaId f,
                             FormulaId b = kNoId) {
  ProofStep s;
  s.kind = StepKind::SchemaCite;
  s.label = std::move(label);
  s.schemaA = a;
  s.schemaB = b;
  s.schemaVar = x;
  s.subst = std::move(su);
  s.formula = f;
  return s;
}
inline ProofStep step_hypothesis(FormulaId h) {
  ProofStep s;
  s.kind = StepKind::Hypothesis;
  s.formula = h;
  return s;
}
inline ProofStep step_discharge(std::uint32_t hyp, FormulaId f) {
  ProofStep s;
  s.kind = StepKind::Discharge;
  s.ref1 = hyp;
  s.formula = f;
  return s;
}
inline ProofStep step_claim_open(FormulaId claim) {
  ProofStep s;
  s.kind = StepKind::ClaimOpen;
  s.formula = claim;
  return s;
}
inline ProofStep step_claim_close(std::uint32_t open, FormulaId claim) {
  ProofStep s;
  s.kind = StepKind::ClaimClose;
  s.ref1 = open;
  s.formula = claim;
  return s;
}
inline ProofStep step_tautcons(std::vector<std::uint32_t> refs, FormulaId f) {
  ProofStep s;
  s.kind = StepKind::TautCons;
  s.refs = std::move(refs);
  s.formula = f;
  return s;
}

}  // namespace pra

#endif  // PRA_PROOF_HPP
