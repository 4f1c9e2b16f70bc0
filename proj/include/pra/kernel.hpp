#ifndef PRA_KERNEL_HPP
#define PRA_KERNEL_HPP

#include <functional>
#include <memory>

#include "pra/corpus.hpp"
#include "pra/taut.hpp"

namespace pra {

// ---------------------------------------------------------------------------
// TheoremDB: the ordered store of checked results, definitions, and schema
// templates, addressable by label.  Labels cite only earlier entries; the
// store is frozen between load phases, so lookups are safe to share.
// ---------------------------------------------------------------------------

enum class TheoremMode : std::uint8_t { Primitive, Extended };

struct SchemaInstance {
  FormulaId statement = kNoId;  // core; may have free object variables
  std::shared_ptr<const Proof> proof;  // extended proof (checked & cached)
};

// parameters of a schema template: a formula A (and optionally B), plus the
// distinguished variable of A where one is required (T/83..T/96)
struct SchemaParams {
  FormulaId a = kNoId;
  Sym x = kNoId;
  FormulaId b = kNoId;

  bool operator<(const SchemaParams& o) const {
    return std::tie(a, x, b) < std::tie(o.a, o.x, o.b);
  }
};

class TheoremDB;
using SchemaFn = std::function<SchemaInstance(const SchemaParams&, TheoremDB&)>;

struct DBEntry {
  enum class Kind : std::uint8_t { Theorem, Definition, Schema } kind = Kind::Theorem;
  std::string label;
  FormulaId statement = kNoId;             // surface formula (Theorem/Definition)
  EntryKind defKind = EntryKind::T;        // for definitions
  TheoremMode mode = TheoremMode::Extended;
  std::shared_ptr<const Proof> proof;      // stored proof, when checked
  SchemaFn schema;                         // for schema templates
};

class TheoremDB {
 public:
  explicit TheoremDB(FunctionTable& table) : table_(table) {}

  FunctionTable& table() const { return table_; }

  std::size_t add(DBEntry e) {
    if (byLabel_.count(e.label)) fail("duplicate-label", e.label);
    byLabel_[e.label] = entries_.size();
    entries_.push_back(std::move(e));
    return entries_.size() - 1;
  }
  bool has(const std::string& label) const { return byLabel_.count(label) != 0; }
  const DBEntry& get(const std::string& label) const {
    auto it = byLabel_.find(label);
    if (it == byLabel_.end()) fail("unknown-label", "/" + label);
    return entries_[it->second];
  }
  std::size_t index_of(const std::string& label) const {
    auto it = byLabel_.find(label);
    if (it == byLabel_.end()) fail("unknown-label", "/" + label);
    return it->second;
  }
  const std::vector<DBEntry>& entries() const { return entries_; }

  // schema instantiation with caching; the returned proof has been checked
  SchemaInstance instantiate(const std::string& label, const SchemaParams& p);

  // memoized instances (exposed for reporting)
  std::size_t cached_instances() const {
    std::lock_guard<std::mutex> lock(mu_);
    return cache_.size();
  }

 private:
  FunctionTable& table_;
  std::vector<DBEntry> entries_;
  std::map<std::string, std::size_t> byLabel_;
  mutable std::mutex mu_;
  std::map<std::pair<std::string, SchemaParams>, SchemaInstance> cache_;
};

// ---------------------------------------------------------------------------
// Axiom recognition.
//
// In PRA and chiPRA the axioms are the formulas as written (instances arrive
// via the instance rule); a/3..a/6 use the official variables x, y, while
// A/7..A/11 are schemata over formulas (with variable slots in A/7).  In the
// star systems every instance of an axiom (and of T/93) is an axiom.
// ---------------------------------------------------------------------------

class Kernel {
 public:
  Kernel(TheoremDB& db) : db_(db), table_(db.table()) {}

  // checks f (a core formula) against the axioms of `system`; T/93 instances
  // additionally need the schema data carried by the step
  std::optional<AxiomKind> check_axiom(FormulaId f, SystemId system,
                                       const ProofStep* step = nullptr,
                                       bool allowInstances = false) {
    bool star = is_star(system) || allowInstances;
    bool starT93 = is_star(system);
    TermId vx = mk_var_term("x"), vy = mk_var_term("y");
    // a/3: ~ S x = 0
    {
      FormulaId a3 = mk_neg(mk_eq(mk_succ(vx), mk_zero()));
      if (f == a3) return AxiomKind::a3;
      if (star) {
        FormulaNode n = formulas().node(f);
        if (n.kind == FKind::Neg) {
          FormulaNode e = formulas().node(n.f0);
          if (e.kind == FKind::Eq && terms().node(e.t0).head == sym_succ() &&
              e.t1 == mk_zero())
            return AxiomKind::a3;
        }
      }
    }
    // a/4: S x = S y -> x = y
    if (auto imp = match_imp(f)) {
      FormulaNode l = formulas().node(imp->first);
      FormulaNode r = formulas().node(imp->second);
      if (l.kind == FKind::Eq && r.kind == FKind::Eq) {
        const TermNode ls = terms().node(l.t0), rs = terms().node(l.t1);
        if (ls.head == sym_succ() && rs.head == sym_succ() &&
            ls.args[0] == r.t0 && rs.args[0] == r.t1) {
          if (star || (r.t0 == vx && r.t1 == vy)) return AxiomKind::a4;
        }
      }
    }
    // a/5: x = x
    {
      FormulaNode n = formulas().node(f);
      if (n.kind == FKind::Eq && n.t0 == n.t1 && (star || n.t0 == vx))
        return AxiomKind::a5;
    }
    // a/6: x = y -> y = x
    if (auto imp = match_imp(f)) {
      FormulaNode l = formulas().node(imp->first);
      FormulaNode r = formulas().node(imp->second);
      if (l.kind == FKind::Eq && r.kind == FKind::Eq && l.t0 == r.t1 &&
          l.t1 == r.t0) {
        if (star || (l.t0 == vx && l.t1 == vy)) return AxiomKind::a6;
      }
    }
    if (check_A7(f, star)) return AxiomKind::A7;
    // propositional axioms (schemata over formulas)
    if (auto imp = match_imp(f)) {
      FormulaNode l = formulas().node(imp->first);
      // A/8: A|A -> A
      if (l.kind == FKind::Or && l.f0 == l.f1 && l.f0 == imp->second)
        return AxiomKind::A8;
      // A/9: A -> A|B
      FormulaNode r = formulas().node(imp->second);
      if (r.kind == FKind::Or && r.f0 == imp->first) return AxiomKind::A9;
      // A/10: A|B -> B|A
      if (l.kind == FKind::Or && r.kind == FKind::Or && l.f0 == r.f1 &&
          l.f1 == r.f0)
        return AxiomKind::A10;
      // A/11: [B->C] -> [A|B -> A|C]
      if (auto inner = match_imp(imp->second)) {
        FormulaNode il = formulas().node(inner->first);
        FormulaNode ir = formulas().node(inner->second);
        if (il.kind == FKind::Or && ir.kind == FKind::Or && il.f0 == ir.f0) {
          if (auto bc = match_imp(imp->first))
            if (bc->first == il.f1 && bc->second == ir.f1) return AxiomKind::A11;
        }
      }
    }
    if (auto k = check_construction(f, star)) return k;
    if (starT93 && step && step->schemaA != kNoId && check_T93(f, *step))
      return AxiomKind::T93;
    return std::nullopt;
  }

  // --- proof checking ------------------------------------------------------

  struct CheckResult {
    bool ok = false;
    std::string error;
    std::uint32_t at = kNoId;
  };

  // Primitive mode: axioms + instance/modus ponens/induction (star systems:
  // axiom instances + modus ponens only).
  CheckResult check_proof(const Proof& p) {
    return check(p, /*extended=*/false);
  }
  // Extended mode: adds Prop 1's devices as checked macro steps.
  CheckResult check_extended(const Proof& p) {
    return check(p, /*extended=*/true);
  }

  void require(const Proof& p, bool extended) {
    CheckResult r = check(p, extended);
    if (!r.ok)
      fail("proof-rejected", r.error + " at step " + std::to_string(r.at));
  }

 private:
  struct BlockCtx {
    std::uint32_t opener;
    bool isClaim;
    std::uint32_t hypIdx = kNoId;
    bool contradiction = false;
    std::vector<std::uint32_t> members;
  };

  CheckResult check(const Proof& p, bool extended) {
    std::vector<std::vector<std::uint32_t>> path(p.steps.size());
    std::vector<BlockCtx> stack;
    auto err = [&](std::uint32_t i, const std::string& m) {
      return CheckResult{false, m, i};
    };
    SystemId sys = p.system;
    bool star = is_star(sys);

    // scope check: j usable at i iff j precedes i, j's block path is a
    // prefix of the currently open path, and j asserts its formula (claim
    // statements assert nothing until their block closes)
    auto usable = [&](std::uint32_t j, std::uint32_t i) {
      if (j >= i) return false;
      if (p.steps[j].kind == StepKind::ClaimOpen) return false;
      const auto& pj = path[j];
      if (pj.size() > stack.size()) return false;
      for (std::size_t k = 0; k < pj.size(); ++k)
        if (pj[k] != stack[k].opener) return false;
      return true;
    };

    for (std::uint32_t i = 0; i < p.steps.size(); ++i) {
      const ProofStep& s = p.steps[i];
      path[i].clear();
      for (const auto& b : stack) path[i].push_back(b.opener);
      bool inBlock = !stack.empty();

      switch (s.kind) {
        case StepKind::Axiom: {
          // Prop 1(iii): in extended mode an axiom instance is citable as a
          // theorem (the primitive expander reintroduces the instance step)
          auto k = check_axiom(s.formula, sys, &s, /*allowInstances=*/extended);
          if (!k) return err(i, "axiom-rejected: " + show_formula(s.formula));
          break;
        }
        case StepKind::Instance: {
          if (star) return err(i, "rule-mismatch: instance unavailable in star systems");
          if (inBlock) return err(i, "scope-violation: instance inside a block");
          if (!usable(s.ref1, i)) return err(i, "bad-index");
          FormulaId want = subst_formula(p.steps[s.ref1].formula, s.subst);
          if (want != s.formula) return err(i, "rule-mismatch: instance");
          break;
        }
        case StepKind::ModusPonens: {
          if (!usable(s.ref1, i) || !usable(s.ref2, i)) return err(i, "bad-index");
          auto imp = match_imp(p.steps[s.ref2].formula);
          if (!imp || imp->first != p.steps[s.ref1].formula ||
              imp->second != s.formula)
            return err(i, "rule-mismatch: modus ponens");
          break;
        }
        case StepKind::Induction: {
          if (star) return err(i, "rule-mismatch: induction unavailable in star systems");
          if (inBlock) return err(i, "scope-violation: induction inside a block");
          if (!usable(s.ref1, i) || !usable(s.ref2, i)) return err(i, "bad-index");
          std::string why;
          if (!check_induction(p.steps[s.ref1].formula, p.steps[s.ref2].formula,
                               s.formula, s.var, why))
            return err(i, "rule-mismatch: induction: " + why);
          break;
        }
        case StepKind::Cite: {
          if (!extended) return err(i, "rule-mismatch: citation in primitive mode");
          if (!check_cite(s)) return err(i, "rule-mismatch: citation /" + s.label);
          break;
        }
        case StepKind::SchemaCite: {
          if (!extended) return err(i, "rule-mismatch: citation in primitive mode");
          SchemaInstance inst =
              db_.instantiate(s.label, SchemaParams{s.schemaA, s.schemaVar, s.schemaB});
          FormulaId want = subst_formula(inst.statement, s.subst);
          if (want != s.formula)
            return err(i, "rule-mismatch: schema citation " + s.label +
                              ": got " + show_formula(s.formula) + " want " +
                              show_formula(want));
          break;
        }
        case StepKind::TautCons: {
          if (!extended) return err(i, "rule-mismatch: tautcons in primitive mode");
          std::vector<FormulaId> prem;
          for (std::uint32_t r : s.refs) {
            if (!usable(r, i)) return err(i, "bad-index");
            prem.push_back(p.steps[r].formula);
          }
          if (!is_taut_consequence(prem, s.formula, TautConfig{64, 8}))
            return err(i, "rule-mismatch: not a tautological consequence");
          break;
        }
        case StepKind::Hypothesis: {
          if (!extended) return err(i, "rule-mismatch: hypothesis in primitive mode");
          if (!stack.empty() && stack.back().isClaim &&
              stack.back().hypIdx == kNoId) {
            stack.back().hypIdx = i;
          } else {
            stack.push_back(BlockCtx{i, false, i});
          }
          break;
        }
        case StepKind::ClaimOpen: {
          if (!extended) return err(i, "rule-mismatch: claim in primitive mode");
          stack.push_back(BlockCtx{i, true});
          break;
        }
        case StepKind::ClaimClose: {
          if (stack.empty() || !stack.back().isClaim || stack.back().opener != s.ref1)
            return err(i, "scope-violation: claim-close without matching open");
          BlockCtx b = stack.back();
          if (b.hypIdx == kNoId)
            return err(i, "claim-without-contradiction: no hypothesis");
          FormulaId claim = p.steps[b.opener].formula;
          if (s.formula != claim) return err(i, "rule-mismatch: claim formula");
          // contradiction: some member is the negation of another
          if (!block_contradiction(p, b))
            return err(i, "claim-without-contradiction");
          // the hypothesis must refute the claim tautologically
          FormulaId h = p.steps[b.hypIdx].formula;
          if (!is_taut_consequence({mk_neg(h)}, claim, TautConfig{64, 8}))
            return err(i, "rule-mismatch: hypothesis does not negate the claim");
          stack.pop_back();
          path[i].clear();
          for (const auto& bb : stack) path[i].push_back(bb.opener);
          break;
        }
        case StepKind::Discharge: {
          if (stack.empty() || stack.back().isClaim || stack.back().opener != s.ref1)
            return err(i, "scope-violation: discharge without matching hypothesis");
          BlockCtx b = stack.back();
          if (b.members.empty())
            return err(i, "rule-mismatch: empty deduction");
          FormulaId h = p.steps[b.opener].formula;
          FormulaId last = p.steps[b.members.back()].formula;
          if (s.formula != mk_imp(h, last))
            return err(i, "rule-mismatch: discharge");
          stack.pop_back();
          path[i].clear();
          for (const auto& bb : stack) path[i].push_back(bb.opener);
          break;
        }
      }
      // claim statements assert nothing; everything else joins the innermost
      // open block (for close/discharge steps: the enclosing one)
      if (!stack.empty() && s.kind != StepKind::ClaimOpen)
        stack.back().members.push_back(i);
    }
    if (!stack.empty())
      return err(static_cast<std::uint32_t>(p.steps.size() - 1),
                 "undischarged-hypothesis");
    return CheckResult{true, "", kNoId};
  }

  bool block_contradiction(const Proof& p, const BlockCtx& b) const {
    std::set<FormulaId> seen;
    for (std::uint32_t m : b.members) seen.insert(p.steps[m].formula);
    seen.insert(p.steps[b.hypIdx].formula);
    for (FormulaId f : seen) {
      if (seen.count(mk_neg(f))) return true;
      FormulaNode n = formulas().node(f);
      if (n.kind == FKind::Neg && seen.count(n.f0)) return true;
    }
    return false;
  }

  bool check_cite(const ProofStep& s) {
    std::string label = s.label;
    int direction = 0;
    if (label.size() > 2 && label.substr(label.size() - 2) == "->") {
      direction = +1;
      label.resize(label.size() - 2);
    } else if (label.size() > 2 && label.substr(label.size() - 2) == "<-") {
      direction = -1;
      label.resize(label.size() - 2);
    }
    if (!db_.has(label)) return false;
    const DBEntry& e = db_.get(label);
    if (e.statement == kNoId) return false;
    FormulaId stmt = e.statement;
    if (direction != 0) {
      auto iff = match_iff(stmt);
      if (!iff) return false;
      stmt = direction > 0 ? mk_or(mk_neg(iff->first), iff->second)
                           : mk_or(iff->first, mk_neg(iff->second));
    }
    FormulaId core = table_.expand(stmt);
    FormulaId want = subst_formula(core, s.subst);
    return want == s.formula;
  }

  bool check_induction(FormulaId basis, FormulaId premise, FormulaId goal,
                       Sym x, std::string& why) {
    if (x == kNoId) { why = "missing variable"; return false; }
    Subst s0;
    s0.bind(x, mk_zero());
    if (subst_formula(goal, s0) != basis) {
      why = "basis is not A_x(0)";
      return false;
    }
    // premise must be A_x(x') -> A_x(Sx') for some variable x'
    std::vector<Sym> candidates = distinct_vars_in_order(premise);
    candidates.push_back(x);
    for (Sym xp : candidates) {
      Subst sv, ss;
      sv.bind(x, mk_term(xp));
      ss.bind(x, mk_succ(mk_term(xp)));
      if (premise == mk_imp(subst_formula(goal, sv), subst_formula(goal, ss)))
        return true;
    }
    why = "step premise is not A_x(x') -> A_x(Sx')";
    return false;
  }

  bool check_A7(FormulaId f, bool star) {
    auto imp = match_imp(f);
    if (!imp) return false;
    auto conj = match_and(imp->first);
    if (!conj) return false;
    FormulaNode eq = formulas().node(conj->first);
    if (eq.kind != FKind::Eq) return false;
    TermId a = eq.t0, b = eq.t1;
    if (!star) {
      // variable slots in the primitive systems
      if (!is_var(terms().node(a).head) || !is_var(terms().node(b).head))
        return false;
    }
    return diff_is_replacement(conj->second, imp->second, a, b);
  }

  // G and H differ only at positions where G has `a` and H has `b`
  static bool diff_is_replacement(FormulaId g, FormulaId h, TermId a, TermId b) {
    if (g == h) return true;
    FormulaNode gn = formulas().node(g), hn = formulas().node(h);
    if (gn.kind != hn.kind) return false;
    switch (gn.kind) {
      case FKind::Eq:
        return diff_term(gn.t0, hn.t0, a, b) && diff_term(gn.t1, hn.t1, a, b);
      case FKind::Neg:
        return diff_is_replacement(gn.f0, hn.f0, a, b);
      case FKind::Or:
        return diff_is_replacement(gn.f0, hn.f0, a, b) &&
               diff_is_replacement(gn.f1, hn.f1, a, b);
      default:
        return false;
    }
  }
  static bool diff_term(TermId u, TermId v, TermId a, TermId b) {
    if (u == v) return true;
    if (u == a && v == b) return true;
    const TermNode un = terms().node(u), vn = terms().node(v);
    if (un.head != vn.head || un.args.size() != vn.args.size()) return false;
    for (std::size_t i = 0; i < un.args.size(); ++i)
      if (!diff_term(un.args[i], vn.args[i], a, b)) return false;
    return true;
  }

  std::optional<AxiomKind> check_construction(FormulaId f, bool star) {
    FormulaNode n = formulas().node(f);
    if (n.kind != FKind::Eq) return std::nullopt;
    const TermNode l = terms().node(n.t0);
    if (is_var(l.head) || !table_.has(l.head)) return std::nullopt;
    FunctionDef d = table_.def(l.head);
    if (d.kind != DefKind::PrimRec) return std::nullopt;
    if (!star) {
      auto [a1, a2] = table_.construction_axioms(l.head);
      if (f == a1) return AxiomKind::A1;
      if (f == a2) return AxiomKind::A2;
      return std::nullopt;
    }
    // star: any instance
    const TermNode rec = terms().node(l.args[d.recPos]);
    Subst su;
    std::size_t pi = 0;
    for (std::size_t k = 0; k < l.args.size(); ++k) {
      if (k == d.recPos) continue;
      su.bind(d.params[pi++], l.args[k]);
    }
    if (l.args[d.recPos] == mk_zero()) {
      if (subst_term(d.base, su) == n.t1) return AxiomKind::A1;
      return std::nullopt;
    }
    if (rec.head == sym_succ()) {
      TermId prevCounter = rec.args[0];
      std::vector<TermId> prevArgs;
      pi = 0;
      for (std::size_t k = 0; k < l.args.size(); ++k)
        prevArgs.push_back(k == d.recPos ? prevCounter : l.args[k]);
      su.bind(d.recVar, prevCounter);
      su.bind(d.auxVar, mk_term(l.head, prevArgs));
      if (subst_term(d.step, su) == n.t1) return AxiomKind::A2;
    }
    return std::nullopt;
  }

  bool check_T93(FormulaId f, const ProofStep& s) {
    FormulaId stmt = t93_statement(table_, s.schemaA, s.schemaVar);
    return subst_formula(stmt, s.subst) == f;
  }

 public:
  // T/93 statement  A(0) & forall x'<=Px [A(x') -> A(Sx')] -> A(x), core
  static FormulaId t93_statement(FunctionTable& table, FormulaId a, Sym x) {
    Sym xp = var("@i");
    if (term_contains_any(a, xp)) fail("reserved-variable", "@i in T/93 instance");
    Subst s0, sv, ss;
    s0.bind(x, mk_zero());
    sv.bind(x, mk_term(xp));
    ss.bind(x, mk_succ(mk_term(xp)));
    FormulaId body = mk_imp(subst_formula(a, sv), subst_formula(a, ss));
    TermId px = mk_term(fn("P", 1), {mk_term(x)});
    FormulaId all = mk_bounded(QKind::ForallLe, xp, px, body);
    return table.expand(mk_imp(mk_and(subst_formula(a, s0), all), a));
  }

  static bool term_contains_any(FormulaId f, Sym v) {
    auto vs = distinct_vars_in_order(f);
    return std::find(vs.begin(), vs.end(), v) != vs.end();
  }

 private:
  TheoremDB& db_;
  FunctionTable& table_;
};

inline SchemaInstance TheoremDB::instantiate(const std::string& label,
                                             const SchemaParams& p) {
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = cache_.find({label, p});
    if (it != cache_.end()) return it->second;
  }
  const DBEntry& e = get(label);
  if (e.kind != DBEntry::Kind::Schema || !e.schema)
    fail("not-a-schema", "/" + label);
  SchemaInstance inst = e.schema(p, *this);
  if (inst.proof) {
    Kernel k(*this);
    k.require(*inst.proof, /*extended=*/true);
    if (inst.proof->conclusion() != inst.statement)
      fail("schema-mismatch", "/" + label + " proof concludes elsewhere");
  }
  std::lock_guard<std::mutex> lock(mu_);
  cache_.emplace(std::make_pair(label, p), inst);
  return inst;
}

}  // namespace pra

#endif  // PRA_KERNEL_HPP
