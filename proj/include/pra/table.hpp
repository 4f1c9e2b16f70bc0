#ifndef PRA_TABLE_HPP
#define PRA_TABLE_HPP

#include <map>
#include <unordered_map>

#include "pra/syntax.hpp"

namespace pra {

// ---------------------------------------------------------------------------
// FunctionTable: the ordered registry of function symbols with their
// defining equations (a "construction"), plus predicate abbreviations,
// bounding symbols, and the generated mu symbols of R/82.
//
// Core formulas contain only 0, S and primitive-recursive symbols (including
// the generated mu symbols).  Explicitly defined symbols, UC/EC-defined
// symbols, predicate symbols and bounded quantifiers are abbreviations and
// are eliminated by expand()/expand_term().
// ---------------------------------------------------------------------------

enum class DefKind : std::uint8_t { Zero, Succ, PrimRec, Explicit, DefinedUCEC };

struct FunctionDef {
  Sym symbol = kNoId;
  DefKind kind = DefKind::PrimRec;
  std::vector<Sym> params;   // x-vector (excludes recursion variable)
  std::uint32_t recPos = 0;  // argument slot carrying the recursion
  Sym recVar = kNoId;        // y
  Sym auxVar = kNoId;        // z
  TermId base = kNoId;       // a  (core term over params)
  TermId step = kNoId;       // b  (core term over params, y, z)
  TermId body = kNoId;       // Explicit / DefinedUCEC expansion template over params
  bool isMu = false;
  bool selfRec = false;      // course-of-values string recursion (/6)
  FormulaId muKey = kNoId;   // canonical mu signature (see mu_symbol)
};

struct PredDef {
  Id name = kNoId;           // string id
  std::vector<Sym> params;
  FormulaId body = kNoId;    // surface formula over params
};

inline Sym reserved_mu_var() { return var("@x"); }
inline Sym reserved_bound_var() { return var("@b"); }

class FunctionTable {
 public:
  FunctionTable() {
    defs_.push_back(FunctionDef{sym_zero(), DefKind::Zero});
    bySym_[sym_zero()] = 0;
    defs_.push_back(FunctionDef{sym_succ(), DefKind::Succ});
    bySym_[sym_succ()] = 1;
  }

  // --- queries ------------------------------------------------------------

  bool has(Sym f) const {
    std::lock_guard<std::mutex> lock(mu_);
    return bySym_.count(f) != 0;
  }
  FunctionDef def(Sym f) const {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = bySym_.find(f);
    if (it == bySym_.end()) fail("unknown-symbol", sym_name(f));
    return defs_[it->second];
  }
  std::size_t index_of(Sym f) const {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = bySym_.find(f);
    if (it == bySym_.end()) fail("unknown-symbol", sym_name(f));
    return it->second;
  }
  std::size_t size() const {
    std::lock_guard<std::mutex> lock(mu_);
    return defs_.size();
  }
  FunctionDef def_at(std::size_t i) const {
    std::lock_guard<std::mutex> lock(mu_);
    return defs_.at(i);
  }

  bool has_pred(std::string_view name) const {
    std::lock_guard<std::mutex> lock(mu_);
    return preds_.count(string_pool().intern(name)) != 0;
  }
  PredDef pred(Id name) const {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = preds_.find(name);
    if (it == preds_.end()) fail("unknown-predicate", string_pool().str(name));
    return it->second;
  }

  // Bounding symbols: s with recorded bound d (a term over the single
  // reserved variable @b standing for the right operand).
  void register_bounding(Id predName, TermId boundOverReserved) {
    std::lock_guard<std::mutex> lock(mu_);
    bounds_[predName] = boundOverReserved;
  }
  TermId bounding(Id predName) const {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = bounds_.find(predName);
    if (it == bounds_.end())
      fail("unknown-bounding-symbol", string_pool().str(predName));
    return it->second;
  }

  // --- registration -------------------------------------------------------

  // f(x..., 0 at recPos) = a ;  f(x..., Sy at recPos) = b_z(f(x..., y)).
  // a and b may be surface terms; they are expanded to core here.
  // selfRec permits f itself in b at structurally smaller arguments: the
  // string-recursion pattern (/6), whose cases mention f(Chop Sy).
  Sym register_prim_rec(std::string_view name, std::vector<Sym> params,
                        std::uint32_t recPos, Sym recVar, Sym auxVar,
                        TermId a, TermId b, bool selfRec = false) {
    Sym f = fn(name, static_cast<std::uint32_t>(params.size()) + 1);
    TermId coreA = expand_term(a);
    TermId coreB = selfRec ? expand_term_allowing(b, f) : expand_term(b);
    FunctionDef d;
    d.symbol = f;
    d.kind = DefKind::PrimRec;
    d.params = std::move(params);
    d.recPos = recPos;
    d.recVar = recVar;
    d.auxVar = auxVar;
    d.base = coreA;
    d.step = coreB;
    d.selfRec = selfRec;
    check_prim_rec(d);
    return insert(d);
  }

  // f(x...) = c, c over x... only; inlined on demand, never generates axioms.
  Sym register_explicit(std::string_view name, std::vector<Sym> params, TermId c) {
    TermId coreC = expand_term(c);
    for (Sym v : term_vars(coreC))
      if (std::find(params.begin(), params.end(), v) == params.end())
        fail("variable-condition-violated",
             "explicit definition of " + std::string(name) + " uses " + sym_name(v));
    check_symbols_known(coreC, std::string(name));
    Sym f = fn(name, static_cast<std::uint32_t>(params.size()));
    FunctionDef d;
    d.symbol = f;
    d.kind = DefKind::Explicit;
    d.params = std::move(params);
    d.body = coreC;
    return insert(d);
  }

  // Prop 7: f(y...) abbreviates mu_A(b) for the distinguished variable x of
  // A; callers have checked UC and EC.  body template is built here.
  Sym register_defined_ucec(std::string_view name, std::vector<Sym> params,
                            FormulaId a, Sym x, TermId b) {
    for (Sym v : term_vars(b))
      if (std::find(params.begin(), params.end(), v) == params.end())
        fail("variable-condition-violated",
             "UC/EC bound of " + std::string(name) + " uses " + sym_name(v));
    TermId tmpl = mu_term(a, x, b);
    Sym f = fn(name, static_cast<std::uint32_t>(params.size()));
    FunctionDef d;
    d.symbol = f;
    d.kind = DefKind::DefinedUCEC;
    d.params = std::move(params);
    d.body = tmpl;
    return insert(d);
  }

  void register_pred(std::string_view name, std::vector<Sym> params, FormulaId body) {
    for (Sym v : distinct_vars_in_order(body))
      if (std::find(params.begin(), params.end(), v) == params.end())
        fail("variable-condition-violated",
             "predicate " + std::string(name) + " uses " + sym_name(v));
    expand(body);  // validates symbols
    std::lock_guard<std::mutex> lock(mu_);
    Id nm = string_pool().intern(name);
    if (preds_.count(nm)) fail("duplicate-predicate", std::string(name));
    preds_[nm] = PredDef{nm, std::move(params), body};
  }

  // --- mu symbols (R/82) ---------------------------------------------------
  //
  // mu_A is keyed on the pair (A, x) canonicalized by (i) renaming x to the
  // reserved variable @x, (ii) removing double negations, and (iii)
  // abstracting every maximal x-free subterm into parameter slots @p1, @p2,
  // ... in first-occurrence order.  Renaming the distinguished variable,
  // double-negating A, or instantiating A's other variables all reuse the
  // same symbol, so expansion of bounded quantifiers commutes with
  // substitution.

  struct MuApplication {
    Sym symbol;
    std::vector<TermId> args;  // parameter slot values, in order
  };

  MuApplication mu_application(FormulaId a, Sym x) {
    FormulaId coreA = expand(a);
    Subst ren;
    ren.bind(x, mk_term(reserved_mu_var()));
    FormulaId named = neg_normalize(subst_formula(coreA, ren));
    std::vector<TermId> argsBySlot;
    std::map<TermId, Sym> slots;
    FormulaId key = abstract_formula(named, argsBySlot, slots);
    // order the arguments by the key's parameter order (first occurrence)
    std::map<Sym, TermId> bySlot;
    for (const auto& [t, p] : slots) bySlot[p] = t;
    std::vector<TermId> args;
    for (Sym v : distinct_vars_in_order(key))
      if (v != reserved_mu_var()) args.push_back(bySlot.at(v));
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto it = muBySig_.find(key);
      if (it != muBySig_.end()) return {it->second, std::move(args)};
    }
    std::lock_guard<std::mutex> creation(muCreate_);
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto it = muBySig_.find(key);
      if (it != muBySig_.end()) return {it->second, std::move(args)};
    }
    return {build_mu_locked(key), std::move(args)};
  }

  Sym mu_symbol(FormulaId a, Sym x) { return mu_application(a, x).symbol; }

  // mu_A(b): the applied term mu_A(p..., b).
  TermId mu_term(FormulaId a, Sym x, TermId b) {
    MuApplication app = mu_application(a, x);
    app.args.push_back(expand_term(b));
    return mk_term(app.symbol, std::move(app.args));
  }

  // The canonical body of a mu symbol with the distinguished variable
  // replaced by `t` and parameters by `args` (used to state R/82 axioms and
  // to evaluate).
  FormulaId mu_body(Sym m, TermId t) const {
    FunctionDef d = def(m);
    if (!d.isMu) fail("not-a-mu-symbol", sym_name(m));
    Subst s;
    s.bind(reserved_mu_var(), t);
    return subst_formula(d.muKey, s);
  }

  // --- abbreviation expansion ----------------------------------------------

  TermId expand_term(TermId t) {
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto it = termMemo_.find(t);
      if (it != termMemo_.end()) return it->second;
    }
    const TermNode n = terms().node(t);
    TermId result;
    if (is_var(n.head)) {
      result = t;
    } else {
      std::vector<TermId> args;
      args.reserve(n.args.size());
      for (TermId a : n.args) args.push_back(expand_term(a));
      if (!has(n.head)) fail("unknown-symbol", sym_name(n.head));
      FunctionDef d = def(n.head);
      if (d.kind == DefKind::Explicit || d.kind == DefKind::DefinedUCEC) {
        Subst s;
        for (std::size_t i = 0; i < d.params.size(); ++i) s.bind(d.params[i], args[i]);
        result = subst_term(d.body, s);
      } else {
        result = terms().make(n.head, std::move(args));
      }
    }
    std::lock_guard<std::mutex> lock(mu_);
    termMemo_.emplace(t, result);
    return result;
  }

  FormulaId expand(FormulaId f) {
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto it = formulaMemo_.find(f);
      if (it != formulaMemo_.end()) return it->second;
    }
    FormulaNode n = formulas().node(f);
    FormulaId result;
    switch (n.kind) {
      case FKind::Eq: {
        TermId l = expand_term(n.t0);  // sequenced: expansion may register
        TermId r = expand_term(n.t1);  // mu symbols
        result = mk_eq(l, r);
        break;
      }
      case FKind::Neg:
        result = mk_neg(expand(n.f0));
        break;
      case FKind::Or: {
        FormulaId l = expand(n.f0);
        FormulaId r = expand(n.f1);
        result = mk_or(l, r);
        break;
      }
      case FKind::Pred: {
        PredDef p = pred(symbols().get(n.sym).name);
        if (p.params.size() != n.args.size())
          fail("arity-mismatch", "predicate " + sym_name(n.sym));
        Subst s;
        for (std::size_t i = 0; i < p.params.size(); ++i)
          s.bind(p.params[i], n.args[i]);
        result = expand(subst_formula(p.body, s));
        break;
      }
      case FKind::Bounded:
        result = expand_bounded(n);
        break;
      default:
        fail("unreachable", "expand");
    }
    std::lock_guard<std::mutex> lock(mu_);
    formulaMemo_.emplace(f, result);
    return result;
  }

  // The witness term a bounded quantifier's expansion substitutes for its
  // variable: mu_A(b) for exists x<=b A, mu_{~A}(b) for forall x<=b A, and
  // the corresponding inner mu for the bound-dependent forms.
  TermId bounded_witness(const FormulaNode& n0) {
    FormulaNode n = bounded_le_form(n0);
    FormulaId coreA = expand(n.f0);
    FormulaId keyed = (n.q == QKind::ForallLe) ? mk_neg(coreA) : coreA;
    return mu_term(keyed, n.v, expand_term(n.t0));
  }

  // chi: the characteristic-term transform over core formulas; requires the
  // dotted connectives =., ~., |. in the table.
  TermId chi(FormulaId f) {
    Sym deq = need_fn("=.", 2), dneg = need_fn("~.", 1), dor = need_fn("|.", 2);
    return chi_rec(expand(f), deq, dneg, dor);
  }
  FormulaId chi_inverse(TermId t) const {
    auto deq = symbols().lookup("=.", SymKind::Function);
    auto dneg = symbols().lookup("~.", SymKind::Function);
    auto dor = symbols().lookup("|.", SymKind::Function);
    if (!deq || !dneg || !dor) fail("not-chi-formula", "dotted connectives undefined");
    return chi_inv_rec(t, *deq, *dneg, *dor);
  }

  // A/1 and A/2 instances for a prim-rec symbol, as core formulas.
  std::pair<FormulaId, FormulaId> construction_axioms(Sym f) const {
    FunctionDef d = def(f);
    if (d.kind != DefKind::PrimRec)
      fail("not-prim-rec", sym_name(f));
    std::vector<TermId> argsBase, argsPrev, argsStep;
    std::size_t pi = 0;
    for (std::uint32_t slot = 0; slot < d.params.size() + 1; ++slot) {
      if (slot == d.recPos) {
        argsBase.push_back(mk_zero());
        argsPrev.push_back(mk_term(d.recVar));
        argsStep.push_back(mk_succ(mk_term(d.recVar)));
      } else {
        TermId p = mk_term(d.params[pi++]);
        argsBase.push_back(p);
        argsPrev.push_back(p);
        argsStep.push_back(p);
      }
    }
    FormulaId a1 = mk_eq(mk_term(f, argsBase), d.base);
    Subst s;
    s.bind(d.auxVar == kNoId ? var("@z") : d.auxVar, mk_term(f, argsPrev));
    FormulaId a2 = mk_eq(mk_term(f, argsStep), subst_term(d.step, s));
    return {a1, a2};
  }

 private:
  Sym need_fn(std::string_view name, std::uint32_t ar) {
    auto s = symbols().lookup(name, SymKind::Function);
    if (!s || !has(*s)) fail("missing-symbol", std::string(name));
    if (arity(*s) != ar) fail("arity-mismatch", std::string(name));
    return *s;
  }

  TermId chi_rec(FormulaId f, Sym deq, Sym dneg, Sym dor) {
    FormulaNode n = formulas().node(f);
    switch (n.kind) {
      case FKind::Eq:
        return mk_term(deq, {n.t0, n.t1});
      case FKind::Neg:
        return mk_term(dneg, {chi_rec(n.f0, deq, dneg, dor)});
      case FKind::Or:
        return mk_term(dor, {chi_rec(n.f0, deq, dneg, dor), chi_rec(n.f1, deq, dneg, dor)});
      default:
        fail("not-core-formula", "chi of unexpanded formula");
    }
  }
  FormulaId chi_inv_rec(TermId t, Sym deq, Sym dneg, Sym dor) const {
    const TermNode n = terms().node(t);
    if (n.head == deq) return mk_eq(n.args[0], n.args[1]);
    if (n.head == dneg) return mk_neg(chi_inv_rec(n.args[0], deq, dneg, dor));
    if (n.head == dor)
      return mk_or(chi_inv_rec(n.args[0], deq, dneg, dor),
                   chi_inv_rec(n.args[1], deq, dneg, dor));
    fail("not-chi-formula", "head symbol is not a dotted connective");
  }

 public:
  // the <=-reduction of a bounded quantifier: the quantifier kind, variable,
  // bound term, and body of the equivalent forall/exists-<= form
  FormulaNode bounded_le_form(const FormulaNode& n) {
    switch (n.q) {
      case QKind::ExistsLe:
      case QKind::ForallLe:
        return n;
      case QKind::ForallLt:
      case QKind::ExistsLt: {
        FormulaId rel = mk_pred_lt(mk_term(n.v), n.t0);
        bool fa = n.q == QKind::ForallLt;
        FormulaId body = fa ? mk_imp(rel, n.f0) : mk_and(rel, n.f0);
        return formulas().node(
            mk_bounded(fa ? QKind::ForallLe : QKind::ExistsLe, n.v, n.t0, body));
      }
      case QKind::ForallSym:
      case QKind::ExistsSym: {
        // exists x s b A == exists x <= d(b) [x s b & A], d the recorded bound
        Id pname = symbols().get(n.sym).name;
        TermId d = bounding(pname);
        Subst bs;
        bs.bind(reserved_bound_var(), n.t0);
        TermId dOfB = subst_term(d, bs);
        FormulaId rel = mk_pred(n.sym, {mk_term(n.v), n.t0});
        bool fa = n.q == QKind::ForallSym;
        FormulaId body = fa ? mk_imp(rel, n.f0) : mk_and(rel, n.f0);
        return formulas().node(
            mk_bounded(fa ? QKind::ForallLe : QKind::ExistsLe, n.v, dOfB, body));
      }
    }
    fail("unreachable", "bounded_le_form");
  }

  FormulaId expand_bounded(const FormulaNode& n0) {
    FormulaNode n = bounded_le_form(n0);
    FormulaId coreA = expand(n.f0);
    FormulaId keyed = (n.q == QKind::ForallLe) ? mk_neg(coreA) : coreA;
    Subst s;
    s.bind(n.v, mu_term(keyed, n.v, expand_term(n.t0)));
    return subst_formula(coreA, s);
  }

 private:

  FormulaId mk_pred_lt(TermId a, TermId b) {
    if (!has_pred("<")) fail("unknown-predicate", "<");
    return mk_pred(fn("<", 2), {a, b});
  }

  // replace each maximal @x-free subterm of f by a parameter slot variable
  // @p1, @p2, ... (first occurrence order, identical subterms shared)
  FormulaId abstract_formula(FormulaId f, std::vector<TermId>& args,
                             std::map<TermId, Sym>& slots) {
    FormulaNode n = formulas().node(f);
    switch (n.kind) {
      case FKind::Eq: {
        TermId l = abstract_term(n.t0, args, slots);  // sequenced: slots are
        TermId r = abstract_term(n.t1, args, slots);  // named left to right
        return mk_eq(l, r);
      }
      case FKind::Neg:
        return mk_neg(abstract_formula(n.f0, args, slots));
      case FKind::Or: {
        FormulaId l = abstract_formula(n.f0, args, slots);
        FormulaId r = abstract_formula(n.f1, args, slots);
        return mk_or(l, r);
      }
      default:
        fail("not-core-formula", "abstract_formula");
    }
  }
  TermId abstract_term(TermId t, std::vector<TermId>& args,
                       std::map<TermId, Sym>& slots) {
    if (!term_contains_var(t, reserved_mu_var())) {
      auto it = slots.find(t);
      if (it != slots.end()) return mk_term(it->second);
      Sym p = var("@p" + std::to_string(slots.size() + 1));
      slots[t] = p;
      args.push_back(t);
      return mk_term(p);
    }
    const TermNode n = terms().node(t);
    if (is_var(n.head)) return t;  // the distinguished variable itself
    std::vector<TermId> as;
    for (TermId a : n.args) as.push_back(abstract_term(a, args, slots));
    return terms().make(n.head, std::move(as));
  }

  Sym build_mu_locked(FormulaId key) {
    // params: the slot variables of the canonical key, first-occurrence order
    std::vector<Sym> params;
    for (Sym v : distinct_vars_in_order(key))
      if (v != reserved_mu_var()) params.push_back(v);

    std::string name;
    {
      std::lock_guard<std::mutex> lock(mu_);
      name = "mu#" + std::to_string(muBySig_.size());
      // re-check under lock (another thread may have built it)
      auto it = muBySig_.find(key);
      if (it != muBySig_.end()) return it->second;
    }
    Sym m = fn(name, static_cast<std::uint32_t>(params.size()) + 1);

    // R/82, with x the recursion counter and z the previous value:
    //   mu(y..., 0)  = C(chi[A_x(0)], 0, S0)
    //   mu(y..., Sx) = C(chi[mu(y...,x) <= x], mu(y...,x),
    //                    C(chi[A_x(Sx)], Sx, SSx))
    Sym recv = var("@r");
    Sym auxv = var("@z");
    TermId rv = mk_term(recv);
    TermId zv = mk_term(auxv);

    Subst s0;
    s0.bind(reserved_mu_var(), mk_zero());
    FormulaId a0 = subst_formula(key, s0);
    TermId base = mk_case(chi(a0), mk_zero(), mk_succ(mk_zero()));

    Subst sS;
    sS.bind(reserved_mu_var(), mk_succ(rv));
    FormulaId aS = subst_formula(key, sS);
    // z <= x  ==  z -. x = 0 at core level; written via the monus symbol
    FormulaId prevFound = mk_eq(mk_term(need_fn("-.", 2), {zv, rv}), mk_zero());
    TermId inner = mk_case(chi(aS), mk_succ(rv), mk_succ(mk_succ(rv)));
    TermId step = mk_case(chi(prevFound), zv, inner);

    FunctionDef d;
    d.symbol = m;
    d.kind = DefKind::PrimRec;
    d.params = params;
    d.recPos = static_cast<std::uint32_t>(params.size());
    d.recVar = recv;
    d.auxVar = auxv;
    d.base = expand_term(base);
    d.step = expand_term(step);
    d.isMu = true;
    d.muKey = key;
    check_prim_rec(d);
    insert(d);
    std::lock_guard<std::mutex> lock(mu_);
    muBySig_[key] = m;
    return m;
  }

  TermId mk_case(TermId c, TermId a, TermId b) {
    return mk_term(need_fn("C", 3), {c, a, b});
  }

  void check_symbols_known(TermId t, const std::string& who, Sym self = kNoId) const {
    std::set<Sym> fns;
    fns_of_term(t, fns);
    for (Sym g : fns)
      if (g != self && !has(g))
        fail("uses-later-symbol", who + " uses unregistered " + sym_name(g));
  }

  // expansion that tolerates the (not yet registered) symbol being defined
  TermId expand_term_allowing(TermId t, Sym self) {
    const TermNode n = terms().node(t);
    if (is_var(n.head)) return t;
    std::vector<TermId> args;
    for (TermId a : n.args) args.push_back(expand_term_allowing(a, self));
    if (n.head == self) return terms().make(n.head, std::move(args));
    if (!has(n.head)) fail("unknown-symbol", sym_name(n.head));
    FunctionDef d = def(n.head);
    if (d.kind == DefKind::Explicit || d.kind == DefKind::DefinedUCEC) {
      Subst s;
      for (std::size_t i = 0; i < d.params.size(); ++i) s.bind(d.params[i], args[i]);
      return subst_term(d.body, s);
    }
    return terms().make(n.head, std::move(args));
  }

  void check_prim_rec(const FunctionDef& d) const {
    std::set<Sym> ps(d.params.begin(), d.params.end());
    if (ps.size() != d.params.size())
      fail("variable-condition-violated", "parameters not distinct");
    if (ps.count(d.recVar) || ps.count(d.auxVar) || d.recVar == d.auxVar)
      fail("variable-condition-violated", "x,y,z not pairwise distinct");
    for (Sym v : term_vars(d.base))
      if (!ps.count(v))
        fail("variable-condition-violated",
             "base of " + sym_name(d.symbol) + " uses " + sym_name(v));
    for (Sym v : term_vars(d.step))
      if (!ps.count(v) && v != d.recVar && v != d.auxVar)
        fail("variable-condition-violated",
             "step of " + sym_name(d.symbol) + " uses " + sym_name(v));
    check_symbols_known(d.base, sym_name(d.symbol));
    check_symbols_known(d.step, sym_name(d.symbol), d.selfRec ? d.symbol : kNoId);
  }

  Sym insert(const FunctionDef& d) {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = bySym_.find(d.symbol);
    if (it != bySym_.end()) {
      const FunctionDef& old = defs_[it->second];
      if (old.kind == d.kind && old.base == d.base && old.step == d.step &&
          old.body == d.body && old.params == d.params)
        return d.symbol;  // idempotent re-registration
      fail("duplicate-symbol", sym_name(d.symbol));
    }
    bySym_[d.symbol] = defs_.size();
    defs_.push_back(d);
    return d.symbol;
  }

  mutable std::mutex mu_;
  std::mutex muCreate_;
  std::vector<FunctionDef> defs_;
  std::unordered_map<Sym, std::size_t> bySym_;
  std::map<FormulaId, Sym> muBySig_;
  std::unordered_map<Id, PredDef> preds_;
  std::unordered_map<Id, TermId> bounds_;
  std::unordered_map<TermId, TermId> termMemo_;
  std::unordered_map<FormulaId, FormulaId> formulaMemo_;
};

}  // namespace pra

#endif  // PRA_TABLE_HPP
