#ifndef PRA_SYNTAX_HPP
#define PRA_SYNTAX_HPP

#include <algorithm>
#include <cassert>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <vector>

#include "pra/intern.hpp"

namespace pra {

// ---------------------------------------------------------------------------
// Symbols.
//
// Variables and function symbols live in one interned table.  The logical
// connectives and = are structural (Formula variants) rather than symbols,
// but every symbol still records an arity so the invariants of the paper
// formulation hold verbatim: variables are 0-ary, constants are 0-ary
// function symbols.
// ---------------------------------------------------------------------------

enum class SymKind : std::uint8_t { Variable, Function };

struct SymbolData {
  Id name;         // index into string pool
  SymKind kind;
  std::uint32_t arity;
};

class SymbolTable {
 public:
  Id intern(std::string_view name, SymKind kind, std::uint32_t arity) {
    Id nm = string_pool().intern(name);
    std::lock_guard<std::mutex> lock(mu_);
    auto key = std::make_pair(nm, kind);
    auto it = index_.find(key);
    if (it != index_.end()) {
      if (syms_[it->second].arity != arity)
        fail("symbol-arity-clash", std::string(name));
      return it->second;
    }
    Id id = static_cast<Id>(syms_.size());
    syms_.push_back(SymbolData{nm, kind, arity});
    index_.emplace(key, id);
    return id;
  }
  std::optional<Id> lookup(std::string_view name, SymKind kind) const {
    Id nm = string_pool().intern(name);
    std::lock_guard<std::mutex> lock(mu_);
    auto it = index_.find(std::make_pair(nm, kind));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  SymbolData get(Id id) const {
    std::lock_guard<std::mutex> lock(mu_);
    return syms_.at(id);
  }

 private:
  mutable std::mutex mu_;
  std::vector<SymbolData> syms_;
  std::map<std::pair<Id, SymKind>, Id> index_;
};

inline SymbolTable& symbols() {
  static SymbolTable table;
  return table;
}

using Sym = Id;

inline Sym var(std::string_view name) {
  return symbols().intern(name, SymKind::Variable, 0);
}
inline Sym fn(std::string_view name, std::uint32_t arity) {
  return symbols().intern(name, SymKind::Function, arity);
}
inline bool is_var(Sym s) { return symbols().get(s).kind == SymKind::Variable; }
inline std::uint32_t arity(Sym s) { return symbols().get(s).arity; }
inline std::string sym_name(Sym s) { return string_pool().str(symbols().get(s).name); }

// ---------------------------------------------------------------------------
// Terms: hash-consed prefix trees.  head is a variable (no args) or a
// function symbol applied to exactly arity(head) arguments.
// ---------------------------------------------------------------------------

using TermId = Id;

struct TermNode {
  Sym head;
  std::vector<TermId> args;
};

class TermPool {
 public:
  TermId make(Sym head, std::vector<TermId> args) {
    std::uint64_t h = 0x517cc1b727220a95ull;
    hash_mix(h, head);
    for (TermId a : args) hash_mix(h, a);
    std::lock_guard<std::mutex> lock(mu_);
    auto range = index_.equal_range(h);
    for (auto it = range.first; it != range.second; ++it) {
      const TermNode& n = nodes_[it->second];
      if (n.head == head && n.args == args) return it->second;
    }
    TermId id = static_cast<TermId>(nodes_.size());
    nodes_.push_back(TermNode{head, std::move(args)});
    index_.emplace(h, id);
    return id;
  }
  const TermNode& get(TermId id) const {
    std::lock_guard<std::mutex> lock(mu_);
    return nodes_.at(id);
  }
  // Stable snapshot accessor: nodes are append-only, so a reference taken
  // under the lock stays valid (vector may reallocate; copy small header).
  TermNode node(TermId id) const {
    std::lock_guard<std::mutex> lock(mu_);
    return nodes_.at(id);
  }

 private:
  mutable std::mutex mu_;
  std::vector<TermNode> nodes_;
  std::unordered_multimap<std::uint64_t, TermId> index_;
};

inline TermPool& terms() {
  static TermPool pool;
  return pool;
}

inline TermId mk_term(Sym head, std::vector<TermId> args = {}) {
  const auto data = symbols().get(head);
  if (data.kind == SymKind::Variable && !args.empty())
    fail("arity-mismatch", "variable applied to arguments");
  if (data.kind == SymKind::Function && args.size() != data.arity)
    fail("arity-mismatch", string_pool().str(data.name));
  return terms().make(head, std::move(args));
}

inline TermId mk_var_term(std::string_view name) { return mk_term(var(name)); }

// ---------------------------------------------------------------------------
// Formulas.
//
// The core language is Eq / Neg / Or.  Pred and Bounded are surface
// abbreviation nodes (predicate symbols d/..., bounded quantifiers); they are
// eliminated by FunctionTable::expand before anything kernel-facing sees the
// formula.  Keeping them as nodes lets the elaborator manipulate scripts the
// way the paper does.
// ---------------------------------------------------------------------------

using FormulaId = Id;

enum class FKind : std::uint8_t { Eq, Neg, Or, Pred, Bounded };
enum class QKind : std::uint8_t { ExistsLe, ForallLe, ExistsLt, ForallLt, ExistsSym, ForallSym };

struct FormulaNode {
  FKind kind;
  // Eq: t0 = t1.  Neg: f0.  Or: f0 | f1.
  // Pred: sym applied to term args.
  // Bounded: quantifier q over variable v, bound term t0, body f0;
  //          for ExistsSym/ForallSym, sym is the bounding predicate symbol.
  TermId t0 = kNoId, t1 = kNoId;
  FormulaId f0 = kNoId, f1 = kNoId;
  Sym sym = kNoId;
  Sym v = kNoId;
  QKind q = QKind::ExistsLe;
  std::vector<TermId> args;
};

class FormulaPool {
 public:
  FormulaId make(FormulaNode n) {
    std::uint64_t h = 0x2545f4914f6cdd1dull;
    hash_mix(h, static_cast<std::uint64_t>(n.kind));
    hash_mix(h, n.t0); hash_mix(h, n.t1);
    hash_mix(h, n.f0); hash_mix(h, n.f1);
    hash_mix(h, n.sym); hash_mix(h, n.v);
    hash_mix(h, static_cast<std::uint64_t>(n.q));
    for (TermId a : n.args) hash_mix(h, a);
    std::lock_guard<std::mutex> lock(mu_);
    auto range = index_.equal_range(h);
    for (auto it = range.first; it != range.second; ++it) {
      const FormulaNode& m = nodes_[it->second];
      if (m.kind == n.kind && m.t0 == n.t0 && m.t1 == n.t1 && m.f0 == n.f0 &&
          m.f1 == n.f1 && m.sym == n.sym && m.v == n.v && m.q == n.q &&
          m.args == n.args)
        return it->second;
    }
    FormulaId id = static_cast<FormulaId>(nodes_.size());
    nodes_.push_back(std::move(n));
    index_.emplace(h, id);
    return id;
  }
  FormulaNode node(FormulaId id) const {
    std::lock_guard<std::mutex> lock(mu_);
    return nodes_.at(id);
  }

 private:
  mutable std::mutex mu_;
  std::vector<FormulaNode> nodes_;
  std::unordered_multimap<std::uint64_t, FormulaId> index_;
};

inline FormulaPool& formulas() {
  static FormulaPool pool;
  return pool;
}

inline FormulaId mk_eq(TermId a, TermId b) {
  FormulaNode n; n.kind = FKind::Eq; n.t0 = a; n.t1 = b;
  return formulas().make(std::move(n));
}
inline FormulaId mk_neg(FormulaId f) {
  FormulaNode n; n.kind = FKind::Neg; n.f0 = f;
  return formulas().make(std::move(n));
}
inline FormulaId mk_or(FormulaId a, FormulaId b) {
  FormulaNode n; n.kind = FKind::Or; n.f0 = a; n.f1 = b;
  return formulas().make(std::move(n));
}
inline FormulaId mk_pred(Sym p, std::vector<TermId> args) {
  FormulaNode n; n.kind = FKind::Pred; n.sym = p; n.args = std::move(args);
  return formulas().make(std::move(n));
}
inline FormulaId mk_bounded(QKind q, Sym v, TermId bound, FormulaId body, Sym bsym = kNoId) {
  FormulaNode n; n.kind = FKind::Bounded; n.q = q; n.v = v; n.t0 = bound;
  n.f0 = body; n.sym = bsym;
  return formulas().make(std::move(n));
}

// Abbreviations of the surface language; stored desugared.
inline FormulaId mk_and(FormulaId a, FormulaId b) {
  return mk_neg(mk_or(mk_neg(a), mk_neg(b)));
}
inline FormulaId mk_imp(FormulaId a, FormulaId b) { return mk_or(mk_neg(a), b); }
inline FormulaId mk_iff(FormulaId a, FormulaId b) {
  return mk_and(mk_or(mk_neg(a), b), mk_or(a, mk_neg(b)));
}
inline FormulaId mk_neq(TermId a, TermId b) { return mk_neg(mk_eq(a, b)); }

// Recognizers for the desugared shapes.
inline bool is_neg(FormulaId f) { return formulas().node(f).kind == FKind::Neg; }
inline bool is_or(FormulaId f) { return formulas().node(f).kind == FKind::Or; }
inline bool is_eq(FormulaId f) { return formulas().node(f).kind == FKind::Eq; }
// A & B  ==  ~[~A | ~B]
inline std::optional<std::pair<FormulaId, FormulaId>> match_and(FormulaId f) {
  auto n = formulas().node(f);
  if (n.kind != FKind::Neg) return std::nullopt;
  auto m = formulas().node(n.f0);
  if (m.kind != FKind::Or) return std::nullopt;
  auto l = formulas().node(m.f0), r = formulas().node(m.f1);
  if (l.kind != FKind::Neg || r.kind != FKind::Neg) return std::nullopt;
  return std::make_pair(l.f0, r.f0);
}
// A -> B  ==  ~A | B
inline std::optional<std::pair<FormulaId, FormulaId>> match_imp(FormulaId f) {
  auto n = formulas().node(f);
  if (n.kind != FKind::Or) return std::nullopt;
  auto l = formulas().node(n.f0);
  if (l.kind != FKind::Neg) return std::nullopt;
  return std::make_pair(l.f0, n.f1);
}
// A <-> B  ==  [~A|B] & [A|~B]
inline std::optional<std::pair<FormulaId, FormulaId>> match_iff(FormulaId f) {
  auto both = match_and(f);
  if (!both) return std::nullopt;
  auto fwd = match_imp(both->first);
  if (!fwd) return std::nullopt;
  auto bk = formulas().node(both->second);
  if (bk.kind != FKind::Or) return std::nullopt;
  auto bkr = formulas().node(bk.f1);
  if (bkr.kind != FKind::Neg) return std::nullopt;
  if (bk.f0 != fwd->first || bkr.f0 != fwd->second) return std::nullopt;
  return fwd;
}

// ---------------------------------------------------------------------------
// Substitution: simultaneous, literal, capture-free by construction (there
// are no binders in the core; Bounded nodes substitute only into positions
// other than their own bound variable, mirroring "x does not occur in
// exists x<=b A").
// ---------------------------------------------------------------------------

struct Subst {
  // ordered pairs (variable symbol, term); variables pairwise distinct
  std::vector<std::pair<Sym, TermId>> pairs;

  bool empty() const { return pairs.empty(); }
  std::optional<TermId> find(Sym v) const {
    for (const auto& [s, t] : pairs)
      if (s == v) return t;
    return std::nullopt;
  }
  void bind(Sym v, TermId t) {
    if (find(v)) fail("substitution-duplicate-variable", sym_name(v));
    pairs.emplace_back(v, t);
  }
};

inline TermId subst_term(TermId t, const Subst& s) {
  if (s.empty()) return t;
  const TermNode n = terms().node(t);
  if (is_var(n.head)) {
    if (auto r = s.find(n.head)) return *r;
    return t;
  }
  std::vector<TermId> args;
  args.reserve(n.args.size());
  bool changed = false;
  for (TermId a : n.args) {
    TermId b = subst_term(a, s);
    changed |= (b != a);
    args.push_back(b);
  }
  return changed ? terms().make(n.head, std::move(args)) : t;
}

inline FormulaId subst_formula(FormulaId f, const Subst& s) {
  if (s.empty()) return f;
  FormulaNode n = formulas().node(f);
  switch (n.kind) {
    case FKind::Eq:
      return mk_eq(subst_term(n.t0, s), subst_term(n.t1, s));
    case FKind::Neg:
      return mk_neg(subst_formula(n.f0, s));
    case FKind::Or:
      return mk_or(subst_formula(n.f0, s), subst_formula(n.f1, s));
    case FKind::Pred: {
      std::vector<TermId> args;
      for (TermId a : n.args) args.push_back(subst_term(a, s));
      return mk_pred(n.sym, std::move(args));
    }
    case FKind::Bounded: {
      // The bound variable never occurs in the abbreviation's meaning; a
      // substitution touching it is restricted to the other positions.
      Subst inner;
      for (const auto& [v, t] : s.pairs)
        if (v != n.v) inner.pairs.emplace_back(v, t);
      return mk_bounded(n.q, n.v, subst_term(n.t0, inner),
                        subst_formula(n.f0, inner), n.sym);
    }
  }
  fail("unreachable", "subst_formula");
}

// ---------------------------------------------------------------------------
// Variable collection (first-occurrence order, left to right).  For Bounded
// nodes the bound variable itself is skipped: it does not occur in the
// abbreviated formula.
// ---------------------------------------------------------------------------

inline void vars_of_term(TermId t, std::vector<Sym>& out, std::set<Sym>& seen) {
  const TermNode n = terms().node(t);
  if (is_var(n.head)) {
    if (seen.insert(n.head).second) out.push_back(n.head);
    return;
  }
  for (TermId a : n.args) vars_of_term(a, out, seen);
}

inline void vars_of_formula(FormulaId f, std::vector<Sym>& out, std::set<Sym>& seen) {
  FormulaNode n = formulas().node(f);
  switch (n.kind) {
    case FKind::Eq:
      vars_of_term(n.t0, out, seen);
      vars_of_term(n.t1, out, seen);
      return;
    case FKind::Neg:
      vars_of_formula(n.f0, out, seen);
      return;
    case FKind::Or:
      vars_of_formula(n.f0, out, seen);
      vars_of_formula(n.f1, out, seen);
      return;
    case FKind::Pred:
      for (TermId a : n.args) vars_of_term(a, out, seen);
      return;
    case FKind::Bounded: {
      vars_of_term(n.t0, out, seen);
      std::vector<Sym> inner;
      std::set<Sym> innerSeen = seen;
      innerSeen.insert(n.v);
      vars_of_formula(n.f0, inner, innerSeen);
      for (Sym v : inner)
        if (seen.insert(v).second) out.push_back(v);
      return;
    }
  }
}

inline std::vector<Sym> distinct_vars_in_order(FormulaId f) {
  std::vector<Sym> out;
  std::set<Sym> seen;
  vars_of_formula(f, out, seen);
  return out;
}

inline std::vector<Sym> term_vars(TermId t) {
  std::vector<Sym> out;
  std::set<Sym> seen;
  vars_of_term(t, out, seen);
  return out;
}

inline bool term_is_closed(TermId t) { return term_vars(t).empty(); }
inline bool formula_is_closed(FormulaId f) { return distinct_vars_in_order(f).empty(); }

inline bool term_contains_var(TermId t, Sym v) {
  const TermNode n = terms().node(t);
  if (n.head == v) return true;
  for (TermId a : n.args)
    if (term_contains_var(a, v)) return true;
  return false;
}

// Function symbols occurring in a term (dedup, no order guarantee).
inline void fns_of_term(TermId t, std::set<Sym>& out) {
  const TermNode n = terms().node(t);
  if (!is_var(n.head)) out.insert(n.head);
  for (TermId a : n.args) fns_of_term(a, out);
}

// ---------------------------------------------------------------------------
// Numerals.
// ---------------------------------------------------------------------------

inline Sym sym_zero() { return fn("0", 0); }
inline Sym sym_succ() { return fn("S", 1); }

inline TermId mk_zero() { return mk_term(sym_zero()); }
inline TermId mk_succ(TermId t) { return mk_term(sym_succ(), {t}); }

inline TermId mk_numeral(std::uint64_t n) {
  TermId t = mk_zero();
  for (std::uint64_t i = 0; i < n; ++i) t = mk_succ(t);
  return t;
}

inline bool is_numeral(TermId t) {
  const TermNode n = terms().node(t);
  if (n.head == sym_zero()) return true;
  if (n.head == sym_succ()) return is_numeral(n.args[0]);
  return false;
}

// Strip double negations at the top of a formula (the paper's "with ~~
// removed" convention for hypothesis formation).
inline FormulaId strip_double_neg(FormulaId f) {
  for (;;) {
    FormulaNode n = formulas().node(f);
    if (n.kind != FKind::Neg) return f;
    FormulaNode m = formulas().node(n.f0);
    if (m.kind != FKind::Neg) return f;
    f = m.f0;
  }
}

// Remove double negations everywhere.
inline FormulaId neg_normalize(FormulaId f) {
  f = strip_double_neg(f);
  FormulaNode n = formulas().node(f);
  switch (n.kind) {
    case FKind::Eq:
      return f;
    case FKind::Neg: {
      FormulaId inner = neg_normalize(n.f0);
      return strip_double_neg(mk_neg(inner));
    }
    case FKind::Or:
      return mk_or(neg_normalize(n.f0), neg_normalize(n.f1));
    case FKind::Pred:
      return f;
    case FKind::Bounded:
      return mk_bounded(n.q, n.v, n.t0, neg_normalize(n.f0), n.sym);
  }
  fail("unreachable", "neg_normalize");
}

}  // namespace pra

#endif  // PRA_SYNTAX_HPP
