#ifndef PRA_TAUT_HPP
#define PRA_TAUT_HPP

#include "pra/grammar.hpp"
#include "pra/proof.hpp"

namespace pra {

// ---------------------------------------------------------------------------
// Truth valuations.  Atoms are the equation subformulas, compared
// syntactically: a=b and b=a are distinct atoms (symmetry is the axiom a/6,
// not an identity of atoms).  All functions here expect core formulas.
// ---------------------------------------------------------------------------

inline void collect_atoms(FormulaId f, std::vector<FormulaId>& out,
                          std::set<FormulaId>& seen) {
  FormulaNode n = formulas().node(f);
  switch (n.kind) {
    case FKind::Eq:
      if (seen.insert(f).second) out.push_back(f);
      return;
    case FKind::Neg:
      collect_atoms(n.f0, out, seen);
      return;
    case FKind::Or:
      collect_atoms(n.f0, out, seen);
      collect_atoms(n.f1, out, seen);
      return;
    default:
      fail("not-core-formula", "atoms of unexpanded formula");
  }
}

inline std::vector<FormulaId> atoms(FormulaId f) {
  std::vector<FormulaId> out;
  std::set<FormulaId> seen;
  collect_atoms(f, out, seen);
  return out;
}

struct TautConfig {
  std::size_t decision_atom_cap = 24;
  std::size_t synthesis_atom_cap = 8;
};

// 64-valuation-parallel evaluation: returns the truth mask of f over the
// valuation block `blk` (atoms beyond the first 6 are fixed by blk's bits).
inline std::uint64_t eval_mask(FormulaId f, const std::map<FormulaId, std::size_t>& atomIndex,
                               std::uint64_t blk) {
  static constexpr std::uint64_t kPattern[6] = {
      0xaaaaaaaaaaaaaaaaull, 0xccccccccccccccccull, 0xf0f0f0f0f0f0f0f0ull,
      0xff00ff00ff00ff00ull, 0xffff0000ffff0000ull, 0xffffffff00000000ull};
  FormulaNode n = formulas().node(f);
  switch (n.kind) {
    case FKind::Eq: {
      std::size_t i = atomIndex.at(f);
      if (i < 6) return kPattern[i];
      return ((blk >> (i - 6)) & 1) ? ~0ull : 0ull;
    }
    case FKind::Neg:
      return ~eval_mask(n.f0, atomIndex, blk);
    case FKind::Or:
      return eval_mask(n.f0, atomIndex, blk) | eval_mask(n.f1, atomIndex, blk);
    default:
      fail("not-core-formula", "eval_mask");
  }
}

inline bool is_tautology(FormulaId f, const TautConfig& cfg = {}) {
  auto as = atoms(f);
  if (as.size() > cfg.decision_atom_cap)
    fail("atom-cap-exceeded", std::to_string(as.size()) + " atoms");
  std::map<FormulaId, std::size_t> idx;
  for (std::size_t i = 0; i < as.size(); ++i) idx[as[i]] = i;
  std::size_t blocks = as.size() > 6 ? (1ull << (as.size() - 6)) : 1;
  std::uint64_t full = as.size() >= 6 ? ~0ull : (1ull << (1ull << as.size())) - 1;
  for (std::uint64_t blk = 0; blk < blocks; ++blk)
    if ((eval_mask(f, idx, blk) & full) != full) return false;
  return true;
}

// evaluate under a total assignment
inline bool eval_valuation(FormulaId f, const std::map<FormulaId, bool>& v) {
  FormulaNode n = formulas().node(f);
  switch (n.kind) {
    case FKind::Eq:
      return v.at(f);
    case FKind::Neg:
      return !eval_valuation(n.f0, v);
    case FKind::Or:
      return eval_valuation(n.f0, v) || eval_valuation(n.f1, v);
    default:
      fail("not-core-formula", "eval_valuation");
  }
}

// ---------------------------------------------------------------------------
// Propositional satisfiability search over a set of formulas (DFS with
// three-valued short-circuit evaluation).  theoryOk, when provided, vetoes
// complete assignments (the refuter plugs congruence closure in here).
// ---------------------------------------------------------------------------

class SatSearch {
 public:
  using Assignment = std::map<FormulaId, bool>;

  SatSearch(std::vector<FormulaId> formulas,
            std::function<bool(const Assignment&)> theoryOk = nullptr)
      : fs_(std::move(formulas)), theoryOk_(std::move(theoryOk)) {
    std::set<FormulaId> seen;
    for (FormulaId f : fs_) collect_atoms(f, atoms_, seen);
  }

  const std::vector<FormulaId>& atom_list() const { return atoms_; }

  // satisfying assignment making every formula true, or nullopt
  std::optional<Assignment> solve() {
    Assignment a;
    if (search(a)) return model_;
    return std::nullopt;
  }

 private:
  enum class Tri { False, True, Unknown };

  Tri eval3(FormulaId f, const Assignment& a) const {
    FormulaNode n = formulas().node(f);
    switch (n.kind) {
      case FKind::Eq: {
        auto it = a.find(f);
        if (it == a.end()) return Tri::Unknown;
        return it->second ? Tri::True : Tri::False;
      }
      case FKind::Neg: {
        Tri t = eval3(n.f0, a);
        if (t == Tri::Unknown) return t;
        return t == Tri::True ? Tri::False : Tri::True;
      }
      case FKind::Or: {
        Tri l = eval3(n.f0, a);
        if (l == Tri::True) return Tri::True;
        Tri r = eval3(n.f1, a);
        if (r == Tri::True) return Tri::True;
        if (l == Tri::Unknown || r == Tri::Unknown) return Tri::Unknown;
        return Tri::False;
      }
      default:
        fail("not-core-formula", "eval3");
    }
  }

  // first unknown atom of f under a
  FormulaId pick(FormulaId f, const Assignment& a) const {
    FormulaNode n = formulas().node(f);
    switch (n.kind) {
      case FKind::Eq:
        return a.count(f) ? kNoId : f;
      case FKind::Neg:
        return pick(n.f0, a);
      case FKind::Or: {
        FormulaId l = pick(n.f0, a);
        return l != kNoId ? l : pick(n.f1, a);
      }
      default:
        fail("not-core-formula", "pick");
    }
  }

  bool search(Assignment& a) {
    FormulaId branchAtom = kNoId;
    for (FormulaId f : fs_) {
      Tri t = eval3(f, a);
      if (t == Tri::False) return false;
      if (t == Tri::Unknown && branchAtom == kNoId) branchAtom = pick(f, a);
    }
    if (branchAtom == kNoId) {
      // complete (on the atoms that matter): extend to totality
      Assignment total = a;
      for (FormulaId at : atoms_)
        if (!total.count(at)) total[at] = false;
      if (theoryOk_ && !theoryOk_(total)) return false;
      model_ = total;
      return true;
    }
    for (bool val : {true, false}) {
      a[branchAtom] = val;
      if (search(a)) return true;
      a.erase(branchAtom);
    }
    return false;
  }

  std::vector<FormulaId> fs_;
  std::vector<FormulaId> atoms_;
  std::function<bool(const Assignment&)> theoryOk_;
  Assignment model_;
};

inline bool is_taut_consequence(const std::vector<FormulaId>& premises,
                                FormulaId conclusion, const TautConfig& cfg = {}) {
  // A1 -> ... -> An -> A is a tautology iff {A1..An, ~A} is unsatisfiable
  std::vector<FormulaId> fs = premises;
  fs.push_back(mk_neg(conclusion));
  std::size_t count = 0;
  {
    std::set<FormulaId> seen;
    std::vector<FormulaId> all;
    for (FormulaId f : fs) collect_atoms(f, all, seen);
    count = all.size();
  }
  if (count > cfg.decision_atom_cap)
    fail("atom-cap-exceeded", std::to_string(count) + " atoms");
  return !SatSearch(fs).solve().has_value();
}

// ---------------------------------------------------------------------------
// Constructive propositional proofs from A/8..A/11 and modus ponens alone
// (the Hilbert-Ackermann fragment).  ProofKit appends to a proof under
// construction and returns step indices; synthesize() realizes the Kalmar
// completeness construction in clause form.
// ---------------------------------------------------------------------------

class ProofKit {
 public:
  explicit ProofKit(Proof& p) : p_(p) {}

  std::uint32_t ax8(FormulaId a) {
    return axiom(AxiomKind::A8, mk_imp(mk_or(a, a), a));
  }
  std::uint32_t ax9(FormulaId a, FormulaId b) {
    return axiom(AxiomKind::A9, mk_imp(a, mk_or(a, b)));
  }
  std::uint32_t ax10(FormulaId a, FormulaId b) {
    return axiom(AxiomKind::A10, mk_imp(mk_or(a, b), mk_or(b, a)));
  }
  std::uint32_t ax11(FormulaId a, FormulaId b, FormulaId c) {
    return axiom(AxiomKind::A11,
                 mk_imp(mk_imp(b, c), mk_imp(mk_or(a, b), mk_or(a, c))));
  }

  std::uint32_t mp(std::uint32_t i, std::uint32_t j) {
    FormulaId fi = p_.steps[i].formula;
    auto imp = match_imp(p_.steps[j].formula);
    if (!imp || imp->first != fi) fail("rule-mismatch", "modus ponens");
    return add(step_mp(i, j, imp->second));
  }

  // hypothetical syllogism: from ⊢A->B and ⊢B->C conclude ⊢A->C
  std::uint32_t hs(std::uint32_t iAB, std::uint32_t iBC) {
    auto ab = match_imp(p_.steps[iAB].formula);
    auto bc = match_imp(p_.steps[iBC].formula);
    if (!ab || !bc || ab->second != bc->first) fail("rule-mismatch", "hs");
    // A/11 with slot ~A: [B->C] -> [[A->B] -> [A->C]]
    std::uint32_t k = ax11(mk_neg(ab->first), ab->second, bc->second);
    return mp(iAB, mp(iBC, k));
  }
  // ⊢ A -> A, derived as ax9 then ax8 composed by hand (hs needs imp_self
  // for nothing; this one is primitive):
  std::uint32_t id(FormulaId a) {
    auto key = CacheKey{"id", a, kNoId};
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    // A -> A|A ; A|A -> A ; A/11 composes them without using id itself
    std::uint32_t i = ax9(a, a);             // A -> A|A
    std::uint32_t j = ax8(a);                // A|A -> A
    std::uint32_t k = ax11(mk_neg(a), mk_or(a, a), a);  // [A|A->A] -> [[A->A|A]->[A->A]]
    std::uint32_t r = mp(i, mp(j, k));
    cache_[key] = r;
    return r;
  }

  // ⊢ A | ~A
  std::uint32_t excluded_middle(FormulaId a) {
    auto key = CacheKey{"em", a, kNoId};
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    std::uint32_t i = id(a);  // ~A | A
    std::uint32_t r = mp(i, ax10(mk_neg(a), a));
    cache_[key] = r;
    return r;
  }

  // ⊢ A -> ~~A
  std::uint32_t dneg_intro(FormulaId a) {
    auto key = CacheKey{"dni", a, kNoId};
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    std::uint32_t i = id(mk_neg(a));  // ~~A | ~A
    std::uint32_t r = mp(i, ax10(mk_neg(mk_neg(a)), mk_neg(a)));
    cache_[key] = r;
    return r;
  }

  // ⊢ ~~A -> A
  std::uint32_t dneg_elim(FormulaId a) {
    auto key = CacheKey{"dne", a, kNoId};
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    std::uint32_t em = excluded_middle(a);            // A | ~A
    std::uint32_t d = dneg_intro(mk_neg(a));          // ~A -> ~~~A
    std::uint32_t k = mp(d, ax11(a, mk_neg(a), mk_neg(mk_neg(mk_neg(a)))));
    std::uint32_t j = mp(em, k);                      // A | ~~~A
    std::uint32_t r = mp(j, ax10(a, mk_neg(mk_neg(mk_neg(a)))));  // ~~A -> A
    cache_[key] = r;
    return r;
  }

  // from ⊢B conclude ⊢A|B
  std::uint32_t add_left(std::uint32_t iB, FormulaId a) {
    FormulaId b = p_.steps[iB].formula;
    std::uint32_t i = mp(iB, ax9(b, a));  // B|A
    return mp(i, ax10(b, a));
  }

  // from ⊢X|P and ⊢~X|Q conclude ⊢P|Q
  std::uint32_t resolution(std::uint32_t iXP, std::uint32_t iNXQ) {
    FormulaNode xp = formulas().node(p_.steps[iXP].formula);
    FormulaNode nxq = formulas().node(p_.steps[iNXQ].formula);
    if (xp.kind != FKind::Or || nxq.kind != FKind::Or) fail("rule-mismatch", "resolution");
    FormulaId x = xp.f0, pp = xp.f1, q = nxq.f1;
    if (nxq.f0 != mk_neg(x)) fail("rule-mismatch", "resolution pivot");
    // ~X|Q is X->Q; A/11: [X->Q] -> [P|X -> P|Q]
    std::uint32_t k = mp(iNXQ, ax11(pp, x, q));
    std::uint32_t px = mp(iXP, ax10(x, pp));
    return mp(px, k);
  }

  // from ⊢A->X and ⊢B->X conclude ⊢[A|B]->X
  std::uint32_t case_rule(std::uint32_t iAX, std::uint32_t iBX) {
    auto ax = match_imp(p_.steps[iAX].formula);
    auto bx = match_imp(p_.steps[iBX].formula);
    if (!ax || !bx || ax->second != bx->second) fail("rule-mismatch", "case_rule");
    FormulaId a = ax->first, b = bx->first, x = ax->second;
    std::uint32_t k1 = mp(iBX, ax11(a, b, x));  // A|B -> A|X
    // A|X -> X: from A->X: [A->X] -> [X|A -> X|X]
    std::uint32_t k2 = mp(iAX, ax11(x, a, x));  // X|A -> X|X
    std::uint32_t k3 = hs(k2, ax8(x));          // X|A -> X
    std::uint32_t k4 = hs(ax10(a, x), k3);      // A|X -> X
    return hs(k1, k4);
  }

  // ⊢ X -> D for X occurring in the or-tree of D, up to double negation
  std::uint32_t imp_to(FormulaId x, FormulaId d) {
    if (d == x) return id(x);
    if (d == mk_neg(mk_neg(x))) return dneg_intro(x);
    {
      FormulaNode xn = formulas().node(x);
      if (xn.kind == FKind::Neg) {
        FormulaNode xm = formulas().node(xn.f0);
        if (xm.kind == FKind::Neg && xm.f0 == d) return dneg_elim(xm.f0);
      }
    }
    FormulaNode n = formulas().node(d);
    if (n.kind == FKind::Or) {
      if (occurs_leaf(x, n.f0)) {
        std::uint32_t i = imp_to(x, n.f0);
        return hs(i, ax9(n.f0, n.f1));
      }
      if (occurs_leaf(x, n.f1)) {
        std::uint32_t i = imp_to(x, n.f1);
        std::uint32_t j = hs(ax9(n.f1, n.f0), ax10(n.f1, n.f0));  // R -> L|R
        return hs(i, j);
      }
    }
    fail("rule-mismatch", "imp_to: leaf " + show_formula(x) + " not in " + show_formula(d));
  }

  static bool occurs_leaf(FormulaId x, FormulaId d) {
    if (d == x || d == mk_neg(mk_neg(x))) return true;
    {
      FormulaNode xn = formulas().node(x);
      if (xn.kind == FKind::Neg) {
        FormulaNode xm = formulas().node(xn.f0);
        if (xm.kind == FKind::Neg && xm.f0 == d) return true;
      }
    }
    FormulaNode n = formulas().node(d);
    if (n.kind == FKind::Or)
      return occurs_leaf(x, n.f0) || occurs_leaf(x, n.f1);
    return false;
  }

  // ⊢ D1 -> D2 whenever every or-leaf of D1 occurs in D2 (as itself or
  // under a double negation), treating subtrees present as units first
  std::uint32_t shuffle_imp(FormulaId d1, FormulaId d2) {
    auto key = CacheKey{"shf", d1, d2};
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    std::uint32_t r;
    if (occurs_leaf(d1, d2)) {
      r = imp_to(d1, d2);
    } else {
      FormulaNode n = formulas().node(d1);
      if (n.kind == FKind::Or)
        r = case_rule(shuffle_imp(n.f0, d2), shuffle_imp(n.f1, d2));
      else
        r = imp_to(d1, d2);
    }
    cache_[key] = r;
    return r;
  }

  // from ⊢D1 conclude ⊢D2 (leaf-subset reshuffle with contraction)
  std::uint32_t shuffle(std::uint32_t i, FormulaId d2) {
    FormulaId d1 = p_.steps[i].formula;
    if (d1 == d2) return i;
    return mp(i, shuffle_imp(d1, d2));
  }

 private:
  struct CacheKey {
    std::string tag;
    FormulaId a, b;
    bool operator<(const CacheKey& o) const {
      return std::tie(tag, a, b) < std::tie(o.tag, o.a, o.b);
    }
  };

  std::uint32_t axiom(AxiomKind k, FormulaId f) {
    auto key = CacheKey{axiom_name(k), f, kNoId};
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    std::uint32_t r = add(step_axiom(k, f));
    cache_[key] = r;
    return r;
  }
  std::uint32_t add(ProofStep s) { return p_.add(std::move(s)); }

  Proof& p_;
  std::map<CacheKey, std::uint32_t> cache_;
};

// ---------------------------------------------------------------------------
// synthesize: a primitive proof (A/8..A/11 + MP) of any tautology.
// Kalmar's construction in clause form: for every valuation of the atoms,
// derive  ~l1 | (~l2 | ... (~ln | F)),  then resolve the valuation tree away
// pivot by pivot.
// ---------------------------------------------------------------------------

class Synthesizer {
 public:
  Synthesizer(Proof& p, const TautConfig& cfg = {}) : p_(p), kit_(p), cfg_(cfg) {}

  // appends a proof of f (which must be a tautology) and returns its index
  std::uint32_t synthesize(FormulaId f) {
    auto as = atoms(f);
    if (as.size() > cfg_.synthesis_atom_cap)
      fail("synthesis-cap-exceeded", std::to_string(as.size()) + " atoms");
    if (!is_tautology(f, cfg_)) fail("not-a-tautology", show_formula(f));
    std::vector<bool> val(as.size());
    return merge(f, as, val, 0);
  }

 private:
  // with atoms[0..k) fixed by val, derive the prefix clause
  //   ~l_0 | (~l_1 | ... (~l_{k-1} | f))
  // by resolving the two k-branches against each other on atom k
  std::uint32_t merge(FormulaId f, const std::vector<FormulaId>& as,
                      std::vector<bool>& val, std::size_t k) {
    if (k == as.size()) return base(f, as, val);
    FormulaId p = as[k];
    val[k] = true;
    std::uint32_t ipos = merge(f, as, val, k + 1);  // prefix[0..k] with ~p
    val[k] = false;
    std::uint32_t ineg = merge(f, as, val, k + 1);  // prefix[0..k] with ~~p
    FormulaId target = clause_prefix(f, as, val, k);
    if (target == f && as.size() == 1) {
      // single-atom case resolves straight to f
    }
    std::uint32_t l = kit_.shuffle(ipos, mk_or(mk_neg(p), target));
    std::uint32_t r = kit_.shuffle(ineg, mk_or(mk_neg(mk_neg(p)), target));
    std::uint32_t res = kit_.resolution(l, r);  // target | target
    return kit_.shuffle(res, target);
  }

  // clause ~l_0 | ... | ~l_{k-1} | F (right-nested), k = 0 -> F alone
  FormulaId clause_prefix(FormulaId f, const std::vector<FormulaId>& as,
                          const std::vector<bool>& val, std::size_t k) const {
    FormulaId acc = f;
    for (std::size_t i = k; i-- > 0;) {
      FormulaId lit = val[i] ? as[i] : mk_neg(as[i]);
      acc = mk_or(mk_neg(lit), acc);
    }
    return acc;
  }

  // ⊢ CL | F under the total valuation (F true there); CL = full clause
  std::uint32_t base(FormulaId f, const std::vector<FormulaId>& as,
                     const std::vector<bool>& val) {
    FormulaId cl = clause_prefix(f, as, val, as.size());
    std::uint32_t i = prove_signed(f, /*positive=*/true, as, val, cl);
    return kit_.shuffle(i, cl);
  }

  // ⊢ D | G where G is f (positive) or ~f, D any clause containing the
  // needed literals; returns a step whose formula shuffles into `target`.
  std::uint32_t prove_signed(FormulaId f, bool positive,
                             const std::vector<FormulaId>& as,
                             const std::vector<bool>& val, FormulaId target) {
    FormulaNode n = formulas().node(f);
    switch (n.kind) {
      case FKind::Eq: {
        // literal: x | ~x shuffles into any clause containing ~l and f-signed
        std::uint32_t em = kit_.excluded_middle(f);
        return kit_.shuffle(em, target);
      }
      case FKind::Neg: {
        bool bTrue = !truth(f, as, val);  // value of the body
        (void)bTrue;
        if (positive) {
          // f = ~B true: B false: recurse negatively on B
          return prove_signed(n.f0, false, as, val, target);
        }
        // ~f = ~~B needed: B true
        std::uint32_t i = prove_signed(n.f0, true, as, val,
                                       or_replace(target, mk_neg(f), n.f0));
        return kit_.shuffle(i, target);
      }
      case FKind::Or: {
        if (positive) {
          bool lTrue = truth(n.f0, as, val);
          FormulaId side = lTrue ? n.f0 : n.f1;
          std::uint32_t i = prove_signed(side, true, as, val,
                                         or_replace(target, f, side));
          return kit_.shuffle(i, target);
        }
        // ~[B|C]: have ~B and ~C, use the snippet ~~B | ~~C | ~[B|C]
        FormulaId b = n.f0, c = n.f1;
        std::uint32_t ib = prove_signed(b, false, as, val,
                                        or_replace(target, mk_neg(f), mk_neg(b)));
        std::uint32_t ic = prove_signed(c, false, as, val,
                                        or_replace(target, mk_neg(f), mk_neg(c)));
        std::uint32_t sn = neg_or_snippet(b, c);  // ~~B | (~~C | ~[B|C])
        // resolve pivot ~B:  (~B | T') with (~~B | rest)
        FormulaId restC = mk_or(mk_neg(mk_neg(c)), mk_neg(f));
        std::uint32_t l1 = kit_.shuffle(ib, mk_or(mk_neg(b), target));
        std::uint32_t r1 = kit_.shuffle(sn, mk_or(mk_neg(mk_neg(b)), restC));
        std::uint32_t res1 = kit_.resolution(l1, r1);  // target | restC
        // resolve pivot ~C
        std::uint32_t l2 = kit_.shuffle(ic, mk_or(mk_neg(c), target));
        std::uint32_t r2 = kit_.shuffle(res1, mk_or(mk_neg(mk_neg(c)),
                                                    mk_or(target, mk_neg(f))));
        std::uint32_t res2 = kit_.resolution(l2, r2);
        return kit_.shuffle(res2, target);
      }
      default:
        fail("not-core-formula", "synthesize");
    }
  }

  // ⊢ ~~B | (~~C | ~[B|C])
  std::uint32_t neg_or_snippet(FormulaId b, FormulaId c) {
    FormulaId t = mk_or(b, c);
    FormulaId target = mk_or(mk_neg(mk_neg(b)), mk_or(mk_neg(mk_neg(c)), mk_neg(t)));
    std::uint32_t em = kit_.excluded_middle(t);  // [B|C] | ~[B|C]
    std::uint32_t toT = kit_.shuffle_imp(t, target);
    std::uint32_t fromNeg = kit_.imp_to(mk_neg(t), target);
    std::uint32_t cases = kit_.case_rule(toT, fromNeg);
    return kit_.mp(em, cases);
  }

  // replace the leaf `what` in target's or-tree by `with` (first occurrence)
  static FormulaId or_replace(FormulaId target, FormulaId what, FormulaId with) {
    if (target == what) return with;
    FormulaNode n = formulas().node(target);
    if (n.kind == FKind::Or) {
      if (ProofKit::occurs_leaf(what, n.f0) || n.f0 == what)
        return mk_or(or_replace(n.f0, what, with), n.f1);
      return mk_or(n.f0, or_replace(n.f1, what, with));
    }
    return target;
  }

  bool truth(FormulaId f, const std::vector<FormulaId>& as,
             const std::vector<bool>& val) const {
    std::map<FormulaId, bool> v;
    for (std::size_t i = 0; i < as.size(); ++i) v[as[i]] = val[i];
    return eval_valuation(f, v);
  }

  Proof& p_;
  ProofKit kit_;
  TautConfig cfg_;
};

// Prop 1(ii) as a proof transformer: given steps `prem` already present in
// p, appends a primitive derivation of `target` (which must be a
// tautological consequence of them): the synthesized implication chain
// followed by one modus ponens per premise.
inline std::uint32_t append_taut_consequence(Proof& p,
                                             const std::vector<std::uint32_t>& prem,
                                             FormulaId target,
                                             const TautConfig& cfg = {}) {
  FormulaId chain = target;
  for (auto it = prem.rbegin(); it != prem.rend(); ++it)
    chain = mk_imp(p.steps[*it].formula, chain);
  Synthesizer syn(p, cfg);
  std::uint32_t idx = syn.synthesize(chain);
  ProofKit kit(p);
  for (std::uint32_t pr : prem) idx = kit.mp(pr, idx);
  return idx;
}

}  // namespace pra

#endif  // PRA_TAUT_HPP
