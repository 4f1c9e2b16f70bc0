#ifndef PRA_REFUTE_HPP
#define PRA_REFUTE_HPP

#include "pra/taut.hpp"

namespace pra {

// ---------------------------------------------------------------------------
// Ground refutation: decides unsatisfiability of a set of core formulas in
// the theory of equality with uninterpreted function symbols, by enumerating
// truth assignments to the atom set and running congruence closure (with
// disequations) per assignment.  On success it emits the equality lemmas --
// instances of a/5, a/6 and A/7 -- that make the set propositionally
// inconsistent, which is exactly the paper's implicit devices ("equality
// substitutions ... implicit uses of symmetry ... tautological consequence").
// ---------------------------------------------------------------------------

struct EqualityLemma {
  AxiomKind kind;   // a5, a6, or A7
  FormulaId formula;
};

struct RefuterOutcome {
  bool refuted = false;
  std::vector<EqualityLemma> lemmas;
  // failure diagnostics: a satisfying assignment and its congruence classes
  std::map<FormulaId, bool> model;
  std::vector<std::vector<TermId>> classes;
};

class CongruenceClosure {
 public:
  struct Reason {
    FormulaId input = kNoId;  // equality atom, oriented as written
    bool congruence = false;  // else: input atom
  };

  void add_term(TermId t) {
    if (local_.count(t)) return;
    const TermNode n = terms().node(t);
    for (TermId a : n.args) add_term(a);
    std::size_t i = nodes_.size();
    local_[t] = i;
    nodes_.push_back(t);
    parent_.push_back(i);
    proofParent_.push_back(i);
    proofReason_.push_back(Reason{});
  }

  void merge_input(TermId a, TermId b, FormulaId atom) {
    add_term(a);
    add_term(b);
    Reason r;
    r.input = atom;
    merge(local_[a], local_[b], r);
  }

  // congruence fixpoint over the whole universe (desk scale)
  void propagate() {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t u = 0; u < nodes_.size(); ++u)
        for (std::size_t w = u + 1; w < nodes_.size(); ++w) {
          if (find(u) == find(w)) continue;
          if (!congruent(u, w)) continue;
          Reason r;
          r.congruence = true;
          merge(u, w, r);
          changed = true;
        }
    }
  }

  bool same(TermId a, TermId b) {
    add_term(a);
    add_term(b);
    return find(local_[a]) == find(local_[b]);
  }

  // the chain of elementary equalities justifying a ~ b:
  // each element is (u, v, reason): u = v by the input atom or by congruence
  struct Link {
    TermId u, v;
    Reason reason;
  };
  std::vector<Link> explain(TermId a, TermId b) {
    std::vector<Link> out;
    explain_idx(local_.at(a), local_.at(b), out);
    return out;
  }

  std::vector<std::vector<TermId>> all_classes() {
    std::map<std::size_t, std::vector<TermId>> groups;
    for (std::size_t i = 0; i < nodes_.size(); ++i)
      groups[find(i)].push_back(nodes_[i]);
    std::vector<std::vector<TermId>> out;
    for (auto& [root, ts] : groups)
      if (ts.size() > 1) out.push_back(std::move(ts));
    return out;
  }

 private:
  std::size_t find(std::size_t i) {
    while (parent_[i] != i) i = parent_[i] = parent_[parent_[i]];
    return i;
  }

  void merge(std::size_t a, std::size_t b, const Reason& why) {
    std::size_t ra = find(a), rb = find(b);
    if (ra == rb) return;
    // proof forest: reroot a's tree so a becomes its root, then hang a on b
    reroot(a);
    proofParent_[a] = b;
    proofReason_[a] = why;
    parent_[ra] = rb;
  }

  bool congruent(std::size_t u, std::size_t w) {
    const TermNode nu = terms().node(nodes_[u]);
    const TermNode nw = terms().node(nodes_[w]);
    if (nu.head != nw.head || nu.args.size() != nw.args.size()) return false;
    for (std::size_t i = 0; i < nu.args.size(); ++i)
      if (find(local_.at(nu.args[i])) != find(local_.at(nw.args[i]))) return false;
    return true;
  }

  void reroot(std::size_t a) {
    // reverse the proof-parent chain from a to its root
    std::vector<std::size_t> chain;
    std::size_t cur = a;
    while (proofParent_[cur] != cur) {
      chain.push_back(cur);
      cur = proofParent_[cur];
    }
    for (std::size_t i = chain.size(); i-- > 0;) {
      std::size_t child = chain[i];
      std::size_t par = proofParent_[child];
      proofParent_[par] = child;
      proofReason_[par] = proofReason_[child];
    }
    proofParent_[a] = a;
  }

  void explain_idx(std::size_t a, std::size_t b, std::vector<Link>& out) {
    // walk proof-forest paths to the common ancestor
    std::map<std::size_t, std::size_t> depthA;
    std::size_t cur = a, d = 0;
    for (;;) {
      depthA[cur] = d++;
      if (proofParent_[cur] == cur) break;
      cur = proofParent_[cur];
    }
    std::size_t meet = b;
    while (!depthA.count(meet)) meet = proofParent_[meet];
    for (std::size_t x = a; x != meet; x = proofParent_[x])
      out.push_back(Link{nodes_[x], nodes_[proofParent_[x]], proofReason_[x]});
    std::vector<Link> rev;
    for (std::size_t x = b; x != meet; x = proofParent_[x])
      rev.push_back(Link{nodes_[proofParent_[x]], nodes_[x], proofReason_[x]});
    out.insert(out.end(), rev.rbegin(), rev.rend());
  }

  std::map<TermId, std::size_t> local_;
  std::vector<TermId> nodes_;
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> proofParent_;
  std::vector<Reason> proofReason_;
};

class GroundRefuter {
 public:
  explicit GroundRefuter(std::size_t atomCap = 24) : cap_(atomCap) {}

  RefuterOutcome refute(const std::vector<FormulaId>& asserted) {
    RefuterOutcome out;
    std::vector<FormulaId> fs = asserted;
    std::set<FormulaId> lemmaSet;
    {
      std::vector<FormulaId> all;
      std::set<FormulaId> seen;
      for (FormulaId f : fs) collect_atoms(f, all, seen);
      if (all.size() > cap_)
        fail("atom-cap-exceeded", std::to_string(all.size()) + " atoms");
    }
    for (int iter = 0; iter < 4096; ++iter) {
      CongruenceClosure* ccOut = nullptr;
      std::optional<std::pair<TermId, TermId>> violation;
      FormulaId violatedAtom = kNoId;
      // iterate atoms in first-occurrence order so runs are deterministic
      std::vector<FormulaId> atomOrder;
      {
        std::set<FormulaId> seen;
        for (FormulaId f : fs) collect_atoms(f, atomOrder, seen);
      }
      auto theory = [&](const SatSearch::Assignment& a) {
        auto cc = std::make_shared<CongruenceClosure>();
        for (FormulaId atom : atomOrder) {
          auto it = a.find(atom);
          if (it == a.end()) continue;
          FormulaNode n = formulas().node(atom);
          cc->add_term(n.t0);
          cc->add_term(n.t1);
          if (it->second) cc->merge_input(n.t0, n.t1, atom);
        }
        cc->propagate();
        for (FormulaId atom : atomOrder) {
          auto it = a.find(atom);
          if (it == a.end() || it->second) continue;
          FormulaNode n = formulas().node(atom);
          if (cc->same(n.t0, n.t1)) {
            lastCC_ = cc;
            violation = std::make_pair(n.t0, n.t1);
            violatedAtom = atom;
            return false;  // theory-inconsistent; try other assignments
          }
        }
        lastCC_ = cc;
        violation.reset();
        return true;
      };
      (void)ccOut;
      SatSearch sat(fs, theory);
      auto model = sat.solve();
      if (!model) {
        if (violation) {
          // the last vetoed assignment: emit lemmas for it and re-solve
          emit_lemmas(*lastCC_, violation->first, violation->second, out, lemmaSet, fs);
          continue;
        }
        // propositionally unsatisfiable with the accumulated lemmas
        out.refuted = true;
        return out;
      }
      // genuinely satisfiable
      out.refuted = false;
      out.model = *model;
      out.classes = lastCC_ ? lastCC_->all_classes() : std::vector<std::vector<TermId>>{};
      return out;
    }
    fail("refuter-diverged", "lemma generation did not converge");
  }

 private:
  void emit_lemmas(CongruenceClosure& cc, TermId s, TermId t, RefuterOutcome& out,
                   std::set<FormulaId>& seen, std::vector<FormulaId>& fs) {
    derive(cc, s, t, out, seen, fs);
  }

  void add_lemma(AxiomKind k, FormulaId f, RefuterOutcome& out,
                 std::set<FormulaId>& seen, std::vector<FormulaId>& fs) {
    if (!seen.insert(f).second) return;
    out.lemmas.push_back(EqualityLemma{k, f});
    fs.push_back(f);
  }

  // make atom (u = v) propositionally derivable from input atoms + lemmas
  void derive(CongruenceClosure& cc, TermId u, TermId v, RefuterOutcome& out,
              std::set<FormulaId>& seen, std::vector<FormulaId>& fs) {
    if (u == v) {
      add_lemma(AxiomKind::a5, mk_eq(u, u), out, seen, fs);
      return;
    }
    auto links = cc.explain(u, v);
    TermId prev = u;
    for (const auto& lk : links) {
      derive_link(cc, lk, out, seen, fs);
      // chain: prev = lk.u (by construction), so trans gives u = lk.v
      if (prev != u || lk.v != v) {
        // transitivity lemma u=prev..., emitted below after each link
      }
      if (prev != lk.u) fail("internal", "explain chain broken");
      if (u != lk.u) {
        // (prev=lk.v) & (u=prev) -> (u=lk.v)
        add_lemma(AxiomKind::A7,
                  mk_imp(mk_and(mk_eq(prev, lk.v), mk_eq(u, prev)), mk_eq(u, lk.v)),
                  out, seen, fs);
      }
      prev = lk.v;
    }
  }

  // make the elementary link's equality (lk.u = lk.v) derivable
  void derive_link(CongruenceClosure& cc, const CongruenceClosure::Link& lk,
                   RefuterOutcome& out, std::set<FormulaId>& seen,
                   std::vector<FormulaId>& fs) {
    if (!lk.reason.congruence) {
      FormulaId atom = lk.reason.input;
      FormulaNode n = formulas().node(atom);
      if (n.t0 == lk.u && n.t1 == lk.v) return;  // the input atom itself
      // oriented the other way: symmetry instance
      add_lemma(AxiomKind::a6, mk_imp(mk_eq(n.t0, n.t1), mk_eq(n.t1, n.t0)),
                out, seen, fs);
      return;
    }
    // congruence: argument-wise replacement through A/7
    const TermNode nu = terms().node(lk.u);
    const TermNode nv = terms().node(lk.v);
    if (nu.head != nv.head) fail("internal", "congruence of different heads");
    std::vector<TermId> cur = nu.args;
    TermId w = lk.u;
    add_lemma(AxiomKind::a5, mk_eq(lk.u, lk.u), out, seen, fs);
    for (std::size_t i = 0; i < nu.args.size(); ++i) {
      if (cur[i] == nv.args[i]) continue;
      derive(cc, cur[i], nv.args[i], out, seen, fs);
      std::vector<TermId> nxt = cur;
      nxt[i] = nv.args[i];
      TermId w2 = terms().make(nu.head, nxt);
      // (cur_i = nv_i) & (lk.u = w) -> (lk.u = w2)
      add_lemma(AxiomKind::A7,
                mk_imp(mk_and(mk_eq(cur[i], nv.args[i]), mk_eq(lk.u, w)),
                       mk_eq(lk.u, w2)),
                out, seen, fs);
      cur = nxt;
      w = w2;
    }
  }

  std::size_t cap_;
  std::shared_ptr<CongruenceClosure> lastCC_;
};

}  // namespace pra

#endif  // PRA_REFUTE_HPP
