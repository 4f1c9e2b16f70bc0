#ifndef PRA_EVAL_HPP
#define PRA_EVAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include "pra/table.hpp"

namespace pra {

using Nat = boost::multiprecision::cpp_int;

inline std::size_t nat_bits(const Nat& n) {
  return n == 0 ? 0 : boost::multiprecision::msb(n) + 1;
}

struct Budget {
  std::uint64_t max_rewrite_steps = 10'000'000;
  std::uint64_t max_value_bits = 1'000'000;
};

// ---------------------------------------------------------------------------
// Number <-> string identification of the strings section: x names the bits
// after the leading one in the binary representation of Sx; eps=0, b0=1, b1=2.
// ---------------------------------------------------------------------------

using BitString = std::string;  // over '0'/'1', possibly empty

inline Nat encode_bits(const BitString& s) {
  Nat v = 1;
  for (char c : s) {
    if (c != '0' && c != '1') fail("bad-bitstring", s);
    v <<= 1;
    v += (c == '1') ? 1 : 0;
  }
  return v - 1;
}

inline BitString decode_bits(Nat n) {
  Nat m = n + 1;
  std::size_t bits = nat_bits(m);
  BitString out;
  out.reserve(bits ? bits - 1 : 0);
  for (std::size_t i = bits - 1; i-- > 0;)
    out.push_back(boost::multiprecision::bit_test(m, i) ? '1' : '0');
  return out;
}

// ---------------------------------------------------------------------------
// Evaluator: call-by-value innermost evaluation of variable-free terms over
// a FunctionTable.  Each function symbol has exactly one applicable equation
// per constructor case, so the value is strategy-independent; this one
// iterates primitive recursions bottom-up.  Known symbols have native
// implementations; `native_cutoff` limits which table indices may use them
// so that definitional unfolding can be cross-checked (fastpath_check).
// ---------------------------------------------------------------------------

class Evaluator {
 public:
  Evaluator(FunctionTable& table, Budget budget = {})
      : table_(table), budget_(budget) {}

  // all symbols native where available
  static constexpr std::size_t kAllNative = static_cast<std::size_t>(-1);

  void set_native_cutoff(std::size_t idx) { nativeCutoff_ = idx; }
  std::uint64_t steps_used() const { return steps_; }
  void reset_steps() { steps_ = 0; }

  Nat eval(TermId t) {
    std::map<Sym, Nat> env;
    return eval(t, env);
  }

  Nat eval(TermId t, const std::map<Sym, Nat>& env) {
    const TermNode n = terms().node(t);
    if (is_var(n.head)) {
      auto it = env.find(n.head);
      if (it == env.end()) fail("open-term", sym_name(n.head));
      return it->second;
    }
    // iterative numerals so deep S-chains do not recurse
    if (n.head == sym_succ()) {
      std::uint64_t succs = 0;
      TermId cur = t;
      TermNode m = n;
      while (m.head == sym_succ()) {
        ++succs;
        tick();
        cur = m.args[0];
        m = terms().node(cur);
      }
      Nat v = eval(cur, env);
      return v + succs;
    }
    if (n.head == sym_zero()) return Nat(0);

    std::vector<Nat> args;
    args.reserve(n.args.size());
    for (TermId a : n.args) args.push_back(eval(a, env));
    return apply(n.head, args);
  }

  Nat apply(Sym f, const std::vector<Nat>& args) {
    tick();
    if (!table_.has(f)) fail("unknown-symbol", sym_name(f));
    std::size_t idx = table_.index_of(f);
    if (idx < nativeCutoff_) {
      if (auto v = native(f, args)) return check_bits(*v);
    }
    auto key = std::make_pair(f, args);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    FunctionDef d = table_.def(f);
    Nat result;
    switch (d.kind) {
      case DefKind::Zero:
        result = 0;
        break;
      case DefKind::Succ:
        result = check_bits(args[0] + 1);
        break;
      case DefKind::Explicit:
      case DefKind::DefinedUCEC: {
        std::map<Sym, Nat> env;
        for (std::size_t i = 0; i < d.params.size(); ++i) env[d.params[i]] = args[i];
        result = eval(d.body, env);
        break;
      }
      case DefKind::PrimRec:
        result = eval_prim_rec(d, args);
        break;
      default:
        fail("unreachable", "apply");
    }
    if (memo_.size() < kMemoCap) memo_.emplace(std::move(key), result);
    return result;
  }

  bool eval_formula(FormulaId f) {
    std::map<Sym, Nat> env;
    return eval_formula(f, env);
  }

  bool eval_formula(FormulaId f, const std::map<Sym, Nat>& env) {
    FormulaId core = table_.expand(f);
    return eval_core_formula(core, env);
  }

  // least x' <= bound with A_x(x') true, else bound+1 (the value of mu_A)
  Nat eval_mu(FormulaId a, Sym x, const std::map<Sym, Nat>& env, const Nat& bound) {
    for (Nat cand = 0; cand <= bound; ++cand) {
      tick();
      std::map<Sym, Nat> e = env;
      e[x] = cand;
      if (eval_formula(a, e)) return cand;
    }
    return bound + 1;
  }

 private:
  bool eval_core_formula(FormulaId f, const std::map<Sym, Nat>& env) {
    FormulaNode n = formulas().node(f);
    switch (n.kind) {
      case FKind::Eq:
        return eval(n.t0, env) == eval(n.t1, env);
      case FKind::Neg:
        return !eval_core_formula(n.f0, env);
      case FKind::Or:
        return eval_core_formula(n.f0, env) || eval_core_formula(n.f1, env);
      default:
        fail("not-core-formula", "eval of unexpanded formula");
    }
  }

  Nat eval_prim_rec(const FunctionDef& d, const std::vector<Nat>& args) {
    const Nat& n = args[d.recPos];
    std::map<Sym, Nat> env;
    std::size_t pi = 0;
    for (std::size_t slot = 0; slot < args.size(); ++slot)
      if (slot != d.recPos) env[d.params[pi++]] = args[slot];
    Nat acc = eval(d.base, env);
    for (Nat i = 0; i < n; ++i) {
      tick();
      env[d.recVar] = i;
      env[d.auxVar] = acc;
      acc = eval(d.step, env);
    }
    return acc;
  }

  std::optional<Nat> native(Sym f, const std::vector<Nat>& a) {
    const std::string n = sym_name(f);
    FunctionDef d = table_.def(f);
    if (d.isMu) {
      // remaining arguments are the parameters of the canonical body
      std::map<Sym, Nat> env;
      for (std::size_t i = 0; i < d.params.size(); ++i) env[d.params[i]] = a[i];
      FormulaId body = table_.mu_body(f, mk_term(reserved_mu_var()));
      return eval_mu(body, reserved_mu_var(), env, a.back());
    }
    if (n == "+") return a[0] + a[1];
    if (n == "*") {
      if (nat_bits(a[0]) + nat_bits(a[1]) > budget_.max_value_bits)
        fail("budget-exceeded", "value bits");
      return a[0] * a[1];
    }
    if (n == "-.") return a[0] >= a[1] ? a[0] - a[1] : Nat(0);
    if (n == "P") return a[0] > 0 ? a[0] - 1 : Nat(0);
    if (n == "^") {
      if (a[1] > budget_.max_value_bits) fail("budget-exceeded", "exponent");
      if (nat_bits(a[0]) * static_cast<std::size_t>(a[1]) > budget_.max_value_bits)
        fail("budget-exceeded", "value bits");
      Nat r = 1, base = a[0];
      for (Nat e = 0; e < a[1]; ++e) { tick(); r *= base; }
      return r;
    }
    if (n == "Eq") return a[0] > a[1] ? a[0] - a[1] : a[1] - a[0];
    if (n == "C") return a[0] == 0 ? a[1] : a[2];
    if (n == "Parity") return a[0] & 1;
    if (n == "Half") return a[0] >> 1;
    if (n == "Chop") return a[0] == 0 ? Nat(0) : Nat(((a[0] + 1) >> 1) - 1);
    if (n == "Length") return Nat(nat_bits(a[0] + 1) - 1);
    if (n == "Q") {
      Nat q = Nat(1) << (nat_bits(a[0] + 1) - 1);
      return q;
    }
    if (n == "R") {
      Nat q = Nat(1) << (nat_bits(a[0] + 1) - 1);
      return a[0] + 1 - q;
    }
    if (n == "(+)") {
      // P(Sx * Qy + Ry)
      Nat sy = a[1] + 1;
      Nat q = Nat(1) << (nat_bits(sy) - 1);
      Nat r = sy - q;
      if (nat_bits(a[0] + 1) + nat_bits(q) > budget_.max_value_bits)
        fail("budget-exceeded", "value bits");
      return (a[0] + 1) * q + r - 1;
    }
    return std::nullopt;
  }

  Nat check_bits(Nat v) {
    if (nat_bits(v) > budget_.max_value_bits) fail("budget-exceeded", "value bits");
    return v;
  }
  void tick() {
    if (++steps_ > budget_.max_rewrite_steps) fail("budget-exceeded", "rewrite steps");
  }

  static constexpr std::size_t kMemoCap = 1u << 20;

  FunctionTable& table_;
  Budget budget_;
  std::size_t nativeCutoff_ = kAllNative;
  std::uint64_t steps_ = 0;
  std::map<std::pair<Sym, std::vector<Nat>>, Nat> memo_;
};

// ---------------------------------------------------------------------------
// fastpath_check: every native implementation must agree with definitional
// unfolding of the symbol's own equations (dependencies may stay native; a
// fully definitional tier covers the arithmetic base).  Returns a report of
// mismatching tuples, empty when everything agrees.
// ---------------------------------------------------------------------------

struct FastpathMismatch {
  std::string symbol;
  std::vector<Nat> args;
  Nat native, rewritten;
};

inline std::vector<FastpathMismatch> fastpath_check(
    FunctionTable& table,
    const std::map<std::string, std::pair<std::uint64_t, std::uint64_t>>& grids) {
  std::vector<FastpathMismatch> out;
  for (std::size_t idx = 0; idx < table.size(); ++idx) {
    FunctionDef d = table.def_at(idx);
    std::string name = sym_name(d.symbol);
    auto it = grids.find(name);
    if (it == grids.end()) continue;
    auto [lo_count, hi] = it->second;  // grid: all tuples over [0, hi]
    (void)lo_count;
    std::uint32_t ar = arity(d.symbol);
    std::vector<Nat> args(ar, 0);
    auto run = [&](auto&& self, std::uint32_t pos) -> void {
      if (pos == ar) {
        Evaluator nat(table);
        Evaluator def(table);
        def.set_native_cutoff(idx);  // the symbol itself must unfold
        Nat vn = nat.apply(d.symbol, args);
        Nat vd = def.apply(d.symbol, args);
        if (vn != vd) out.push_back({name, args, vn, vd});
        return;
      }
      for (std::uint64_t v = 0; v <= hi; ++v) {
        args[pos] = v;
        self(self, pos + 1);
      }
    };
    run(run, 0);
  }
  return out;
}

}  // namespace pra

#endif  // PRA_EVAL_HPP
