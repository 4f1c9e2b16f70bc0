#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "pra/grammar.hpp"

using namespace pra;

namespace {

// A table with the early part of the construction registered by hand, enough
// to exercise parsing and expansion without the full corpus.
FunctionTable& demo_table() {
  static FunctionTable* t = [] {
    auto* tab = new FunctionTable();
    Sym x = var("x"), y = var("y"), z = var("z");
    tab->register_prim_rec("+", {x}, 1, y, z, mk_term(x), mk_succ(mk_term(z)));
    tab->register_prim_rec("P", {}, 0, y, z, mk_zero(), mk_term(y));
    tab->register_prim_rec("-.", {x}, 1, y, z,
                           mk_term(x), mk_term(fn("P", 1), {mk_term(z)}));
    tab->register_explicit("Eq", {x, y},
                           parse_term("( x -. y ) + ( y -. x )", *tab));
    tab->register_prim_rec("C", {y, z}, 0, var("x"), var("@z"),
                           mk_term(y), mk_term(z));
    tab->register_explicit("=.", {x, y}, parse_term("C ( Eq ( x , y ) , 0 , S 0 )", *tab));
    tab->register_explicit("~.", {x}, parse_term("C ( x , S 0 , 0 )", *tab));
    tab->register_explicit("|.", {x, y}, parse_term("C ( x , 0 , C ( y , 0 , S 0 ) )", *tab));
    tab->register_pred("<=", {x, y}, parse_formula("x -. y = 0", *tab));
    tab->register_pred("<", {x, y}, parse_formula("x <= y & x != y", *tab));
    return tab;
  }();
  return *t;
}

}  // namespace

TEST_CASE("terms intern and compare by identity") {
  auto& tab = demo_table();
  TermId a = parse_term("x + S y", tab);
  TermId b = parse_term("x + S y", tab);
  TermId c = parse_term("S x + y", tab);
  CHECK(a == b);
  CHECK(a != c);
}

TEST_CASE("instantiate replaces simultaneously and literally") {
  auto& tab = demo_table();
  TermId t = parse_term("x + S y", tab);
  Subst s;
  s.bind(var("x"), mk_zero());
  s.bind(var("y"), mk_succ(mk_zero()));
  CHECK(subst_term(t, s) == parse_term("0 + S S 0", tab));

  // swap is simultaneous, not sequential
  Subst swap;
  swap.bind(var("x"), mk_var_term("y"));
  swap.bind(var("y"), mk_var_term("x"));
  CHECK(subst_term(t, swap) == parse_term("y + S x", tab));

  // A_x(x) and A are the same
  Subst idsub;
  idsub.bind(var("x"), mk_var_term("x"));
  FormulaId f = parse_formula("x = x", tab);
  CHECK(subst_formula(f, idsub) == f);

  FormulaId refl = parse_formula("x = x", tab);
  Subst eq;
  eq.bind(var("x"), parse_term("Eq ( y , z )", tab));
  CHECK(subst_formula(refl, eq) == parse_formula("Eq ( y , z ) = Eq ( y , z )", tab));
}

TEST_CASE("substitution composes when domains and ranges are disjoint") {
  auto& tab = demo_table();
  std::mt19937 rng(12345);
  auto rnd_term = [&](auto&& self, int depth) -> TermId {
    switch (rng() % (depth > 2 ? 3 : 5)) {
      case 0: return mk_var_term("a");
      case 1: return mk_var_term("b");
      case 2: return mk_zero();
      case 3: return mk_succ(self(self, depth + 1));
      default:
        return mk_term(fn("+", 2), {self(self, depth + 1), self(self, depth + 1)});
    }
  };
  for (int i = 0; i < 1000; ++i) {
    TermId t = rnd_term(rnd_term, 0);
    Subst s1, s2;
    s1.bind(var("a"), rnd_term(rnd_term, 2));  // over a,b only? ranges may contain a,b
    // ensure disjointness: s1 maps a -> closed term, s2 maps b -> closed term
    Subst c1, c2;
    c1.bind(var("a"), mk_numeral(rng() % 5));
    c2.bind(var("b"), mk_numeral(rng() % 5));
    TermId seq = subst_term(subst_term(t, c1), c2);
    Subst both;
    both.bind(var("a"), c1.pairs[0].second);
    both.bind(var("b"), c2.pairs[0].second);
    CHECK(seq == subst_term(t, both));
  }
}

TEST_CASE("distinct variables in first-occurrence order") {
  auto& tab = demo_table();
  FormulaId f30 = parse_formula("x -. y = 0 & y -. x = 0 -> x = y", tab);
  auto vs = distinct_vars_in_order(f30);
  REQUIRE(vs.size() == 2);
  CHECK(sym_name(vs[0]) == "x");
  CHECK(sym_name(vs[1]) == "y");

  FormulaId f23 = parse_formula("y -. x != 0 -> x + ( y -. x ) = y", tab);
  auto vs23 = distinct_vars_in_order(f23);
  REQUIRE(vs23.size() == 2);
  CHECK(sym_name(vs23[0]) == "y");
  CHECK(sym_name(vs23[1]) == "x");

  CHECK(distinct_vars_in_order(parse_formula("0 = 0", tab)).empty());
}

TEST_CASE("chi maps connectives homomorphically and inverts") {
  auto& tab = demo_table();
  FormulaId f = parse_formula("~ x = 0 | y = y", tab);
  TermId t = tab.chi(f);
  CHECK(show_term(t) == "~. ( x =. 0 ) |. y =. y");
  CHECK(tab.chi_inverse(t) == tab.expand(f));

  CHECK(tab.chi(parse_formula("a = b", tab)) == parse_term("a =. b", tab));
  CHECK(tab.chi_inverse(parse_term("0 =. 0", tab)) == parse_formula("0 = 0", tab));
  CHECK_THROWS_AS(tab.chi_inverse(parse_term("Eq ( x , y )", tab)), Error);
}

TEST_CASE("chi is bijective on random formulas and commutes with instance") {
  auto& tab = demo_table();
  std::mt19937 rng(777);
  auto rnd_f = [&](auto&& self, int depth) -> FormulaId {
    switch (rng() % (depth > 3 ? 1 : 4)) {
      case 1: return mk_neg(self(self, depth + 1));
      case 2: return mk_or(self(self, depth + 1), self(self, depth + 1));
      default: {
        TermId a = rng() % 2 ? mk_var_term("x") : mk_numeral(rng() % 3);
        TermId b = rng() % 2 ? mk_var_term("y") : mk_succ(mk_var_term("x"));
        return mk_eq(a, b);
      }
    }
  };
  for (int i = 0; i < 1000; ++i) {
    FormulaId f = rnd_f(rnd_f, 0);
    CHECK(tab.chi_inverse(tab.chi(f)) == f);
  }
  for (int i = 0; i < 500; ++i) {
    FormulaId f = rnd_f(rnd_f, 0);
    Subst s;
    s.bind(var("x"), mk_numeral(rng() % 4));
    CHECK(tab.chi(subst_formula(f, s)) == subst_term(tab.chi(f), s));
  }
}

TEST_CASE("construction validity is order-sensitive") {
  // Eq's explicit definition requires -. and + to be registered already.
  FunctionTable tab;
  Sym x = var("x"), y = var("y"), z = var("z");
  CHECK_THROWS_AS(
      tab.register_explicit("Eq", {x, y},
                            mk_term(fn("-.", 2), {mk_term(x), mk_term(y)})),
      Error);
  // a containing the recursion variable is rejected
  tab.register_prim_rec("+", {x}, 1, y, z, mk_term(x), mk_succ(mk_term(z)));
  CHECK_THROWS_AS(
      tab.register_prim_rec("bad", {x}, 1, y, z, mk_term(y), mk_term(z)),
      Error);
}

TEST_CASE("prim-rec registration yields construction axioms") {
  auto& tab = demo_table();
  auto [a1, a2] = tab.construction_axioms(fn("+", 2));
  CHECK(show_formula(a1) == "x + 0 = x");
  CHECK(show_formula(a2) == "x + S y = S ( x + y )");
}

TEST_CASE("surface printing round-trips") {
  auto& tab = demo_table();
  for (const char* src : {
           "x + 0 = x & x + S y = S ( x + y )",
           "y -. x != 0 -> x + ( y -. x ) = y",
           "x = y | y -. x != 0 | x -. y != 0",
           "Eq ( x , y ) = 0 <-> x = y",
           "S x != 0",
           "x <= y -> x < y | x = y",
       }) {
    FormulaId f = parse_formula(src, tab);
    CHECK(parse_formula(show_formula(f), tab) == f);
    CHECK(show_formula(f) == src);
  }
}

TEST_CASE("bounded quantifier expansion produces mu instances") {
  auto& tab = demo_table();
  // exists x <= q [ x + x = q ]  ==  A_x(mu_A(q))
  FormulaId f = parse_formula("exists x <= q [ x + x = q ]", tab);
  FormulaId core = tab.expand(f);
  FormulaId body = parse_formula("x + x = q", tab);
  TermId mu = tab.mu_term(body, var("x"), mk_var_term("q"));
  Subst s;
  s.bind(var("x"), mu);
  CHECK(core == tab.expand(subst_formula(body, s)));

  // renaming the bound variable yields the same mu symbol
  FormulaId body2 = parse_formula("w + w = q", tab);
  CHECK(tab.mu_symbol(body, var("x")) == tab.mu_symbol(body2, var("w")));
  // and double negation is canonicalized away
  CHECK(tab.mu_symbol(mk_neg(mk_neg(body)), var("x")) == tab.mu_symbol(body, var("x")));

  // expansion is idempotent and never contains the bound variable
  CHECK(tab.expand(core) == core);
  for (Sym v : distinct_vars_in_order(core)) CHECK(sym_name(v) != "x");
}
