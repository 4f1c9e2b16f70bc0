#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "corpus_fixture.hpp"
#include "pra/eval.hpp"

using namespace pra;

namespace {

Nat ev(const std::string& s) {
  auto& lc = testing::loaded();
  Evaluator e(lc.table);
  return e.eval(parse_term(s, lc.table));
}

bool evf(const std::string& s) {
  auto& lc = testing::loaded();
  Evaluator e(lc.table);
  return e.eval_formula(parse_formula(s, lc.table));
}

}  // namespace

TEST_CASE("corpus definitions load") {
  auto& lc = testing::loaded();
  CHECK(lc.corpus.entries.size() > 300);
  CHECK(lc.table.has(fn("+", 2)));
  CHECK(lc.table.has(fn("Length", 1)));
  CHECK(lc.table.has(fn("Chop", 1)));
  CHECK(lc.table.has(fn("Q", 1)));
  CHECK(lc.table.has_pred("is_power_of_two"));
  CHECK(lc.table.has_pred("last_bit"));
}

TEST_CASE("arithmetic evaluation") {
  CHECK(ev("S S 0 ^ S S S 0") == 8);  // 2^3
  // Eq(0, S0): unfold e/31, r/17, r/16 by hand: (0 -. 1) + (1 -. 0) = 0 + 1
  CHECK(ev("Eq ( 0 , S 0 )") == 1);
  CHECK(ev("Eq ( 0 , S S S 0 )") == 3);  // (0 -. 3) + (3 -. 0)
  CHECK(ev("Eq ( S S 0 , S S 0 )") == 0);
  CHECK(ev("P 0") == 0);
  CHECK(ev("5 -. 7") == 0);
  CHECK(ev("7 -. 5") == 2);
  CHECK(ev("C ( 0 , 3 , 4 )") == 3);
  CHECK(ev("C ( S 0 , 3 , 4 )") == 4);
  CHECK(ev("Parity 7") == 1);
  CHECK(ev("Half 7") == 3);
}

TEST_CASE("string identification: paper worked example") {
  CHECK(encode_bits("") == 0);    // eps = 0
  CHECK(encode_bits("0") == 1);   // b0 = 1
  CHECK(encode_bits("1") == 2);   // b1 = 2
  CHECK(encode_bits("101") == 12);
  CHECK(encode_bits("01") == 4);
  CHECK(encode_bits("10101") == 52);
  CHECK(ev("12 (+) 4") == 52);
  CHECK(decode_bits(Nat(52)) == "10101");
  CHECK(ev("Chop 52") == 25);  // decode(25) == "1010"
  CHECK(decode_bits(Nat(25)) == "1010");
  CHECK(ev("eps") == 0);
  CHECK(ev("b0") == 1);
  CHECK(ev("b1") == 2);
}

TEST_CASE("encode and decode are mutually inverse") {
  std::mt19937 rng(2024);
  for (int i = 0; i < 500; ++i) {
    BitString s;
    std::size_t len = rng() % 24;
    for (std::size_t j = 0; j < len; ++j) s.push_back(rng() % 2 ? '1' : '0');
    CHECK(decode_bits(encode_bits(s)) == s);
  }
  for (std::uint64_t n = 0; n < 300; ++n)
    CHECK(encode_bits(decode_bits(Nat(n))) == n);
}

TEST_CASE("formula evaluation and the chi mirror") {
  CHECK(evf("0 = 0"));
  CHECK(evf("~ S 0 = 0"));     // a/3 at x := 0
  CHECK(evf("S S 0 * S S 0 = S S S S 0"));
  auto& lc = testing::loaded();
  std::mt19937 rng(99);
  auto rnd_f = [&](auto&& self, int depth) -> FormulaId {
    switch (rng() % (depth > 2 ? 1 : 4)) {
      case 1: return mk_neg(self(self, depth + 1));
      case 2: return mk_or(self(self, depth + 1), self(self, depth + 1));
      default: {
        TermId a = mk_numeral(rng() % 4);
        TermId b = rng() % 2 ? mk_numeral(rng() % 4)
                             : mk_term(fn("+", 2), {mk_numeral(rng() % 3), mk_numeral(rng() % 3)});
        return mk_eq(a, b);
      }
    }
  };
  for (int i = 0; i < 200; ++i) {
    FormulaId f = rnd_f(rnd_f, 0);
    Evaluator e(lc.table);
    bool direct = e.eval_formula(f);
    Nat chiVal = e.eval(lc.table.chi(f));
    CHECK(direct == (chiVal == 0));
  }
}

TEST_CASE("mu evaluation: least witness or bound + 1") {
  auto& lc = testing::loaded();
  Evaluator e(lc.table);
  // A == x*x = 9, bound 4 -> 3 (hand-unfolded R/82 values 1,2,3,3,3)
  FormulaId sq = parse_formula("x * x = S S S S S S S S S 0", lc.table);
  CHECK(e.eval_mu(sq, var("x"), {}, 4) == 3);
  // A == x = 0, bound 0 -> 0 (basis clause)
  CHECK(e.eval_mu(parse_formula("x = 0", lc.table), var("x"), {}, 0) == 0);
  // A never true, bound n -> n+1
  FormulaId never = parse_formula("x != x", lc.table);
  for (std::uint64_t n = 0; n <= 20; ++n)
    CHECK(e.eval_mu(never, var("x"), {}, n) == n + 1);
  // native mu agrees with the R/82 primitive recursion (definitional route)
  Sym m = lc.table.mu_symbol(sq, var("x"));
  Evaluator defEval(lc.table);
  defEval.set_native_cutoff(lc.table.index_of(m));
  for (std::uint64_t b = 0; b <= 8; ++b) {
    CHECK(defEval.apply(m, {Nat(b)}) == e.apply(m, {Nat(b)}));
    CHECK(e.apply(m, {Nat(b)}) == e.eval_mu(sq, var("x"), {}, b));
  }
}

TEST_CASE("evaluation is strategy independent on Q/R/Length/Chop") {
  auto& lc = testing::loaded();
  Evaluator nat(lc.table);
  for (std::uint64_t x = 0; x < 40; ++x) {
    for (const char* f : {"Q", "R", "Length", "Chop"}) {
      Evaluator def(lc.table);
      def.set_native_cutoff(lc.table.index_of(fn(f, 1)));
      CAPTURE(f, x);
      CHECK(def.apply(fn(f, 1), {Nat(x)}) == nat.apply(fn(f, 1), {Nat(x)}));
    }
  }
}

TEST_CASE("fastpath agreement on desk-scale grids") {
  auto& lc = testing::loaded();
  auto mism = fastpath_check(lc.table, {
    {"+", {0, 24}}, {"-.", {0, 24}}, {"*", {0, 12}}, {"P", {0, 64}},
    {"Eq", {0, 16}}, {"C", {0, 3}}, {"Parity", {0, 48}}, {"Half", {0, 48}},
    {"^", {0, 5}},
  });
  CHECK(mism.empty());
}

TEST_CASE("fastpath: Q is the power of two with Qx <= Sx < 2Qx, over [0,4096]") {
  auto& lc = testing::loaded();
  Evaluator e(lc.table);
  for (std::uint64_t x = 0; x <= 4096; ++x) {
    Nat q = e.apply(fn("Q", 1), {Nat(x)});
    Nat r = e.apply(fn("R", 1), {Nat(x)});
    CHECK((q & (q - 1)) == 0);  // power of two
    CHECK(q <= Nat(x) + 1);
    CHECK(Nat(x) + 1 < 2 * q);
    CHECK(q + r == Nat(x) + 1);
  }
}

TEST_CASE("concat agrees with the bitstring oracle on strings up to 8 bits") {
  auto& lc = testing::loaded();
  Evaluator e(lc.table);
  std::mt19937 rng(5);
  auto rstr = [&](std::size_t maxLen) {
    BitString s;
    std::size_t len = rng() % (maxLen + 1);
    for (std::size_t j = 0; j < len; ++j) s.push_back(rng() % 2 ? '1' : '0');
    return s;
  };
  for (int i = 0; i < 2000; ++i) {
    BitString a = rstr(8), b = rstr(8);
    Nat got = e.apply(fn("(+)", 2), {encode_bits(a), encode_bits(b)});
    CHECK(got == encode_bits(a + b));
  }
  // and the native path matches the explicit definition e/172
  for (std::uint64_t x = 0; x <= 40; ++x)
    for (std::uint64_t y = 0; y <= 40; ++y) {
      Evaluator def(lc.table);
      def.set_native_cutoff(lc.table.index_of(fn("(+)", 2)));
      CHECK(def.apply(fn("(+)", 2), {Nat(x), Nat(y)}) ==
            e.apply(fn("(+)", 2), {Nat(x), Nat(y)}));
    }
}

TEST_CASE("budgets stop blowups cleanly") {
  auto& lc = testing::loaded();
  {
    Evaluator e(lc.table);
    CHECK(e.eval(parse_term("S S 0 ^^ S S S S 0", lc.table)) == 65536);
  }
  {
    Evaluator e(lc.table);
    // 2^^7 would need 2^65536 multiplications' worth of value bits
    CHECK_THROWS_WITH(e.eval(parse_term("S S 0 ^^ S S S S S S S 0", lc.table)),
                      Catch::Matchers::ContainsSubstring("budget-exceeded"));
  }
  {
    Evaluator e(lc.table, Budget{100, 1000});
    CHECK_THROWS_WITH(e.eval(parse_term("100 * 100", lc.table)),
                      Catch::Matchers::ContainsSubstring("budget-exceeded"));
  }
  {
    Evaluator e(lc.table);
    CHECK_THROWS_WITH(e.eval(mk_var_term("x")),
                      Catch::Matchers::ContainsSubstring("open-term"));
  }
}

TEST_CASE("semantic mirrors: Eq (t/32) and oplus laws at small scale") {
  auto& lc = testing::loaded();
  Evaluator e(lc.table);
  for (std::uint64_t m = 0; m <= 24; ++m)
    for (std::uint64_t n = 0; n <= 24; ++n)
      CHECK((e.apply(fn("Eq", 2), {Nat(m), Nat(n)}) == 0) == (m == n));
  auto cat = [&](Nat a, Nat b) { return e.apply(fn("(+)", 2), {a, b}); };
  for (std::uint64_t x = 0; x <= 20; ++x) {
    CHECK(cat(Nat(0), Nat(x)) == x);  // eps (+) x = x (t/194)
    CHECK(cat(Nat(x), Nat(0)) == x);  // x (+) eps = x (t/196)
    for (std::uint64_t y = 0; y <= 20; ++y)
      for (std::uint64_t z = 0; z <= 20; ++z)
        CHECK(cat(Nat(x), cat(Nat(y), Nat(z))) == cat(cat(Nat(x), Nat(y)), Nat(z)));
  }
}
