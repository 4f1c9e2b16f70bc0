#ifndef PRA_TESTS_CORPUS_FIXTURE_HPP
#define PRA_TESTS_CORPUS_FIXTURE_HPP

#include "pra/corpus.hpp"
#include "pra/corpus_data.hpp"

namespace pra::testing {

struct LoadedCorpus {
  Corpus corpus;
  FunctionTable table;

  LoadedCorpus() {
    corpus = parse_corpus(embedded_corpus());
    DefinitionLoader dl(table);
    for (auto& e : corpus.entries) dl.load(e, corpus);
    // superexponentiation is not part of the corpus construction but the
    // evaluator supports it (its blowup exercises the budget)
    Sym x = var("x"), y = var("y"), z = var("z");
    table.register_prim_rec("^^", {x}, 1, y, z, parse_term("1", table),
                            parse_term("x ^ z", table));
  }
};

// shared across test files; definitions load once
inline LoadedCorpus& loaded() {
  static LoadedCorpus* lc = new LoadedCorpus();
  return *lc;
}

}  // namespace pra::testing

#endif
