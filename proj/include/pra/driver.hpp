#ifndef PRA_DRIVER_HPP
#define PRA_DRIVER_HPP

#include <atomic>
#include <chrono>
#include <condition_variable>
#include <thread>

#include "pra/check.hpp"

namespace pra {

// ---------------------------------------------------------------------------
// Batch checking with dependency ordering.  Loading is sequential (the
// construction is ordered); checking runs per-entry against the frozen
// statement store, in parallel across dependency levels.
// ---------------------------------------------------------------------------

struct EntryResult {
  std::string label;
  std::string status = "skipped";  // checked | refutation-failed | parse-error | skipped
  std::string mode = "extended";
  double elapsed_ms = 0.0;
  std::size_t expanded_step_count = 0;
  std::string error;
};

struct Report {
  int schema_version = 1;
  std::string mode;
  std::vector<EntryResult> entries;
  std::size_t checked = 0, failed = 0, skipped = 0;

  void finalize() {
    checked = failed = skipped = 0;
    for (const auto& e : entries) {
      if (e.status == "checked") ++checked;
      else if (e.status == "skipped") ++skipped;
      else ++failed;
    }
  }
};

class CorpusState {
 public:
  explicit CorpusState(std::string_view text) : db_(table_) {
    corpus_ = parse_corpus(text);
    register_axiom_entries(db_, table_);
    schemata::register_all(db_);
    load();
  }

  Corpus& corpus() { return corpus_; }
  FunctionTable& table() { return table_; }
  TheoremDB& db() { return db_; }

  // labels an entry's check depends on (textual citations, group members,
  // definition machinery, and the base lemmas of the schema templates)
  std::set<std::string> deps_of(const CorpusEntry& e) const {
    std::set<std::string> out;
    auto addIf = [&](const std::string& l) {
      if (corpus_.byLabel.count(l)) out.insert(l);
    };
    bool usesDevices = false;
    for (const auto& line : e.proof) {
      std::istringstream is(line);
      std::string tok;
      while (is >> tok) {
        if (tok.size() > 1 && tok[0] == '/' && tok[1] != '^') {
          std::string l = tok.substr(1);
          while (!l.empty() && (l.back() == '>' || l.back() == '-' || l.back() == '<'))
            l.pop_back();
          addIf(l);
        }
        if (tok == ":" || tok == ";") usesDevices = true;
      }
    }
    if (e.text.find("exists") != std::string::npos ||
        e.text.find("forall") != std::string::npos)
      usesDevices = true;
    if (!e.ucLabel.empty()) { addIf(e.ucLabel); addIf(e.ecLabel); }
    for (const char* suffix : {"b", "i", "j", "ij"}) addIf(e.label + suffix);
    if (e.kind == EntryKind::R) usesDevices = true;  // string recursions
    if (usesDevices)
      for (const char* l : {"12", "32", "33", "36", "37", "38", "40", "41",
                            "45", "46", "47", "56", "57", "59", "60", "61",
                            "63", "68", "71", "73", "80", "114", "217", "242",
                            "22", "243", "244", "253", "258"})
        addIf(l);
    out.erase(e.label);
    return out;
  }

  EntryResult check_entry(const CorpusEntry& e, std::size_t atomCap = 128) {
    EntryResult r;
    r.label = e.label;
    auto t0 = std::chrono::steady_clock::now();
    try {
      std::optional<Proof> proof = prove_entry(e, atomCap);
      if (proof) {
        Kernel kernel(db_);
        kernel.require(*proof, /*extended=*/true);
        if (proof->conclusion() != table_.expand(e.statement))
          fail("proof-rejected", "conclusion differs from the statement");
        r.expanded_step_count = proof->steps.size();
        std::lock_guard<std::mutex> lock(proofMu_);
        proofs_[e.label] = std::make_shared<Proof>(std::move(*proof));
      }
      r.status = "checked";
    } catch (const ParseError& ex) {
      r.status = "parse-error";
      r.error = ex.what();
    } catch (const Error& ex) {
      r.status = ex.code == "parse-error" ? "parse-error" : "refutation-failed";
      r.error = ex.what();
    }
    r.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
            .count();
    return r;
  }

  std::shared_ptr<const Proof> proof_of(const std::string& label) const {
    std::lock_guard<std::mutex> lock(proofMu_);
    auto it = proofs_.find(label);
    return it == proofs_.end() ? nullptr : it->second;
  }

  // sequential or leveled-parallel batch check
  Report check_all(const std::string& mode, unsigned jobs,
                   const std::set<std::string>& only = {});

 private:
  std::optional<Proof> prove_entry(const CorpusEntry& e, std::size_t atomCap) {
    switch (e.kind) {
      case EntryKind::Schema:
      case EntryKind::Pragma:
        return std::nullopt;
      case EntryKind::R: {
        auto cs = detail::conjuncts(e.statement);
        if (cs.size() == 3) return prove_string_rec_statement(db_, e);
        return prove_numeric_rec_statement(db_, e);
      }
      case EntryKind::E:
        return prove_definitional(db_, e);
      case EntryKind::D:
        if (!e.ucLabel.empty()) return prove_ucec(db_, e);
        return prove_definitional(db_, e);
      case EntryKind::T: {
        if (!e.proof.empty()) {
          Elaborator el(db_, atomCap);
          return el.elaborate(parse_script(e));
        }
        // induction group close
        FormulaId goalCore = table_.expand(e.statement);
        const bool hasI = corpus_.byLabel.count(e.label + "i") != 0;
        const bool hasJ = corpus_.byLabel.count(e.label + "j") != 0;
        const bool hasIJ = corpus_.byLabel.count(e.label + "ij") != 0;
        if (!corpus_.byLabel.count(e.label + "b"))
          fail("shape-mismatch", "/" + e.label + " has no proof and no group");
        if (hasIJ)
          return close_string_group(db_, e.label + "b", {e.label + "ij"}, goalCore);
        if (hasI && hasJ)
          return close_string_group(db_, e.label + "b",
                                    {e.label + "i", e.label + "j"}, goalCore);
        if (hasI)
          return close_numeric_induction(db_, e.label + "b", e.label + "i", goalCore);
        fail("shape-mismatch", "/" + e.label + " group is incomplete");
      }
    }
    return std::nullopt;
  }

  void load() {
    DefinitionLoader dl(table_);
    std::set<std::string> seen;
    for (auto& e : corpus_.entries) {
      // textual forward-reference check on proof lines
      for (const auto& line : e.proof) {
        std::istringstream is(line);
        std::string tok;
        while (is >> tok) {
          if (tok.size() > 1 && tok[0] == '/' && tok[1] != '^') {
            std::string l = tok.substr(1);
            while (!l.empty() && (l.back() == '>' || l.back() == '-' || l.back() == '<'))
              l.pop_back();
            bool axiomLabel = (l == "3" || l == "4" || l == "5" || l == "6");
            if (!axiomLabel && !seen.count(l))
              fail("forward-reference",
                   "/" + e.label + " cites /" + l + " before its definition");
          }
        }
      }
      dl.load(e, corpus_);
      seen.insert(e.label);
      if (e.kind == EntryKind::Pragma) continue;
      if (e.kind == EntryKind::Schema) continue;  // templates registered already
      DBEntry d;
      d.kind = e.kind == EntryKind::T ? DBEntry::Kind::Theorem
                                      : DBEntry::Kind::Definition;
      d.label = e.label;
      d.statement = e.statement;
      d.defKind = e.kind;
      db_.add(std::move(d));
    }
  }

  Corpus corpus_;
  FunctionTable table_;
  TheoremDB db_;
  mutable std::mutex proofMu_;
  std::map<std::string, std::shared_ptr<Proof>> proofs_;
};

inline Report CorpusState::check_all(const std::string& mode, unsigned jobs,
                                     const std::set<std::string>& only) {
  Report rep;
  rep.mode = mode;
  // transitive closure of --only over dependencies
  std::set<std::string> wanted;
  if (!only.empty()) {
    std::vector<std::string> work(only.begin(), only.end());
    while (!work.empty()) {
      std::string l = work.back();
      work.pop_back();
      if (!wanted.insert(l).second) continue;
      if (auto* e = corpus_.find(l))
        for (const auto& d : deps_of(*e)) work.push_back(d);
    }
  }
  std::vector<const CorpusEntry*> todo;
  for (const auto& e : corpus_.entries) {
    if (e.kind == EntryKind::Pragma) continue;
    if (!only.empty() && !wanted.count(e.label)) {
      EntryResult r;
      r.label = e.label;
      r.status = "skipped";
      rep.entries.push_back(std::move(r));
      continue;
    }
    todo.push_back(&e);
    rep.entries.push_back(EntryResult{e.label});
  }
  std::map<std::string, std::size_t> slot;
  for (std::size_t i = 0; i < rep.entries.size(); ++i)
    slot[rep.entries[i].label] = i;

  if (jobs <= 1) {
    for (const CorpusEntry* e : todo)
      rep.entries[slot[e->label]] = check_entry(*e);
    rep.finalize();
    return rep;
  }

  // leveled parallelism: an entry runs once its dependencies finished
  std::mutex mu;
  std::condition_variable cv;
  std::set<std::string> done, running;
  std::vector<const CorpusEntry*> pending = todo;
  auto ready = [&](const CorpusEntry* e) {
    for (const auto& d : deps_of(*e))
      if (!done.count(d) && slot.count(d) &&
          rep.entries[slot[d]].status != "skipped")
        return false;
    return true;
  };
  auto worker = [&]() {
    for (;;) {
      const CorpusEntry* next = nullptr;
      {
        std::unique_lock<std::mutex> lock(mu);
        cv.wait(lock, [&] {
          if (pending.empty()) return true;
          for (auto it = pending.begin(); it != pending.end(); ++it)
            if (ready(*it)) return true;
          return running.empty() ? true : false;  // deadlock guard
        });
        if (pending.empty()) return;
        for (auto it = pending.begin(); it != pending.end(); ++it)
          if (ready(*it)) {
            next = *it;
            pending.erase(it);
            break;
          }
        if (!next) {
          if (running.empty()) {
            // cyclic or missing deps: fall back to first pending
            next = pending.front();
            pending.erase(pending.begin());
          } else {
            continue;
          }
        }
        running.insert(next->label);
      }
      EntryResult r = check_entry(*next);
      {
        std::lock_guard<std::mutex> lock(mu);
        rep.entries[slot[r.label]] = r;
        done.insert(r.label);
        running.erase(r.label);
      }
      cv.notify_all();
    }
  };
  std::vector<std::thread> pool;
  for (unsigned i = 0; i < jobs; ++i) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  rep.finalize();
  return rep;
}

}  // namespace pra

#endif  // PRA_DRIVER_HPP
