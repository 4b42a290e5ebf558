#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "wordmaps/engine.hpp"

namespace wordmaps {

/// One scanned (group, word) pair.
struct Finding {
  std::string group;  // group spec, resolvable by parse_group_spec
  std::string word;
  int arity = 1;
  bool chiral = false;
  bool weakly_chiral = false;
  std::optional<bool> gamma_agree;  // every gamma in AA(G) gives the same verdicts
  std::optional<Element> chiral_witness;
  std::optional<Element> weak_witness;
  std::size_t image_size = 0;
  std::uint64_t evaluations = 0;
  std::optional<std::string> skipped;  // reason; verdict fields are then meaningless

  /// Not chiral but weakly chiral.
  bool highlight() const { return !skipped && !chiral && weakly_chiral; }
  bool positive() const { return !skipped && (chiral || weakly_chiral); }

  friend bool operator==(const Finding&, const Finding&) = default;
};

struct SearchOptions {
  int rank = 2;
  int max_len = 4;
  std::size_t max_order = 24;
  /// Entries are exact group specs, family letters (C, D, Q, S, A; matches
  /// non-product groups of that family) or "products". Empty = everything.
  std::vector<std::string> families;
  bool full = false;  // emit every pair, not just positives and skips
  int threads = 0;
  std::uint64_t budget = kDefaultTupleBudget;
  std::size_t auto_cap = kDefaultAutomorphismCap;
};

struct SearchSummary {
  std::uint64_t words = 0;
  std::uint64_t groups = 0;
  std::uint64_t pairs = 0;
  std::uint64_t emitted = 0;
  std::uint64_t chiral = 0;
  std::uint64_t weakly_chiral = 0;
  std::uint64_t highlighted = 0;
  std::uint64_t skipped = 0;
  double wall_ms = 0.0;
};

/// Words of the sweep: canonical forms of length <= max_len, minus the
/// identity and single-generator powers (always achiral).
std::vector<Word> search_words(int rank, int max_len);
/// Catalog groups of the sweep: filtered, non-abelian (abelian groups are
/// always achiral).
std::vector<std::string> search_groups(const SearchOptions& options);

/// Computes the record for one pair. Throws BudgetExceeded.
Finding evaluate_pair(const FiniteGroup& g, const std::string& spec, const Word& w,
                      const std::vector<GroupMap>* automorphisms, const EngineOptions& engine);

/// Sweeps words x groups; `sink` receives records in (word, group) order.
SearchSummary search_chiral(const SearchOptions& options, const std::function<void(const Finding&)>& sink);

struct ReplayResult {
  bool match = false;
  std::string detail;
  Finding recomputed;
};

/// Recomputes a record from scratch. Throws ParseError on malformed records
/// or unknown group specs.
ReplayResult replay(const Finding& record, const EngineOptions& engine = {},
                    std::size_t auto_cap = kDefaultAutomorphismCap);

}  // namespace wordmaps
