#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wordmaps/engine.hpp"

namespace wordmaps {

/// Parameter bounds shared by the verification suites.
struct VerifyBounds {
  std::size_t max_order = 16;
  int max_len = 4;
  int rank = 2;
  int theta_samples = 5;   // sampled theta in Aut(F_d) per word
  int gamma_samples = 10;  // sampled gamma in AA(F_d) per word
  int theta_length = 6;    // Nielsen moves per sampled theta
  std::uint64_t seed = 1;
  int threads = 0;
  std::uint64_t budget = kDefaultTupleBudget;
  std::size_t auto_cap = kDefaultAutomorphismCap;
  /// Overrides the built-in catalog when non-empty.
  std::vector<std::string> groups;
};

struct VerificationFailure {
  std::string suite;
  std::string check;
  std::string group;  // group spec
  std::string word;
  int arity = 1;
  std::string map;    // reproduction data for the map under test
  std::string detail;
};

struct VerificationSkip {
  std::string suite;
  std::string group;
  std::string word;
  std::string reason;
};

struct VerificationReport {
  static constexpr std::size_t kMaxFailures = 100;

  std::string suite;
  VerifyBounds bounds;
  std::uint64_t cases = 0;   // (group, word) pairs
  std::uint64_t checks = 0;  // individual assertions
  std::vector<VerificationFailure> failures;
  std::uint64_t failures_dropped = 0;  // beyond kMaxFailures
  std::vector<VerificationSkip> skipped;
  std::vector<VerificationReport> parts;  // filled by run_all
  double wall_ms = 0.0;

  bool passed() const;
};

/// G_w = G_{theta(w)} for sampled theta, and zeta(G_w) = G_w for every zeta in A(G).
VerificationReport verify_lemma(const VerifyBounds& bounds);
/// G_{gamma(w)} = G_{w^-1} for sampled gamma in AA(F_d).
VerificationReport verify_theorem1(const VerifyBounds& bounds);
/// gamma(G_w) = (G_w)^-1 for every gamma in AA(G).
VerificationReport verify_theorem2(const VerifyBounds& bounds);
/// Weak-chirality verdict is the same for every gamma in AA(G), and fibers of
/// w_gamma match direct twisted enumeration.
VerificationReport verify_remark(const VerifyBounds& bounds);
VerificationReport run_all(const VerifyBounds& bounds);

/// Seed of the k-th sample for a word; independent of group and catalog.
std::uint64_t sample_seed(std::uint64_t seed, const Word& w, int k);

}  // namespace wordmaps
