#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wordmaps/group.hpp"
#include "wordmaps/word.hpp"

namespace wordmaps {

inline constexpr std::uint64_t kDefaultTupleBudget = std::uint64_t{1} << 24;

struct EngineOptions {
  std::uint64_t budget = kDefaultTupleBudget;  // max |G|^d evaluations per image
  int threads = 0;                             // <= 0: OpenMP default
};

/// Dense membership set over the elements of one group.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe) : bits_(universe, 0) {}

  std::size_t universe() const { return bits_.size(); }
  bool contains(Element x) const { return bits_[x] != 0; }
  void insert(Element x) { bits_[x] = 1; }
  std::size_t size() const;
  /// Sorted element indices.
  std::vector<Element> members() const;

  friend bool operator==(const ElementSet&, const ElementSet&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

/// G_w as a membership set.
struct WordImage {
  const FiniteGroup* group = nullptr;
  ElementSet members;
  Word word;
  int arity = 1;
};

/// counts[x] = |{t in G^d : w(t) = x}|.
struct FiberDistribution {
  const FiniteGroup* group = nullptr;
  std::vector<std::uint64_t> counts;
  Word word;
  int arity = 1;

  std::uint64_t total() const;
};

struct ImageResult {
  WordImage image;
  FiberDistribution fibers;
  std::uint64_t evaluations = 0;
};

/// max(1, largest generator index used).
int default_arity(const Word& w);

/// |G|^arity, saturating at UINT64_MAX.
std::uint64_t tuple_count(std::size_t order, int arity);

/// w(tuple); tuple[i] is substituted for x_{i+1}.
Element evaluate(const FiniteGroup& g, const Word& w, std::span<const Element> tuple);
/// gamma(w(tuple)) for an anti-automorphism gamma of g.
Element evaluate_twisted(const FiniteGroup& g, const Word& w, const GroupMap& gamma, std::span<const Element> tuple);

/// Exact image and fibers over G^arity. Tuples run odometer-style (last
/// coordinate fastest) with cached prefix products; the first coordinate is
/// split across OpenMP threads. Output does not depend on the thread count.
/// Throws BudgetExceeded when |G|^arity > options.budget.
ImageResult image(const FiniteGroup& g, const Word& w, int arity, const EngineOptions& options = {});

/// Serial reference: calls evaluate() on every tuple.
ImageResult naive_image(const FiniteGroup& g, const Word& w, int arity,
                        std::uint64_t budget = kDefaultTupleBudget);

/// Fibers of w_gamma by direct enumeration of evaluate_twisted.
std::vector<std::uint64_t> twisted_fibers_direct(const FiniteGroup& g, const Word& w, int arity,
                                                 const GroupMap& gamma,
                                                 std::uint64_t budget = kDefaultTupleBudget);
/// Fibers of w_gamma from those of w: counts[gamma^-1(x)].
std::vector<std::uint64_t> twisted_fibers(const FiberDistribution& fibers, const GroupMap& gamma);

ElementSet invert_set(const FiniteGroup& g, const ElementSet& s);
ElementSet map_set(const GroupMap& m, const ElementSet& s);

// ---------------------------------------------------------------------------
// Chirality predicates

struct GammaVerdict {
  std::string gamma;  // "inv", "auto#k", or a theta description
  std::optional<bool> chiral;         // images differ
  std::optional<Element> witness;
  std::optional<bool> weakly_chiral;  // fibers differ
  std::optional<Element> weak_witness;
};

struct ChiralityReport {
  std::string group_name;
  std::size_t group_order = 0;
  std::string word;
  int arity = 1;
  std::vector<Element> members;
  std::vector<std::uint64_t> counts;

  std::optional<bool> chiral;
  std::optional<Element> chiral_witness;  // x in G_w with x^-1 not in G_w
  std::optional<bool> weakly_chiral;
  std::optional<Element> weak_witness;    // smallest x with unequal fiber counts
  std::vector<GammaVerdict> gammas;
  std::optional<bool> all_gamma_agree;

  std::uint64_t evaluations = 0;
  double wall_ms = 0.0;
};

/// Chiral iff G_w differs from its elementwise inverse.
ChiralityReport is_chiral_pair(const FiniteGroup& g, const Word& w, int arity, const EngineOptions& options = {});

/// Word flavor: compares G_w with G_{gamma(w)}.
ChiralityReport is_gamma_chiral_pair(const FiniteGroup& g, const Word& w, int arity, const FreeAntiAuto& gamma,
                                     const EngineOptions& options = {});
/// Group flavor: compares G_w with gamma(G_w).
ChiralityReport is_gamma_chiral_pair(const FiniteGroup& g, const Word& w, int arity, const GroupMap& gamma,
                                     const EngineOptions& options = {});

/// Weakly gamma-chiral iff some x has counts_w[x] != counts_{w_gamma}[x].
ChiralityReport is_weakly_chiral_pair(const FiniteGroup& g, const Word& w, int arity, const GroupMap& gamma,
                                      const EngineOptions& options = {});

/// Runs the chirality and weak-chirality checks against every gamma in
/// `automorphisms` (as anti_from_auto) and records whether they all agree
/// with the inversion verdicts.
ChiralityReport check_all_gammas(const FiniteGroup& g, const Word& w, int arity,
                                 const std::vector<GroupMap>& automorphisms, const EngineOptions& options = {});

/// Smallest x in `a` that is not in `b`.
std::optional<Element> first_difference(const ElementSet& a, const ElementSet& b);

}  // namespace wordmaps
