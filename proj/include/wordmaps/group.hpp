#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wordmaps/errors.hpp"

namespace wordmaps {

using Element = std::uint32_t;

inline constexpr std::size_t kDefaultOrderCap = 512;
inline constexpr std::size_t kDefaultAutomorphismCap = 64;
inline constexpr std::size_t kDefaultAutomorphismCountCap = 2'000'000;

/// A finite group given by its Cayley table. The identity is always element 0.
///
/// Instances are only produced by the builders below, which validate the
/// group axioms, so every FiniteGroup is a group.
class FiniteGroup {
 public:
  /// Validates `table` (row-major, n*n) and relabels so the identity is 0.
  /// Throws GroupAxiomError naming the violating pair or triple.
  static FiniteGroup from_table(std::string name, std::size_t order, std::vector<Element> table,
                                std::vector<std::string> labels = {});

  std::size_t order() const { return order_; }
  const std::string& name() const { return name_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(Element a) const { return labels_[a]; }

  static constexpr Element identity() { return 0; }
  Element mul(Element a, Element b) const { return table_[static_cast<std::size_t>(a) * order_ + b]; }
  Element inv(Element a) const { return inverses_[a]; }
  /// Row `a` of the table: b -> a*b.
  std::span<const Element> row(Element a) const {
    return {table_.data() + static_cast<std::size_t>(a) * order_, order_};
  }
  const std::vector<Element>& table() const { return table_; }
  const std::vector<Element>& inverses() const { return inverses_; }

  Element pow(Element a, std::int64_t k) const;

  void set_name(std::string name) { name_ = std::move(name); }

 private:
  FiniteGroup() = default;

  std::string name_;
  std::size_t order_ = 0;
  std::vector<Element> table_;
  std::vector<Element> inverses_;
  std::vector<std::string> labels_;
};

/// Violated group law reported by validate_group.
struct GroupViolation {
  std::string law;  // "range", "identity", "inverse", "associativity", "shape"
  std::vector<Element> elements;
  std::string message;
};

/// Checks the group axioms on a row-major n*n table. Associativity is checked
/// on all n^3 triples.
std::optional<GroupViolation> validate_group(std::size_t order, std::span<const Element> table);

// ---------------------------------------------------------------------------
// Builders

/// Families: "C n" (n >= 1), "D n" (n = group order, even, n >= 4), "Q8",
/// "S n" (2..5), "A n" (3..5).
///
/// Element orders: cyclic 0..n-1; dihedral rotations r^k then reflections r^k s;
/// symmetric/alternating permutations in lexicographic order of image arrays.
FiniteGroup cyclic_group(std::size_t n);
FiniteGroup dihedral_group(std::size_t order);
FiniteGroup quaternion_group();
FiniteGroup symmetric_group(int degree);
FiniteGroup alternating_group(int degree);
FiniteGroup build_family(std::string_view family, std::size_t parameter);

/// Pair (i, j) is indexed i*|h| + j.
FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h, std::size_t order_cap = kDefaultOrderCap);

using Permutation = std::vector<Element>;

/// Closure of the given permutations of 0..m-1 under composition
/// (p*q)(x) = p(q(x)), elements numbered in breadth-first discovery order.
FiniteGroup from_permutation_generators(const std::vector<Permutation>& generators,
                                        std::size_t order_cap = kDefaultOrderCap, std::string name = "");

/// Reads a Cayley document (JSON): {name, order, table, labels?} or
/// {name, "perm-gens": [[...], ...]}.
FiniteGroup from_cayley_document(std::string_view json_text, std::size_t order_cap = kDefaultOrderCap);
FiniteGroup from_cayley_file(const std::string& path, std::size_t order_cap = kDefaultOrderCap);
std::string to_cayley_document(const FiniteGroup& g);

/// Group spec grammar: C<n>, D<n>, Q8, S<n>, A<n>, products joined by 'x'
/// (C2xC4), or @<path> to a Cayley document.
FiniteGroup parse_group_spec(std::string_view spec, std::size_t order_cap = kDefaultOrderCap);

// ---------------------------------------------------------------------------
// Maps

enum class MapKind { kAutomorphism, kAntiAutomorphism };

/// Bijection of the elements of one group, tagged with the law it satisfies.
/// Holds a non-owning pointer to its group.
struct GroupMap {
  const FiniteGroup* group = nullptr;
  std::vector<Element> images;
  MapKind kind = MapKind::kAutomorphism;

  Element operator()(Element a) const { return images[a]; }
  GroupMap inverse() const;
  friend bool operator==(const GroupMap& a, const GroupMap& b) {
    return a.kind == b.kind && a.images == b.images;
  }
};

/// Checks bijectivity, identity fixing, and the law of `kind` on all pairs.
bool satisfies_law(const FiniteGroup& g, std::span<const Element> images, MapKind kind);

GroupMap identity_map(const FiniteGroup& g);
GroupMap inner_automorphism(const FiniteGroup& g, Element a);

/// All automorphisms in deterministic order; the identity comes first.
std::vector<GroupMap> enumerate_automorphisms(const FiniteGroup& g, std::size_t order_cap = kDefaultAutomorphismCap,
                                              std::size_t count_cap = kDefaultAutomorphismCountCap);

/// x -> zeta(x^-1).
GroupMap anti_from_auto(const GroupMap& zeta);
/// x -> gamma(x^-1).
GroupMap auto_from_anti(const GroupMap& gamma);
/// Permutation composition outer after inner; kinds combine (anti*anti = auto).
GroupMap compose(const GroupMap& outer, const GroupMap& inner);

// ---------------------------------------------------------------------------
// Utilities

std::vector<std::size_t> element_orders(const FiniteGroup& g);
bool is_abelian(const FiniteGroup& g);
bool is_isomorphic(const FiniteGroup& g, const FiniteGroup& h, std::size_t cap = kDefaultAutomorphismCap);
/// Greedy generating sequence: first elements in index order that strictly
/// grow the generated subgroup.
std::vector<Element> greedy_generators(const FiniteGroup& g);

/// Group specs of the built-in catalog with order <= max_order, sorted by
/// (order, spec).
std::vector<std::string> catalog_specs(std::size_t max_order);

}  // namespace wordmaps
