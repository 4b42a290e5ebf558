#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wordmaps/errors.hpp"

namespace wordmaps {

/// One run of a single generator: x_generator^exponent.
struct Syllable {
  int generator = 1;  // 1-based
  int exponent = 1;   // never 0 inside a Word

  friend bool operator==(const Syllable&, const Syllable&) = default;
};

/// A reduced word of the free group F_rank, stored in run-length normal form.
///
/// Adjacent syllables always carry distinct generators and every exponent is
/// nonzero, so two Words are equal as group elements iff they compare equal.
/// The empty syllable list is the identity.
class Word {
 public:
  Word() = default;
  explicit Word(int rank);

  /// Freely reduces an arbitrary syllable list. Exponent-0 syllables are dropped.
  static Word reduce(int rank, const std::vector<Syllable>& raw);
  static Word generator(int rank, int index, int exponent = 1);

  int rank() const { return rank_; }
  const std::vector<Syllable>& syllables() const { return syllables_; }
  bool is_identity() const { return syllables_.empty(); }

  /// Letter count: sum of |exponent|.
  std::int64_t length() const;
  /// Largest generator index that occurs, 0 for the identity.
  int max_generator() const;

  /// Same word viewed in F_rank for a larger rank.
  Word with_rank(int rank) const;

  friend bool operator==(const Word&, const Word&) = default;

 private:
  int rank_ = 1;
  std::vector<Syllable> syllables_;
};

/// Parses `x1 x3^2`, `x1*x2^-1`, or `e`. The result is freely reduced.
Word parse_word(std::string_view text, int rank);
/// Parses with rank = largest generator index used (1 for the identity).
Word parse_word(std::string_view text);

/// Canonical rendering: `x1*x3^2`, `e` for the identity.
std::string to_string(const Word& w);

Word invert(const Word& w);
Word concat(const Word& a, const Word& b);
Word power(const Word& w, int exponent);

/// Letter sequence encoding used for ordering: x_i -> 2(i-1), x_i^-1 -> 2(i-1)+1.
std::vector<int> letters(const Word& w);
Word from_letters(int rank, const std::vector<int>& letters);

/// Length-lexicographic order over letter sequences (x1 < x1^-1 < x2 < ...).
bool length_lex_less(const Word& a, const Word& b);

// ---------------------------------------------------------------------------
// Endomorphisms and automorphisms of F_d

/// Elementary Nielsen moves. kTransvectInverse only appears in inverse recipes.
enum class NielsenKind { kSwapAdjacent, kInvertFirst, kTransvect, kTransvectInverse };

struct NielsenMove {
  NielsenKind kind = NielsenKind::kInvertFirst;
  int index = 1;  // for kSwapAdjacent: swaps x_index and x_{index+1}

  NielsenMove inverse() const;
  friend bool operator==(const NielsenMove&, const NielsenMove&) = default;
};

std::string to_string(const NielsenMove& m);

/// Endomorphism of F_rank given by generator images.
///
/// Composition convention: compose(e1, e2) is e1 after e2, i.e. its image of
/// x_i is substitute(e2(x_i), e1). Then
/// substitute(w, compose(e1, e2)) == substitute(substitute(w, e2), e1).
///
/// An endomorphism built from Nielsen moves keeps the recipe (moves applied
/// first to last); it is then an automorphism and `inverse()` is available.
class FreeGroupEndo {
 public:
  FreeGroupEndo() = default;
  FreeGroupEndo(int rank, std::vector<Word> images);

  static FreeGroupEndo identity(int rank);
  static FreeGroupEndo from_move(int rank, const NielsenMove& m);

  int rank() const { return rank_; }
  const std::vector<Word>& images() const { return images_; }
  const Word& image(int generator) const { return images_.at(generator - 1); }

  bool automorphism_witnessed() const { return recipe_.has_value(); }
  const std::vector<NielsenMove>& recipe() const;

  /// Requires an automorphism witness.
  FreeGroupEndo inverse() const;

  friend bool operator==(const FreeGroupEndo& a, const FreeGroupEndo& b) {
    return a.rank_ == b.rank_ && a.images_ == b.images_;
  }

 private:
  friend FreeGroupEndo compose(const FreeGroupEndo&, const FreeGroupEndo&);

  int rank_ = 1;
  std::vector<Word> images_;
  std::optional<std::vector<NielsenMove>> recipe_;
};

Word substitute(const Word& w, const FreeGroupEndo& e);
FreeGroupEndo compose(const FreeGroupEndo& outer, const FreeGroupEndo& inner);
std::string describe(const FreeGroupEndo& e);

/// Standard Nielsen set of Aut(F_d), each carrying its inverse recipe.
std::vector<FreeGroupEndo> nielsen_generators(int rank);

/// Composition of `length` Nielsen generators drawn with a seeded RNG.
FreeGroupEndo random_automorphism(int rank, int length, std::uint64_t seed);

/// Anti-automorphism gamma(w) = theta(w^-1) of F_d.
class FreeAntiAuto {
 public:
  explicit FreeAntiAuto(FreeGroupEndo theta);

  static FreeAntiAuto inversion(int rank);

  const FreeGroupEndo& theta() const { return theta_; }
  int rank() const { return theta_.rank(); }

 private:
  FreeGroupEndo theta_;
};

Word apply_anti(const Word& w, const FreeAntiAuto& gamma);
/// gamma1 after gamma2; the result is an automorphism (theta1 after theta2).
FreeGroupEndo compose(const FreeAntiAuto& outer, const FreeAntiAuto& inner);

// ---------------------------------------------------------------------------
// Enumeration

/// Every reduced word of letter length <= max_len, in length-lex order.
std::vector<Word> enumerate_words(int rank, int max_len);

/// Least word (length-lex) in the orbit of w under generator permutations,
/// generator inversions and word inversion.
Word canonical_form(const Word& w);

/// Canonical representatives of length <= max_len, in length-lex order.
std::vector<Word> enumerate_canonical_words(int rank, int max_len);

}  // namespace wordmaps
