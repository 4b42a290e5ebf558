#include <doctest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "wordmaps/word.hpp"

using namespace wordmaps;

namespace {

Word W(int rank, std::vector<Syllable> s) { return Word::reduce(rank, s); }

}  // namespace

TEST_CASE("parse_word") {
  CHECK(parse_word("x1 x3^2", 3).syllables() == std::vector<Syllable>{{1, 1}, {3, 2}});
  CHECK(parse_word("x1 x1^-1", 2).is_identity());
  CHECK(parse_word("x1^2 x2^-1 x2^-1 x1", 2).syllables() == std::vector<Syllable>{{1, 2}, {2, -2}, {1, 1}});
  CHECK(parse_word("x1*x2^-1*x1", 2) == parse_word("x1 x2^-1 x1", 2));
  CHECK(parse_word("e", 2).is_identity());
  CHECK(parse_word("", 2).is_identity());
  CHECK(parse_word("x2 x1").rank() == 2);

  SUBCASE("errors") {
    CHECK_THROWS_AS(parse_word("x0", 2), ParseError);
    CHECK_THROWS_AS(parse_word("x3", 2), ParseError);
    CHECK_THROWS_AS(parse_word("x1^0", 2), ParseError);
    CHECK_THROWS_AS(parse_word("x1^", 2), ParseError);
    CHECK_THROWS_AS(parse_word("y1", 2), ParseError);
    try {
      parse_word("x1 x2 ?", 2);
      FAIL("expected a syntax error");
    } catch (const ParseError& e) {
      CHECK(e.position() == 6);
    }
  }
}

TEST_CASE("rendering round-trips on normal forms") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    const Word w = oracle::random_word(rng, 3, 10);
    CHECK(parse_word(to_string(w), 3) == w);
  }
  CHECK(to_string(W(3, {{1, 1}, {3, 2}})) == "x1*x3^2");
  CHECK(to_string(Word(2)) == "e");
}

TEST_CASE("reduce") {
  CHECK(W(2, {{1, 1}, {2, 1}, {2, -1}, {1, -1}}).is_identity());
  CHECK(W(2, {{1, 2}, {1, 3}}).syllables() == std::vector<Syllable>{{1, 5}});
  CHECK(W(2, {{2, 1}, {1, 1}, {1, -1}, {2, 1}}).syllables() == std::vector<Syllable>{{2, 2}});
  CHECK(Word::reduce(2, {}).is_identity());
  CHECK_THROWS_AS(W(2, {{3, 1}}), InvalidArgument);
}

TEST_CASE("reduce agrees with letter-level cancellation") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 500; ++i) {
    std::vector<int> seq(rng() % 14);
    for (int& l : seq) l = static_cast<int>(rng() % 4);
    std::vector<Syllable> raw;
    for (int l : seq) raw.push_back({l / 2 + 1, (l & 1) ? -1 : 1});
    const Word w = Word::reduce(2, raw);
    CHECK(letters(w) == oracle::reduce_letters(seq));
    CHECK(Word::reduce(2, w.syllables()) == w);
  }
}

TEST_CASE("invert and concat") {
  CHECK(invert(W(3, {{1, 1}, {3, 2}})).syllables() == std::vector<Syllable>{{3, -2}, {1, -1}});
  CHECK(invert(Word(2)).is_identity());
  CHECK(invert(W(2, {{1, 2}, {2, -2}, {1, 1}})).syllables() == std::vector<Syllable>{{1, -1}, {2, 2}, {1, -2}});

  CHECK(concat(W(2, {{1, 1}}), W(2, {{1, -1}})).is_identity());
  CHECK(concat(W(2, {{1, 2}}), W(2, {{2, 1}})).syllables() == std::vector<Syllable>{{1, 2}, {2, 1}});
  CHECK(concat(W(2, {{1, 1}, {2, 1}}), W(2, {{2, -1}, {1, 1}})).syllables() == std::vector<Syllable>{{1, 2}});
  CHECK_THROWS_AS(concat(Word(2), Word(3)), InvalidArgument);

  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    const Word a = oracle::random_word(rng, 3, 8), b = oracle::random_word(rng, 3, 8),
               c = oracle::random_word(rng, 3, 8);
    CHECK(concat(concat(a, b), c) == concat(a, concat(b, c)));
    CHECK(concat(a, Word(3)) == a);
    CHECK(concat(Word(3), a) == a);
  }
}

TEST_CASE("substitute") {
  const FreeGroupEndo t(2, {W(2, {{1, 1}, {2, 1}}), W(2, {{2, 1}})});
  CHECK(substitute(W(2, {{1, 1}}), t) == W(2, {{1, 1}, {2, 1}}));
  CHECK(substitute(W(2, {{1, 1}, {2, 1}}), FreeGroupEndo::identity(2)) == W(2, {{1, 1}, {2, 1}}));
  // (x1 x2)(x1 x2) by hand
  CHECK(substitute(W(2, {{1, 2}}), t) == W(2, {{1, 1}, {2, 1}, {1, 1}, {2, 1}}));
  CHECK_THROWS_AS(substitute(Word(3), t), InvalidArgument);
}

TEST_CASE("substitute is a monoid action under compose") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 200; ++i) {
    std::vector<Word> i1, i2;
    for (int k = 0; k < 3; ++k) {
      i1.push_back(oracle::random_word(rng, 3, 4));
      i2.push_back(oracle::random_word(rng, 3, 4));
    }
    const FreeGroupEndo e1(3, i1), e2(3, i2);
    const Word w = oracle::random_word(rng, 3, 6);
    CHECK(substitute(w, compose(e1, e2)) == substitute(substitute(w, e2), e1));
  }
}

TEST_CASE("nielsen_generators") {
  const auto g1 = nielsen_generators(1);
  REQUIRE(g1.size() == 1);
  CHECK(g1[0].image(1) == W(1, {{1, -1}}));

  const auto g2 = nielsen_generators(2);
  REQUIRE(g2.size() == 3);
  CHECK(g2[0].image(1) == W(2, {{2, 1}}));
  CHECK(g2[0].image(2) == W(2, {{1, 1}}));
  CHECK(g2[1].image(1) == W(2, {{1, -1}}));
  CHECK(g2[2].image(1) == W(2, {{1, 1}, {2, 1}}));
  CHECK(g2[2].image(2) == W(2, {{2, 1}}));

  for (int d = 1; d <= 4; ++d) {
    for (const auto& e : nielsen_generators(d)) {
      REQUIRE(e.automorphism_witnessed());
      const auto inv = e.inverse();
      for (int i = 1; i <= d; ++i) {
        const Word x = Word::generator(d, i);
        CHECK(substitute(substitute(x, e), inv) == x);
        CHECK(substitute(substitute(x, inv), e) == x);
      }
    }
  }
}

TEST_CASE("random_automorphism") {
  CHECK(random_automorphism(2, 0, 99) == FreeGroupEndo::identity(2));
  CHECK(random_automorphism(2, 5, 7) == random_automorphism(2, 5, 7));
  CHECK(random_automorphism(2, 5, 7).recipe() == random_automorphism(2, 5, 7).recipe());

  std::mt19937_64 rng(23);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto theta = random_automorphism(3, 8, seed);
    const auto inv = theta.inverse();
    for (int i = 0; i < 20; ++i) {
      const Word w = oracle::random_word(rng, 3, 8);
      CHECK(substitute(substitute(w, theta), inv) == w);
    }
  }
}

TEST_CASE("apply_anti") {
  const Word w = parse_word("x1 x3^2", 3);
  CHECK(apply_anti(w, FreeAntiAuto::inversion(3)) == W(3, {{3, -2}, {1, -1}}));
  CHECK(apply_anti(Word(3), FreeAntiAuto(random_automorphism(3, 6, 1))).is_identity());
  CHECK_THROWS_AS(FreeAntiAuto(FreeGroupEndo(2, {Word::generator(2, 1), Word::generator(2, 1)})), InvalidArgument);

  // anti o anti is the automorphism theta1 o theta2
  std::mt19937_64 rng(31);
  for (std::uint64_t s = 0; s < 20; ++s) {
    const FreeAntiAuto g1(random_automorphism(2, 5, s)), g2(random_automorphism(2, 5, s + 100));
    const auto theta = compose(g1, g2);
    const Word v = oracle::random_word(rng, 2, 8);
    CHECK(apply_anti(apply_anti(v, g2), g1) == substitute(v, theta));
  }
}

TEST_CASE("enumerate_words") {
  const auto w1 = enumerate_words(2, 1);
  REQUIRE(w1.size() == 5);
  CHECK(w1[0].is_identity());
  CHECK(w1[1] == parse_word("x1", 2));
  CHECK(w1[2] == parse_word("x1^-1", 2));
  CHECK(w1[3] == parse_word("x2", 2));
  CHECK(w1[4] == parse_word("x2^-1", 2));

  // generate-and-reduce oracle: 1 + 4 + 12 words
  CHECK(oracle::generate_and_reduce(2, 2).size() == 17);
  CHECK(enumerate_words(2, 2).size() == 17);

  const auto all = enumerate_words(2, 4);
  std::set<std::vector<int>> distinct;
  for (const auto& w : all) distinct.insert(letters(w));
  CHECK(distinct.size() == all.size());
  CHECK(std::is_sorted(all.begin(), all.end(), length_lex_less));
  CHECK(enumerate_words(3, 0).size() == 1);
}

TEST_CASE("canonical_form") {
  CHECK(canonical_form(parse_word("x2^-1", 2)) == parse_word("x1", 2));
  const Word a = parse_word("x1 x2", 2), b = parse_word("x2 x1", 2);
  CHECK(oracle::signed_permutation_orbit(a).size() == 16);
  CHECK(oracle::orbit_minimum(a) == parse_word("x1 x2", 2));
  CHECK(canonical_form(a) == canonical_form(b));
  CHECK(canonical_form(a) == oracle::orbit_minimum(a));

  std::mt19937_64 rng(41);
  for (int i = 0; i < 100; ++i) {
    const Word w = oracle::random_word(rng, 2, 9);
    const Word c = canonical_form(w);
    CHECK(canonical_form(c) == c);
    CHECK(c == oracle::orbit_minimum(w));
  }
}

TEST_CASE("enumerate_canonical_words has one representative per orbit") {
  const auto reps = enumerate_canonical_words(2, 4);
  std::set<std::vector<int>> seen;
  for (const auto& w : enumerate_words(2, 4)) seen.insert(letters(canonical_form(w)));
  CHECK(reps.size() == seen.size());
  for (const auto& w : reps) CHECK(canonical_form(w) == w);
}
