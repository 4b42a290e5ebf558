#include <doctest.h>

#include <set>

#include "wordmaps/search.hpp"

using namespace wordmaps;

namespace {

std::vector<Finding> sweep(SearchOptions o, SearchSummary* summary = nullptr) {
  std::vector<Finding> out;
  const auto s = search_chiral(o, [&](const Finding& f) { out.push_back(f); });
  if (summary) *summary = s;
  return out;
}

}  // namespace

TEST_CASE("search_words") {
  const auto words = search_words(2, 4);
  CHECK_FALSE(words.empty());
  std::set<std::vector<int>> seen;
  for (const auto& w : words) {
    CHECK(canonical_form(w) == w);
    CHECK(w.syllables().size() >= 2);
    CHECK(seen.insert(letters(w)).second);
  }
  for (const auto& w : words) {
    for (const auto& v : words) {
      if (&w != &v) REQUIRE_FALSE(canonical_form(w) == canonical_form(v));
    }
  }
}

TEST_CASE("search_groups filters") {
  SearchOptions o;
  o.max_order = 24;
  for (const auto& spec : search_groups(o)) CHECK_FALSE(is_abelian(parse_group_spec(spec)));
  o.families = {"S"};
  CHECK(search_groups(o) == std::vector<std::string>{"S3", "S4"});
  o.families = {"C"};
  CHECK(search_groups(o).empty());
  o.families = {"Q8", "D8"};
  CHECK(search_groups(o) == std::vector<std::string>{"D8", "Q8"});
}

TEST_CASE("full sweep over S3") {
  SearchOptions o;
  o.max_len = 3;
  o.families = {"S3"};
  o.full = true;
  SearchSummary s;
  const auto found = sweep(o, &s);
  CHECK(found.size() == search_words(2, 3).size());
  CHECK(s.pairs == found.size());
  CHECK(s.emitted == found.size());
  for (const auto& f : found) {
    CHECK(f.group == "S3");
    CHECK(f.gamma_agree.value_or(false));
    CHECK_FALSE(f.chiral);
    CHECK_FALSE(f.skipped);
    CHECK(f.image_size >= 1);
    CHECK(f.evaluations == 36);
  }
}

TEST_CASE("abelian-only catalog yields nothing") {
  SearchOptions o;
  o.families = {"C4", "C2xC2", "C6"};
  o.full = true;
  SearchSummary s;
  CHECK(sweep(o, &s).empty());
  CHECK(s.groups == 0);
}

TEST_CASE("sweep is deterministic across thread counts") {
  SearchOptions o;
  o.max_len = 4;
  o.max_order = 12;
  o.full = true;
  o.threads = 1;
  const auto a = sweep(o);
  o.threads = 4;
  const auto b = sweep(o);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    Finding x = a[i], y = b[i];
    CHECK(x == y);
  }
}

TEST_CASE("replay") {
  SearchOptions o;
  o.max_len = 3;
  o.max_order = 12;
  o.full = true;
  const auto found = sweep(o);
  REQUIRE_FALSE(found.empty());
  for (const auto& f : found) {
    const auto r = replay(f);
    CHECK_MESSAGE(r.match, r.detail);
    CHECK(r.recomputed == f);
  }

  Finding tampered = found.front();
  tampered.image_size += 1;
  CHECK_FALSE(replay(tampered).match);
  tampered = found.front();
  tampered.weakly_chiral = !tampered.weakly_chiral;
  CHECK_FALSE(replay(tampered).match);
  tampered = found.front();
  tampered.chiral = true;
  tampered.chiral_witness = 0;
  CHECK_FALSE(replay(tampered).match);

  Finding unknown = found.front();
  unknown.group = "Z7";
  CHECK_THROWS_AS(replay(unknown), ParseError);
  Finding bad_word = found.front();
  bad_word.word = "x1 ?";
  CHECK_THROWS_AS(replay(bad_word), ParseError);
}
