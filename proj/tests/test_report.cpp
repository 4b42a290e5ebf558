#include <doctest.h>

#include "wordmaps/report.hpp"

using namespace wordmaps;

TEST_CASE("finding round trip") {
  Finding f;
  f.group = "S3";
  f.word = "x1^2*x2";
  f.arity = 2;
  f.weakly_chiral = true;
  f.gamma_agree = true;
  f.weak_witness = 3;
  f.image_size = 4;
  f.evaluations = 36;
  CHECK(finding_from_json(to_json(f)) == f);
  CHECK(parse_finding(to_json(f).dump()) == f);

  Finding s;
  s.group = "S5";
  s.word = "x1*x2";
  s.arity = 2;
  s.skipped = "budget";
  CHECK(parse_finding(to_json(s).dump()) == s);
}

TEST_CASE("parse_finding rejects malformed lines") {
  CHECK_THROWS_AS(parse_finding("{"), ParseError);
  CHECK_THROWS_AS(parse_finding("[]"), ParseError);
  CHECK_THROWS_AS(parse_finding(R"({"group":"S3"})"), ParseError);
  CHECK_THROWS_AS(parse_finding(R"({"group":3,"word":"x1","arity":1})"), ParseError);
}

TEST_CASE("timing is excluded from digests") {
  Json a = {{"x", 1}, {"wall_ms", 3.5}, {"nested", {{"wall_ms", 1.0}, {"y", {1, 2}}}}};
  Json b = a;
  b["wall_ms"] = 99.0;
  b["nested"]["wall_ms"] = 0.0;
  CHECK(stable_digest(a) == stable_digest(b));
  CHECK(stable_digest(a).size() == 16);
  CHECK_FALSE(strip_timing(a).contains("wall_ms"));
  CHECK_FALSE(strip_timing(a)["nested"].contains("wall_ms"));
  b["x"] = 2;
  CHECK(stable_digest(a) != stable_digest(b));
  // FNV-1a 64 of the empty object dump "{}"
  CHECK(stable_digest(Json::object()) == "08f44b07b5901a25");
}

TEST_CASE("chirality report rendering") {
  const auto g = symmetric_group(3);
  const Word w = parse_word("x1 x2 x1^-1 x2^-1", 2);
  const auto r = check_all_gammas(g, w, 2, enumerate_automorphisms(g));
  const Json j = to_json(r);
  CHECK(j["group"]["order"] == 6);
  CHECK(j["members"].size() == 3);
  const auto text = render_human(r, g, true);
  CHECK(text.find("image (3):") != std::string::npos);
  CHECK(text.find("chiral: no") != std::string::npos);
}

TEST_CASE("verification report JSON") {
  VerificationReport r;
  r.suite = "lemma1";
  r.cases = 2;
  r.checks = 5;
  const Json j = to_json(r);
  CHECK(j["passed"] == true);
  CHECK(render_human(r).find("PASS") != std::string::npos);
  r.failures.push_back({"lemma1", "c", "S3", "x1", 1, "", "d"});
  CHECK(to_json(r)["passed"] == false);
}
