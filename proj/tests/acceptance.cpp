// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "wordmaps/report.hpp"
#include "wordmaps/search.hpp"
#include "wordmaps/verifier.hpp"

using namespace wordmaps;

namespace {

using Clock = std::chrono::steady_clock;

int failures = 0;

void report(const char* id, const char* title, bool ok, const std::string& detail, Clock::time_point start) {
  const double s = std::chrono::duration<double>(Clock::now() - start).count();
  std::printf("%s %-4s %-34s %s (%.1fs)\n", ok ? "PASS" : "FAIL", id, title, detail.c_str(), s);
  std::fflush(stdout);
  if (!ok) ++failures;
}

VerifyBounds grid() {
  VerifyBounds b;
  b.max_order = 16;
  b.max_len = 4;
  b.rank = 2;
  b.theta_samples = 5;
  b.gamma_samples = 10;
  return b;
}

const std::vector<std::string> kRequiredSmall{
    "C1",  "C2",  "C3",  "C4",  "C5",  "C6",  "C7", "C8", "C9", "C10", "C11", "C12", "C13", "C14",
    "C15", "C16", "C2xC2", "C2xC4", "C2xC2xC2", "D4", "D6", "D8", "D10", "D12", "D14", "D16", "Q8", "S3", "A4"};

void suite(const char* id, const char* title, VerificationReport (*fn)(const VerifyBounds&)) {
  const auto t0 = Clock::now();
  const auto b = grid();
  const auto catalog = catalog_specs(b.max_order);
  const std::set<std::string> have(catalog.begin(), catalog.end());
  bool covered = true;
  for (const auto& s : kRequiredSmall) covered = covered && have.count(s);
  const auto r = fn(b);
  std::ostringstream os;
  os << "groups=" << catalog.size() << " cases=" << r.cases << " checks=" << r.checks
     << " failures=" << r.failures.size() + r.failures_dropped << " skipped=" << r.skipped.size();
  if (!covered) os << " (catalog incomplete)";
  report(id, title, r.passed() && covered && r.skipped.empty(), os.str(), t0);
}

void ac5() {
  const auto t0 = Clock::now();
  std::vector<std::string> specs;
  for (const auto& s : catalog_specs(24)) specs.push_back(s);
  std::mt19937_64 rng(20240501);
  int cases = 0, bad = 0;
  for (; cases < 200; ++cases) {
    const auto g = parse_group_spec(specs[rng() % specs.size()]);
    const int d = 1 + static_cast<int>(rng() % 2);
    const Word w = oracle::random_word(rng, d, 6);
    const auto ref = naive_image(g, w, d);
    for (int threads : {1, 2, 8}) {
      const auto fast = image(g, w, d, {kDefaultTupleBudget, threads});
      if (!(fast.image.members == ref.image.members) || fast.fibers.counts != ref.fibers.counts) ++bad;
    }
  }
  report("AC5", "oracle equivalence", bad == 0,
         "cases=" + std::to_string(cases) + " threads={1,2,8} mismatches=" + std::to_string(bad), t0);
}

void ac6() {
  const auto t0 = Clock::now();
  const auto words = enumerate_canonical_words(2, 5);
  int groups = 0, pairs = 0, bad = 0;
  for (const auto& spec : catalog_specs(32)) {
    const auto g = parse_group_spec(spec);
    if (!is_abelian(g)) continue;
    ++groups;
    const auto inv = anti_from_auto(identity_map(g));
    for (const auto& w : words) {
      ++pairs;
      const auto c = is_chiral_pair(g, w, 2);
      const auto k = is_weakly_chiral_pair(g, w, 2, inv);
      if (*c.chiral || *k.weakly_chiral) ++bad;
    }
  }
  report("AC6", "abelian achirality", bad == 0 && groups > 0,
         "groups=" + std::to_string(groups) + " pairs=" + std::to_string(pairs) + " exceptions=" + std::to_string(bad),
         t0);
}

void ac7() {
  const auto t0 = Clock::now();
  constexpr int kCases = 1000;
  std::mt19937_64 rng(77);
  int bad = 0;
  for (int i = 0; i < kCases; ++i) {
    const int d = 1 + static_cast<int>(rng() % 3);
    const Word a = oracle::random_word(rng, d, 12), b = oracle::random_word(rng, d, 12);
    // reduce idempotence, checked against letter cancellation too
    std::vector<int> raw(rng() % 16);
    for (int& l : raw) l = static_cast<int>(rng() % static_cast<std::uint64_t>(2 * d));
    std::vector<Syllable> syl;
    for (int l : raw) syl.push_back({l / 2 + 1, (l & 1) ? -1 : 1});
    const Word r = Word::reduce(d, syl);
    if (!(Word::reduce(d, r.syllables()) == r) || letters(r) != oracle::reduce_letters(raw)) ++bad;
    // invert involution
    if (!(invert(invert(a)) == a)) ++bad;
    // concat/invert identity
    if (!concat(a, invert(a)).is_identity() || !(invert(concat(a, b)) == concat(invert(b), invert(a)))) ++bad;
    // anti-homomorphism of apply_anti
    const FreeAntiAuto gamma(random_automorphism(d, 6, rng()));
    if (!(apply_anti(concat(a, b), gamma) == concat(apply_anti(b, gamma), apply_anti(a, gamma)))) ++bad;
    // Nielsen round trip
    const auto theta = random_automorphism(d, 1 + static_cast<int>(rng() % 8), rng());
    if (!(substitute(substitute(a, theta), theta.inverse()) == a)) ++bad;
  }
  int count_bad = 0;
  for (int d = 1; d <= 3; ++d) {
    for (int len = 0; len <= 6; ++len) {
      const auto n = enumerate_words(d, len).size();
      const bool ok = n == oracle::reduced_word_count(d, len) && n == oracle::generate_and_reduce(d, len).size();
      if (!ok) ++count_bad;
    }
  }
  report("AC7", "word-core properties", bad == 0 && count_bad == 0,
         "cases=" + std::to_string(kCases) + "x5 violations=" + std::to_string(bad) +
             " count mismatches=" + std::to_string(count_bad) + "/21",
         t0);
}

void ac8() {
  const auto t0 = Clock::now();
  std::vector<std::string> notes;
  bool ok = true;
  int families = 0;
  for (const auto& spec : catalog_specs(64)) {
    const auto g = parse_group_spec(spec);
    std::vector<Element> table;
    for (Element x = 0; x < g.order(); ++x) {
      for (Element y = 0; y < g.order(); ++y) table.push_back(g.mul(x, y));
    }
    if (validate_group(g.order(), table)) {
      ok = false;
      notes.push_back("rejected " + spec);
    }
    ++families;
  }
  const auto c8 = cyclic_group(8);
  std::mt19937_64 rng(8);
  int rejected = 0;
  for (int i = 0; i < 50; ++i) {
    std::vector<Element> table;
    for (Element x = 0; x < 8; ++x) {
      for (Element y = 0; y < 8; ++y) table.push_back(c8.mul(x, y));
    }
    const std::size_t at = rng() % table.size();
    table[at] = static_cast<Element>((table[at] + 1 + rng() % 7) % 8);
    if (validate_group(8, table)) ++rejected;
  }
  if (rejected != 50) ok = false;
  std::string counts;
  for (auto [spec, expected] : std::vector<std::pair<std::string, std::size_t>>{{"C4", 2}, {"C2xC2", 6}, {"S3", 6}}) {
    const auto g = parse_group_spec(spec);
    const auto fast = enumerate_automorphisms(g).size();
    const auto slow = oracle::count_automorphisms_naive(g);
    counts += " |Aut(" + spec + ")|=" + std::to_string(fast);
    if (fast != expected || slow != expected) ok = false;
  }
  std::size_t maps = 0;
  for (const auto& spec : catalog_specs(16)) {
    const auto g = parse_group_spec(spec);
    for (const auto& z : enumerate_automorphisms(g)) {
      const auto a = anti_from_auto(z);
      ++maps;
      if (!satisfies_law(g, a.images, MapKind::kAntiAutomorphism) || a.kind != MapKind::kAntiAutomorphism || !(auto_from_anti(a) == z)) ok = false;
    }
  }
  report("AC8", "group-core correctness", ok,
         "families=" + std::to_string(families) + " corruptions rejected=" + std::to_string(rejected) + "/50" + counts +
             " round-trips=" + std::to_string(maps),
         t0);
}

std::string search_digest(const SearchOptions& o) {
  std::string text;
  search_chiral(o, [&](const Finding& f) { text += to_json(f).dump() + "\n"; });
  return stable_digest_of_lines(text);
}

void ac9() {
  const auto t0 = Clock::now();
  std::set<std::string> verify, search;
  SearchOptions so;
  so.max_len = 5;
  so.max_order = 24;
  so.full = true;
  for (int threads : {1, 2, 8}) {
    VerifyBounds b;
    b.threads = threads;
    verify.insert(stable_digest(to_json(run_all(b))));
    so.threads = threads;
    search.insert(search_digest(so));
  }
  report("AC9", "determinism", verify.size() == 1 && search.size() == 1,
         "verify digests=" + std::to_string(verify.size()) + " (" + *verify.begin() + ") search digests=" +
             std::to_string(search.size()) + " (" + *search.begin() + ")",
         t0);
}

void ac10() {
  const auto t0 = Clock::now();
  SearchOptions o;
  o.rank = 2;
  o.max_len = 6;
  o.max_order = 24;
  o.full = true;
  std::vector<Finding> found;
  const auto summary = search_chiral(o, [&](const Finding& f) { found.push_back(f); });
  const double sweep_s = std::chrono::duration<double>(Clock::now() - t0).count();
  int replayed = 0, mismatched = 0, witnesses = 0, bad_witness = 0;
  for (const auto& f : found) {
    const auto r = replay(f);
    ++replayed;
    if (!r.match) {
      ++mismatched;
      std::printf("  replay mismatch %s %s: %s\n", f.group.c_str(), f.word.c_str(), r.detail.c_str());
    }
    if (f.chiral && f.chiral_witness) {
      ++witnesses;
      const auto g = parse_group_spec(f.group);
      const auto gw = image(g, parse_word(f.word, o.rank), f.arity).image.members;
      if (!gw.contains(*f.chiral_witness) || gw.contains(g.inv(*f.chiral_witness))) ++bad_witness;
    }
  }
  std::ostringstream os;
  os << "words=" << summary.words << " groups=" << summary.groups << " pairs=" << summary.pairs
     << " emitted=" << found.size() << " chiral=" << summary.chiral << " weak=" << summary.weakly_chiral
     << " highlighted=" << summary.highlighted << " skipped=" << summary.skipped << " replayed=" << replayed
     << " mismatches=" << mismatched << " witnesses=" << witnesses << " sweep=" << sweep_s << "s";
  report("AC10", "search replay", mismatched == 0 && bad_witness == 0 && summary.skipped == 0 && sweep_s < 1800,
         os.str(), t0);
}

}  // namespace

int main() {
  suite("AC1", "image invariance", &verify_lemma);
  suite("AC2", "free anti-automorphisms", &verify_theorem1);
  suite("AC3", "group anti-automorphisms", &verify_theorem2);
  suite("AC4", "weak chirality independence", &verify_remark);
  ac5();
  ac6();
  ac7();
  ac8();
  ac9();
  ac10();
  std::printf("%s: %d criteria failed\n", failures == 0 ? "ALL PASS" : "FAILED", failures);
  return failures == 0 ? 0 : 1;
}
