// wordmaps: word-map images, chirality checks, verification suites, search.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include <CLI11.hpp>

#include "wordmaps/engine.hpp"
#include "wordmaps/group.hpp"
#include "wordmaps/report.hpp"
#include "wordmaps/search.hpp"
#include "wordmaps/verifier.hpp"
#include "wordmaps/word.hpp"

using namespace wordmaps;

namespace {

enum ExitCode { kOk = 0, kFailed = 1, kUsage = 2, kBudget = 3 };

struct Globals {
  std::string format = "human";
  int threads = 0;
  std::uint64_t budget = kDefaultTupleBudget;
  std::size_t auto_cap = kDefaultAutomorphismCap;
  bool digest = false;

  bool structured() const { return format == "structured"; }
  EngineOptions engine() const { return {budget, threads}; }
};

int emit(const Globals& g, const Json& doc, const std::string& human) {
  if (g.digest) {
    std::cout << stable_digest(doc) << '\n';
  } else if (g.structured()) {
    std::cout << doc.dump(2) << '\n';
  } else {
    std::cout << human;
  }
  return kOk;
}

Word read_word(const std::string& text, int rank) { return rank > 0 ? parse_word(text, rank) : parse_word(text); }

// ---------------------------------------------------------------------------

int cmd_group_list(const Globals& g, std::size_t max_order) {
  Json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["kind"] = "catalog";
  auto groups = Json::array();
  std::ostringstream human;
  for (const auto& spec : catalog_specs(max_order)) {
    const auto grp = parse_group_spec(spec);
    groups.push_back({{"spec", spec}, {"order", grp.order()}, {"abelian", is_abelian(grp)}});
    human << spec << "\torder " << grp.order() << (is_abelian(grp) ? "\tabelian" : "") << '\n';
  }
  doc["groups"] = std::move(groups);
  return emit(g, doc, human.str());
}

int cmd_group_show(const Globals& g, const std::string& spec) {
  const auto grp = parse_group_spec(spec);
  std::ostringstream human;
  human << grp.name() << "  order " << grp.order() << (is_abelian(grp) ? "  abelian" : "") << '\n';
  const auto orders = element_orders(grp);
  for (Element a = 0; a < grp.order(); ++a) {
    human << a << " [" << grp.label(a) << "] order " << orders[a] << ":";
    for (Element b : grp.row(a)) human << ' ' << b;
    human << '\n';
  }
  return emit(g, to_json(grp, true), human.str());
}

int cmd_group_autos(const Globals& g, const std::string& spec) {
  const auto grp = parse_group_spec(spec);
  const auto autos = enumerate_automorphisms(grp, g.auto_cap);
  Json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["kind"] = "automorphisms";
  doc["group"] = {{"name", grp.name()}, {"order", grp.order()}};
  doc["count"] = autos.size();
  auto maps = Json::array();
  std::ostringstream human;
  human << grp.name() << ": " << autos.size() << " automorphisms (each gives the anti-automorphism x -> zeta(x^-1))\n";
  for (std::size_t k = 0; k < autos.size(); ++k) {
    const auto anti = anti_from_auto(autos[k]);
    maps.push_back({{"index", k}, {"kind", "automorphism"}, {"images", autos[k].images}, {"anti_images", anti.images}});
    human << "auto#" << k << ':';
    for (Element x : autos[k].images) human << ' ' << x;
    human << '\n';
  }
  doc["maps"] = std::move(maps);
  return emit(g, doc, human.str());
}

int cmd_image(const Globals& g, const std::string& spec, const std::string& text, int rank, int arity, bool fibers) {
  const auto grp = parse_group_spec(spec);
  const Word w = read_word(text, rank);
  const int d = arity > 0 ? arity : default_arity(w);
  const auto start = std::chrono::steady_clock::now();
  const auto r = image(grp, w, d, g.engine());
  ChiralityReport rep;
  rep.group_name = grp.name();
  rep.group_order = grp.order();
  rep.word = to_string(w);
  rep.arity = d;
  rep.members = r.image.members.members();
  rep.counts = r.fibers.counts;
  rep.evaluations = r.evaluations;
  rep.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  Json doc = to_json(rep, fibers);
  doc["kind"] = "image";
  return emit(g, doc, render_human(rep, grp, fibers));
}

int cmd_chiral(const Globals& g, bool weak, const std::string& spec, const std::string& text, int rank, int arity,
               const std::string& gamma) {
  const auto grp = parse_group_spec(spec);
  const Word w = read_word(text, rank);
  const int d = arity > 0 ? arity : default_arity(w);
  ChiralityReport rep;
  if (gamma.empty()) {
    rep = check_all_gammas(grp, w, d, enumerate_automorphisms(grp, g.auto_cap), g.engine());
  } else {
    GroupMap anti;
    std::string label = "inv";
    if (gamma == "inv") {
      anti = anti_from_auto(identity_map(grp));
    } else {
      std::size_t k = 0;
      try {
        std::size_t used = 0;
        k = std::stoul(gamma, &used);
        if (used != gamma.size()) throw std::invalid_argument("trailing");
      } catch (const std::exception&) {
        throw ParseError("--gamma expects 'inv' or an automorphism index, got '" + gamma + "'");
      }
      const auto autos = enumerate_automorphisms(grp, g.auto_cap);
      if (k >= autos.size()) {
        throw InvalidArgument("--gamma " + gamma + ": only " + std::to_string(autos.size()) + " automorphisms");
      }
      anti = anti_from_auto(autos[k]);
      label = "auto#" + std::to_string(k);
    }
    rep = weak ? is_weakly_chiral_pair(grp, w, d, anti, g.engine()) : is_gamma_chiral_pair(grp, w, d, anti, g.engine());
    rep.gammas.back().gamma = label;
  }
  return emit(g, to_json(rep, weak), render_human(rep, grp, weak));
}

int cmd_verify(const Globals& g, const std::string& suite, VerifyBounds b) {
  b.threads = g.threads;
  b.budget = g.budget;
  b.auto_cap = g.auto_cap;
  VerificationReport rep;
  if (suite == "lemma1") rep = verify_lemma(b);
  else if (suite == "thm1") rep = verify_theorem1(b);
  else if (suite == "thm2") rep = verify_theorem2(b);
  else if (suite == "remark") rep = verify_remark(b);
  else rep = run_all(b);
  emit(g, to_json(rep), render_human(rep));
  return rep.passed() ? kOk : kFailed;
}

int cmd_search(const Globals& g, SearchOptions o, const std::string& out_path) {
  o.threads = g.threads;
  o.budget = g.budget;
  o.auto_cap = g.auto_cap;
  std::unique_ptr<std::ofstream> file;
  if (!out_path.empty()) {
    file = std::make_unique<std::ofstream>(out_path);
    if (!*file) throw ParseError("cannot write '" + out_path + "'");
  }
  std::ostream& out = file ? *file : std::cout;
  std::ostringstream all;
  const auto summary = search_chiral(o, [&](const Finding& f) {
    const std::string line = to_json(f).dump();
    all << line << '\n';
    if (!g.digest) out << line << '\n';
  });
  if (g.digest) std::cout << stable_digest_of_lines(all.str()) << '\n';
  std::cerr << "search: " << summary.words << " words x " << summary.groups << " groups = " << summary.pairs
            << " pairs; emitted " << summary.emitted << ", chiral " << summary.chiral << ", weakly chiral "
            << summary.weakly_chiral << ", highlighted " << summary.highlighted << ", skipped " << summary.skipped
            << " (" << summary.wall_ms << " ms)\n";
  return kOk;
}

int cmd_replay(const Globals& g, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::string line;
  std::size_t n = 0, bad = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    ++n;
    const Finding f = parse_finding(line);
    const auto r = replay(f, g.engine(), g.auto_cap);
    if (!r.match) {
      ++bad;
      std::cout << "MISMATCH line " << n << " (" << f.group << ", " << f.word << "): " << r.detail << '\n';
    }
  }
  std::cout << "replayed " << n << " records, " << bad << " mismatches\n";
  return bad == 0 ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Word maps on finite groups: images, fibers, chirality, verification suites and search"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  if (const char* env = std::getenv("WORDMAPS_THREADS")) g.threads = std::atoi(env);
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"human", "structured"}));
  app.add_option("--threads", g.threads, "Worker threads (default: $WORDMAPS_THREADS or all cores)");
  app.add_option("--budget", g.budget, "Max |G|^d tuples per image computation");
  app.add_option("--auto-cap", g.auto_cap, "Max group order for automorphism enumeration");
  app.add_flag("--digest", g.digest, "Print only the stable digest of the structured output");

  int exit_code = kOk;

  // group
  auto* group = app.add_subcommand("group", "Inspect the group catalog (D<n> means order n: D6 is S3)");
  group->require_subcommand(1);
  std::size_t list_max = 32;
  auto* glist = group->add_subcommand("list", "List catalog groups");
  glist->add_option("--max-order", list_max, "Largest order listed");
  glist->callback([&] { exit_code = cmd_group_list(g, list_max); });
  std::string show_spec, autos_spec;
  auto* gshow = group->add_subcommand("show", "Print a Cayley table");
  gshow->add_option("spec", show_spec, "Group spec: C<n>, D<n>, Q8, S<n>, A<n>, products with x, @file")->required();
  gshow->callback([&] { exit_code = cmd_group_show(g, show_spec); });
  auto* gautos = group->add_subcommand("autos", "Enumerate automorphisms");
  gautos->add_option("spec", autos_spec, "Group spec")->required();
  gautos->callback([&] { exit_code = cmd_group_autos(g, autos_spec); });

  // image
  std::string spec, word_text, gamma;
  int rank = 0, arity = 0;
  bool fibers = false;
  auto* img = app.add_subcommand("image", "Compute the image (and fibers) of a word map");
  img->add_option("--group", spec, "Group spec")->required();
  img->add_option("--word", word_text, "Word, e.g. \"x1 x2 x1^-1 x2^-1\"")->required();
  img->add_option("--rank", rank, "Free group rank (default: largest generator used)");
  img->add_option("--arity", arity, "Tuple arity d (default: largest generator used)");
  img->add_flag("--fibers", fibers, "Include fiber counts");
  img->callback([&] { exit_code = cmd_image(g, spec, word_text, rank, arity, fibers); });

  auto add_chiral = [&](const char* name, bool weak, const char* help) {
    auto* c = app.add_subcommand(name, help);
    c->add_option("--group", spec, "Group spec")->required();
    c->add_option("--word", word_text, "Word")->required();
    c->add_option("--rank", rank, "Free group rank");
    c->add_option("--arity", arity, "Tuple arity d");
    c->add_option("--gamma", gamma, "'inv' or k (anti-automorphism of the k-th automorphism); omit to check all");
    c->callback([&, weak] { exit_code = cmd_chiral(g, weak, spec, word_text, rank, arity, gamma); });
  };
  add_chiral("chiral", false, "Decide (gamma-)chirality of a (group, word) pair");
  add_chiral("weak-chiral", true, "Decide weak gamma-chirality of a (group, word) pair");

  // verify
  VerifyBounds bounds;
  std::string suite = "all";
  auto* ver = app.add_subcommand("verify", "Run verification suites (exit 1 on any failure)");
  ver->add_option("suite", suite, "lemma1 | thm1 | thm2 | remark | all")
      ->check(CLI::IsMember({"lemma1", "thm1", "thm2", "remark", "all"}));
  ver->add_option("--max-order", bounds.max_order, "Largest catalog group order");
  ver->add_option("--max-len", bounds.max_len, "Largest word length");
  ver->add_option("--rank", bounds.rank, "Free group rank");
  ver->add_option("--theta-samples", bounds.theta_samples, "Sampled automorphisms of F_d per word");
  ver->add_option("--gamma-samples", bounds.gamma_samples, "Sampled anti-automorphisms of F_d per word");
  ver->add_option("--theta-length", bounds.theta_length, "Nielsen moves per sample");
  ver->add_option("--seed", bounds.seed, "Sampling seed");
  ver->add_option("--groups", bounds.groups, "Explicit group specs instead of the catalog");
  ver->callback([&] { exit_code = cmd_verify(g, suite, bounds); });

  // search
  SearchOptions sopt;
  std::string out_path;
  std::string verbosity = "positives";
  auto* srch = app.add_subcommand("search", "Sweep words x groups for chiral and weakly chiral pairs (JSON lines)");
  srch->add_option("--rank", sopt.rank, "Free group rank");
  srch->add_option("--max-len", sopt.max_len, "Largest word length");
  srch->add_option("--max-order", sopt.max_order, "Largest group order");
  srch->add_option("--families", sopt.families, "Group specs, family letters, or 'products'");
  srch->add_option("--out", out_path, "Output file (default stdout)");
  srch->add_option("--verbosity", verbosity, "positives | full")->check(CLI::IsMember({"positives", "full"}));
  srch->callback([&] {
    sopt.full = verbosity == "full";
    exit_code = cmd_search(g, sopt, out_path);
  });

  // replay
  std::string replay_path;
  auto* rep = app.add_subcommand("replay", "Recompute every record of a findings file");
  rep->add_option("file", replay_path, "Findings file")->required();
  rep->callback([&] { exit_code = cmd_replay(g, replay_path); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return kBudget;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return exit_code;
}
