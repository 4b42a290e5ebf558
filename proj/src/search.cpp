#include "wordmaps/search.hpp"

#include <algorithm>
#include <chrono>
#include <memory>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace wordmaps {

namespace {

bool matches_filter(const std::string& spec, const std::vector<std::string>& filter) {
  if (filter.empty()) return true;
  const bool product = spec.find('x') != std::string::npos;
  for (const auto& f : filter) {
    if (f == spec) return true;
    if (f == "products" && product) return true;
    if (f.size() == 1 && !product && spec[0] == f[0]) return true;
  }
  return false;
}

}  // namespace

std::vector<Word> search_words(int rank, int max_len) {
  std::vector<Word> out;
  for (auto& w : enumerate_canonical_words(rank, max_len)) {
    if (w.syllables().size() <= 1) continue;  // identity or x1^k
    out.push_back(std::move(w));
  }
  return out;
}

std::vector<std::string> search_groups(const SearchOptions& o) {
  std::vector<std::string> out;
  for (const auto& spec : catalog_specs(o.max_order)) {
    if (!matches_filter(spec, o.families)) continue;
    if (is_abelian(parse_group_spec(spec))) continue;
    out.push_back(spec);
  }
  return out;
}

Finding evaluate_pair(const FiniteGroup& g, const std::string& spec, const Word& w,
                      const std::vector<GroupMap>* automorphisms, const EngineOptions& engine) {
  const int arity = default_arity(w);
  const ChiralityReport rep = automorphisms ? check_all_gammas(g, w, arity, *automorphisms, engine)
                                            : check_all_gammas(g, w, arity, {}, engine);
  Finding f;
  f.group = spec;
  f.word = rep.word;
  f.arity = arity;
  f.chiral = rep.chiral.value_or(false);
  f.weakly_chiral = rep.weakly_chiral.value_or(false);
  if (automorphisms) f.gamma_agree = rep.all_gamma_agree;
  f.chiral_witness = rep.chiral_witness;
  f.weak_witness = rep.weak_witness;
  f.image_size = rep.members.size();
  f.evaluations = rep.evaluations;
  return f;
}

SearchSummary search_chiral(const SearchOptions& o, const std::function<void(const Finding&)>& sink) {
  const auto start = std::chrono::steady_clock::now();
  const auto words = search_words(o.rank, o.max_len);
  const auto specs = search_groups(o);

  struct Entry {
    std::string spec;
    FiniteGroup group;
    std::vector<GroupMap> autos;
    bool have_autos = false;
  };
  std::vector<std::unique_ptr<Entry>> groups;
  for (const auto& spec : specs) {
    auto e = std::make_unique<Entry>(Entry{spec, parse_group_spec(spec), {}, false});
    try {
      e->autos = enumerate_automorphisms(e->group, o.auto_cap);
      e->have_autos = true;
    } catch (const BudgetExceeded&) {
      // gamma agreement is then left unset
    }
    groups.push_back(std::move(e));
  }

  const std::size_t total = words.size() * groups.size();
  std::vector<Finding> results(total);
  const EngineOptions engine{o.budget, 1};
#ifdef _OPENMP
  const int threads = o.threads > 0 ? o.threads : omp_get_max_threads();
#else
  const int threads = 1;
#endif

  // Results land in a slot per pair and are emitted in pair order afterwards.
#pragma omp parallel for schedule(dynamic) num_threads(threads)
  for (std::int64_t c = 0; c < static_cast<std::int64_t>(total); ++c) {
    const auto ci = static_cast<std::size_t>(c);
    const Word& w = words[ci / groups.size()];
    const Entry& e = *groups[ci % groups.size()];
    try {
      results[ci] = evaluate_pair(e.group, e.spec, w, e.have_autos ? &e.autos : nullptr, engine);
    } catch (const BudgetExceeded& ex) {
      Finding f;
      f.group = e.spec;
      f.word = to_string(w);
      f.arity = default_arity(w);
      f.skipped = ex.what();
      results[ci] = std::move(f);
    }
  }

  SearchSummary s;
  s.words = words.size();
  s.groups = groups.size();
  s.pairs = total;
  for (const auto& f : results) {
    if (f.skipped) ++s.skipped;
    if (f.positive() && f.chiral) ++s.chiral;
    if (f.positive() && f.weakly_chiral) ++s.weakly_chiral;
    if (f.highlight()) ++s.highlighted;
    if (o.full || f.positive() || f.skipped) {
      ++s.emitted;
      sink(f);
    }
  }
  s.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return s;
}

ReplayResult replay(const Finding& record, const EngineOptions& engine, std::size_t auto_cap) {
  if (record.arity < 1) throw ParseError("record has invalid arity");
  FiniteGroup g = [&] {
    try {
      return parse_group_spec(record.group);
    } catch (const ParseError& e) {
      throw ParseError("record references unknown group spec '" + record.group + "': " + e.what());
    }
  }();
  const Word w = parse_word(record.word, std::max(record.arity, parse_word(record.word).rank()));
  if (record.arity != default_arity(w)) throw ParseError("record arity does not match its word");

  ReplayResult out;
  std::vector<GroupMap> autos;
  const bool with_autos = record.gamma_agree.has_value();
  if (with_autos) autos = enumerate_automorphisms(g, auto_cap);
  out.recomputed = evaluate_pair(g, record.group, w, with_autos ? &autos : nullptr, engine);
  out.recomputed.word = record.word;
  if (record.skipped) {
    out.match = false;
    out.detail = "record was skipped: " + *record.skipped;
    return out;
  }

  // Witnesses must also re-verify directly against the recomputed sets.
  const auto r = image(g, w, record.arity, engine);
  std::string why;
  if (record.chiral_witness) {
    const Element x = *record.chiral_witness;
    if (x >= g.order() || !r.image.members.contains(x) || r.image.members.contains(g.inv(x))) {
      why += " chiral witness does not re-verify;";
    }
  }
  if (out.recomputed.chiral != record.chiral) why += " chiral verdict differs;";
  if (out.recomputed.weakly_chiral != record.weakly_chiral) why += " weak verdict differs;";
  if (out.recomputed.gamma_agree != record.gamma_agree) why += " gamma agreement differs;";
  if (out.recomputed.chiral_witness != record.chiral_witness) why += " chiral witness differs;";
  if (out.recomputed.weak_witness != record.weak_witness) why += " weak witness differs;";
  if (out.recomputed.image_size != record.image_size) why += " image size differs;";
  if (out.recomputed.evaluations != record.evaluations) why += " evaluation count differs;";
  out.match = why.empty();
  out.detail = out.match ? "ok" : why.substr(1);
  return out;
}

}  // namespace wordmaps
