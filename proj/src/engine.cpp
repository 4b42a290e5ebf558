#include "wordmaps/engine.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <map>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace wordmaps {

std::size_t ElementSet::size() const {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), std::uint8_t{1}));
}

std::vector<Element> ElementSet::members() const {
  std::vector<Element> out;
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i]) out.push_back(static_cast<Element>(i));
  }
  return out;
}

std::uint64_t FiberDistribution::total() const {
  std::uint64_t t = 0;
  for (auto c : counts) t += c;
  return t;
}

int default_arity(const Word& w) { return std::max(1, w.max_generator()); }

std::uint64_t tuple_count(std::size_t order, int arity) {
  std::uint64_t t = 1;
  for (int i = 0; i < arity; ++i) {
    if (order != 0 && t > std::numeric_limits<std::uint64_t>::max() / order) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    t *= order;
  }
  return t;
}

namespace {

void check_arity(const Word& w, int arity) {
  if (arity < 1 || arity < w.max_generator()) {
    throw InvalidArgument("arity " + std::to_string(arity) + " too small for word using x" +
                          std::to_string(w.max_generator()));
  }
}

std::uint64_t check_budget(const FiniteGroup& g, int arity, std::uint64_t budget) {
  const std::uint64_t tuples = tuple_count(g.order(), arity);
  if (tuples > budget) {
    throw BudgetExceeded("|G|^d = " + std::to_string(g.order()) + "^" + std::to_string(arity) +
                         " exceeds the tuple budget " + std::to_string(budget) + "; lower the arity or group order");
  }
  return tuples;
}

void check_anti(const FiniteGroup& g, const GroupMap& gamma) {
  if (gamma.kind != MapKind::kAntiAutomorphism) throw InvalidArgument("expected an anti-automorphism");
  if ((gamma.group != nullptr && gamma.group != &g) || gamma.images.size() != g.order()) {
    throw InvalidArgument("map belongs to a different group");
  }
}

ImageResult make_result(const FiniteGroup& g, const Word& w, int arity, std::vector<std::uint64_t> counts) {
  ImageResult r;
  r.image.group = &g;
  r.image.members = ElementSet(g.order());
  for (std::size_t x = 0; x < counts.size(); ++x) {
    if (counts[x]) r.image.members.insert(static_cast<Element>(x));
  }
  r.image.word = w;
  r.image.arity = arity;
  r.fibers.group = &g;
  r.fibers.word = w;
  r.fibers.arity = arity;
  r.evaluations = tuple_count(g.order(), arity);
  r.fibers.counts = std::move(counts);
  return r;
}

int resolve_threads(int requested) {
#ifdef _OPENMP
  return requested > 0 ? requested : omp_get_max_threads();
#else
  (void)requested;
  return 1;
#endif
}

}  // namespace

Element evaluate(const FiniteGroup& g, const Word& w, std::span<const Element> tuple) {
  for (Element x : tuple) {
    if (x >= g.order()) throw InvalidArgument("tuple element " + std::to_string(x) + " out of range");
  }
  Element acc = FiniteGroup::identity();
  for (const auto& s : w.syllables()) {
    if (static_cast<std::size_t>(s.generator) > tuple.size()) {
      throw InvalidArgument("tuple too short for generator x" + std::to_string(s.generator));
    }
    acc = g.mul(acc, g.pow(tuple[static_cast<std::size_t>(s.generator - 1)], s.exponent));
  }
  return acc;
}

Element evaluate_twisted(const FiniteGroup& g, const Word& w, const GroupMap& gamma, std::span<const Element> tuple) {
  check_anti(g, gamma);
  return gamma(evaluate(g, w, tuple));
}

ImageResult image(const FiniteGroup& g, const Word& w, int arity, const EngineOptions& options) {
  check_arity(w, arity);
  check_budget(g, arity, options.budget);
  const std::size_t n = g.order();
  const auto& syl = w.syllables();
  const std::size_t len = syl.size();

  // One power table per distinct exponent; syllable j maps coordinate
  // coord[j] through power[j].
  std::map<int, std::vector<Element>> tables;
  for (const auto& s : syl) {
    auto& t = tables[s.exponent];
    if (t.empty()) {
      t.resize(n);
      for (Element x = 0; x < n; ++x) t[x] = g.pow(x, s.exponent);
    }
  }
  std::vector<const Element*> power(len);
  std::vector<std::size_t> coord(len);
  for (std::size_t j = 0; j < len; ++j) {
    power[j] = tables.at(syl[j].exponent).data();
    coord[j] = static_cast<std::size_t>(syl[j].generator - 1);
  }
  // restart[k]: first syllable reading a coordinate >= k. Prefix products
  // before it only depend on coordinates < k.
  const auto d = static_cast<std::size_t>(arity);
  std::vector<std::size_t> restart(d + 1, len);
  for (std::size_t k = 0; k <= d; ++k) {
    for (std::size_t j = 0; j < len; ++j) {
      if (coord[j] >= k) {
        restart[k] = j;
        break;
      }
    }
  }

  std::vector<std::uint64_t> counts(n, 0);
  const int threads = resolve_threads(options.threads);

#pragma omp parallel num_threads(threads)
  {
    std::vector<std::uint64_t> local(n, 0);
    std::vector<Element> tuple(d, 0);
    std::vector<Element> prefix(len + 1, FiniteGroup::identity());
    auto recompute = [&](std::size_t from) {
      for (std::size_t j = from; j < len; ++j) prefix[j + 1] = g.mul(prefix[j], power[j][tuple[coord[j]]]);
    };

#pragma omp for schedule(dynamic)
    for (std::int64_t first = 0; first < static_cast<std::int64_t>(n); ++first) {
      std::fill(tuple.begin(), tuple.end(), 0);
      tuple[0] = static_cast<Element>(first);
      recompute(0);
      while (true) {
        ++local[prefix[len]];
        // Odometer step over coordinates 1..d-1, last one fastest; k ends at
        // the lowest coordinate that changed.
        std::size_t k = d - 1;
        while (k >= 1 && ++tuple[k] == n) {
          tuple[k] = 0;
          --k;
        }
        if (k == 0) break;
        recompute(restart[k]);
      }
    }

#pragma omp critical
    for (std::size_t x = 0; x < n; ++x) counts[x] += local[x];
  }
  return make_result(g, w, arity, std::move(counts));
}

ImageResult naive_image(const FiniteGroup& g, const Word& w, int arity, std::uint64_t budget) {
  check_arity(w, arity);
  const std::uint64_t tuples = check_budget(g, arity, budget);
  const std::size_t n = g.order();
  std::vector<std::uint64_t> counts(n, 0);
  std::vector<Element> tuple(static_cast<std::size_t>(arity));
  for (std::uint64_t idx = 0; idx < tuples; ++idx) {
    std::uint64_t rest = idx;
    for (std::size_t k = tuple.size(); k-- > 0;) {
      tuple[k] = static_cast<Element>(rest % n);
      rest /= n;
    }
    ++counts[evaluate(g, w, tuple)];
  }
  return make_result(g, w, arity, std::move(counts));
}

std::vector<std::uint64_t> twisted_fibers_direct(const FiniteGroup& g, const Word& w, int arity,
                                                 const GroupMap& gamma, std::uint64_t budget) {
  check_arity(w, arity);
  check_anti(g, gamma);
  const std::uint64_t tuples = check_budget(g, arity, budget);
  const std::size_t n = g.order();
  std::vector<std::uint64_t> counts(n, 0);
  std::vector<Element> tuple(static_cast<std::size_t>(arity));
  for (std::uint64_t idx = 0; idx < tuples; ++idx) {
    std::uint64_t rest = idx;
    for (std::size_t k = tuple.size(); k-- > 0;) {
      tuple[k] = static_cast<Element>(rest % n);
      rest /= n;
    }
    ++counts[evaluate_twisted(g, w, gamma, tuple)];
  }
  return counts;
}

std::vector<std::uint64_t> twisted_fibers(const FiberDistribution& fibers, const GroupMap& gamma) {
  if (gamma.images.size() != fibers.counts.size()) throw InvalidArgument("map belongs to a different group");
  std::vector<std::uint64_t> out(fibers.counts.size());
  // x = gamma(y) has fiber counts[y].
  for (std::size_t y = 0; y < out.size(); ++y) out[gamma.images[y]] = fibers.counts[y];
  return out;
}

ElementSet invert_set(const FiniteGroup& g, const ElementSet& s) {
  if (s.universe() != g.order()) throw InvalidArgument("set belongs to a different group");
  ElementSet out(s.universe());
  for (Element x = 0; x < s.universe(); ++x) {
    if (s.contains(x)) out.insert(g.inv(x));
  }
  return out;
}

ElementSet map_set(const GroupMap& m, const ElementSet& s) {
  if (s.universe() != m.images.size()) throw InvalidArgument("map_set: group mismatch");
  ElementSet out(s.universe());
  for (Element x = 0; x < s.universe(); ++x) {
    if (s.contains(x)) out.insert(m(x));
  }
  return out;
}

std::optional<Element> first_difference(const ElementSet& a, const ElementSet& b) {
  for (Element x = 0; x < a.universe(); ++x) {
    if (a.contains(x) && !b.contains(x)) return x;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

ChiralityReport base_report(const FiniteGroup& g, const Word& w, int arity, const ImageResult& r) {
  ChiralityReport rep;
  rep.group_name = g.name();
  rep.group_order = g.order();
  rep.word = to_string(w);
  rep.arity = arity;
  rep.members = r.image.members.members();
  rep.counts = r.fibers.counts;
  rep.evaluations = r.evaluations;
  return rep;
}

std::optional<Element> first_count_difference(const std::vector<std::uint64_t>& a,
                                              const std::vector<std::uint64_t>& b) {
  for (std::size_t x = 0; x < a.size(); ++x) {
    if (a[x] != b[x]) return static_cast<Element>(x);
  }
  return std::nullopt;
}

void set_chiral(ChiralityReport& rep, const ElementSet& lhs, const ElementSet& rhs) {
  rep.chiral_witness = first_difference(lhs, rhs);
  rep.chiral = rep.chiral_witness.has_value();
}

}  // namespace

ChiralityReport is_chiral_pair(const FiniteGroup& g, const Word& w, int arity, const EngineOptions& options) {
  const auto start = Clock::now();
  const auto r = image(g, w, arity, options);
  auto rep = base_report(g, w, arity, r);
  set_chiral(rep, r.image.members, invert_set(g, r.image.members));
  rep.wall_ms = elapsed_ms(start);
  return rep;
}

ChiralityReport is_gamma_chiral_pair(const FiniteGroup& g, const Word& w, int arity, const FreeAntiAuto& gamma,
                                     const EngineOptions& options) {
  const auto start = Clock::now();
  const Word gw = apply_anti(w.with_rank(std::max(w.rank(), gamma.rank())), gamma);
  const auto r = image(g, w, arity, options);
  const auto rg = image(g, gw, arity, options);
  auto rep = base_report(g, w, arity, r);
  rep.evaluations += rg.evaluations;
  GammaVerdict v;
  v.gamma = describe(gamma.theta());
  v.witness = first_difference(r.image.members, rg.image.members);
  v.chiral = v.witness.has_value();
  rep.chiral = v.chiral;
  rep.chiral_witness = v.witness;
  rep.gammas.push_back(std::move(v));
  rep.wall_ms = elapsed_ms(start);
  return rep;
}

ChiralityReport is_gamma_chiral_pair(const FiniteGroup& g, const Word& w, int arity, const GroupMap& gamma,
                                     const EngineOptions& options) {
  check_anti(g, gamma);
  const auto start = Clock::now();
  const auto r = image(g, w, arity, options);
  auto rep = base_report(g, w, arity, r);
  set_chiral(rep, r.image.members, map_set(gamma, r.image.members));
  rep.gammas.push_back({"custom", rep.chiral, rep.chiral_witness, std::nullopt, std::nullopt});
  rep.wall_ms = elapsed_ms(start);
  return rep;
}

ChiralityReport is_weakly_chiral_pair(const FiniteGroup& g, const Word& w, int arity, const GroupMap& gamma,
                                      const EngineOptions& options) {
  check_anti(g, gamma);
  const auto start = Clock::now();
  const auto r = image(g, w, arity, options);
  auto rep = base_report(g, w, arity, r);
  rep.weak_witness = first_count_difference(r.fibers.counts, twisted_fibers(r.fibers, gamma));
  rep.weakly_chiral = rep.weak_witness.has_value();
  rep.gammas.push_back({"custom", std::nullopt, std::nullopt, rep.weakly_chiral, rep.weak_witness});
  rep.wall_ms = elapsed_ms(start);
  return rep;
}

ChiralityReport check_all_gammas(const FiniteGroup& g, const Word& w, int arity,
                                 const std::vector<GroupMap>& automorphisms, const EngineOptions& options) {
  const auto start = Clock::now();
  const auto r = image(g, w, arity, options);
  auto rep = base_report(g, w, arity, r);
  const ElementSet& members = r.image.members;

  const GroupMap inversion = anti_from_auto(identity_map(g));
  set_chiral(rep, members, invert_set(g, members));
  rep.weak_witness = first_count_difference(r.fibers.counts, twisted_fibers(r.fibers, inversion));
  rep.weakly_chiral = rep.weak_witness.has_value();

  bool agree = true;
  for (std::size_t k = 0; k < automorphisms.size(); ++k) {
    const GroupMap gamma = anti_from_auto(automorphisms[k]);
    GammaVerdict v;
    v.gamma = "auto#" + std::to_string(k);
    v.witness = first_difference(members, map_set(gamma, members));
    v.chiral = v.witness.has_value();
    v.weak_witness = first_count_difference(r.fibers.counts, twisted_fibers(r.fibers, gamma));
    v.weakly_chiral = v.weak_witness.has_value();
    agree = agree && v.chiral == rep.chiral && v.weakly_chiral == rep.weakly_chiral;
    rep.gammas.push_back(std::move(v));
  }
  rep.all_gamma_agree = agree;
  rep.wall_ms = elapsed_ms(start);
  return rep;
}

}  // namespace wordmaps
