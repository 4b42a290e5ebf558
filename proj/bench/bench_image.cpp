// Serial reference vs prefix-cached OpenMP kernel for word-map images.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "wordmaps/engine.hpp"

using namespace wordmaps;

namespace {

template <class F>
double time_ms(F&& f, int reps) {
  const auto t0 = std::chrono::steady_clock::now();
  for (int i = 0; i < reps; ++i) f();
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count() / reps;
}

}  // namespace

int main(int argc, char** argv) {
  const int reps = argc > 1 ? std::atoi(argv[1]) : 3;
#ifdef _OPENMP
  const int max_threads = omp_get_max_threads();
#else
  const int max_threads = 1;
#endif
  struct Case {
    const char* group;
    const char* word;
    int arity;
  };
  const std::vector<Case> cases{
      {"S4", "x1 x2 x1^-1 x2^-1", 2},          {"S5", "x1^2 x2^3", 2},
      {"A5", "x1 x2 x1^-1 x2^-1", 2},          {"S5", "x1 x2^2 x1^-1 x2 x1^3 x2^-2", 2},
      {"S4", "x1 x2 x3 x1^-1 x2^-1 x3^-1", 3}, {"C2xA4", "x1^2 x2 x3^2 x2^-1 x1", 3},
  };
  std::printf("%-8s %-34s %2s %10s %10s %10s %8s\n", "group", "word", "d", "naive_ms", "omp1_ms", "ompN_ms", "same");
  for (const auto& c : cases) {
    const auto g = parse_group_spec(c.group);
    const auto w = parse_word(c.word);
    ImageResult ref, one, many;
    const double tn = time_ms([&] { ref = naive_image(g, w, c.arity); }, reps);
    const double t1 = time_ms([&] { one = image(g, w, c.arity, {kDefaultTupleBudget, 1}); }, reps);
    const double tm = time_ms([&] { many = image(g, w, c.arity, {kDefaultTupleBudget, max_threads}); }, reps);
    const bool same = ref.fibers.counts == one.fibers.counts && ref.fibers.counts == many.fibers.counts;
    std::printf("%-8s %-34s %2d %10.2f %10.2f %10.2f %8s\n", c.group, c.word, c.arity, tn, t1, tm,
                same ? "yes" : "NO");
  }
  std::printf("threads: %d\n", max_threads);
  return 0;
}
