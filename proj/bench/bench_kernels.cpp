// Serial reference vs OpenMP kernels: development, invariance check, search.
// Usage: bench_kernels [repeats] [threads]
// Every parallel result is compared against its serial counterpart.

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>

#include "onefact/constructions.hpp"
#include "onefact/factorization.hpp"
#include "onefact/search.hpp"

namespace {

using namespace onefact;

double best_of(int repeats, const std::function<void()>& f) {
  double best = 1e300;
  for (int i = 0; i < repeats; ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
  }
  return best;
}

void row(const std::string& name, double serial, double parallel, bool same) {
  std::printf("%-34s %10.4f %10.4f %8.2fx  %s\n", name.c_str(), serial, parallel, serial / parallel,
              same ? "match" : "MISMATCH");
  std::fflush(stdout);
}

}  // namespace

int main(int argc, char** argv) {
  const int repeats = argc > 1 ? std::atoi(argv[1]) : 3;
  const int threads = argc > 2 ? std::atoi(argv[2]) : omp_get_max_threads();
  omp_set_num_threads(threads);
  std::printf("threads %d, best of %d\n", threads, repeats);
  std::printf("%-34s %10s %10s %9s\n", "kernel", "serial s", "omp s", "speedup");

  bool all_same = true;
  for (const auto& [p, v] : {std::pair<std::int64_t, int>{13, 2}, {5, 3}, {29, 2}}) {
    const Starter s = prime_power_starter(p, v);
    const std::string tag = "p=" + std::to_string(p) + " v=" + std::to_string(v);

    OneFactorization fs{s.model, {}}, fp{s.model, {}};
    const double ds = best_of(repeats, [&] { fs = develop_factorization(s, Execution::serial); });
    const double dp = best_of(repeats, [&] { fp = develop_factorization(s, Execution::parallel); });
    row("develop " + tag, ds, dp, fs.factors == fp.factors);
    all_same = all_same && fs.factors == fp.factors;

    bool is = false, ip = false;
    const double cs = best_of(repeats, [&] { is = check_invariance(s.model, fs, Execution::serial); });
    const double cp = best_of(repeats, [&] { ip = check_invariance(s.model, fs, Execution::parallel); });
    row("invariance " + tag, cs, cp, is == ip && is);
    all_same = all_same && is == ip && is;
  }

  for (const auto& [orders, hgen] : {std::pair<std::vector<std::int64_t>, std::vector<std::int64_t>>{{24}, {12}},
                                     {{24}, {4}},
                                     {{2, 12}, {0, 2}}}) {
    const AbelianGroup g(orders);
    const std::vector<Element> gens{Element{hgen}};
    const Subgroup h = subgroup_from_generators(g, gens);
    SearchOptions so;
    so.mode = SearchMode::exhaust;
    SearchOutcome a, b;
    const double ss = best_of(repeats, [&] { a = search_starter(g, h, so); });
    so.workers = threads;
    const double sp = best_of(repeats, [&] { b = search_starter(g, h, so); });
    std::string tag = "search [";
    for (std::size_t i = 0; i < orders.size(); ++i) tag += (i ? "," : "") + std::to_string(orders[i]);
    tag += "] |H|=" + std::to_string(h.order()) + " " + to_string(a.status);
    row(tag, ss, sp, a.status == b.status);
    all_same = all_same && a.status == b.status;
  }
  return all_same ? 0 : 1;
}
