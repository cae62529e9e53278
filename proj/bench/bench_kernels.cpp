// Serial vs OpenMP timings for the table kernels.
//
//   bench_kernels [repeats]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>

#include <omp.h>

#include "sumgraph/constructors.hpp"
#include "sumgraph/kernels.hpp"

using namespace sumgraph;

namespace {

double best_ms(int repeats, const std::function<void()>& f) {
  double best = 1e300;
  for (int r = 0; r < repeats; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    const auto t1 = std::chrono::steady_clock::now();
    best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
  }
  return best;
}

void row(const char* kernel, const std::string& group, double serial, double parallel, bool same) {
  std::printf("%-22s %-14s %10.3f %10.3f %7.2fx  %s\n", kernel, group.c_str(), serial, parallel,
              parallel > 0 ? serial / parallel : 0.0, same ? "ok" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
  const int repeats = argc > 1 ? std::max(1, std::atoi(argv[1])) : 3;
  std::printf("threads: %d, repeats: %d (best of)\n", omp_get_max_threads(), repeats);
  std::printf("%-22s %-14s %10s %10s %8s\n", "kernel", "group", "serial ms", "omp ms", "speedup");

  struct Case {
    std::string name;
    Group g;
  };
  std::vector<Case> cases;
  cases.push_back({"Z256", cyclic_group(256)});
  cases.push_back({"D512", dihedral_group(256)});
  cases.push_back({"Dic128", dicyclic_group(128)});
  cases.push_back({"Z2^4 x Z32", abelian_group({2, 2, 2, 2, 32})});

  bool all_same = true;
  for (const auto& c : cases) {
    const std::size_t n = c.g.order();
    std::vector<Element> flat;
    flat.reserve(n * n);
    for (Element a = 0; a < n; ++a) flat.insert(flat.end(), c.g.row(a).begin(), c.g.row(a).end());

    std::optional<kernels::Triple> ts, tp;
    const double s1 = best_ms(repeats, [&] { ts = kernels::find_nonassociative_triple_serial(flat, n); });
    const double p1 = best_ms(repeats, [&] { tp = kernels::find_nonassociative_triple(flat, n); });
    row("associativity", c.name, s1, p1, ts == tp);
    all_same &= ts == tp;

    BitSet targets(n);
    for (Element x = 0; x < n; x += 4) targets.set(x);
    std::vector<BitSet> as, ap;
    const double s2 = best_ms(repeats, [&] { as = kernels::product_adjacency_serial(c.g, targets); });
    const double p2 = best_ms(repeats, [&] { ap = kernels::product_adjacency(c.g, targets); });
    row("product_adjacency", c.name, s2, p2, as == ap);
    all_same &= as == ap;

    bool cs = false, cp = false;
    const double s3 = best_ms(repeats, [&] { cs = kernels::is_conjugation_closed_serial(c.g, targets); });
    const double p3 = best_ms(repeats, [&] { cp = kernels::is_conjugation_closed(c.g, targets); });
    row("conjugation_closed", c.name, s3, p3, cs == cp);
    all_same &= cs == cp;
  }
  return all_same ? 0 : 1;
}
