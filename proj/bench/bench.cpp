// Serial vs OpenMP timings for the data-parallel kernels.
// Usage: lfg_bench [reps]

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "lfg/catalog.hpp"
#include "lfg/graph.hpp"
#include "lfg/kernels.hpp"
#include "lfg/mekler.hpp"

using namespace lfg;

namespace {

double median_ms(int reps, const std::function<void()> &f)
{
  std::vector<double> t;
  for (int i = 0; i < reps; ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    t.push_back(std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count());
  }
  std::sort(t.begin(), t.end());
  return t[t.size() / 2];
}

template <class S, class P>
void row(const char *name, int reps, S serial, P parallel)
{
  const bool same = serial() == parallel();
  const double s = median_ms(reps, [&] { (void)serial(); });
  const double p = median_ms(reps, [&] { (void)parallel(); });
  std::printf("%-28s %10.2f %10.2f %8.2fx  %s\n", name, s, p, s / p, same ? "match" : "MISMATCH");
}

graph::Graph random_graph(std::size_t n, std::uint64_t seed)
{
  std::mt19937_64 rng(seed);
  std::vector<std::pair<graph::Vertex, graph::Vertex>> e;
  for (graph::Vertex i = 0; i < n; ++i)
    for (graph::Vertex j = i + 1; j < n; ++j)
      if (rng() & 1)
        e.emplace_back(i, j);
  return graph::Graph::from_edges(n, e);
}

} // namespace

int main(int argc, char **argv)
{
  const int reps = argc > 1 ? std::max(1, std::stoi(argv[1])) : 5;
  std::printf("threads: %d, reps: %d (median ms)\n", omp_get_max_threads(), reps);
  std::printf("%-28s %10s %10s %9s\n", "kernel", "serial", "parallel", "speedup");

  const auto a6 = group::PermGroup::alternating(6);
  const auto &E = a6.enumerate();
  row("cayley table A6", reps, [&] { return kernels::cayley_table_serial(E); },
      [&] { return kernels::cayley_table_parallel(E); });

  const std::vector<std::pair<graph::Vertex, graph::Vertex>> path{{0, 1}, {1, 2}, {2, 3}};
  const auto pc = mekler::PcGroup::make(graph::Graph::from_edges(4, path), 3);
  row("pc table 3^7", reps, [&] { return kernels::pc_table_serial(pc); },
      [&] { return kernels::pc_table_parallel(pc); });

  const auto small = mekler::PcGroup::make(graph::Graph::from_edges(3, {}), 3);
  const auto table = kernels::pc_table_serial(small);
  const std::size_t n = static_cast<std::size_t>(small.order());
  row("associativity 3^6", reps, [&] { return kernels::find_nonassociative_serial(table, n); },
      [&] { return kernels::find_nonassociative_parallel(table, n); });

  const auto g = random_graph(12, 20240601);
  row("extension audit m=3", reps, [&] { return kernels::audit_extension_serial(g, 3, {}); },
      [&] { return kernels::audit_extension_parallel(g, 3, {}); });
  return 0;
}
