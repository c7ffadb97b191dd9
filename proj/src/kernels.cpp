#include "lfg/kernels.hpp"

#include <algorithm>
#include <iterator>
#include <stdexcept>
#include <tuple>

namespace lfg::kernels {

using graph::ExtensionGap;
using graph::Graph;
using graph::Vertex;
using graph::VertexSet;

std::optional<Vertex> find_extension_witness(const Graph &g, std::span<const Vertex> a,
                                             std::span<const Vertex> b)
{
  for (Vertex z = 0; z < g.size(); ++z) {
    if (std::find(a.begin(), a.end(), z) != a.end() || std::find(b.begin(), b.end(), z) != b.end())
      continue;
    const bool ok =
      std::all_of(a.begin(), a.end(), [&](Vertex x) { return g.adjacent(z, x); }) &&
      std::none_of(b.begin(), b.end(), [&](Vertex y) { return g.adjacent(z, y); });
    if (ok)
      return z;
  }
  return std::nullopt;
}

namespace {

/// Subsets of `domain` with at most max_size elements, members sorted.
std::vector<VertexSet> small_subsets(std::span<const Vertex> domain, std::size_t max_size)
{
  VertexSet sorted(domain.begin(), domain.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<VertexSet> out{{}};
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (out[i].size() == max_size)
      continue;
    // extend by any element after the current maximum
    auto start = out[i].empty()
                   ? sorted.begin()
                   : std::upper_bound(sorted.begin(), sorted.end(), out[i].back());
    for (auto it = start; it != sorted.end(); ++it) {
      VertexSet s = out[i];
      s.push_back(*it);
      out.push_back(std::move(s));
    }
  }
  return out;
}

bool disjoint(const VertexSet &a, const VertexSet &b)
{
  for (Vertex x : a)
    if (std::binary_search(b.begin(), b.end(), x))
      return false;
  return true;
}

void gaps_for(const Graph &g, const std::vector<VertexSet> &subsets, std::size_t ia,
              std::vector<ExtensionGap> &out)
{
  const auto &a = subsets[ia];
  for (const auto &b : subsets)
    if (disjoint(a, b) && !find_extension_witness(g, a, b))
      out.push_back(ExtensionGap{a, b});
}

std::vector<Vertex> resolve_domain(const Graph &g, std::span<const Vertex> domain)
{
  std::vector<Vertex> d(domain.begin(), domain.end());
  if (d.empty())
    for (Vertex v = 0; v < g.size(); ++v)
      d.push_back(v);
  for (Vertex v : d)
    if (v >= g.size())
      throw std::invalid_argument("audit domain vertex out of range");
  return d;
}

void sort_gaps(std::vector<ExtensionGap> &gaps)
{
  std::sort(gaps.begin(), gaps.end(), [](const ExtensionGap &x, const ExtensionGap &y) {
    return std::tie(x.a, x.b) < std::tie(y.a, y.b);
  });
}

} // namespace

std::vector<ExtensionGap> audit_extension_serial(const Graph &g, std::size_t max_size,
                                                 std::span<const Vertex> domain)
{
  const auto subsets = small_subsets(resolve_domain(g, domain), max_size);
  std::vector<ExtensionGap> gaps;
  for (std::size_t i = 0; i < subsets.size(); ++i)
    gaps_for(g, subsets, i, gaps);
  sort_gaps(gaps);
  return gaps;
}

std::vector<ExtensionGap> audit_extension_parallel(const Graph &g, std::size_t max_size,
                                                   std::span<const Vertex> domain)
{
  const auto subsets = small_subsets(resolve_domain(g, domain), max_size);
  std::vector<std::vector<ExtensionGap>> per_a(subsets.size());
  const auto count = static_cast<std::int64_t>(subsets.size());
#pragma omp parallel for schedule(dynamic, 4)
  for (std::int64_t i = 0; i < count; ++i)
    gaps_for(g, subsets, static_cast<std::size_t>(i), per_a[i]);

  std::vector<ExtensionGap> gaps;
  for (auto &v : per_a)
    std::move(v.begin(), v.end(), std::back_inserter(gaps));
  sort_gaps(gaps);
  return gaps;
}

// ---------------------------------------------------------------------------

namespace {

// Row i of the table from the BFS tree: i * j = (i * parent(j)) * gen.
void cayley_row(const group::Enumeration &E, std::size_t i, group::Elem *row)
{
  row[0] = static_cast<group::Elem>(i);
  for (group::Elem j = 1; j < E.size(); ++j)
    row[j] = E.mul_gen(row[E.parent(j)], E.parent_gen(j));
}

} // namespace

std::vector<group::Elem> cayley_table_serial(const group::Enumeration &E)
{
  const std::size_t n = E.size();
  std::vector<group::Elem> t(n * n);
  for (std::size_t i = 0; i < n; ++i)
    cayley_row(E, i, t.data() + i * n);
  return t;
}

std::vector<group::Elem> cayley_table_parallel(const group::Enumeration &E)
{
  const std::size_t n = E.size();
  std::vector<group::Elem> t(n * n);
  const auto rows = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < rows; ++i)
    cayley_row(E, static_cast<std::size_t>(i), t.data() + i * n);
  return t;
}

// ---------------------------------------------------------------------------

namespace {

void check_pc_size(const mekler::PcGroup &G)
{
  if (G.order() > 4096)
    throw BudgetError("Mekler group too large for a multiplication table", 4096);
}

void pc_row(const mekler::PcGroup &G, const std::vector<mekler::PcElement> &elems, std::size_t i,
            std::uint32_t *row)
{
  for (std::size_t j = 0; j < elems.size(); ++j)
    row[j] = G.encode(G.multiply(elems[i], elems[j]));
}

std::vector<mekler::PcElement> all_pc_elements(const mekler::PcGroup &G)
{
  const auto n = static_cast<std::uint64_t>(G.order());
  std::vector<mekler::PcElement> elems;
  elems.reserve(n);
  for (std::uint64_t i = 0; i < n; ++i)
    elems.push_back(G.decode(i));
  return elems;
}

} // namespace

std::vector<std::uint32_t> pc_table_serial(const mekler::PcGroup &G)
{
  check_pc_size(G);
  const auto elems = all_pc_elements(G);
  const std::size_t n = elems.size();
  std::vector<std::uint32_t> t(n * n);
  for (std::size_t i = 0; i < n; ++i)
    pc_row(G, elems, i, t.data() + i * n);
  return t;
}

std::vector<std::uint32_t> pc_table_parallel(const mekler::PcGroup &G)
{
  check_pc_size(G);
  const auto elems = all_pc_elements(G);
  const std::size_t n = elems.size();
  std::vector<std::uint32_t> t(n * n);
  const auto rows = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < rows; ++i)
    pc_row(G, elems, static_cast<std::size_t>(i), t.data() + i * n);
  return t;
}

// ---------------------------------------------------------------------------

namespace {

std::optional<std::pair<std::uint32_t, std::uint32_t>>
first_failure_at(std::span<const std::uint32_t> t, std::size_t n, std::size_t x)
{
  const std::uint32_t *rx = t.data() + x * n;
  for (std::size_t y = 0; y < n; ++y) {
    const std::uint32_t *rxy = t.data() + std::size_t{rx[y]} * n;
    const std::uint32_t *ry = t.data() + y * n;
    for (std::size_t z = 0; z < n; ++z)
      if (rxy[z] != rx[ry[z]])
        return std::pair{static_cast<std::uint32_t>(y), static_cast<std::uint32_t>(z)};
  }
  return std::nullopt;
}

void check_table(std::span<const std::uint32_t> t, std::size_t n)
{
  if (t.size() != n * n)
    throw std::invalid_argument("table size does not match n * n");
  for (auto v : t)
    if (v >= n)
      throw std::invalid_argument("table entry out of range");
}

} // namespace

std::optional<Triple> find_nonassociative_serial(std::span<const std::uint32_t> table, std::size_t n)
{
  check_table(table, n);
  for (std::size_t x = 0; x < n; ++x)
    if (auto f = first_failure_at(table, n, x))
      return Triple{static_cast<std::uint32_t>(x), f->first, f->second};
  return std::nullopt;
}

std::optional<Triple> find_nonassociative_parallel(std::span<const std::uint32_t> table, std::size_t n)
{
  check_table(table, n);
  std::vector<std::optional<std::pair<std::uint32_t, std::uint32_t>>> found(n);
  const auto rows = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(dynamic, 8)
  for (std::int64_t x = 0; x < rows; ++x)
    found[x] = first_failure_at(table, n, static_cast<std::size_t>(x));
  for (std::size_t x = 0; x < n; ++x)
    if (found[x])
      return Triple{static_cast<std::uint32_t>(x), found[x]->first, found[x]->second};
  return std::nullopt;
}

} // namespace lfg::kernels
