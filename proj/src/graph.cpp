#include "lfg/graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "lfg/kernels.hpp"

namespace lfg::graph {

namespace {

std::string subset_label(std::uint32_t stage, const VertexSet &members)
{
  std::string s = stage == 1 ? "s{" : "s" + std::to_string(stage) + "{";
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (i)
      s += ',';
    s += std::to_string(members[i]);
  }
  s += '}';
  return s;
}

std::uint64_t mask_of(std::span<const Vertex> members)
{
  std::uint64_t m = 0;
  for (Vertex v : members)
    m |= std::uint64_t{1} << v;
  return m;
}

void check_extendable(std::size_t n, std::size_t vertex_budget)
{
  if (n >= 63 || n + (std::size_t{1} << n) > vertex_budget)
    throw BudgetError("extension of a " + std::to_string(n) + "-vertex graph exceeds vertex budget " +
                        std::to_string(vertex_budget),
                      vertex_budget);
}

} // namespace

Graph Graph::from_edges(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edges)
{
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i)
    labels[i] = std::to_string(i);
  return make(std::move(labels), edges);
}

Graph Graph::make(std::vector<std::string> labels, std::span<const std::pair<Vertex, Vertex>> edges,
                  std::vector<SubsetVertex> origins)
{
  Graph g;
  const std::size_t n = labels.size();
  {
    std::unordered_set<std::string> seen;
    seen.reserve(n);
    for (const auto &l : labels)
      if (!seen.insert(l).second)
        throw std::invalid_argument("duplicate vertex label '" + l + "'");
  }
  if (origins.empty())
    origins.resize(n);
  else if (origins.size() != n)
    throw std::invalid_argument("origin list does not match vertex count");

  g.adj_.assign(n, {});
  for (auto [x, y] : edges) {
    if (x >= n || y >= n)
      throw std::invalid_argument("edge endpoint out of range");
    if (x == y)
      throw std::invalid_argument("loop at vertex " + std::to_string(x));
    g.adj_[x].push_back(y);
    g.adj_[y].push_back(x);
  }
  std::size_t degree_sum = 0;
  for (auto &nb : g.adj_) {
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    degree_sum += nb.size();
  }
  g.edge_count_ = degree_sum / 2;
  g.labels_ = std::move(labels);
  g.origins_ = std::move(origins);
  return g;
}

bool Graph::adjacent(Vertex x, Vertex y) const
{
  const auto &nb = adj_[x];
  return std::binary_search(nb.begin(), nb.end(), y);
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const
{
  std::vector<std::pair<Vertex, Vertex>> out;
  out.reserve(edge_count_);
  for (Vertex x = 0; x < size(); ++x)
    for (Vertex y : adj_[x])
      if (x < y)
        out.emplace_back(x, y);
  return out;
}

NiceReport is_nice(const Graph &g)
{
  NiceReport r;
  const auto n = static_cast<Vertex>(g.size());

  for (Vertex x = 0; x < n && !r.triangle; ++x)
    for (Vertex y : g.neighbors(x)) {
      if (y <= x)
        continue;
      // common neighbor above y gives the lexicographically first triangle
      const auto nx = g.neighbors(x), ny = g.neighbors(y);
      auto ix = std::upper_bound(nx.begin(), nx.end(), y);
      auto iy = std::upper_bound(ny.begin(), ny.end(), y);
      while (ix != nx.end() && iy != ny.end()) {
        if (*ix < *iy)
          ++ix;
        else if (*iy < *ix)
          ++iy;
        else {
          r.triangle = std::array<Vertex, 3>{x, y, *ix};
          break;
        }
      }
      if (r.triangle)
        break;
    }

  // a 4-cycle exists iff two distinct vertices share two neighbors
  std::vector<Vertex> first_common(n);
  std::vector<Vertex> stamp(n, n);
  for (Vertex u = 0; u < n && !r.square; ++u) {
    for (Vertex w : g.neighbors(u))
      for (Vertex v : g.neighbors(w)) {
        if (v <= u)
          continue;
        if (stamp[v] != u) {
          stamp[v] = u;
          first_common[v] = w;
        } else if (first_common[v] != w && !r.square) {
          r.square = std::array<Vertex, 4>{u, first_common[v], v, w};
        }
      }
  }

  bool separated = true, separated_strict = true;
  for (Vertex x = 0; x < n; ++x)
    for (Vertex y = 0; y < n; ++y) {
      if (x == y)
        continue;
      bool letter = false, strict = false;
      for (Vertex z : g.neighbors(x)) {
        if (z == y) {
          letter = true;
        } else if (!g.adjacent(z, y)) {
          letter = strict = true;
          break;
        }
      }
      if (!letter && separated) {
        separated = false;
        r.unseparated = std::pair{x, y};
      }
      if (!strict && separated_strict) {
        separated_strict = false;
        r.unseparated_strict = std::pair{x, y};
      }
      if (letter && !strict)
        ++r.self_witness_only;
    }

  const bool cycles_free = !r.triangle && !r.square;
  r.nice = cycles_free && separated;
  r.nice_strict = cycles_free && separated_strict;
  return r;
}

std::vector<VertexSet> ordered_subsets(std::size_t n)
{
  if (n >= 63)
    throw BudgetError("subset enumeration of " + std::to_string(n) + " points", 62);
  std::vector<VertexSet> out;
  out.reserve(std::size_t{1} << n);
  for (std::size_t k = 0; k <= n; ++k) {
    // combinations of size k in lexicographic order
    VertexSet c(k);
    std::iota(c.begin(), c.end(), 0u);
    while (true) {
      out.push_back(c);
      std::size_t i = k;
      while (i > 0 && c[i - 1] == n - k + i - 1)
        --i;
      if (i == 0)
        break;
      ++c[i - 1];
      for (std::size_t j = i; j < k; ++j)
        c[j] = c[j - 1] + 1;
    }
  }
  return out;
}

Graph extend(const Graph &g, std::size_t vertex_budget)
{
  const std::size_t n = g.size();
  check_extendable(n, vertex_budget);

  std::uint32_t stage = 1;
  for (Vertex v = 0; v < n; ++v)
    stage = std::max(stage, g.origin(v).stage + 1);

  auto subsets = ordered_subsets(n);
  std::vector<std::string> labels = g.labels();
  std::vector<SubsetVertex> origins;
  origins.reserve(n + subsets.size());
  for (Vertex v = 0; v < n; ++v)
    origins.push_back(g.origin(v));
  labels.reserve(n + subsets.size());

  auto edges = g.edges();
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    const auto s = static_cast<Vertex>(n + i);
    for (Vertex member : subsets[i])
      edges.emplace_back(member, s);
    labels.push_back(subset_label(stage, subsets[i]));
    origins.push_back(SubsetVertex{stage, std::move(subsets[i])});
  }
  return Graph::make(std::move(labels), edges, std::move(origins));
}

ExtensionTower extend_tower(const Graph &g, std::size_t depth, std::size_t vertex_budget)
{
  ExtensionTower t{g, {}, {g.size()}};
  t.inclusion.resize(g.size());
  std::iota(t.inclusion.begin(), t.inclusion.end(), 0u);
  for (std::size_t i = 0; i < depth; ++i) {
    t.top = extend(t.top, vertex_budget);
    t.stage_sizes.push_back(t.top.size());
  }
  return t;
}

std::optional<Vertex> check_extension_property(const Graph &g, std::span<const Vertex> a,
                                               std::span<const Vertex> b)
{
  const auto n = g.size();
  std::unordered_set<Vertex> in_a(a.begin(), a.end());
  for (Vertex v : a)
    if (v >= n)
      throw std::invalid_argument("vertex out of range in A");
  for (Vertex v : b) {
    if (v >= n)
      throw std::invalid_argument("vertex out of range in B");
    if (in_a.count(v))
      throw std::invalid_argument("A and B are not disjoint");
  }
  return kernels::find_extension_witness(g, a, b);
}

std::vector<ExtensionGap> audit_extension_property(const Graph &g, std::size_t max_size,
                                                   std::span<const Vertex> domain)
{
  return kernels::audit_extension_parallel(g, max_size, domain);
}

bool is_isomorphism(const Graph &from, const Graph &to, std::span<const Vertex> map)
{
  const auto n = from.size();
  if (to.size() != n || map.size() != n || from.edge_count() != to.edge_count())
    return false;
  std::vector<char> hit(n, 0);
  for (Vertex v : map) {
    if (v >= n || hit[v])
      return false;
    hit[v] = 1;
  }
  // bijective + edges to edges + equal edge counts => adjacency reflected
  for (auto [x, y] : from.edges())
    if (!to.adjacent(map[x], map[y]))
      return false;
  return true;
}

GraphIso GraphIso::make(std::shared_ptr<const Graph> domain, std::shared_ptr<const Graph> codomain,
                        std::vector<Vertex> map)
{
  if (!domain || !codomain)
    throw std::invalid_argument("null graph");
  if (!is_isomorphism(*domain, *codomain, map))
    throw std::invalid_argument("vertex map is not a graph isomorphism");
  GraphIso f;
  f.domain_ = std::move(domain);
  f.codomain_ = std::move(codomain);
  f.map_ = std::move(map);
  return f;
}

GraphIso GraphIso::identity(std::shared_ptr<const Graph> g)
{
  std::vector<Vertex> id(g->size());
  std::iota(id.begin(), id.end(), 0u);
  return make(g, g, std::move(id));
}

GraphIso GraphIso::inverse() const
{
  std::vector<Vertex> inv(map_.size());
  for (Vertex x = 0; x < map_.size(); ++x)
    inv[map_[x]] = x;
  return make(codomain_, domain_, std::move(inv));
}

GraphIso extend_iso(const GraphIso &f, std::size_t vertex_budget)
{
  const auto &g = f.domain();
  const auto &h = f.codomain();
  const std::size_t n = g.size();
  auto g2 = std::make_shared<const Graph>(extend(g, vertex_budget));
  auto h2 = std::make_shared<const Graph>(extend(h, vertex_budget));

  std::unordered_map<std::uint64_t, Vertex> position;
  position.reserve(h2->size() - n);
  for (Vertex v = static_cast<Vertex>(n); v < h2->size(); ++v)
    position.emplace(mask_of(h2->origin(v).members), v);

  std::vector<Vertex> map(g2->size());
  for (Vertex x = 0; x < n; ++x)
    map[x] = f(x);
  for (Vertex v = static_cast<Vertex>(n); v < g2->size(); ++v) {
    std::uint64_t image = 0;
    for (Vertex y : g2->origin(v).members)
      image |= std::uint64_t{1} << f(y);
    map[v] = position.at(image);
  }
  return GraphIso::make(std::move(g2), std::move(h2), std::move(map));
}

} // namespace lfg::graph
