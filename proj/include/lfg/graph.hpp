#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lfg/error.hpp"

namespace lfg::graph {

using Vertex = std::uint32_t;
using VertexSet = std::vector<Vertex>;

/// Provenance of a vertex created by `extend`: the finite subset of the
/// previous stage it stands for. Base vertices have stage 0 and no members.
struct SubsetVertex
{
  std::uint32_t stage = 0;
  VertexSet members; ///< sorted indices into the stage-(stage-1) graph

  bool operator==(const SubsetVertex &) const = default;
};

/// Finite simple graph with ordered, pairwise distinct vertex labels.
/// Vertex order is index order. Immutable after construction.
class Graph
{
public:
  Graph() = default;

  /// Vertices labelled "0".."n-1".
  static Graph from_edges(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edges);

  /// Throws std::invalid_argument on loops, out-of-range endpoints or
  /// duplicate labels. Duplicate edges are merged.
  static Graph make(std::vector<std::string> labels,
                    std::span<const std::pair<Vertex, Vertex>> edges,
                    std::vector<SubsetVertex> origins = {});

  std::size_t size() const { return labels_.size(); }
  std::size_t edge_count() const { return edge_count_; }

  bool adjacent(Vertex x, Vertex y) const;
  std::span<const Vertex> neighbors(Vertex x) const { return adj_[x]; }
  const std::string &label(Vertex x) const { return labels_[x]; }
  const std::vector<std::string> &labels() const { return labels_; }
  const SubsetVertex &origin(Vertex x) const { return origins_[x]; }

  /// Edges (x, y) with x < y in lexicographic order.
  std::vector<std::pair<Vertex, Vertex>> edges() const;

  bool operator==(const Graph &other) const
  {
    return labels_ == other.labels_ && adj_ == other.adj_;
  }

private:
  std::vector<std::string> labels_;
  std::vector<std::vector<Vertex>> adj_; // sorted neighbor lists
  std::vector<SubsetVertex> origins_;
  std::size_t edge_count_ = 0;
};

// ---------------------------------------------------------------------------
// niceness

/// Result of the niceness predicate. The verdict follows the letter of the
/// definition, where the separating vertex z may coincide with y (z = y is
/// never adjacent to itself). The stricter reading z != y is reported
/// alongside and never silently substituted.
struct NiceReport
{
  bool nice = false;
  bool nice_strict = false;

  std::optional<std::array<Vertex, 3>> triangle;
  std::optional<std::array<Vertex, 4>> square; ///< cycle order
  std::optional<std::pair<Vertex, Vertex>> unseparated;        ///< letter reading
  std::optional<std::pair<Vertex, Vertex>> unseparated_strict; ///< z != y reading

  /// Ordered pairs (x, y) for which z = y is the only separating vertex.
  std::size_t self_witness_only = 0;
};

NiceReport is_nice(const Graph &g);

// ---------------------------------------------------------------------------
// extension toward the random graph

/// All subsets of {0..n-1} ordered by (size, lexicographic members).
std::vector<VertexSet> ordered_subsets(std::size_t n);

/// G' = G plus one vertex per subset S of V(G), adjacent exactly to the
/// members of S. Throws BudgetError if |G| + 2^|G| exceeds `vertex_budget`.
Graph extend(const Graph &g, std::size_t vertex_budget = Budgets{}.vertices);

struct ExtensionTower
{
  Graph top;
  std::vector<Vertex> inclusion;       ///< base vertex i -> index in top
  std::vector<std::size_t> stage_sizes; ///< |G_0|, ..., |G_k|
};

ExtensionTower extend_tower(const Graph &g, std::size_t depth,
                            std::size_t vertex_budget = Budgets{}.vertices);

/// Some z outside A and B adjacent to all of A and none of B (first in
/// vertex order). Throws std::invalid_argument if A and B meet or contain
/// out-of-range vertices.
std::optional<Vertex> check_extension_property(const Graph &g, std::span<const Vertex> a,
                                               std::span<const Vertex> b);

struct ExtensionGap
{
  VertexSet a, b;
  bool operator==(const ExtensionGap &) const = default;
};

/// Every disjoint pair (A, B) of subsets of `domain` (all vertices when
/// empty) with |A|, |B| <= max_size that has no witness in g. Sorted.
std::vector<ExtensionGap> audit_extension_property(const Graph &g, std::size_t max_size,
                                                   std::span<const Vertex> domain = {});

// ---------------------------------------------------------------------------
// isomorphisms

bool is_isomorphism(const Graph &from, const Graph &to, std::span<const Vertex> map);

class GraphIso
{
public:
  /// Throws std::invalid_argument unless `map` is a bijection preserving
  /// and reflecting adjacency.
  static GraphIso make(std::shared_ptr<const Graph> domain, std::shared_ptr<const Graph> codomain,
                       std::vector<Vertex> map);
  static GraphIso identity(std::shared_ptr<const Graph> g);

  const Graph &domain() const { return *domain_; }
  const Graph &codomain() const { return *codomain_; }
  std::shared_ptr<const Graph> domain_ptr() const { return domain_; }
  std::shared_ptr<const Graph> codomain_ptr() const { return codomain_; }
  const std::vector<Vertex> &map() const { return map_; }
  Vertex operator()(Vertex x) const { return map_[x]; }

  GraphIso inverse() const;

private:
  std::shared_ptr<const Graph> domain_, codomain_;
  std::vector<Vertex> map_;
};

/// The isomorphism extend(G) -> extend(H) that agrees with f on old
/// vertices and sends the subset vertex S to the subset vertex f[S].
GraphIso extend_iso(const GraphIso &f, std::size_t vertex_budget = Budgets{}.vertices);

} // namespace lfg::graph
