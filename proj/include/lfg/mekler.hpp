#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "lfg/graph.hpp"

namespace lfg::mekler {

using BigInt = boost::multiprecision::cpp_int;
using graph::Graph;
using graph::Vertex;
using Coord = std::uint32_t;

/// Element of a Mekler group in normal form
///   g_0^a_0 ... g_{n-1}^a_{n-1} * prod_{(x,y) non-edge, x<y} [g_x, g_y]^b_xy.
/// `group` is the fingerprint of the owning PcGroup.
struct PcElement
{
  std::uint64_t group = 0;
  std::vector<Coord> a;
  std::vector<Coord> b;

  bool operator==(const PcElement &) const = default;
  auto operator<=>(const PcElement &) const = default;
};

/// Γ(G): free nilpotent class-2 exponent-p group on V(G) modulo the
/// commutators of adjacent vertices, for an odd prime p.
class PcGroup
{
public:
  /// Throws std::invalid_argument unless p is an odd prime.
  static PcGroup make(Graph g, std::uint32_t p);

  const Graph &graph() const { return *graph_; }
  std::uint32_t p() const { return p_; }
  std::size_t rank() const { return graph_->size(); }
  /// Non-adjacent pairs (x, y), x < y, in lexicographic order.
  const std::vector<std::pair<Vertex, Vertex>> &nonedge_pairs() const { return pairs_; }
  /// Index into nonedge_pairs() of {x, y}, or -1 for edges and x == y.
  std::int64_t pair_index(Vertex x, Vertex y) const;
  std::uint64_t fingerprint() const { return fingerprint_; }

  /// n + |non-edges|; the order is p to this power.
  std::size_t order_exponent() const { return rank() + pairs_.size(); }
  BigInt order() const;

  PcElement identity() const;
  PcElement generator(Vertex x) const;
  /// Throws std::invalid_argument on wrong shape, out-of-range entries or
  /// an element of another group.
  void validate(const PcElement &u) const;

  PcElement multiply(const PcElement &u, const PcElement &v) const;
  PcElement inverse(const PcElement &u) const;
  /// u^-1 v^-1 u v, by the bilinear closed form.
  PcElement commutator(const PcElement &u, const PcElement &v) const;
  PcElement power(const PcElement &u, std::uint64_t k) const;
  bool is_identity(const PcElement &u) const;

  /// Mixed-radix index of u (a first, then b). Requires order() < 2^32.
  std::uint32_t encode(const PcElement &u) const;
  PcElement decode(std::uint64_t index) const;
  bool encodable() const;

  PcElement random_element(std::mt19937_64 &rng) const;

private:
  std::shared_ptr<const Graph> graph_;
  std::uint32_t p_ = 3;
  std::vector<std::pair<Vertex, Vertex>> pairs_;
  std::vector<std::int64_t> pair_index_; // n*n
  std::uint64_t fingerprint_ = 0;
};

bool is_prime(std::uint64_t n);

/// The vertices whose generator is central: those adjacent to every other
/// vertex. Z(Γ(G)) is spanned by these generators and all commutators.
struct PcCenter
{
  std::vector<Vertex> support;
  std::size_t exponent = 0; ///< |Z| = p^exponent
  BigInt order;
};

PcCenter center(const PcGroup &G);
bool is_central(const PcGroup &G, const PcCenter &Z, const PcElement &u);

/// Graph on the given generators with x ~ y iff x != y and they commute.
/// Labels are taken from G's graph when one generator per vertex is given.
Graph recover_graph(const PcGroup &G, std::span<const PcElement> gens);

/// Homomorphism Γ(G) -> Γ(R) induced by an induced-subgraph embedding.
class PcHom
{
public:
  /// Throws std::invalid_argument unless `vertex_map` is injective and
  /// preserves and reflects adjacency, or if the primes differ.
  static PcHom make(std::shared_ptr<const PcGroup> source, std::shared_ptr<const PcGroup> target,
                    std::vector<Vertex> vertex_map);

  const PcGroup &source() const { return *source_; }
  const PcGroup &target() const { return *target_; }
  const std::vector<Vertex> &vertex_map() const { return map_; }
  bool monotone() const { return monotone_; }

  PcElement apply(const PcElement &u) const;

private:
  std::shared_ptr<const PcGroup> source_, target_;
  std::vector<Vertex> map_;
  std::vector<std::int64_t> pair_map_; // source pair -> target pair
  bool monotone_ = true;
};

/// Γ(G) -> Γ(G_k) along the inclusion produced by extend_tower.
PcHom embed_gamma_prime(std::shared_ptr<const PcGroup> source, const graph::ExtensionTower &tower);

/// "pc a=[...] b=[...]"
std::string format_element(const PcElement &u);
/// Throws ParseError.
PcElement parse_element(const PcGroup &G, const std::string &text);

} // namespace lfg::mekler
