#pragma once

#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lfg/perm_group.hpp"

namespace lfg::group {

/// Subgroup of an enumerated group, as a sorted element-index set plus
/// the generating elements it was built from.
struct Subgroup
{
  std::vector<Elem> elements;
  std::vector<Elem> gens;

  std::size_t order() const { return elements.size(); }
  bool contains(Elem x) const;
  bool contains(const Subgroup &other) const;
  bool operator==(const Subgroup &other) const { return elements == other.elements; }
};

/// Subgroup generated by `gens` inside the enumerated group.
Subgroup closure(const Enumeration &E, std::span<const Elem> gens);
Subgroup trivial_subgroup();
Subgroup whole_group(const Enumeration &E);

/// Greedy generating set: repeatedly adds the highest-order element not yet
/// generated (ties broken by index). Deterministic.
std::vector<Elem> small_generating_set(const Enumeration &E, const Subgroup &S);

/// The subgroup as a permutation group on the parent's ground set, generated
/// by small_generating_set (or by `gens` when given).
PermGroup subgroup_as_group(const PermGroup &G, const Subgroup &S);
PermGroup subgroup_as_group(const PermGroup &G, std::span<const Elem> gens);

bool is_abelian(const PermGroup &G);
bool is_normal(const PermGroup &G, const Subgroup &S);
Subgroup center(const PermGroup &G);
Subgroup derived_subgroup(const PermGroup &G);
/// Conjugacy class of x, sorted.
std::vector<Elem> conjugacy_class(const PermGroup &G, Elem x);

/// Smallest normal subgroup containing g.
Subgroup normal_closure(const PermGroup &G, Elem g);
Subgroup normal_closure(const PermGroup &G, const Perm &g);

struct SimplicityReport
{
  bool simple = false;
  /// Proper nontrivial normal subgroup when not simple (none for the
  /// trivial group, which is not counted as simple).
  std::optional<Subgroup> witness;
};

SimplicityReport is_simple(const PermGroup &G);

/// Every subgroup of order <= order_bound, each exactly once, sorted by
/// (order, element set). Built by cyclic extension.
std::vector<Subgroup> subgroups(const PermGroup &G, std::size_t order_bound);

struct DirectSum
{
  PermGroup group;
  Hom inject_a, inject_b;
  Hom project_a, project_b;
};

DirectSum direct_sum(const PermGroup &a, const PermGroup &b);

/// Isomorphism invariants used to prune and explain brute_iso.
struct Invariants
{
  std::size_t order = 0;
  std::map<std::uint64_t, std::size_t> order_profile; ///< element order -> count
  std::size_t center_order = 0;
  std::size_t derived_order = 0;

  bool operator==(const Invariants &) const = default;
};

Invariants invariants(const PermGroup &G);
/// Name of the first invariant that differs ("order", "element order
/// profile", "center order", "derived subgroup order"), if any.
std::optional<std::string> distinguishing_invariant(const Invariants &a, const Invariants &b);

/// Isomorphism G -> H, verified against the full multiplication table.
std::optional<Hom> brute_iso(const PermGroup &G, const PermGroup &H);

/// Element map of a bijective homomorphism, indexed by G's element indices.
std::vector<Elem> element_map(const Hom &h);

struct Automorphisms
{
  /// Each automorphism as an image list over G's element indices.
  std::vector<std::vector<Elem>> maps;
  /// The same automorphisms as permutations of G's element list.
  PermGroup group;

  std::size_t order() const { return maps.size(); }
};

Automorphisms automorphisms(const PermGroup &G);

/// g -> left multiplication by g on G's element list, times a transposition
/// of two extra points whenever that permutation is odd. Lands in the
/// alternating group on |G| + 2 points.
Hom cayley_embedding_even(const PermGroup &G);

// ---------------------------------------------------------------------------
// homomorphism search

struct HomSearchOptions
{
  bool injective = false;
  bool surjective = false;
  /// Codomain element indices prescribed for the first fixed.size()
  /// domain generators.
  std::vector<Elem> fixed;
};

/// Visits every homomorphism domain -> codomain (both enumerable) in
/// lexicographic order of generator images. `visit` receives the images of
/// the domain generators and the full element map; returning false stops
/// the search.
using HomVisitor = std::function<bool(std::span<const Elem> gen_images, std::span<const Elem> element_map)>;

void for_each_hom(const PermGroup &domain, const PermGroup &codomain, const HomSearchOptions &opts,
                  const HomVisitor &visit);

/// Convenience: materialises a visited element map as a Hom.
Hom hom_from_images(const PermGroup &domain, const PermGroup &codomain,
                    std::span<const Elem> gen_images);

} // namespace lfg::group
