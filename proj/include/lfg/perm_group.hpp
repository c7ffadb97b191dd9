#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "lfg/error.hpp"
#include "lfg/perm.hpp"

namespace lfg::group {

using BigInt = boost::multiprecision::cpp_int;

/// Index of an element in an enumerated group; 0 is always the identity.
using Elem = std::uint32_t;

inline constexpr std::size_t kTableLimit = 4096;

/// Breadth-first closure of a generating set.
class Enumeration
{
public:
  Enumeration(std::size_t degree, std::span<const Perm> gens, std::size_t budget);

  std::size_t size() const { return elems_.size(); }
  std::size_t gen_count() const { return gen_count_; }
  const Perm &element(Elem i) const { return elems_[i]; }
  const std::vector<Perm> &elements() const { return elems_; }

  std::optional<Elem> find(const Perm &p) const;
  /// Throws std::invalid_argument if `p` is not in the group.
  Elem index(const Perm &p) const;

  Elem inverse(Elem a) const { return inverse_[a]; }
  Elem mul(Elem a, Elem b) const;
  /// a * gens[k]
  Elem mul_gen(Elem a, std::size_t k) const { return right_gen_[a * gen_count_ + k]; }
  std::uint64_t element_order(Elem a) const { return orders_[a]; }

  /// BFS tree: element(i) == element(parent(i)) * gens[parent_gen(i)] for i > 0.
  Elem parent(Elem i) const { return parent_[i]; }
  std::uint32_t parent_gen(Elem i) const { return parent_gen_[i]; }

  /// Row-major Cayley table, or nullptr when size() > kTableLimit.
  const std::vector<Elem> *table() const;

private:
  std::vector<Perm> elems_;
  std::unordered_map<Perm, Elem, PermHash> index_;
  std::size_t gen_count_ = 0;
  std::vector<Elem> right_gen_;
  std::vector<Elem> parent_;
  std::vector<std::uint32_t> parent_gen_;
  std::vector<Elem> inverse_;
  std::vector<std::uint64_t> orders_;

  struct TableCache;
  std::shared_ptr<TableCache> table_;
};

/// Finite permutation group given by generators. Enumeration is computed
/// on first use and shared between copies. Alternating, symmetric and
/// direct-sum groups carry their structure so that membership and order
/// are available without enumeration.
class PermGroup
{
public:
  enum class Kind { Generic, Alternating, Symmetric, DirectSum };

  /// The trivial group on an empty ground set.
  PermGroup();

  /// Throws std::invalid_argument if a generator has the wrong degree.
  static PermGroup make(std::size_t degree, std::vector<Perm> gens,
                        std::size_t budget = Budgets{}.enumeration);
  static PermGroup alternating(std::size_t n, std::size_t budget = Budgets{}.enumeration);
  static PermGroup symmetric(std::size_t n, std::size_t budget = Budgets{}.enumeration);
  /// Acts on the disjoint union of the two ground sets, `a` first.
  static PermGroup sum(const PermGroup &a, const PermGroup &b);

  std::size_t degree() const { return degree_; }
  const std::vector<Perm> &gens() const { return gens_; }
  Kind kind() const { return kind_; }
  std::size_t budget() const { return budget_; }
  const std::vector<PermGroup> &parts() const { return parts_; }

  /// Throws BudgetError when the group has more than budget() elements.
  const Enumeration &enumerate() const;
  bool enumerable() const;
  std::size_t order() const { return enumerate().size(); }
  /// Order from structure; enumerates only Generic groups.
  BigInt order_big() const;

  bool contains(const Perm &p) const;
  Perm identity() const { return Perm::identity(degree_); }

  /// Same ground set and generators.
  bool same_as(const PermGroup &other) const
  {
    return degree_ == other.degree_ && gens_ == other.gens_ && kind_ == other.kind_;
  }

private:
  struct Cache;
  struct Raw {};
  explicit PermGroup(Raw) {}

  std::size_t degree_ = 0;
  std::vector<Perm> gens_;
  Kind kind_ = Kind::Generic;
  std::size_t budget_ = Budgets{}.enumeration;
  std::vector<PermGroup> parts_;
  std::shared_ptr<Cache> cache_;
};

/// Group homomorphism determined by generator images. Validity is checked
/// by evaluation over the enumerated domain: images must lie in the
/// codomain and the map defined along the BFS tree must respect every
/// generator edge.
class Hom
{
public:
  /// Throws std::invalid_argument if the images do not define a
  /// homomorphism; BudgetError if the domain is not enumerable.
  static Hom make(PermGroup domain, PermGroup codomain, std::vector<Perm> gen_images);

  const PermGroup &domain() const { return domain_; }
  const PermGroup &codomain() const { return codomain_; }
  const std::vector<Perm> &gen_images() const { return gen_images_; }

  const Perm &apply(Elem x) const { return images_[x]; }
  const Perm &apply(const Perm &x) const { return images_[domain_.enumerate().index(x)]; }
  const std::vector<Perm> &images() const { return images_; }

  bool injective() const;
  /// Needs an enumerable codomain.
  bool surjective() const;

private:
  PermGroup domain_, codomain_;
  std::vector<Perm> gen_images_;
  std::vector<Perm> images_; // indexed by domain element
};

/// Composite g ∘ f.
Hom compose(const Hom &g, const Hom &f);

} // namespace lfg::group
