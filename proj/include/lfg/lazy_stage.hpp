#pragma once

#include <memory>
#include <variant>
#include <vector>

#include "lfg/perm_group.hpp"

namespace lfg::limits {

using group::BigInt;
using group::Perm;
using group::PermGroup;

/// Element of the image of the even Cayley embedding of a group too large
/// to enumerate: a chain z_1 ... z_k of domain elements standing for
/// L_{z_1} ... L_{z_k}, times the auxiliary transposition when `aux_swap`.
/// The composed value is memoized on first use.
class LazyElement
{
public:
  LazyElement() = default;
  LazyElement(std::vector<Perm> chain, bool aux_swap, std::size_t degree);

  const std::vector<Perm> &chain() const { return chain_; }
  bool aux_swap() const { return aux_swap_; }
  /// z_1 * ... * z_k, computed once.
  const Perm &value() const;

private:
  struct Memo;
  std::vector<Perm> chain_;
  bool aux_swap_ = false;
  std::size_t degree_ = 0;
  std::shared_ptr<Memo> memo_;
};

/// A point of the implicit ground set: a domain element or auxiliary point
/// 0 or 1.
using LazyPoint = std::variant<Perm, int>;

/// f: G -> Alt(|G| + 2) for a structurally known, non-enumerated G. The
/// target is never materialized; elements are evaluated pointwise.
class LazyStage
{
public:
  explicit LazyStage(PermGroup domain);

  const PermGroup &domain() const { return domain_; }
  const BigInt &domain_order() const { return order_; }
  BigInt target_degree() const { return order_ + 2; }

  /// Parity of left multiplication by z on G: odd iff ord(z) is even and
  /// |G| / ord(z) is odd.
  bool left_multiplication_odd(const Perm &z) const;

  /// f(z); throws std::invalid_argument if z is not in the domain.
  LazyElement image(const Perm &z) const;
  LazyElement identity() const;
  LazyElement multiply(const LazyElement &u, const LazyElement &v) const;

  LazyPoint evaluate(const LazyElement &u, const LazyPoint &x) const;
  /// Exact on the subgroup generated by images: such elements are
  /// determined by where they send the identity and the auxiliary points.
  bool equal(const LazyElement &u, const LazyElement &v) const;
  bool is_even(const LazyElement &u) const;

private:
  PermGroup domain_;
  BigInt order_;
  unsigned two_adic_ = 0;
};

} // namespace lfg::limits
