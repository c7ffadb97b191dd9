#pragma once

#include <functional>
#include <string>
#include <vector>

#include "lfg/perm_group.hpp"

namespace lfg::group {

PermGroup trivial_group();
PermGroup cyclic(std::size_t n);
/// Symmetries of the n-gon, order 2n (n >= 3), on n points.
PermGroup dihedral(std::size_t n);
/// Dicyclic group of order 4n in its regular representation; Q8 for n = 2.
PermGroup dicyclic(std::size_t n);
PermGroup klein_four();
PermGroup quaternion();

/// Builds the left regular representation of a group given on
/// {0..order-1} by `mul`, generated by the listed elements.
PermGroup regular_group(std::size_t order, const std::vector<std::size_t> &gen_elements,
                        const std::function<std::size_t(std::size_t, std::size_t)> &mul);

/// Names: "trivial", "C<n>", "S<n>", "A<n>", "D<n>" (order 2n), "V4",
/// "Q8", "Dic<n>", and direct sums joined by '+' or 'x', e.g. "C2+A5",
/// "C2xC2". Throws std::invalid_argument for unknown names.
PermGroup named_group(const std::string &name, std::size_t budget = Budgets{}.enumeration);

struct CatalogEntry
{
  std::string name;
  PermGroup group;
};

/// One group from each isomorphism class of order <= max_order, in order of
/// increasing order. Supports max_order <= 15.
std::vector<CatalogEntry> small_groups(std::size_t max_order);

} // namespace lfg::group
