#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "lfg/graph.hpp"
#include "lfg/mekler.hpp"
#include "lfg/perm_group.hpp"

// Data-parallel kernels. Each has a serial reference version; the OpenMP
// versions must return identical results and are checked against them.
namespace lfg::kernels {

std::optional<graph::Vertex> find_extension_witness(const graph::Graph &g,
                                                    std::span<const graph::Vertex> a,
                                                    std::span<const graph::Vertex> b);

std::vector<graph::ExtensionGap> audit_extension_serial(const graph::Graph &g, std::size_t max_size,
                                                        std::span<const graph::Vertex> domain);
std::vector<graph::ExtensionGap> audit_extension_parallel(const graph::Graph &g, std::size_t max_size,
                                                          std::span<const graph::Vertex> domain);

/// Row-major Cayley table of an enumerated group.
std::vector<group::Elem> cayley_table_serial(const group::Enumeration &E);
std::vector<group::Elem> cayley_table_parallel(const group::Enumeration &E);

/// Multiplication table of a Mekler group over encoded elements.
std::vector<std::uint32_t> pc_table_serial(const mekler::PcGroup &G);
std::vector<std::uint32_t> pc_table_parallel(const mekler::PcGroup &G);

/// Lexicographically first (x, y, z) with (xy)z != x(yz) in an n x n table.
using Triple = std::array<std::uint32_t, 3>;
std::optional<Triple> find_nonassociative_serial(std::span<const std::uint32_t> table, std::size_t n);
std::optional<Triple> find_nonassociative_parallel(std::span<const std::uint32_t> table, std::size_t n);

} // namespace lfg::kernels
