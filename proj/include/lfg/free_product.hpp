#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "lfg/perm_group.hpp"

namespace lfg::group {

/// One letter of a word in G_0 * G_1: a factor tag and an element index
/// into that factor's enumeration.
struct Letter
{
  std::uint8_t factor = 0;
  Elem elem = 0;

  bool operator==(const Letter &) const = default;
};

/// Reduced word: alternating factor tags, no identity letters.
struct FPWord
{
  std::uint64_t product = 0; ///< fingerprint of the owning free product
  std::vector<Letter> letters;

  bool operator==(const FPWord &) const = default;
};

/// Free product of two enumerable groups.
class FreeProduct
{
public:
  FreeProduct(PermGroup g0, PermGroup g1);

  const PermGroup &factor(std::size_t i) const { return factors_[i]; }
  std::uint64_t fingerprint() const { return fingerprint_; }

  /// Letter for a permutation of factor i; throws std::invalid_argument if
  /// it is not in that factor.
  Letter letter(std::uint8_t factor, const Perm &p) const;

  /// Reduced form w* of a raw letter sequence. Throws
  /// std::invalid_argument for a bad factor tag or element index.
  FPWord reduce(std::span<const Letter> raw) const;
  FPWord identity() const { return FPWord{fingerprint_, {}}; }
  /// (w1 w2)*; throws std::invalid_argument for words of another product.
  FPWord multiply(const FPWord &w1, const FPWord &w2) const;
  FPWord inverse(const FPWord &w) const;
  bool is_reduced(const FPWord &w) const;

  std::string format(const FPWord &w) const;

private:
  void check(const Letter &l) const;
  void check(const FPWord &w) const;

  std::array<PermGroup, 2> factors_;
  std::uint64_t fingerprint_ = 0;
};

} // namespace lfg::group
