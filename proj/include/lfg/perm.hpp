#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace lfg::group {

using Point = std::uint32_t;

/// Permutation of {0..degree-1} stored as its image list.
/// Products compose right to left: (p * q)(i) = p(q(i)).
class Perm
{
public:
  Perm() = default;

  /// Throws std::invalid_argument if `images` is not a bijection.
  explicit Perm(std::vector<Point> images);
  Perm(std::initializer_list<Point> images) : Perm(std::vector<Point>(images)) {}

  static Perm identity(std::size_t degree);
  /// Product of the given cycles on `degree` points, e.g. {{0,1,2},{3,4}}.
  static Perm from_cycles(std::size_t degree, std::initializer_list<std::initializer_list<Point>> cycles);
  static bool is_bijection(std::span<const Point> images);

  std::size_t degree() const { return images_.size(); }
  Point operator[](Point i) const { return images_[i]; }
  const std::vector<Point> &images() const { return images_; }

  bool is_identity() const;
  bool is_even() const;
  std::uint64_t order() const;
  Perm inverse() const;

  /// This permutation acting on points [offset, offset + degree()) of a
  /// larger ground set, fixing everything else.
  Perm embed(std::size_t offset, std::size_t total_degree) const;
  /// Restriction to the block [offset, offset + len), which must be
  /// invariant; throws std::invalid_argument otherwise.
  Perm restrict(std::size_t offset, std::size_t len) const;
  bool block_invariant(std::size_t offset, std::size_t len) const;

  friend Perm operator*(const Perm &p, const Perm &q);
  bool operator==(const Perm &) const = default;
  auto operator<=>(const Perm &) const = default;

  /// "perm <degree>: <img0> <img1> ..."
  std::string to_string() const;

private:
  struct Unchecked {};
  Perm(std::vector<Point> images, Unchecked) : images_(std::move(images)) {}

  std::vector<Point> images_;
};

struct PermHash
{
  std::size_t operator()(const Perm &p) const noexcept;
};

/// Disjoint concatenation: p on the first block, q on the second.
Perm concat(const Perm &p, const Perm &q);

} // namespace lfg::group
