#include "lfg/perm.hpp"

#include <numeric>
#include <stdexcept>

namespace lfg::group {

Perm::Perm(std::vector<Point> images) : images_(std::move(images))
{
  if (!is_bijection(images_))
    throw std::invalid_argument("image list is not a permutation");
}

bool Perm::is_bijection(std::span<const Point> images)
{
  std::vector<char> seen(images.size(), 0);
  for (Point p : images) {
    if (p >= images.size() || seen[p])
      return false;
    seen[p] = 1;
  }
  return true;
}

Perm Perm::identity(std::size_t degree)
{
  std::vector<Point> im(degree);
  std::iota(im.begin(), im.end(), Point{0});
  return Perm(std::move(im), Unchecked{});
}

Perm Perm::from_cycles(std::size_t degree,
                       std::initializer_list<std::initializer_list<Point>> cycles)
{
  std::vector<Point> im(degree);
  std::iota(im.begin(), im.end(), Point{0});
  std::vector<char> used(degree, 0);
  for (const auto &cycle : cycles) {
    std::vector<Point> c(cycle);
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i] >= degree || used[c[i]])
        throw std::invalid_argument("cycles are not disjoint or out of range");
      used[c[i]] = 1;
      im[c[i]] = c[(i + 1) % c.size()];
    }
  }
  return Perm(std::move(im), Unchecked{});
}

bool Perm::is_identity() const
{
  for (Point i = 0; i < images_.size(); ++i)
    if (images_[i] != i)
      return false;
  return true;
}

bool Perm::is_even() const
{
  std::vector<char> seen(images_.size(), 0);
  std::size_t transpositions = 0;
  for (Point i = 0; i < images_.size(); ++i) {
    if (seen[i])
      continue;
    std::size_t len = 0;
    for (Point j = i; !seen[j]; j = images_[j]) {
      seen[j] = 1;
      ++len;
    }
    transpositions += len - 1;
  }
  return transpositions % 2 == 0;
}

std::uint64_t Perm::order() const
{
  std::vector<char> seen(images_.size(), 0);
  std::uint64_t ord = 1;
  for (Point i = 0; i < images_.size(); ++i) {
    if (seen[i])
      continue;
    std::uint64_t len = 0;
    for (Point j = i; !seen[j]; j = images_[j]) {
      seen[j] = 1;
      ++len;
    }
    ord = std::lcm(ord, len);
  }
  return ord;
}

Perm Perm::inverse() const
{
  std::vector<Point> inv(images_.size());
  for (Point i = 0; i < images_.size(); ++i)
    inv[images_[i]] = i;
  return Perm(std::move(inv), Unchecked{});
}

Perm Perm::embed(std::size_t offset, std::size_t total_degree) const
{
  if (offset + degree() > total_degree)
    throw std::invalid_argument("embedding block exceeds ground set");
  std::vector<Point> im(total_degree);
  std::iota(im.begin(), im.end(), Point{0});
  for (Point i = 0; i < degree(); ++i)
    im[offset + i] = static_cast<Point>(offset + images_[i]);
  return Perm(std::move(im), Unchecked{});
}

bool Perm::block_invariant(std::size_t offset, std::size_t len) const
{
  if (offset + len > degree())
    return false;
  for (std::size_t i = offset; i < offset + len; ++i)
    if (images_[i] < offset || images_[i] >= offset + len)
      return false;
  return true;
}

Perm Perm::restrict(std::size_t offset, std::size_t len) const
{
  if (!block_invariant(offset, len))
    throw std::invalid_argument("block is not invariant under the permutation");
  std::vector<Point> im(len);
  for (std::size_t i = 0; i < len; ++i)
    im[i] = static_cast<Point>(images_[offset + i] - offset);
  return Perm(std::move(im), Unchecked{});
}

Perm operator*(const Perm &p, const Perm &q)
{
  if (p.degree() != q.degree())
    throw std::invalid_argument("degree mismatch in permutation product");
  std::vector<Point> im(p.degree());
  for (Point i = 0; i < im.size(); ++i)
    im[i] = p.images_[q.images_[i]];
  return Perm(std::move(im), Perm::Unchecked{});
}

std::string Perm::to_string() const
{
  std::string s = "perm " + std::to_string(degree()) + ":";
  for (Point p : images_)
    s += " " + std::to_string(p);
  return s;
}

std::size_t PermHash::operator()(const Perm &p) const noexcept
{
  // FNV-1a over the image list
  std::uint64_t h = 1469598103934665603ull;
  for (Point x : p.images()) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

Perm concat(const Perm &p, const Perm &q)
{
  std::vector<Point> im(p.degree() + q.degree());
  for (Point i = 0; i < p.degree(); ++i)
    im[i] = p[i];
  const auto off = static_cast<Point>(p.degree());
  for (Point i = 0; i < q.degree(); ++i)
    im[off + i] = off + q[i];
  return Perm(std::move(im));
}

} // namespace lfg::group
