#include "lfg/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace lfg::group {

PermGroup trivial_group() { return PermGroup::make(0, {}); }

PermGroup cyclic(std::size_t n)
{
  if (n == 0)
    throw std::invalid_argument("cyclic group of order 0");
  if (n == 1)
    return PermGroup::make(1, {});
  std::vector<Point> im(n);
  for (Point i = 0; i < n; ++i)
    im[i] = (i + 1) % static_cast<Point>(n);
  return PermGroup::make(n, {Perm(std::move(im))});
}

PermGroup dihedral(std::size_t n)
{
  if (n < 3)
    throw std::invalid_argument("dihedral group needs n >= 3");
  std::vector<Point> rot(n), ref(n);
  for (Point i = 0; i < n; ++i) {
    rot[i] = (i + 1) % static_cast<Point>(n);
    ref[i] = (static_cast<Point>(n) - i) % static_cast<Point>(n);
  }
  return PermGroup::make(n, {Perm(std::move(rot)), Perm(std::move(ref))});
}

PermGroup regular_group(std::size_t order, const std::vector<std::size_t> &gen_elements,
                        const std::function<std::size_t(std::size_t, std::size_t)> &mul)
{
  std::vector<Perm> gens;
  for (std::size_t g : gen_elements) {
    std::vector<Point> im(order);
    for (std::size_t x = 0; x < order; ++x)
      im[x] = static_cast<Point>(mul(g, x));
    gens.emplace_back(std::move(im));
  }
  return PermGroup::make(order, std::move(gens));
}

PermGroup dicyclic(std::size_t n)
{
  if (n < 2)
    throw std::invalid_argument("dicyclic group needs n >= 2");
  // a^k x^e encoded as k + 2n e; a^2n = 1, x^2 = a^n, x a = a^-1 x
  const std::size_t m = 2 * n;
  auto mul = [m, n](std::size_t u, std::size_t v) {
    const std::size_t k = u % m, e = u / m, l = v % m, f = v / m;
    std::size_t power = e ? (k + m - l) % m : (k + l) % m;
    std::size_t x = e + f;
    if (x == 2) {
      power = (power + n) % m;
      x = 0;
    }
    return power + m * x;
  };
  return regular_group(2 * m, {1, m}, mul);
}

PermGroup quaternion() { return dicyclic(2); }

PermGroup klein_four()
{
  return PermGroup::make(4, {Perm{1, 0, 3, 2}, Perm{2, 3, 0, 1}});
}

namespace {

std::size_t parse_size(const std::string &digits, const std::string &name)
{
  if (digits.empty() || digits.size() > 6 ||
      !std::all_of(digits.begin(), digits.end(), [](unsigned char c) { return std::isdigit(c); }))
    throw std::invalid_argument("unknown group name '" + name + "'");
  return std::stoul(digits);
}

PermGroup with_budget(const PermGroup &G, std::size_t budget)
{
  if (G.kind() == PermGroup::Kind::Alternating)
    return PermGroup::alternating(G.degree(), budget);
  if (G.kind() == PermGroup::Kind::Symmetric)
    return PermGroup::symmetric(G.degree(), budget);
  return PermGroup::make(G.degree(), G.gens(), budget);
}

PermGroup atom(const std::string &name, std::size_t budget)
{
  if (name == "trivial" || name == "1")
    return with_budget(trivial_group(), budget);
  if (name == "V4")
    return with_budget(klein_four(), budget);
  if (name == "Q8")
    return with_budget(quaternion(), budget);
  if (name.rfind("Dic", 0) == 0)
    return with_budget(dicyclic(parse_size(name.substr(3), name)), budget);
  if (name.empty())
    throw std::invalid_argument("empty group name");
  const std::size_t n = parse_size(name.substr(1), name);
  switch (name[0]) {
  case 'C':
    return with_budget(cyclic(n), budget);
  case 'S':
    return PermGroup::symmetric(n, budget);
  case 'A':
    return PermGroup::alternating(n, budget);
  case 'D':
    return with_budget(dihedral(n), budget);
  default:
    throw std::invalid_argument("unknown group name '" + name + "'");
  }
}

} // namespace

PermGroup named_group(const std::string &name, std::size_t budget)
{
  std::vector<std::string> parts;
  std::string cur;
  for (char c : name) {
    if (c == '+' || c == 'x') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  PermGroup G = atom(parts[0], budget);
  for (std::size_t i = 1; i < parts.size(); ++i)
    G = PermGroup::sum(G, atom(parts[i], budget));
  return G;
}

std::vector<CatalogEntry> small_groups(std::size_t max_order)
{
  if (max_order > 15)
    throw std::invalid_argument("catalog covers orders up to 15 only");
  static const char *const names[] = {
    "trivial", "C2", "C3", "C4", "V4", "C5", "C6", "S3", "C7",
    "C8", "C4xC2", "C2xC2xC2", "D4", "Q8", "C9", "C3xC3", "C10", "D5", "C11",
    "C12", "C6xC2", "A4", "D6", "Dic3", "C13", "C14", "D7", "C15"};
  std::vector<CatalogEntry> out;
  for (const char *nm : names) {
    PermGroup G = named_group(nm);
    if (G.order() <= max_order)
      out.push_back(CatalogEntry{nm, std::move(G)});
  }
  return out;
}

} // namespace lfg::group
