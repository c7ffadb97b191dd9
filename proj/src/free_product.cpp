#include "lfg/free_product.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace lfg::group {

FreeProduct::FreeProduct(PermGroup g0, PermGroup g1) : factors_{std::move(g0), std::move(g1)}
{
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](std::uint64_t x) {
    h ^= x;
    h *= 1099511628211ull;
  };
  for (const auto &G : factors_) {
    G.enumerate();
    mix(G.degree());
    mix(G.gens().size());
    for (const auto &g : G.gens())
      mix(PermHash{}(g));
  }
  fingerprint_ = h;
}

void FreeProduct::check(const Letter &l) const
{
  if (l.factor > 1)
    throw std::invalid_argument("letter factor tag must be 0 or 1");
  if (l.elem >= factors_[l.factor].order())
    throw std::invalid_argument("letter element is not in factor " + std::to_string(l.factor));
}

void FreeProduct::check(const FPWord &w) const
{
  if (w.product != fingerprint_)
    throw std::invalid_argument("word belongs to a different free product");
}

Letter FreeProduct::letter(std::uint8_t factor, const Perm &p) const
{
  if (factor > 1)
    throw std::invalid_argument("letter factor tag must be 0 or 1");
  auto idx = factors_[factor].enumerate().find(p);
  if (!idx)
    throw std::invalid_argument("permutation is not in factor " + std::to_string(factor));
  return Letter{factor, *idx};
}

FPWord FreeProduct::reduce(std::span<const Letter> raw) const
{
  std::vector<Letter> stack;
  for (const Letter &l : raw) {
    check(l);
    if (l.elem == 0)
      continue;
    if (!stack.empty() && stack.back().factor == l.factor) {
      const Elem prod = factors_[l.factor].enumerate().mul(stack.back().elem, l.elem);
      if (prod == 0)
        stack.pop_back();
      else
        stack.back().elem = prod;
    } else {
      stack.push_back(l);
    }
  }
  return FPWord{fingerprint_, std::move(stack)};
}

FPWord FreeProduct::multiply(const FPWord &w1, const FPWord &w2) const
{
  check(w1);
  check(w2);
  std::vector<Letter> cat = w1.letters;
  cat.insert(cat.end(), w2.letters.begin(), w2.letters.end());
  return reduce(cat);
}

FPWord FreeProduct::inverse(const FPWord &w) const
{
  check(w);
  FPWord r{fingerprint_, {}};
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
    r.letters.push_back(Letter{it->factor, factors_[it->factor].enumerate().inverse(it->elem)});
  return r;
}

bool FreeProduct::is_reduced(const FPWord &w) const
{
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    if (w.letters[i].elem == 0)
      return false;
    if (i && w.letters[i].factor == w.letters[i - 1].factor)
      return false;
  }
  return true;
}

std::string FreeProduct::format(const FPWord &w) const
{
  std::ostringstream os;
  os << "word";
  for (const auto &l : w.letters)
    os << ' ' << static_cast<int>(l.factor) << ':' << l.elem;
  return os.str();
}

} // namespace lfg::group
