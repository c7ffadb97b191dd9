#include "lfg/lazy_stage.hpp"

#include <mutex>
#include <stdexcept>

namespace lfg::limits {

struct LazyElement::Memo
{
  std::once_flag once;
  Perm value;
};

LazyElement::LazyElement(std::vector<Perm> chain, bool aux_swap, std::size_t degree)
: chain_(std::move(chain)), aux_swap_(aux_swap), degree_(degree), memo_(std::make_shared<Memo>())
{}

const Perm &LazyElement::value() const
{
  std::call_once(memo_->once, [this] {
    Perm v = Perm::identity(degree_);
    for (const auto &z : chain_)
      v = v * z;
    memo_->value = std::move(v);
  });
  return memo_->value;
}

namespace {

unsigned two_adic(const BigInt &x)
{
  return x == 0 ? 0 : static_cast<unsigned>(boost::multiprecision::lsb(x));
}

} // namespace

LazyStage::LazyStage(PermGroup domain) : domain_(std::move(domain))
{
  order_ = domain_.order_big();
  two_adic_ = two_adic(order_);
}

bool LazyStage::left_multiplication_odd(const Perm &z) const
{
  const auto ord = z.order();
  // |G|/ord cycles of length ord
  return ord % 2 == 0 && two_adic(BigInt(ord)) == two_adic_;
}

LazyElement LazyStage::image(const Perm &z) const
{
  if (!domain_.contains(z))
    throw std::invalid_argument("element is not in the lazy stage's domain");
  return LazyElement({z}, left_multiplication_odd(z), domain_.degree());
}

LazyElement LazyStage::identity() const { return LazyElement({}, false, domain_.degree()); }

LazyElement LazyStage::multiply(const LazyElement &u, const LazyElement &v) const
{
  std::vector<Perm> chain = u.chain();
  chain.insert(chain.end(), v.chain().begin(), v.chain().end());
  return LazyElement(std::move(chain), u.aux_swap() != v.aux_swap(), domain_.degree());
}

LazyPoint LazyStage::evaluate(const LazyElement &u, const LazyPoint &x) const
{
  if (const int *aux = std::get_if<int>(&x)) {
    if (*aux != 0 && *aux != 1)
      throw std::invalid_argument("auxiliary point must be 0 or 1");
    return u.aux_swap() ? 1 - *aux : *aux;
  }
  const Perm &p = std::get<Perm>(x);
  if (!domain_.contains(p))
    throw std::invalid_argument("point is not an element of the domain");
  return u.value() * p;
}

bool LazyStage::equal(const LazyElement &u, const LazyElement &v) const
{
  return u.aux_swap() == v.aux_swap() && u.value() == v.value();
}

bool LazyStage::is_even(const LazyElement &u) const
{
  return left_multiplication_odd(u.value()) == u.aux_swap();
}

} // namespace lfg::limits
