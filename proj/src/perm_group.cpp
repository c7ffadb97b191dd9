#include "lfg/perm_group.hpp"

#include <deque>
#include <mutex>
#include <stdexcept>

#include "lfg/kernels.hpp"

namespace lfg::group {

struct Enumeration::TableCache
{
  std::once_flag once;
  std::vector<Elem> table;
};

Enumeration::Enumeration(std::size_t degree, std::span<const Perm> gens, std::size_t budget)
: gen_count_(gens.size()), table_(std::make_shared<TableCache>())
{
  elems_.push_back(Perm::identity(degree));
  index_.emplace(elems_[0], 0);
  parent_.push_back(0);
  parent_gen_.push_back(0);

  for (std::size_t head = 0; head < elems_.size(); ++head) {
    for (std::size_t k = 0; k < gens.size(); ++k) {
      Perm y = elems_[head] * gens[k];
      auto [it, inserted] = index_.try_emplace(std::move(y), static_cast<Elem>(elems_.size()));
      if (inserted) {
        if (elems_.size() >= budget)
          throw BudgetError("group order exceeds enumeration budget " + std::to_string(budget),
                            budget);
        elems_.push_back(it->first);
        parent_.push_back(static_cast<Elem>(head));
        parent_gen_.push_back(static_cast<std::uint32_t>(k));
      }
      right_gen_.push_back(it->second);
    }
  }

  inverse_.resize(elems_.size());
  orders_.resize(elems_.size());
  for (Elem i = 0; i < elems_.size(); ++i) {
    inverse_[i] = index_.at(elems_[i].inverse());
    orders_[i] = elems_[i].order();
  }
}

std::optional<Elem> Enumeration::find(const Perm &p) const
{
  auto it = index_.find(p);
  if (it == index_.end())
    return std::nullopt;
  return it->second;
}

Elem Enumeration::index(const Perm &p) const
{
  auto it = index_.find(p);
  if (it == index_.end())
    throw std::invalid_argument("permutation is not an element of the group");
  return it->second;
}

Elem Enumeration::mul(Elem a, Elem b) const
{
  if (const auto *t = table())
    return (*t)[static_cast<std::size_t>(a) * size() + b];
  return index_.at(elems_[a] * elems_[b]);
}

const std::vector<Elem> *Enumeration::table() const
{
  if (size() > kTableLimit)
    return nullptr;
  std::call_once(table_->once, [this] { table_->table = kernels::cayley_table_parallel(*this); });
  return &table_->table;
}

// ---------------------------------------------------------------------------

struct PermGroup::Cache
{
  std::once_flag once;
  std::unique_ptr<Enumeration> enumeration;
  std::optional<BudgetError> failure;
};

PermGroup::PermGroup() : cache_(std::make_shared<Cache>()) {}

PermGroup PermGroup::make(std::size_t degree, std::vector<Perm> gens, std::size_t budget)
{
  for (const auto &g : gens)
    if (g.degree() != degree)
      throw std::invalid_argument("generator degree " + std::to_string(g.degree()) +
                                  " does not match group degree " + std::to_string(degree));
  PermGroup G{Raw{}};
  G.degree_ = degree;
  G.gens_ = std::move(gens);
  G.budget_ = budget;
  G.cache_ = std::make_shared<Cache>();
  return G;
}

PermGroup PermGroup::alternating(std::size_t n, std::size_t budget)
{
  // 3-cycles (0 1 i) generate Alt(n)
  std::vector<Perm> gens;
  for (std::size_t i = 2; i < n; ++i)
    gens.push_back(Perm::from_cycles(n, {{0, 1, static_cast<Point>(i)}}));
  auto G = make(n, std::move(gens), budget);
  G.kind_ = Kind::Alternating;
  return G;
}

PermGroup PermGroup::symmetric(std::size_t n, std::size_t budget)
{
  std::vector<Perm> gens;
  if (n >= 2) {
    gens.push_back(Perm::from_cycles(n, {{0, 1}}));
    if (n >= 3) {
      std::vector<Point> cyc(n);
      for (Point i = 0; i < n; ++i)
        cyc[i] = (i + 1) % static_cast<Point>(n);
      gens.emplace_back(std::move(cyc));
    }
  }
  auto G = make(n, std::move(gens), budget);
  G.kind_ = Kind::Symmetric;
  return G;
}

PermGroup PermGroup::sum(const PermGroup &a, const PermGroup &b)
{
  const std::size_t deg = a.degree() + b.degree();
  std::vector<Perm> gens;
  for (const auto &g : a.gens())
    gens.push_back(g.embed(0, deg));
  for (const auto &g : b.gens())
    gens.push_back(g.embed(a.degree(), deg));
  auto G = make(deg, std::move(gens), std::max(a.budget(), b.budget()));
  G.kind_ = Kind::DirectSum;
  G.parts_ = {a, b};
  return G;
}

const Enumeration &PermGroup::enumerate() const
{
  std::call_once(cache_->once, [this] {
    try {
      cache_->enumeration = std::make_unique<Enumeration>(degree_, gens_, budget_);
    } catch (const BudgetError &e) {
      cache_->failure = e;
    }
  });
  if (cache_->failure)
    throw *cache_->failure;
  return *cache_->enumeration;
}

bool PermGroup::enumerable() const
{
  if (kind_ != Kind::Generic && order_big() > budget_)
    return false;
  try {
    enumerate();
    return true;
  } catch (const BudgetError &) {
    return false;
  }
}

namespace {

BigInt factorial(std::size_t n)
{
  BigInt r = 1;
  for (std::size_t i = 2; i <= n; ++i)
    r *= i;
  return r;
}

} // namespace

BigInt PermGroup::order_big() const
{
  switch (kind_) {
  case Kind::Alternating:
    return degree_ < 2 ? BigInt(1) : BigInt(factorial(degree_) / 2);
  case Kind::Symmetric:
    return factorial(degree_);
  case Kind::DirectSum:
    return parts_[0].order_big() * parts_[1].order_big();
  case Kind::Generic:
    break;
  }
  return BigInt(enumerate().size());
}

bool PermGroup::contains(const Perm &p) const
{
  if (p.degree() != degree_)
    return false;
  switch (kind_) {
  case Kind::Alternating:
    return p.is_even();
  case Kind::Symmetric:
    return true;
  case Kind::DirectSum: {
    const auto da = parts_[0].degree(), db = parts_[1].degree();
    return p.block_invariant(0, da) && p.block_invariant(da, db) &&
           parts_[0].contains(p.restrict(0, da)) && parts_[1].contains(p.restrict(da, db));
  }
  case Kind::Generic:
    break;
  }
  return enumerate().find(p).has_value();
}

// ---------------------------------------------------------------------------

Hom Hom::make(PermGroup domain, PermGroup codomain, std::vector<Perm> gen_images)
{
  if (gen_images.size() != domain.gens().size())
    throw std::invalid_argument("need one image per domain generator");
  for (const auto &img : gen_images)
    if (!codomain.contains(img))
      throw std::invalid_argument("generator image is not in the codomain");

  const auto &E = domain.enumerate();
  std::vector<Perm> images(E.size());
  images[0] = codomain.identity();
  for (Elem i = 1; i < E.size(); ++i)
    images[i] = images[E.parent(i)] * gen_images[E.parent_gen(i)];
  for (Elem i = 0; i < E.size(); ++i)
    for (std::size_t k = 0; k < E.gen_count(); ++k)
      if (images[E.mul_gen(i, k)] != images[i] * gen_images[k])
        throw std::invalid_argument("generator images do not define a homomorphism");

  Hom h;
  h.domain_ = std::move(domain);
  h.codomain_ = std::move(codomain);
  h.gen_images_ = std::move(gen_images);
  h.images_ = std::move(images);
  return h;
}

bool Hom::injective() const
{
  for (std::size_t i = 1; i < images_.size(); ++i)
    if (images_[i].is_identity())
      return false;
  return true;
}

bool Hom::surjective() const
{
  const auto &C = codomain_.enumerate();
  std::vector<char> hit(C.size(), 0);
  std::size_t count = 0;
  for (const auto &img : images_) {
    auto j = C.index(img);
    if (!hit[j]) {
      hit[j] = 1;
      ++count;
    }
  }
  return count == C.size();
}

Hom compose(const Hom &g, const Hom &f)
{
  std::vector<Perm> imgs;
  for (const auto &x : f.gen_images())
    imgs.push_back(g.apply(x));
  return Hom::make(f.domain(), g.codomain(), std::move(imgs));
}

} // namespace lfg::group
