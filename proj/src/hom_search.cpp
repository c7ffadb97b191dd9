#include <stdexcept>

#include "lfg/group_algo.hpp"

namespace lfg::group {

namespace {

constexpr Elem kUnset = static_cast<Elem>(-1);

class HomBacktracker
{
public:
  HomBacktracker(const Enumeration &D, const Enumeration &C, const HomSearchOptions &opts,
                 const HomVisitor &visit)
  : D_(D), C_(C), opts_(opts), visit_(visit), images_(D.gen_count(), 0),
    map_(D.size(), kUnset), used_by_(C.size(), kUnset)
  {
    domain_gen_order_.resize(D.gen_count());
    // generator k is element mul_gen(0, k)
    for (std::size_t k = 0; k < D.gen_count(); ++k)
      domain_gen_order_[k] = D.element_order(D.mul_gen(0, k));
  }

  void run()
  {
    if (opts_.fixed.size() > images_.size())
      throw std::invalid_argument("more fixed images than domain generators");
    search(0);
  }

private:
  bool candidate_ok(std::size_t k, Elem c) const
  {
    const auto oc = C_.element_order(c), od = domain_gen_order_[k];
    return opts_.injective ? oc == od : od % oc == 0;
  }

  /// Rebuilds the map on <gens[0..level)>; false on conflict.
  bool extend_map(std::size_t level)
  {
    std::fill(map_.begin(), map_.end(), kUnset);
    if (opts_.injective)
      std::fill(used_by_.begin(), used_by_.end(), kUnset);
    queue_.clear();
    map_[0] = 0;
    used_by_[0] = 0;
    queue_.push_back(0);
    for (std::size_t head = 0; head < queue_.size(); ++head) {
      const Elem x = queue_[head];
      for (std::size_t k = 0; k < level; ++k) {
        const Elem y = D_.mul_gen(x, k);
        const Elem img = C_.mul(map_[x], images_[k]);
        if (map_[y] == kUnset) {
          if (opts_.injective) {
            if (used_by_[img] != kUnset)
              return false;
            used_by_[img] = y;
          }
          map_[y] = img;
          queue_.push_back(y);
        } else if (map_[y] != img) {
          return false;
        }
      }
    }
    return true;
  }

  bool search(std::size_t level)
  {
    if (level == images_.size()) {
      if (!extend_map(level))
        return true;
      if (opts_.surjective) {
        std::vector<char> hit(C_.size(), 0);
        std::size_t count = 0;
        for (Elem m : map_)
          if (!hit[m]) {
            hit[m] = 1;
            ++count;
          }
        if (count != C_.size())
          return true;
      }
      return visit_(images_, map_);
    }
    if (level < opts_.fixed.size()) {
      images_[level] = opts_.fixed[level];
      if (!candidate_ok(level, images_[level]) || !extend_map(level + 1))
        return true;
      return search(level + 1);
    }
    for (Elem c = 0; c < C_.size(); ++c) {
      if (!candidate_ok(level, c))
        continue;
      images_[level] = c;
      if (!extend_map(level + 1))
        continue;
      if (!search(level + 1))
        return false;
    }
    return true;
  }

  const Enumeration &D_;
  const Enumeration &C_;
  const HomSearchOptions &opts_;
  const HomVisitor &visit_;
  std::vector<std::uint64_t> domain_gen_order_;
  std::vector<Elem> images_;
  std::vector<Elem> map_;
  std::vector<Elem> used_by_;
  std::vector<Elem> queue_;
};

} // namespace

void for_each_hom(const PermGroup &domain, const PermGroup &codomain, const HomSearchOptions &opts,
                  const HomVisitor &visit)
{
  const auto &D = domain.enumerate();
  const auto &C = codomain.enumerate();
  if (opts.injective && D.size() > C.size())
    return;
  if (opts.surjective && D.size() % C.size() != 0)
    return;
  HomBacktracker(D, C, opts, visit).run();
}

Hom hom_from_images(const PermGroup &domain, const PermGroup &codomain,
                    std::span<const Elem> gen_images)
{
  const auto &C = codomain.enumerate();
  std::vector<Perm> imgs;
  imgs.reserve(gen_images.size());
  for (Elem e : gen_images)
    imgs.push_back(C.element(e));
  return Hom::make(domain, codomain, std::move(imgs));
}

} // namespace lfg::group
