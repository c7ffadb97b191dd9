#include "lfg/limits.hpp"

#include <algorithm>
#include <stdexcept>

namespace lfg::limits {

using group::Elem;

DirectSystem DirectSystem::make(std::vector<PermGroup> stages, std::vector<Hom> maps)
{
  if (stages.empty())
    throw std::invalid_argument("a direct system needs at least one stage");
  if (maps.size() + 1 != stages.size())
    throw std::invalid_argument("need exactly one map between consecutive stages");
  for (std::size_t i = 0; i < maps.size(); ++i) {
    if (!maps[i].domain().same_as(stages[i]) || !maps[i].codomain().same_as(stages[i + 1]))
      throw std::invalid_argument("map " + std::to_string(i) + " does not join stages " +
                                  std::to_string(i) + " and " + std::to_string(i + 1));
    if (!maps[i].injective())
      throw std::invalid_argument("map " + std::to_string(i) + " is not injective");
  }
  DirectSystem s;
  s.stages_ = std::move(stages);
  s.maps_ = std::move(maps);
  return s;
}

Perm DirectSystem::push(const Perm &x, std::size_t from, std::size_t to) const
{
  if (from > to || to > depth())
    throw std::out_of_range("invalid stage range for push");
  Perm v = x;
  for (std::size_t i = from; i < to; ++i)
    v = maps_[i].apply(v);
  return v;
}

LimitElement limit_element(const DirectSystem &sys, std::size_t stage, Perm value)
{
  if (stage > sys.depth())
    throw std::out_of_range("stage " + std::to_string(stage) + " beyond system depth");
  if (!sys.stage(stage).contains(value))
    throw std::invalid_argument("value is not an element of stage " + std::to_string(stage));
  return LimitElement{stage, std::move(value)};
}

LimitElement limit_identity(const DirectSystem &sys)
{
  return LimitElement{0, sys.stage(0).identity()};
}

namespace {

void check_stage(const LimitElement &x, const DirectSystem &sys)
{
  if (x.stage > sys.depth())
    throw std::out_of_range("stage " + std::to_string(x.stage) + " beyond system depth");
}

} // namespace

bool limit_eq(const LimitElement &x, const LimitElement &y, const DirectSystem &sys)
{
  check_stage(x, sys);
  check_stage(y, sys);
  if (x.stage <= y.stage)
    return sys.push(x.value, x.stage, y.stage) == y.value;
  return sys.push(y.value, y.stage, x.stage) == x.value;
}

LimitElement limit_multiply(const LimitElement &x, const LimitElement &y, const DirectSystem &sys)
{
  check_stage(x, sys);
  check_stage(y, sys);
  const std::size_t top = std::max(x.stage, y.stage);
  return LimitElement{top, sys.push(x.value, x.stage, top) * sys.push(y.value, y.stage, top)};
}

// ---------------------------------------------------------------------------

DTower make_cayley_tower(const PermGroup &A, const PermGroup &H0, std::size_t depth,
                         std::size_t point_budget)
{
  if (depth > 2)
    throw std::invalid_argument("tower depth above 2 is not supported");
  if (group::is_abelian(H0) || !group::is_simple(H0).simple)
    throw std::invalid_argument("H_0 must be simple and non-abelian");

  DTower T;
  T.A = A;
  T.H.push_back(H0);
  for (std::size_t i = 0; i < depth; ++i) {
    PermGroup G = PermGroup::sum(A, T.H.back());
    if (!G.enumerable()) {
      if (i + 1 != depth)
        throw BudgetError("stage " + std::to_string(i) + " is too large to continue the tower",
                          G.budget());
      T.lazy.emplace(std::move(G));
      break;
    }
    if (G.order() + 2 > point_budget)
      throw BudgetError("stage " + std::to_string(i + 1) + " needs " +
                          std::to_string(G.order() + 2) + " points, over the point budget",
                        point_budget);
    Hom f = group::cayley_embedding_even(G);
    if (!f.injective())
      throw std::logic_error("even Cayley embedding is not injective");
    T.H.push_back(f.codomain());
    T.f.push_back(std::move(f));
  }
  return T;
}

DSystem build_D(const DTower &tower)
{
  const std::size_t da = tower.A.degree();
  std::vector<PermGroup> stages;
  for (const auto &f : tower.f)
    stages.push_back(f.domain());
  stages.push_back(PermGroup::sum(tower.A, tower.H[tower.f.size()]));

  std::vector<Hom> maps;
  for (std::size_t i = 0; i < tower.f.size(); ++i) {
    std::vector<Perm> imgs;
    for (const auto &g : stages[i].gens())
      imgs.push_back(group::concat(g.restrict(0, da), tower.f[i].apply(g)));
    maps.push_back(Hom::make(stages[i], stages[i + 1], std::move(imgs)));
  }
  std::vector<PermGroup> H(tower.H.begin(), tower.H.begin() + tower.f.size() + 1);
  return DSystem{DirectSystem::make(std::move(stages), std::move(maps)), tower.A, std::move(H)};
}

Perm project_pi(const LimitElement &x, const DSystem &D)
{
  if (x.stage > D.system.depth())
    throw std::out_of_range("stage beyond system depth");
  if (x.value.degree() != D.A.degree() + D.H[x.stage].degree())
    throw std::invalid_argument("element does not belong to a D-system stage");
  return x.value.restrict(0, D.A.degree());
}

bool s_membership(const LimitElement &x, const DSystem &D) { return project_pi(x, D).is_identity(); }

std::vector<Elem> kernel_of_pi(const DSystem &D, std::size_t stage)
{
  const auto &E = D.system.stage(stage).enumerate();
  std::vector<Elem> ker;
  for (Elem x = 0; x < E.size(); ++x)
    if (E.element(x).restrict(0, D.A.degree()).is_identity())
      ker.push_back(x);
  return ker;
}

QuotientReport quotient_is_A(const DSystem &D, std::size_t stage)
{
  const PermGroup &G = D.system.stage(stage);
  const auto &E = G.enumerate();
  const auto ker = kernel_of_pi(D, stage);

  // coset of x = smallest index in x K
  constexpr Elem unset = static_cast<Elem>(-1);
  std::vector<Elem> coset_of(E.size(), unset);
  std::vector<Elem> reps;
  for (Elem x = 0; x < E.size(); ++x) {
    if (coset_of[x] != unset)
      continue;
    const auto id = static_cast<Elem>(reps.size());
    reps.push_back(x);
    for (Elem k : ker)
      coset_of[E.mul(x, k)] = id;
  }

  std::vector<Perm> gens;
  for (const auto &g : G.gens()) {
    const Elem gi = E.index(g);
    std::vector<group::Point> im(reps.size());
    for (std::size_t c = 0; c < reps.size(); ++c)
      im[c] = coset_of[E.mul(gi, reps[c])];
    gens.emplace_back(std::move(im));
  }

  QuotientReport r;
  r.group_order = E.size();
  r.kernel_order = ker.size();
  r.quotient = PermGroup::make(reps.size(), std::move(gens), G.budget());
  r.iso_to_A = group::brute_iso(r.quotient, D.A);
  return r;
}

std::string to_string(Absorption a)
{
  switch (a) {
  case Absorption::Contains:
    return "contains";
  case Absorption::DoesNotContain:
    return "does-not-contain";
  case Absorption::DeferredToNextStage:
    return "deferred-to-next-stage";
  case Absorption::InconclusiveAtBoundary:
    return "inconclusive-at-truncation-boundary";
  }
  return "?";
}

AbsorptionReport check_normal_absorption(const DSystem &D, std::size_t stage, const Perm &g)
{
  const PermGroup &G = D.system.stage(stage);
  if (!G.contains(g))
    throw std::invalid_argument("element is not in the stage group");
  if (g.is_identity())
    throw std::invalid_argument("absorption needs a nontrivial element");

  const auto N = group::normal_closure(G, g);
  const auto ker = kernel_of_pi(D, stage);
  const std::size_t da = D.A.degree(), dh = D.H[stage].degree();

  AbsorptionReport r;
  r.closure_order = N.order();
  r.h_coordinate_trivial = g.restrict(da, dh).is_identity();
  const bool contains =
    std::all_of(ker.begin(), ker.end(), [&](Elem k) { return N.contains(k); });
  if (contains) {
    r.status = Absorption::Contains;
  } else if (!r.h_coordinate_trivial) {
    r.status = Absorption::DoesNotContain;
  } else if (stage < D.system.depth()) {
    r.status = Absorption::DeferredToNextStage;
    const Perm up = D.system.push(g, stage, stage + 1);
    r.next_stage_h_nontrivial = !up.restrict(da, D.H[stage + 1].degree()).is_identity();
  } else {
    r.status = Absorption::InconclusiveAtBoundary;
  }
  return r;
}

} // namespace lfg::limits
