#include "lfg/group_algo.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <unordered_set>

namespace lfg::group {

bool Subgroup::contains(Elem x) const
{
  return std::binary_search(elements.begin(), elements.end(), x);
}

bool Subgroup::contains(const Subgroup &other) const
{
  return std::includes(elements.begin(), elements.end(), other.elements.begin(),
                       other.elements.end());
}

Subgroup closure(const Enumeration &E, std::span<const Elem> gens)
{
  std::vector<char> in(E.size(), 0);
  std::vector<Elem> found{0};
  in[0] = 1;
  for (std::size_t head = 0; head < found.size(); ++head)
    for (Elem g : gens) {
      const Elem y = E.mul(found[head], g);
      if (!in[y]) {
        in[y] = 1;
        found.push_back(y);
      }
    }
  std::sort(found.begin(), found.end());
  return Subgroup{std::move(found), std::vector<Elem>(gens.begin(), gens.end())};
}

Subgroup trivial_subgroup() { return Subgroup{{0}, {}}; }

Subgroup whole_group(const Enumeration &E)
{
  Subgroup S;
  S.elements.resize(E.size());
  std::iota(S.elements.begin(), S.elements.end(), Elem{0});
  for (std::size_t k = 0; k < E.gen_count(); ++k)
    S.gens.push_back(E.mul_gen(0, k));
  return S;
}

std::vector<Elem> small_generating_set(const Enumeration &E, const Subgroup &S)
{
  std::vector<Elem> by_order(S.elements);
  std::stable_sort(by_order.begin(), by_order.end(), [&](Elem a, Elem b) {
    return E.element_order(a) > E.element_order(b);
  });
  std::vector<Elem> gens;
  Subgroup current = trivial_subgroup();
  for (Elem x : by_order) {
    if (current.order() == S.order())
      break;
    if (current.contains(x))
      continue;
    gens.push_back(x);
    current = closure(E, gens);
  }
  return gens;
}

PermGroup subgroup_as_group(const PermGroup &G, std::span<const Elem> gens)
{
  const auto &E = G.enumerate();
  std::vector<Perm> perms;
  for (Elem g : gens)
    perms.push_back(E.element(g));
  return PermGroup::make(G.degree(), std::move(perms), G.budget());
}

PermGroup subgroup_as_group(const PermGroup &G, const Subgroup &S)
{
  return subgroup_as_group(G, small_generating_set(G.enumerate(), S));
}

bool is_abelian(const PermGroup &G)
{
  const auto &gens = G.gens();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (gens[i] * gens[j] != gens[j] * gens[i])
        return false;
  return true;
}

namespace {

Elem conjugate(const Enumeration &E, Elem x, Elem by)
{
  // by^-1 x by
  return E.mul(E.mul(E.inverse(by), x), by);
}

std::vector<Elem> generator_elements(const Enumeration &E)
{
  std::vector<Elem> g;
  for (std::size_t k = 0; k < E.gen_count(); ++k)
    g.push_back(E.mul_gen(0, k));
  return g;
}

} // namespace

bool is_normal(const PermGroup &G, const Subgroup &S)
{
  const auto &E = G.enumerate();
  for (Elem g : generator_elements(E))
    for (Elem x : S.elements)
      if (!S.contains(conjugate(E, x, g)))
        return false;
  return true;
}

std::vector<Elem> conjugacy_class(const PermGroup &G, Elem x)
{
  const auto &E = G.enumerate();
  const auto gens = generator_elements(E);
  std::vector<char> in(E.size(), 0);
  std::vector<Elem> cls{x};
  in[x] = 1;
  for (std::size_t head = 0; head < cls.size(); ++head)
    for (Elem g : gens) {
      const Elem y = conjugate(E, cls[head], g);
      if (!in[y]) {
        in[y] = 1;
        cls.push_back(y);
      }
    }
  std::sort(cls.begin(), cls.end());
  return cls;
}

Subgroup center(const PermGroup &G)
{
  const auto &E = G.enumerate();
  const auto gens = generator_elements(E);
  std::vector<Elem> z;
  for (Elem x = 0; x < E.size(); ++x) {
    bool central = true;
    for (Elem g : gens)
      if (E.mul(x, g) != E.mul(g, x)) {
        central = false;
        break;
      }
    if (central)
      z.push_back(x);
  }
  return Subgroup{z, z};
}

Subgroup derived_subgroup(const PermGroup &G)
{
  const auto &E = G.enumerate();
  std::vector<char> seen(E.size(), 0);
  std::vector<Elem> comms;
  for (Elem x = 0; x < E.size(); ++x)
    for (Elem y = 0; y < E.size(); ++y) {
      const Elem c = E.mul(E.mul(E.inverse(x), E.inverse(y)), E.mul(x, y));
      if (!seen[c]) {
        seen[c] = 1;
        comms.push_back(c);
      }
    }
  return closure(E, comms);
}

Subgroup normal_closure(const PermGroup &G, Elem g)
{
  const auto &E = G.enumerate();
  auto cls = conjugacy_class(G, g);
  auto S = closure(E, cls);
  S.gens = {g};
  return S;
}

Subgroup normal_closure(const PermGroup &G, const Perm &g)
{
  return normal_closure(G, G.enumerate().index(g));
}

SimplicityReport is_simple(const PermGroup &G)
{
  const auto &E = G.enumerate();
  SimplicityReport r;
  if (E.size() == 1)
    return r;
  std::vector<char> covered(E.size(), 0);
  for (Elem x = 1; x < E.size(); ++x) {
    if (covered[x])
      continue;
    for (Elem y : conjugacy_class(G, x))
      covered[y] = 1;
    auto N = normal_closure(G, x);
    if (N.order() < E.size()) {
      r.witness = std::move(N);
      return r;
    }
  }
  r.simple = true;
  return r;
}

namespace {

struct ElementSetHash
{
  std::size_t operator()(const std::vector<Elem> &v) const noexcept
  {
    std::uint64_t h = 1469598103934665603ull;
    for (Elem x : v) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

} // namespace

std::vector<Subgroup> subgroups(const PermGroup &G, std::size_t order_bound)
{
  const auto &E = G.enumerate();
  std::vector<Subgroup> all{trivial_subgroup()};
  std::unordered_set<std::vector<Elem>, ElementSetHash> seen{all[0].elements};
  std::vector<std::size_t> layer{0};

  while (!layer.empty()) {
    std::vector<std::size_t> next;
    for (std::size_t idx : layer) {
      for (Elem x = 1; x < E.size(); ++x) {
        if (all[idx].contains(x))
          continue;
        std::vector<Elem> gens = all[idx].gens;
        gens.push_back(x);
        Subgroup T = closure(E, gens);
        if (T.order() > order_bound || seen.count(T.elements))
          continue;
        seen.insert(T.elements);
        all.push_back(std::move(T));
        next.push_back(all.size() - 1);
      }
    }
    layer = std::move(next);
  }
  if (order_bound == 0)
    all.clear();

  std::sort(all.begin(), all.end(), [](const Subgroup &a, const Subgroup &b) {
    if (a.order() != b.order())
      return a.order() < b.order();
    return a.elements < b.elements;
  });
  return all;
}

DirectSum direct_sum(const PermGroup &a, const PermGroup &b)
{
  PermGroup s = PermGroup::sum(a, b);
  const std::size_t deg = s.degree();

  std::vector<Perm> ia, ib, pa, pb;
  for (const auto &g : a.gens())
    ia.push_back(g.embed(0, deg));
  for (const auto &g : b.gens())
    ib.push_back(g.embed(a.degree(), deg));
  for (const auto &g : a.gens()) {
    pa.push_back(g);
    pb.push_back(b.identity());
  }
  for (const auto &g : b.gens()) {
    pa.push_back(a.identity());
    pb.push_back(g);
  }
  return DirectSum{s, Hom::make(a, s, std::move(ia)), Hom::make(b, s, std::move(ib)),
                   Hom::make(s, a, std::move(pa)), Hom::make(s, b, std::move(pb))};
}

Invariants invariants(const PermGroup &G)
{
  const auto &E = G.enumerate();
  Invariants inv;
  inv.order = E.size();
  for (Elem x = 0; x < E.size(); ++x)
    ++inv.order_profile[E.element_order(x)];
  inv.center_order = center(G).order();
  inv.derived_order = derived_subgroup(G).order();
  return inv;
}

std::optional<std::string> distinguishing_invariant(const Invariants &a, const Invariants &b)
{
  if (a.order != b.order)
    return "order";
  if (a.order_profile != b.order_profile)
    return "element order profile";
  if (a.center_order != b.center_order)
    return "center order";
  if (a.derived_order != b.derived_order)
    return "derived subgroup order";
  return std::nullopt;
}

std::vector<Elem> element_map(const Hom &h)
{
  const auto &C = h.codomain().enumerate();
  std::vector<Elem> m(h.images().size());
  for (std::size_t i = 0; i < m.size(); ++i)
    m[i] = C.index(h.images()[i]);
  return m;
}

namespace {

/// Bijective homomorphism check over the full table, by element indices.
bool verify_isomorphism(const Enumeration &G, const Enumeration &H, const std::vector<Elem> &phi)
{
  if (G.size() != H.size())
    return false;
  std::vector<char> hit(H.size(), 0);
  for (Elem y : phi) {
    if (hit[y])
      return false;
    hit[y] = 1;
  }
  for (Elem x = 0; x < G.size(); ++x)
    for (Elem y = 0; y < G.size(); ++y)
      if (phi[G.mul(x, y)] != H.mul(phi[x], phi[y]))
        return false;
  return true;
}

} // namespace

std::optional<Hom> brute_iso(const PermGroup &G, const PermGroup &H)
{
  const auto &EG = G.enumerate();
  const auto &EH = H.enumerate();
  if (EG.size() != EH.size())
    return std::nullopt;
  if (distinguishing_invariant(invariants(G), invariants(H)))
    return std::nullopt;

  const auto gens = small_generating_set(EG, whole_group(EG));
  PermGroup reduced = subgroup_as_group(G, gens);
  const auto &ER = reduced.enumerate();

  std::optional<std::vector<Elem>> found;
  for_each_hom(reduced, H, HomSearchOptions{.injective = true, .surjective = false, .fixed = {}},
               [&](std::span<const Elem>, std::span<const Elem> map) {
                 found.emplace(map.begin(), map.end());
                 return false;
               });
  if (!found)
    return std::nullopt;

  // re-index from the reduced enumeration to G's own
  std::vector<Elem> phi(EG.size());
  for (Elem x = 0; x < EG.size(); ++x)
    phi[x] = (*found)[ER.index(EG.element(x))];
  if (!verify_isomorphism(EG, EH, phi))
    throw std::logic_error("brute_iso produced a map that fails table verification");

  std::vector<Perm> imgs;
  for (const auto &g : G.gens())
    imgs.push_back(EH.element(phi[EG.index(g)]));
  return Hom::make(G, H, std::move(imgs));
}

Automorphisms automorphisms(const PermGroup &G)
{
  const auto &E = G.enumerate();
  const auto gens = small_generating_set(E, whole_group(E));
  PermGroup reduced = subgroup_as_group(G, gens);
  const auto &ER = reduced.enumerate();

  std::vector<Elem> to_reduced(E.size());
  for (Elem x = 0; x < E.size(); ++x)
    to_reduced[x] = ER.index(E.element(x));

  Automorphisms out;
  for_each_hom(reduced, G, HomSearchOptions{.injective = true, .surjective = false, .fixed = {}},
               [&](std::span<const Elem>, std::span<const Elem> map) {
                 std::vector<Elem> phi(E.size());
                 for (Elem x = 0; x < E.size(); ++x)
                   phi[x] = map[to_reduced[x]];
                 out.maps.push_back(std::move(phi));
                 return true;
               });
  std::sort(out.maps.begin(), out.maps.end());

  // generate the permutation group from a greedy subset of the maps
  const std::size_t n = E.size();
  const std::size_t budget = std::max(G.budget(), out.maps.size());
  std::vector<Perm> agens;
  std::unordered_set<Perm, PermHash> reached{Perm::identity(n)};
  for (const auto &m : out.maps) {
    Perm p{std::vector<Point>(m.begin(), m.end())};
    if (reached.count(p))
      continue;
    agens.push_back(std::move(p));
    const PermGroup A = PermGroup::make(n, agens, budget);
    const auto &AE = A.enumerate();
    reached = std::unordered_set<Perm, PermHash>(AE.elements().begin(), AE.elements().end());
  }
  out.group = PermGroup::make(n, std::move(agens), budget);
  return out;
}

Hom cayley_embedding_even(const PermGroup &G)
{
  const auto &E = G.enumerate();
  const std::size_t n = E.size();
  std::vector<Perm> imgs;
  for (std::size_t k = 0; k < E.gen_count(); ++k) {
    const Elem g = E.mul_gen(0, k);
    std::vector<Point> im(n + 2);
    for (Elem x = 0; x < n; ++x)
      im[x] = E.mul(g, x);
    im[n] = static_cast<Point>(n);
    im[n + 1] = static_cast<Point>(n + 1);
    Perm left{std::move(im)};
    if (!left.is_even())
      left = Perm::from_cycles(n + 2, {{static_cast<Point>(n), static_cast<Point>(n + 1)}}) * left;
    imgs.push_back(std::move(left));
  }
  return Hom::make(G, PermGroup::alternating(n + 2, G.budget()), std::move(imgs));
}

} // namespace lfg::group
