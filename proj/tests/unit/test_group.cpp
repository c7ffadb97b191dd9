#include <doctest.h>

#include <random>
#include <set>

#include "lfg/catalog.hpp"
#include "lfg/group_algo.hpp"
#include "lfg/group_io.hpp"
#include "lfg/kernels.hpp"
#include "support/oracles.hpp"

using namespace lfg;
using namespace lfg::group;

namespace {

/// Groups of order <= 24 covering several isomorphism classes per order.
std::vector<CatalogEntry> catalog_24()
{
  auto out = small_groups(15);
  for (const char *name : {"C16", "D8", "C2xC8", "Q8xC2", "C17", "C18", "D9", "C3xC6", "C19", "C20",
                           "D10", "Dic5", "C21", "C22", "D11", "C23", "C24", "S4", "D12", "Dic6",
                           "C2+A4", "C3+Q8", "C2xC2xC6"})
    out.push_back({name, named_group(name)});
  return out;
}

/// The same group acting on relabelled points.
PermGroup conjugated(const PermGroup &G, const Perm &s)
{
  std::vector<Perm> gens;
  for (const auto &g : G.gens())
    gens.push_back(s * g * s.inverse());
  return PermGroup::make(G.degree(), std::move(gens));
}

void check_table_axioms(const PermGroup &G)
{
  const auto &E = G.enumerate();
  const auto table = kernels::cayley_table_serial(E);
  const std::size_t n = E.size();
  for (Elem x = 0; x < n; ++x) {
    REQUIRE(table[x] == x);
    REQUIRE(table[x * n] == x);
    REQUIRE(table[x * n + E.inverse(x)] == 0);
    REQUIRE(E.element(table[x * n + x]) == E.element(x) * E.element(x));
  }
  REQUIRE_FALSE(kernels::find_nonassociative_serial(table, n));
}

} // namespace

TEST_CASE("perm basics")
{
  Perm p{1, 2, 0};
  Perm q{1, 0, 2};
  CHECK((p * q) == Perm{2, 1, 0}); // p(q(0)) = p(1) = 2
  CHECK(p.order() == 3);
  CHECK(p.is_even());
  CHECK_FALSE(q.is_even());
  CHECK((p * p.inverse()).is_identity());
  CHECK(Perm::from_cycles(4, {{0, 1}, {2, 3}}) == Perm{1, 0, 3, 2});
  CHECK_THROWS_AS(Perm({0, 0, 1}), std::invalid_argument);
  CHECK(concat(q, p) == Perm{1, 0, 2, 4, 5, 3});
  CHECK(concat(q, p).restrict(3, 3) == p);
  CHECK_THROWS_AS(Perm({1, 0}).restrict(1, 1), std::invalid_argument);
}

TEST_CASE("group_from_gens examples")
{
  CHECK(PermGroup::make(3, {Perm{1, 2, 0}}).order() == 3);
  CHECK(PermGroup::make(0, {}).order() == 1);
  CHECK(PermGroup::make(4, {}).order() == 1);
  auto s4 = PermGroup::make(4, {Perm::from_cycles(4, {{0, 1}}), Perm::from_cycles(4, {{0, 1, 2, 3}})});
  CHECK(s4.order() == 24);
  CHECK_THROWS_AS(PermGroup::make(4, {Perm{1, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(PermGroup::symmetric(8, 1000).enumerate(), BudgetError);
  CHECK(PermGroup::symmetric(8, 1000).order_big() == 40320);
  CHECK(PermGroup::alternating(122).contains(Perm::from_cycles(122, {{0, 1, 2}})));
  CHECK_FALSE(PermGroup::alternating(122).contains(Perm::from_cycles(122, {{0, 1}})));
}

TEST_CASE("group axioms by full table for groups up to order 128")
{
  std::vector<PermGroup> groups;
  for (const auto &e : catalog_24())
    groups.push_back(e.group);
  for (const char *name : {"A5", "S5", "C2+A5", "D32", "Q8xC2xC2xC2", "C2+S4", "Dic16"})
    groups.push_back(named_group(name));
  for (const auto &G : groups) {
    CAPTURE(G.order());
    REQUIRE(G.order() <= 128);
    check_table_axioms(G);
  }
}

TEST_CASE("direct_sum examples")
{
  auto s = direct_sum(cyclic(2), cyclic(3));
  CHECK(s.group.order() == 6);
  CHECK(is_abelian(s.group));
  CHECK(brute_iso(s.group, cyclic(6)));

  auto a = named_group("S3");
  auto t = direct_sum(a, trivial_group());
  CHECK(t.group.order() == 6);
  CHECK(t.project_a.injective());
  CHECK(t.project_a.surjective());

  const auto a5 = PermGroup::alternating(5);
  auto big = direct_sum(cyclic(2), a5);
  CHECK(big.group.order() == 120);
  CHECK(big.inject_a.injective());
  CHECK(big.inject_b.injective());
  CHECK(big.project_a.surjective());
  CHECK(big.project_b.surjective());
  // projections undo injections
  for (const auto &x : a5.enumerate().elements())
    CHECK(big.project_b.apply(big.inject_b.apply(x)) == x);
}

TEST_CASE("is_simple examples")
{
  auto s3 = is_simple(named_group("S3"));
  CHECK_FALSE(s3.simple);
  REQUIRE(s3.witness);
  CHECK(s3.witness->order() == 3);
  CHECK(is_simple(PermGroup::alternating(5)).simple);
  CHECK(is_simple(cyclic(5)).simple);
  CHECK_FALSE(is_simple(trivial_group()).simple);
  CHECK_FALSE(is_simple(named_group("A4")).simple);
  CHECK_FALSE(is_simple(named_group("C2+A5")).simple);
}

TEST_CASE("subgroups examples")
{
  auto s3 = subgroups(named_group("S3"), 6);
  REQUIRE(s3.size() == 6);
  std::vector<std::size_t> orders;
  for (const auto &h : s3)
    orders.push_back(h.order());
  CHECK(orders == std::vector<std::size_t>{1, 2, 2, 2, 3, 6});

  CHECK(subgroups(trivial_group(), 1).size() == 1);
  CHECK(subgroups(cyclic(4), 4).size() == 3);
  CHECK(subgroups(named_group("S4"), 24).size() == 30);
  CHECK(subgroups(PermGroup::alternating(5), 60).size() == 59);
  CHECK(subgroups(named_group("S4"), 4).size() == 1 + 9 + 4 + 7);
}

TEST_CASE("subgroups are closed, distinct and complete for small groups")
{
  for (const char *name : {"D4", "Q8", "C2xC2xC2", "A4", "C6xC2"}) {
    auto G = named_group(name);
    const auto &E = G.enumerate();
    auto subs = subgroups(G, G.order());
    std::set<std::vector<Elem>> seen;
    for (const auto &H : subs) {
      REQUIRE(seen.insert(H.elements).second);
      for (Elem x : H.elements)
        for (Elem y : H.elements)
          REQUIRE(H.contains(E.mul(x, E.inverse(y))));
    }
    // every subset closure is listed
    for (Elem x = 0; x < E.size(); ++x)
      for (Elem y = 0; y < E.size(); ++y) {
        std::vector<Elem> gens{x, y};
        REQUIRE(seen.count(closure(E, gens).elements));
      }
  }
}

TEST_CASE("brute_iso examples")
{
  CHECK_FALSE(brute_iso(cyclic(4), klein_four()));
  CHECK(distinguishing_invariant(invariants(cyclic(4)), invariants(klein_four())) == "element order profile");
  auto h = brute_iso(cyclic(6), named_group("C2+C3"));
  REQUIRE(h);
  CHECK(h->injective());
  CHECK(h->surjective());
  CHECK_FALSE(brute_iso(dihedral(4), quaternion()));

  // two presentations of A5
  auto a5 = PermGroup::alternating(5);
  auto a5b = PermGroup::make(5, {Perm::from_cycles(5, {{0, 1, 2, 3, 4}}), Perm::from_cycles(5, {{0, 1, 2}})});
  CHECK(brute_iso(a5, a5b));
  CHECK_FALSE(brute_iso(named_group("S4"), named_group("C2+A4")));
  CHECK_FALSE(brute_iso(named_group("Dic3"), named_group("D6")));
}

TEST_CASE("brute_iso is reflexive and symmetric on groups up to order 24")
{
  const auto cat = catalog_24();
  std::mt19937_64 rng(oracle::kSeed + 10);
  for (std::size_t i = 0; i < cat.size(); ++i) {
    CAPTURE(cat[i].name);
    REQUIRE(brute_iso(cat[i].group, cat[i].group));
    auto relabelled = conjugated(cat[i].group, oracle::random_perm(rng, cat[i].group.degree()));
    REQUIRE(brute_iso(relabelled, cat[i].group));
    for (std::size_t j = i + 1; j < cat.size(); ++j) {
      if (cat[i].group.order() != cat[j].group.order())
        continue;
      CAPTURE(cat[j].name);
      const bool ij = brute_iso(cat[i].group, cat[j].group).has_value();
      const bool ji = brute_iso(cat[j].group, cat[i].group).has_value();
      REQUIRE(ij == ji);
    }
  }
}

TEST_CASE("distinct catalog entries are pairwise non-isomorphic")
{
  const auto cat = small_groups(15);
  CHECK(cat.size() == 28);
  for (std::size_t i = 0; i < cat.size(); ++i)
    for (std::size_t j = i + 1; j < cat.size(); ++j)
      if (cat[i].group.order() == cat[j].group.order())
        CHECK_FALSE(brute_iso(cat[i].group, cat[j].group));
}

TEST_CASE("automorphisms examples")
{
  CHECK(automorphisms(cyclic(5)).order() == 4);
  CHECK(automorphisms(klein_four()).order() == 6);
  CHECK(automorphisms(trivial_group()).order() == 1);
  CHECK(automorphisms(named_group("S3")).order() == 6);
  CHECK(automorphisms(quaternion()).order() == 24);
  auto aut = automorphisms(klein_four());
  CHECK(aut.group.order() == 6);
}

TEST_CASE("automorphisms preserve the multiplication")
{
  auto G = dihedral(4);
  const auto &E = G.enumerate();
  auto aut = automorphisms(G);
  CHECK(aut.order() == 8);
  for (const auto &m : aut.maps)
    for (Elem x = 0; x < E.size(); ++x)
      for (Elem y = 0; y < E.size(); ++y)
        REQUIRE(m[E.mul(x, y)] == E.mul(m[x], m[y]));
}

TEST_CASE("normal_closure examples")
{
  auto a5 = PermGroup::alternating(5);
  CHECK(normal_closure(a5, a5.identity()).order() == 1);
  CHECK(normal_closure(a5, Perm::from_cycles(5, {{0, 1, 2}})).order() == 60);
  auto s3 = named_group("S3");
  CHECK(normal_closure(s3, Perm::from_cycles(3, {{0, 1}})).order() == 6);
}

TEST_CASE("normal closures are normal")
{
  for (const char *name : {"S4", "D6", "A4", "Dic3", "C2+S3"}) {
    auto G = named_group(name);
    const auto &E = G.enumerate();
    for (Elem x = 0; x < E.size(); ++x) {
      auto N = normal_closure(G, x);
      REQUIRE(N.contains(x));
      REQUIRE(is_normal(G, N));
      for (Elem g = 0; g < E.size(); ++g)
        for (Elem n : N.elements)
          REQUIRE(N.contains(E.mul(E.mul(g, n), E.inverse(g))));
    }
  }
}

TEST_CASE("cayley_embedding_even examples")
{
  auto c3 = cayley_embedding_even(cyclic(3));
  CHECK(c3.codomain().degree() == 5);
  const Perm &img = c3.gen_images()[0];
  CHECK(img.order() == 3);
  CHECK(img[3] == 3);
  CHECK(img[4] == 4);

  auto t = cayley_embedding_even(trivial_group());
  CHECK(t.codomain().degree() == 3);
  CHECK((t.gen_images().empty() || t.gen_images()[0].is_identity()));

  auto c2 = cayley_embedding_even(cyclic(2));
  const Perm &inv = c2.gen_images()[0];
  CHECK(inv == Perm{1, 0, 3, 2});
  CHECK(inv.is_even());
}

TEST_CASE("cayley_embedding_even is injective into even permutations up to order 60")
{
  std::vector<PermGroup> groups;
  for (const auto &e : catalog_24())
    groups.push_back(e.group);
  for (const char *name : {"A5", "C2+D15", "D30", "Dic15", "C2xC2xC15"})
    groups.push_back(named_group(name));
  for (const auto &G : groups) {
    auto f = cayley_embedding_even(G);
    REQUIRE(f.injective());
    for (const auto &p : f.images())
      REQUIRE(p.is_even());
  }
}

TEST_CASE("group text round trip")
{
  CHECK(parse_perm("perm 3: 1 2 0") == Perm{1, 2, 0});
  CHECK(parse_perm(Perm{2, 0, 1, 3}.to_string()) == Perm{2, 0, 1, 3});
  CHECK_THROWS_AS(parse_perm("perm 3: 1 1 0"), ParseError);
  CHECK_THROWS_AS(parse_perm("perm 3: 1 2"), ParseError);
  for (const char *name : {"trivial", "C7", "S4", "Q8", "C2+A5"}) {
    auto G = named_group(name);
    auto H = parse_group(format_group(G));
    CHECK(H.degree() == G.degree());
    CHECK(H.gens() == G.gens());
  }
  auto G = parse_group("# S3\np group 3\ng: 1 0 2\ng: 1 2 0\n");
  CHECK(G.order() == 6);
  try {
    parse_group("p group 3\ng: 1 0 2\ng: 0 0 0\n");
    FAIL("expected a parse error");
  } catch (const ParseError &e) {
    CHECK(e.line() == 3);
  }
}

TEST_CASE("serial and parallel Cayley tables agree")
{
  for (const char *name : {"S4", "A5", "C2+A4", "D12"}) {
    const auto G = named_group(name);
    const auto &E = G.enumerate();
    CHECK(kernels::cayley_table_serial(E) == kernels::cayley_table_parallel(E));
  }
}

TEST_CASE("find_nonassociative locates a broken table")
{
  // x*y = x - y mod 3 is not associative
  std::vector<std::uint32_t> t(9);
  for (std::uint32_t x = 0; x < 3; ++x)
    for (std::uint32_t y = 0; y < 3; ++y)
      t[x * 3 + y] = (x + 3 - y) % 3;
  auto s = kernels::find_nonassociative_serial(t, 3);
  REQUIRE(s);
  CHECK(*s == kernels::Triple{0, 0, 1});
  CHECK(kernels::find_nonassociative_parallel(t, 3) == s);
}
