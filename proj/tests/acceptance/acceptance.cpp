// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any failure.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <memory>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "lfg/catalog.hpp"
#include "lfg/free_product.hpp"
#include "lfg/graph.hpp"
#include "lfg/graph_io.hpp"
#include "lfg/kernels.hpp"
#include "lfg/limits.hpp"
#include "lfg/mekler.hpp"
#include "lfg/omni.hpp"
#include "support/oracles.hpp"

using namespace lfg;
using namespace lfg::group;
using lfg::graph::Graph;
using lfg::graph::Vertex;
namespace fs = std::filesystem;

namespace {

/// Thrown by `expect` to abort a criterion with a reason.
struct Failure
{
  std::string why;
};

void expect(bool ok, const std::string &why)
{
  if (!ok)
    throw Failure{why};
}

std::vector<Graph> graphs_up_to(std::size_t n)
{
  std::vector<Graph> out;
  for (std::size_t k = 0; k <= n; ++k)
    for (auto &g : oracle::all_graphs(k))
      out.push_back(std::move(g));
  return out;
}

std::size_t exponent_of(const Graph &g)
{
  const std::size_t n = g.size();
  return n + n * (n - 1) / 2 - g.edge_count();
}

BigInt ipow(std::uint32_t p, std::size_t e)
{
  BigInt r = 1;
  while (e--)
    r *= p;
  return r;
}

// 1 --------------------------------------------------------------------------

std::string mekler_soundness()
{
  std::size_t groups = 0;
  for (const auto &g : graphs_up_to(3)) {
    auto G = mekler::PcGroup::make(g, 3);
    const auto table = kernels::pc_table_parallel(G);
    const std::size_t N = static_cast<std::size_t>(G.order());
    expect(!kernels::find_nonassociative_parallel(table, N), "associativity");
    const auto e = G.encode(G.identity());
    for (std::uint32_t i = 0; i < N; ++i) {
      const auto u = G.decode(i);
      expect(table[e * N + i] == i && table[i * N + e] == i, "identity");
      const auto ui = G.encode(G.inverse(u));
      expect(table[i * N + ui] == e && table[ui * N + i] == e, "inverse");
      expect(G.is_identity(G.power(u, 3)), "exponent p");
      for (std::uint32_t j = 0; j < N; ++j) {
        const auto c = G.encode(G.commutator(u, G.decode(j)));
        for (std::uint32_t k = 0; k < N; ++k)
          if (table[c * N + k] != table[k * N + c])
            throw Failure{"class 2"};
      }
    }
    for (Vertex x = 0; x < g.size(); ++x)
      for (Vertex y = 0; y < g.size(); ++y)
        expect(G.is_identity(G.commutator(G.generator(x), G.generator(y))) == (x == y || g.adjacent(x, y)),
               "commutator relations");
    ++groups;
  }
  return std::to_string(groups) + " groups";
}

// 2 --------------------------------------------------------------------------

/// Size of the subgroup generated by the vertex generators, by breadth-first closure.
std::size_t count_by_closure(const mekler::PcGroup &G)
{
  std::set<mekler::PcElement> seen{G.identity()};
  std::vector<mekler::PcElement> frontier{G.identity()};
  while (!frontier.empty()) {
    std::vector<mekler::PcElement> next;
    for (const auto &u : frontier)
      for (Vertex x = 0; x < G.rank(); ++x) {
        auto v = G.multiply(u, G.generator(x));
        if (seen.insert(v).second)
          next.push_back(std::move(v));
      }
    frontier = std::move(next);
  }
  return seen.size();
}

std::string order_formula()
{
  std::size_t checked = 0;
  for (const auto &g : graphs_up_to(6)) {
    if (exponent_of(g) > 6)
      continue;
    auto G = mekler::PcGroup::make(g, 3);
    expect(BigInt(count_by_closure(G)) == G.order(), "enumeration");
    expect(G.order() == ipow(3, exponent_of(g)), "formula");
    ++checked;
  }
  for (const auto &g : {oracle::cycle_graph(5), oracle::petersen()})
    for (std::uint32_t p : {3u, 5u})
      expect(mekler::PcGroup::make(g, p).order() == ipow(p, exponent_of(g)), "symbolic order");
  return std::to_string(checked) + " enumerated, 4 symbolic";
}

// 3 --------------------------------------------------------------------------

std::string round_trip()
{
  std::size_t count = 0;
  for (const auto &g : graphs_up_to(6))
    for (std::uint32_t p : {3u, 5u}) {
      auto G = mekler::PcGroup::make(g, p);
      std::vector<mekler::PcElement> gens;
      for (Vertex x = 0; x < g.size(); ++x)
        gens.push_back(G.generator(x));
      expect(mekler::recover_graph(G, gens) == g, "recovered graph differs");
      ++count;
    }
  return std::to_string(count) + " (graph, p) pairs";
}

// 4 --------------------------------------------------------------------------

std::string extension_property()
{
  std::mt19937_64 rng(oracle::kSeed + 104);
  for (int t = 0; t < 50; ++t) {
    Graph g = oracle::random_graph(rng, 1 + t % 5);
    Graph e = graph::extend(g);
    std::vector<Vertex> dom(g.size());
    std::iota(dom.begin(), dom.end(), 0);
    expect(graph::audit_extension_property(e, g.size(), dom).empty(), "non-empty audit");
  }
  return "50 graphs";
}

// 5 --------------------------------------------------------------------------

std::string iso_extension()
{
  std::mt19937_64 rng(oracle::kSeed + 105);
  for (int t = 0; t < 100; ++t) {
    auto g = std::make_shared<const Graph>(oracle::random_graph(rng, 1 + t % 5));
    const auto auts = oracle::brute_automorphisms(*g);
    const auto &p = auts[rng() % auts.size()];
    auto f = graph::GraphIso::make(g, g, p);
    auto F = graph::extend_iso(f);
    expect(graph::is_isomorphism(F.domain(), F.codomain(), F.map()), "not an isomorphism");
    for (Vertex x = 0; x < g->size(); ++x)
      expect(F(x) == f(x), "restriction differs");
  }
  return "100 pairs";
}

// 6 --------------------------------------------------------------------------

std::string gamma_prime()
{
  std::size_t pairs = 0;
  for (const auto &g : graphs_up_to(3)) {
    auto G = std::make_shared<const mekler::PcGroup>(mekler::PcGroup::make(g, 3));
    auto f = mekler::embed_gamma_prime(G, graph::extend_tower(g, 1));
    const auto &T = f.target();
    const auto N = static_cast<std::uint32_t>(G->order());
    std::vector<mekler::PcElement> img(N);
    for (std::uint32_t i = 0; i < N; ++i)
      img[i] = f.apply(G->decode(i));
    expect(std::set<mekler::PcElement>(img.begin(), img.end()).size() == N, "not injective");
    for (std::uint32_t i = 0; i < N; ++i)
      for (std::uint32_t j = 0; j < N; ++j) {
        expect(img[G->encode(G->multiply(G->decode(i), G->decode(j)))] == T.multiply(img[i], img[j]),
               "not a homomorphism");
        ++pairs;
      }
  }
  auto c5 = std::make_shared<const mekler::PcGroup>(mekler::PcGroup::make(oracle::cycle_graph(5), 3));
  auto f = mekler::embed_gamma_prime(c5, graph::extend_tower(c5->graph(), 1));
  std::mt19937_64 rng(oracle::kSeed + 106);
  for (int t = 0; t < 1000; ++t) {
    auto u = c5->random_element(rng), v = c5->random_element(rng);
    expect(f.apply(c5->multiply(u, v)) == f.target().multiply(f.apply(u), f.apply(v)), "C5 product");
    if (u != v)
      expect(f.apply(u) != f.apply(v), "C5 injectivity");
  }
  return std::to_string(pairs) + " exhaustive pairs, 1000 C5 pairs";
}

// 7 --------------------------------------------------------------------------

std::string lift_lemma()
{
  std::vector<PermGroup> cat;
  for (const char *name : {"C2", "C3", "C4", "C2xC2", "S3", "C6"})
    cat.push_back(named_group(name));
  std::size_t homs = 0;
  for (const auto &F : cat)
    for (const auto &G : cat)
      for_each_hom(F, G, HomSearchOptions{}, [&](std::span<const Elem> imgs, std::span<const Elem>) {
        auto psi = hom_from_images(F, G, imgs);
        auto w = omni::lift_hom(psi);
        expect(w.i.injective(), "i not injective");
        expect(w.Psi.surjective(), "Psi not surjective");
        expect(omni::verify_lift(w, psi), "triangle");
        ++homs;
        return true;
      });
  return std::to_string(homs) + " homomorphisms";
}

// 8 --------------------------------------------------------------------------

std::string d_stage_laws()
{
  const auto a5 = PermGroup::alternating(5);
  for (const char *name : {"trivial", "C2", "S3"}) {
    const std::string tag = std::string(name) + ": ";
    const auto A = named_group(name);
    auto D = limits::build_D(limits::make_cayley_tower(A, a5, 1));
    const auto &G0 = D.system.stage(0);
    const auto &E = G0.enumerate();

    for (const auto &g : E.elements()) {
      auto x = limits::limit_element(D.system, 0, g);
      auto up = limits::limit_element(D.system, 1, D.system.push(g, 0, 1));
      expect(limits::project_pi(x, D) == limits::project_pi(up, D), tag + "pi o phi != pi");
    }

    std::vector<Elem> ker;
    for (Elem k = 0; k < E.size(); ++k)
      if (E.element(k).restrict(0, A.degree()).is_identity())
        ker.push_back(k);
    expect(ker.size() == 60, tag + "kernel order");
    expect(limits::kernel_of_pi(D, 0) == ker, tag + "kernel_of_pi");

    auto q = limits::quotient_is_A(D, 0);
    expect(q.iso_to_A && q.iso_to_A->injective() && q.iso_to_A->surjective(), tag + "quotient");
    expect(q.group_order == 60 * A.order() && q.kernel_order == 60, tag + "quotient orders");

    const auto ker_sub = closure(E, ker);
    for (Elem k : ker)
      if (k != 0)
        expect(normal_closure(G0, k).contains(ker_sub), tag + "normal closure");
  }
  return "trivial, C2, S3";
}

// 9 --------------------------------------------------------------------------

std::string limit_algebra()
{
  std::mt19937_64 rng(oracle::kSeed + 109);
  auto pick = [&](const PermGroup &G) {
    const auto &E = G.enumerate();
    return E.element(static_cast<Elem>(rng() % E.size()));
  };
  auto c3 = cyclic(3);
  auto s3 = named_group("S3");
  auto s4 = named_group("S4");
  const Perm s = pick(s4);
  std::vector<Perm> imgs;
  for (const auto &g : s3.gens())
    imgs.push_back(s * g.embed(0, 4) * s.inverse());
  auto sys = limits::DirectSystem::make(
    {c3, s3, s4}, {Hom::make(c3, s3, {Perm{1, 2, 0}}), Hom::make(s3, s4, std::move(imgs))});

  auto random_limit = [&] {
    const std::size_t st = rng() % 3;
    return limits::limit_element(sys, st, pick(sys.stage(st)));
  };
  using limits::limit_eq, limits::limit_multiply;
  for (int t = 0; t < 1000; ++t) {
    auto a = random_limit(), b = random_limit(), c = random_limit();
    expect(limit_eq(a, a, sys), "reflexive");
    expect(limit_eq(a, b, sys) == limit_eq(b, a, sys), "symmetric");
    if (limit_eq(a, b, sys) && limit_eq(b, c, sys))
      expect(limit_eq(a, c, sys), "transitive");
    auto a_up = limits::limit_element(sys, 2, sys.push(a.value, a.stage, 2));
    expect(limit_eq(a, a_up, sys), "push equivalence");
    expect(limit_eq(limit_multiply(a, b, sys), limit_multiply(a_up, b, sys), sys), "representative");
    expect(limit_eq(limit_multiply(limit_multiply(a, b, sys), c, sys),
                    limit_multiply(a, limit_multiply(b, c, sys), sys), sys),
           "associative");
  }
  return "1000 triples";
}

// 10 -------------------------------------------------------------------------

std::string omni_checker()
{
  auto s4 = named_group("S4");
  auto c4 = cyclic(4);
  const Perm y = c4.gens()[0];
  auto q = omni::OmniQuery::make(s4, {Perm::from_cycles(4, {{0, 1}, {2, 3}})}, c4, {y * y}, y);
  auto w = omni::omni_check(q, 24);
  expect(w && omni::verify_omni(q, *w), "S4/C4 witness");

  auto s3 = named_group("S3");
  expect(!omni::omni_check(omni::OmniQuery::make(s3, {}, c4, {}, y), 6), "S3/C4 should be none");

  omni::AuditOptions opts;
  opts.max_f = 4;
  opts.max_g = 10;
  const auto a5 = PermGroup::alternating(5);
  const auto r1 = omni::format_report(omni::omni_audit(a5, "A5", opts));
  const auto a5_again = PermGroup::alternating(5);
  const auto r2 = omni::format_report(omni::omni_audit(a5_again, "A5", opts));
  expect(r1 == r2, "A5 reports differ");
  return "A5 report " + std::to_string(r1.size()) + " bytes, identical";
}

// 11 -------------------------------------------------------------------------

std::string free_product_words()
{
  FreeProduct fp(cyclic(2), cyclic(3));
  oracle::Tables tables;
  for (int f = 0; f < 2; ++f) {
    const auto &E = fp.factor(f).enumerate();
    std::vector<std::vector<std::uint32_t>> t(E.size(), std::vector<std::uint32_t>(E.size()));
    for (Elem x = 0; x < E.size(); ++x)
      for (Elem z = 0; z < E.size(); ++z)
        t[x][z] = E.mul(x, z);
    tables.mul.push_back(std::move(t));
  }
  std::mt19937_64 rng(oracle::kSeed + 111);
  auto random_raw = [&] {
    std::vector<oracle::RawLetter> w(rng() % 13);
    for (auto &l : w) {
      l.factor = static_cast<int>(rng() % 2);
      l.elem = static_cast<std::uint32_t>(rng() % fp.factor(l.factor).order());
    }
    return w;
  };
  auto reduce = [&](const std::vector<oracle::RawLetter> &w) {
    std::vector<Letter> raw;
    for (const auto &l : w)
      raw.push_back({static_cast<std::uint8_t>(l.factor), l.elem});
    return fp.reduce(raw);
  };
  for (int t = 0; t < 1000; ++t) {
    auto raw = random_raw();
    auto left = oracle::reduce_leftmost(raw, tables);
    expect(left == oracle::reduce_rightmost(raw, tables), "strategies disagree");
    std::vector<oracle::RawLetter> ours;
    for (const auto &l : reduce(raw).letters)
      ours.push_back({l.factor, l.elem});
    expect(ours == left, "fp_reduce differs");
  }
  for (int t = 0; t < 1000; ++t) {
    auto a = reduce(random_raw()), b = reduce(random_raw()), c = reduce(random_raw());
    expect(fp.multiply(fp.multiply(a, b), c) == fp.multiply(a, fp.multiply(b, c)), "associative");
    expect(fp.multiply(a, fp.inverse(a)) == fp.identity(), "inverse");
    expect(fp.multiply(fp.identity(), a) == a && fp.multiply(a, fp.identity()) == a, "identity");
  }
  return "1000 words, 1000 triples";
}

// 12 -------------------------------------------------------------------------

std::string pipeline_determinism()
{
  const fs::path dir = fs::temp_directory_path() / ("lfg_acceptance_" + std::to_string(::getpid()));
  fs::remove_all(dir);
  fs::create_directories(dir);
  const auto input = (dir / "c5.txt").string();
  std::ofstream(input) << graph::format_graph(oracle::cycle_graph(5));

  std::string manifests[2];
  for (int i = 0; i < 2; ++i) {
    std::ostringstream out, err;
    const auto o = (dir / ("run" + std::to_string(i))).string();
    const int code = cli::run({"reduce", input, "--p", "3", "--depth-k", "1", "--depth-d", "1", "--out", o}, out, err);
    expect(code == cli::kOk, "reduce exit " + std::to_string(code) + ": " + err.str());
    std::ifstream f(fs::path(o) / "manifest.txt", std::ios::binary);
    manifests[i].assign(std::istreambuf_iterator<char>(f), {});
  }
  fs::remove_all(dir);
  expect(!manifests[0].empty() && manifests[0] == manifests[1], "manifests differ");
  return "manifest " + std::to_string(manifests[0].size()) + " bytes, identical";
}

struct Criterion
{
  int id;
  const char *name;
  std::function<std::string()> run;
};

} // namespace

int main()
{
  const std::vector<Criterion> all{
    {1, "mekler-soundness", mekler_soundness},     {2, "order-formula", order_formula},
    {3, "graph-round-trip", round_trip},           {4, "extension-property", extension_property},
    {5, "isomorphism-extension", iso_extension},   {6, "gamma-prime-embedding", gamma_prime},
    {7, "lift-lemma", lift_lemma},                 {8, "d-stage-laws", d_stage_laws},
    {9, "direct-limit-algebra", limit_algebra},    {10, "omni-checker", omni_checker},
    {11, "free-product-words", free_product_words}, {12, "pipeline-determinism", pipeline_determinism},
  };
  int failed = 0;
  for (const auto &c : all) {
    const auto t0 = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = false;
    try {
      detail = c.run();
      ok = true;
    } catch (const Failure &f) {
      detail = f.why;
    } catch (const std::exception &e) {
      detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s %2d %-24s %7.2fs  %s\n", ok ? "PASS" : "FAIL", c.id, c.name, secs, detail.c_str());
    std::fflush(stdout);
    failed += !ok;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(all.size()) - failed, all.size());
  return failed == 0 ? 0 : 1;
}
