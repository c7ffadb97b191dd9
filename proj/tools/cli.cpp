#include "cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "lfg/catalog.hpp"
#include "lfg/graph_io.hpp"
#include "lfg/group_algo.hpp"
#include "lfg/group_io.hpp"
#include "lfg/limits.hpp"
#include "lfg/manifest.hpp"
#include "lfg/mekler.hpp"
#include "lfg/omni.hpp"
#include "lfg/pipeline.hpp"

namespace lfg::cli {

namespace {

struct Options
{
  std::string graph_path, group_a, group_b, stage, out;
  std::uint32_t p = 3;
  std::size_t depth_k = 1, depth_d = 1;
  std::size_t bound = 0, max_f = 4, max_g = 10;
  std::size_t reduce_max_f = 2, reduce_max_g = 4;
  std::uint64_t seed = 20240601;
  bool force = false;
  std::string a_group = "C2", h0_group = "A5";
  Budgets budgets;
};

group::PermGroup load_group(const std::string &spec, std::size_t budget)
{
  if (std::filesystem::is_regular_file(spec))
    return group::read_group_file(spec, budget);
  try {
    return group::named_group(spec, budget);
  } catch (const std::invalid_argument &e) {
    throw ParseError("'" + spec + "' is neither a group file nor a known group name", 0);
  }
}

void write_or_print(const std::string &path, const std::string &text, std::ostream &out)
{
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f)
    throw std::runtime_error("cannot write '" + path + "'");
  f << text;
  out << "wrote: " << path << '\n';
}

std::string labels_of(const graph::Graph &g, std::initializer_list<graph::Vertex> vs)
{
  std::string s;
  for (auto v : vs)
    s += (s.empty() ? "" : " ") + g.label(v);
  return s;
}

int cmd_nice(const Options &o, std::ostream &out)
{
  const auto g = graph::read_graph_file(o.graph_path);
  const auto r = graph::is_nice(g);
  out << "nice: " << (r.nice ? "yes" : "no") << '\n';
  out << "nice-strict: " << (r.nice_strict ? "yes" : "no") << '\n';
  if (r.triangle)
    out << "triangle: " << labels_of(g, {(*r.triangle)[0], (*r.triangle)[1], (*r.triangle)[2]}) << '\n';
  if (r.square)
    out << "square: "
        << labels_of(g, {(*r.square)[0], (*r.square)[1], (*r.square)[2], (*r.square)[3]}) << '\n';
  if (r.unseparated)
    out << "unseparated: " << labels_of(g, {r.unseparated->first, r.unseparated->second}) << '\n';
  if (r.unseparated_strict)
    out << "unseparated-strict: "
        << labels_of(g, {r.unseparated_strict->first, r.unseparated_strict->second}) << '\n';
  out << "self-witness-only-pairs: " << r.self_witness_only << '\n';
  return r.nice ? kOk : kNegative;
}

int cmd_extend(const Options &o, std::ostream &out)
{
  const auto g = graph::read_graph_file(o.graph_path);
  const auto t = graph::extend_tower(g, o.depth_k, o.budgets.vertices);
  write_or_print(o.out, graph::format_graph(t.top), out);
  if (!o.out.empty()) {
    out << "stage-sizes:";
    for (auto s : t.stage_sizes)
      out << ' ' << s;
    out << '\n';
  }
  return kOk;
}

mekler::PcGroup load_mekler(const Options &o)
{
  return mekler::PcGroup::make(graph::read_graph_file(o.graph_path), o.p);
}

int cmd_mekler(const Options &o, std::ostream &out)
{
  const auto G = load_mekler(o);
  Manifest m;
  auto &s = m.add("gamma");
  s.set("graph-sha256", sha256_hex(graph::format_graph(G.graph())));
  s.set("p", std::to_string(G.p()));
  s.set("rank", std::to_string(G.rank()));
  s.set("order", std::to_string(G.p()) + "^" + std::to_string(G.order_exponent()) + " = " +
                   G.order().str());
  std::string pairs;
  for (auto [x, y] : G.nonedge_pairs())
    pairs += (pairs.empty() ? "" : " ") + std::to_string(x) + "-" + std::to_string(y);
  s.set("nonedge-order", pairs);
  for (graph::Vertex x = 0; x < G.rank(); ++x)
    s.set("generator." + G.graph().label(x), mekler::format_element(G.generator(x)));
  write_or_print(o.out, format_manifest(m), out);
  return kOk;
}

int cmd_center(const Options &o, std::ostream &out)
{
  const auto G = load_mekler(o);
  const auto Z = mekler::center(G);
  out << "support:";
  for (auto v : Z.support)
    out << ' ' << G.graph().label(v);
  out << '\n';
  out << "commutator-coordinates: " << G.nonedge_pairs().size() << '\n';
  out << "order: " << G.p() << '^' << Z.exponent << " = " << Z.order.str() << '\n';
  return kOk;
}

int cmd_recover(const Options &o, std::ostream &out)
{
  const auto G = load_mekler(o);
  std::vector<mekler::PcElement> gens;
  for (graph::Vertex x = 0; x < G.rank(); ++x)
    gens.push_back(G.generator(x));
  const auto r = mekler::recover_graph(G, gens);
  out << graph::format_graph(r);
  const bool same = r == G.graph();
  out << "round-trip: " << (same ? "pass" : "fail") << '\n';
  return same ? kOk : kNegative;
}

int cmd_iso(const Options &o, std::ostream &out)
{
  const auto A = load_group(o.group_a, o.budgets.enumeration);
  const auto B = load_group(o.group_b, o.budgets.enumeration);
  const auto ia = group::invariants(A), ib = group::invariants(B);
  out << "order: " << ia.order << ' ' << ib.order << '\n';
  out << "center-order: " << ia.center_order << ' ' << ib.center_order << '\n';
  out << "derived-order: " << ia.derived_order << ' ' << ib.derived_order << '\n';
  auto profile = [](const group::Invariants &inv) {
    std::string s;
    for (auto [ord, count] : inv.order_profile)
      s += (s.empty() ? "" : ",") + std::to_string(ord) + "x" + std::to_string(count);
    return s;
  };
  out << "element-order-profile: " << profile(ia) << ' ' << profile(ib) << '\n';

  if (auto h = group::brute_iso(A, B)) {
    out << "iso: yes\n";
    for (std::size_t i = 0; i < A.gens().size(); ++i)
      out << "map: " << A.gens()[i].to_string() << " -> " << h->gen_images()[i].to_string() << '\n';
    return kOk;
  }
  out << "iso: none\n";
  const auto why = group::distinguishing_invariant(ia, ib);
  out << "distinguishing-invariant: " << (why ? *why : "none (exhaustive search)") << '\n';
  return kNegative;
}

int cmd_omni(const Options &o, std::ostream &out)
{
  const auto G = load_group(o.stage, o.budgets.enumeration);
  omni::AuditOptions opts;
  opts.max_f = o.max_f;
  opts.max_g = o.max_g;
  opts.bound = o.bound;
  if (G.kind() == group::PermGroup::Kind::DirectSum)
    opts.a_degree = G.parts()[0].degree();
  const auto rep = omni::omni_audit(G, o.stage, opts);
  write_or_print(o.out, omni::format_report(rep), out);
  return rep.all_witnessed() ? kOk : kNegative;
}

int cmd_lift(const Options &o, std::ostream &out)
{
  const auto F = load_group(o.group_a, o.budgets.enumeration);
  const auto G = load_group(o.group_b, o.budgets.enumeration);
  std::size_t homs = 0, verified = 0;
  group::for_each_hom(F, G, {}, [&](std::span<const group::Elem> imgs, std::span<const group::Elem>) {
    const auto psi = group::hom_from_images(F, G, imgs);
    const auto w = omni::lift_hom(psi);
    ++homs;
    const bool ok = omni::verify_lift(w, psi);
    verified += ok;
    out << "psi:";
    for (auto e : imgs)
      out << ' ' << e;
    out << " H-order: " << w.H.order() << " verified: " << (ok ? "yes" : "no") << '\n';
    return true;
  });
  out << "homomorphisms: " << homs << '\n';
  out << "verified: " << verified << '\n';
  return verified == homs ? kOk : kNegative;
}

int cmd_tower(const Options &o, std::ostream &out)
{
  const auto A = load_group(o.a_group, o.budgets.enumeration);
  const auto H0 = load_group(o.h0_group, o.budgets.enumeration);
  const auto T = limits::make_cayley_tower(A, H0, o.depth_d, o.budgets.points);
  const auto D = limits::build_D(T);

  Manifest m;
  auto &s = m.add("tower");
  s.set("A", o.a_group);
  s.set("H0", o.h0_group);
  s.set("depth", std::to_string(o.depth_d));
  std::string hdeg;
  for (const auto &H : T.H)
    hdeg += (hdeg.empty() ? "" : " ") + std::to_string(H.degree());
  s.set("H-degrees", hdeg);
  s.set("G0-order", std::to_string(D.system.stage(0).order()));
  bool ok = true;
  for (std::size_t i = 0; i < T.f.size(); ++i) {
    auto &t = m.add("map-" + std::to_string(i));
    t.set("domain-order", std::to_string(T.f[i].domain().order()));
    t.set("codomain", "Alt(" + std::to_string(T.f[i].codomain().degree()) + ")");
    const bool inj = T.f[i].injective();
    ok = ok && inj;
    t.set("f-injective", inj ? "pass" : "fail");
    for (std::size_t j = 0; j < T.f[i].gen_images().size(); ++j)
      t.set("image." + std::to_string(j), T.f[i].gen_images()[j].to_string());
  }
  if (T.lazy) {
    auto &t = m.add("lazy-stage");
    t.set("domain-order", T.lazy->domain_order().str());
    t.set("target-degree", T.lazy->target_degree().str());
  }
  write_or_print(o.out, format_manifest(m), out);
  return ok ? kOk : kNegative;
}

int cmd_reduce(const Options &o, std::ostream &out, std::ostream &err)
{
  PipelineConfig cfg;
  cfg.input_name = std::filesystem::path(o.graph_path).filename().string();
  cfg.graph = graph::read_graph_file(o.graph_path);
  cfg.p = o.p;
  cfg.depth_k = o.depth_k;
  cfg.depth_d = o.depth_d;
  cfg.a_group = o.a_group;
  cfg.h0_group = o.h0_group;
  cfg.budgets = o.budgets;
  cfg.seed = o.seed;
  cfg.force = o.force;
  cfg.omni_max_f = o.reduce_max_f;
  cfg.omni_max_g = o.reduce_max_g;
  const auto r = run_pipeline(cfg);
  if (r.status == PipelineStatus::Refused) {
    err << "refused: " << r.message << '\n';
    return kNegative;
  }
  const std::string dir = o.out.empty() ? "reduce_out" : o.out;
  write_artifacts(r, dir);
  out << r.artifacts.at("manifest.txt");
  switch (r.status) {
  case PipelineStatus::Complete:
    return kOk;
  case PipelineStatus::BudgetExceeded:
    err << "budget exceeded: " << r.message << '\n';
    return kBudget;
  default:
    return kNegative;
  }
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
  CLI::App app{"Finite-stage tools for Mekler groups, random-graph extensions and direct limits", "lfg"};
  app.require_subcommand(1);
  Options o;

  auto add_budgets = [&o](CLI::App *c) {
    c->add_option("--budget-vertices", o.budgets.vertices, "Vertex budget");
    c->add_option("--budget-enumeration", o.budgets.enumeration, "Group enumeration budget");
    c->add_option("--budget-points", o.budgets.points, "Explicit ground-set budget");
  };

  auto *nice = app.add_subcommand("nice", "Check whether a graph is nice");
  nice->add_option("graph", o.graph_path)->required();

  auto *extend = app.add_subcommand("extend", "Extend a graph toward the random graph");
  extend->add_option("graph", o.graph_path)->required();
  extend->add_option("--depth-k", o.depth_k, "Number of extension steps");
  extend->add_option("--out", o.out, "Output file");
  add_budgets(extend);

  std::vector<CLI::App *> mek;
  for (auto [name, help] : {std::pair{"mekler", "Describe the Mekler group of a graph"},
                            std::pair{"center", "Center of the Mekler group"},
                            std::pair{"recover", "Recover the graph from the Mekler group"}}) {
    auto *c = app.add_subcommand(name, help);
    c->add_option("graph", o.graph_path)->required();
    c->add_option("--p", o.p, "Odd prime");
    c->add_option("--out", o.out, "Output file");
    mek.push_back(c);
  }

  auto *iso = app.add_subcommand("iso", "Brute-force isomorphism test");
  iso->add_option("A", o.group_a, "Group file or name")->required();
  iso->add_option("B", o.group_b, "Group file or name")->required();
  add_budgets(iso);

  auto *omni_cmd = app.add_subcommand("omni", "Audit the omnigenous extension property of a stage");
  omni_cmd->add_option("stage", o.stage, "Group file or name, e.g. A5 or C2+A5")->required();
  omni_cmd->add_option("--max-f", o.max_f, "Largest F");
  omni_cmd->add_option("--max-g", o.max_g, "Largest G (at most 15)");
  omni_cmd->add_option("--bound", o.bound, "Largest H searched (0 = whole stage)");
  omni_cmd->add_option("--out", o.out, "Report file");
  add_budgets(omni_cmd);

  auto *lift = app.add_subcommand("lift", "Lift every homomorphism F -> G");
  lift->add_option("F", o.group_a)->required();
  lift->add_option("G", o.group_b)->required();
  add_budgets(lift);

  auto *tower = app.add_subcommand("tower", "Build the even-Cayley tower");
  tower->add_option("--a", o.a_group, "Group A");
  tower->add_option("--h0", o.h0_group, "Simple group H_0");
  tower->add_option("--depth-d", o.depth_d, "Tower depth (at most 2)");
  tower->add_option("--out", o.out, "Output file");
  add_budgets(tower);

  auto *reduce = app.add_subcommand("reduce", "Run the finite reduction pipeline");
  reduce->add_option("graph", o.graph_path)->required();
  reduce->add_option("--p", o.p, "Odd prime");
  reduce->add_option("--depth-k", o.depth_k, "Extension depth");
  reduce->add_option("--depth-d", o.depth_d, "Tower depth");
  reduce->add_option("--a", o.a_group, "Group A for the D-stage");
  reduce->add_option("--h0", o.h0_group, "Simple group H_0");
  reduce->add_option("--max-f", o.reduce_max_f, "Omni audit: largest F");
  reduce->add_option("--max-g", o.reduce_max_g, "Omni audit: largest G");
  reduce->add_option("--seed", o.seed, "Seed for sampled checks");
  reduce->add_flag("--force", o.force, "Proceed on a non-nice graph");
  reduce->add_option("--out", o.out, "Output directory");
  add_budgets(reduce);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp &e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError &e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  }

  try {
    if (nice->parsed())
      return cmd_nice(o, out);
    if (extend->parsed())
      return cmd_extend(o, out);
    if (mek[0]->parsed())
      return cmd_mekler(o, out);
    if (mek[1]->parsed())
      return cmd_center(o, out);
    if (mek[2]->parsed())
      return cmd_recover(o, out);
    if (iso->parsed())
      return cmd_iso(o, out);
    if (omni_cmd->parsed())
      return cmd_omni(o, out);
    if (lift->parsed())
      return cmd_lift(o, out);
    if (tower->parsed())
      return cmd_tower(o, out);
    if (reduce->parsed())
      return cmd_reduce(o, out, err);
  } catch (const ParseError &e) {
    err << "parse error: " << e.what() << '\n';
    return kParseError;
  } catch (const BudgetError &e) {
    err << "budget exceeded: " << e.what() << '\n';
    return kBudget;
  } catch (const std::invalid_argument &e) {
    err << "invalid input: " << e.what() << '\n';
    return kParseError;
  }
  return kParseError;
}

} // namespace lfg::cli
