#include "lfg/pipeline.hpp"

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "lfg/catalog.hpp"
#include "lfg/graph_io.hpp"
#include "lfg/limits.hpp"
#include "lfg/mekler.hpp"
#include "lfg/omni.hpp"

namespace lfg {

namespace {

constexpr std::uint64_t kExhaustiveLimit = 100'000;

const char *verdict(bool ok) { return ok ? "pass" : "fail"; }

template <class T> std::string str(const T &v)
{
  std::ostringstream os;
  os << v;
  return os.str();
}

std::string power_string(std::uint32_t p, std::size_t e, const mekler::BigInt &value)
{
  return std::to_string(p) + "^" + std::to_string(e) + " = " + value.str();
}

std::string join_vertices(const graph::Graph &g)
{
  std::string s;
  for (graph::Vertex v = 0; v < g.size(); ++v)
    s += (v ? " " : "") + g.label(v);
  return s;
}

class Run
{
public:
  explicit Run(const PipelineConfig &cfg) : cfg_(cfg), rng_(cfg.seed) {}

  PipelineResult go()
  {
    echo_config();
    try {
      if (!nice_gate()) {
        result_.status = PipelineStatus::Refused;
        result_.message = "input graph is not nice; rerun with --force to override";
        finish("refused");
        return std::move(result_);
      }
      extension();
      mekler_stage();
      gamma_prime();
      d_stage();
      finish(ok_ ? "complete" : "checks-failed");
      result_.status = ok_ ? PipelineStatus::Complete : PipelineStatus::ChecksFailed;
    } catch (const BudgetError &e) {
      result_.status = PipelineStatus::BudgetExceeded;
      result_.message = e.what();
      finish("incomplete", e.what());
    }
    return std::move(result_);
  }

private:
  Section &section(const std::string &name) { return result_.manifest.add(name); }

  void check(Section &s, const std::string &key, bool ok)
  {
    s.set(key, verdict(ok));
    ok_ = ok_ && ok;
  }

  void artifact(const std::string &name, std::string content)
  {
    result_.artifacts[name] = std::move(content);
  }

  void echo_config()
  {
    auto &s = section("config");
    s.set("tool", "lfg");
    s.set("version", kToolVersion);
    s.set("input", cfg_.input_name);
    s.set("input-sha256", sha256_hex(graph::format_graph(cfg_.graph)));
    s.set("p", str(cfg_.p));
    s.set("depth-k", str(cfg_.depth_k));
    s.set("depth-d", str(cfg_.depth_d));
    s.set("A", cfg_.a_group);
    s.set("H0", cfg_.h0_group);
    s.set("seed", str(cfg_.seed));
    s.set("samples", str(cfg_.samples));
    s.set("budget-vertices", str(cfg_.budgets.vertices));
    s.set("budget-enumeration", str(cfg_.budgets.enumeration));
    s.set("budget-points", str(cfg_.budgets.points));
    s.set("omni-max-f", str(cfg_.omni_max_f));
    s.set("omni-max-g", str(cfg_.omni_max_g));
    s.set("force", cfg_.force ? "yes" : "no");
  }

  bool nice_gate()
  {
    const auto &g = cfg_.graph;
    const auto r = graph::is_nice(g);
    auto &s = section("nice");
    s.set("vertices", str(g.size()));
    s.set("edges", str(g.edge_count()));
    s.set("nice", r.nice ? "yes" : "no");
    s.set("nice-strict", r.nice_strict ? "yes" : "no");
    s.set("self-witness-only-pairs", str(r.self_witness_only));
    if (r.triangle)
      s.set("triangle", str((*r.triangle)[0]) + " " + str((*r.triangle)[1]) + " " +
                          str((*r.triangle)[2]));
    if (r.square)
      s.set("square", str((*r.square)[0]) + " " + str((*r.square)[1]) + " " + str((*r.square)[2]) +
                        " " + str((*r.square)[3]));
    if (r.unseparated)
      s.set("unseparated", str(r.unseparated->first) + " " + str(r.unseparated->second));
    s.set("override", !r.nice && cfg_.force ? "yes" : "no");
    return r.nice || cfg_.force;
  }

  void extension()
  {
    auto &s = section("extension");
    tower_ = graph::extend_tower(cfg_.graph, cfg_.depth_k, cfg_.budgets.vertices);
    std::string sizes;
    for (std::size_t i = 0; i < tower_.stage_sizes.size(); ++i)
      sizes += (i ? " " : "") + str(tower_.stage_sizes[i]);
    s.set("stage-sizes", sizes);
    s.set("top-vertices", str(tower_.top.size()));
    s.set("top-edges", str(tower_.top.edge_count()));
    if (cfg_.depth_k == 0) {
      s.set("audit", "skipped (k = 0)");
      return;
    }

    const auto &g = cfg_.graph;
    bool induced = true;
    for (graph::Vertex x = 0; x < g.size(); ++x)
      for (graph::Vertex y = 0; y < g.size(); ++y)
        if (x != y && g.adjacent(x, y) != tower_.top.adjacent(tower_.inclusion[x], tower_.inclusion[y]))
          induced = false;
    check(s, "induced-subgraph", induced);

    const std::size_t prev = tower_.stage_sizes[tower_.stage_sizes.size() - 2];
    const std::size_t m = std::min<std::size_t>(prev, 4);
    std::vector<graph::Vertex> domain(prev);
    for (graph::Vertex v = 0; v < prev; ++v)
      domain[v] = v;
    const auto gaps = graph::audit_extension_property(tower_.top, m, domain);
    s.set("audit-domain", "stage " + str(cfg_.depth_k - 1) + " vertices (" + str(prev) + ")");
    s.set("audit-max-set-size", str(m));
    s.set("audit-gaps", str(gaps.size()));
    check(s, "extension-property", gaps.empty());

    const std::string text = graph::format_graph(tower_.top);
    artifact("graph_k.txt", text);
  }

  void mekler_stage()
  {
    auto &s = section("mekler");
    gamma_ = std::make_shared<const mekler::PcGroup>(mekler::PcGroup::make(cfg_.graph, cfg_.p));
    const auto &G = *gamma_;
    s.set("p", str(G.p()));
    s.set("rank", str(G.rank()));
    s.set("nonedge-pairs", str(G.nonedge_pairs().size()));
    s.set("order", power_string(G.p(), G.order_exponent(), G.order()));
    const auto Z = mekler::center(G);
    std::string support;
    for (auto v : Z.support)
      support += (support.empty() ? "" : " ") + G.graph().label(v);
    s.set("center-support", support.empty() ? "(none)" : support);
    s.set("center-order", power_string(G.p(), Z.exponent, Z.order));

    bool rel = true;
    for (graph::Vertex x = 0; x < G.rank(); ++x)
      for (graph::Vertex y = 0; y < G.rank(); ++y) {
        const bool commute = G.is_identity(G.commutator(G.generator(x), G.generator(y)));
        rel = rel && commute == (x == y || G.graph().adjacent(x, y));
      }
    check(s, "edge-relations", rel);

    bool assoc = true, expo = true, class2 = true;
    for (std::size_t i = 0; i < cfg_.samples; ++i) {
      const auto u = G.random_element(rng_), v = G.random_element(rng_), w = G.random_element(rng_);
      assoc = assoc && G.multiply(G.multiply(u, v), w) == G.multiply(u, G.multiply(v, w));
      expo = expo && G.is_identity(G.power(u, G.p()));
      class2 = class2 && G.is_identity(G.commutator(G.commutator(u, v), w));
    }
    check(s, "associativity-sampled", assoc);
    check(s, "exponent-p-sampled", expo);
    check(s, "class-2-sampled", class2);

    std::vector<mekler::PcElement> gens;
    for (graph::Vertex x = 0; x < G.rank(); ++x)
      gens.push_back(G.generator(x));
    check(s, "round-trip", mekler::recover_graph(G, gens) == G.graph());

    Manifest desc;
    auto &d = desc.add("gamma");
    d.set("graph-sha256", sha256_hex(graph::format_graph(G.graph())));
    d.set("p", str(G.p()));
    d.set("vertex-order", join_vertices(G.graph()));
    std::string pairs;
    for (auto [x, y] : G.nonedge_pairs())
      pairs += (pairs.empty() ? "" : " ") + str(x) + "-" + str(y);
    d.set("nonedge-order", pairs);
    d.set("order", power_string(G.p(), G.order_exponent(), G.order()));
    for (graph::Vertex x = 0; x < G.rank(); ++x)
      d.set("generator." + G.graph().label(x), mekler::format_element(G.generator(x)));
    artifact("mekler.txt", format_manifest(desc));
  }

  void gamma_prime()
  {
    if (cfg_.depth_k == 0)
      return;
    auto &s = section("gamma-prime");
    const auto h = mekler::embed_gamma_prime(gamma_, tower_);
    const auto &S = h.source();
    const auto &T = h.target();
    s.set("target-rank", str(T.rank()));
    s.set("target-order", "p^" + str(T.order_exponent()));
    s.set("coordinate-transport", h.monotone() ? "yes" : "no");

    bool hom = true;
    for (std::size_t i = 0; i < cfg_.samples; ++i) {
      const auto u = S.random_element(rng_), v = S.random_element(rng_);
      hom = hom && h.apply(S.multiply(u, v)) == T.multiply(h.apply(u), h.apply(v));
    }
    check(s, "homomorphism-sampled", hom);

    std::vector<mekler::PcElement> imgs;
    for (graph::Vertex x = 0; x < S.rank(); ++x)
      imgs.push_back(h.apply(S.generator(x)));
    const auto pattern = mekler::recover_graph(T, imgs);
    check(s, "commutation-pattern", pattern.edges() == S.graph().edges());

    if (S.order() <= kExhaustiveLimit) {
      const auto n = static_cast<std::uint64_t>(S.order());
      bool trivial_kernel = true;
      for (std::uint64_t i = 1; i < n && trivial_kernel; ++i)
        trivial_kernel = !T.is_identity(h.apply(S.decode(i)));
      s.set("kernel-check", "exhaustive over " + str(n) + " elements");
      check(s, "injective", trivial_kernel);
    } else {
      s.set("kernel-check", "skipped (order above " + str(kExhaustiveLimit) + ")");
    }

    Manifest desc;
    auto &d = desc.add("gamma-prime");
    d.set("source-sha256", sha256_hex(graph::format_graph(S.graph())));
    d.set("target-sha256", sha256_hex(graph::format_graph(T.graph())));
    d.set("p", str(S.p()));
    std::string vm;
    for (auto v : h.vertex_map())
      vm += (vm.empty() ? "" : " ") + str(v);
    d.set("vertex-map", vm);
    for (graph::Vertex x = 0; x < S.rank(); ++x)
      d.set("image." + S.graph().label(x), mekler::format_element(imgs[x]));
    artifact("gamma_prime.txt", format_manifest(desc));
  }

  void d_stage()
  {
    if (cfg_.depth_d == 0)
      return;
    auto &s = section("d-stage");
    const auto A = group::named_group(cfg_.a_group, cfg_.budgets.enumeration);
    const auto H0 = group::named_group(cfg_.h0_group, cfg_.budgets.enumeration);
    const auto tower = limits::make_cayley_tower(A, H0, cfg_.depth_d, cfg_.budgets.points);
    const auto D = limits::build_D(tower);
    const std::size_t da = A.degree();

    s.set("A-order", str(A.order()));
    s.set("H0-order", str(H0.order()));
    std::string hdeg;
    for (const auto &H : tower.H)
      hdeg += (hdeg.empty() ? "" : " ") + str(H.degree());
    s.set("H-degrees", hdeg);
    s.set("explicit-stages", str(D.system.depth() + 1));
    s.set("lazy-stage", tower.lazy ? "yes" : "no");

    const auto &G0 = D.system.stage(0);
    const auto &E0 = G0.enumerate();
    s.set("G0-order", str(E0.size()));

    if (D.system.depth() >= 1) {
      bool pi_ok = true;
      for (group::Elem x = 0; x < E0.size(); ++x) {
        const auto &g = E0.element(x);
        pi_ok = pi_ok && D.system.push(g, 0, 1).restrict(0, da) == g.restrict(0, da);
      }
      check(s, "pi-phi-commute", pi_ok);
    }

    const auto ker = limits::kernel_of_pi(D, 0);
    bool ker_ok = ker.size() == H0.order();
    for (auto k : ker)
      ker_ok = ker_ok && H0.contains(E0.element(k).restrict(da, H0.degree()));
    check(s, "kernel-is-H0", ker_ok);

    const auto q = limits::quotient_is_A(D, 0);
    s.set("quotient-order", str(q.quotient.order()));
    check(s, "quotient-iso-A", q.iso_to_A.has_value());

    bool absorbs = true;
    for (auto k : ker)
      if (k != 0)
        absorbs = absorbs && limits::check_normal_absorption(D, 0, E0.element(k)).status ==
                               limits::Absorption::Contains;
    check(s, "absorption-h-coordinate", absorbs);
    for (std::size_t i = 0; i < A.gens().size(); ++i) {
      const auto &a = A.gens()[i];
      if (a.is_identity())
        continue;
      const auto r = limits::check_normal_absorption(D, 0, group::concat(a, H0.identity()));
      s.set("absorption-a-generator-" + str(i), limits::to_string(r.status));
    }

    if (tower.lazy)
      lazy_smoke(s, *tower.lazy);

    // the intended A is Γ'(G); recorded, not enumerated
    s.set("intended-A", "Gamma'(G) <= Gamma(G_k)");
    s.set("intended-A-order", power_string(gamma_->p(), gamma_->order_exponent(), gamma_->order()));
    s.set("intended-A-generators", str(gamma_->rank()) + " (see gamma_prime.txt)");
    s.set("intended-A-enumerated", "no");

    Manifest desc;
    for (std::size_t i = 0; i < tower.f.size(); ++i) {
      auto &t = desc.add("map-" + str(i));
      t.set("domain-order", str(tower.f[i].domain().order()));
      t.set("codomain", "Alt(" + str(tower.f[i].codomain().degree()) + ")");
      const auto &gens = tower.f[i].domain().gens();
      for (std::size_t j = 0; j < gens.size(); ++j)
        t.set("image." + str(j), tower.f[i].gen_images()[j].to_string());
    }
    if (tower.lazy) {
      auto &t = desc.add("lazy-stage");
      t.set("domain-order", tower.lazy->domain_order().str());
      t.set("target-degree", tower.lazy->target_degree().str());
    }
    artifact("tower.txt", format_manifest(desc));

    omni_stage(G0, da);
  }

  void lazy_smoke(Section &s, const limits::LazyStage &L)
  {
    const auto &gens = L.domain().gens();
    std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
    auto random_element = [&] {
      auto x = L.domain().identity();
      for (int i = 0; i < 8; ++i)
        x = x * gens[pick(rng_)];
      return x;
    };
    bool hom = true, even = true, faithful = true;
    const std::size_t n = std::min<std::size_t>(cfg_.samples, 100);
    for (std::size_t i = 0; i < n; ++i) {
      const auto x = random_element(), y = random_element();
      const auto fx = L.image(x), fy = L.image(y);
      hom = hom && L.equal(L.multiply(fx, fy), L.image(x * y));
      even = even && L.is_even(L.multiply(fx, fy));
      faithful = faithful && (x.is_identity() || !L.equal(fx, L.identity()));
    }
    s.set("lazy-samples", str(n));
    check(s, "lazy-homomorphism-sampled", hom);
    check(s, "lazy-even-sampled", even);
    check(s, "lazy-faithful-sampled", faithful);
  }

  void omni_stage(const group::PermGroup &G0, std::size_t da)
  {
    auto &s = section("omni");
    omni::AuditOptions opts;
    opts.max_f = cfg_.omni_max_f;
    opts.max_g = cfg_.omni_max_g;
    opts.a_degree = da;
    const auto rep = omni::omni_audit(G0, cfg_.a_group + "+" + cfg_.h0_group, opts);
    std::size_t witnessed = 0, h_rows = 0, h_witnessed = 0;
    for (const auto &r : rep.rows) {
      witnessed += r.witnessed;
      const bool h = r.note.find(":h-coord") != std::string::npos;
      h_rows += h;
      h_witnessed += h && r.witnessed;
    }
    s.set("gamma", rep.gamma);
    s.set("bounds", "F<=" + str(rep.max_f) + " G<=" + str(rep.max_g) + " H<=" + str(rep.bound));
    s.set("rows", str(rep.rows.size()));
    s.set("witnessed", str(witnessed));
    s.set("h-coord-rows", str(h_rows));
    s.set("h-coord-witnessed", str(h_witnessed));
    artifact("omni.txt", omni::format_report(rep));
  }

  void finish(const std::string &status, const std::string &error = {})
  {
    auto &s = section("status");
    s.set("status", status);
    if (!error.empty())
      s.set("error", error);
    for (const auto &[name, content] : result_.artifacts)
      s.set("artifact." + name, sha256_hex(content));
    result_.artifacts["manifest.txt"] = format_manifest(result_.manifest);
  }

  const PipelineConfig &cfg_;
  std::mt19937_64 rng_;
  PipelineResult result_;
  bool ok_ = true;
  graph::ExtensionTower tower_;
  std::shared_ptr<const mekler::PcGroup> gamma_;
};

} // namespace

void PipelineConfig::validate() const
{
  if (p == 2 || !mekler::is_prime(p))
    throw std::invalid_argument("p must be an odd prime");
  if (budgets.vertices == 0 || budgets.enumeration == 0 || budgets.points == 0)
    throw std::invalid_argument("budgets must be positive");
}

PipelineResult run_pipeline(const PipelineConfig &cfg)
{
  cfg.validate();
  return Run(cfg).go();
}

void write_artifacts(const PipelineResult &r, const std::string &dir)
{
  std::filesystem::create_directories(dir);
  for (const auto &[name, content] : r.artifacts) {
    std::ofstream out(std::filesystem::path(dir) / name, std::ios::binary);
    if (!out)
      throw std::runtime_error("cannot write " + name);
    out << content;
  }
}

} // namespace lfg
