#include "lfg/omni.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "lfg/catalog.hpp"
#include "lfg/error.hpp"

namespace lfg::omni {

LiftWitness lift_hom(const Hom &psi)
{
  const PermGroup &F = psi.domain();
  auto ds = group::direct_sum(F, psi.codomain());
  std::vector<Perm> imgs;
  for (const auto &f : F.gens())
    imgs.push_back(group::concat(f, psi.apply(f)));
  LiftWitness w{ds.group, Hom::make(F, ds.group, std::move(imgs)), ds.project_b};
  if (!verify_lift(w, psi))
    throw std::logic_error("lift witness failed verification");
  return w;
}

bool verify_lift(const LiftWitness &w, const Hom &psi)
{
  if (!w.i.domain().same_as(psi.domain()) || !w.Psi.codomain().same_as(psi.codomain()) ||
      !w.i.codomain().same_as(w.H) || !w.Psi.domain().same_as(w.H))
    return false;
  if (!w.i.injective() || !w.Psi.surjective())
    return false;
  const auto &E = psi.domain().enumerate();
  for (Elem x = 0; x < E.size(); ++x)
    if (w.Psi.apply(w.i.apply(x)) != psi.apply(x))
      return false;
  return true;
}

// ---------------------------------------------------------------------------

namespace {

std::size_t closure_size(const PermGroup &G, const std::vector<Perm> &gens)
{
  const auto &E = G.enumerate();
  std::vector<Elem> idx;
  for (const auto &g : gens)
    idx.push_back(E.index(g));
  return group::closure(E, idx).order();
}

} // namespace

OmniQuery OmniQuery::make(PermGroup Gamma, std::vector<Perm> f_gens, PermGroup G,
                          std::vector<Perm> psi_images, Perm g)
{
  for (const auto &f : f_gens)
    if (!Gamma.contains(f))
      throw std::invalid_argument("F is not a subgroup of Gamma");
  PermGroup F = PermGroup::make(Gamma.degree(), std::move(f_gens), Gamma.budget());
  Hom psi = Hom::make(F, G, std::move(psi_images));
  if (!psi.injective())
    throw std::invalid_argument("psi is not injective");
  if (!G.contains(g))
    throw std::invalid_argument("g is not an element of G");
  std::vector<Perm> gens = psi.gen_images();
  gens.push_back(g);
  if (closure_size(G, gens) != G.order())
    throw std::invalid_argument("psi(F) and g do not generate G");
  return OmniQuery{std::move(Gamma), std::move(F), std::move(G), std::move(psi), std::move(g)};
}

namespace {

std::optional<OmniWitness> check_with(const OmniQuery &q, const std::vector<Subgroup> &subs,
                                      std::size_t bound)
{
  const auto &E = q.Gamma.enumerate();
  const auto &GE = q.G.enumerate();
  std::vector<Elem> f_idx;
  for (const auto &f : q.F.gens())
    f_idx.push_back(E.index(f));
  const Subgroup F_sub = group::closure(E, f_idx);

  group::HomSearchOptions opts;
  opts.surjective = true;
  for (const auto &img : q.psi.gen_images())
    opts.fixed.push_back(GE.index(img));

  for (const auto &H : subs) {
    if (H.order() > bound || H.order() % GE.size() != 0 || !H.contains(F_sub))
      continue;
    // F's generators first, then greedily what is still missing
    std::vector<Elem> gens = f_idx;
    Subgroup cur = F_sub;
    for (Elem x : H.elements) {
      if (cur.order() == H.order())
        break;
      if (cur.contains(x))
        continue;
      gens.push_back(x);
      cur = group::closure(E, gens);
    }
    std::vector<Perm> perms;
    for (Elem x : gens)
      perms.push_back(E.element(x));
    PermGroup Hg = PermGroup::make(q.Gamma.degree(), std::move(perms), q.Gamma.budget());

    std::optional<Hom> Psi;
    group::for_each_hom(Hg, q.G, opts, [&](std::span<const Elem> imgs, std::span<const Elem>) {
      Psi = group::hom_from_images(Hg, q.G, imgs);
      return false;
    });
    if (Psi) {
      OmniWitness w{H, Hg, std::move(*Psi)};
      if (!verify_omni(q, w))
        throw std::logic_error("omni witness failed verification");
      return w;
    }
  }
  return std::nullopt;
}

} // namespace

std::optional<OmniWitness> omni_check(const OmniQuery &q, std::size_t bound)
{
  return check_with(q, group::subgroups(q.Gamma, bound), bound);
}

bool verify_omni(const OmniQuery &q, const OmniWitness &w)
{
  for (const auto &h : w.H_group.gens())
    if (!q.Gamma.contains(h))
      return false;
  if (!w.Psi.domain().same_as(w.H_group) || !w.Psi.codomain().same_as(q.G))
    return false;
  const auto &HE = w.H_group.enumerate();
  if (HE.size() != w.H.order())
    return false;
  if (!w.Psi.surjective())
    return false;
  const auto &FE = q.F.enumerate();
  for (Elem x = 0; x < FE.size(); ++x) {
    auto hx = HE.find(FE.element(x));
    if (!hx || w.Psi.apply(*hx) != q.psi.apply(x))
      return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

bool OmniReport::all_witnessed() const
{
  return std::all_of(rows.begin(), rows.end(), [](const OmniRow &r) { return r.witnessed; });
}

namespace {

std::string fingerprint(const std::vector<Elem> &imgs)
{
  std::string s = "[";
  for (std::size_t i = 0; i < imgs.size(); ++i)
    s += (i ? "," : "") + std::to_string(imgs[i]);
  return s + "]";
}

/// Lexicographically least image of psi's generator images under Aut(G).
std::vector<Elem> canonical(const std::vector<Elem> &imgs, const group::Automorphisms &aut)
{
  std::vector<Elem> best = imgs;
  for (const auto &alpha : aut.maps) {
    std::vector<Elem> c;
    for (Elem x : imgs)
      c.push_back(alpha[x]);
    best = std::min(best, c);
  }
  return best;
}

std::optional<Elem> single_generator(const group::Enumeration &GE, const std::vector<Elem> &imgs)
{
  for (Elem g = 0; g < GE.size(); ++g) {
    std::vector<Elem> gens = imgs;
    gens.push_back(g);
    if (group::closure(GE, gens).order() == GE.size())
      return g;
  }
  return std::nullopt;
}

} // namespace

OmniReport omni_audit(const PermGroup &Gamma, const std::string &gamma_name, const AuditOptions &opts)
{
  const auto &E = Gamma.enumerate();
  OmniReport rep;
  rep.gamma = gamma_name;
  rep.gamma_order = E.size();
  rep.max_f = opts.max_f;
  rep.bound = opts.bound ? std::min(opts.bound, E.size()) : E.size();
  // Psi: H -> G onto forces |G| <= |H| <= bound
  rep.max_g = std::min(opts.max_g, rep.bound);

  const auto subs = group::subgroups(Gamma, std::max(rep.bound, rep.max_f));
  const auto catalog = group::small_groups(rep.max_g);
  std::vector<group::Automorphisms> auts;
  for (const auto &c : catalog)
    auts.push_back(group::automorphisms(c.group));

  std::size_t fi = 0;
  for (const auto &F : subs) {
    if (F.order() > rep.max_f)
      continue;
    const std::size_t f_id = fi++;
    const auto f_gens = group::small_generating_set(E, F);
    std::vector<Perm> f_perms;
    for (Elem x : f_gens)
      f_perms.push_back(E.element(x));
    const PermGroup Fg = PermGroup::make(Gamma.degree(), f_perms, Gamma.budget());

    bool h_coord = false;
    if (opts.a_degree)
      h_coord = std::all_of(F.elements.begin(), F.elements.end(), [&](Elem x) {
        return E.element(x).restrict(0, *opts.a_degree).is_identity();
      });

    for (std::size_t ci = 0; ci < catalog.size(); ++ci) {
      const auto &G = catalog[ci].group;
      const auto &GE = G.enumerate();
      if (GE.size() % F.order() != 0)
        continue;
      std::set<std::vector<Elem>> classes;
      group::for_each_hom(Fg, G, group::HomSearchOptions{.injective = true, .surjective = false, .fixed = {}},
                          [&](std::span<const Elem> imgs, std::span<const Elem>) {
                            classes.insert(canonical({imgs.begin(), imgs.end()}, auts[ci]));
                            return true;
                          });
      for (const auto &imgs : classes) {
        const auto g = single_generator(GE, imgs);
        if (!g)
          continue;
        std::vector<Perm> psi_imgs;
        for (Elem x : imgs)
          psi_imgs.push_back(GE.element(x));
        const auto q = OmniQuery::make(Gamma, f_perms, G, std::move(psi_imgs), GE.element(*g));
        const auto w = check_with(q, subs, rep.bound);

        OmniRow row;
        row.f_order = F.order();
        row.g_order = GE.size();
        row.psi = fingerprint(imgs);
        row.witnessed = w.has_value();
        row.h_order = w ? w->H.order() : 0;
        row.bound = rep.bound;
        row.note = "F" + std::to_string(f_id) + ":G=" + catalog[ci].name + (h_coord ? ":h-coord" : "");
        rep.rows.push_back(std::move(row));
      }
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------

void write_report(std::ostream &out, const OmniReport &r)
{
  out << "# omni audit\n";
  out << "# lift witness: direct product F+G\n";
  out << "gamma: " << r.gamma << '\n';
  out << "gamma-order: " << r.gamma_order << '\n';
  out << "max-f: " << r.max_f << '\n';
  out << "max-g: " << r.max_g << '\n';
  out << "bound: " << r.bound << '\n';
  out << "columns: F-order G-order psi verdict H-order bound note\n";
  for (const auto &row : r.rows) {
    out << "row: " << row.f_order << ' ' << row.g_order << ' ' << row.psi << ' '
        << (row.witnessed ? "witnessed" : "none") << ' '
        << (row.witnessed ? std::to_string(row.h_order) : "-") << ' ' << row.bound << ' '
        << row.note << '\n';
  }
  std::size_t ok = 0;
  for (const auto &row : r.rows)
    ok += row.witnessed;
  out << "summary: " << ok << " of " << r.rows.size() << " witnessed\n";
}

std::string format_report(const OmniReport &r)
{
  std::ostringstream os;
  write_report(os, r);
  return os.str();
}

namespace {

std::size_t to_size(const std::string &s, std::size_t line)
{
  try {
    std::size_t used = 0;
    auto v = std::stoull(s, &used);
    if (used != s.size())
      throw std::invalid_argument(s);
    return static_cast<std::size_t>(v);
  } catch (const std::exception &) {
    throw ParseError("expected a number, got '" + s + "'", line);
  }
}

} // namespace

OmniReport parse_report(const std::string &text)
{
  OmniReport r;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  bool have_gamma = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#')
      continue;
    const auto colon = line.find(": ");
    if (colon == std::string::npos)
      throw ParseError("expected 'key: value'", lineno);
    const std::string key = line.substr(0, colon), value = line.substr(colon + 2);
    if (key == "gamma") {
      r.gamma = value;
      have_gamma = true;
    } else if (key == "gamma-order") {
      r.gamma_order = to_size(value, lineno);
    } else if (key == "max-f") {
      r.max_f = to_size(value, lineno);
    } else if (key == "max-g") {
      r.max_g = to_size(value, lineno);
    } else if (key == "bound") {
      r.bound = to_size(value, lineno);
    } else if (key == "row") {
      std::istringstream ss(value);
      std::string fo, go, psi, verdict, ho, b, note, extra;
      if (!(ss >> fo >> go >> psi >> verdict >> ho >> b >> note) || (ss >> extra))
        throw ParseError("malformed row", lineno);
      OmniRow row;
      row.f_order = to_size(fo, lineno);
      row.g_order = to_size(go, lineno);
      row.psi = psi;
      if (verdict != "witnessed" && verdict != "none")
        throw ParseError("unknown verdict '" + verdict + "'", lineno);
      row.witnessed = verdict == "witnessed";
      row.h_order = row.witnessed ? to_size(ho, lineno) : 0;
      row.bound = to_size(b, lineno);
      row.note = note;
      r.rows.push_back(std::move(row));
    } else if (key != "columns" && key != "summary") {
      throw ParseError("unknown key '" + key + "'", lineno);
    }
  }
  if (!have_gamma)
    throw ParseError("missing 'gamma' line", 0);
  return r;
}

} // namespace lfg::omni
