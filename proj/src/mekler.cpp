#include "lfg/mekler.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "lfg/error.hpp"

namespace lfg::mekler {

bool is_prime(std::uint64_t n)
{
  if (n < 2)
    return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0)
      return false;
  return true;
}

namespace {

std::uint64_t fnv(std::uint64_t h, std::uint64_t x)
{
  for (int i = 0; i < 8; ++i) {
    h ^= (x >> (8 * i)) & 0xff;
    h *= 1099511628211ull;
  }
  return h;
}

} // namespace

PcGroup PcGroup::make(Graph g, std::uint32_t p)
{
  if (p == 2)
    throw std::invalid_argument("p must be an odd prime, got 2");
  if (!is_prime(p))
    throw std::invalid_argument("p must be an odd prime, got " + std::to_string(p));

  PcGroup G;
  G.p_ = p;
  const auto n = g.size();
  G.pair_index_.assign(n * n, -1);
  for (Vertex x = 0; x < n; ++x)
    for (Vertex y = x + 1; y < n; ++y)
      if (!g.adjacent(x, y)) {
        const auto k = static_cast<std::int64_t>(G.pairs_.size());
        G.pair_index_[x * n + y] = G.pair_index_[y * n + x] = k;
        G.pairs_.emplace_back(x, y);
      }

  std::uint64_t h = fnv(1469598103934665603ull, p);
  h = fnv(h, n);
  for (auto [x, y] : g.edges())
    h = fnv(fnv(h, x), y);
  G.fingerprint_ = h;
  G.graph_ = std::make_shared<const Graph>(std::move(g));
  return G;
}

std::int64_t PcGroup::pair_index(Vertex x, Vertex y) const
{
  return pair_index_[static_cast<std::size_t>(x) * rank() + y];
}

BigInt PcGroup::order() const
{
  BigInt r = 1;
  for (std::size_t i = 0; i < order_exponent(); ++i)
    r *= p_;
  return r;
}

PcElement PcGroup::identity() const
{
  return PcElement{fingerprint_, std::vector<Coord>(rank(), 0), std::vector<Coord>(pairs_.size(), 0)};
}

PcElement PcGroup::generator(Vertex x) const
{
  if (x >= rank())
    throw std::invalid_argument("generator index out of range");
  auto u = identity();
  u.a[x] = 1;
  return u;
}

void PcGroup::validate(const PcElement &u) const
{
  if (u.group != fingerprint_)
    throw std::invalid_argument("element belongs to a different Mekler group");
  if (u.a.size() != rank() || u.b.size() != pairs_.size())
    throw std::invalid_argument("element has the wrong number of coordinates");
  for (Coord c : u.a)
    if (c >= p_)
      throw std::invalid_argument("coordinate out of range");
  for (Coord c : u.b)
    if (c >= p_)
      throw std::invalid_argument("coordinate out of range");
}

PcElement PcGroup::multiply(const PcElement &u, const PcElement &v) const
{
  validate(u);
  validate(v);
  const std::uint64_t p = p_;
  PcElement w = u;
  for (std::size_t x = 0; x < rank(); ++x)
    w.a[x] = static_cast<Coord>((u.a[x] + v.a[x]) % p);
  // collecting v's generators past u's larger ones: b''_xy = b + b' - a_y a'_x
  for (std::size_t k = 0; k < pairs_.size(); ++k) {
    const auto [x, y] = pairs_[k];
    const std::uint64_t corr = (std::uint64_t{u.a[y]} * v.a[x]) % p;
    w.b[k] = static_cast<Coord>((u.b[k] + v.b[k] + p - corr) % p);
  }
  return w;
}

PcElement PcGroup::inverse(const PcElement &u) const
{
  validate(u);
  const std::uint64_t p = p_;
  PcElement w = u;
  for (auto &c : w.a)
    c = static_cast<Coord>((p - c) % p);
  for (std::size_t k = 0; k < pairs_.size(); ++k) {
    const auto [x, y] = pairs_[k];
    const std::uint64_t t = (u.b[k] + std::uint64_t{u.a[x]} * u.a[y]) % p;
    w.b[k] = static_cast<Coord>((p - t) % p);
  }
  return w;
}

PcElement PcGroup::commutator(const PcElement &u, const PcElement &v) const
{
  validate(u);
  validate(v);
  const std::uint64_t p = p_;
  PcElement w = identity();
  for (std::size_t k = 0; k < pairs_.size(); ++k) {
    const auto [x, y] = pairs_[k];
    const std::uint64_t plus = (std::uint64_t{u.a[x]} * v.a[y]) % p;
    const std::uint64_t minus = (std::uint64_t{u.a[y]} * v.a[x]) % p;
    w.b[k] = static_cast<Coord>((plus + p - minus) % p);
  }
  return w;
}

PcElement PcGroup::power(const PcElement &u, std::uint64_t k) const
{
  PcElement result = identity(), base = u;
  validate(u);
  while (k) {
    if (k & 1)
      result = multiply(result, base);
    base = multiply(base, base);
    k >>= 1;
  }
  return result;
}

bool PcGroup::is_identity(const PcElement &u) const
{
  return std::all_of(u.a.begin(), u.a.end(), [](Coord c) { return c == 0; }) &&
         std::all_of(u.b.begin(), u.b.end(), [](Coord c) { return c == 0; });
}

bool PcGroup::encodable() const { return order() < (BigInt(1) << 32); }

std::uint32_t PcGroup::encode(const PcElement &u) const
{
  validate(u);
  std::uint64_t idx = 0;
  for (Coord c : u.a)
    idx = idx * p_ + c;
  for (Coord c : u.b)
    idx = idx * p_ + c;
  return static_cast<std::uint32_t>(idx);
}

PcElement PcGroup::decode(std::uint64_t index) const
{
  PcElement u = identity();
  for (std::size_t k = pairs_.size(); k-- > 0;) {
    u.b[k] = static_cast<Coord>(index % p_);
    index /= p_;
  }
  for (std::size_t x = rank(); x-- > 0;) {
    u.a[x] = static_cast<Coord>(index % p_);
    index /= p_;
  }
  if (index != 0)
    throw std::invalid_argument("element index out of range");
  return u;
}

PcElement PcGroup::random_element(std::mt19937_64 &rng) const
{
  std::uniform_int_distribution<Coord> coord(0, p_ - 1);
  PcElement u = identity();
  for (auto &c : u.a)
    c = coord(rng);
  for (auto &c : u.b)
    c = coord(rng);
  return u;
}

// ---------------------------------------------------------------------------

PcCenter center(const PcGroup &G)
{
  PcCenter Z;
  const auto &g = G.graph();
  for (Vertex v = 0; v < g.size(); ++v)
    if (g.neighbors(v).size() + 1 == g.size())
      Z.support.push_back(v);
  Z.exponent = Z.support.size() + G.nonedge_pairs().size();
  Z.order = 1;
  for (std::size_t i = 0; i < Z.exponent; ++i)
    Z.order *= G.p();
  return Z;
}

bool is_central(const PcGroup &G, const PcCenter &Z, const PcElement &u)
{
  G.validate(u);
  for (Vertex v = 0; v < u.a.size(); ++v)
    if (u.a[v] != 0 && !std::binary_search(Z.support.begin(), Z.support.end(), v))
      return false;
  return true;
}

Graph recover_graph(const PcGroup &G, std::span<const PcElement> gens)
{
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex x = 0; x < gens.size(); ++x)
    for (Vertex y = x + 1; y < gens.size(); ++y)
      if (G.is_identity(G.commutator(gens[x], gens[y])))
        edges.emplace_back(x, y);
  if (gens.size() == G.rank())
    return Graph::make(G.graph().labels(), edges);
  return Graph::from_edges(gens.size(), edges);
}

// ---------------------------------------------------------------------------

PcHom PcHom::make(std::shared_ptr<const PcGroup> source, std::shared_ptr<const PcGroup> target,
                  std::vector<Vertex> vertex_map)
{
  if (source->p() != target->p())
    throw std::invalid_argument("source and target use different primes");
  const auto &gs = source->graph();
  const auto &gt = target->graph();
  if (vertex_map.size() != gs.size())
    throw std::invalid_argument("vertex map has the wrong length");
  std::vector<char> hit(gt.size(), 0);
  for (Vertex v : vertex_map) {
    if (v >= gt.size() || hit[v])
      throw std::invalid_argument("vertex map is not injective");
    hit[v] = 1;
  }
  for (Vertex x = 0; x < gs.size(); ++x)
    for (Vertex y = x + 1; y < gs.size(); ++y)
      if (gs.adjacent(x, y) != gt.adjacent(vertex_map[x], vertex_map[y]))
        throw std::invalid_argument("vertex map does not preserve and reflect adjacency");

  PcHom h;
  h.source_ = std::move(source);
  h.target_ = std::move(target);
  h.map_ = std::move(vertex_map);
  h.monotone_ = std::is_sorted(h.map_.begin(), h.map_.end());
  for (auto [x, y] : h.source_->nonedge_pairs())
    h.pair_map_.push_back(h.target_->pair_index(h.map_[x], h.map_[y]));
  return h;
}

PcElement PcHom::apply(const PcElement &u) const
{
  source_->validate(u);
  const auto &T = *target_;
  if (monotone_) {
    PcElement w = T.identity();
    for (std::size_t x = 0; x < map_.size(); ++x)
      w.a[map_[x]] = u.a[x];
    for (std::size_t k = 0; k < pair_map_.size(); ++k)
      w.b[static_cast<std::size_t>(pair_map_[k])] = u.b[k];
    return w;
  }
  // recollect in the target's order
  PcElement w = T.identity();
  for (std::size_t x = 0; x < map_.size(); ++x)
    w = T.multiply(w, T.power(T.generator(map_[x]), u.a[x]));
  const auto &pairs = source_->nonedge_pairs();
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    const auto c = T.commutator(T.generator(map_[pairs[k].first]), T.generator(map_[pairs[k].second]));
    w = T.multiply(w, T.power(c, u.b[k]));
  }
  return w;
}

PcHom embed_gamma_prime(std::shared_ptr<const PcGroup> source, const graph::ExtensionTower &tower)
{
  auto target = std::make_shared<const PcGroup>(PcGroup::make(tower.top, source->p()));
  return PcHom::make(std::move(source), std::move(target), tower.inclusion);
}

// ---------------------------------------------------------------------------

namespace {

void write_list(std::ostream &os, const std::vector<Coord> &v)
{
  os << '[';
  for (std::size_t i = 0; i < v.size(); ++i)
    os << (i ? "," : "") << v[i];
  os << ']';
}

std::vector<Coord> read_list(const std::string &s)
{
  if (s.size() < 2 || s.front() != '[' || s.back() != ']')
    throw ParseError("expected a bracketed coordinate list, got '" + s + "'", 0);
  std::vector<Coord> out;
  std::string body = s.substr(1, s.size() - 2);
  if (body.empty())
    return out;
  std::istringstream is(body);
  std::string item;
  while (std::getline(is, item, ',')) {
    try {
      std::size_t used = 0;
      const auto v = std::stoul(item, &used);
      if (used != item.size())
        throw std::invalid_argument(item);
      out.push_back(static_cast<Coord>(v));
    } catch (const std::exception &) {
      throw ParseError("bad coordinate '" + item + "'", 0);
    }
  }
  return out;
}

} // namespace

std::string format_element(const PcElement &u)
{
  std::ostringstream os;
  os << "pc a=";
  write_list(os, u.a);
  os << " b=";
  write_list(os, u.b);
  return os.str();
}

PcElement parse_element(const PcGroup &G, const std::string &text)
{
  std::istringstream is(text);
  std::string tag, a, b, extra;
  if (!(is >> tag >> a >> b) || tag != "pc" || a.rfind("a=", 0) != 0 || b.rfind("b=", 0) != 0 ||
      (is >> extra))
    throw ParseError("expected 'pc a=[...] b=[...]'", 0);
  PcElement u{G.fingerprint(), read_list(a.substr(2)), read_list(b.substr(2))};
  try {
    G.validate(u);
  } catch (const std::invalid_argument &e) {
    throw ParseError(e.what(), 0);
  }
  return u;
}

} // namespace lfg::mekler
