#include "lfg/group_io.hpp"

#include <fstream>
#include <optional>
#include <sstream>

namespace lfg::group {

namespace {

std::string strip_comment(const std::string &line)
{
  auto pos = line.find('#');
  return pos == std::string::npos ? line : line.substr(0, pos);
}

std::vector<Point> read_images(std::istringstream &ss, std::size_t degree, std::size_t line)
{
  std::vector<Point> im;
  std::string tok;
  while (ss >> tok) {
    try {
      std::size_t used = 0;
      const long long v = std::stoll(tok, &used);
      if (used != tok.size() || v < 0)
        throw std::invalid_argument(tok);
      im.push_back(static_cast<Point>(v));
    } catch (const std::exception &) {
      throw ParseError("bad image '" + tok + "'", line);
    }
  }
  if (im.size() != degree)
    throw ParseError("expected " + std::to_string(degree) + " images, got " +
                       std::to_string(im.size()),
                     line);
  if (!Perm::is_bijection(im))
    throw ParseError("images do not form a permutation", line);
  return im;
}

} // namespace

Perm parse_perm(const std::string &text, std::size_t line)
{
  std::istringstream ss(text);
  std::string tag, deg;
  if (!(ss >> tag >> deg) || tag != "perm" || deg.empty() || deg.back() != ':')
    throw ParseError("expected 'perm <degree>: ...'", line);
  deg.pop_back();
  std::size_t degree;
  try {
    std::size_t used = 0;
    degree = std::stoul(deg, &used);
    if (used != deg.size())
      throw std::invalid_argument(deg);
  } catch (const std::exception &) {
    throw ParseError("bad degree '" + deg + "'", line);
  }
  return Perm(read_images(ss, degree, line));
}

PermGroup read_group(std::istream &in, std::size_t budget)
{
  std::string raw;
  std::size_t lineno = 0;
  std::optional<std::size_t> degree;
  std::vector<Perm> gens;
  while (std::getline(in, raw)) {
    ++lineno;
    std::istringstream ss(strip_comment(raw));
    std::string tag;
    if (!(ss >> tag))
      continue;
    if (tag == "p") {
      std::string kind;
      long long d;
      if (degree)
        throw ParseError("duplicate header", lineno);
      if (!(ss >> kind) || kind != "group" || !(ss >> d) || d < 0)
        throw ParseError("expected 'p group <degree>'", lineno);
      std::string extra;
      if (ss >> extra)
        throw ParseError("trailing token '" + extra + "'", lineno);
      degree = static_cast<std::size_t>(d);
    } else if (tag == "g:") {
      if (!degree)
        throw ParseError("generator before header", lineno);
      gens.emplace_back(read_images(ss, *degree, lineno));
    } else {
      throw ParseError("unknown line tag '" + tag + "'", lineno);
    }
  }
  if (!degree)
    throw ParseError("missing 'p group <degree>' header", 0);
  return PermGroup::make(*degree, std::move(gens), budget);
}

PermGroup read_group_file(const std::string &path, std::size_t budget)
{
  std::ifstream in(path);
  if (!in)
    throw ParseError("cannot open '" + path + "'", 0);
  return read_group(in, budget);
}

PermGroup parse_group(const std::string &text, std::size_t budget)
{
  std::istringstream in(text);
  return read_group(in, budget);
}

void write_group(std::ostream &out, const PermGroup &G)
{
  out << "p group " << G.degree() << '\n';
  for (const auto &g : G.gens()) {
    out << "g:";
    for (Point x : g.images())
      out << ' ' << x;
    out << '\n';
  }
}

std::string format_group(const PermGroup &G)
{
  std::ostringstream ss;
  write_group(ss, G);
  return ss.str();
}

} // namespace lfg::group
