#include "lfg/graph_io.hpp"

#include <fstream>
#include <sstream>

namespace lfg::graph {

namespace {

std::string strip_comment(const std::string &line)
{
  auto pos = line.find('#');
  return pos == std::string::npos ? line : line.substr(0, pos);
}

long long read_index(std::istringstream &ss, std::size_t lineno, const char *what)
{
  long long v;
  if (!(ss >> v) || v < 0)
    throw ParseError(std::string("expected non-negative ") + what, lineno);
  return v;
}

} // namespace

Graph read_graph(std::istream &in)
{
  std::string line;
  std::size_t lineno = 0;
  std::optional<std::size_t> n;
  std::vector<std::string> labels;
  std::vector<std::pair<Vertex, Vertex>> edges;

  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ss(strip_comment(line));
    std::string tag;
    if (!(ss >> tag))
      continue;
    if (tag == "p") {
      std::string kind;
      if (n)
        throw ParseError("duplicate header", lineno);
      if (!(ss >> kind) || kind != "graph")
        throw ParseError("expected 'p graph <n>'", lineno);
      n = static_cast<std::size_t>(read_index(ss, lineno, "vertex count"));
      labels.resize(*n);
      for (std::size_t i = 0; i < *n; ++i)
        labels[i] = std::to_string(i);
    } else if (tag == "e" || tag == "v") {
      if (!n)
        throw ParseError("'" + tag + "' line before header", lineno);
      auto i = read_index(ss, lineno, "vertex index");
      if (static_cast<std::size_t>(i) >= *n)
        throw ParseError("vertex index " + std::to_string(i) + " out of range", lineno);
      if (tag == "e") {
        auto j = read_index(ss, lineno, "vertex index");
        if (static_cast<std::size_t>(j) >= *n)
          throw ParseError("vertex index " + std::to_string(j) + " out of range", lineno);
        if (i == j)
          throw ParseError("loop edge", lineno);
        edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
      } else {
        std::string label;
        if (!(ss >> label))
          throw ParseError("missing label", lineno);
        labels[i] = label;
      }
    } else {
      throw ParseError("unknown line tag '" + tag + "'", lineno);
    }
    std::string extra;
    if (ss >> extra)
      throw ParseError("trailing token '" + extra + "'", lineno);
  }
  if (!n)
    throw ParseError("missing 'p graph <n>' header", 0);
  try {
    return Graph::make(std::move(labels), edges);
  } catch (const std::invalid_argument &e) {
    throw ParseError(e.what(), 0);
  }
}

Graph read_graph_file(const std::string &path)
{
  std::ifstream in(path);
  if (!in)
    throw ParseError("cannot open '" + path + "'", 0);
  return read_graph(in);
}

Graph parse_graph(const std::string &text)
{
  std::istringstream in(text);
  return read_graph(in);
}

void write_graph(std::ostream &out, const Graph &g)
{
  out << "p graph " << g.size() << '\n';
  for (Vertex v = 0; v < g.size(); ++v)
    if (g.label(v) != std::to_string(v))
      out << "v " << v << ' ' << g.label(v) << '\n';
  for (auto [x, y] : g.edges())
    out << "e " << x << ' ' << y << '\n';
}

std::string format_graph(const Graph &g)
{
  std::ostringstream ss;
  write_graph(ss, g);
  return ss.str();
}

} // namespace lfg::graph
