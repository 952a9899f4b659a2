#include "linarr/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <sstream>
#include <vector>

#include "linarr/errors.hpp"

namespace linarr {

namespace {

bool significant(const std::string& line, std::size_t* first) {
  std::size_t i = line.find_first_not_of(" \t\r");
  if (i == std::string::npos) return false;
  if (line[i] == '#' || line[i] == 'c') return false;
  *first = i;
  return true;
}

std::vector<std::string> tokens_of(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> toks;
  std::string t;
  while (ss >> t) toks.push_back(t);
  return toks;
}

long long to_int(const std::string& tok, std::size_t line) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size())
    throw ParseError("expected an integer, got '" + tok + "'", line);
  return value;
}

}  // namespace

Graph parse_graph(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  bool dimacs = false;
  long long n = -1, m = -1;
  std::size_t header_line = 0;

  while (std::getline(in, line)) {
    ++lineno;
    std::size_t first;
    if (!significant(line, &first)) continue;
    auto toks = tokens_of(line);
    if (toks[0] == "p") {
      if (toks.size() != 4 || toks[1] != "edge")
        throw ParseError("malformed header, expected 'p edge n m'", lineno);
      dimacs = true;
      n = to_int(toks[2], lineno);
      m = to_int(toks[3], lineno);
    } else {
      if (toks.size() != 2)
        throw ParseError("malformed header, expected 'n m'", lineno);
      n = to_int(toks[0], lineno);
      m = to_int(toks[1], lineno);
    }
    header_line = lineno;
    break;
  }
  if (n < 0) throw ParseError("missing header", lineno == 0 ? 1 : lineno);
  if (n > 50'000'000) throw ParseError("vertex count too large", header_line);
  if (m < 0 || m > 200'000'000)
    throw ParseError("edge count out of range", header_line);

  std::vector<std::pair<Vertex, Vertex>> edges;
  edges.reserve(static_cast<std::size_t>(m));
  std::vector<std::size_t> edge_line;
  edge_line.reserve(static_cast<std::size_t>(m));

  while (std::getline(in, line)) {
    ++lineno;
    std::size_t first;
    if (!significant(line, &first)) continue;
    if (static_cast<long long>(edges.size()) == m)
      throw ParseError("more edge lines than the header announced", lineno);
    auto toks = tokens_of(line);
    long long u, v;
    if (dimacs) {
      if (toks.size() != 3 || toks[0] != "e")
        throw ParseError("malformed edge line, expected 'e u v'", lineno);
      u = to_int(toks[1], lineno);
      v = to_int(toks[2], lineno);
    } else {
      if (toks.size() != 2)
        throw ParseError("malformed edge line, expected 'u v'", lineno);
      u = to_int(toks[0], lineno);
      v = to_int(toks[1], lineno);
    }
    const std::string where = "line " + std::to_string(lineno);
    if (u < 1 || u > n || v < 1 || v > n)
      throw EndpointOutOfRange(static_cast<int>(u), static_cast<int>(v),
                               edges.size(), where);
    if (u == v)
      throw LoopEdge(static_cast<int>(u), static_cast<int>(v), edges.size(),
                     where);
    edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
    edge_line.push_back(lineno);
  }
  if (static_cast<long long>(edges.size()) != m)
    throw ParseError("fewer edge lines than the header announced", lineno);

  try {
    return Graph::build(static_cast<Vertex>(n), edges);
  } catch (const DuplicateEdge& e) {
    throw DuplicateEdge(e.u, e.v, e.index,
                        "line " + std::to_string(edge_line[e.index]));
  }
}

Graph parse_graph(const std::string& text) {
  std::istringstream ss(text);
  return parse_graph(ss);
}

Graph parse_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open input file '" + path + "'");
  return parse_graph(in);
}

std::string format_graph(const Graph& g, GraphFormat format) {
  std::ostringstream out;
  if (format == GraphFormat::Dimacs)
    out << "p edge " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  else
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) {
    if (format == GraphFormat::Dimacs) out << "e ";
    out << e.u << ' ' << e.v << '\n';
  }
  return out.str();
}

}  // namespace linarr
