#include "diamaug/edge_list.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "diamaug/errors.hpp"

namespace diamaug {

namespace {

bool skippable(const std::string& line) {
  auto pos = line.find_first_not_of(" \t\r");
  return pos == std::string::npos || line[pos] == '#';
}

// Exactly `count` integers and nothing else.
bool read_ints(const std::string& line, long long* out, int count) {
  std::istringstream in(line);
  for (int i = 0; i < count; ++i) {
    if (!(in >> out[i])) return false;
  }
  std::string rest;
  return !(in >> rest);
}

}  // namespace

Graph parse_edge_list(std::istream& in) {
  std::string line;
  int line_no = 0;
  long long header[2];
  bool have_header = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (skippable(line)) continue;
    if (!read_ints(line, header, 2)) throw ParseError(line_no, "expected header \"n m\"");
    have_header = true;
    break;
  }
  if (!have_header) throw ParseError(line_no, "missing header line");
  const long long n = header[0], m = header[1];
  if (n < 0 || m < 0 || n > 1'000'000) throw ParseError(line_no, "bad vertex or edge count");

  std::vector<Edge> edges;
  std::set<Edge> seen;
  while (std::getline(in, line)) {
    ++line_no;
    if (skippable(line)) continue;
    long long uv[2];
    if (!read_ints(line, uv, 2)) throw ParseError(line_no, "expected \"u v\"");
    if (uv[0] < 0 || uv[0] >= n || uv[1] < 0 || uv[1] >= n) {
      throw ParseError(line_no, "vertex index out of range");
    }
    if (uv[0] == uv[1]) throw ParseError(line_no, "self-loop");
    Edge e(static_cast<Vertex>(uv[0]), static_cast<Vertex>(uv[1]));
    if (!seen.insert(e).second) throw ParseError(line_no, "duplicate edge");
    edges.push_back(e);
  }
  if (static_cast<long long>(edges.size()) != m) {
    throw ParseError(line_no, "header declares " + std::to_string(m) + " edges, found " +
                                  std::to_string(edges.size()));
  }
  return Graph(static_cast<int>(n), std::move(edges));
}

Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  return parse_edge_list(in);
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open " + path);
  return parse_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  write_edge_list(out, g);
  return out.str();
}

EdgeSet parse_edge_spec(const std::string& text) {
  std::vector<Edge> edges;
  std::string item;
  std::istringstream in(text);
  int index = 0;
  while (std::getline(in, item, ',')) {
    ++index;
    auto first = item.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    auto dash = item.find('-', first);
    if (dash == std::string::npos) throw ParseError(index, "expected u-v, got '" + item + "'");
    long long uv[2];
    std::string joined = item.substr(0, dash) + " " + item.substr(dash + 1);
    if (!read_ints(joined, uv, 2) || uv[0] < 0 || uv[1] < 0) {
      throw ParseError(index, "expected u-v, got '" + item + "'");
    }
    if (uv[0] == uv[1]) throw ParseError(index, "self-loop");
    edges.emplace_back(static_cast<Vertex>(uv[0]), static_cast<Vertex>(uv[1]));
  }
  return EdgeSet(std::move(edges));
}

}  // namespace diamaug
