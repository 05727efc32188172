#include "graphpw/io.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <set>
#include <sstream>
#include <unordered_map>

namespace graphpw {
namespace {

std::string strip_cr(std::string line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return line;
}

bool skippable(const std::string& line) {
  return line.empty() || line[0] == '#' ||
         line.find_first_not_of(" \t") == std::string::npos;
}

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t tab = line.find('\t', start);
    if (tab == std::string::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
}

double parse_number(const std::string& text, int line_no, const char* what) {
  const char* begin = text.c_str();
  char* end = nullptr;
  const double value = std::strtod(begin, &end);
  if (end == begin || *end != '\0' || !std::isfinite(value))
    throw ParseError(line_no, std::string("malformed ") + what + " '" + text +
                                  "'");
  return value;
}

std::ifstream open_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return in;
}

// Shared scanner for `v<TAB>value` files.
std::map<int, double> load_pairs(const WeightedGraph& g, std::istream& in,
                                 const char* value_name) {
  std::map<int, double> out;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    line = strip_cr(line);
    if (skippable(line)) continue;
    const auto fields = split_tabs(line);
    if (fields.size() != 2)
      throw ParseError(line_no, "expected 'vertex<TAB>value'");
    const int v = g.index_of(fields[0]);
    if (v < 0) throw ParseError(line_no, "unknown vertex '" + fields[0] + "'");
    const double value = parse_number(fields[1], line_no, value_name);
    if (!out.emplace(v, value).second)
      throw ParseError(line_no, "duplicate entry for vertex '" + fields[0] +
                                    "'");
  }
  return out;
}

}  // namespace

WeightedGraph load_graph(std::istream& edge_stream,
                         std::istream* vertex_weight_stream) {
  std::vector<std::string> ids;
  std::unordered_map<std::string, int> index;
  std::vector<Edge> edges;
  std::set<std::pair<int, int>> seen;

  auto intern = [&](const std::string& id) {
    auto it = index.find(id);
    if (it != index.end()) return it->second;
    const int i = static_cast<int>(ids.size());
    ids.push_back(id);
    index.emplace(id, i);
    return i;
  };

  std::string line;
  int line_no = 0;
  while (std::getline(edge_stream, line)) {
    ++line_no;
    line = strip_cr(line);
    if (skippable(line)) continue;
    const auto fields = split_tabs(line);
    if (fields.size() != 3)
      throw ParseError(line_no, "expected 'u<TAB>v<TAB>w'");
    if (fields[0].empty() || fields[1].empty())
      throw ParseError(line_no, "empty vertex id");
    const double w = parse_number(fields[2], line_no, "edge weight");
    if (w < 0) throw ParseError(line_no, "negative weight");
    if (fields[0] == fields[1])
      throw ParseError(line_no, "self-loop at '" + fields[0] + "'");
    int u = intern(fields[0]);
    int v = intern(fields[1]);
    if (u > v) std::swap(u, v);
    if (!seen.emplace(u, v).second)
      throw ParseError(line_no, "duplicate edge '" + fields[0] + "'-'" +
                                    fields[1] + "'");
    edges.push_back({u, v, w});
  }
  if (ids.empty()) throw std::runtime_error("edge list declares no vertices");

  std::vector<double> nu(ids.size(), 1.0);
  if (vertex_weight_stream) {
    std::string wline;
    int wline_no = 0;
    std::set<int> assigned;
    while (std::getline(*vertex_weight_stream, wline)) {
      ++wline_no;
      wline = strip_cr(wline);
      if (skippable(wline)) continue;
      const auto fields = split_tabs(wline);
      if (fields.size() != 2)
        throw ParseError(wline_no, "expected 'vertex<TAB>nu'");
      auto it = index.find(fields[0]);
      if (it == index.end())
        throw ParseError(wline_no, "unknown vertex '" + fields[0] + "'");
      const double value = parse_number(fields[1], wline_no, "vertex weight");
      if (!(value > 0))
        throw ParseError(wline_no, "non-positive vertex weight for '" +
                                       fields[0] + "'");
      if (!assigned.insert(it->second).second)
        throw ParseError(wline_no, "duplicate vertex weight for '" +
                                       fields[0] + "'");
      nu[it->second] = value;
    }
  }
  return WeightedGraph(std::move(ids), std::move(edges), std::move(nu));
}

WeightedGraph load_graph_file(const std::string& edge_path,
                              const std::string& vertex_weight_path) {
  auto edges = open_file(edge_path);
  if (vertex_weight_path.empty()) return load_graph(edges);
  auto weights = open_file(vertex_weight_path);
  return load_graph(edges, &weights);
}

Signal load_signal(const WeightedGraph& g, std::istream& in) {
  Signal f = Signal::Zero(g.size());
  for (const auto& [v, value] : load_pairs(g, in, "signal value"))
    f[v] = value;
  return f;
}

Signal load_signal_file(const WeightedGraph& g, const std::string& path) {
  auto in = open_file(path);
  return load_signal(g, in);
}

std::vector<VertexSet> load_shells(const WeightedGraph& g, std::istream& in) {
  std::vector<VertexSet> shells;
  std::vector<char> used(g.size(), 0);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    line = strip_cr(line);
    if (skippable(line)) continue;
    VertexSet shell;
    std::istringstream tokens(line);
    std::string id;
    while (tokens >> id) {
      const int v = g.index_of(id);
      if (v < 0) throw ParseError(line_no, "unknown vertex '" + id + "'");
      if (used[v])
        throw ParseError(line_no, "vertex '" + id + "' listed twice");
      used[v] = 1;
      shell.push_back(v);
    }
    shells.push_back(make_vertex_set(std::move(shell), g.size()));
  }
  if (shells.empty()) throw std::runtime_error("shell file declares no shells");
  return shells;
}

std::vector<VertexSet> load_shells_file(const WeightedGraph& g,
                                        const std::string& path) {
  auto in = open_file(path);
  return load_shells(g, in);
}

std::map<int, double> load_samples(const WeightedGraph& g, std::istream& in) {
  return load_pairs(g, in, "sample value");
}

std::map<int, double> load_samples_file(const WeightedGraph& g,
                                        const std::string& path) {
  auto in = open_file(path);
  return load_samples(g, in);
}

}  // namespace graphpw
