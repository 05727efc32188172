#pragma once

#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "graphpw/graph.hpp"

namespace graphpw {

/// Parse failure with the 1-based line number of the offending input line.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// Edge list: one `u<TAB>v<TAB>w` per line, w decimal >= 0; `#` lines and
/// blank lines ignored. Optional vertex weights: `v<TAB>nu` per line,
/// unlisted vertices default to 1. Vertex order is first occurrence in the
/// edge list.
WeightedGraph load_graph(std::istream& edge_stream,
                         std::istream* vertex_weight_stream = nullptr);

WeightedGraph load_graph_file(const std::string& edge_path,
                              const std::string& vertex_weight_path = "");

/// Signal file: `v<TAB>value` per line; unlisted vertices default to 0.
Signal load_signal(const WeightedGraph& g, std::istream& in);
Signal load_signal_file(const WeightedGraph& g, const std::string& path);

/// Partition/chain file: one shell per line, vertex ids whitespace-separated,
/// shell order = file order. Vertices may appear at most once.
std::vector<VertexSet> load_shells(const WeightedGraph& g, std::istream& in);
std::vector<VertexSet> load_shells_file(const WeightedGraph& g,
                                        const std::string& path);

/// Samples file: `v<TAB>value` per line, one entry per sampled vertex.
std::map<int, double> load_samples(const WeightedGraph& g, std::istream& in);
std::map<int, double> load_samples_file(const WeightedGraph& g,
                                        const std::string& path);

}  // namespace graphpw
