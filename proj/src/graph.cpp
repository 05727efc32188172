#include "graphpw/graph.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "graphpw/numeric.hpp"

namespace graphpw {

WeightedGraph::WeightedGraph(std::vector<std::string> vertex_ids,
                             std::vector<Edge> edges,
                             std::vector<double> vertex_weights)
    : ids_(std::move(vertex_ids)), nu_(std::move(vertex_weights)) {
  const int n = static_cast<int>(ids_.size());
  if (static_cast<int>(nu_.size()) != n)
    throw std::invalid_argument("vertex weight list does not match vertices");
  index_.reserve(ids_.size());
  for (int i = 0; i < n; ++i) {
    if (!index_.emplace(ids_[i], i).second)
      throw std::invalid_argument("duplicate vertex id '" + ids_[i] + "'");
  }
  for (int i = 0; i < n; ++i) {
    if (!(nu_[i] > 0) || !std::isfinite(nu_[i]))
      throw std::invalid_argument("non-positive vertex weight for '" +
                                  ids_[i] + "'");
    if (nu_[i] != 1.0) unit_nu_ = false;
  }

  std::set<std::pair<int, int>> seen;
  edges_.reserve(edges.size());
  for (Edge e : edges) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
      throw std::invalid_argument("edge endpoint out of range");
    if (e.u == e.v)
      throw std::invalid_argument("self-loop at '" + ids_[e.u] + "'");
    if (!(e.w >= 0) || !std::isfinite(e.w))
      throw std::invalid_argument("negative weight on edge '" + ids_[e.u] +
                                  "'-'" + ids_[e.v] + "'");
    if (e.u > e.v) std::swap(e.u, e.v);
    if (!seen.emplace(e.u, e.v).second)
      throw std::invalid_argument("duplicate edge '" + ids_[e.u] + "'-'" +
                                  ids_[e.v] + "'");
    if (e.w != 0.0) edges_.push_back(e);
  }
  std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) {
    return std::pair(a.u, a.v) < std::pair(b.u, b.v);
  });

  adj_.assign(n, {});
  degree_.assign(n, 0.0);
  for (const Edge& e : edges_) {
    adj_[e.u].emplace_back(e.v, e.w);
    adj_[e.v].emplace_back(e.u, e.w);
    degree_[e.u] += e.w;
    degree_[e.v] += e.w;
  }
  for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

int WeightedGraph::index_of(const std::string& id) const {
  auto it = index_.find(id);
  return it == index_.end() ? -1 : it->second;
}

int WeightedGraph::require_index(const std::string& id) const {
  const int i = index_of(id);
  if (i < 0) throw std::invalid_argument("unknown vertex '" + id + "'");
  return i;
}

double WeightedGraph::edge_weight(int u, int v) const {
  if (u < 0 || u >= size() || v < 0 || v >= size())
    throw std::invalid_argument("vertex index out of range");
  for (const auto& [nb, w] : adj_[u])
    if (nb == v) return w;
  return 0.0;
}

double subset_weight(const WeightedGraph& g, const VertexSet& a, int v) {
  if (v < 0 || v >= g.size())
    throw std::invalid_argument("vertex index out of range");
  const auto mask = membership_mask(g.size(), a);
  double total = 0.0;
  for (const auto& [nb, w] : g.neighbors(v))
    if (mask[nb]) total += w;
  return total;
}

void require_signal(const WeightedGraph& g, const Signal& f) {
  if (f.size() != g.size())
    throw std::invalid_argument("signal length does not match vertex count");
  if (!f.allFinite())
    throw std::invalid_argument("signal has non-finite entries");
}

double lp_norm(const WeightedGraph& g, const Signal& f, double p) {
  require_signal(g, f);
  if (is_infinite_p(p)) return f.size() == 0 ? 0.0 : f.cwiseAbs().maxCoeff();
  if (!(p >= 1)) throw std::invalid_argument("p must be >= 1 or infinity");
  double acc = 0.0;
  for (int i = 0; i < f.size(); ++i)
    acc += std::pow(std::abs(f[i]), p) * g.vertex_weight(i);
  return std::pow(acc, 1.0 / p);
}

double lp_norm_on(const WeightedGraph& g, const Signal& f, const VertexSet& s,
                  double p) {
  require_signal(g, f);
  if (is_infinite_p(p)) {
    double m = 0.0;
    for (int v : s) m = std::max(m, std::abs(f[v]));
    return m;
  }
  if (!(p >= 1)) throw std::invalid_argument("p must be >= 1 or infinity");
  double acc = 0.0;
  for (int v : s) acc += std::pow(std::abs(f[v]), p) * g.vertex_weight(v);
  return std::pow(acc, 1.0 / p);
}

double weighted_gradient_norm(const WeightedGraph& g, const Signal& f,
                              double p) {
  require_signal(g, f);
  if (is_infinite_p(p)) {
    double m = 0.0;
    for (const Edge& e : g.edges()) m = std::max(m, std::abs(f[e.u] - f[e.v]));
    return m;
  }
  if (!(p >= 1)) throw std::invalid_argument("p must be >= 1 or infinity");
  double acc = 0.0;
  for (const Edge& e : g.edges())
    acc += std::pow(std::abs(f[e.u] - f[e.v]), p) * e.w;
  return std::pow(2.0 * acc, 1.0 / p);  // ordered pairs count each edge twice
}

Signal apply_laplacian(const WeightedGraph& g, const Signal& f) {
  require_signal(g, f);
  Signal out(g.size());
  for (int v = 0; v < g.size(); ++v) {
    double acc = g.degree(v) * f[v];
    for (const auto& [u, w] : g.neighbors(v)) acc -= w * f[u];
    out[v] = acc;
  }
  return out;
}

double laplacian_quadratic_form(const WeightedGraph& g, const Signal& f) {
  require_signal(g, f);
  double acc = 0.0;
  for (const Edge& e : g.edges()) {
    const double d = f[e.u] - f[e.v];
    acc += e.w * d * d;
  }
  return acc;
}

Eigen::MatrixXd laplacian_matrix(const WeightedGraph& g) {
  const int n = g.size();
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (const Edge& e : g.edges()) {
    m(e.u, e.u) += e.w;
    m(e.v, e.v) += e.w;
    m(e.u, e.v) -= e.w;
    m(e.v, e.u) -= e.w;
  }
  return m;
}

VertexSet make_vertex_set(std::vector<int> indices, int graph_size) {
  std::sort(indices.begin(), indices.end());
  indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
  if (!indices.empty() && (indices.front() < 0 || indices.back() >= graph_size))
    throw std::invalid_argument("vertex index out of range");
  return indices;
}

VertexSet complement(const WeightedGraph& g, const VertexSet& s) {
  const auto mask = membership_mask(g.size(), s);
  VertexSet out;
  out.reserve(g.size() - s.size());
  for (int i = 0; i < g.size(); ++i)
    if (!mask[i]) out.push_back(i);
  return out;
}

std::vector<char> membership_mask(int graph_size, const VertexSet& s) {
  std::vector<char> mask(graph_size, 0);
  for (int v : s) {
    if (v < 0 || v >= graph_size)
      throw std::invalid_argument("vertex index out of range");
    mask[v] = 1;
  }
  return mask;
}

Signal restrict_signal(const Signal& f, const VertexSet& s) {
  Signal out = Signal::Zero(f.size());
  for (int v : s) out[v] = f[v];
  return out;
}

}  // namespace graphpw
