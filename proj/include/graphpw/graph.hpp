#pragma once

#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <Eigen/Core>

namespace graphpw {

/// Real-valued function on the vertex set, indexed by the owning graph's
/// vertex order.
using Signal = Eigen::VectorXd;

/// Sorted list of distinct dense vertex indices.
using VertexSet = std::vector<int>;

struct Edge {
  int u;  // canonical: u < v
  int v;
  double w;
};

/// Finite undirected graph with symmetric non-negative edge weights and a
/// strictly positive vertex measure. Immutable after construction; vertex
/// indices follow the declaration order of the ids passed in.
class WeightedGraph {
 public:
  /// Validates and canonicalizes the edges (endpoints in range, no self
  /// loops, no duplicate pairs, weights >= 0) and the vertex measure (> 0).
  /// Zero-weight pairs are dropped: an edge is a pair with w != 0.
  WeightedGraph(std::vector<std::string> vertex_ids, std::vector<Edge> edges,
                std::vector<double> vertex_weights);

  int size() const { return static_cast<int>(ids_.size()); }

  const std::string& vertex_id(int i) const { return ids_[i]; }
  const std::vector<std::string>& vertex_ids() const { return ids_; }

  /// Dense index of `id`, or -1 when unknown.
  int index_of(const std::string& id) const;
  /// Dense index of `id`; throws std::invalid_argument when unknown.
  int require_index(const std::string& id) const;

  double vertex_weight(int i) const { return nu_[i]; }
  const std::vector<double>& vertex_weights() const { return nu_; }
  bool has_unit_vertex_weights() const { return unit_nu_; }

  /// d(v) = sum of incident edge weights.
  double degree(int i) const { return degree_[i]; }

  /// Edges with u < v, ordered lexicographically.
  const std::vector<Edge>& edges() const { return edges_; }

  /// Neighbors of i as (index, weight) pairs in ascending index order.
  const std::vector<std::pair<int, double>>& neighbors(int i) const {
    return adj_[i];
  }

  /// w(u, v); 0 when the pair is not an edge.
  double edge_weight(int u, int v) const;

 private:
  std::vector<std::string> ids_;
  std::unordered_map<std::string, int> index_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::pair<int, double>>> adj_;
  std::vector<double> nu_;
  std::vector<double> degree_;
  bool unit_nu_ = true;
};

/// w_A(v) = sum over u in A of w(u, v).
double subset_weight(const WeightedGraph& g, const VertexSet& a, int v);

/// Weighted l^p norm (sum |f(v)|^p nu(v))^{1/p}; p = inf gives max |f(v)|
/// with the measure ignored. Requires p >= 1.
double lp_norm(const WeightedGraph& g, const Signal& f, double p);

/// l^p norm of the restriction of f to `s` (f treated as 0 elsewhere).
double lp_norm_on(const WeightedGraph& g, const Signal& f, const VertexSet& s,
                  double p);

/// Gradient p-norm (sum over ordered vertex pairs |f(u)-f(v)|^p w(u,v))^{1/p};
/// each edge contributes twice. p = inf gives the max edge difference with
/// weights ignored.
double weighted_gradient_norm(const WeightedGraph& g, const Signal& f,
                              double p);

/// (L f)(v) = sum_u (f(v) - f(u)) w(v, u).
Signal apply_laplacian(const WeightedGraph& g, const Signal& f);

/// <f, L f> computed in the stable form sum over edges of w (f(u)-f(v))^2,
/// i.e. half the squared gradient 2-norm.
double laplacian_quadratic_form(const WeightedGraph& g, const Signal& f);

/// Dense symmetric Laplacian matrix.
Eigen::MatrixXd laplacian_matrix(const WeightedGraph& g);

/// Throws std::invalid_argument when f does not match g or has non-finite
/// entries.
void require_signal(const WeightedGraph& g, const Signal& f);

/// Sorts, deduplicates and bounds-checks a set of vertex indices.
VertexSet make_vertex_set(std::vector<int> indices, int graph_size);

VertexSet complement(const WeightedGraph& g, const VertexSet& s);

/// Membership mask over the full vertex range.
std::vector<char> membership_mask(int graph_size, const VertexSet& s);

/// f restricted to s, zero elsewhere.
Signal restrict_signal(const Signal& f, const VertexSet& s);

}  // namespace graphpw
