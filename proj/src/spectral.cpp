#include "graphpw/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace graphpw {
namespace {

void require_unit_measure(const WeightedGraph& g, const char* op) {
  if (!g.has_unit_vertex_weights())
    throw std::invalid_argument(std::string(op) +
                                " requires unit vertex weights");
}

bool below_with_tol(double x, double bound) {
  return x <= bound + kBoundaryRelTol * (1.0 + std::abs(bound));
}

}  // namespace

SpectralDecomposition decompose(const WeightedGraph& g, int dense_limit) {
  if (g.size() > dense_limit)
    throw std::invalid_argument(
        "graph has " + std::to_string(g.size()) +
        " vertices, above the dense eigensolver limit of " +
        std::to_string(dense_limit) +
        "; raise the limit or truncate the graph");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(laplacian_matrix(g));
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("eigendecomposition failed to converge");
  Eigen::MatrixXd vectors = solver.eigenvectors();
  // Canonical sign: largest-magnitude entry (first on ties) positive.
  for (int j = 0; j < vectors.cols(); ++j) {
    int arg = 0;
    double best = 0.0;
    for (int i = 0; i < vectors.rows(); ++i) {
      const double a = std::abs(vectors(i, j));
      if (a > best) {
        best = a;
        arg = i;
      }
    }
    if (vectors(arg, j) < 0) vectors.col(j) = -vectors.col(j);
  }
  return SpectralDecomposition{g, solver.eigenvalues(), std::move(vectors)};
}

std::vector<int> pw_indices(const SpectralDecomposition& dec, double omega) {
  if (!(omega >= 0)) throw std::invalid_argument("omega must be >= 0");
  std::vector<int> out;
  for (int j = 0; j < dec.size(); ++j)
    if (below_with_tol(dec.eigenvalues[j], omega)) out.push_back(j);
  return out;
}

PWProjector::PWProjector(const SpectralDecomposition& dec, double omega)
    : indices_(pw_indices(dec, omega)), omega_(omega) {
  basis_.resize(dec.eigenvectors.rows(), indices_.size());
  for (std::size_t c = 0; c < indices_.size(); ++c)
    basis_.col(c) = dec.eigenvectors.col(indices_[c]);
}

Signal PWProjector::apply(const Signal& f) const {
  if (f.size() != basis_.rows())
    throw std::invalid_argument("signal length does not match vertex count");
  if (basis_.cols() == 0) return Signal::Zero(f.size());
  return basis_ * (basis_.transpose() * f);
}

Signal pw_project(const SpectralDecomposition& dec, const Signal& f,
                  double omega) {
  return PWProjector(dec, omega).apply(f);
}

std::optional<double> largest_out_of_band(const SpectralDecomposition& dec,
                                          const Signal& f, double omega) {
  require_signal(dec.graph, f);
  const Eigen::VectorXd coeff = dec.eigenvectors.transpose() * f;
  const double scale = std::max(1.0, f.norm());
  std::optional<double> worst;
  for (int j = 0; j < dec.size(); ++j) {
    if (below_with_tol(dec.eigenvalues[j], omega)) continue;
    if (std::abs(coeff[j]) > 1e-9 * scale) worst = dec.eigenvalues[j];
  }
  return worst;
}

VerificationRecord bernstein_check(const SpectralDecomposition& dec,
                                   const Signal& f, double omega) {
  if (!(omega >= 0)) throw std::invalid_argument("omega must be >= 0");
  if (auto bad = largest_out_of_band(dec, f, omega))
    throw std::invalid_argument(
        "signal is not bandlimited to omega=" + std::to_string(omega) +
        "; largest violating eigenvalue " + std::to_string(*bad));
  const WeightedGraph& g = dec.graph;
  const double grad = weighted_gradient_norm(g, f, 2.0);
  const double half_power = std::sqrt(laplacian_quadratic_form(g, f));
  const double fnorm = f.norm();
  nlohmann::json extras{{"gradient_norm", grad},
                        {"sqrt2_halfpower", std::sqrt(2.0) * half_power},
                        {"identity_error",
                         std::abs(grad - std::sqrt(2.0) * half_power)},
                        {"omega", omega}};
  auto rec = make_record("bernstein", grad,
                         std::sqrt(2.0 * omega) * fnorm, std::move(extras));
  // The estimate only holds together with the gradient identity.
  rec.passed = rec.passed &&
               std::abs(grad - std::sqrt(2.0) * half_power) <=
                   1e-8 * std::max(1.0, grad);
  return rec;
}

int count_eigenvalues(const SpectralDecomposition& dec, double lo, double hi,
                      bool half_open) {
  if (!(lo <= hi)) throw std::invalid_argument("interval bounds out of order");
  int count = 0;
  for (int j = 0; j < dec.size(); ++j) {
    const double lambda = dec.eigenvalues[j];
    const bool above_lo =
        lambda >= lo - kBoundaryRelTol * (1.0 + std::abs(lo));
    const bool below_hi = half_open
                              ? lambda < hi + kBoundaryRelTol * (1.0 + std::abs(hi))
                              : below_with_tol(lambda, hi);
    if (above_lo && below_hi) ++count;
  }
  return count;
}

double dirichlet_eigenvalue(const WeightedGraph& g, const VertexSet& m) {
  if (m.empty()) throw std::invalid_argument("empty vertex set");
  const Eigen::MatrixXd full = laplacian_matrix(g);
  Eigen::MatrixXd sub(m.size(), m.size());
  for (std::size_t r = 0; r < m.size(); ++r)
    for (std::size_t c = 0; c < m.size(); ++c) sub(r, c) = full(m[r], m[c]);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(sub);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("eigendecomposition failed to converge");
  return solver.eigenvalues()[0];
}

void to_json(nlohmann::json& j, const GeometryReport& r) {
  j = nlohmann::json{
      {"delta", r.delta},
      {"threshold", std::isinf(r.threshold) ? nlohmann::json("inf")
                                            : nlohmann::json(r.threshold)},
      {"initial_set_size", r.initial_set_size},
      {"counts",
       {{"below", r.count_below},
        {"above", r.count_above},
        {"passed", r.counts_passed}}},
      {"lambda_k_bound",
       {{"k", r.lambda_k_bound.k},
        {"lambda_k", r.lambda_k_bound.lambda_k},
        {"bound", r.lambda_k_bound.bound},
        {"passed", r.lambda_k_bound.passed},
        {"applicable", r.lambda_k_bound.applicable}}},
      {"dirichlet",
       {{"value", r.dirichlet.value},
        {"bound", r.dirichlet.bound},
        {"passed", r.dirichlet.passed},
        {"applicable", r.dirichlet.applicable}}},
      {"passed", r.passed}};
  nlohmann::json z{{"applicable", r.zero_set.applicable}};
  if (r.zero_set.applicable) {
    z["omega"] = r.zero_set.omega;
    z["bound"] = r.zero_set.bound;
    z["z1"] = {{"lhs", r.zero_set.z1_lhs}, {"passed", r.zero_set.z1_passed}};
    z["z2"] = {{"lhs", r.zero_set.z2_lhs},
               {"passed", r.zero_set.z2_passed},
               {"applicable", r.zero_set.z2_applicable}};
  }
  j["zero_set_checks"] = std::move(z);
}

GeometryReport spectral_geometry_report(const SpectralDecomposition& dec,
                                        const Partition& part,
                                        const Signal* zero_set_signal,
                                        std::optional<double> omega) {
  const WeightedGraph& g = dec.graph;
  require_unit_measure(g, "spectral_geometry_report");
  const PartitionConstants c = partition_constants(g, part, 2.0);
  if (!c.admissible)
    throw std::invalid_argument("partition is not admissible (some K_m = 0)");

  GeometryReport rep;
  rep.delta = *c.delta;
  rep.threshold = rep.delta == 0.0 ? kInf : 1.0 / (2.0 * rep.delta * rep.delta);
  const int n_vertices = g.size();
  const int s0_size = static_cast<int>(part.initial_set().size());
  rep.initial_set_size = s0_size;

  if (std::isinf(rep.threshold)) {
    rep.count_below = n_vertices;
    rep.count_above = 0;
  } else {
    rep.count_below = count_eigenvalues(dec, 0.0, rep.threshold, true);
    rep.count_above = count_eigenvalues(
        dec, rep.threshold, dec.eigenvalues[n_vertices - 1], false);
  }
  rep.counts_passed = rep.count_below <= s0_size &&
                      rep.count_above >= n_vertices - s0_size;

  rep.lambda_k_bound.k = s0_size;
  rep.lambda_k_bound.applicable =
      s0_size < n_vertices && !std::isinf(rep.threshold);
  if (rep.lambda_k_bound.applicable) {
    rep.lambda_k_bound.lambda_k = dec.eigenvalues[s0_size];
    rep.lambda_k_bound.bound = rep.threshold;
    rep.lambda_k_bound.passed =
        slack_ok(rep.lambda_k_bound.lambda_k - rep.threshold, rep.threshold);
  } else {
    rep.lambda_k_bound.passed = true;
  }

  const VertexSet rest = complement(g, part.initial_set());
  rep.dirichlet.applicable = !rest.empty() && !std::isinf(rep.threshold);
  if (rep.dirichlet.applicable) {
    rep.dirichlet.value = dirichlet_eigenvalue(g, rest);
    rep.dirichlet.bound = rep.threshold;
    rep.dirichlet.passed =
        slack_ok(rep.dirichlet.value - rep.dirichlet.bound, rep.dirichlet.bound);
  } else {
    rep.dirichlet.passed = true;
  }

  if (zero_set_signal) {
    if (!omega)
      throw std::invalid_argument("zero-set checks need the signal bandwidth");
    const Signal& f = *zero_set_signal;
    require_signal(g, f);
    const double fnorm = f.norm();
    if (!(fnorm > 0)) throw std::invalid_argument("zero-set signal is zero");
    if (!(*omega > 0)) throw std::invalid_argument("omega must be positive");
    if (auto bad = largest_out_of_band(dec, f, *omega))
      throw std::invalid_argument(
          "zero-set signal is not bandlimited to omega; largest violating "
          "eigenvalue " +
          std::to_string(*bad));
    for (int v : part.initial_set())
      if (std::abs(f[v]) > 1e-9 * fnorm)
        throw std::invalid_argument(
            "zero-set signal does not vanish on the initial set");

    auto& z = rep.zero_set;
    z.applicable = true;
    z.omega = *omega;
    z.bound = 1.0 / std::sqrt(2.0 * *omega);
    z.z1_lhs = rep.delta;
    z.z1_passed = slack_ok(z.z1_lhs - z.bound, z.bound);

    // The support-side bound lives on the complement: two-set chain
    // (V \ S_0, S_0), when its constants exist.
    if (!rest.empty()) {
      const SubsetChain side = make_chain(g, {rest, part.initial_set()});
      const ChainConstants cc = chain_constants(g, side, 2.0);
      if (cc.well_defined && *cc.a_hat > 1.0) {
        z.z2_applicable = true;
        z.z2_lhs = *cc.delta_hat / (*cc.a_hat - 1.0);
        z.z2_passed = slack_ok(z.z2_lhs - z.bound, z.bound);
      }
    }
    if (!z.z2_applicable) z.z2_passed = true;
  }

  rep.passed = rep.counts_passed && rep.lambda_k_bound.passed &&
               rep.dirichlet.passed &&
               (!rep.zero_set.applicable ||
                (rep.zero_set.z1_passed && rep.zero_set.z2_passed));
  return rep;
}

}  // namespace graphpw
