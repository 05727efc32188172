#pragma once

#include <optional>
#include <vector>

#include <json.hpp>

#include "graphpw/graph.hpp"
#include "graphpw/numeric.hpp"
#include "graphpw/partition.hpp"

namespace graphpw {

/// Full symmetric eigendecomposition of the graph Laplacian, eigenvalues
/// ascending, eigenvector signs canonicalized so output is reproducible.
/// All inner products here and downstream are the plain l2 ones; the vertex
/// measure does not enter the spectral theory.
struct SpectralDecomposition {
  WeightedGraph graph;
  Eigen::VectorXd eigenvalues;
  Eigen::MatrixXd eigenvectors;  // columns, orthonormal

  int size() const { return static_cast<int>(eigenvalues.size()); }
};

/// Dense decomposition; graphs above `dense_limit` vertices are rejected.
SpectralDecomposition decompose(const WeightedGraph& g,
                                int dense_limit = kDefaultDenseLimit);

/// Indices j with lambda_j <= omega (closed threshold, boundary-tolerant).
std::vector<int> pw_indices(const SpectralDecomposition& dec, double omega);

/// Orthogonal projector onto span{u_j : lambda_j <= omega}.
class PWProjector {
 public:
  PWProjector(const SpectralDecomposition& dec, double omega);

  double omega() const { return omega_; }
  int dimension() const { return static_cast<int>(indices_.size()); }
  const std::vector<int>& indices() const { return indices_; }

  Signal apply(const Signal& f) const;

 private:
  Eigen::MatrixXd basis_;  // N x dim
  std::vector<int> indices_;
  double omega_;
};

Signal pw_project(const SpectralDecomposition& dec, const Signal& f,
                  double omega);

/// Largest eigenvalue carrying a non-negligible component of f beyond omega,
/// if any; used to enforce bandlimited preconditions.
std::optional<double> largest_out_of_band(const SpectralDecomposition& dec,
                                          const Signal& f, double omega);

/// For f in PW_omega: checks the gradient/Laplacian identity
/// ||grad f||_2 = sqrt(2) ||L^{1/2} f||_2 and the Bernstein bound
/// ||grad f||_2 <= sqrt(2 omega) ||f||_2.
VerificationRecord bernstein_check(const SpectralDecomposition& dec,
                                   const Signal& f, double omega);

/// Eigenvalues in [lo, hi) or [lo, hi], counted with multiplicity.
/// Boundary decisions use the relative tolerance kBoundaryRelTol: values
/// within tolerance of an endpoint are included, which places a value at the
/// interior boundary of two adjacent counting intervals in the lower one.
int count_eigenvalues(const SpectralDecomposition& dec, double lo, double hi,
                      bool half_open);

/// Smallest eigenvalue of the principal Laplacian submatrix on M; equals the
/// infimum of the Rayleigh quotient over signals supported on M.
double dirichlet_eigenvalue(const WeightedGraph& g, const VertexSet& m);

/// Relations between the partition constants at p = 2 and the spectrum.
struct GeometryReport {
  double delta = 0.0;
  double threshold = 0.0;  // 1/(2 delta^2); +inf when delta = 0
  int initial_set_size = 0;
  int count_below = 0;
  int count_above = 0;
  bool counts_passed = false;

  struct LambdaBound {
    int k = 0;
    double lambda_k = 0.0;
    double bound = 0.0;
    bool passed = false;
    bool applicable = false;
  } lambda_k_bound;

  struct Dirichlet {
    double value = 0.0;
    double bound = 0.0;
    bool passed = false;
    bool applicable = false;
  } dirichlet;

  struct ZeroSetChecks {
    bool applicable = false;
    double omega = 0.0;
    double z1_lhs = 0.0;  // delta
    double z2_lhs = 0.0;  // delta_hat / (a_hat - 1), complement-side chain
    double bound = 0.0;   // 1/sqrt(2 omega)
    bool z1_passed = false;
    bool z2_passed = false;
    bool z2_applicable = false;
  } zero_set;

  bool passed = false;
};

void to_json(nlohmann::json& j, const GeometryReport& r);

/// Builds the report for the partition's initial set. Requires unit vertex
/// weights (the spectral estimates are stated for the unweighted l2 space).
/// When a nonzero signal in PW_omega vanishing on the initial set is given,
/// the zero-set necessary conditions are evaluated as well.
GeometryReport spectral_geometry_report(
    const SpectralDecomposition& dec, const Partition& part,
    const Signal* zero_set_signal = nullptr,
    std::optional<double> omega = std::nullopt);

}  // namespace graphpw
