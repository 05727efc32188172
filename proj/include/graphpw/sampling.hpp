#pragma once

#include <map>
#include <optional>
#include <vector>

#include <json.hpp>

#include "graphpw/partition.hpp"
#include "graphpw/spectral.hpp"

namespace graphpw {

/// Frame bounds for sampling a bandlimited space on an initial set, derived
/// from the two-set constants:
///   A = (1 - sqrt(2 omega / K0))^2 / (1 + D0/K0)
///   B = (1 + sqrt(2 omega / D0_hat))^2 / (1 + K0_hat/D0_hat)
/// Requires the uniqueness condition omega < K0/2.
struct FrameBounds {
  double lower = 0.0;  // A
  double upper = 0.0;  // B
  double eta = 0.0;    // (B - A) / (A + B)
  double relaxation_max = 0.0;  // 2 / B
  double omega = 0.0;
  double K0 = 0.0;
  double D0 = 0.0;
  double K0_hat = 0.0;
  double D0_hat = 0.0;
};

void to_json(nlohmann::json& j, const FrameBounds& b);

FrameBounds frame_bounds(double K0, double D0, double K0_hat, double D0_hat,
                         double omega);

/// Constants of the default split (S_0, V \ S_0) fed into frame_bounds.
FrameBounds two_set_frame_bounds(const WeightedGraph& g, const VertexSet& s0,
                                 double omega);

/// theta_v: orthogonal projections of the vertex indicators onto PW_omega.
std::map<int, Signal> sampling_frame_vectors(const SpectralDecomposition& dec,
                                             double omega, const VertexSet& s0);

/// Norm-equivalence record: lower <= observed <= upper for both the
/// restriction norm and the frame-vector sum route.
struct SamplingCheckRecord {
  double epsilon = 0.0;      // sqrt(2 omega)
  double lower_factor = 0.0; // (1 - eps delta)/a
  double upper_factor = 0.0; // (1 + eps delta_hat)/a_hat
  double signal_norm = 0.0;
  double restriction_norm = 0.0;
  double frame_sum = 0.0;  // sum_v <f, theta_v>^2
  bool norm_form_passed = false;
  bool frame_form_passed = false;
  bool passed = false;
  nlohmann::json constants = nlohmann::json::object();
};

void to_json(nlohmann::json& j, const SamplingCheckRecord& r);

/// Verifies the sampling norm equivalence for f in PW_omega, using the
/// partition for the lower bound and the chain for the upper one. Both must
/// share the initial set, eps*delta must be < 1, and the graph must carry
/// unit vertex weights.
SamplingCheckRecord plancherel_polya_check(const SpectralDecomposition& dec,
                                           double omega, const Partition& part,
                                           const SubsetChain& chain,
                                           const Signal& f);

struct ReconstructionTrace {
  FrameBounds bounds;
  std::vector<double> errors;  // per iteration; see error_kind
  std::string error_kind;      // "true" or "residual"
  Signal final;
  int iterations_used = 0;
  bool converged = false;
  double relaxation = 0.0;
};

void to_json(nlohmann::json& j, const ReconstructionTrace& t);

/// Relaxed frame iteration g_n = g_{n-1} + relax * sum_v (s_v - g_{n-1}(v))
/// theta_v from samples on s0, starting at zero. Stops when the iterate
/// change drops below tol or after max_iter steps. `relaxation` defaults to
/// 1/B; it must lie in (0, 2/B). When `reference` is given the error series
/// holds true errors ||reference - g_n||_2, otherwise residuals on s0.
ReconstructionTrace frame_reconstruct(
    const SpectralDecomposition& dec, double omega, const VertexSet& s0,
    const std::map<int, double>& samples,
    std::optional<double> relaxation = std::nullopt, double tol = 1e-10,
    int max_iter = 10000, const Signal* reference = nullptr);

}  // namespace graphpw
