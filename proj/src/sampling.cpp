#include "graphpw/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "graphpw/numeric.hpp"

namespace graphpw {
namespace {

void require_unit_measure(const WeightedGraph& g, const char* op) {
  if (!g.has_unit_vertex_weights())
    throw std::invalid_argument(std::string(op) +
                                " requires unit vertex weights");
}

void require_same_initial_set(const VertexSet& a, const VertexSet& b) {
  if (a != b)
    throw std::invalid_argument(
        "partition and chain must share the initial set");
}

}  // namespace

void to_json(nlohmann::json& j, const FrameBounds& b) {
  j = nlohmann::json{{"A", b.lower},
                     {"B", b.upper},
                     {"eta", b.eta},
                     {"relaxation_max", b.relaxation_max},
                     {"omega", b.omega},
                     {"K0", b.K0},
                     {"D0", b.D0},
                     {"K0_hat", b.K0_hat},
                     {"D0_hat", b.D0_hat}};
}

FrameBounds frame_bounds(double K0, double D0, double K0_hat, double D0_hat,
                         double omega) {
  if (!(K0 >= 0) || !(D0 >= 0))
    throw std::invalid_argument("K0 and D0 must be non-negative");
  if (!(K0_hat > 0) || !(D0_hat > 0))
    throw std::invalid_argument("K0_hat and D0_hat must be positive");
  if (!(omega >= 0)) throw std::invalid_argument("omega must be >= 0");
  if (!(omega < K0 / 2.0))
    throw std::invalid_argument(
        "uniqueness condition violated: need omega < K0/2 (omega=" +
        std::to_string(omega) + ", K0/2=" + std::to_string(K0 / 2.0) + ")");
  FrameBounds b;
  b.omega = omega;
  b.K0 = K0;
  b.D0 = D0;
  b.K0_hat = K0_hat;
  b.D0_hat = D0_hat;
  const double eps = std::sqrt(2.0 * omega);
  const double lo = 1.0 - eps / std::sqrt(K0);
  const double hi = 1.0 + eps / std::sqrt(D0_hat);
  b.lower = lo * lo / (1.0 + D0 / K0);
  b.upper = hi * hi / (1.0 + K0_hat / D0_hat);
  if (b.lower > b.upper)
    throw std::invalid_argument(
        "inconsistent constants: lower frame bound exceeds upper");
  b.eta = (b.upper - b.lower) / (b.lower + b.upper);
  b.relaxation_max = 2.0 / b.upper;
  return b;
}

FrameBounds two_set_frame_bounds(const WeightedGraph& g, const VertexSet& s0,
                                 double omega) {
  if (s0.empty()) throw std::invalid_argument("initial set is empty");
  const VertexSet rest = complement(g, s0);
  if (rest.empty())
    throw std::invalid_argument(
        "initial set covers the whole graph; the two-set split is empty");
  const Partition part = make_partition(g, {s0, rest});
  const SubsetChain chain = make_chain(g, {s0, rest});
  const PartitionConstants pc = partition_constants(g, part, 2.0);
  const ChainConstants cc = chain_constants(g, chain, 2.0);
  if (!cc.well_defined)
    throw std::invalid_argument(
        "two-set chain constants are not well-defined for this initial set");
  return frame_bounds(pc.K[0], pc.D[0], cc.Khat[0], cc.Dhat[0], omega);
}

std::map<int, Signal> sampling_frame_vectors(const SpectralDecomposition& dec,
                                             double omega,
                                             const VertexSet& s0) {
  membership_mask(dec.graph.size(), s0);  // bounds check
  const PWProjector proj(dec, omega);
  std::map<int, Signal> out;
  for (int v : s0) {
    Signal delta = Signal::Zero(dec.graph.size());
    delta[v] = 1.0;
    out.emplace(v, proj.apply(delta));
  }
  return out;
}

void to_json(nlohmann::json& j, const SamplingCheckRecord& r) {
  j = nlohmann::json{{"epsilon", r.epsilon},
                     {"lower_factor", r.lower_factor},
                     {"upper_factor", r.upper_factor},
                     {"signal_norm", r.signal_norm},
                     {"restriction_norm", r.restriction_norm},
                     {"frame_sum", r.frame_sum},
                     {"norm_form_passed", r.norm_form_passed},
                     {"frame_form_passed", r.frame_form_passed},
                     {"passed", r.passed},
                     {"constants", r.constants}};
}

SamplingCheckRecord plancherel_polya_check(const SpectralDecomposition& dec,
                                           double omega, const Partition& part,
                                           const SubsetChain& chain,
                                           const Signal& f) {
  const WeightedGraph& g = dec.graph;
  require_unit_measure(g, "plancherel_polya_check");
  require_same_initial_set(part.initial_set(), chain.initial_set());
  const PartitionConstants pc = partition_constants(g, part, 2.0);
  const ChainConstants cc = chain_constants(g, chain, 2.0);
  if (!pc.admissible)
    throw std::invalid_argument("partition is not admissible (some K_m = 0)");
  if (!cc.well_defined)
    throw std::invalid_argument(
        "chain constants are not well-defined (some Khat_m or Dhat_m = 0)");
  if (auto bad = largest_out_of_band(dec, f, omega))
    throw std::invalid_argument(
        "signal is not bandlimited to omega; largest violating eigenvalue " +
        std::to_string(*bad));

  SamplingCheckRecord rec;
  rec.epsilon = std::sqrt(2.0 * omega);
  if (!(rec.epsilon * *pc.delta < 1.0))
    throw std::invalid_argument(
        "sampling density insufficient: eps*delta = " +
        std::to_string(rec.epsilon * *pc.delta) + " >= 1");
  rec.lower_factor = (1.0 - rec.epsilon * *pc.delta) / *pc.a;
  rec.upper_factor = (1.0 + rec.epsilon * *cc.delta_hat) / *cc.a_hat;
  rec.signal_norm = f.norm();
  rec.restriction_norm = lp_norm_on(g, f, part.initial_set(), 2.0);

  const auto thetas = sampling_frame_vectors(dec, omega, part.initial_set());
  double frame_sum = 0.0;
  for (const auto& [v, theta] : thetas) {
    const double coeff = theta.dot(f);
    frame_sum += coeff * coeff;
  }
  rec.frame_sum = frame_sum;

  const double lo = rec.lower_factor * rec.signal_norm;
  const double hi = rec.upper_factor * rec.signal_norm;
  rec.norm_form_passed = slack_ok(rec.restriction_norm - lo, hi) &&
                         slack_ok(hi - rec.restriction_norm, hi);
  rec.frame_form_passed = slack_ok(frame_sum - lo * lo, hi * hi) &&
                          slack_ok(hi * hi - frame_sum, hi * hi);
  rec.passed = rec.norm_form_passed && rec.frame_form_passed;
  rec.constants = {{"partition", pc}, {"chain", cc}, {"omega", omega}};
  return rec;
}

void to_json(nlohmann::json& j, const ReconstructionTrace& t) {
  j = nlohmann::json{{"bounds",
                      {{"A", t.bounds.lower},
                       {"B", t.bounds.upper},
                       {"eta", t.bounds.eta}}},
                     {"errors", t.errors},
                     {"error_kind", t.error_kind},
                     {"iterations", t.iterations_used},
                     {"converged", t.converged},
                     {"relaxation", t.relaxation}};
}

ReconstructionTrace frame_reconstruct(const SpectralDecomposition& dec,
                                      double omega, const VertexSet& s0,
                                      const std::map<int, double>& samples,
                                      std::optional<double> relaxation,
                                      double tol, int max_iter,
                                      const Signal* reference) {
  const WeightedGraph& g = dec.graph;
  require_unit_measure(g, "frame_reconstruct");
  if (max_iter < 1) throw std::invalid_argument("max_iter must be >= 1");
  if (!(tol >= 0)) throw std::invalid_argument("tol must be >= 0");
  for (int v : s0)
    if (!samples.count(v))
      throw std::invalid_argument("samples do not cover the initial set ('" +
                                  g.vertex_id(v) + "' missing)");
  for (const auto& [v, value] : samples) {
    if (std::find(s0.begin(), s0.end(), v) == s0.end())
      throw std::invalid_argument("sample at '" + g.vertex_id(v) +
                                  "' is outside the initial set");
    if (!std::isfinite(value))
      throw std::invalid_argument("non-finite sample value");
  }
  if (reference) require_signal(g, *reference);

  ReconstructionTrace trace;
  trace.bounds = two_set_frame_bounds(g, s0, omega);
  trace.relaxation = relaxation.value_or(1.0 / trace.bounds.upper);
  if (!(trace.relaxation > 0) ||
      !(trace.relaxation < trace.bounds.relaxation_max))
    throw std::invalid_argument(
        "relaxation must lie in (0, 2/B) = (0, " +
        std::to_string(trace.bounds.relaxation_max) + ")");
  trace.error_kind = reference ? "true" : "residual";

  const auto thetas = sampling_frame_vectors(dec, omega, s0);
  Signal current = Signal::Zero(g.size());
  for (int iter = 1; iter <= max_iter; ++iter) {
    Signal update = Signal::Zero(g.size());
    for (const auto& [v, theta] : thetas)
      update += (samples.at(v) - current[v]) * theta;
    const Signal next = current + trace.relaxation * update;

    const double change = (next - current).norm();
    current = next;
    trace.iterations_used = iter;
    if (reference) {
      trace.errors.push_back((*reference - current).norm());
    } else {
      double residual = 0.0;
      for (int v : s0) {
        const double d = samples.at(v) - current[v];
        residual += d * d;
      }
      trace.errors.push_back(std::sqrt(residual));
    }
    if (change < tol) {
      trace.converged = true;
      break;
    }
  }
  trace.final = std::move(current);
  return trace;
}

}  // namespace graphpw
