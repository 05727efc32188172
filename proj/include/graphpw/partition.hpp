#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "graphpw/graph.hpp"

namespace graphpw {

/// One verified inequality, normalized so the claim is `lhs <= rhs`.
struct VerificationRecord {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;  // rhs - lhs
  bool passed = false;
  nlohmann::json constants = nlohmann::json::object();
};

void to_json(nlohmann::json& j, const VerificationRecord& r);

/// Makes a record for `lhs <= rhs` with the shared relative slack tolerance.
VerificationRecord make_record(std::string name, double lhs, double rhs,
                               nlohmann::json constants);

/// Ordered shells S_0..S_n that are pairwise disjoint, non-empty, and cover
/// the whole vertex set.
struct Partition {
  std::vector<VertexSet> shells;
  int length() const { return static_cast<int>(shells.size()) - 1; }
  const VertexSet& initial_set() const { return shells.front(); }
};

/// Like Partition but the union may be a proper subset of the vertices.
struct SubsetChain {
  std::vector<VertexSet> shells;
  int length() const { return static_cast<int>(shells.size()) - 1; }
  const VertexSet& initial_set() const { return shells.front(); }
};

Partition make_partition(const WeightedGraph& g, std::vector<VertexSet> shells);
SubsetChain make_chain(const WeightedGraph& g, std::vector<VertexSet> shells);

/// Shells grown from `s0` by repeated closure: S_m is the set of vertices
/// joined to the previous closure by a positive-weight edge. Fails when some
/// vertex is unreachable from s0.
Partition build_closure_partition(const WeightedGraph& g, const VertexSet& s0);

/// Per-shell constants of a partition at exponent p:
///   D_m = sup_{v in S_m} w_{S_{m+1}}(v) / nu(v)
///   K_m = inf_{v in S_{m+1}} w_{S_m}(v) / nu(v)
/// together with the gradient coefficient delta and the sample-norm
/// coefficient a of the norm estimate. delta and a are unset when the
/// partition is inadmissible (some K_m = 0).
struct PartitionConstants {
  double p = 2.0;
  std::vector<double> D;
  std::vector<double> K;
  std::optional<double> delta;
  std::optional<double> a;
  bool admissible = false;
};

/// Outward-oriented constants of a chain:
///   Khat_m = inf_{v in S_m} w_{S_{m+1}}(v) / nu(v)
///   Dhat_m = sup_{v in S_{m+1}} w_{S_m}(v) / nu(v)
/// delta_hat and a_hat are unset when some Khat_m or Dhat_m vanishes.
struct ChainConstants {
  double p = 2.0;
  std::vector<double> Khat;
  std::vector<double> Dhat;
  std::optional<double> delta_hat;
  std::optional<double> a_hat;
  bool well_defined = false;
};

void to_json(nlohmann::json& j, const PartitionConstants& c);
void to_json(nlohmann::json& j, const ChainConstants& c);

/// Requires 1 <= p < inf; the coefficients are not defined at p = inf.
PartitionConstants partition_constants(const WeightedGraph& g,
                                       const Partition& part, double p);
ChainConstants chain_constants(const WeightedGraph& g, const SubsetChain& chain,
                               double p);

/// Checks ||f||_p,nu <= a ||f|_{S_0}||_p,nu + delta ||grad f||_p.
VerificationRecord poincare_forward_check(const WeightedGraph& g,
                                          const Partition& part,
                                          const Signal& f, double p);

/// For f vanishing on S_0 exactly: ||f|_{V\S_0}||_p,nu <= delta ||grad f||_p
/// for finite p, and <= n ||grad f||_inf at p = inf.
VerificationRecord poincare_zero_on_s0_check(const WeightedGraph& g,
                                             const Partition& part,
                                             const Signal& f, double p);

/// Checks ||f||_p,nu + delta_hat ||grad f||_p >= a_hat ||f|_{S_0}||_p,nu.
/// When f is supported on S_0 and a_hat > 1 the record also carries the
/// equivalent bound ||f|_{S_0}|| <= delta_hat/(a_hat-1) ||grad f||.
VerificationRecord reverse_check(const WeightedGraph& g,
                                 const SubsetChain& chain, const Signal& f,
                                 double p);

/// Per-shell transport estimate at shell m >= 1:
///   ||f_m|| <= (D_{m-1}/K_{m-1})^{1/p} ||f_{m-1}|| + phi_m
/// plus the cumulative form against ||f_0|| and phi_1..phi_m.
struct ShellRecord {
  int m = 0;
  double phi = 0.0;
  double norm_m = 0.0;
  double step_bound = 0.0;
  double cumulative_bound = 0.0;
  double slack_step = 0.0;
  double slack_cumulative = 0.0;
  bool passed = false;
};

void to_json(nlohmann::json& j, const ShellRecord& r);

std::vector<ShellRecord> shell_estimate_check(const WeightedGraph& g,
                                              const Partition& part,
                                              const Signal& f, double p);

}  // namespace graphpw
