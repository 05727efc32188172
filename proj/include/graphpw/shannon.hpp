#pragma once

#include <cstdint>

#include <json.hpp>

#include "graphpw/graph.hpp"

namespace graphpw {

/// Closed-form sampling constants for the integer line sampled on the
/// multiples of an odd period k = 2n+1.
struct LineConstants {
  int k = 0;
  int n = 0;
  double delta = 0.0;      // sqrt(n(n+1)/2)
  double a = 0.0;          // sqrt(k)
  double delta_hat = 0.0;  // sqrt(n(n-1)/2)
  double a_hat = 0.0;      // sqrt(k)
};

void to_json(nlohmann::json& j, const LineConstants& c);

/// k must be odd and >= 3. Even periods are not covered by the closed forms;
/// use the generic partition constants on a cycle instead.
LineConstants integer_constants(int k);

/// Laplacian symbol on the line: xi in [0, pi] -> 2 - 2 cos(xi).
double band_map(double xi);

/// Inverse of xi -> sqrt(2 - 2 cos(xi)) on [0, pi]; input in [0, 2].
double band_map_inverse(double s);

/// Unit-weight cycle with its exact spectrum and real Fourier eigenbasis,
/// ordered by ascending eigenvalue.
struct CycleModel {
  WeightedGraph graph;
  Eigen::VectorXd eigenvalues;
  Eigen::MatrixXd basis;  // orthonormal columns matching eigenvalues
};

CycleModel cycle_model(int n_vertices);

struct DemoReport {
  int k = 0;
  double omega = 0.0;  // Fourier bandwidth
  int periods = 0;
  int n_vertices = 0;
  std::uint64_t seed = 0;
  int n_modes = 0;
  bool alias_free = false;

  struct {
    double lhs = 0.0;  // || f|_S ||_2
    double rhs = 0.0;  // || f ||_2 / sqrt(k)
    double error = 0.0;
    bool passed = false;
  } shannon_identity;

  struct {
    bool applicable = false;
    double lower = 0.0;
    double upper = 0.0;
    double observed = 0.0;  // || f|_S || / || f ||
    double slack = 0.0;
    bool passed = false;
  } graph_bounds;

  struct {
    bool applicable = false;
    double ratio = 0.0;
    double cap = 0.0;
    bool passed = false;
  } tightness;

  double eta_estimate = 0.0;  // (k+1)/2 sqrt(2-2cos omega)

  struct {
    double shannon_limit = 0.0;  // pi / k
    double graph_limit = 0.0;    // largest omega the graph criterion accepts
    double factor = 0.0;
  } oversampling;

  bool passed = false;
};

void to_json(nlohmann::json& j, const DemoReport& r);

/// Random bandlimited signal on the cycle C_{k*periods}, sampled on the
/// residue class 0 mod k: verifies the exact subsampling identity when the
/// band is alias-free and evaluates the graph-theoretic sandwich bounds.
/// Requires k odd >= 3 and k*omega <= pi.
DemoReport shannon_demo(int k, double omega, int periods, std::uint64_t seed);

struct TightnessReport {
  int k = 0;
  double omega = 0.0;
  double lower = 0.0;
  double upper = 0.0;
  double ratio = 0.0;
  double cap = 0.0;  // 1 + 2(k+1) sqrt(2-2cos omega)
  double eta_estimate = 0.0;
  bool passed = false;
};

void to_json(nlohmann::json& j, const TightnessReport& r);

/// Requires (k+1) sqrt(2-2cos omega) < 1, the regime where the tightness cap
/// applies.
TightnessReport oversampling_report(int k, double omega);

}  // namespace graphpw
