#include "graphpw/partition.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "graphpw/numeric.hpp"

namespace graphpw {
namespace {

void check_shells(const WeightedGraph& g, const std::vector<VertexSet>& shells,
                  bool exhaustive) {
  if (shells.empty()) throw std::invalid_argument("no shells given");
  std::vector<char> used(g.size(), 0);
  std::size_t covered = 0;
  for (const VertexSet& s : shells) {
    if (s.empty()) throw std::invalid_argument("empty shell");
    for (int v : s) {
      if (v < 0 || v >= g.size())
        throw std::invalid_argument("vertex index out of range");
      if (used[v])
        throw std::invalid_argument("shells are not pairwise disjoint ('" +
                                    g.vertex_id(v) + "' repeated)");
      used[v] = 1;
    }
    covered += s.size();
  }
  if (exhaustive && covered != static_cast<std::size_t>(g.size())) {
    std::string missing;
    for (int v = 0; v < g.size(); ++v)
      if (!used[v]) missing += (missing.empty() ? "" : ", ") + g.vertex_id(v);
    throw std::invalid_argument("shells do not cover the vertex set (missing " +
                                missing + ")");
  }
}

double finite_p_or_throw(double p) {
  if (is_infinite_p(p))
    throw std::invalid_argument("constants are not defined at p = infinity");
  if (!(p >= 1)) throw std::invalid_argument("p must be >= 1");
  return p;
}

// inf / sup of w_T(v)/nu(v) over v in S.
double cross_inf(const WeightedGraph& g, const VertexSet& s,
                 const std::vector<char>& t_mask) {
  double best = kInf;
  for (int v : s) {
    double w = 0.0;
    for (const auto& [u, ew] : g.neighbors(v))
      if (t_mask[u]) w += ew;
    best = std::min(best, w / g.vertex_weight(v));
  }
  return best;
}

double cross_sup(const WeightedGraph& g, const VertexSet& s,
                 const std::vector<char>& t_mask) {
  double best = 0.0;
  for (int v : s) {
    double w = 0.0;
    for (const auto& [u, ew] : g.neighbors(v))
      if (t_mask[u]) w += ew;
    best = std::max(best, w / g.vertex_weight(v));
  }
  return best;
}

// delta for 1 < p < inf over ratio_m = num_m/den_m, with the inner sum
// weighted by 1/den_k^{q/p}:
//   delta^p = sum_{m=1..n} ( sum_{k=k_lo(m)..m-1+k_off}
//                            den_{k}^{-q/p} (prod_{i=k..m-1} ratio_i)^{q/p}
//                          )^{p/q}
// Shared by the partition form (ratio D/K, inner k from 1, denominators
// K_{k-1}) and the chain form (ratio Khat/Dhat, inner k from 0,
// denominators Khat_k).
double delta_holder(const std::vector<double>& ratio,
                    const std::vector<double>& denom, bool from_zero,
                    double p) {
  const int n = static_cast<int>(ratio.size());
  const double q = p / (p - 1.0);
  const double qp = q / p;
  double acc = 0.0;
  for (int m = 1; m <= n; ++m) {
    double inner = 0.0;
    double prod = 1.0;  // prod_{i=k..m-1} ratio_i, updated as k descends
    if (from_zero) {
      for (int k = m - 1; k >= 0; --k) {
        prod *= ratio[k];
        inner += std::pow(denom[k], -qp) * std::pow(prod, qp);
      }
    } else {
      for (int k = m; k >= 1; --k) {
        inner += std::pow(denom[k - 1], -qp) * std::pow(prod, qp);
        prod *= ratio[k - 1];
      }
    }
    acc += std::pow(inner, p / q);
  }
  return std::pow(acc, 1.0 / p);
}

// p = 1 variant: max_k (1/den) sum_{m=k..n} prod_{i=k..m-1} ratio_i.
double delta_max_form(const std::vector<double>& ratio,
                      const std::vector<double>& denom, bool from_zero) {
  const int n = static_cast<int>(ratio.size());
  double best = 0.0;
  for (int k = from_zero ? 0 : 1; k <= (from_zero ? n - 1 : n); ++k) {
    double sum = 0.0;
    double prod = 1.0;
    for (int m = k; m <= n; ++m) {
      sum += prod;
      if (m < n) prod *= ratio[m];
    }
    best = std::max(best, sum / (from_zero ? denom[k] : denom[k - 1]));
  }
  return best;
}

// a^p = sum_{m=0..n} prod_{j=0..m-1} ratio_j.
double norm_coefficient(const std::vector<double>& ratio, double p) {
  double acc = 0.0;
  double prod = 1.0;
  for (std::size_t m = 0; m <= ratio.size(); ++m) {
    acc += prod;
    if (m < ratio.size()) prod *= ratio[m];
  }
  return std::pow(acc, 1.0 / p);
}

double phi_m(const WeightedGraph& g, const VertexSet& upper,
             const std::vector<char>& lower_mask, const Signal& f, double k_m,
             double p) {
  double acc = 0.0;
  for (int u : upper)
    for (const auto& [v, w] : g.neighbors(u))
      if (lower_mask[v]) acc += std::pow(std::abs(f[u] - f[v]), p) * w;
  return std::pow(acc / k_m, 1.0 / p);
}

}  // namespace

void to_json(nlohmann::json& j, const VerificationRecord& r) {
  j = nlohmann::json{{"name", r.name},     {"lhs", r.lhs},
                     {"rhs", r.rhs},       {"slack", r.slack},
                     {"passed", r.passed}, {"constants", r.constants}};
}

VerificationRecord make_record(std::string name, double lhs, double rhs,
                               nlohmann::json constants) {
  VerificationRecord r;
  r.name = std::move(name);
  r.lhs = lhs;
  r.rhs = rhs;
  r.slack = rhs - lhs;
  r.passed = slack_ok(r.slack, std::max(lhs, rhs));
  r.constants = std::move(constants);
  return r;
}

Partition make_partition(const WeightedGraph& g,
                         std::vector<VertexSet> shells) {
  check_shells(g, shells, /*exhaustive=*/true);
  return Partition{std::move(shells)};
}

SubsetChain make_chain(const WeightedGraph& g, std::vector<VertexSet> shells) {
  check_shells(g, shells, /*exhaustive=*/false);
  return SubsetChain{std::move(shells)};
}

Partition build_closure_partition(const WeightedGraph& g,
                                  const VertexSet& s0) {
  if (s0.empty()) throw std::invalid_argument("initial set is empty");
  std::vector<char> reached = membership_mask(g.size(), s0);
  std::vector<VertexSet> shells{s0};
  std::size_t covered = s0.size();
  while (covered < static_cast<std::size_t>(g.size())) {
    VertexSet boundary;
    for (int v : shells.back())
      for (const auto& [u, w] : g.neighbors(v))
        if (!reached[u] && w > 0) {
          reached[u] = 1;
          boundary.push_back(u);
        }
    if (boundary.empty()) {
      std::string missing;
      for (int v = 0; v < g.size(); ++v)
        if (!reached[v])
          missing += (missing.empty() ? "" : ", ") + g.vertex_id(v);
      throw std::invalid_argument(
          "closure partition cannot cover the vertex set; unreachable: " +
          missing);
    }
    std::sort(boundary.begin(), boundary.end());
    covered += boundary.size();
    shells.push_back(std::move(boundary));
  }
  return Partition{std::move(shells)};
}

PartitionConstants partition_constants(const WeightedGraph& g,
                                       const Partition& part, double p) {
  finite_p_or_throw(p);
  const int n = part.length();
  PartitionConstants out;
  out.p = p;
  out.D.resize(n);
  out.K.resize(n);
  for (int m = 0; m < n; ++m) {
    const auto next_mask = membership_mask(g.size(), part.shells[m + 1]);
    const auto this_mask = membership_mask(g.size(), part.shells[m]);
    out.D[m] = cross_sup(g, part.shells[m], next_mask);
    out.K[m] = cross_inf(g, part.shells[m + 1], this_mask);
  }
  out.admissible =
      std::all_of(out.K.begin(), out.K.end(), [](double k) { return k > 0; });
  if (!out.admissible) return out;

  std::vector<double> ratio(n);
  for (int m = 0; m < n; ++m) ratio[m] = out.D[m] / out.K[m];
  out.a = norm_coefficient(ratio, p);
  if (n == 0)
    out.delta = 0.0;
  else if (p == 1.0)
    out.delta = delta_max_form(ratio, out.K, /*from_zero=*/false);
  else
    out.delta = delta_holder(ratio, out.K, /*from_zero=*/false, p);
  return out;
}

ChainConstants chain_constants(const WeightedGraph& g, const SubsetChain& chain,
                               double p) {
  finite_p_or_throw(p);
  const int n = chain.length();
  ChainConstants out;
  out.p = p;
  out.Khat.resize(n);
  out.Dhat.resize(n);
  for (int m = 0; m < n; ++m) {
    const auto next_mask = membership_mask(g.size(), chain.shells[m + 1]);
    const auto this_mask = membership_mask(g.size(), chain.shells[m]);
    out.Khat[m] = cross_inf(g, chain.shells[m], next_mask);
    out.Dhat[m] = cross_sup(g, chain.shells[m + 1], this_mask);
  }
  out.well_defined =
      std::all_of(out.Khat.begin(), out.Khat.end(),
                  [](double k) { return k > 0; }) &&
      std::all_of(out.Dhat.begin(), out.Dhat.end(),
                  [](double d) { return d > 0; });
  if (!out.well_defined) return out;

  std::vector<double> ratio(n);
  for (int m = 0; m < n; ++m) ratio[m] = out.Khat[m] / out.Dhat[m];
  out.a_hat = norm_coefficient(ratio, p);
  if (n == 0)
    out.delta_hat = 0.0;
  else if (p == 1.0)
    out.delta_hat = delta_max_form(ratio, out.Khat, /*from_zero=*/true);
  else
    out.delta_hat = delta_holder(ratio, out.Khat, /*from_zero=*/true, p);
  return out;
}

void to_json(nlohmann::json& j, const PartitionConstants& c) {
  j = nlohmann::json{{"p", c.p},
                     {"D", c.D},
                     {"K", c.K},
                     {"admissible", c.admissible}};
  j["delta"] = c.delta ? nlohmann::json(*c.delta) : nlohmann::json();
  j["a"] = c.a ? nlohmann::json(*c.a) : nlohmann::json();
}

void to_json(nlohmann::json& j, const ChainConstants& c) {
  j = nlohmann::json{{"p", c.p},
                     {"Khat", c.Khat},
                     {"Dhat", c.Dhat},
                     {"well_defined", c.well_defined}};
  j["delta_hat"] = c.delta_hat ? nlohmann::json(*c.delta_hat)
                               : nlohmann::json();
  j["a_hat"] = c.a_hat ? nlohmann::json(*c.a_hat) : nlohmann::json();
}

VerificationRecord poincare_forward_check(const WeightedGraph& g,
                                          const Partition& part,
                                          const Signal& f, double p) {
  const PartitionConstants c = partition_constants(g, part, p);
  if (!c.admissible)
    throw std::invalid_argument("partition is not admissible (some K_m = 0)");
  const double lhs = lp_norm(g, f, p);
  const double sample_norm = lp_norm_on(g, f, part.initial_set(), p);
  const double grad = weighted_gradient_norm(g, f, p);
  const double rhs = *c.a * sample_norm + *c.delta * grad;
  nlohmann::json extras(c);
  extras["sample_norm"] = sample_norm;
  extras["gradient_norm"] = grad;
  return make_record("poincare_forward", lhs, rhs, std::move(extras));
}

VerificationRecord poincare_zero_on_s0_check(const WeightedGraph& g,
                                             const Partition& part,
                                             const Signal& f, double p) {
  require_signal(g, f);
  for (int v : part.initial_set())
    if (f[v] != 0.0)
      throw std::invalid_argument("signal does not vanish on the initial set");
  const VertexSet rest = complement(g, part.initial_set());
  if (is_infinite_p(p)) {
    const double lhs = lp_norm_on(g, f, rest, p);
    const double n = part.length();
    const double grad = weighted_gradient_norm(g, f, p);
    return make_record("poincare_zero_on_s0_sup", lhs, n * grad,
                       {{"n", part.length()}, {"gradient_norm", grad}});
  }
  const PartitionConstants c = partition_constants(g, part, p);
  if (!c.admissible)
    throw std::invalid_argument("partition is not admissible (some K_m = 0)");
  const double lhs = lp_norm_on(g, f, rest, p);
  const double grad = weighted_gradient_norm(g, f, p);
  nlohmann::json extras(c);
  extras["gradient_norm"] = grad;
  return make_record("poincare_zero_on_s0", lhs, *c.delta * grad,
                     std::move(extras));
}

VerificationRecord reverse_check(const WeightedGraph& g,
                                 const SubsetChain& chain, const Signal& f,
                                 double p) {
  const ChainConstants c = chain_constants(g, chain, p);
  if (!c.well_defined)
    throw std::invalid_argument(
        "chain constants are not well-defined (some Khat_m or Dhat_m = 0)");
  const double full = lp_norm(g, f, p);
  const double grad = weighted_gradient_norm(g, f, p);
  const double sample_norm = lp_norm_on(g, f, chain.initial_set(), p);
  const double big = full + *c.delta_hat * grad;
  const double small = *c.a_hat * sample_norm;
  nlohmann::json extras(c);
  extras["sample_norm"] = sample_norm;
  extras["gradient_norm"] = grad;

  // When f lives on S_0 the estimate rearranges to the support-side bound.
  bool supported_on_s0 = true;
  const auto mask = membership_mask(g.size(), chain.initial_set());
  for (int v = 0; v < g.size(); ++v)
    if (!mask[v] && f[v] != 0.0) supported_on_s0 = false;
  if (supported_on_s0 && *c.a_hat > 1.0) {
    extras["support_bound"] = {
        {"lhs", sample_norm},
        {"rhs", *c.delta_hat / (*c.a_hat - 1.0) * grad}};
  }
  return make_record("reverse_estimate", small, big, std::move(extras));
}

void to_json(nlohmann::json& j, const ShellRecord& r) {
  j = nlohmann::json{{"m", r.m},
                     {"phi", r.phi},
                     {"norm", r.norm_m},
                     {"step_bound", r.step_bound},
                     {"cumulative_bound", r.cumulative_bound},
                     {"slack_step", r.slack_step},
                     {"slack_cumulative", r.slack_cumulative},
                     {"passed", r.passed}};
}

std::vector<ShellRecord> shell_estimate_check(const WeightedGraph& g,
                                              const Partition& part,
                                              const Signal& f, double p) {
  if (is_infinite_p(p))
    throw std::invalid_argument("shell estimates require finite p");
  const PartitionConstants c = partition_constants(g, part, p);
  if (!c.admissible)
    throw std::invalid_argument("partition is not admissible (some K_m = 0)");
  const int n = part.length();
  std::vector<ShellRecord> out;
  out.reserve(n);
  const double norm0 = lp_norm_on(g, f, part.shells[0], p);
  std::vector<double> phis(n + 1, 0.0);
  std::vector<double> norms(n + 1, 0.0);
  norms[0] = norm0;
  for (int m = 1; m <= n; ++m) {
    const auto lower_mask = membership_mask(g.size(), part.shells[m - 1]);
    phis[m] = phi_m(g, part.shells[m], lower_mask, f, c.K[m - 1], p);
    norms[m] = lp_norm_on(g, f, part.shells[m], p);

    ShellRecord rec;
    rec.m = m;
    rec.phi = phis[m];
    rec.norm_m = norms[m];
    rec.step_bound =
        std::pow(c.D[m - 1] / c.K[m - 1], 1.0 / p) * norms[m - 1] + phis[m];

    // cumulative: prod_{j<m} D_j/K_j against ||f_0||, plus transported phis
    double prod = 1.0;
    for (int j = 0; j < m; ++j) prod *= c.D[j] / c.K[j];
    double cumulative = std::pow(prod, 1.0 / p) * norm0;
    for (int j = 1; j <= m; ++j) {
      double tail = 1.0;
      for (int i = j; i < m; ++i) tail *= c.D[i] / c.K[i];
      cumulative += phis[j] * std::pow(tail, 1.0 / p);
    }
    rec.cumulative_bound = cumulative;
    rec.slack_step = rec.step_bound - rec.norm_m;
    rec.slack_cumulative = rec.cumulative_bound - rec.norm_m;
    rec.passed = slack_ok(rec.slack_step, std::max(rec.norm_m, rec.step_bound)) &&
                 slack_ok(rec.slack_cumulative,
                          std::max(rec.norm_m, rec.cumulative_bound));
    out.push_back(std::move(rec));
  }
  return out;
}

}  // namespace graphpw
