#pragma once

#include <vector>

namespace tcrf {

// Placement of K intermediate temporal scale levels tau_1 < ... < tau_K = tau_max,
// either uniform (tau_k = k/K tau_max) or logarithmic (tau_k = c^{2(k-K)} tau_max).
enum class DistKind { Uniform, Logarithmic };

struct ScaleDistribution {
  DistKind kind = DistKind::Uniform;
  int K = 1;
  double c = 0.0; // distribution ratio, > 1; only for Logarithmic
  double tau_max = 1.0;

  static ScaleDistribution uniform(int K, double tau_max);
  static ScaleDistribution logarithmic(int K, double c, double tau_max);

  std::vector<double> levels() const;         // tau_1..tau_K
  std::vector<double> time_constants() const; // continuous-theory mu_k
};

std::vector<double> log_scale_levels(int K, double c, double tau_max);
std::vector<double> log_time_constants(int K, double c, double tau_max);
std::vector<double> uniform_time_constants(int K, double tau_max);

// c such that the logarithmic levels place tau_1 = tau_min exactly.
double distribution_param_from_range(double tau_min, double tau_max, int K);

} // namespace tcrf
