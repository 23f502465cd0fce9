#include "tcrf/scale_distribution.hpp"

#include <cmath>

#include "tcrf/errors.hpp"

namespace tcrf {

namespace {

void check_params(int K, double tau_max) {
  if (K < 1) throw_invalid("K must be >= 1");
  if (!(tau_max > 0.0)) throw_invalid("tau_max must be > 0");
}

void check_ratio(double c) {
  if (!(c > 1.0)) throw_invalid("distribution ratio c must be > 1");
}

} // namespace

ScaleDistribution ScaleDistribution::uniform(int K, double tau_max) {
  check_params(K, tau_max);
  return {DistKind::Uniform, K, 0.0, tau_max};
}

ScaleDistribution ScaleDistribution::logarithmic(int K, double c, double tau_max) {
  check_params(K, tau_max);
  check_ratio(c);
  return {DistKind::Logarithmic, K, c, tau_max};
}

std::vector<double> ScaleDistribution::levels() const {
  if (kind == DistKind::Logarithmic) return log_scale_levels(K, c, tau_max);
  check_params(K, tau_max);
  std::vector<double> out(K);
  for (int k = 1; k <= K; ++k) out[k - 1] = double(k) / K * tau_max;
  return out;
}

std::vector<double> ScaleDistribution::time_constants() const {
  if (kind == DistKind::Logarithmic) return log_time_constants(K, c, tau_max);
  return uniform_time_constants(K, tau_max);
}

std::vector<double> log_scale_levels(int K, double c, double tau_max) {
  check_params(K, tau_max);
  check_ratio(c);
  std::vector<double> out(K);
  for (int k = 1; k <= K; ++k) out[k - 1] = std::pow(c, 2.0 * (k - K)) * tau_max;
  return out;
}

std::vector<double> log_time_constants(int K, double c, double tau_max) {
  check_params(K, tau_max);
  check_ratio(c);
  const double root = std::sqrt(tau_max);
  std::vector<double> mu(K);
  mu[0] = std::pow(c, 1.0 - K) * root;
  const double gap = std::sqrt(c * c - 1.0);
  for (int k = 2; k <= K; ++k) mu[k - 1] = std::pow(c, double(k - K - 1)) * gap * root;
  return mu;
}

std::vector<double> uniform_time_constants(int K, double tau_max) {
  check_params(K, tau_max);
  return std::vector<double>(K, std::sqrt(tau_max / K));
}

double distribution_param_from_range(double tau_min, double tau_max, int K) {
  if (K < 2) throw_invalid("K must be >= 2 to span a scale range");
  if (!(tau_min > 0.0) || !(tau_min < tau_max))
    throw_invalid("need 0 < tau_min < tau_max");
  return std::pow(tau_max / tau_min, 1.0 / (2.0 * (K - 1)));
}

} // namespace tcrf
