#pragma once

#include <complex>
#include <vector>

namespace tcrf {

// Normalized causal kernel (1/mu) e^{-t/mu} for t >= 0, zero before.
double eval_trunc_exp(double t, double mu);

// Transfer function prod_k 1/(1 + mu_k q) of the cascade.
std::complex<double> laplace_cascade(std::complex<double> q,
                                     const std::vector<double>& mu);

struct MeanVariance {
  double mean;
  double variance;
};
MeanVariance cascade_mean_variance(const std::vector<double>& mu);

enum class CascadeClass { AllEqual, AllDistinct, Mixed };

// AllEqual / AllDistinct when every pairwise relative gap is zero / at least
// 1e-6; anything in between routes to the Mixed strategy.
CascadeClass classify_cascade(const std::vector<double>& mu);

// Composed kernel h(t) = (h_1 * ... * h_K)(t) and its time derivatives.
double eval_cascade(double t, const std::vector<double>& mu);
double eval_cascade_derivative(double t, const std::vector<double>& mu, int order);

// The partial-fraction branch on its own. Throws a numeric-instability error
// when two time constants are closer than 1e-9 relative; eval_cascade never
// routes such lists here.
double eval_cascade_distinct(double t, const std::vector<double>& mu, int order = 0);

// h (order 0) or a derivative (order 1|2) sampled at n equispaced points on
// [0, t_end]. A single integration pass serves the near-equal branch, so the
// cost stays linear in n.
std::vector<double> sample_cascade(const std::vector<double>& mu, double t_end,
                                   int n, int order = 0);

} // namespace tcrf
