#include "tcrf/temporal_kernels.hpp"

#include <algorithm>
#include <cmath>

#include "tcrf/errors.hpp"

namespace tcrf {

namespace {

void check_mu(const std::vector<double>& mu) {
  if (mu.empty()) throw_invalid("time-constant list is empty");
  for (double m : mu)
    if (!std::isfinite(m) || !(m > 0.0))
      throw_invalid("time constants must be positive and finite");
}

void check_order(int order, int lowest) {
  if (order < lowest || order > 2) throw_invalid("derivative order out of range");
}

double factorial(int k) {
  double f = 1.0;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

// Equal-mu closed form t^{K-1} e^{-t/mu} / (mu^K (K-1)!) and its derivatives.
double gamma_kernel(double t, double mu, int K, int order) {
  if (t < 0.0) return 0.0;
  const double norm = std::pow(mu, double(K)) * factorial(K - 1);
  const double e = std::exp(-t / mu) / norm;
  auto tp = [&](int p) {
    return p < 0 ? 0.0 : (p == 0 ? 1.0 : std::pow(t, double(p)));
  };
  const double a = double(K - 1);
  switch (order) {
    case 0:
      return tp(K - 1) * e;
    case 1:
      return (a * tp(K - 2) - tp(K - 1) / mu) * e;
    default:
      return (a * (a - 1.0) * tp(K - 3) - 2.0 * a * tp(K - 2) / mu +
              tp(K - 1) / (mu * mu)) *
             e;
  }
}

std::vector<std::vector<double>> group_sorted(const std::vector<double>& mu_in,
                                              double rel_tol) {
  std::vector<double> mu = mu_in;
  std::sort(mu.begin(), mu.end());
  std::vector<std::vector<double>> groups;
  double anchor = 0.0;
  for (double m : mu) {
    if (groups.empty() || m > anchor * (1.0 + rel_tol)) {
      groups.push_back({m});
      anchor = m;
    } else {
      groups.back().push_back(m);
    }
  }
  return groups;
}

double mean_of(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x;
  return s / double(v.size());
}

// Near-equal lists are evaluated by integrating the chain of first-order
// integrators with classic RK4: the largest group of coincident time
// constants becomes an analytic Gamma-shaped forcing term and every other
// stage becomes one ODE state. This is the same convolution the partial
// fractions would express, without their catastrophic cancellation.
struct MixedPlan {
  double mu0 = 0.0; // forcing scale
  int n0 = 0;       // forcing shape (stage count)
  std::vector<double> ode;
  double h0 = 0.0;  // base RK4 step
};

MixedPlan plan_mixed(const std::vector<double>& mu) {
  auto groups = group_sorted(mu, 1e-12);
  size_t best = 0;
  for (size_t i = 1; i < groups.size(); ++i)
    if (groups[i].size() > groups[best].size()) best = i;
  MixedPlan p;
  p.mu0 = mean_of(groups[best]);
  p.n0 = int(groups[best].size());
  for (size_t i = 0; i < groups.size(); ++i)
    if (i != best)
      p.ode.insert(p.ode.end(), groups[i].begin(), groups[i].end());
  double tau = 0.0;
  for (double m : mu) tau += m * m;
  double mu_min = p.ode.empty() ? p.mu0 : *std::min_element(p.ode.begin(), p.ode.end());
  p.h0 = std::min(std::sqrt(tau) / 2000.0, mu_min / 4.0);
  return p;
}

struct MixedIntegrator {
  MixedPlan plan;
  std::vector<double> y, k1, k2, k3, k4, tmp;
  double x = 0.0;

  explicit MixedIntegrator(MixedPlan p)
      : plan(std::move(p)),
        y(plan.ode.size(), 0.0),
        k1(y), k2(y), k3(y), k4(y), tmp(y) {}

  void deriv(const std::vector<double>& s, double f0, std::vector<double>& d) {
    double prev = f0;
    for (size_t i = 0; i < s.size(); ++i) {
      d[i] = (prev - s[i]) / plan.ode[i];
      prev = s[i];
    }
  }

  void step(double h) {
    const double f_a = gamma_kernel(x, plan.mu0, plan.n0, 0);
    const double f_m = gamma_kernel(x + h / 2.0, plan.mu0, plan.n0, 0);
    const double f_b = gamma_kernel(x + h, plan.mu0, plan.n0, 0);
    deriv(y, f_a, k1);
    for (size_t i = 0; i < y.size(); ++i) tmp[i] = y[i] + h / 2.0 * k1[i];
    deriv(tmp, f_m, k2);
    for (size_t i = 0; i < y.size(); ++i) tmp[i] = y[i] + h / 2.0 * k2[i];
    deriv(tmp, f_m, k3);
    for (size_t i = 0; i < y.size(); ++i) tmp[i] = y[i] + h * k3[i];
    deriv(tmp, f_b, k4);
    for (size_t i = 0; i < y.size(); ++i)
      y[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    x += h;
  }

  void advance_to(double t) {
    if (t <= x) return;
    int n = std::max(1, int(std::ceil((t - x) / plan.h0)));
    double h = (t - x) / n;
    for (int i = 0; i < n; ++i) step(h);
    x = t;
  }

  // Chain the stage equations to read off the last state's derivatives.
  double read(int order) {
    const size_t m = y.size();
    if (m == 0) return gamma_kernel(x, plan.mu0, plan.n0, order);
    if (order == 0) return y[m - 1];
    deriv(y, gamma_kernel(x, plan.mu0, plan.n0, 0), k1);
    if (order == 1) return k1[m - 1];
    double prev = gamma_kernel(x, plan.mu0, plan.n0, 1);
    double dd = 0.0;
    for (size_t i = 0; i < m; ++i) {
      dd = (prev - k1[i]) / plan.ode[i];
      prev = k1[i];
    }
    return dd;
  }
};

double eval_mixed(double t, const std::vector<double>& mu, int order) {
  if (t < 0.0) return 0.0;
  MixedIntegrator integ(plan_mixed(mu));
  integ.advance_to(t);
  return integ.read(order);
}

double eval_any(double t, const std::vector<double>& mu, int order) {
  if (!std::isfinite(t)) throw_invalid("t must be finite");
  switch (classify_cascade(mu)) {
    case CascadeClass::AllEqual:
      return gamma_kernel(t, mean_of(mu), int(mu.size()), order);
    case CascadeClass::AllDistinct:
      return eval_cascade_distinct(t, mu, order);
    default:
      return eval_mixed(t, mu, order);
  }
}

} // namespace

double eval_trunc_exp(double t, double mu) {
  if (!(mu > 0.0) || !std::isfinite(mu)) throw_invalid("mu must be > 0");
  if (t < 0.0) return 0.0;
  return std::exp(-t / mu) / mu;
}

std::complex<double> laplace_cascade(std::complex<double> q,
                                     const std::vector<double>& mu) {
  check_mu(mu);
  std::complex<double> g = 1.0;
  for (double m : mu) {
    std::complex<double> d = 1.0 + m * q;
    if (std::abs(d) < 1e-14)
      throw Error(ErrorKind::PoleEvaluation,
                  "transfer function evaluated at a pole");
    g /= d;
  }
  return g;
}

MeanVariance cascade_mean_variance(const std::vector<double>& mu) {
  check_mu(mu);
  MeanVariance mv{0.0, 0.0};
  for (double m : mu) {
    mv.mean += m;
    mv.variance += m * m;
  }
  return mv;
}

CascadeClass classify_cascade(const std::vector<double>& mu) {
  check_mu(mu);
  if (mu.size() == 1) return CascadeClass::AllEqual;
  if (group_sorted(mu, 1e-12).size() == 1) return CascadeClass::AllEqual;
  auto coarse = group_sorted(mu, 1e-6);
  if (coarse.size() == mu.size()) return CascadeClass::AllDistinct;
  return CascadeClass::Mixed;
}

double eval_cascade(double t, const std::vector<double>& mu) {
  return eval_any(t, mu, 0);
}

double eval_cascade_derivative(double t, const std::vector<double>& mu, int order) {
  check_order(order, 1);
  return eval_any(t, mu, order);
}

double eval_cascade_distinct(double t, const std::vector<double>& mu, int order) {
  check_mu(mu);
  check_order(order, 0);
  if (!std::isfinite(t)) throw_invalid("t must be finite");
  if (t < 0.0) return 0.0;
  const int K = int(mu.size());
  for (int i = 0; i < K; ++i)
    for (int j = i + 1; j < K; ++j)
      if (std::abs(mu[i] - mu[j]) < 1e-9 * std::max(mu[i], mu[j]))
        throw Error(ErrorKind::NumericInstability,
                    "time constants too close for the distinct-pole expansion");
  double total = 0.0;
  for (int k = 0; k < K; ++k) {
    double denom = 1.0;
    for (int j = 0; j < K; ++j)
      if (j != k) denom *= (mu[k] - mu[j]);
    const double b = std::pow(mu[k], double(K - 2)) / denom;
    const double scale = order == 0 ? 1.0 : std::pow(-1.0 / mu[k], double(order));
    total += b * scale * std::exp(-t / mu[k]);
  }
  return total;
}

std::vector<double> sample_cascade(const std::vector<double>& mu, double t_end,
                                   int n, int order) {
  check_mu(mu);
  check_order(order, 0);
  if (n < 2) throw_invalid("need at least two samples");
  if (!(t_end > 0.0) || !std::isfinite(t_end)) throw_invalid("t_end must be > 0");
  std::vector<double> out(n);
  const double dt = t_end / double(n - 1);
  const CascadeClass cls = classify_cascade(mu);
  if (cls == CascadeClass::Mixed) {
    MixedIntegrator integ(plan_mixed(mu));
    for (int i = 0; i < n; ++i) {
      integ.advance_to(i * dt);
      out[i] = integ.read(order);
    }
    return out;
  }
  for (int i = 0; i < n; ++i) out[i] = eval_any(i * dt, mu, order);
  return out;
}

} // namespace tcrf
