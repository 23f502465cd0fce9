#include "tcrf/delay_analysis.hpp"

#include <cmath>
#include <cstdio>

#include "tcrf/errors.hpp"
#include "tcrf/scale_distribution.hpp"
#include "tcrf/temporal_kernels.hpp"

namespace tcrf {

namespace {

void check_k_tau(int K, double tau, int min_k) {
  if (K < min_k) throw_invalid("K out of range");
  if (!(tau > 0.0)) throw_invalid("tau must be > 0");
}

std::string round3(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", std::round(v * 1000.0) / 1000.0);
  return buf;
}

} // namespace

double mean_delay_uniform(int K, double tau) {
  check_k_tau(K, tau, 1);
  return std::sqrt(double(K) * tau);
}

double mean_delay_log(int K, double c, double tau) {
  check_k_tau(K, tau, 2);
  if (!(c > 1.0)) throw_invalid("c must be > 1");
  const double g = std::sqrt(c * c - 1.0);
  return std::pow(c, -double(K)) *
         (c * c - (g + 1.0) * c + g * std::pow(c, double(K))) / (c - 1.0) *
         std::sqrt(tau);
}

double mean_delay_log_limit(double c, double tau) {
  if (!(c > 1.0)) throw_invalid("c must be > 1");
  if (!(tau > 0.0)) throw_invalid("tau must be > 0");
  return std::sqrt(c * c - 1.0) / (c - 1.0) * std::sqrt(tau);
}

double tmax_uniform(int K, double tau) {
  check_k_tau(K, tau, 1);
  return double(K - 1) / std::sqrt(double(K)) * std::sqrt(tau);
}

double tmax_numeric(const std::vector<double>& mu) {
  const auto mv = cascade_mean_variance(mu);
  if (mu.size() == 1) return 0.0;
  double a = 0.0, b = mv.mean;
  const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
  const double tol = 1e-6 * std::sqrt(mv.variance);
  double c1 = b - gr * (b - a), c2 = a + gr * (b - a);
  double f1 = eval_cascade(c1, mu), f2 = eval_cascade(c2, mu);
  while (b - a > tol) {
    if (f1 < f2) {
      a = c1;
      c1 = c2;
      f1 = f2;
      c2 = a + gr * (b - a);
      f2 = eval_cascade(c2, mu);
    } else {
      b = c2;
      c2 = c1;
      f2 = f1;
      c1 = b - gr * (b - a);
      f1 = eval_cascade(c1, mu);
    }
  }
  return (a + b) / 2.0;
}

DelayTables render_delay_tables(const std::vector<int>& K_range,
                                const std::vector<double>& c_list) {
  DelayTables t;
  t.K = K_range;
  t.c = c_list;
  for (int K : K_range) {
    std::vector<double> mean_row{mean_delay_uniform(K, 1.0)};
    std::vector<double> tmax_row{tmax_uniform(K, 1.0)};
    for (double c : c_list) {
      mean_row.push_back(mean_delay_log(K, c, 1.0));
      tmax_row.push_back(tmax_numeric(log_time_constants(K, c, 1.0)));
    }
    t.mean.push_back(std::move(mean_row));
    t.tmax.push_back(std::move(tmax_row));
  }
  return t;
}

std::string format_delay_table(const DelayTables& tables, bool tmax, bool csv) {
  const char sep = csv ? ',' : '\t';
  std::string out = "K";
  out += sep;
  out += "uniform";
  for (double c : tables.c) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "c=%.6g", c);
    out += sep;
    out += buf;
  }
  out += '\n';
  const auto& body = tmax ? tables.tmax : tables.mean;
  for (size_t i = 0; i < tables.K.size(); ++i) {
    out += std::to_string(tables.K[i]);
    for (double v : body[i]) {
      out += sep;
      out += round3(v);
    }
    out += '\n';
  }
  return out;
}

double step_response_delay(const DiscreteCascadeSpec& spec, int horizon) {
  if (horizon < 2) throw_invalid("horizon must be >= 2");
  if (spec.mu.empty()) throw_invalid("cascade has no stages");
  RecursiveCascadeState state(int(spec.mu.size()), 1, 1);
  std::vector<double> d(horizon);
  double prev = 0.0;
  for (int t = 0; t < horizon; ++t) {
    const double x = 1.0;
    cascade_step(state, spec, &x, 1);
    const double y = state.levels.back()[0];
    d[t] = y - prev;
    prev = y;
  }
  int peak = 0;
  for (int t = 1; t < horizon; ++t)
    if (d[t] > d[peak]) peak = t;
  if (peak == horizon - 1)
    throw Error(ErrorKind::NoMaximumFound,
                "response still rising at the horizon");
  if (peak == 0) return 0.0;
  const double den = d[peak - 1] - 2.0 * d[peak] + d[peak + 1];
  if (den == 0.0) return double(peak);
  return double(peak) + 0.5 * (d[peak - 1] - d[peak + 1]) / den;
}

} // namespace tcrf
