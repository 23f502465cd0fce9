#pragma once

#include <string>
#include <vector>

#include "tcrf/discrete_temporal.hpp"

namespace tcrf {

// Mean of the composed kernel: sqrt(K tau) for the uniform distribution.
double mean_delay_uniform(int K, double tau);

// Closed-form mean for the logarithmic distribution,
// c^{-K} (c^2 - (sqrt(c^2-1)+1) c + sqrt(c^2-1) c^K) / (c-1) * sqrt(tau).
double mean_delay_log(int K, double c, double tau);

// Its K -> infinity limit sqrt(c^2-1)/(c-1) * sqrt(tau).
double mean_delay_log_limit(double c, double tau);

// Position of the kernel maximum, (K-1)/sqrt(K) * sqrt(tau) for equal mu.
double tmax_uniform(int K, double tau);

// Kernel-maximum position by golden-section search on the analytic cascade,
// refined to 1e-6 sqrt(tau). Returns 0 for a single stage.
double tmax_numeric(const std::vector<double>& mu);

struct DelayTables {
  std::vector<int> K;
  std::vector<double> c;                 // logarithmic columns, after uniform
  std::vector<std::vector<double>> mean; // [row][column], column 0 = uniform
  std::vector<std::vector<double>> tmax;
};

DelayTables render_delay_tables(const std::vector<int>& K_range,
                                const std::vector<double>& c_list);

// 3-decimal, half-up formatting; tab-separated text or CSV.
std::string format_delay_table(const DelayTables& tables, bool tmax, bool csv);

// Feeds a unit step through the discrete cascade, takes the causal first
// difference and returns the sub-sample-refined argmax position (samples).
double step_response_delay(const DiscreteCascadeSpec& spec, int horizon);

} // namespace tcrf
