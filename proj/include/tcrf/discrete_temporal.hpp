#pragma once

#include <vector>

#include "tcrf/scale_distribution.hpp"

namespace tcrf {

// tau = r^2 sigma_t^2: temporal variance in sample^2 units.
double tau_from_seconds(double sigma_t, double r);

// mu solving mu^2 + mu = delta_tau (the discrete per-stage variance).
double mu_from_delta_tau(double delta_tau);

struct DiscreteCascadeSpec {
  std::vector<double> mu;         // per-stage discrete time constants, >= 0
  std::vector<double> tau_levels; // cumulative variances after each stage
};

// Per-stage mu from the level increments so the composed discrete variance
// equals tau_max exactly.
DiscreteCascadeSpec build_cascade(const ScaleDistribution& dist);

// K retained scale levels per pixel; the entire memory of the past.
struct RecursiveCascadeState {
  int width = 0, height = 0;
  std::vector<std::vector<double>> levels;     // [stage][pixel]
  std::vector<std::vector<double>> increments; // level change at the last step
  bool primed = false;

  RecursiveCascadeState(int stages, int width, int height);
  void reset();
};

// One recursion step: stage k output y_k(t) = y_k(t-1) + (x(t) - y_k(t-1)) / (1 + mu_k)
// with stage inputs chained. frame must hold width*height values.
void cascade_step(RecursiveCascadeState& state, const DiscreteCascadeSpec& spec,
                  const double* frame, int frame_size);

// Per-stage responses to a unit impulse, n samples each.
std::vector<std::vector<double>> impulse_response(const DiscreteCascadeSpec& spec, int n);

// Causal difference: order 1 is y(t) - y(t-1), order 2 is y(t) - 2y(t-1) + y(t-2).
// Output holds one value per t >= order.
std::vector<double> temporal_derivative(const std::vector<double>& seq, int order);

} // namespace tcrf
