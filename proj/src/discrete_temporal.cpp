#include "tcrf/discrete_temporal.hpp"

#include <cmath>

#include "tcrf/errors.hpp"

namespace tcrf {

double tau_from_seconds(double sigma_t, double r) {
  if (sigma_t < 0.0) throw_invalid("sigma_t must be >= 0");
  if (!(r > 0.0)) throw_invalid("frame rate must be > 0");
  return r * r * sigma_t * sigma_t;
}

double mu_from_delta_tau(double delta_tau) {
  if (delta_tau < 0.0) throw_invalid("variance increment must be >= 0");
  return (std::sqrt(1.0 + 4.0 * delta_tau) - 1.0) / 2.0;
}

DiscreteCascadeSpec build_cascade(const ScaleDistribution& dist) {
  DiscreteCascadeSpec spec;
  spec.tau_levels = dist.levels();
  double prev = 0.0;
  for (double tk : spec.tau_levels) {
    spec.mu.push_back(mu_from_delta_tau(tk - prev));
    prev = tk;
  }
  return spec;
}

RecursiveCascadeState::RecursiveCascadeState(int stages, int w, int h)
    : width(w), height(h) {
  if (stages < 1) throw_invalid("need at least one stage");
  if (w < 1 || h < 1) throw_invalid("state shape must be positive");
  levels.assign(stages, std::vector<double>(size_t(w) * h, 0.0));
  increments.assign(stages, std::vector<double>(size_t(w) * h, 0.0));
}

void RecursiveCascadeState::reset() {
  for (auto& l : levels) std::fill(l.begin(), l.end(), 0.0);
  for (auto& l : increments) std::fill(l.begin(), l.end(), 0.0);
  primed = false;
}

void cascade_step(RecursiveCascadeState& state, const DiscreteCascadeSpec& spec,
                  const double* frame, int frame_size) {
  const int n = state.width * state.height;
  if (frame_size != n)
    throw Error(ErrorKind::ShapeMismatch, "frame shape does not match state");
  if (spec.mu.size() != state.levels.size())
    throw Error(ErrorKind::ShapeMismatch, "stage count does not match state");
  for (size_t k = 0; k < spec.mu.size(); ++k) {
    const double gain = 1.0 / (1.0 + spec.mu[k]);
    const double* in = k == 0 ? frame : state.levels[k - 1].data();
    auto& level = state.levels[k];
    auto& inc = state.increments[k];
    for (int i = 0; i < n; ++i) {
      const double d = gain * (in[i] - level[i]);
      inc[i] = d;
      level[i] += d;
    }
  }
}

std::vector<std::vector<double>> impulse_response(const DiscreteCascadeSpec& spec, int n) {
  if (n < 1) throw_invalid("sample count must be >= 1");
  if (spec.mu.empty()) throw_invalid("cascade has no stages");
  RecursiveCascadeState state(int(spec.mu.size()), 1, 1);
  std::vector<std::vector<double>> out(spec.mu.size(), std::vector<double>(n));
  for (int t = 0; t < n; ++t) {
    const double x = t == 0 ? 1.0 : 0.0;
    cascade_step(state, spec, &x, 1);
    for (size_t k = 0; k < spec.mu.size(); ++k) out[k][t] = state.levels[k][0];
  }
  return out;
}

std::vector<double> temporal_derivative(const std::vector<double>& seq, int order) {
  if (order < 1 || order > 2) throw_invalid("derivative order must be 1 or 2");
  if (int(seq.size()) < order + 1)
    throw Error(ErrorKind::InsufficientHistory,
                "sequence too short for the requested temporal order");
  std::vector<double> out;
  out.reserve(seq.size() - order);
  for (size_t t = order; t < seq.size(); ++t) {
    if (order == 1)
      out.push_back(seq[t] - seq[t - 1]);
    else
      out.push_back(seq[t] - 2.0 * seq[t - 1] + seq[t - 2]);
  }
  return out;
}

} // namespace tcrf
