#include "tcrf/discrete_spatial.hpp"

#include <algorithm>
#include <cmath>

#include "tcrf/errors.hpp"

namespace tcrf {

Image::Image(int w, int h, double fill) : width(w), height(h) {
  if (w < 1 || h < 1) throw_invalid("image dimensions must be positive");
  data.assign(size_t(w) * h, fill);
}

int mirror_index(int i, int n) {
  if (n == 1) return 0;
  while (i < 0 || i >= n) {
    if (i < 0) i = -i;
    if (i >= n) i = 2 * (n - 1) - i;
  }
  return i;
}

namespace {

// Power series e^{-s} sum_m (s/2)^{n+2m} / (m! (n+m)!)
// converges in a few dozen terms for small s.
std::vector<double> bessel_series(double s, int N) {
  std::vector<double> w(N + 1, 0.0);
  const double half = s / 2.0;
  for (int n = 0; n <= N; ++n) {
    double term = std::exp(double(n) * std::log(half) - std::lgamma(double(n) + 1.0) - s);
    if (n == 0) term = std::exp(-s);
    double sum = 0.0;
    for (int m = 0; m < 60 && term > 0.0; ++m) {
      sum += term;
      term *= half * half / (double(m + 1) * double(n + m + 1));
      if (term < sum * 1e-18) {
        sum += term;
        break;
      }
    }
    w[n] = sum;
  }
  return w;
}

// Backward (Miller) recurrence I_{n-1} = I_{n+1} + (2n/s) I_n started far above
// both N and the turning point near s, then normalized with sum_Z I_n = e^s so
// the scaled values e^{-s} I_n come out directly and nothing overflows.
std::vector<double> bessel_miller(double s, int N) {
  const int start = std::max(N, int(std::ceil(s))) + 40 + int(2.0 * std::sqrt(s));
  std::vector<double> u(start + 2, 0.0);
  u[start + 1] = 0.0;
  u[start] = 1e-30;
  for (int n = start; n >= 1; --n) {
    u[n - 1] = u[n + 1] + (2.0 * n / s) * u[n];
    if (u[n - 1] > 1e250) {
      for (int j = n - 1; j <= start + 1; ++j) u[j] *= 1e-250;
    }
  }
  double total = u[0];
  for (int n = 1; n <= start; ++n) total += 2.0 * u[n];
  std::vector<double> w(N + 1);
  for (int n = 0; n <= N; ++n) w[n] = u[n] / total;
  return w;
}

} // namespace

std::vector<double> bessel_ratio_weights(double s, int N) {
  if (s < 0.0) throw_invalid("s must be >= 0");
  if (N < 0) throw_invalid("radius must be >= 0");
  if (s == 0.0) {
    std::vector<double> w(N + 1, 0.0);
    w[0] = 1.0;
    return w;
  }
  return s < 2.0 ? bessel_series(s, N) : bessel_miller(s, N);
}

int truncation_radius(double s, double eps) {
  if (s < 0.0) throw_invalid("s must be >= 0");
  if (!(eps > 0.0) || !(eps < 1.0)) throw_invalid("eps must be in (0, 1)");
  if (s == 0.0) return 0;
  int bound = int(8.0 * std::sqrt(s)) + 20;
  for (;;) {
    const auto w = bessel_ratio_weights(s, bound);
    double m1 = w[0];
    for (int n = 1; n <= bound; ++n) {
      m1 += 2.0 * w[n];
      if (m1 * m1 > 1.0 - eps) return n;
    }
    if (w[0] * w[0] > 1.0 - eps) return 0;
    bound *= 2;
    if (bound > 1 << 20)
      throw Error(ErrorKind::NoMaximumFound, "mass bound not reachable");
  }
}

std::vector<double> discrete_gaussian_kernel(double s, double eps) {
  const int n = truncation_radius(s, eps);
  auto w = bessel_ratio_weights(s, n);
  double m1 = w[0];
  for (int i = 1; i <= n; ++i) m1 += 2.0 * w[i];
  for (double& v : w) v /= m1;
  return w;
}

namespace {

void convolve_mirror(const double* in, double* out, int n, int stride,
                     const std::vector<double>& half) {
  const int radius = int(half.size()) - 1;
  for (int x = 0; x < n; ++x) {
    double acc = half[0] * in[size_t(x) * stride];
    for (int k = 1; k <= radius; ++k)
      acc += half[k] * (in[size_t(mirror_index(x - k, n)) * stride] +
                        in[size_t(mirror_index(x + k, n)) * stride]);
    out[size_t(x) * stride] = acc;
  }
}

} // namespace

std::vector<double> smooth_1d(const std::vector<double>& signal, double s,
                              double eps) {
  if (signal.empty()) throw_invalid("signal is empty");
  if (s == 0.0) return signal;
  const auto half = discrete_gaussian_kernel(s, eps);
  std::vector<double> out(signal.size());
  convolve_mirror(signal.data(), out.data(), int(signal.size()), 1, half);
  return out;
}

Image smooth_2d(const Image& image, double s, double eps) {
  if (image.data.empty()) throw_invalid("image is empty");
  if (s < 0.0) throw_invalid("s must be >= 0");
  if (s == 0.0) return image;
  const auto half = discrete_gaussian_kernel(s, eps);
  Image tmp(image.width, image.height);
  Image out(image.width, image.height);
  for (int y = 0; y < image.height; ++y)
    convolve_mirror(&image.data[size_t(y) * image.width],
                    &tmp.data[size_t(y) * image.width], image.width, 1, half);
  for (int x = 0; x < image.width; ++x)
    convolve_mirror(&tmp.data[x], &out.data[x], image.height, image.width, half);
  return out;
}

double dft_gaussian(double theta1, double theta2, double s) {
  const double s1 = std::sin(theta1 / 2.0), s2 = std::sin(theta2 / 2.0);
  return std::exp(-2.0 * s * (s1 * s1 + s2 * s2));
}

double diffusion_check(double s, double ds) {
  if (!(s > 0.0)) throw_invalid("s must be > 0");
  if (!(ds > 0.0)) throw_invalid("ds must be > 0");
  const auto a = discrete_gaussian_kernel(s);
  const auto b = discrete_gaussian_kernel(s + ds);
  const int radius = int(std::max(a.size(), b.size())) + 1;
  const int size = 2 * radius + 1;
  auto embed = [&](const std::vector<double>& half) {
    Image t(size, size, 0.0);
    const int n = int(half.size()) - 1;
    for (int y = -n; y <= n; ++y)
      for (int x = -n; x <= n; ++x)
        t.at(radius + x, radius + y) = half[std::abs(x)] * half[std::abs(y)];
    return t;
  };
  const Image ta = embed(a), tb = embed(b);
  double worst = 0.0;
  for (int y = 1; y < size - 1; ++y) {
    for (int x = 1; x < size - 1; ++x) {
      const double lap = ta.at(x - 1, y) + ta.at(x + 1, y) + ta.at(x, y - 1) +
                         ta.at(x, y + 1) - 4.0 * ta.at(x, y);
      const double r = (tb.at(x, y) - ta.at(x, y)) / ds - 0.5 * lap;
      worst = std::max(worst, std::abs(r));
    }
  }
  return worst;
}

double s_from_degrees(double sigma_x, double p) {
  if (sigma_x < 0.0) throw_invalid("sigma_x must be >= 0");
  if (!(p > 0.0)) throw_invalid("pixels-per-degree must be > 0");
  return p * p * sigma_x * sigma_x;
}

Image spatial_derivative(const Image& image, Axis axis, int order) {
  if (order < 1 || order > 2) throw_invalid("derivative order must be 1 or 2");
  const int extent = axis == Axis::X1 ? image.width : image.height;
  if (extent < 3)
    throw Error(ErrorKind::TooSmallImage, "image extent below stencil size");
  Image out(image.width, image.height);
  const int n = extent;
  auto run = [&](const double* in, double* dst, int stride) {
    for (int x = 0; x < n; ++x) {
      const double lo = in[size_t(mirror_index(x - 1, n)) * stride];
      const double hi = in[size_t(mirror_index(x + 1, n)) * stride];
      const double mid = in[size_t(x) * stride];
      dst[size_t(x) * stride] =
          order == 1 ? (hi - lo) / 2.0 : hi - 2.0 * mid + lo;
    }
  };
  if (axis == Axis::X1) {
    for (int y = 0; y < image.height; ++y)
      run(&image.data[size_t(y) * image.width],
          &out.data[size_t(y) * image.width], 1);
  } else {
    for (int x = 0; x < image.width; ++x)
      run(&image.data[x], &out.data[x], image.width);
  }
  return out;
}

} // namespace tcrf
