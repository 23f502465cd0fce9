#pragma once

#include <vector>

#include "tcrf/image.hpp"

namespace tcrf {

// Scaled modified Bessel values e^{-s} I_n(s) for n = 0..N.
std::vector<double> bessel_ratio_weights(double s, int N);

// Smallest N whose retained 1-D mass m1 = T(0)+2*sum T(n) satisfies m1^2 > 1-eps.
int truncation_radius(double s, double eps);

// Truncated 1-D kernel, renormalized to unit sum; entry n = weight at offset +-n.
std::vector<double> discrete_gaussian_kernel(double s, double eps = 1e-8);

std::vector<double> smooth_1d(const std::vector<double>& signal, double s,
                              double eps = 1e-8);

// Separable smoothing, rows then columns, whole-sample mirror boundary.
Image smooth_2d(const Image& image, double s, double eps = 1e-8);

// Closed-form transfer function e^{-2s(sin^2(t1/2)+sin^2(t2/2))}.
double dft_gaussian(double theta1, double theta2, double s);

// Sup-norm residual of the forward difference (T(s+ds)-T(s))/ds against the
// five-point Laplacian 1/2 lap T(s), measured on the 2-D impulse response.
double diffusion_check(double s, double ds);

// s = p^2 sigma_x^2: spatial variance in pixel^2 units.
double s_from_degrees(double sigma_x, double p);

enum class Axis { X1, X2 };

// Centered stencils (-1/2, 0, +1/2) and (1, -2, 1) along the axis,
// mirror boundary. X1 runs along rows (column index).
Image spatial_derivative(const Image& image, Axis axis, int order);

} // namespace tcrf
