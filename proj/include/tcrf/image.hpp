#pragma once

#include <vector>

namespace tcrf {

// Row-major 2-D grid of doubles.
struct Image {
  int width = 0, height = 0;
  std::vector<double> data;

  Image() = default;
  Image(int w, int h, double fill = 0.0);

  double& at(int x, int y) { return data[size_t(y) * width + x]; }
  double at(int x, int y) const { return data[size_t(y) * width + x]; }
  bool same_shape(const Image& other) const {
    return width == other.width && height == other.height;
  }
};

// Whole-sample mirror fold of i into [0, n): ..., 2, 1, 0, 1, 2, ..., n-2, n-1, n-2, ...
int mirror_index(int i, int n);

} // namespace tcrf
