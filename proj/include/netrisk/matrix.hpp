#pragma once

#include <cassert>
#include <cstddef>
#include <vector>

namespace netrisk {

// Dense row-major matrix, sized for country-level panels (N up to a few
// hundred).
struct Matrix {
  int rows = 0;
  int cols = 0;
  std::vector<double> data;

  Matrix() = default;
  Matrix(int r, int c, double fill = 0.0)
      : rows(r), cols(c), data(static_cast<std::size_t>(r) * static_cast<std::size_t>(c), fill) {}

  double& operator()(int i, int j) {
    assert(i >= 0 && i < rows && j >= 0 && j < cols);
    return data[static_cast<std::size_t>(i) * cols + j];
  }
  double operator()(int i, int j) const {
    assert(i >= 0 && i < rows && j >= 0 && j < cols);
    return data[static_cast<std::size_t>(i) * cols + j];
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;
};

}  // namespace netrisk
