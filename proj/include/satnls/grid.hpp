#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <numbers>

namespace satnls {

using Complex = std::complex<double>;

// Small fixed vector for positions/frequencies; components beyond the grid
// dimension are zero.
using Vec3 = std::array<double, 3>;

inline double norm_sq(const Vec3& v) {
  return v[0] * v[0] + v[1] * v[1] + v[2] * v[2];
}

// Periodic box [-L/2, L/2)^d sampled on n points per axis.
//
// Physical nodes:  x_j = -L/2 + j*dx          (j = 0..n-1, dx = L/n)
// Spectral modes:  xi_m = (2*pi/L)*m          (integer m in [-n/2, n/2))
//
// Storage is row-major with axis 0 slowest. Modes are kept in FFT-standard
// order per axis (0, 1, ..., n/2-1, -n/2, ..., -1); the logical lattice
// [-n/2, n/2) is exposed through mode_of_index / frequency_of_index.
struct SpectralGrid {
  int dim = 1;
  int points_per_axis = 0;
  double box_length = 0.0;

  double dx() const { return box_length / points_per_axis; }
  double dxi() const { return 2.0 * std::numbers::pi / box_length; }
  double nyquist() const {
    return std::numbers::pi * points_per_axis / box_length;
  }
  std::size_t total_points() const {
    std::size_t t = 1;
    for (int a = 0; a < dim; ++a) t *= static_cast<std::size_t>(points_per_axis);
    return t;
  }

  // Storage index along one axis -> integer mode in [-n/2, n/2).
  int mode_of_index(int i) const {
    return i < points_per_axis / 2 ? i : i - points_per_axis;
  }
  double frequency_of_index(int i) const { return dxi() * mode_of_index(i); }
  double position_of_index(int i) const { return -box_length / 2.0 + dx() * i; }

  bool operator==(const SpectralGrid&) const = default;
};

// Largest allowed n^d; make_grid rejects grids above the cap.
std::size_t grid_point_cap();
void set_grid_point_cap(std::size_t cap);

// Validates d in {1,2,3}, n even >= 4, L > 0, n^d within the cap.
SpectralGrid make_grid(int dim, int points_per_axis, double box_length);

// Calls fn(flat_index, xi) for every mode, in storage order.
template <typename Fn>
void for_each_mode(const SpectralGrid& g, Fn&& fn) {
  const int n = g.points_per_axis;
  std::size_t flat = 0;
  switch (g.dim) {
    case 1:
      for (int i = 0; i < n; ++i)
        fn(flat++, Vec3{g.frequency_of_index(i), 0.0, 0.0});
      break;
    case 2:
      for (int i = 0; i < n; ++i) {
        const double f0 = g.frequency_of_index(i);
        for (int j = 0; j < n; ++j)
          fn(flat++, Vec3{f0, g.frequency_of_index(j), 0.0});
      }
      break;
    default:
      for (int i = 0; i < n; ++i) {
        const double f0 = g.frequency_of_index(i);
        for (int j = 0; j < n; ++j) {
          const double f1 = g.frequency_of_index(j);
          for (int k = 0; k < n; ++k)
            fn(flat++, Vec3{f0, f1, g.frequency_of_index(k)});
        }
      }
  }
}

// Calls fn(flat_index, x) for every physical node, in storage order.
template <typename Fn>
void for_each_node(const SpectralGrid& g, Fn&& fn) {
  const int n = g.points_per_axis;
  std::size_t flat = 0;
  switch (g.dim) {
    case 1:
      for (int i = 0; i < n; ++i)
        fn(flat++, Vec3{g.position_of_index(i), 0.0, 0.0});
      break;
    case 2:
      for (int i = 0; i < n; ++i) {
        const double x0 = g.position_of_index(i);
        for (int j = 0; j < n; ++j)
          fn(flat++, Vec3{x0, g.position_of_index(j), 0.0});
      }
      break;
    default:
      for (int i = 0; i < n; ++i) {
        const double x0 = g.position_of_index(i);
        for (int j = 0; j < n; ++j) {
          const double x1 = g.position_of_index(j);
          for (int k = 0; k < n; ++k)
            fn(flat++, Vec3{x0, x1, g.position_of_index(k)});
        }
      }
  }
}

}  // namespace satnls
