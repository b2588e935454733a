#pragma once

#include <vector>

#include "satnls/grid.hpp"

namespace satnls {

// Complex state sampled at the physical nodes of a grid.
struct Field {
  SpectralGrid grid;
  std::vector<Complex> values;
};

// Spectral coefficients, FFT-standard mode order (see SpectralGrid).
struct Spectrum {
  SpectralGrid grid;
  std::vector<Complex> coeffs;
};

inline Field make_field(const SpectralGrid& g) {
  return Field{g, std::vector<Complex>(g.total_points())};
}

// Discrete L^2 inner product  <a,b> = sum a(x) conj(b(x)) dx^d.
Complex inner_product(const Field& a, const Field& b);

Field operator-(const Field& a, const Field& b);
Field operator+(const Field& a, const Field& b);
Field operator*(Complex c, const Field& f);

}  // namespace satnls
