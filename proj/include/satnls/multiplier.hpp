#pragma once

#include <stdexcept>

#include "satnls/fft.hpp"

namespace satnls {

// out^(xi_k) = m(xi_k) * in^(xi_k). The symbol is any callable taking a
// frequency vector (Vec3) and returning double or Complex.
template <typename Symbol>
Spectrum apply_multiplier(const Spectrum& sp, Symbol&& m) {
  Spectrum out{sp.grid, std::vector<Complex>(sp.coeffs.size())};
  for_each_mode(sp.grid, [&](std::size_t k, const Vec3& xi) {
    out.coeffs[k] = Complex(m(xi)) * sp.coeffs[k];
  });
  return out;
}

template <typename Symbol>
Field apply_multiplier(const Field& f, Symbol&& m) {
  if (f.values.size() != f.grid.total_points())
    throw std::invalid_argument("apply_multiplier: field size does not match grid");
  return inverse_transform(apply_multiplier(forward_transform(f), m));
}

}  // namespace satnls
