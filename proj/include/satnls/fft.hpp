#pragma once

#include "satnls/field.hpp"

namespace satnls {

// Discrete analogue of the (2*pi)^{-d/2} continuum transform pair:
//
//   u^(xi_k) = (2*pi)^{-d/2} * sum_x u(x) e^{-i x.xi_k} dx^d
//   u(x_j)   = (2*pi)^{-d/2} * sum_k u^(xi_k) e^{+i x_j.xi_k} dxi^d
//
// With dx*dxi = 2*pi/n the pair is exactly unitary:
//   sum_x |u|^2 dx^d = sum_k |u^|^2 dxi^d   (discrete Parseval, to roundoff)
// so spectral norms quote continuum values directly. Coefficients refer to
// the centered box [-L/2, L/2)^d.
Spectrum forward_transform(const Field& f);
Field inverse_transform(const Spectrum& s);

// Raw engine: unnormalized c2c DFT over the grid's mode layout, out-of-place,
// sign = -1 forward / +1 backward. `in` and `out` must be distinct buffers of
// length grid.total_points(). Deterministic plans; safe to call concurrently.
void raw_dft(const SpectralGrid& g, const Complex* in, Complex* out, int sign);

}  // namespace satnls
