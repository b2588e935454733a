#pragma once

#include "satnls/field.hpp"

namespace satnls {

// (sum |u(x)|^p dx^d)^{1/p}; p = infinity gives max |u(x)|. Rejects p < 1.
double lp_norm(const Field& f, double p);

// Spectral Sobolev norm (sum_k w(xi_k)^{2s} |u^_k|^2 dxi^d)^{1/2} with
// w = <xi> = (1+|xi|^2)^{1/2}, or w = |xi| for the homogeneous variant.
// Homogeneous: the xi=0 term contributes |u^_0|^2 for s = 0 (0^0 = 1) and
// nothing for s > 0; s < 0 is rejected (undefined at xi=0 on the torus).
double sobolev_norm(const Field& f, double s, bool homogeneous = false);
double sobolev_norm(const Spectrum& sp, double s, bool homogeneous = false);

}  // namespace satnls
