#pragma once

#include <vector>

#include "ggf/types.hpp"

namespace ggf::detail {

// Forward DFT: out[f] = sum_t in[t] e^{-2 pi i f t / L}.
void dft_forward(int L, const cplx* in, cplx* out);

// Unnormalized inverse: out[t] = sum_f in[f] e^{+2 pi i f t / L}.
void dft_backward(int L, const cplx* in, cplx* out);

// Table of unit roots e^{+2 pi i j / L}, j in [0, L).
std::vector<cplx> unit_roots(int L);

}  // namespace ggf::detail
