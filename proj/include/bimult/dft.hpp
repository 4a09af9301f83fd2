#pragma once

#include <vector>

#include "bimult/types.hpp"

namespace bimult {

/// Grid carrying the dual frequencies xi_k = k/(2L), k = -N/2 .. N/2-1.
/// Its "points" are the frequencies, its spacing is 1/(2L).
Grid1D dual_grid(const Grid1D& g);

/// Forward transform: fhat(xi_k) = h * sum_j f(x_j) e^{-2 pi i x_j xi_k},
/// returned as samples on dual_grid(f.grid). Computed with an FFT; agrees
/// with the direct sum to better than 1e-10 relative.
SampledFunction dft_forward(const SampledFunction& f);

/// Inverse transform: f(x_j) = dxi * sum_k fhat(xi_k) e^{+2 pi i x_j xi_k}.
/// Exact inverse of dft_forward up to roundoff.
SampledFunction dft_inverse(const SampledFunction& fhat, const Grid1D& time_grid);

/// Convenience overload that reconstructs the time grid from the dual grid.
SampledFunction dft_inverse(const SampledFunction& fhat);

namespace detail {
/// Unnormalized complex DFT, out[k] = sum_j in[j] e^{sign * 2 pi i jk/N}.
/// sign = -1 forward, +1 backward. Thread-safe.
void raw_dft(const std::vector<cplx>& in, std::vector<cplx>& out, int sign);
}  // namespace detail

}  // namespace bimult
