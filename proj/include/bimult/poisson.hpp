#pragma once

#include "bimult/dft.hpp"
#include "bimult/types.hpp"

namespace bimult {

/// Periodization sum_n f(x+n) as a 1-periodic function. The Fourier
/// coefficient of the periodization at n is the transform sample fhat(n),
/// so the result is read off dft_forward(f) at the integer frequencies.
///
/// Requires f to decay inside the grid: the fraction of the l^1 mass of f
/// in the outermost unit of [-L, L) must stay below tail_tol, otherwise an
/// AccuracyError carrying the measured tail is thrown.
PeriodicFunction periodize(const SampledFunction& f, int degree, double tail_tol = 1e-8);

/// Samples f at the integer points n, |n| <= radius. The grid must contain
/// the integers exactly (1/h integral), else a ConfigError is thrown.
FiniteSequence sample_at_integers(const SampledFunction& f, int radius);

}  // namespace bimult
