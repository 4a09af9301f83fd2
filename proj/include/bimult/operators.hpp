#pragma once

#include "bimult/symbols.hpp"
#include "bimult/types.hpp"

namespace bimult {

/// Bilinear multiplier operator on the grid:
///   C_psi(f,g)(x) = dxi^2 * sum_{k,l} fhat(xi_k) ghat(xi_l) psi(xi_k, xi_l)
///                   e^{2 pi i x (xi_k + xi_l)}.
///
/// This is the fast path: diagonal sums over s = xi_k + xi_l on the doubled
/// frequency lattice followed by one inverse FFT. The diagonals are
/// independent, so the loop parallelizes over s with a fixed summation order
/// inside each diagonal; results do not depend on the thread count.
/// O(N^2) + O(N log N).
SampledFunction apply_C(const Symbol2D& psi, const SampledFunction& f,
                        const SampledFunction& g);

/// Serial reference implementation of apply_C: the literal triple loop over
/// (x_j, xi_k, xi_l), O(N^3). Kept for testing and benchmarking against the
/// fast path; the two agree to better than 1e-10 relative.
SampledFunction apply_C_slow(const Symbol2D& psi, const SampledFunction& f,
                             const SampledFunction& g);

/// Bilinear multiplier on the torus:
///   P(F,G) has coefficient at s equal to sum_{n+m=s} Fhat(n) Ghat(m) phi(n,m),
/// with phi treated as zero outside its support. Output degree is
/// deg F + deg G.
PeriodicFunction apply_P(const FiniteSequence2D& phi, const PeriodicFunction& F,
                         const PeriodicFunction& G);

/// Bilinear multiplier on the integers:
///   D(a,b)(l) = int int ahat(theta) bhat(rho) psi(theta,rho)
///               e^{2 pi i l (theta+rho)} dtheta drho
/// by a tensor rectangle rule with quad_points^2 nodes on the torus square.
/// psi must be 1-periodic in both variables. Results are reported on the
/// index window |l| <= out_radius. quad_points must satisfy the Nyquist
/// guard quad_points >= 4 (radius(a) + radius(b) + out_radius).
FiniteSequence apply_D(const Symbol2D& psi, const FiniteSequence& a,
                       const FiniteSequence& b, int quad_points, int out_radius);

/// Direct four-loop evaluation of the same quadrature (serial reference,
/// used by tests at small sizes).
FiniteSequence apply_D_reference(const Symbol2D& psi, const FiniteSequence& a,
                                 const FiniteSequence& b, int quad_points,
                                 int out_radius);

struct KernelTable {
  FiniteSequence2D coeffs;  // K_{n,m} for |n|,|m| <= R
  // max |K_{n,m}| on the boundary shell |n| = R or |m| = R; a proxy for the
  // truncated tail so callers can judge whether R was large enough
  double boundary_max = 0.0;
};

/// Kernel coefficients of a 1-periodic symbol:
///   K_{n,m} = int_I int_I psi(xi,eta) e^{2 pi i (xi n + eta m)} dxi deta
/// over one period cell, by a quad_points^2 rectangle rule.
KernelTable compute_K(const Symbol2D& psi, int radius, int quad_points = 4096);

struct KernelSeriesResult {
  SampledFunction value;
  // set when integer shifts push potentially nonzero samples outside the
  // grid window, so the finite sum silently dropped mass
  bool truncated = false;
  double clipped_fraction = 0.0;
};

/// Finite double sum  sum_{n,m} K_{n,m} f(x-n) g(x-m)  of integer-translated
/// products. The grid must contain the integer shifts exactly.
KernelSeriesResult apply_kernel_series(const FiniteSequence2D& K, const SampledFunction& f,
                                       const SampledFunction& g);

/// Time-domain bilinear Hilbert transform
///   (1/pi) p.v. int f(x-t) g(x+t) dt/t
/// by symmetric rectangle quadrature over cutoff <= |t| <= L. The +-t nodes
/// are paired before summation, so constant x constant cancels exactly. The
/// 1/pi factor makes this the time-domain form of apply_C with the
/// -i sgn(xi-eta) symbol.
SampledFunction bht_timedomain(const SampledFunction& f, const SampledFunction& g,
                               double cutoff);

}  // namespace bimult
