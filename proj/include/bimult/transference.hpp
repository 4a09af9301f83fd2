#pragma once

#include <functional>

#include "bimult/operators.hpp"
#include "bimult/symbols.hpp"
#include "bimult/types.hpp"

namespace bimult {

/// Sequences lifted to the line via integer translates of a bump:
/// f_a = sum_k a_k Phi(. - k). With the support-side bump the translates
/// have disjoint supports and norm_constant is exactly 1.
struct LiftedPair {
  SampledFunction f_a;
  SampledFunction g_b;
  FiniteSequence a;
  FiniteSequence b;
  BumpFlavor bump;
  double norm_constant = 1.0;  // sup_x sum_l |Phi(x - l)|
};

LiftedPair lift_sequences(const FiniteSequence& a, const FiniteSequence& b,
                          BumpFlavor flavor, const Grid1D& grid);

struct RestrictionReport {
  FiniteSequence d;           // D_psi(a,b)(j) over the window
  double max_deviation = 0.0; // max_j max over the open middle of I_j of
                              // |C_psi(f_a,g_b)(x) - D_psi(a,b)(j)|
};

/// Restriction of a 1-periodic multiplier to the integers: computes
/// D_psi(a,b) on |j| <= j_radius via apply_D and, as a diagnostic, checks
/// that apply_C(psi, f_a, g_b) is constant on each plateau interval
/// I_j = [j+1/4, j+3/4] and equals D_psi(a,b)(j) there. The interval is
/// sampled on its open middle so the bump shoulders stay out of play.
RestrictionReport restrict_periodic_to_Z(const Symbol2D& psi, const FiniteSequence& a,
                                         const FiniteSequence& b, int j_radius,
                                         const Grid1D& grid, int quad_points);

/// Periodization of a symbol supported inside the unit cell [-1/2,1/2]^2:
/// wraps both arguments to the fundamental cell and evaluates. Fails if the
/// declared support does not fit inside the cell.
Symbol2D periodize_symbol(const Symbol2D& psi);

/// phi_k(n,m) = phi(n/k, m/k) when k divides both indices, else 0.
FiniteSequence2D dilate_phi(const FiniteSequence2D& phi, int k);

/// Folding F(x) = (1/k) sum_{j<k} f((x+j)/k) on the coefficient side:
/// Fhat(n) = fhat(kn), degree shrinks by the factor k.
PeriodicFunction fold_function(const PeriodicFunction& f, int k);

/// (a * phi)(n,m) = sum_{l,k} a(l,k) phi(n-l, m-k); support radii add.
FiniteSequence2D convolve_symbol(const FiniteSequence2D& a, const FiniteSequence2D& phi);

struct TranslateDecayDiagnostic {
  double power_sum = 0.0;      // sum |Shat(n,m)|^p over the window
  double power_sum_root = 0.0; // power_sum^{1/p}; reported alongside since
                               // the two normalizations differ for p < 1
  double last_shell_mass = 0.0;
  int window = 0;
  bool divergence_warning = false;
};

struct JodeitExtension {
  Symbol2D symbol;
  TranslateDecayDiagnostic diagnostic;
};

/// Translate-sum extension psi(xi,eta) = sum_{n,m} phi(n,m) Shat(xi-n, eta-m)
/// for a finitely supported phi. Also evaluates the summability diagnostic
/// sum |Shat(n,m)|^p over |n|,|m| <= window (the coefficients of the
/// periodized profile equal the transform samples at the integers). A
/// non-decaying tail raises divergence_warning, never an error.
JodeitExtension jodeit_extend(const FiniteSequence2D& phi,
                              const std::function<cplx(double, double)>& S_hat,
                              double decay_p, int window = 64);

/// Piecewise-bilinear interpolant of phi: psi = sum phi(n,m) Tent(xi-n, eta-m)
/// with the product tent profile. psi(n,m) = phi(n,m) exactly at integers.
Symbol2D tent_extend(const FiniteSequence2D& phi);

/// Table of Fourier coefficients s_k(n) of the 1-periodic extension of the
/// windowed Fejer-square factor  chi_{k/2 + J/2}(x) * sin^2(4 pi x)/(4 pi x)^2
/// from the interval k/2 + J. The two-variable coefficients factor as
/// Shat_{k,l}(n,m) = s_k(n) s_l(m).
struct SklCoefficientTable {
  int k_max = 0;
  int n_max = 0;
  std::vector<cplx> factors;  // (2*k_max+1) x (2*n_max+1), row k, column n

  cplx factor(int k, int n) const {
    return factors[static_cast<size_t>(k + k_max) * (2 * n_max + 1) + (n + n_max)];
  }
  cplx value(int k, int l, int n, int m) const { return factor(k, n) * factor(l, m); }

  // smallest constant C with |Shat_{k,l}(n,m)| (1+k^2)(1+n^2)(1+l^2)(1+m^2) <= C
  // over the computed range, and where the maximum is attained
  double bound_constant = 0.0;
  int arg_k = 0, arg_n = 0, arg_l = 0, arg_m = 0;
};

SklCoefficientTable s_kl_coefficient_table(int k_max, int n_max, int quad_nodes = 4096);

/// Piecewise-constant extension: psi is phi(n,m) on the half-open unit cell
/// centered at (n,m), following the J = [-1/2, 1/2) convention.
Symbol2D piecewise_constant_extend(const FiniteSequence2D& phi);

// Intermediate objects of the two-route piecewise-constant construction.
// assemble_from_psi2(psi2_symbol(phi)) agrees with
// piecewise_constant_extend(phi) exactly away from cell boundaries.

/// theta2(n,m) = phi2(n,m) + phi2(n-1,m) + phi2(n,m-1) + phi2(n-1,m-1)
/// with phi2 = dilate_phi(phi, 2).
FiniteSequence2D theta2_coefficients(const FiniteSequence2D& phi);

/// Theta2 = tent_extend(theta2); constant phi(n,m) on [2n,2n+1] x [2m,2m+1].
Symbol2D theta2_interpolant(const FiniteSequence2D& phi);

/// 2-periodic half indicator: 1 on [0,1), 0 on [1,2).
double chi_tilde(double u);

/// Psi2(xi,eta) = chi_tilde(xi) chi_tilde(eta) Theta2(xi,eta).
Symbol2D psi2_symbol(const FiniteSequence2D& phi);

/// psi(xi,eta) = Psi2(2xi,2eta) + Psi2(2xi+1,2eta) + Psi2(2xi,2eta+1)
///             + Psi2(2xi+1,2eta+1).
Symbol2D assemble_from_psi2(const Symbol2D& psi2);

}  // namespace bimult
