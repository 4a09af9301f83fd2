#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bimult/verification.hpp"

namespace bimult {

// Named check runners. Each returns InequalityReport records ready for the
// report writer; defaults are the pinned configurations the acceptance
// suite runs.

struct RestrictionIdentityOptions {
  int sequence_radius = 4;
  int j_radius = 4;
  double grid_L = 8.0;
  int samples_per_unit = 256;
  int quad_points = 4096;
  double tol = 1e-6;
};

/// Restriction identity for a 1-periodic symbol: apply_C on the lifted pair
/// is constant on each plateau interval and equals apply_D there. One record
/// per trial; lhs is the max deviation.
std::vector<InequalityReport> run_restriction_identity(const std::string& symbol_id,
                                                       int trials, uint64_t seed,
                                                       const RestrictionIdentityOptions& opt = {});

struct QuasinormChainOptions {
  std::string symbol_id = "boxmoll-periodized";
  int sequence_radius = 3;
  int j_radius = 6;
  double grid_L = 8.0;
  int samples_per_unit = 64;
  int quad_points = 1024;
  double tol = 1e-6;  // additive
};

/// Per-trial chain inequality sum_j |D(a,b)(j)|^{p3} <= 2 int |C(f_a,g_b)|^{p3}
/// + tol. Aggregate record carries the tightest trial.
InequalityReport run_quasinorm_chain(const ExponentTriple& triple, int trials, uint64_t seed,
                                     const QuasinormChainOptions& opt = {});

struct KernelSeriesOptions {
  std::string symbol_id = "tentcell-periodized";
  int radius = 16;
  double grid_L = 15.0;
  int samples_per_unit = 128;
  int quad_points = 4096;
  double tol = 1e-6;
};

/// Kernel-series form of a periodic-symbol operator: sup-norm distance
/// between apply_C and the truncated translate series at the given radius.
InequalityReport run_kernel_series_check(const KernelSeriesOptions& opt = {});

struct DilationOptions {
  int phi_radius = 2;
  int degree = 4;
  int quad_points = 1536;  // divisible by every k under test
  double tol = 1e-10;
};

/// Norm equality under symbol dilation vs input folding, plus the exact
/// coefficient identity Fhat(n) = fhat(kn).
InequalityReport run_dilation_check(const std::vector<int>& ks, int trials, uint64_t seed,
                                    const DilationOptions& opt = {});

/// Per-trial convolution bound || P_{a*phi}(F,G) || <= ||a||_q R_phi ||F|| ||G||,
/// where R_phi is the max ratio phi itself attains over the same trials
/// together with their (l,k)-modulations for (l,k) in the support of a.
/// q = 1 for p3 >= 1, q = p3 otherwise.
InequalityReport run_convolution_check(const ExponentTriple& triple, int trials, uint64_t seed,
                                       double slack = 1e-8, int phi_radius = 2,
                                       int a_radius = 2, int degree = 3,
                                       int quad_points = 256);

/// tent_extend(phi) reproduces phi at the integer lattice exactly (bitwise).
InequalityReport run_tent_interpolation_check(uint64_t seed);

/// The assembled four-term route equals piecewise_constant_extend exactly at
/// random points away from cell boundaries. Points and coefficients are
/// drawn on coarse dyadic lattices so both evaluation paths stay inside
/// exact floating-point arithmetic.
InequalityReport run_piecewise_assembly_check(int points, uint64_t seed);

struct SklDecayOptions {
  int k_range = 8;
  int n_range = 8;
  double ceiling = 0.8;     // measured max ratio is ~0.40, attained at small indices
  int doubling_k = 0;       // slice for the halving check
  double min_halving = 4.0; // |shat(n)| must drop at least this factor per doubling
};

/// Decay of the windowed-profile coefficients: the weighted ratio
/// |Shat_{k,l}(n,m)| (1+k^2)(1+n^2)(1+l^2)(1+m^2) is bounded over the range,
/// its maximum sits away from the range boundary, and doubling n cuts the
/// 1-D factor by at least min_halving.
InequalityReport run_skl_decay_check(const SklDecayOptions& opt = {});

/// Output band-limitation for cell-supported symbols (three pinned symbols,
/// Gaussian inputs): spectrum energy outside [-2,2] below 1e-8.
std::vector<InequalityReport> run_band_limitation_check();

/// Sampling inequality checks: the Nyquist equality case (p = 2, band limit
/// R in {1/2, 1}) and the refinement-stability cases (p = 1 and p = 1/2).
std::vector<InequalityReport> run_sampling_checks();

struct BhtCrossval {
  std::vector<InequalityReport> reports;
  std::vector<double> ratios;  // finite-grid ratio per grid size
};

/// Frequency-side vs time-domain bilinear Hilbert transform on Gaussians,
/// plus ratio stability across N in {256, 512, 1024}.
BhtCrossval run_bht_crossval();

/// Ratio growth for the piecewise-constant extension at p1 = 1: the
/// sign-alternating sequence grows by >= 2x over the bump-width schedule
/// while the constant sequence stays within 1%.
std::vector<InequalityReport> run_remark_p1_check(uint64_t seed);

struct BenchResult {
  int n = 0;
  double slow_seconds = 0.0;
  double fast_seconds = 0.0;
  double max_rel_diff = 0.0;
  double speedup() const { return fast_seconds > 0.0 ? slow_seconds / fast_seconds : 0.0; }
};

/// Times the serial triple-loop reference against the parallel diagonal
/// path on Gaussian inputs and reports their agreement.
std::vector<BenchResult> run_apply_c_bench(const std::vector<int>& sizes,
                                           const std::string& symbol_id);

}  // namespace bimult
