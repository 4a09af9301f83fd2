#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#ifdef _OPENMP
#include <omp.h>
#endif

#include <cmath>

#include "bimult/norms.hpp"
#include "bimult/operators.hpp"
#include "bimult/random.hpp"
#include "bimult/symbol_registry.hpp"
#include "bimult/transference.hpp"

using namespace bimult;

namespace {

SampledFunction gaussian_on(const Grid1D& g, double scale = 1.0) {
  SampledFunction f(g);
  for (int j = 0; j < g.point_count; ++j) {
    double x = g.point(j) / scale;
    f[j] = cplx{std::exp(-M_PI * x * x), 0.0};
  }
  return f;
}

double sup_abs(const SampledFunction& f) {
  double m = 0.0;
  for (const cplx& v : f.values) m = std::max(m, std::abs(v));
  return m;
}

double sup_diff(const SampledFunction& a, const SampledFunction& b) {
  double m = 0.0;
  for (int j = 0; j < a.size(); ++j) m = std::max(m, std::abs(a[j] - b[j]));
  return m;
}

// independent midpoint-node principal-value quadrature for the 1-D
// transform (1/pi) p.v. int f(x-t)/t dt; used to cross-check the
// time-domain operator with a different node layout
double hilbert_pv_oracle(double x, double L) {
  auto f = [](double u) { return std::exp(-M_PI * u * u); };
  const int n = 1 << 18;
  const double h = L / n;
  double acc = 0.0;
  for (int k = 0; k < n; ++k) {
    double t = (k + 0.5) * h;
    acc += (f(x - t) - f(x + t)) / t * h;
  }
  return acc / M_PI;
}

}  // namespace

TEST_CASE("constant symbol collapses to the pointwise product") {
  Grid1D g(8.0, 512);
  SampledFunction f = gaussian_on(g);
  SampledFunction h = gaussian_on(g, 0.8);
  SampledFunction prod(g);
  for (int j = 0; j < g.point_count; ++j) prod[j] = f[j] * h[j];
  SampledFunction out = apply_C(constant_symbol(), f, h);
  CHECK(sup_diff(out, prod) / sup_abs(prod) < 1e-10);
}

TEST_CASE("phase symbol translates both inputs") {
  Grid1D g(8.0, 512);  // spacing 1/32
  const double a = 0.5, b = -1.0;
  Symbol2D phase;
  phase.name = "shift";
  phase.eval = [a, b](double xi, double eta) {
    double ph = 2.0 * M_PI * (a * xi + b * eta);
    return cplx{std::cos(ph), std::sin(ph)};
  };
  phase.sup_bound = 1.0;

  SampledFunction f = gaussian_on(g);
  SampledFunction h = gaussian_on(g, 0.8);
  SampledFunction out = apply_C(phase, f, h);

  const int sa = static_cast<int>(std::llround(a / g.spacing()));
  const int sb = static_cast<int>(std::llround(b / g.spacing()));
  double worst = 0.0;
  for (int j = 0; j < g.point_count; ++j) {
    int jf = j + sa, jg = j + sb;
    cplx expect = (jf >= 0 && jf < g.point_count && jg >= 0 && jg < g.point_count)
                      ? f[jf] * h[jg]
                      : cplx{0.0, 0.0};
    worst = std::max(worst, std::abs(out[j] - expect));
  }
  CHECK(worst < 1e-8);
}

TEST_CASE("fast and slow paths agree on every test symbol") {
  Grid1D g(4.0, 128);
  Rng rng(5);
  SampledFunction f(g), h(g);
  for (auto& v : f.values) v = rng.complex_gaussian();
  for (auto& v : h.values) v = rng.complex_gaussian();
  for (const std::string& id : {"one", "bht", "tentcell-periodized", "boxmoll", "trig"}) {
    Symbol2D psi = symbol_by_id(id);
    SampledFunction fast = apply_C(psi, f, h);
    SampledFunction slow = apply_C_slow(psi, f, h);
    CHECK(sup_diff(fast, slow) / sup_abs(slow) < 1e-10);
  }
}

TEST_CASE("apply_C rejects mismatched grids and non-finite symbols") {
  Grid1D g(4.0, 128), g2(4.0, 256);
  SampledFunction f = gaussian_on(g), h = gaussian_on(g2);
  CHECK_THROWS_AS(apply_C(constant_symbol(), f, h), DomainError);

  Symbol2D bad;
  bad.eval = [](double, double) { return cplx{std::nan(""), 0.0}; };
  SampledFunction h2 = gaussian_on(g);
  CHECK_THROWS_AS(apply_C(bad, f, h2), DomainError);
  CHECK_THROWS_AS(apply_C_slow(bad, f, h2), DomainError);
}

TEST_CASE("apply_C is bilinear and commutes with grid translations") {
  Grid1D g(8.0, 256);
  Symbol2D psi = symbol_by_id("tentcell-periodized");
  Rng rng(17);
  SampledFunction f1(g), f2(g), h(g);
  for (auto& v : f1.values) v = rng.complex_gaussian();
  for (auto& v : f2.values) v = rng.complex_gaussian();
  for (auto& v : h.values) v = rng.complex_gaussian();

  const cplx alpha{0.7, -0.3};
  SampledFunction combo(g);
  for (int j = 0; j < g.point_count; ++j) combo[j] = alpha * f1[j] + f2[j];
  SampledFunction lhs = apply_C(psi, combo, h);
  SampledFunction r1 = apply_C(psi, f1, h);
  SampledFunction r2 = apply_C(psi, f2, h);
  double worst = 0.0, scale = sup_abs(lhs);
  for (int j = 0; j < g.point_count; ++j)
    worst = std::max(worst, std::abs(lhs[j] - (alpha * r1[j] + r2[j])));
  CHECK(worst / scale < 1e-10);

  // simultaneous translation by a whole number of grid units
  SampledFunction fg = gaussian_on(g), hg = gaussian_on(g, 0.7);
  const int shift = g.samples_per_unit();  // tau = 1
  auto translate = [&](const SampledFunction& u) {
    SampledFunction out(g);
    for (int j = 0; j < g.point_count; ++j) {
      int k = j - shift;
      out[j] = (k >= 0 && k < g.point_count) ? u[k] : cplx{0.0, 0.0};
    }
    return out;
  };
  SampledFunction direct = translate(apply_C(psi, fg, hg));
  SampledFunction shifted = apply_C(psi, translate(fg), translate(hg));
  CHECK(sup_diff(direct, shifted) < 1e-8);
}

TEST_CASE("apply_C output is independent of the thread count") {
#ifdef _OPENMP
  Grid1D g(4.0, 256);
  SampledFunction f = gaussian_on(g), h = gaussian_on(g, 0.9);
  Symbol2D psi = symbol_by_id("bht");
  int saved = omp_get_max_threads();
  omp_set_num_threads(1);
  SampledFunction serial = apply_C(psi, f, h);
  omp_set_num_threads(std::max(2, saved));
  SampledFunction parallel = apply_C(psi, f, h);
  omp_set_num_threads(saved);
  for (int j = 0; j < g.point_count; ++j) CHECK(serial[j] == parallel[j]);
#endif
}

TEST_CASE("torus operator coefficient arithmetic") {
  // a symbol equal to one over the full index range reproduces the product
  Rng rng(23);
  PeriodicFunction F = random_periodic(2, rng);
  PeriodicFunction G = random_periodic(2, rng);
  FiniteSequence2D one(4);
  for (auto& v : one.values) v = cplx{1.0, 0.0};
  PeriodicFunction P = apply_P(one, F, G);
  CHECK(P.degree == 4);
  for (int i = 0; i < 64; ++i) {
    double x = static_cast<double>(i) / 64.0;
    CHECK(std::abs(P.eval(x) - F.eval(x) * G.eval(x)) < 1e-12);
  }

  FiniteSequence2D delta(2);
  delta.at(0, 0) = cplx{1.0, 0.0};
  PeriodicFunction Q = apply_P(delta, F, G);
  for (int n = -Q.degree; n <= Q.degree; ++n) {
    if (n == 0) CHECK(std::abs(Q.coeff(0) - F.coeff(0) * G.coeff(0)) < 1e-14);
    else CHECK(std::abs(Q.coeff(n)) == 0.0);
  }

  // random symbol against the direct double sum at sample points
  FiniteSequence2D phi = random_sequence2d(2, rng);
  PeriodicFunction R = apply_P(phi, F, G);
  for (int i = 0; i < 64; ++i) {
    double x = static_cast<double>(i) / 64.0;
    cplx direct{0.0, 0.0};
    for (int n = -2; n <= 2; ++n)
      for (int m = -2; m <= 2; ++m) {
        double ph = 2.0 * M_PI * x * (n + m);
        direct += F.coeff(n) * G.coeff(m) * phi.at(n, m) * cplx{std::cos(ph), std::sin(ph)};
      }
    CHECK(std::abs(R.eval(x) - direct) < 1e-12);
  }
}

TEST_CASE("integer-side operator: orthonormality collapses") {
  Rng rng(31);
  FiniteSequence a = random_sequence(3, rng);
  FiniteSequence b = random_sequence(3, rng);

  FiniteSequence d1 = apply_D(constant_symbol(), a, b, 256, 4);
  for (int l = -4; l <= 4; ++l)
    CHECK(std::abs(d1.at(l) - a.at_or_zero(l) * b.at_or_zero(l)) < 1e-12);

  FiniteSequence d2 = apply_D(trig_symbol(2, -1), a, b, 256, 3);
  for (int l = -3; l <= 3; ++l)
    CHECK(std::abs(d2.at(l) - a.at_or_zero(l + 2) * b.at_or_zero(l - 1)) < 1e-12);

  // the diagonal grouping agrees with the literal four-loop rule
  Symbol2D psi = symbol_by_id("boxmoll-periodized");
  FiniteSequence fast = apply_D(psi, a, b, 128, 3);
  FiniteSequence slow = apply_D_reference(psi, a, b, 128, 3);
  for (int l = -3; l <= 3; ++l) CHECK(std::abs(fast.at(l) - slow.at(l)) < 1e-12);

  CHECK_THROWS_AS(apply_D(psi, a, b, 16, 3), ConfigError);   // below the Nyquist guard
  CHECK_THROWS_AS(apply_D(bht_symbol(), a, b, 256, 3), DomainError);  // not periodic
}

TEST_CASE("delta sequences read kernel coefficients through apply_D") {
  FiniteSequence delta(0);
  delta.at(0) = cplx{1.0, 0.0};
  Symbol2D psi = symbol_by_id("bhtcell-periodized");
  const int q = 1024;
  FiniteSequence d = apply_D(psi, delta, delta, q, 3);
  KernelTable k = compute_K(psi, 3, q);
  for (int l = -3; l <= 3; ++l) CHECK(std::abs(d.at(l) - k.coeffs.at(l, l)) < 1e-12);
}

TEST_CASE("kernel coefficients of reference symbols") {
  KernelTable one = compute_K(constant_symbol(), 3, 128);
  for (int n = -3; n <= 3; ++n)
    for (int m = -3; m <= 3; ++m) {
      double expect = (n == 0 && m == 0) ? 1.0 : 0.0;
      CHECK(std::abs(one.coeffs.at(n, m) - cplx{expect, 0.0}) < 1e-12);
    }

  // a pure phase e^{-2 pi i (n0 xi + m0 eta)} has a single kernel
  // coefficient at (n0, m0); the operator shifts f by n0 and g by m0,
  // which pins the sign convention
  const int n0 = 2, m0 = -1;
  Symbol2D phase;
  phase.eval = [](double xi, double eta) {
    double ph = -2.0 * M_PI * (2.0 * xi - 1.0 * eta);
    return cplx{std::cos(ph), std::sin(ph)};
  };
  phase.periodic_xi = phase.periodic_eta = true;
  phase.sup_bound = 1.0;
  KernelTable kp = compute_K(phase, 3, 128);
  for (int n = -3; n <= 3; ++n)
    for (int m = -3; m <= 3; ++m) {
      double expect = (n == n0 && m == m0) ? 1.0 : 0.0;
      CHECK(std::abs(kp.coeffs.at(n, m) - cplx{expect, 0.0}) < 1e-12);
    }
  // consistency: the same symbol translates the inputs by (n0, m0)
  Grid1D g(4.0, 256);
  SampledFunction f = gaussian_on(g), h = gaussian_on(g, 0.8);
  SampledFunction out = apply_C(phase, f, h);
  const int spu = g.samples_per_unit();
  double worst = 0.0;
  for (int j = 0; j < g.point_count; ++j) {
    int jf = j - n0 * spu, jg = j - m0 * spu;
    cplx expect = (jf >= 0 && jf < g.point_count && jg >= 0 && jg < g.point_count)
                      ? f[jf] * h[jg]
                      : cplx{0.0, 0.0};
    worst = std::max(worst, std::abs(out[j] - expect));
  }
  CHECK(worst < 1e-8);

  // periodized cell tent: coefficients factor into nonnegative 1-D factors
  KernelTable kt = compute_K(symbol_by_id("tentcell-periodized"), 3, 4096);
  auto c1 = [](int n) {
    if (n == 0) return 0.5;
    double u = M_PI * n / 2.0;
    double s = std::sin(u) / u;
    return 0.5 * s * s;
  };
  for (int n = -3; n <= 3; ++n)
    for (int m = -3; m <= 3; ++m) {
      CHECK(std::abs(kt.coeffs.at(n, m).imag()) < 1e-12);
      CHECK(kt.coeffs.at(n, m).real() >= -1e-12);
      CHECK(std::abs(kt.coeffs.at(n, m) - cplx{c1(n) * c1(m), 0.0}) < 1e-8);
    }
  CHECK(kt.boundary_max > 0.0);
}

TEST_CASE("kernel series: single shifts and truncation warnings") {
  Grid1D g(4.0, 256);
  SampledFunction f = gaussian_on(g), h = gaussian_on(g, 0.8);

  FiniteSequence2D delta(0);
  delta.at(0, 0) = cplx{1.0, 0.0};
  KernelSeriesResult r0 = apply_kernel_series(delta, f, h);
  CHECK_FALSE(r0.truncated);
  for (int j = 0; j < g.point_count; ++j) CHECK(r0.value[j] == f[j] * h[j]);

  FiniteSequence2D shift(1);
  shift.at(1, 0) = cplx{1.0, 0.0};
  KernelSeriesResult r1 = apply_kernel_series(shift, f, h);
  const int spu = g.samples_per_unit();
  for (int j = spu; j < g.point_count; ++j) CHECK(r1.value[j] == f[j - spu] * h[j]);

  SampledFunction ones(g);
  for (auto& v : ones.values) v = cplx{1.0, 0.0};
  KernelSeriesResult r2 = apply_kernel_series(shift, ones, ones);
  CHECK(r2.truncated);  // constant input has not decayed at the window edge

  Grid1D coarse(1.5, 8);
  SampledFunction fb(coarse);
  CHECK_THROWS_AS(apply_kernel_series(delta, fb, fb), ConfigError);
}

TEST_CASE("kernel series reproduces the operator for a smooth periodic symbol") {
  Symbol2D psi = symbol_by_id("boxmoll-periodized");
  Grid1D g(7.0, 896);  // spacing 1/64
  SampledFunction f(g), h(g);
  for (int j = 0; j < g.point_count; ++j) {
    double x = g.point(j);
    f[j] = cplx{smooth_plateau(x, -1.0, 1.0, 0.5), 0.0};
    h[j] = cplx{smooth_plateau(x, -1.0, 1.0, 0.4), 0.0};
  }
  KernelTable k = compute_K(psi, 8, 2048);
  KernelSeriesResult series = apply_kernel_series(k.coeffs, f, h);
  CHECK_FALSE(series.truncated);
  SampledFunction direct = apply_C(psi, f, h);
  CHECK(sup_diff(direct, series.value) < 1e-6);
}

TEST_CASE("time-domain transform: cancellation and the 1-D oracle") {
  Grid1D g(16.0, 2048);
  SampledFunction c1(g), c2(g);
  for (auto& v : c1.values) v = cplx{2.0, 0.0};
  for (auto& v : c2.values) v = cplx{-0.5, 0.0};
  SampledFunction zero = bht_timedomain(c1, c2, g.spacing());
  CHECK(sup_abs(zero) == 0.0);  // paired nodes cancel exactly

  CHECK_THROWS_AS(bht_timedomain(c1, c2, 0.5 * g.spacing()), DomainError);

  // g == 1 reduces to the linear transform of f; frozen reference values
  // are 2 sqrt(pi) D(sqrt(pi) x) / pi for the Gaussian, D the Dawson
  // integral, here via an independently discretized quadrature plus the
  // frozen numbers themselves
  SampledFunction f = gaussian_on(g);
  SampledFunction ones(g);
  for (auto& v : ones.values) v = cplx{1.0, 0.0};
  SampledFunction t = bht_timedomain(f, ones, g.spacing());
  auto value_at = [&](double x) {
    return t[static_cast<int>(std::llround((x + g.half_width) / g.spacing()))];
  };
  CHECK(std::abs(value_at(0.5) - cplx{0.6096053374591721, 0.0}) < 1e-3);
  CHECK(std::abs(value_at(1.0) - cplx{0.3990962647985944, 0.0}) < 1e-3);
  CHECK(std::abs(value_at(0.5) - cplx{hilbert_pv_oracle(0.5, 16.0), 0.0}) < 1e-3);
  CHECK(std::abs(value_at(1.0) - cplx{hilbert_pv_oracle(1.0, 16.0), 0.0}) < 1e-3);
}

TEST_CASE("frequency-side and time-domain transforms meet on Gaussians") {
  Grid1D g(8.0, 512);
  SampledFunction f = gaussian_on(g);
  SampledFunction freq = apply_C(bht_symbol(), f, f);
  SampledFunction time = bht_timedomain(f, f, g.spacing());
  CHECK(sup_diff(freq, time) / sup_abs(freq) < 1e-2);
}
