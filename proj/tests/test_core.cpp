#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>

#include "bimult/dft.hpp"
#include "bimult/norms.hpp"
#include "bimult/poisson.hpp"
#include "bimult/random.hpp"
#include "bimult/types.hpp"

using namespace bimult;

namespace {

// direct O(N^2) transform, the independent oracle for the FFT path
SampledFunction dft_direct(const SampledFunction& f) {
  const Grid1D& g = f.grid;
  SampledFunction out(dual_grid(g));
  for (int t = 0; t < g.point_count; ++t) {
    double xi = out.grid.point(t);
    cplx acc{0.0, 0.0};
    for (int j = 0; j < g.point_count; ++j) {
      double ph = -2.0 * M_PI * g.point(j) * xi;
      acc += f[j] * cplx{std::cos(ph), std::sin(ph)};
    }
    out[t] = g.spacing() * acc;
  }
  return out;
}

double sup_diff(const SampledFunction& a, const SampledFunction& b) {
  double m = 0.0;
  for (int j = 0; j < a.size(); ++j) m = std::max(m, std::abs(a[j] - b[j]));
  return m;
}

double sup_abs(const SampledFunction& f) {
  double m = 0.0;
  for (const cplx& v : f.values) m = std::max(m, std::abs(v));
  return m;
}

}  // namespace

TEST_CASE("grid invariants") {
  Grid1D g(8.0, 1024);
  CHECK(g.spacing() * g.point_count == doctest::Approx(2.0 * g.half_width).epsilon(1e-15));
  CHECK(g.freq_spacing() == doctest::Approx(1.0 / 16.0));
  CHECK(g.point(0) == -8.0);
  CHECK(g.point(512) == 0.0);
  CHECK(g.holds_integers());
  CHECK(g.samples_per_unit() == 64);
  CHECK_THROWS_AS(Grid1D(8.0, 7), DomainError);
  CHECK_THROWS_AS(Grid1D(-1.0, 8), DomainError);
}

TEST_CASE("sequence quasi-norms") {
  FiniteSequence zero(3);
  CHECK(lp_quasinorm(zero, 2.0 / 3.0) == 0.0);

  FiniteSequence unit(0);
  unit.at(0) = cplx{1.0, 0.0};
  CHECK(lp_quasinorm(unit, 0.5) == doctest::Approx(1.0));

  // (1^{1/2} + 1^{1/2})^2 = 4, by hand
  FiniteSequence two(1);
  two.at(0) = cplx{1.0, 0.0};
  two.at(1) = cplx{1.0, 0.0};
  CHECK(lp_quasinorm(two, 0.5) == doctest::Approx(4.0).epsilon(1e-14));

  two.at(-1) = cplx{0.0, -3.0};
  CHECK(lp_quasinorm(two, kInf) == doctest::Approx(3.0));

  CHECK_THROWS_AS(lp_quasinorm(two, 0.0), DomainError);
  CHECK_THROWS_AS(lp_quasinorm(two, -1.0), DomainError);
}

TEST_CASE("quasi-norm homogeneity and p-power subadditivity") {
  Rng rng(7);
  for (double p : {0.5, 2.0 / 3.0, 1.0, 1.5, 2.0}) {
    FiniteSequence a = random_sequence(4, rng);
    FiniteSequence b = random_sequence(4, rng);
    const cplx c{-1.25, 0.5};
    FiniteSequence ca = a;
    for (auto& v : ca.values) v *= c;
    CHECK(lp_quasinorm(ca, p) ==
          doctest::Approx(std::abs(c) * lp_quasinorm(a, p)).epsilon(1e-12));

    if (p <= 1.0) {
      FiniteSequence sum = a;
      for (int k = -4; k <= 4; ++k) sum.at(k) += b.at(k);
      double lhs = std::pow(lp_quasinorm(sum, p), p);
      double rhs = std::pow(lp_quasinorm(a, p), p) + std::pow(lp_quasinorm(b, p), p);
      CHECK(lhs <= rhs * (1.0 + 1e-12));
    }
  }
}

TEST_CASE("function quasi-norms") {
  Grid1D g(0.5, 64);
  SampledFunction one(g);
  for (auto& v : one.values) v = cplx{1.0, 0.0};
  CHECK(Lp_quasinorm(one, 3.0) == doctest::Approx(1.0).epsilon(1e-13));

  SampledFunction zero(g);
  for (double p : {0.5, 1.0, 2.0}) CHECK(Lp_quasinorm(zero, p) == 0.0);

  Grid1D g2(1.0, 128);
  SampledFunction ind(g2);
  for (int j = 0; j < g2.point_count; ++j) {
    double x = g2.point(j);
    ind[j] = (x >= 0.0 && x < 0.5) ? cplx{1.0, 0.0} : cplx{0.0, 0.0};
  }
  CHECK(Lp_quasinorm(ind, 2.0) ==
        doctest::Approx(std::sqrt(0.5)).epsilon(2.0 * g2.spacing()));
}

TEST_CASE("dft matches the direct sum and known pairs") {
  // zero in, zero out
  Grid1D g(4.0, 128);
  SampledFunction zero(g);
  CHECK(sup_abs(dft_forward(zero)) == 0.0);

  // windowed lattice exponential peaks at its own frequency with value 2L
  const int k0 = 5;
  SampledFunction mode(g);
  for (int j = 0; j < g.point_count; ++j) {
    double ph = 2.0 * M_PI * g.point(j) * g.freq(k0);
    mode[j] = cplx{std::cos(ph), std::sin(ph)};
  }
  SampledFunction mh = dft_forward(mode);
  CHECK(std::abs(mh[g.point_count / 2 + k0] - cplx{2.0 * g.half_width, 0.0}) < 1e-10);

  // fast path vs the direct sum, random data
  Rng rng(11);
  SampledFunction f(g);
  for (auto& v : f.values) v = rng.complex_gaussian();
  SampledFunction oracle = dft_direct(f);
  CHECK(sup_diff(dft_forward(f), oracle) / sup_abs(oracle) < 1e-10);

  // the Gaussian e^{-pi x^2} is its own transform
  Grid1D gg(8.0, 1024);
  SampledFunction gauss(gg);
  for (int j = 0; j < gg.point_count; ++j) {
    double x = gg.point(j);
    gauss[j] = cplx{std::exp(-M_PI * x * x), 0.0};
  }
  SampledFunction gh = dft_forward(gauss);
  double worst = 0.0;
  for (int t = 0; t < gh.size(); ++t) {
    double xi = gh.grid.point(t);
    worst = std::max(worst, std::abs(gh[t] - cplx{std::exp(-M_PI * xi * xi), 0.0}));
  }
  CHECK(worst < 1e-8);
}

TEST_CASE("dft round trip and Parseval") {
  Grid1D g(4.0, 256);
  Rng rng(3);
  SampledFunction f(g);
  for (auto& v : f.values) v = rng.complex_gaussian();

  SampledFunction back = dft_inverse(dft_forward(f), g);
  CHECK(sup_diff(back, f) / sup_abs(f) < 1e-10);

  SampledFunction zero_hat(dual_grid(g));
  CHECK(sup_abs(dft_inverse(zero_hat, g)) == 0.0);

  SampledFunction fh = dft_forward(f);
  double time_side = 0.0, freq_side = 0.0;
  for (const cplx& v : f.values) time_side += std::norm(v);
  for (const cplx& v : fh.values) freq_side += std::norm(v);
  time_side *= g.spacing();
  freq_side *= g.freq_spacing();
  CHECK(time_side == doctest::Approx(freq_side).epsilon(1e-10));
}

TEST_CASE("periodization via integer-frequency transform samples") {
  Grid1D g(8.0, 1024);
  SampledFunction gauss(g);
  for (int j = 0; j < g.point_count; ++j) {
    double x = g.point(j);
    gauss[j] = cplx{std::exp(-M_PI * x * x), 0.0};
  }
  PeriodicFunction per = periodize(gauss, 6);
  for (int n = -6; n <= 6; ++n)
    CHECK(std::abs(per.coeff(n) - cplx{std::exp(-M_PI * n * n), 0.0}) < 1e-8);

  // both sides of the summation identity agree pointwise on the grid
  for (int j = 0; j < g.point_count; j += 37) {
    double x = g.point(j);
    cplx direct{0.0, 0.0};
    for (int n = -9; n <= 9; ++n) direct += std::exp(-M_PI * (x + n) * (x + n));
    CHECK(std::abs(per.eval(x) - direct) < 1e-8);
  }

  SampledFunction zero(g);
  PeriodicFunction pz = periodize(zero, 4);
  for (const cplx& c : pz.coeffs) CHECK(std::abs(c) == 0.0);

  // Gaussian mass has not decayed on a 2-unit window
  Grid1D narrow(2.0, 256);
  SampledFunction fat(narrow);
  for (int j = 0; j < narrow.point_count; ++j) {
    double x = narrow.point(j);
    fat[j] = cplx{std::exp(-M_PI * x * x), 0.0};
  }
  CHECK_THROWS_AS(periodize(fat, 4), AccuracyError);
}

TEST_CASE("periodization of a one-cell function restricts to the function") {
  Grid1D g(4.0, 2048);
  SampledFunction f(g);
  auto bump = [](double x) {
    if (std::abs(x) >= 0.375) return 0.0;
    double u = (0.375 - std::abs(x)) / 0.125;
    if (u >= 1.0) return 1.0;
    double a = std::exp(-1.0 / u);
    return a / (a + std::exp(-1.0 / (1.0 - u)));
  };
  for (int j = 0; j < g.point_count; ++j) f[j] = cplx{bump(g.point(j)), 0.0};
  PeriodicFunction per = periodize(f, 120);
  for (int j = 0; j < g.point_count; j += 61) {
    double x = g.point(j);
    if (std::abs(x) < 0.5) CHECK(std::abs(per.eval(x) - f[j]) < 1e-6);
  }
}

TEST_CASE("integer sampling") {
  Grid1D g(4.0, 256);
  SampledFunction one(g);
  for (auto& v : one.values) v = cplx{1.0, 0.0};
  FiniteSequence s = sample_at_integers(one, 3);
  for (const cplx& v : s.values) CHECK(v == cplx{1.0, 0.0});

  // sin(pi x)/(pi x) vanishes at every nonzero integer
  SampledFunction sinc(g);
  for (int j = 0; j < g.point_count; ++j) {
    double x = g.point(j);
    sinc[j] = x == 0.0 ? cplx{1.0, 0.0} : cplx{std::sin(M_PI * x) / (M_PI * x), 0.0};
  }
  FiniteSequence d = sample_at_integers(sinc, 3);
  for (int n = -3; n <= 3; ++n) {
    if (n == 0) CHECK(std::abs(d.at(n) - cplx{1.0, 0.0}) == 0.0);
    else CHECK(std::abs(d.at(n)) < 1e-12);
  }

  SampledFunction zero(g);
  FiniteSequence z = sample_at_integers(zero, 2);
  for (const cplx& v : z.values) CHECK(v == cplx{0.0, 0.0});

  Grid1D bad(1.5, 8);  // spacing 3/8: integers miss the lattice
  SampledFunction fb(bad);
  CHECK_THROWS_AS(sample_at_integers(fb, 1), ConfigError);
  CHECK_THROWS_AS(sample_at_integers(one, 4), ConfigError);
}

TEST_CASE("exponent triples") {
  CHECK_NOTHROW(ExponentTriple(2, 2, 1));
  CHECK_NOTHROW(ExponentTriple(4, 4, 2));
  CHECK_NOTHROW(ExponentTriple(3, 3, 1.5));
  CHECK_NOTHROW(ExponentTriple(1, kInf, 1));
  CHECK_NOTHROW(ExponentTriple(2, 1, 2.0 / 3.0));
  CHECK_THROWS_AS(ExponentTriple(2, 2, 2), DomainError);
  CHECK_THROWS_AS(ExponentTriple(2, 2, 0.4), DomainError);  // p3 < 1/2
  CHECK_THROWS_AS(ExponentTriple(0.5, 2, 0.4), DomainError);
}
