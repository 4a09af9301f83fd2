#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "bimult/dft.hpp"
#include "bimult/random.hpp"
#include "bimult/symbol_registry.hpp"
#include "bimult/symbols.hpp"

using namespace bimult;

TEST_CASE("bht symbol sign structure") {
  Symbol2D s = bht_symbol();
  CHECK(s(1.0, 0.0) == cplx{0.0, -1.0});
  CHECK(s(0.0, 1.0) == cplx{0.0, 1.0});
  for (double t : {0.0, -0.7, 2.5}) CHECK(s(t, t) == cplx{0.0, 0.0});
}

TEST_CASE("tent values and unit mass") {
  Symbol2D s = tent_lambda();
  CHECK(s(0.0, 0.0) == cplx{1.0, 0.0});
  CHECK(s(0.5, 0.5) == cplx{0.25, 0.0});
  CHECK(s(1.5, 0.0) == cplx{0.0, 0.0});

  // rectangle rule over the support; the tent integrates to one
  const int n = 800;
  double sum = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      double x = -1.0 + 2.0 * (i + 0.5) / n;
      double y = -1.0 + 2.0 * (j + 0.5) / n;
      sum += s(x, y).real();
    }
  sum *= 4.0 / (static_cast<double>(n) * n);
  CHECK(sum == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("squared-sinc profile values") {
  Symbol2D s = fejer_square_symbol();
  CHECK(s(0.0, 0.0) == cplx{1.0, 0.0});
  CHECK(std::abs(s(0.25, 0.0)) < 1e-30);  // sin(pi) = 0
  double u = std::sin(M_PI / 2.0) / (M_PI / 2.0);
  double expected = u * u * u * u;  // (4/pi^2)^2
  CHECK(s(0.125, 0.125).real() == doctest::Approx(expected).epsilon(1e-12));
  CHECK(expected == doctest::Approx(0.16425571607494938).epsilon(1e-12));
}

TEST_CASE("half-open cell indicator") {
  Symbol2D s = indicator_box();
  CHECK(s(0.0, 0.0) == cplx{1.0, 0.0});
  CHECK(s(0.5, 0.0) == cplx{0.0, 0.0});    // right endpoint excluded
  CHECK(s(-0.5, -0.5) == cplx{1.0, 0.0});  // left endpoint included
}

TEST_CASE("catalogued symbols respect their declared metadata") {
  Rng rng(2024);
  for (const auto& [id, desc] : symbol_catalogue()) {
    Symbol2D s = symbol_by_id(id);
    for (int i = 0; i < 10000; ++i) {
      double xi = rng.uniform(-3.0, 3.0);
      double eta = rng.uniform(-3.0, 3.0);
      cplx v = s(xi, eta);
      CHECK(std::abs(v) <= s.sup_bound + 1e-12);
      if (s.support_box && !s.support_box->contains(xi, eta)) CHECK(std::abs(v) == 0.0);
      if (s.periodic_xi) CHECK(std::abs(s(xi + 1.0, eta) - v) <= 1e-12);
      if (s.periodic_eta) CHECK(std::abs(s(xi, eta + 1.0) - v) <= 1e-12);
    }
  }
}

TEST_CASE("support-side bump: plateau, support, range") {
  CHECK(support_bump(0.5) == 1.0);
  CHECK(support_bump(0.25) == 1.0);
  CHECK(support_bump(0.75) == 1.0);
  CHECK(support_bump(-0.1) == 0.0);
  CHECK(support_bump(1.01) == 0.0);
  for (int i = 0; i <= 1000; ++i) {
    double x = -0.5 + 2.0 * i / 1000.0;
    double v = support_bump(x);
    CHECK(v >= 0.0);
    CHECK(v <= 1.0);
    if (x < 0.125 || x > 0.875) CHECK(v == 0.0);
  }
  // translates at distinct integers cannot overlap
  CHECK(support_bump(0.9) * support_bump(0.9 - 1.0) == 0.0);
}

TEST_CASE("frequency-side bump transforms to a plateau") {
  Grid1D grid(10.0, 640);  // dual lattice step 1/20 puts 0.4 on a node
  Bump b = bump_phi(BumpFlavor::frequency_side, grid);
  SampledFunction bh = dft_forward(b.samples);
  auto at = [&](double xi) {
    int idx = grid.point_count / 2 +
              static_cast<int>(std::llround(xi / bh.grid.spacing()));
    return bh[idx];
  };
  CHECK(std::abs(at(0.4) - cplx{1.0, 0.0}) < 1e-6);
  CHECK(std::abs(at(0.0) - cplx{1.0, 0.0}) < 1e-6);
  CHECK(std::abs(at(-0.45) - cplx{1.0, 0.0}) < 1e-6);
  CHECK(std::abs(at(1.5)) < 1e-6);
  CHECK(std::abs(at(-2.0)) < 1e-6);
}

TEST_CASE("smooth plateau transitions") {
  CHECK(smooth_step(0.0) == 0.0);
  CHECK(smooth_step(1.0) == 1.0);
  CHECK(smooth_step(0.5) == doctest::Approx(0.5));
  double prev = 0.0;
  for (int i = 0; i <= 100; ++i) {
    double v = smooth_step(i / 100.0);
    CHECK(v >= prev);  // monotone
    prev = v;
  }
  CHECK(smooth_plateau(0.0, -0.375, 0.375, 0.125) == 1.0);
  CHECK(smooth_plateau(0.4, -0.375, 0.375, 0.125) == 0.0);
}

TEST_CASE("unknown symbol id is a config error") {
  CHECK_THROWS_AS(symbol_by_id("nonsense"), ConfigError);
  CHECK_THROWS_AS(symbol_by_id("tent-periodized"), DomainError);  // support too wide
}
