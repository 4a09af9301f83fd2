#include "bimult/symbols.hpp"

#include <cmath>

#include "bimult/quadrature.hpp"

namespace bimult {

namespace {

double bump_q(double u) { return u <= 0.0 ? 0.0 : std::exp(-1.0 / u); }

double sinc_sq_4pi(double x) {
  double u = 4.0 * M_PI * x;
  if (u == 0.0) return 1.0;
  double s = std::sin(u) / u;
  return s * s;
}

double sgn(double t) { return t > 0.0 ? 1.0 : (t < 0.0 ? -1.0 : 0.0); }

}  // namespace

double smooth_step(double u) {
  if (u <= 0.0) return 0.0;
  if (u >= 1.0) return 1.0;
  double a = bump_q(u);
  return a / (a + bump_q(1.0 - u));
}

double smooth_plateau(double x, double lo, double hi, double w) {
  if (x <= lo || x >= hi) return 0.0;
  if (x < lo + w) return smooth_step((x - lo) / w);
  if (x > hi - w) return smooth_step((hi - x) / w);
  return 1.0;
}

Symbol2D constant_symbol(cplx c) {
  Symbol2D s;
  s.name = "one";
  s.eval = [c](double, double) { return c; };
  s.periodic_xi = true;
  s.periodic_eta = true;
  s.sup_bound = std::abs(c);
  return s;
}

Symbol2D bht_symbol() {
  Symbol2D s;
  s.name = "bht";
  s.eval = [](double xi, double eta) { return cplx{0.0, -sgn(xi - eta)}; };
  s.sup_bound = 1.0;
  s.singular_lines = {"xi=eta"};
  return s;
}

Symbol2D tent_lambda() {
  Symbol2D s;
  s.name = "tent";
  s.eval = [](double xi, double eta) {
    if (xi < -1.0 || xi >= 1.0 || eta < -1.0 || eta >= 1.0) return cplx{0.0, 0.0};
    return cplx{(1.0 - std::abs(xi)) * (1.0 - std::abs(eta)), 0.0};
  };
  s.support_box = Box2D{-1.0, 1.0, -1.0, 1.0};
  s.sup_bound = 1.0;
  return s;
}

Symbol2D fejer_square_symbol() {
  Symbol2D s;
  s.name = "fejer2";
  s.eval = [](double x, double y) { return cplx{sinc_sq_4pi(x) * sinc_sq_4pi(y), 0.0}; };
  s.sup_bound = 1.0;
  return s;
}

Symbol2D indicator_box() {
  Symbol2D s;
  s.name = "box";
  s.eval = [](double xi, double eta) {
    bool in = xi >= -0.5 && xi < 0.5 && eta >= -0.5 && eta < 0.5;
    return cplx{in ? 1.0 : 0.0, 0.0};
  };
  s.support_box = Box2D{-0.5, 0.5, -0.5, 0.5};
  s.sup_bound = 1.0;
  return s;
}

Symbol2D trig_symbol(int j, int k) {
  Symbol2D s;
  s.name = "trig";
  s.eval = [j, k](double xi, double eta) {
    double ph = 2.0 * M_PI * (j * xi + k * eta);
    return cplx{std::cos(ph), std::sin(ph)};
  };
  s.periodic_xi = true;
  s.periodic_eta = true;
  s.sup_bound = 1.0;
  return s;
}

Symbol2D scaled_tent_cell() {
  Symbol2D s;
  s.name = "tentcell";
  s.eval = [](double xi, double eta) {
    double u = 2.0 * xi, v = 2.0 * eta;
    if (u < -1.0 || u >= 1.0 || v < -1.0 || v >= 1.0) return cplx{0.0, 0.0};
    return cplx{(1.0 - std::abs(u)) * (1.0 - std::abs(v)), 0.0};
  };
  s.support_box = Box2D{-0.5, 0.5, -0.5, 0.5};
  s.sup_bound = 1.0;
  return s;
}

Symbol2D mollified_box_cell() {
  Symbol2D s;
  s.name = "boxmoll";
  s.eval = [](double xi, double eta) {
    return cplx{smooth_plateau(xi, -0.375, 0.375, 0.125) *
                    smooth_plateau(eta, -0.375, 0.375, 0.125),
                0.0};
  };
  s.support_box = Box2D{-0.375, 0.375, -0.375, 0.375};
  s.sup_bound = 1.0;
  return s;
}

Symbol2D bht_cell() {
  Symbol2D s;
  s.name = "bhtcell";
  s.eval = [](double xi, double eta) {
    bool in = xi >= -0.5 && xi < 0.5 && eta >= -0.5 && eta < 0.5;
    if (!in) return cplx{0.0, 0.0};
    return cplx{0.0, -sgn(xi - eta)};
  };
  s.support_box = Box2D{-0.5, 0.5, -0.5, 0.5};
  s.singular_lines = {"xi=eta"};
  s.sup_bound = 1.0;
  return s;
}

double support_bump(double x) { return smooth_plateau(x, 0.125, 0.875, 0.125); }

double frequency_bump_profile(double xi) { return smooth_plateau(xi, -1.0, 1.0, 0.5); }

Bump bump_phi(BumpFlavor flavor, const Grid1D& grid) {
  Bump b;
  b.flavor = flavor;
  b.samples = SampledFunction(grid);
  if (flavor == BumpFlavor::support_side) {
    b.profile = [](double x) { return support_bump(x); };
    for (int j = 0; j < grid.point_count; ++j)
      b.samples[j] = cplx{support_bump(grid.point(j)), 0.0};
  } else {
    b.profile = [](double xi) { return frequency_bump_profile(xi); };
    // Phi(x) = int_{-1}^{1} Phihat(xi) e^{2 pi i x xi} dxi; the integrand is
    // smooth and compactly supported, so composite Simpson converges fast.
    // Node count scales with the phase 2 pi L so the rule stays resolved.
    const int nodes = 4096 * std::max(1, static_cast<int>(grid.half_width / 4.0));
    for (int j = 0; j < grid.point_count; ++j) {
      double x = grid.point(j);
      auto integrand = [x](double xi) {
        double ph = 2.0 * M_PI * x * xi;
        return cplx{std::cos(ph), std::sin(ph)} * frequency_bump_profile(xi);
      };
      b.samples[j] = composite_simpson(integrand, -1.0, 1.0, nodes);
    }
  }
  return b;
}

}  // namespace bimult
