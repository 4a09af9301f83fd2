#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "bimult/types.hpp"

namespace bimult {

/// Axis-aligned closed rectangle in the (xi, eta) plane.
struct Box2D {
  double xi_lo = 0.0, xi_hi = 0.0, eta_lo = 0.0, eta_hi = 0.0;
  bool contains(double xi, double eta) const {
    return xi >= xi_lo && xi <= xi_hi && eta >= eta_lo && eta <= eta_hi;
  }
};

/// Bounded symbol psi(xi, eta): an evaluation rule plus the metadata the
/// operators and checks need (periodicity, support, singular set, sup bound).
struct Symbol2D {
  std::string name;
  std::function<cplx(double, double)> eval;
  bool periodic_xi = false;   // period 1 in xi
  bool periodic_eta = false;  // period 1 in eta
  std::optional<Box2D> support_box;
  std::vector<std::string> singular_lines;  // e.g. "xi=eta"
  double sup_bound = 0.0;

  cplx operator()(double xi, double eta) const { return eval(xi, eta); }
};

// ---- smooth plateau machinery ----------------------------------------------

/// C-infinity step: 0 for u <= 0, 1 for u >= 1, strictly increasing between.
double smooth_step(double u);

/// C-infinity plateau: 0 outside [lo, hi], 1 on [lo+w, hi-w], monotone
/// transitions of width w at both ends. Requires hi - lo >= 2w.
double smooth_plateau(double x, double lo, double hi, double w);

// ---- catalogued symbols -----------------------------------------------------

/// psi == c everywhere.
Symbol2D constant_symbol(cplx c = {1.0, 0.0});

/// -i sgn(xi - eta), with sgn(0) = 0.
Symbol2D bht_symbol();

/// Product tent (1-|xi|)(1-|eta|) on [-1,1)^2, zero outside.
Symbol2D tent_lambda();

/// Time-side Fejer-square profile S(x,y) = (sin^2 4pi x / (4pi x)^2) *
/// (sin^2 4pi y / (4pi y)^2), with value 1 at the removable singularities.
Symbol2D fejer_square_symbol();

/// Indicator of the half-open box [-1/2, 1/2)^2.
Symbol2D indicator_box();

/// e^{2 pi i (j xi + k eta)}, 1-periodic in both variables.
Symbol2D trig_symbol(int j = 1, int k = 1);

/// Tent with arguments scaled by 2, support exactly [-1/2, 1/2]^2.
Symbol2D scaled_tent_cell();

/// Smooth product plateau supported in [-3/8, 3/8]^2 (a mollified box that
/// fits inside the unit cell), identically 1 on [-1/4, 1/4]^2.
Symbol2D mollified_box_cell();

/// bht_symbol restricted to the half-open unit cell.
Symbol2D bht_cell();

// ---- plateau bumps ----------------------------------------------------------

enum class BumpFlavor { support_side, frequency_side };

/// The fixed support-side bump profile: smooth, supported in [1/8, 7/8]
/// (hence in [0,1]), identically 1 on [1/4, 3/4], transitions of width 1/8.
double support_bump(double x);

/// The designed transform of the frequency-side bump: identically 1 on
/// [-1/2, 1/2], supported in [-1, 1], smooth.
double frequency_bump_profile(double xi);

struct Bump {
  SampledFunction samples;  // time-side samples on the requested grid
  // exact design rule: the time profile for support_side,
  // the frequency profile for frequency_side
  std::function<double(double)> profile;
  BumpFlavor flavor;
};

/// Samples the requested bump on a grid. support_side samples the plateau
/// profile directly; frequency_side samples the inverse transform of
/// frequency_bump_profile (computed by quadrature).
Bump bump_phi(BumpFlavor flavor, const Grid1D& grid);

}  // namespace bimult
