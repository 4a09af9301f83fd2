#include "bimult/transference.hpp"

#include <algorithm>
#include <cmath>

#include "bimult/quadrature.hpp"

namespace bimult {

LiftedPair lift_sequences(const FiniteSequence& a, const FiniteSequence& b,
                          BumpFlavor flavor, const Grid1D& grid) {
  const int radius = std::max(a.support_radius, b.support_radius);
  // translate k occupies [k, k+1] for the support-side bump
  if (grid.half_width < radius + 1)
    throw ConfigError("lift_sequences: grid too narrow for the requested shifts");
  if (!grid.holds_integers())
    throw ConfigError("lift_sequences: integer shifts are not grid-aligned");

  LiftedPair out;
  out.a = a;
  out.b = b;
  out.bump = flavor;
  out.f_a = SampledFunction(grid);
  out.g_b = SampledFunction(grid);

  if (flavor == BumpFlavor::support_side) {
    for (int j = 0; j < grid.point_count; ++j) {
      double x = grid.point(j);
      cplx fa{0.0, 0.0}, gb{0.0, 0.0};
      for (int k = -a.support_radius; k <= a.support_radius; ++k)
        fa += a.at(k) * support_bump(x - k);
      for (int k = -b.support_radius; k <= b.support_radius; ++k)
        gb += b.at(k) * support_bump(x - k);
      out.f_a[j] = fa;
      out.g_b[j] = gb;
    }
    out.norm_constant = 1.0;  // disjoint translates, max Phi = 1
    return out;
  }

  // frequency-side bump: shift the sampled profile by whole grid units
  Bump bump = bump_phi(BumpFlavor::frequency_side, grid);
  const int spu = grid.samples_per_unit();
  auto shifted = [&](int k, int j) -> cplx {
    int idx = j - k * spu;
    if (idx < 0 || idx >= grid.point_count) return {0.0, 0.0};
    return bump.samples[idx];
  };
  for (int j = 0; j < grid.point_count; ++j) {
    cplx fa{0.0, 0.0}, gb{0.0, 0.0};
    for (int k = -a.support_radius; k <= a.support_radius; ++k) fa += a.at(k) * shifted(k, j);
    for (int k = -b.support_radius; k <= b.support_radius; ++k) gb += b.at(k) * shifted(k, j);
    out.f_a[j] = fa;
    out.g_b[j] = gb;
  }
  // overlapping translates: measure sup_x sum_l |Phi(x-l)| over one period
  double c = 0.0;
  for (int j = 0; j < spu; ++j) {
    double s = 0.0;
    for (int l = -grid.point_count / spu; l <= grid.point_count / spu; ++l) {
      int idx = j + grid.point_count / 2 - l * spu;
      if (idx >= 0 && idx < grid.point_count) s += std::abs(bump.samples[idx]);
    }
    c = std::max(c, s);
  }
  out.norm_constant = c;
  return out;
}

RestrictionReport restrict_periodic_to_Z(const Symbol2D& psi, const FiniteSequence& a,
                                         const FiniteSequence& b, int j_radius,
                                         const Grid1D& grid, int quad_points) {
  if (!psi.periodic_xi || !psi.periodic_eta)
    throw DomainError("restrict_periodic_to_Z: symbol must be 1-periodic in both variables");
  if (grid.half_width < j_radius + 1)
    throw ConfigError("restrict_periodic_to_Z: grid too narrow for the index window");

  RestrictionReport rep;
  rep.d = apply_D(psi, a, b, quad_points, j_radius);

  LiftedPair lifted = lift_sequences(a, b, BumpFlavor::support_side, grid);
  SampledFunction c = apply_C(psi, lifted.f_a, lifted.g_b);

  const int spu = grid.samples_per_unit();
  const int quarter = spu / 4;
  if (quarter == 0)
    throw ConfigError("restrict_periodic_to_Z: grid too coarse to sample the plateau");
  double dev = 0.0;
  for (int j = -j_radius; j <= j_radius; ++j) {
    const int base =
        static_cast<int>(std::llround((j + grid.half_width) / grid.spacing()));  // x = j
    // open middle of I_j = [j+1/4, j+3/4]
    for (int t = base + quarter + 1; t < base + 3 * quarter; ++t)
      dev = std::max(dev, std::abs(c[t] - rep.d.at(j)));
  }
  rep.max_deviation = dev;
  return rep;
}

Symbol2D periodize_symbol(const Symbol2D& psi) {
  if (!psi.support_box.has_value())
    throw DomainError("periodize_symbol: symbol must declare a support box");
  const Box2D& box = *psi.support_box;
  if (box.xi_lo < -0.5 || box.xi_hi > 0.5 || box.eta_lo < -0.5 || box.eta_hi > 0.5)
    throw DomainError("periodize_symbol: support exceeds the unit cell [-1/2,1/2]^2");

  Symbol2D out;
  out.name = psi.name + "-periodized";
  auto inner = psi.eval;
  out.eval = [inner](double xi, double eta) {
    double u = xi - std::floor(xi + 0.5);
    double v = eta - std::floor(eta + 0.5);
    return inner(u, v);
  };
  out.periodic_xi = true;
  out.periodic_eta = true;
  out.sup_bound = psi.sup_bound;
  out.singular_lines = psi.singular_lines;
  return out;
}

FiniteSequence2D dilate_phi(const FiniteSequence2D& phi, int k) {
  if (k < 1) throw DomainError("dilate_phi: k must be a positive integer");
  FiniteSequence2D out(phi.support_radius * k);
  for (int n = -out.support_radius; n <= out.support_radius; ++n) {
    for (int m = -out.support_radius; m <= out.support_radius; ++m) {
      if (n % k == 0 && m % k == 0) out.at(n, m) = phi.at(n / k, m / k);
    }
  }
  return out;
}

PeriodicFunction fold_function(const PeriodicFunction& f, int k) {
  if (k < 1) throw DomainError("fold_function: k must be a positive integer");
  PeriodicFunction out(f.degree / k);
  for (int n = -out.degree; n <= out.degree; ++n) out.coeff(n) = f.coeff(k * n);
  return out;
}

FiniteSequence2D convolve_symbol(const FiniteSequence2D& a, const FiniteSequence2D& phi) {
  FiniteSequence2D out(a.support_radius + phi.support_radius);
  for (int n = -out.support_radius; n <= out.support_radius; ++n) {
    for (int m = -out.support_radius; m <= out.support_radius; ++m) {
      cplx acc{0.0, 0.0};
      for (int l = -a.support_radius; l <= a.support_radius; ++l)
        for (int k = -a.support_radius; k <= a.support_radius; ++k)
          acc += a.at(l, k) * phi.at_or_zero(n - l, m - k);
      out.at(n, m) = acc;
    }
  }
  return out;
}

JodeitExtension jodeit_extend(const FiniteSequence2D& phi,
                              const std::function<cplx(double, double)>& S_hat,
                              double decay_p, int window) {
  JodeitExtension out;
  const int radius = phi.support_radius;
  FiniteSequence2D coeffs = phi;
  out.symbol.name = "jodeit";
  out.symbol.eval = [coeffs, S_hat, radius](double xi, double eta) {
    cplx acc{0.0, 0.0};
    for (int n = -radius; n <= radius; ++n)
      for (int m = -radius; m <= radius; ++m)
        acc += coeffs.at(n, m) * S_hat(xi - n, eta - m);
    return acc;
  };
  double phimax = 0.0;
  for (const cplx& v : phi.values) phimax = std::max(phimax, std::abs(v));
  out.symbol.sup_bound = 0.0;  // not known in general; set below from the diagnostic
  // The periodized profile's coefficients are the transform samples at the
  // integer lattice, so the summability diagnostic reads Shat there.
  TranslateDecayDiagnostic& d = out.diagnostic;
  d.window = window;
  std::vector<double> shell(static_cast<size_t>(window) + 1, 0.0);
  for (int n = -window; n <= window; ++n) {
    for (int m = -window; m <= window; ++m) {
      double v = std::pow(std::abs(S_hat(static_cast<double>(n), static_cast<double>(m))),
                          decay_p);
      d.power_sum += v;
      shell[static_cast<size_t>(std::max(std::abs(n), std::abs(m)))] += v;
    }
  }
  d.power_sum_root = std::pow(d.power_sum, 1.0 / decay_p);
  d.last_shell_mass = shell[static_cast<size_t>(window)];
  // tails should shrink; flag when the outer shells stopped decreasing
  d.divergence_warning = window >= 4 && shell[static_cast<size_t>(window)] >=
                                            shell[static_cast<size_t>(window / 2)];
  out.symbol.sup_bound = phimax * std::max(d.power_sum, d.power_sum_root);
  return out;
}

Symbol2D tent_extend(const FiniteSequence2D& phi) {
  Symbol2D out;
  out.name = "tent-extension";
  const int radius = phi.support_radius;
  FiniteSequence2D coeffs = phi;
  out.eval = [coeffs, radius](double xi, double eta) {
    // bilinear interpolation between the four neighboring lattice values;
    // grouped per row so that equal corners reproduce exactly
    const double nf = std::floor(xi), mf = std::floor(eta);
    const int n0 = static_cast<int>(nf), m0 = static_cast<int>(mf);
    const double fu = xi - nf, fv = eta - mf;
    const double wx[2] = {1.0 - fu, fu};
    const double wy[2] = {1.0 - fv, fv};
    cplx acc{0.0, 0.0};
    for (int i = 0; i < 2; ++i) {
      cplx row = coeffs.at_or_zero(n0 + i, m0) * wy[0] +
                 coeffs.at_or_zero(n0 + i, m0 + 1) * wy[1];
      acc += wx[i] * row;
    }
    return acc;
  };
  double phimax = 0.0;
  for (const cplx& v : phi.values) phimax = std::max(phimax, std::abs(v));
  out.sup_bound = 4.0 * phimax;
  out.support_box = Box2D{-(radius + 1.0), radius + 1.0, -(radius + 1.0), radius + 1.0};
  return out;
}

SklCoefficientTable s_kl_coefficient_table(int k_max, int n_max, int quad_nodes) {
  SklCoefficientTable t;
  t.k_max = k_max;
  t.n_max = n_max;
  t.factors.resize(static_cast<size_t>(2 * k_max + 1) * (2 * n_max + 1));

  auto profile = [](double x) {
    double u = 4.0 * M_PI * x;
    if (u == 0.0) return 1.0;
    double s = std::sin(u) / u;
    return s * s;
  };

  for (int k = -k_max; k <= k_max; ++k) {
    const double lo = 0.5 * k - 0.25, hi = 0.5 * k + 0.25;  // k/2 + J/2
    for (int n = -n_max; n <= n_max; ++n) {
      auto integrand = [&](double x) {
        double ph = -2.0 * M_PI * n * x;
        return cplx{std::cos(ph), std::sin(ph)} * profile(x);
      };
      t.factors[static_cast<size_t>(k + k_max) * (2 * n_max + 1) + (n + n_max)] =
          composite_simpson(integrand, lo, hi, quad_nodes);
    }
  }

  double best = 0.0;
  for (int k = -k_max; k <= k_max; ++k)
    for (int l = -k_max; l <= k_max; ++l)
      for (int n = -n_max; n <= n_max; ++n)
        for (int m = -n_max; m <= n_max; ++m) {
          double w = (1.0 + double(k) * k) * (1.0 + double(n) * n) * (1.0 + double(l) * l) *
                     (1.0 + double(m) * m);
          double r = std::abs(t.value(k, l, n, m)) * w;
          if (r > best) {
            best = r;
            t.arg_k = k;
            t.arg_n = n;
            t.arg_l = l;
            t.arg_m = m;
          }
        }
  t.bound_constant = best;
  return t;
}

Symbol2D piecewise_constant_extend(const FiniteSequence2D& phi) {
  Symbol2D out;
  out.name = "box-extension";
  FiniteSequence2D coeffs = phi;
  out.eval = [coeffs](double xi, double eta) {
    // half-open cells: xi = n + 1/2 belongs to cell n+1
    const int n = static_cast<int>(std::floor(xi + 0.5));
    const int m = static_cast<int>(std::floor(eta + 0.5));
    return coeffs.at_or_zero(n, m);
  };
  double phimax = 0.0;
  for (const cplx& v : phi.values) phimax = std::max(phimax, std::abs(v));
  out.sup_bound = phimax;
  const double r = phi.support_radius + 0.5;
  out.support_box = Box2D{-r, r, -r, r};
  return out;
}

FiniteSequence2D theta2_coefficients(const FiniteSequence2D& phi) {
  FiniteSequence2D phi2 = dilate_phi(phi, 2);
  FiniteSequence2D out(phi2.support_radius + 1);
  for (int n = -out.support_radius; n <= out.support_radius; ++n)
    for (int m = -out.support_radius; m <= out.support_radius; ++m)
      out.at(n, m) = phi2.at_or_zero(n, m) + phi2.at_or_zero(n - 1, m) +
                     phi2.at_or_zero(n, m - 1) + phi2.at_or_zero(n - 1, m - 1);
  return out;
}

Symbol2D theta2_interpolant(const FiniteSequence2D& phi) {
  Symbol2D out = tent_extend(theta2_coefficients(phi));
  out.name = "theta2-interpolant";
  return out;
}

double chi_tilde(double u) {
  double frac = u - 2.0 * std::floor(u / 2.0);  // in [0, 2)
  return frac < 1.0 ? 1.0 : 0.0;
}

Symbol2D psi2_symbol(const FiniteSequence2D& phi) {
  Symbol2D theta = theta2_interpolant(phi);
  Symbol2D out;
  out.name = "psi2";
  auto inner = theta.eval;
  out.eval = [inner](double xi, double eta) {
    double w = chi_tilde(xi) * chi_tilde(eta);
    return w == 0.0 ? cplx{0.0, 0.0} : w * inner(xi, eta);
  };
  out.sup_bound = theta.sup_bound;
  return out;
}

Symbol2D assemble_from_psi2(const Symbol2D& psi2) {
  Symbol2D out;
  out.name = "assembled";
  auto inner = psi2.eval;
  out.eval = [inner](double xi, double eta) {
    return inner(2.0 * xi, 2.0 * eta) + inner(2.0 * xi + 1.0, 2.0 * eta) +
           inner(2.0 * xi, 2.0 * eta + 1.0) + inner(2.0 * xi + 1.0, 2.0 * eta + 1.0);
  };
  out.sup_bound = psi2.sup_bound;
  return out;
}

}  // namespace bimult
