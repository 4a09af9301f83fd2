#include "bimult/operators.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>

#include "bimult/dft.hpp"

namespace bimult {

namespace {

void require_same_grid(const SampledFunction& f, const SampledFunction& g) {
  if (!(f.grid == g.grid)) throw DomainError("operator inputs must share one grid");
}

bool finite(const cplx& z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

}  // namespace

SampledFunction apply_C(const Symbol2D& psi, const SampledFunction& f,
                        const SampledFunction& g) {
  require_same_grid(f, g);
  const Grid1D& grid = f.grid;
  const int n = grid.point_count;
  const int half = n / 2;
  const double dxi = grid.freq_spacing();

  const SampledFunction fh = dft_forward(f);
  const SampledFunction gh = dft_forward(g);

  // u[m + n] = dxi * sum_k fhat(xi_k) ghat(xi_{m-k}) psi(xi_k, xi_{m-k}),
  // the diagonal s = m * dxi of the doubled frequency lattice, m in [-n, n-2].
  std::vector<cplx> u(2 * static_cast<size_t>(n), cplx{0.0, 0.0});
  std::atomic<bool> bad{false};
#pragma omp parallel for schedule(static)
  for (int m = -n; m <= n - 2; ++m) {
    const int k_lo = std::max(-half, m - half + 1);
    const int k_hi = std::min(half - 1, m + half);
    cplx acc{0.0, 0.0};
    for (int k = k_lo; k <= k_hi; ++k) {
      const int l = m - k;
      acc += fh[half + k] * gh[half + l] * psi(grid.freq(k), grid.freq(l));
    }
    if (!finite(acc)) bad.store(true, std::memory_order_relaxed);
    u[static_cast<size_t>(m + n)] = dxi * acc;
  }
  if (bad.load()) throw DomainError("apply_C: symbol evaluated to a non-finite value");

  // out(x_j) = dxi * sum_m u_m (-1)^m e^{2 pi i j m / n}; the phase has
  // period n in m, so fold the diagonals onto n residues and run one
  // unnormalized backward FFT.
  std::vector<cplx> folded(static_cast<size_t>(n), cplx{0.0, 0.0});
  for (int m = -n; m <= n - 2; ++m) {
    int r = ((m % n) + n) % n;
    double sign = (m % 2 == 0) ? 1.0 : -1.0;
    folded[static_cast<size_t>(r)] += sign * u[static_cast<size_t>(m + n)];
  }
  std::vector<cplx> raw;
  detail::raw_dft(folded, raw, +1);
  SampledFunction out(grid);
  for (int j = 0; j < n; ++j) out[j] = dxi * raw[static_cast<size_t>(j)];
  return out;
}

SampledFunction apply_C_slow(const Symbol2D& psi, const SampledFunction& f,
                             const SampledFunction& g) {
  require_same_grid(f, g);
  const Grid1D& grid = f.grid;
  const int n = grid.point_count;
  const int half = n / 2;
  const double dxi = grid.freq_spacing();

  const SampledFunction fh = dft_forward(f);
  const SampledFunction gh = dft_forward(g);

  // e^{2 pi i x_j (xi_k + xi_l)} = (-1)^{k+l} e^{2 pi i j (k+l) / n};
  // fold the sign into the tabulated products.
  std::vector<cplx> prod(static_cast<size_t>(n) * n);
  for (int k = -half; k < half; ++k) {
    for (int l = -half; l < half; ++l) {
      cplx v = fh[half + k] * gh[half + l] * psi(grid.freq(k), grid.freq(l));
      if (!finite(v)) throw DomainError("apply_C_slow: symbol evaluated to a non-finite value");
      double sign = ((k + l) % 2 == 0) ? 1.0 : -1.0;
      prod[static_cast<size_t>(k + half) * n + (l + half)] = sign * v;
    }
  }

  SampledFunction out(grid);
  std::vector<cplx> phase(static_cast<size_t>(n));
  for (int j = 0; j < n; ++j) {
    for (int r = 0; r < n; ++r) {
      double ph = 2.0 * M_PI * j * r / n;
      phase[static_cast<size_t>(r)] = cplx{std::cos(ph), std::sin(ph)};
    }
    cplx acc{0.0, 0.0};
    for (int k = 0; k < n; ++k) {
      const cplx* row = &prod[static_cast<size_t>(k) * n];
      for (int l = 0; l < n; ++l) {
        int r = k + l - 2 * half;  // k+l with both indices recentered
        r = ((r % n) + n) % n;
        acc += row[l] * phase[static_cast<size_t>(r)];
      }
    }
    out[j] = dxi * dxi * acc;
  }
  return out;
}

PeriodicFunction apply_P(const FiniteSequence2D& phi, const PeriodicFunction& F,
                         const PeriodicFunction& G) {
  const int out_degree = F.degree + G.degree;
  PeriodicFunction out(out_degree);
  for (int s = -out_degree; s <= out_degree; ++s) {
    const int n_lo = std::max(-F.degree, s - G.degree);
    const int n_hi = std::min(F.degree, s + G.degree);
    cplx acc{0.0, 0.0};
    for (int n = n_lo; n <= n_hi; ++n)
      acc += F.coeff(n) * G.coeff(s - n) * phi.at_or_zero(n, s - n);
    out.coeff(s) = acc;
  }
  return out;
}

namespace {

void check_apply_d_args(const Symbol2D& psi, const FiniteSequence& a, const FiniteSequence& b,
                        int quad_points, int out_radius) {
  if (!psi.periodic_xi || !psi.periodic_eta)
    throw DomainError("apply_D: symbol must be 1-periodic in both variables");
  const int guard = 4 * (a.support_radius + b.support_radius + out_radius);
  if (quad_points < guard)
    throw ConfigError("apply_D: quad_points below the Nyquist guard 4*(Ra+Rb+|l|max)");
}

}  // namespace

FiniteSequence apply_D(const Symbol2D& psi, const FiniteSequence& a, const FiniteSequence& b,
                       int quad_points, int out_radius) {
  check_apply_d_args(psi, a, b, quad_points, out_radius);
  const int q_n = quad_points;

  std::vector<cplx> ahat(static_cast<size_t>(q_n)), bhat(static_cast<size_t>(q_n));
  for (int q = 0; q < q_n; ++q) {
    double t = static_cast<double>(q) / q_n;
    ahat[static_cast<size_t>(q)] = a.symbol_eval(t);
    bhat[static_cast<size_t>(q)] = b.symbol_eval(t);
  }

  // e^{2 pi i l (theta_q + rho_r)} depends only on t = (q+r) mod Q, so group
  // the quadrature nodes by diagonal first. Each diagonal is an independent
  // fixed-order sum; the loop parallelizes over t.
  std::vector<cplx> diag(static_cast<size_t>(q_n), cplx{0.0, 0.0});
#pragma omp parallel for schedule(static)
  for (int t = 0; t < q_n; ++t) {
    cplx acc{0.0, 0.0};
    for (int q = 0; q < q_n; ++q) {
      int r = t - q;
      if (r < 0) r += q_n;
      acc += ahat[static_cast<size_t>(q)] * bhat[static_cast<size_t>(r)] *
             psi(static_cast<double>(q) / q_n, static_cast<double>(r) / q_n);
    }
    diag[static_cast<size_t>(t)] = acc;
  }

  FiniteSequence out(out_radius);
  const double norm = 1.0 / (static_cast<double>(q_n) * q_n);
  for (int l = -out_radius; l <= out_radius; ++l) {
    cplx acc{0.0, 0.0};
    for (int t = 0; t < q_n; ++t) {
      double ph = 2.0 * M_PI * l * t / static_cast<double>(q_n);
      acc += diag[static_cast<size_t>(t)] * cplx{std::cos(ph), std::sin(ph)};
    }
    out.at(l) = norm * acc;
  }
  return out;
}

FiniteSequence apply_D_reference(const Symbol2D& psi, const FiniteSequence& a,
                                 const FiniteSequence& b, int quad_points, int out_radius) {
  check_apply_d_args(psi, a, b, quad_points, out_radius);
  const int q_n = quad_points;
  FiniteSequence out(out_radius);
  const double norm = 1.0 / (static_cast<double>(q_n) * q_n);
  for (int l = -out_radius; l <= out_radius; ++l) {
    cplx acc{0.0, 0.0};
    for (int q = 0; q < q_n; ++q) {
      double theta = static_cast<double>(q) / q_n;
      for (int r = 0; r < q_n; ++r) {
        double rho = static_cast<double>(r) / q_n;
        double ph = 2.0 * M_PI * l * (theta + rho);
        acc += a.symbol_eval(theta) * b.symbol_eval(rho) * psi(theta, rho) *
               cplx{std::cos(ph), std::sin(ph)};
      }
    }
    out.at(l) = norm * acc;
  }
  return out;
}

KernelTable compute_K(const Symbol2D& psi, int radius, int quad_points) {
  if (!psi.periodic_xi || !psi.periodic_eta)
    throw DomainError("compute_K: symbol must be 1-periodic in both variables");
  const int q_n = quad_points;
  const int side = 2 * radius + 1;

  // row pass: G_q(m) = (1/Q) sum_r psi(q/Q, r/Q) e^{2 pi i r m / Q}
  std::vector<cplx> row_coeff(static_cast<size_t>(q_n) * side);
#pragma omp parallel for schedule(static)
  for (int q = 0; q < q_n; ++q) {
    std::vector<cplx> row(static_cast<size_t>(q_n));
    double xi = static_cast<double>(q) / q_n;
    for (int r = 0; r < q_n; ++r) row[static_cast<size_t>(r)] = psi(xi, static_cast<double>(r) / q_n);
    for (int m = -radius; m <= radius; ++m) {
      cplx acc{0.0, 0.0};
      for (int r = 0; r < q_n; ++r) {
        double ph = 2.0 * M_PI * m * r / static_cast<double>(q_n);
        acc += row[static_cast<size_t>(r)] * cplx{std::cos(ph), std::sin(ph)};
      }
      row_coeff[static_cast<size_t>(q) * side + (m + radius)] = acc / static_cast<double>(q_n);
    }
  }

  KernelTable table;
  table.coeffs = FiniteSequence2D(radius);
#pragma omp parallel for schedule(static)
  for (int n = -radius; n <= radius; ++n) {
    for (int m = -radius; m <= radius; ++m) {
      cplx acc{0.0, 0.0};
      for (int q = 0; q < q_n; ++q) {
        double ph = 2.0 * M_PI * n * q / static_cast<double>(q_n);
        acc += row_coeff[static_cast<size_t>(q) * side + (m + radius)] *
               cplx{std::cos(ph), std::sin(ph)};
      }
      table.coeffs.at(n, m) = acc / static_cast<double>(q_n);
    }
  }

  double shell = 0.0;
  for (int n = -radius; n <= radius; ++n)
    for (int m = -radius; m <= radius; ++m)
      if (std::abs(n) == radius || std::abs(m) == radius)
        shell = std::max(shell, std::abs(table.coeffs.at(n, m)));
  table.boundary_max = shell;
  return table;
}

KernelSeriesResult apply_kernel_series(const FiniteSequence2D& K, const SampledFunction& f,
                                       const SampledFunction& g) {
  require_same_grid(f, g);
  const Grid1D& grid = f.grid;
  if (!grid.holds_integers())
    throw ConfigError("apply_kernel_series: integer shifts are not grid-aligned");
  const int spu = grid.samples_per_unit();
  const int n_pts = grid.point_count;
  const int radius = K.support_radius;

  KernelSeriesResult res;
  res.value = SampledFunction(grid);
#pragma omp parallel for schedule(static)
  for (int j = 0; j < n_pts; ++j) {
    cplx acc{0.0, 0.0};
    for (int n = -radius; n <= radius; ++n) {
      const int jf = j - n * spu;
      if (jf < 0 || jf >= n_pts) continue;
      const cplx fv = f[jf];
      if (fv == cplx{0.0, 0.0}) continue;
      for (int m = -radius; m <= radius; ++m) {
        const int jg = j - m * spu;
        if (jg < 0 || jg >= n_pts) continue;
        acc += K.at(n, m) * fv * g[jg];
      }
    }
    res.value[j] = acc;
  }

  // Shifted copies read past the window for outputs near the boundary; that
  // is sound only when the inputs have decayed by the boundary. Record a
  // truncation warning when the outermost unit still carries mass, or when
  // the shifts reach across the whole window.
  double fmax = 0.0, gmax = 0.0, fedge = 0.0, gedge = 0.0;
  for (int j = 0; j < n_pts; ++j) {
    double x = grid.point(j);
    double fa = std::abs(f[j]), ga = std::abs(g[j]);
    fmax = std::max(fmax, fa);
    gmax = std::max(gmax, ga);
    if (std::abs(x) > grid.half_width - 1.0) {
      fedge = std::max(fedge, fa);
      gedge = std::max(gedge, ga);
    }
  }
  double rel = 0.0;
  if (fmax > 0.0) rel = std::max(rel, fedge / fmax);
  if (gmax > 0.0) rel = std::max(rel, gedge / gmax);
  res.clipped_fraction = rel;
  res.truncated = rel > 1e-12 || radius >= 2.0 * grid.half_width;
  return res;
}

SampledFunction bht_timedomain(const SampledFunction& f, const SampledFunction& g,
                               double cutoff) {
  require_same_grid(f, g);
  const Grid1D& grid = f.grid;
  const double h = grid.spacing();
  if (cutoff < h) throw DomainError("bht_timedomain: cutoff must be at least the grid spacing");
  const int n = grid.point_count;
  const int k0 = std::max(1, static_cast<int>(std::ceil(cutoff / h - 1e-12)));
  const int k1 = n / 2;  // |t| <= L

  SampledFunction out(grid);
#pragma omp parallel for schedule(static)
  for (int j = 0; j < n; ++j) {
    auto pair_at = [&](int k) -> cplx {
      // paired +-t nodes: f(x-t)g(x+t) - f(x+t)g(x-t)
      const int jm = j - k, jp = j + k;
      cplx fm = (jm >= 0 && jm < n) ? f[jm] : cplx{0.0, 0.0};
      cplx fp = (jp >= 0 && jp < n) ? f[jp] : cplx{0.0, 0.0};
      cplx gm = (jm >= 0 && jm < n) ? g[jm] : cplx{0.0, 0.0};
      cplx gp = (jp >= 0 && jp < n) ? g[jp] : cplx{0.0, 0.0};
      return fm * gp - fp * gm;
    };
    cplx acc{0.0, 0.0};
    for (int k = k0; k <= k1; ++k) acc += pair_at(k) / static_cast<double>(k);
    // The k >= 1 node sum drops half of the first cell of the paired-odd
    // integrand, an O(h) bias at the origin. Restore it from the
    // extrapolated origin value 2 phi(h) - phi(2h); only meaningful when
    // the cutoff sits at the first node.
    if (k0 == 1 && k1 >= 2) acc += pair_at(1) - 0.25 * pair_at(2);
    out[j] = acc / M_PI;
  }
  return out;
}

}  // namespace bimult
