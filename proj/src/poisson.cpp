#include "bimult/poisson.hpp"

#include <cmath>

namespace bimult {

PeriodicFunction periodize(const SampledFunction& f, int degree, double tail_tol) {
  const Grid1D& g = f.grid;
  if (!g.holds_integers())
    throw ConfigError("periodize: grid spacing must divide 1 so integer frequencies exist");
  if (g.half_width < 1.0)
    throw ConfigError("periodize: grid must cover at least one period");

  // tail check: l^1 mass in the outermost unit vs total
  double total = 0.0, tail = 0.0;
  for (int j = 0; j < g.point_count; ++j) {
    double m = std::abs(f[j]);
    total += m;
    if (std::abs(g.point(j)) >= g.half_width - 1.0) tail += m;
  }
  if (total > 0.0 && tail / total > tail_tol)
    throw AccuracyError("periodize: tail mass above tolerance", tail / total);

  SampledFunction fh = dft_forward(f);
  const int spu_freq = static_cast<int>(std::llround(2.0 * g.half_width));  // 1 / dxi
  const int max_degree = (g.point_count / 2 - 1) / spu_freq;
  if (degree > max_degree)
    throw ConfigError("periodize: requested degree exceeds the dual box");

  PeriodicFunction out(degree);
  const int half = g.point_count / 2;
  for (int n = -degree; n <= degree; ++n) out.coeff(n) = fh[half + n * spu_freq];
  return out;
}

FiniteSequence sample_at_integers(const SampledFunction& f, int radius) {
  const Grid1D& g = f.grid;
  if (!g.holds_integers())
    throw ConfigError("sample_at_integers: integers are not on the grid (1/h not integral)");
  if (radius >= g.half_width)
    throw ConfigError("sample_at_integers: radius reaches past the grid");
  const int spu = g.samples_per_unit();
  const int j0 = g.point_count / 2;  // index of x = 0
  FiniteSequence out(radius);
  for (int n = -radius; n <= radius; ++n) out.at(n) = f[j0 + n * spu];
  return out;
}

}  // namespace bimult
