#pragma once

#include <algorithm>
#include <cmath>

#include "bimult/types.hpp"

namespace bimult {

namespace detail {
inline void require_positive_p(double p) {
  if (std::isinf(p) && p > 0) return;
  if (!(p > 0.0)) throw DomainError("quasi-norm exponent p must be positive or infinity");
}
}  // namespace detail

/// l^p quasi-norm (sum |a_k|^p)^{1/p}; max |a_k| for p = infinity.
/// p < 1 is accepted: the value is still well defined, it just lacks the
/// triangle inequality.
inline double lp_quasinorm(const FiniteSequence& a, double p) {
  detail::require_positive_p(p);
  if (std::isinf(p)) {
    double m = 0.0;
    for (const cplx& v : a.values) m = std::max(m, std::abs(v));
    return m;
  }
  double s = 0.0;
  for (const cplx& v : a.values) s += std::pow(std::abs(v), p);
  return std::pow(s, 1.0 / p);
}

inline double lp_quasinorm(const FiniteSequence2D& a, double p) {
  detail::require_positive_p(p);
  if (std::isinf(p)) {
    double m = 0.0;
    for (const cplx& v : a.values) m = std::max(m, std::abs(v));
    return m;
  }
  double s = 0.0;
  for (const cplx& v : a.values) s += std::pow(std::abs(v), p);
  return std::pow(s, 1.0 / p);
}

/// L^p quasi-norm by rectangle rule, (h * sum |f(x_j)|^p)^{1/p};
/// max sample for p = infinity.
inline double Lp_quasinorm(const SampledFunction& f, double p) {
  detail::require_positive_p(p);
  if (std::isinf(p)) {
    double m = 0.0;
    for (const cplx& v : f.values) m = std::max(m, std::abs(v));
    return m;
  }
  double s = 0.0;
  for (const cplx& v : f.values) s += std::pow(std::abs(v), p);
  return std::pow(f.grid.spacing() * s, 1.0 / p);
}

/// p-th power of the rectangle-rule L^p quasi-norm (no final root).
/// Comparisons for p < 1 are done on this scale.
inline double Lp_power_sum(const SampledFunction& f, double p) {
  detail::require_positive_p(p);
  double s = 0.0;
  for (const cplx& v : f.values) s += std::pow(std::abs(v), p);
  return f.grid.spacing() * s;
}

/// L^p quasi-norm of a 1-periodic function by an M-point rectangle rule
/// on [0, 1). For p = infinity, the max over the samples.
inline double periodic_lp_norm(const PeriodicFunction& f, double p, int quad_points) {
  detail::require_positive_p(p);
  if (quad_points <= 0) throw ConfigError("periodic_lp_norm: quad_points must be positive");
  if (std::isinf(p)) {
    double m = 0.0;
    for (int i = 0; i < quad_points; ++i)
      m = std::max(m, std::abs(f.eval(static_cast<double>(i) / quad_points)));
    return m;
  }
  double s = 0.0;
  for (int i = 0; i < quad_points; ++i)
    s += std::pow(std::abs(f.eval(static_cast<double>(i) / quad_points)), p);
  return std::pow(s / quad_points, 1.0 / p);
}

}  // namespace bimult
