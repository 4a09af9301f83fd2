#pragma once

#include <functional>

#include "bimult/types.hpp"

namespace bimult {

/// Composite Simpson rule with n subintervals (n rounded up to even).
template <typename F>
auto composite_simpson(F&& f, double a, double b, int n) -> decltype(f(a)) {
  if (n % 2 != 0) ++n;
  const double h = (b - a) / n;
  decltype(f(a)) acc = f(a) + f(b);
  for (int i = 1; i < n; i += 2) acc += 4.0 * f(a + i * h);
  for (int i = 2; i < n; i += 2) acc += 2.0 * f(a + i * h);
  return acc * (h / 3.0);
}

}  // namespace bimult
