#pragma once

#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace bimult {

using cplx = std::complex<double>;

constexpr double kInf = std::numeric_limits<double>::infinity();

/// Thrown when an input violates a documented precondition.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown when a grid/quadrature configuration cannot represent the request.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown when a computation cannot meet its accuracy contract
/// (e.g. function mass leaking past the grid boundary).
class AccuracyError : public std::runtime_error {
 public:
  AccuracyError(const std::string& msg, double measured)
      : std::runtime_error(msg), measured_(measured) {}
  double measured() const { return measured_; }

 private:
  double measured_;
};

/// Uniform grid of N points x_j = -L + j*h covering [-L, L), h = 2L/N.
/// Dual frequencies are xi_k = k/(2L) for k = -N/2 .. N/2-1.
struct Grid1D {
  double half_width = 0.0;  // L
  int point_count = 0;      // N, even

  Grid1D() = default;
  Grid1D(double L, int N) : half_width(L), point_count(N) {
    if (!(L > 0.0)) throw DomainError("Grid1D: half_width must be positive");
    if (N <= 0 || N % 2 != 0) throw DomainError("Grid1D: point_count must be positive and even");
  }

  double spacing() const { return 2.0 * half_width / point_count; }
  double freq_spacing() const { return 1.0 / (2.0 * half_width); }
  double point(int j) const { return -half_width + j * spacing(); }
  double freq(int k) const { return k * freq_spacing(); }  // k in [-N/2, N/2)

  bool operator==(const Grid1D& o) const {
    return half_width == o.half_width && point_count == o.point_count;
  }

  /// True when every integer in [-L, L) sits exactly on a grid point.
  bool holds_integers() const {
    double ratio = 1.0 / spacing();
    return std::abs(ratio - std::round(ratio)) == 0.0;
  }
  /// Samples per unit length (valid when holds_integers()).
  int samples_per_unit() const { return static_cast<int>(std::llround(1.0 / spacing())); }
};

/// Complex samples of a function over a Grid1D.
struct SampledFunction {
  Grid1D grid;
  std::vector<cplx> values;

  SampledFunction() = default;
  explicit SampledFunction(const Grid1D& g) : grid(g), values(g.point_count, cplx{0.0, 0.0}) {}
  SampledFunction(const Grid1D& g, std::vector<cplx> v) : grid(g), values(std::move(v)) {
    if (static_cast<int>(values.size()) != g.point_count)
      throw DomainError("SampledFunction: value count does not match grid");
  }

  int size() const { return grid.point_count; }
  cplx& operator[](int j) { return values[static_cast<size_t>(j)]; }
  const cplx& operator[](int j) const { return values[static_cast<size_t>(j)]; }

  bool all_finite() const {
    for (const cplx& v : values)
      if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
    return true;
  }
};

/// 1-periodic function held as Fourier coefficients indexed n = -M .. M.
struct PeriodicFunction {
  int degree = 0;            // M
  std::vector<cplx> coeffs;  // 2M+1 entries, coeffs[M + n] is the coefficient at n

  PeriodicFunction() : coeffs(1, cplx{0.0, 0.0}) {}
  explicit PeriodicFunction(int M) : degree(M), coeffs(2 * static_cast<size_t>(M) + 1) {
    if (M < 0) throw DomainError("PeriodicFunction: degree must be nonnegative");
  }

  cplx& coeff(int n) { return coeffs[static_cast<size_t>(degree + n)]; }
  const cplx& coeff(int n) const { return coeffs[static_cast<size_t>(degree + n)]; }
  /// Coefficient lookup that treats out-of-range indices as zero.
  cplx coeff_or_zero(int n) const {
    if (n < -degree || n > degree) return {0.0, 0.0};
    return coeff(n);
  }

  /// Point evaluation sum_n c_n e^{2 pi i n x}.
  cplx eval(double x) const {
    cplx acc{0.0, 0.0};
    for (int n = -degree; n <= degree; ++n) {
      double ph = 2.0 * M_PI * n * x;
      acc += coeff(n) * cplx{std::cos(ph), std::sin(ph)};
    }
    return acc;
  }
};

/// Finitely supported complex sequence on Z, indexed k = -M .. M.
struct FiniteSequence {
  int support_radius = 0;
  std::vector<cplx> values;

  FiniteSequence() : values(1, cplx{0.0, 0.0}) {}
  explicit FiniteSequence(int M) : support_radius(M), values(2 * static_cast<size_t>(M) + 1) {
    if (M < 0) throw DomainError("FiniteSequence: support_radius must be nonnegative");
  }

  cplx& at(int k) { return values[static_cast<size_t>(support_radius + k)]; }
  const cplx& at(int k) const { return values[static_cast<size_t>(support_radius + k)]; }
  cplx at_or_zero(int k) const {
    if (k < -support_radius || k > support_radius) return {0.0, 0.0};
    return at(k);
  }

  /// hat a(theta) = sum_k a_k e^{-2 pi i k theta}.
  cplx symbol_eval(double theta) const {
    cplx acc{0.0, 0.0};
    for (int k = -support_radius; k <= support_radius; ++k) {
      double ph = -2.0 * M_PI * k * theta;
      acc += at(k) * cplx{std::cos(ph), std::sin(ph)};
    }
    return acc;
  }
};

/// Finitely supported complex sequence on Z^2, indexed over {-M..M}^2.
struct FiniteSequence2D {
  int support_radius = 0;
  std::vector<cplx> values;  // row-major, (n, m) at (M+n)*(2M+1) + (M+m)

  FiniteSequence2D() : values(1, cplx{0.0, 0.0}) {}
  explicit FiniteSequence2D(int M)
      : support_radius(M),
        values((2 * static_cast<size_t>(M) + 1) * (2 * static_cast<size_t>(M) + 1)) {
    if (M < 0) throw DomainError("FiniteSequence2D: support_radius must be nonnegative");
  }

  int side() const { return 2 * support_radius + 1; }
  cplx& at(int n, int m) {
    return values[static_cast<size_t>(support_radius + n) * side() + (support_radius + m)];
  }
  const cplx& at(int n, int m) const {
    return values[static_cast<size_t>(support_radius + n) * side() + (support_radius + m)];
  }
  cplx at_or_zero(int n, int m) const {
    if (std::abs(n) > support_radius || std::abs(m) > support_radius) return {0.0, 0.0};
    return at(n, m);
  }
};

/// Exponent triple (p1, p2, p3) with 1/p1 + 1/p2 = 1/p3, p1,p2 >= 1, p3 >= 1/2.
/// Infinity is allowed for p1, p2.
struct ExponentTriple {
  double p1 = 2.0, p2 = 2.0, p3 = 1.0;

  ExponentTriple() = default;
  ExponentTriple(double a, double b, double c) : p1(a), p2(b), p3(c) { validate(); }

  void validate() const {
    if (!(p1 >= 1.0) || !(p2 >= 1.0))
      throw DomainError("ExponentTriple: p1 and p2 must be >= 1");
    if (!(p3 >= 0.5)) throw DomainError("ExponentTriple: p3 must be >= 1/2");
    double lhs = inv(p1) + inv(p2);
    double rhs = inv(p3);
    double scale = std::max({std::abs(lhs), std::abs(rhs), 1e-300});
    if (std::abs(lhs - rhs) > 1e-12 * scale)
      throw DomainError(
          "ExponentTriple: 1/p1 + 1/p2 must equal 1/p3 (Holder relation violated)");
  }

  static double inv(double p) { return std::isinf(p) ? 0.0 : 1.0 / p; }
};

}  // namespace bimult
