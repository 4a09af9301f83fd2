#include "bimult/dft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>

namespace bimult {

namespace {

// FFTW's planner is not thread-safe; executing distinct plans (or one plan
// through the new-array interface) is. Plans are cached per (N, sign) and
// created with FFTW_ESTIMATE so planning is deterministic.
std::mutex g_plan_mutex;

fftw_plan get_plan(int n, int sign) {
  static std::map<std::pair<int, int>, fftw_plan> cache;
  std::lock_guard<std::mutex> lock(g_plan_mutex);
  auto key = std::make_pair(n, sign);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  fftw_complex* buf = fftw_alloc_complex(static_cast<size_t>(n));
  fftw_plan plan = fftw_plan_dft_1d(n, buf, buf, sign, FFTW_ESTIMATE | FFTW_UNALIGNED);
  fftw_free(buf);
  cache.emplace(key, plan);
  return plan;
}

}  // namespace

namespace detail {

void raw_dft(const std::vector<cplx>& in, std::vector<cplx>& out, int sign) {
  const int n = static_cast<int>(in.size());
  out.resize(in.size());
  fftw_plan plan = get_plan(n, sign < 0 ? FFTW_FORWARD : FFTW_BACKWARD);
  // std::complex<double> is layout-compatible with fftw_complex
  auto* src = reinterpret_cast<fftw_complex*>(const_cast<cplx*>(in.data()));
  auto* dst = reinterpret_cast<fftw_complex*>(out.data());
  fftw_execute_dft(plan, src, dst);
}

}  // namespace detail

Grid1D dual_grid(const Grid1D& g) {
  // N frequencies spaced 1/(2L) centered at zero
  const double span_half = g.point_count * g.freq_spacing() / 2.0;
  return Grid1D(span_half, g.point_count);
}

SampledFunction dft_forward(const SampledFunction& f) {
  const Grid1D& g = f.grid;
  const int n = g.point_count;
  const int half = n / 2;
  std::vector<cplx> raw;
  detail::raw_dft(f.values, raw, -1);
  // x_j xi_k = -k/2 + jk/N, so fhat(xi_k) = h (-1)^k RAW[k mod N]
  SampledFunction out(dual_grid(g));
  const double h = g.spacing();
  for (int t = 0; t < n; ++t) {
    int k = t - half;
    int idx = k < 0 ? k + n : k;
    double sign = (k % 2 == 0) ? 1.0 : -1.0;
    out[t] = h * sign * raw[static_cast<size_t>(idx)];
  }
  return out;
}

SampledFunction dft_inverse(const SampledFunction& fhat, const Grid1D& time_grid) {
  const int n = time_grid.point_count;
  if (fhat.size() != n) throw DomainError("dft_inverse: size mismatch");
  const int half = n / 2;
  std::vector<cplx> tw(static_cast<size_t>(n));
  for (int t = 0; t < n; ++t) {
    int k = t - half;
    int idx = k < 0 ? k + n : k;
    double sign = (k % 2 == 0) ? 1.0 : -1.0;
    tw[static_cast<size_t>(idx)] = sign * fhat[t];
  }
  std::vector<cplx> raw;
  detail::raw_dft(tw, raw, +1);
  SampledFunction out(time_grid);
  const double dxi = time_grid.freq_spacing();
  for (int j = 0; j < n; ++j) out[j] = dxi * raw[static_cast<size_t>(j)];
  return out;
}

SampledFunction dft_inverse(const SampledFunction& fhat) {
  // invert dual_grid: frequency spacing dxi = 2*Lf/N, time half-width N/(4*Lf')...
  // dual half-width W = N/(4L)  =>  L = N/(4W)
  const Grid1D& d = fhat.grid;
  double L = d.point_count / (4.0 * d.half_width);
  return dft_inverse(fhat, Grid1D(L, d.point_count));
}

}  // namespace bimult
