#include <limits>

#include "qharm/kernels.hpp"

namespace qharm::kernels {

void horner_scalar(std::span<const Complex> coeffs, const double* zre,
                   const double* zim, double* out_re, double* out_im,
                   std::size_t n) {
  if (coeffs.empty()) {
    for (std::size_t i = 0; i < n; ++i) out_re[i] = out_im[i] = 0.0;
    return;
  }
  const std::size_t top = coeffs.size() - 1;
  for (std::size_t i = 0; i < n; ++i) {
    const double xr = zre[i];
    const double xi = zim[i];
    double ar = coeffs[top].real();
    double ai = coeffs[top].imag();
    for (std::size_t k = top; k-- > 0;) {
      const double pr = ar * xr - ai * xi;
      const double pi = ar * xi + ai * xr;
      ar = pr + coeffs[k].real();
      ai = pi + coeffs[k].imag();
    }
    out_re[i] = ar;
    out_im[i] = ai;
  }
}

RowMin row_min_quotient_scalar(double zi_re, double zi_im, double fi_re,
                               double fi_im, const double* zre,
                               const double* zim, const double* fre,
                               const double* fim, std::size_t first,
                               std::size_t n) {
  RowMin best{std::numeric_limits<double>::infinity(), n};
  for (std::size_t j = first; j < n; ++j) {
    const double ex = zre[j] - zi_re;
    const double ey = zim[j] - zi_im;
    const double den = ex * ex + ey * ey;
    if (den == 0.0) continue;
    const double dx = fre[j] - fi_re;
    const double dy = fim[j] - fi_im;
    const double v = (dx * dx + dy * dy) / den;
    if (v < best.value) best = {v, j};
  }
  return best;
}

}  // namespace qharm::kernels
