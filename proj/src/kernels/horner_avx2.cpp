#include <limits>

#include "qharm/kernels.hpp"

#if defined(__x86_64__) || defined(__i386__)
#define QHARM_HAVE_X86 1
#include <immintrin.h>
#else
#define QHARM_HAVE_X86 0
#endif

namespace qharm::kernels {

#if QHARM_HAVE_X86

// Four points per iteration; the coefficient is broadcast. Operation order
// matches horner_scalar exactly (mul, mul, sub/add, then add coefficient).
__attribute__((target("avx2"))) void horner_avx2(
    std::span<const Complex> coeffs, const double* zre, const double* zim,
    double* out_re, double* out_im, std::size_t n) {
  if (coeffs.empty()) {
    for (std::size_t i = 0; i < n; ++i) out_re[i] = out_im[i] = 0.0;
    return;
  }
  const std::size_t top = coeffs.size() - 1;
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d xr = _mm256_loadu_pd(zre + i);
    const __m256d xi = _mm256_loadu_pd(zim + i);
    __m256d ar = _mm256_set1_pd(coeffs[top].real());
    __m256d ai = _mm256_set1_pd(coeffs[top].imag());
    for (std::size_t k = top; k-- > 0;) {
      const __m256d pr = _mm256_sub_pd(_mm256_mul_pd(ar, xr), _mm256_mul_pd(ai, xi));
      const __m256d pi = _mm256_add_pd(_mm256_mul_pd(ar, xi), _mm256_mul_pd(ai, xr));
      ar = _mm256_add_pd(pr, _mm256_set1_pd(coeffs[k].real()));
      ai = _mm256_add_pd(pi, _mm256_set1_pd(coeffs[k].imag()));
    }
    _mm256_storeu_pd(out_re + i, ar);
    _mm256_storeu_pd(out_im + i, ai);
  }
  if (i < n) {
    horner_scalar(coeffs, zre + i, zim + i, out_re + i, out_im + i, n - i);
  }
}

__attribute__((target("avx2"))) RowMin row_min_quotient_avx2(
    double zi_re, double zi_im, double fi_re, double fi_im, const double* zre,
    const double* zim, const double* fre, const double* fim,
    std::size_t first, std::size_t n) {
  const double inf = std::numeric_limits<double>::infinity();
  RowMin best{inf, n};
  std::size_t j = first;
  if (n - first >= 4) {
    const __m256d czr = _mm256_set1_pd(zi_re);
    const __m256d czi = _mm256_set1_pd(zi_im);
    const __m256d cfr = _mm256_set1_pd(fi_re);
    const __m256d cfi = _mm256_set1_pd(fi_im);
    const __m256d zero = _mm256_setzero_pd();
    const __m256d vinf = _mm256_set1_pd(inf);
    __m256d lane_min = vinf;
    // Lane-local index of the first minimum, kept as doubles (exact below 2^53).
    __m256d lane_idx = _mm256_set1_pd(static_cast<double>(n));
    __m256d idx = _mm256_setr_pd(0.0, 1.0, 2.0, 3.0);
    idx = _mm256_add_pd(idx, _mm256_set1_pd(static_cast<double>(j)));
    const __m256d four = _mm256_set1_pd(4.0);
    for (; j + 4 <= n; j += 4) {
      const __m256d ex = _mm256_sub_pd(_mm256_loadu_pd(zre + j), czr);
      const __m256d ey = _mm256_sub_pd(_mm256_loadu_pd(zim + j), czi);
      const __m256d den = _mm256_add_pd(_mm256_mul_pd(ex, ex), _mm256_mul_pd(ey, ey));
      const __m256d dx = _mm256_sub_pd(_mm256_loadu_pd(fre + j), cfr);
      const __m256d dy = _mm256_sub_pd(_mm256_loadu_pd(fim + j), cfi);
      const __m256d num = _mm256_add_pd(_mm256_mul_pd(dx, dx), _mm256_mul_pd(dy, dy));
      const __m256d valid = _mm256_cmp_pd(den, zero, _CMP_NEQ_OQ);
      const __m256d v = _mm256_blendv_pd(vinf, _mm256_div_pd(num, den), valid);
      const __m256d better = _mm256_cmp_pd(v, lane_min, _CMP_LT_OQ);
      lane_min = _mm256_blendv_pd(lane_min, v, better);
      lane_idx = _mm256_blendv_pd(lane_idx, idx, better);
      idx = _mm256_add_pd(idx, four);
    }
    alignas(32) double mins[4];
    alignas(32) double idxs[4];
    _mm256_store_pd(mins, lane_min);
    _mm256_store_pd(idxs, lane_idx);
    for (int l = 0; l < 4; ++l) {
      const auto li = static_cast<std::size_t>(idxs[l]);
      if (mins[l] < best.value || (mins[l] == best.value && li < best.j)) {
        best = {mins[l], li};
      }
    }
  }
  if (j < n) {
    const RowMin tail = row_min_quotient_scalar(zi_re, zi_im, fi_re, fi_im, zre,
                                                zim, fre, fim, j, n);
    if (tail.value < best.value) best = tail;
  }
  if (best.value == inf) best.j = n;
  return best;
}

#else

void horner_avx2(std::span<const Complex> coeffs, const double* zre,
                 const double* zim, double* out_re, double* out_im,
                 std::size_t n) {
  horner_scalar(coeffs, zre, zim, out_re, out_im, n);
}

RowMin row_min_quotient_avx2(double zi_re, double zi_im, double fi_re,
                             double fi_im, const double* zre,
                             const double* zim, const double* fre,
                             const double* fim, std::size_t first,
                             std::size_t n) {
  return row_min_quotient_scalar(zi_re, zi_im, fi_re, fi_im, zre, zim, fre,
                                 fim, first, n);
}

#endif

}  // namespace qharm::kernels
