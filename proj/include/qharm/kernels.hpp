#pragma once

// Batched inner loops of the verification engine. Every routine has a scalar
// reference implementation and an AVX2 variant; the dispatcher picks one at
// runtime. Both paths perform the same IEEE operations in the same order
// (no FMA contraction), so their results are bit-identical.

#include <complex>
#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

namespace qharm::kernels {

using Complex = std::complex<double>;

enum class Isa { kScalar, kAvx2 };

std::string_view isa_name(Isa isa) noexcept;

/// True when the running CPU can execute the given path.
bool isa_supported(Isa isa) noexcept;

/// Path used by the dispatching entry points. Defaults to the widest
/// supported ISA; setting QHARM_ISA=scalar in the environment forces the
/// reference path.
Isa active_isa() noexcept;

/// Points in structure-of-arrays layout.
struct PointsSoA {
  std::vector<double> re;
  std::vector<double> im;

  PointsSoA() = default;
  explicit PointsSoA(std::size_t n) : re(n, 0.0), im(n, 0.0) {}
  explicit PointsSoA(std::span<const Complex> zs);

  std::size_t size() const noexcept { return re.size(); }
  Complex at(std::size_t i) const { return {re[i], im[i]}; }
};

/// out[i] = sum_k coeffs[k] * z[i]^k by Horner's rule from the top degree.
void horner_scalar(std::span<const Complex> coeffs, const double* zre,
                   const double* zim, double* out_re, double* out_im,
                   std::size_t n);
void horner_avx2(std::span<const Complex> coeffs, const double* zre,
                 const double* zim, double* out_re, double* out_im,
                 std::size_t n);

/// Dispatching wrapper; resizes `out` to z.size().
void horner(std::span<const Complex> coeffs, const PointsSoA& z,
            PointsSoA& out, Isa isa = active_isa());

/// Smallest squared difference quotient |f_i - f_j|^2 / |z_i - z_j|^2 over
/// all pairs i < j, scanning rows in index order. Ties keep the first pair
/// encountered. Pairs with coincident z are skipped.
struct PairMin {
  double value;
  std::size_t i;
  std::size_t j;
};

/// Minimum over j in [first, n) for a fixed row (zi, fi); returns
/// {value, j}. value is +inf if the range is empty.
struct RowMin {
  double value;
  std::size_t j;
};
RowMin row_min_quotient_scalar(double zi_re, double zi_im, double fi_re,
                               double fi_im, const double* zre,
                               const double* zim, const double* fre,
                               const double* fim, std::size_t first,
                               std::size_t n);
RowMin row_min_quotient_avx2(double zi_re, double zi_im, double fi_re,
                             double fi_im, const double* zre,
                             const double* zim, const double* fre,
                             const double* fim, std::size_t first,
                             std::size_t n);

PairMin min_pair_quotient(const PointsSoA& z, const PointsSoA& f,
                          Isa isa = active_isa());

}  // namespace qharm::kernels
