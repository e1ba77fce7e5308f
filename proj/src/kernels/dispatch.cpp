#include <cstdlib>
#include <limits>
#include <string>

#include "qharm/kernels.hpp"

namespace qharm::kernels {

PointsSoA::PointsSoA(std::span<const Complex> zs) : re(zs.size()), im(zs.size()) {
  for (std::size_t i = 0; i < zs.size(); ++i) {
    re[i] = zs[i].real();
    im[i] = zs[i].imag();
  }
}

std::string_view isa_name(Isa isa) noexcept {
  switch (isa) {
    case Isa::kScalar:
      return "scalar";
    case Isa::kAvx2:
      return "avx2";
  }
  return "unknown";
}

bool isa_supported(Isa isa) noexcept {
  switch (isa) {
    case Isa::kScalar:
      return true;
    case Isa::kAvx2:
#if defined(__x86_64__) || defined(__i386__)
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
  }
  return false;
}

Isa active_isa() noexcept {
  static const Isa chosen = [] {
    if (const char* env = std::getenv("QHARM_ISA")) {
      if (std::string(env) == "scalar") return Isa::kScalar;
    }
    return isa_supported(Isa::kAvx2) ? Isa::kAvx2 : Isa::kScalar;
  }();
  return chosen;
}

void horner(std::span<const Complex> coeffs, const PointsSoA& z,
            PointsSoA& out, Isa isa) {
  out.re.resize(z.size());
  out.im.resize(z.size());
  if (isa == Isa::kAvx2 && isa_supported(Isa::kAvx2)) {
    horner_avx2(coeffs, z.re.data(), z.im.data(), out.re.data(),
                out.im.data(), z.size());
  } else {
    horner_scalar(coeffs, z.re.data(), z.im.data(), out.re.data(),
                  out.im.data(), z.size());
  }
}

PairMin min_pair_quotient(const PointsSoA& z, const PointsSoA& f, Isa isa) {
  const std::size_t n = z.size();
  const bool wide = isa == Isa::kAvx2 && isa_supported(Isa::kAvx2);
  PairMin best{std::numeric_limits<double>::infinity(), n, n};
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const RowMin row =
        wide ? row_min_quotient_avx2(z.re[i], z.im[i], f.re[i], f.im[i],
                                     z.re.data(), z.im.data(), f.re.data(),
                                     f.im.data(), i + 1, n)
             : row_min_quotient_scalar(z.re[i], z.im[i], f.re[i], f.im[i],
                                       z.re.data(), z.im.data(), f.re.data(),
                                       f.im.data(), i + 1, n);
    if (row.value < best.value) best = {row.value, i, row.j};
  }
  return best;
}

}  // namespace qharm::kernels
