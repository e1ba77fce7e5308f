#include <cmath>
#include <cstring>
#include <limits>

#include <doctest.h>

#include "qharm/kernels.hpp"
#include "qharm/sampling.hpp"

using namespace qharm;
using namespace qharm::kernels;

namespace {

bool same_bits(double a, double b) { return std::memcmp(&a, &b, sizeof a) == 0; }

std::vector<Complex> random_points(sampling::Rng& rng, std::size_t n, double rmax) {
  std::vector<Complex> z;
  for (std::size_t i = 0; i < n; ++i)
    z.push_back(std::polar(sampling::uniform(rng, 0.0, rmax), sampling::uniform(rng, -4.0, 4.0)));
  return z;
}

std::vector<Complex> random_coeffs(sampling::Rng& rng, int degree) {
  std::vector<Complex> c;
  for (int k = 0; k <= degree; ++k)
    c.emplace_back(sampling::uniform(rng, -1, 1), sampling::uniform(rng, -1, 1));
  return c;
}

// O(n^2) reference without the row kernels.
PairMin brute_pair_min(const std::vector<Complex>& z, const std::vector<Complex>& f) {
  PairMin best{std::numeric_limits<double>::infinity(), 0, 0};
  for (std::size_t i = 0; i < z.size(); ++i)
    for (std::size_t j = i + 1; j < z.size(); ++j) {
      const double den = std::norm(z[i] - z[j]);
      if (den == 0.0) continue;
      const double v = std::norm(f[i] - f[j]) / den;
      if (v < best.value) best = {v, i, j};
    }
  return best;
}

}  // namespace

TEST_CASE("isa names and availability") {
  CHECK(isa_name(Isa::kScalar) == "scalar");
  CHECK(isa_name(Isa::kAvx2) == "avx2");
  CHECK(isa_supported(Isa::kScalar));
  CHECK(isa_supported(active_isa()));
}

TEST_CASE("horner scalar matches a plain power sum") {
  sampling::Rng rng(1);
  const auto c = random_coeffs(rng, 9);
  const auto zs = random_points(rng, 37, 0.99);
  PointsSoA out;
  horner(c, PointsSoA(zs), out, Isa::kScalar);
  for (std::size_t i = 0; i < zs.size(); ++i) {
    Complex want = 0.0, zk = 1.0;
    for (const auto& ck : c) {
      want += ck * zk;
      zk *= zs[i];
    }
    CHECK(std::abs(out.at(i) - want) <= 1e-14 * (1.0 + std::abs(want)));
  }
}

TEST_CASE("horner avx2 is bit-identical to scalar, including tails") {
  if (!isa_supported(Isa::kAvx2)) return;
  sampling::Rng rng(2);
  for (std::size_t n : {0u, 1u, 2u, 3u, 4u, 5u, 7u, 8u, 9u, 31u, 128u, 1023u}) {
    for (int degree : {0, 1, 2, 16, 64}) {
      const auto c = random_coeffs(rng, degree);
      const PointsSoA z(random_points(rng, n, 0.999));
      PointsSoA a, b;
      horner(c, z, a, Isa::kScalar);
      horner(c, z, b, Isa::kAvx2);
      REQUIRE(a.size() == n);
      REQUIRE(b.size() == n);
      for (std::size_t i = 0; i < n; ++i) {
        CHECK(same_bits(a.re[i], b.re[i]));
        CHECK(same_bits(a.im[i], b.im[i]));
      }
    }
  }
}

TEST_CASE("row minimum kernels agree bitwise and on the index") {
  if (!isa_supported(Isa::kAvx2)) return;
  sampling::Rng rng(3);
  for (std::size_t n : {1u, 2u, 3u, 5u, 8u, 13u, 64u, 101u}) {
    const PointsSoA z(random_points(rng, n, 0.9));
    const PointsSoA f(random_points(rng, n, 2.0));
    for (std::size_t first = 0; first <= n; ++first) {
      const auto a = row_min_quotient_scalar(0.1, -0.2, 0.3, 0.05, z.re.data(), z.im.data(),
                                             f.re.data(), f.im.data(), first, n);
      const auto b = row_min_quotient_avx2(0.1, -0.2, 0.3, 0.05, z.re.data(), z.im.data(),
                                           f.re.data(), f.im.data(), first, n);
      CHECK(same_bits(a.value, b.value));
      if (std::isfinite(a.value)) CHECK(a.j == b.j);
    }
  }
}

TEST_CASE("row minimum keeps the first index on ties and skips coincident z") {
  std::vector<Complex> zs{{0.0, 0.0}, {0.5, 0.0}, {0.1, 0.0}, {0.5, 0.0}, {0.5, 0.0}, {0.5, 0.0}};
  std::vector<Complex> fs{{0.0, 0.0}, {1.0, 0.0}, {9.0, 0.0}, {1.0, 0.0}, {1.0, 0.0}, {1.0, 0.0}};
  const PointsSoA z(zs), f(fs);
  for (Isa isa : {Isa::kScalar, Isa::kAvx2}) {
    if (!isa_supported(isa)) continue;
    auto row = isa == Isa::kScalar ? row_min_quotient_scalar : row_min_quotient_avx2;
    const auto r = row(0.0, 0.0, 0.0, 0.0, z.re.data(), z.im.data(), f.re.data(), f.im.data(), 1, 6);
    CHECK(r.value == 4.0);
    CHECK(r.j == 1);
    const auto s = row(0.5, 0.0, 1.0, 0.0, z.re.data(), z.im.data(), f.re.data(), f.im.data(), 3, 6);
    CHECK(std::isinf(s.value));
  }
}

TEST_CASE("min_pair_quotient matches brute force on both paths") {
  sampling::Rng rng(4);
  for (std::size_t n : {2u, 3u, 6u, 17u, 64u, 150u}) {
    const auto zs = random_points(rng, n, 0.95);
    std::vector<Complex> fs;
    for (const auto& z : zs) fs.push_back(z + 0.3 * z * z + 0.1 * std::conj(z));
    const auto want = brute_pair_min(zs, fs);
    const PointsSoA z(zs), f(fs);
    const auto a = min_pair_quotient(z, f, Isa::kScalar);
    CHECK(a.value == want.value);
    CHECK(a.i == want.i);
    CHECK(a.j == want.j);
    if (isa_supported(Isa::kAvx2)) {
      const auto b = min_pair_quotient(z, f, Isa::kAvx2);
      CHECK(same_bits(a.value, b.value));
      CHECK(a.i == b.i);
      CHECK(a.j == b.j);
    }
  }
}
