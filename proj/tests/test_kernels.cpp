#include <doctest.h>

#include <cstdint>
#include <random>
#include <vector>

#include "mzv/kernels.hpp"
#include "mzv/poly.hpp"

using namespace mzv;
namespace k = mzv::kernels;

namespace {

std::vector<std::uint32_t> random_lanes(std::mt19937& rng, std::size_t n, std::uint32_t bound) {
  std::uniform_int_distribution<std::uint32_t> dist(0, bound - 1);
  std::vector<std::uint32_t> v(n);
  for (auto& x : v) x = dist(rng);
  return v;
}

std::vector<std::uint32_t> naive_convolve(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b,
                                          std::uint32_t p) {
  std::vector<std::uint64_t> acc(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) acc[i + j] = (acc[i + j] + std::uint64_t{a[i]} * b[j]) % p;
  }
  return {acc.begin(), acc.end()};
}

std::vector<k::Backend> backends() {
  std::vector<k::Backend> out{k::Backend::scalar};
  if (k::backend_supported(k::Backend::avx2)) out.push_back(k::Backend::avx2);
  return out;
}

const std::uint32_t kPrimes[] = {2, 3, 5, 7, 251, 32749};

}  // namespace

TEST_CASE("every backend agrees with the scalar reference lane by lane") {
  std::mt19937 rng(20240601);
  const k::Table& ref = k::scalar_table();
  for (auto backend : backends()) {
    CAPTURE(k::backend_name(backend));
    const k::Table& t = k::table(backend);
    for (std::uint32_t p : kPrimes) {
      for (std::size_t n : {0u, 1u, 7u, 8u, 9u, 31u, 64u, 67u}) {
        CAPTURE(p);
        CAPTURE(n);
        const auto src = random_lanes(rng, n, p);
        const auto base = random_lanes(rng, n, p);
        const std::uint32_t c = random_lanes(rng, 1, p)[0];

        auto x = base, y = base;
        ref.axpy_mod(x.data(), src.data(), n, c, p);
        t.axpy_mod(y.data(), src.data(), n, c, p);
        CHECK(x == y);
        for (std::size_t i = 0; i < n; ++i) CHECK(x[i] == (base[i] + std::uint64_t{c} * src[i]) % p);

        x = base, y = base;
        ref.add_mod(x.data(), src.data(), n, p);
        t.add_mod(y.data(), src.data(), n, p);
        CHECK(x == y);

        x = base, y = base;
        ref.mul_acc(x.data(), src.data(), n, c);
        t.mul_acc(y.data(), src.data(), n, c);
        CHECK(x == y);

        auto wide = random_lanes(rng, n, k::kLaneLimit);
        if (n > 0) wide[0] = k::kLaneLimit;
        auto wide2 = wide;
        ref.reduce_mod(wide.data(), n, p);
        t.reduce_mod(wide2.data(), n, p);
        CHECK(wide == wide2);
      }
    }
  }
}

TEST_CASE("convolution matches the schoolbook oracle on every backend") {
  std::mt19937 rng(7);
  for (auto backend : backends()) {
    const k::Table& t = k::table(backend);
    for (std::uint32_t p : kPrimes) {
      for (int trial = 0; trial < 12; ++trial) {
        const std::size_t na = 1 + rng() % 90, nb = 1 + rng() % 90;
        auto a = random_lanes(rng, na, p);
        auto b = random_lanes(rng, nb, p);
        // Mix in sparse operands so both row choices are exercised.
        if (trial % 3 == 0) {
          for (std::size_t i = 0; i < na; ++i) {
            if (i % 11 != 0) a[i] = 0;
          }
        }
        std::vector<std::uint32_t> out(na + nb - 1);
        k::convolve_mod(t, a, b, out, p);
        CHECK(out == naive_convolve(a, b, p));
      }
    }
  }
}

TEST_CASE("polynomial products do not depend on the active backend") {
  const auto start = k::active_backend();
  std::mt19937 rng(99);
  for (auto [p, s] : {std::pair{3u, 1u}, std::pair{2u, 3u}, std::pair{5u, 2u}}) {
    const FieldCtx ctx = make_field(p, s);
    const FqPoly a(ctx, random_lanes(rng, 120, ctx.q()));
    const FqPoly b(ctx, random_lanes(rng, 75, ctx.q()));
    std::vector<FqPoly> products;
    for (auto backend : backends()) {
      k::set_active_backend(backend);
      CHECK(k::active_backend() == backend);
      products.push_back(a * b);
    }
    for (const auto& prod : products) CHECK(prod == products.front());
  }
  k::set_active_backend(start);
}

TEST_CASE("unknown backends are rejected") {
  if (!k::backend_supported(k::Backend::avx2)) {
    CHECK_THROWS_AS(k::table(k::Backend::avx2), std::invalid_argument);
  }
  CHECK(std::string(k::backend_name(k::Backend::scalar)) == "scalar");
}
