#include "mzv/kernels.hpp"

namespace mzv::kernels {

namespace {

void axpy_mod_scalar(std::uint32_t* dst, const std::uint32_t* src, std::size_t n,
                     std::uint32_t c, std::uint32_t p) {
  for (std::size_t i = 0; i < n; ++i) dst[i] = (dst[i] + c * src[i]) % p;
}

void mul_acc_scalar(std::uint32_t* acc, const std::uint32_t* src, std::size_t n,
                    std::uint32_t c) {
  for (std::size_t i = 0; i < n; ++i) acc[i] += c * src[i];
}

void reduce_mod_scalar(std::uint32_t* x, std::size_t n, std::uint32_t p) {
  for (std::size_t i = 0; i < n; ++i) x[i] %= p;
}

void add_mod_scalar(std::uint32_t* dst, const std::uint32_t* src, std::size_t n,
                    std::uint32_t p) {
  for (std::size_t i = 0; i < n; ++i) {
    std::uint32_t s = dst[i] + src[i];
    dst[i] = s >= p ? s - p : s;
  }
}

}  // namespace

const Table& scalar_table() {
  static const Table t{axpy_mod_scalar, mul_acc_scalar, reduce_mod_scalar, add_mod_scalar};
  return t;
}

}  // namespace mzv::kernels
