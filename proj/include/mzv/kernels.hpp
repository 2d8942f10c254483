#pragma once

// Arithmetic kernels over Z/pZ on contiguous uint32 lanes.
//
// Every kernel has a scalar reference implementation and, on x86-64, an AVX2
// variant.  The variant is picked once at startup from the CPU feature bits
// (override with MZV_KERNELS=scalar|avx2) and the two must agree bit for bit.
//
// Lane values are residues in [0, p) unless stated otherwise.  All kernels
// require p <= kMaxPrime so that p + (p-1)^2 stays below 2^31.

#include <cstddef>
#include <cstdint>
#include <span>

namespace mzv::kernels {

inline constexpr std::uint32_t kMaxPrime = 32749;
inline constexpr std::uint32_t kLaneLimit = 0x7fffffffu;

enum class Backend { scalar, avx2 };

struct Table {
  /// dst[i] = (dst[i] + c * src[i]) mod p
  void (*axpy_mod)(std::uint32_t* dst, const std::uint32_t* src, std::size_t n, std::uint32_t c,
                   std::uint32_t p);
  /// acc[i] += c * src[i], no reduction (caller bounds the growth)
  void (*mul_acc)(std::uint32_t* acc, const std::uint32_t* src, std::size_t n, std::uint32_t c);
  /// x[i] = x[i] mod p, for x[i] <= kLaneLimit
  void (*reduce_mod)(std::uint32_t* x, std::size_t n, std::uint32_t p);
  /// dst[i] = (dst[i] + src[i]) mod p
  void (*add_mod)(std::uint32_t* dst, const std::uint32_t* src, std::size_t n, std::uint32_t p);
};

const Table& scalar_table();
bool backend_supported(Backend b);
/// Throws std::invalid_argument when the backend is not available.
const Table& table(Backend b);

Backend active_backend();
void set_active_backend(Backend b);
const char* backend_name(Backend b);

void axpy_mod(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src, std::uint32_t c,
              std::uint32_t p);
void mul_acc(std::span<std::uint32_t> acc, std::span<const std::uint32_t> src, std::uint32_t c);
void reduce_mod(std::span<std::uint32_t> x, std::uint32_t p);
void add_mod(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src, std::uint32_t p);

/// out = a * b over F_p (full product, out.size() == a.size() + b.size() - 1).
/// Rows are taken from the operand with fewer nonzeros and accumulated
/// lazily, reducing only when the lane bound could be crossed.
void convolve_mod(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b,
                  std::span<std::uint32_t> out, std::uint32_t p);

/// Same, routed through an explicit table (equivalence tests).
void convolve_mod(const Table& t, std::span<const std::uint32_t> a,
                  std::span<const std::uint32_t> b, std::span<std::uint32_t> out, std::uint32_t p);

}  // namespace mzv::kernels
