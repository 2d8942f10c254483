#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string_view>

#include "mzv/kernels.hpp"

namespace mzv::kernels {

#if defined(MZV_HAVE_AVX2_KERNELS)
const Table& avx2_table();
#endif

namespace {

bool cpu_has_avx2() {
#if defined(MZV_HAVE_AVX2_KERNELS) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

Backend initial_backend() {
  if (const char* env = std::getenv("MZV_KERNELS")) {
    std::string_view v(env);
    if (v == "scalar") return Backend::scalar;
    if (v == "avx2" && cpu_has_avx2()) return Backend::avx2;
  }
  return cpu_has_avx2() ? Backend::avx2 : Backend::scalar;
}

std::atomic<const Table*>& active_slot() {
  static std::atomic<const Table*> slot{&table(initial_backend())};
  return slot;
}

std::atomic<Backend>& active_tag() {
  static std::atomic<Backend> tag{initial_backend()};
  return tag;
}

}  // namespace

bool backend_supported(Backend b) {
  return b == Backend::scalar || (b == Backend::avx2 && cpu_has_avx2());
}

const Table& table(Backend b) {
  switch (b) {
    case Backend::scalar:
      return scalar_table();
    case Backend::avx2:
#if defined(MZV_HAVE_AVX2_KERNELS)
      if (cpu_has_avx2()) return avx2_table();
#endif
      break;
  }
  throw std::invalid_argument(std::string("kernel backend not available: ") + backend_name(b));
}

Backend active_backend() { return active_tag().load(std::memory_order_relaxed); }

void set_active_backend(Backend b) {
  const Table* t = &table(b);
  active_slot().store(t, std::memory_order_relaxed);
  active_tag().store(b, std::memory_order_relaxed);
}

const char* backend_name(Backend b) {
  switch (b) {
    case Backend::scalar:
      return "scalar";
    case Backend::avx2:
      return "avx2";
  }
  return "?";
}

static const Table& active() { return *active_slot().load(std::memory_order_relaxed); }

void axpy_mod(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src, std::uint32_t c,
              std::uint32_t p) {
  active().axpy_mod(dst.data(), src.data(), std::min(dst.size(), src.size()), c, p);
}

void mul_acc(std::span<std::uint32_t> acc, std::span<const std::uint32_t> src, std::uint32_t c) {
  active().mul_acc(acc.data(), src.data(), std::min(acc.size(), src.size()), c);
}

void reduce_mod(std::span<std::uint32_t> x, std::uint32_t p) {
  active().reduce_mod(x.data(), x.size(), p);
}

void add_mod(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src, std::uint32_t p) {
  active().add_mod(dst.data(), src.data(), std::min(dst.size(), src.size()), p);
}

void convolve_mod(const Table& t, std::span<const std::uint32_t> a,
                  std::span<const std::uint32_t> b, std::span<std::uint32_t> out,
                  std::uint32_t p) {
  if (a.empty() || b.empty()) return;
  if (out.size() != a.size() + b.size() - 1) {
    throw std::invalid_argument("convolve_mod: output size mismatch");
  }
  std::size_t nnz_a = 0, nnz_b = 0;
  for (auto x : a) nnz_a += (x != 0);
  for (auto x : b) nnz_b += (x != 0);
  if (nnz_b < nnz_a) std::swap(a, b);

  std::fill(out.begin(), out.end(), 0u);
  const std::uint64_t sq = std::uint64_t{p - 1} * (p - 1);
  // Rows that can be accumulated on top of reduced lanes without crossing 2^31.
  const std::uint64_t rows_per_reduce =
      sq == 0 ? ~std::uint64_t{0} : std::max<std::uint64_t>(1, (kLaneLimit - (p - 1)) / sq);
  std::uint64_t pending = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    t.mul_acc(out.data() + i, b.data(), b.size(), a[i]);
    if (++pending == rows_per_reduce) {
      t.reduce_mod(out.data(), out.size(), p);
      pending = 0;
    }
  }
  if (pending != 0) t.reduce_mod(out.data(), out.size(), p);
}

void convolve_mod(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b,
                  std::span<std::uint32_t> out, std::uint32_t p) {
  convolve_mod(active(), a, b, out, p);
}

}  // namespace mzv::kernels
