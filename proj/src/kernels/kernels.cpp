#include "novcup/algebra/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <cstring>

namespace novcup::kernels {

namespace scalar {

void row_axpy_mod(std::uint32_t* y, const std::uint32_t* x, std::uint32_t a, std::size_t n, std::uint32_t p) {
  const std::uint64_t a64 = a;
  for (std::size_t i = 0; i < n; ++i) y[i] = static_cast<std::uint32_t>((y[i] + a64 * x[i]) % p);
}

void row_scale_mod(std::uint32_t* y, std::uint32_t a, std::size_t n, std::uint32_t p) {
  const std::uint64_t a64 = a;
  for (std::size_t i = 0; i < n; ++i) y[i] = static_cast<std::uint32_t>((a64 * y[i]) % p);
}

}  // namespace scalar

namespace {

Isa detect() {
  const char* env = std::getenv("NOVCUP_ISA");
  if (env && std::strcmp(env, "scalar") == 0) return Isa::scalar;
  return avx2_supported() ? Isa::avx2 : Isa::scalar;
}

std::atomic<int>& isa_slot() {
  static std::atomic<int> slot{static_cast<int>(detect())};
  return slot;
}

}  // namespace

bool avx2_supported() {
#if defined(__x86_64__) || defined(__i386__)
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

Isa active_isa() { return static_cast<Isa>(isa_slot().load(std::memory_order_relaxed)); }

void set_isa(Isa isa) {
  if (isa == Isa::avx2 && !avx2_supported()) isa = Isa::scalar;
  isa_slot().store(static_cast<int>(isa), std::memory_order_relaxed);
}

const char* isa_name(Isa isa) { return isa == Isa::avx2 ? "avx2" : "scalar"; }

void row_axpy_mod(std::uint32_t* y, const std::uint32_t* x, std::uint32_t a, std::size_t n, std::uint32_t p) {
#if defined(__x86_64__)
  if (p < (1u << 16) && active_isa() == Isa::avx2) return avx2::row_axpy_mod(y, x, a, n, p);
#endif
  scalar::row_axpy_mod(y, x, a, n, p);
}

void row_scale_mod(std::uint32_t* y, std::uint32_t a, std::size_t n, std::uint32_t p) {
#if defined(__x86_64__)
  if (p < (1u << 16) && active_isa() == Isa::avx2) return avx2::row_scale_mod(y, a, n, p);
#endif
  scalar::row_scale_mod(y, a, n, p);
}

}  // namespace novcup::kernels
