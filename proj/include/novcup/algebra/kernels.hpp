#pragma once

// Row kernels for elimination over prime fields on 32-bit residues.
// A portable scalar version is always available; an AVX2 version is used when
// the CPU supports it and p < 2^16. Set NOVCUP_ISA=scalar to force scalar.

#include <cstddef>
#include <cstdint>

namespace novcup::kernels {

enum class Isa { scalar, avx2 };

namespace scalar {
void row_axpy_mod(std::uint32_t* y, const std::uint32_t* x, std::uint32_t a, std::size_t n, std::uint32_t p);
void row_scale_mod(std::uint32_t* y, std::uint32_t a, std::size_t n, std::uint32_t p);
}  // namespace scalar

namespace avx2 {
// Require p < 2^16 and inputs already reduced.
void row_axpy_mod(std::uint32_t* y, const std::uint32_t* x, std::uint32_t a, std::size_t n, std::uint32_t p);
void row_scale_mod(std::uint32_t* y, std::uint32_t a, std::size_t n, std::uint32_t p);
}  // namespace avx2

bool avx2_supported();
Isa active_isa();
/// Overrides the runtime choice; an unsupported request falls back to scalar.
void set_isa(Isa isa);
const char* isa_name(Isa isa);

/// y[i] = (y[i] + a * x[i]) mod p
void row_axpy_mod(std::uint32_t* y, const std::uint32_t* x, std::uint32_t a, std::size_t n, std::uint32_t p);
/// y[i] = a * y[i] mod p
void row_scale_mod(std::uint32_t* y, std::uint32_t a, std::size_t n, std::uint32_t p);

}  // namespace novcup::kernels
