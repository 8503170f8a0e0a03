#pragma once

// Row kernels for Gaussian elimination over GF(p).
//
// Each backend implements the same two operations on arrays of canonical
// residues in [0, p):
//   axpy:  dst[i] = (dst[i] + c * src[i]) mod p
//   scale: dst[i] = (c * dst[i]) mod p
// The scalar backend is the reference; SIMD backends must match it bit for
// bit. The dispatching entry points pick the fastest supported backend at
// first use and fall back to scalar for moduli a backend cannot handle.

#include <cstddef>
#include <cstdint>
#include <span>

namespace bettikit::kernels {

enum class Backend { scalar, avx2 };

const char* backend_name(Backend b);

namespace scalar {
void axpy(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src, std::uint32_t c, std::uint32_t p);
void scale(std::span<std::uint32_t> dst, std::uint32_t c, std::uint32_t p);
}  // namespace scalar

namespace avx2 {
/// Moduli at or above this bound are routed to the scalar kernel.
inline constexpr std::uint32_t kModulusLimit = 1u << 15;

/// True when compiled for x86 and the running CPU reports AVX2.
bool supported();
void axpy(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src, std::uint32_t c, std::uint32_t p);
void scale(std::span<std::uint32_t> dst, std::uint32_t c, std::uint32_t p);
}  // namespace avx2

/// Backend chosen by CPU detection, unless overridden by set_backend.
Backend active_backend();

/// Forces a backend (tests, benchmarks). Throws if the CPU lacks it.
void set_backend(Backend b);

void axpy(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src, std::uint32_t c, std::uint32_t p);
void scale(std::span<std::uint32_t> dst, std::uint32_t c, std::uint32_t p);

}  // namespace bettikit::kernels
