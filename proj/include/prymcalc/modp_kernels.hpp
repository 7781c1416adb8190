#pragma once

// Word-level GF(p) vector kernels used by the prime-field hot loops
// (Gaussian elimination rows, polynomial products and remainders).
//
// Each kernel has a portable scalar reference and an AVX2 variant. The
// dispatcher picks AVX2 at runtime when the CPU reports it. All variants
// must agree bit-for-bit; tests/test_kernels.cpp enforces that.
//
// Inputs are residues in [0, p) with p an odd prime below 2^31.

#include <cstdint>
#include <span>
#include <string_view>

namespace prymcalc::kernels {

enum class Isa { scalar, avx2 };

std::string_view isa_name(Isa isa);

/// Best ISA supported by the running CPU.
Isa detected_isa();

/// ISA used by the dispatching entry points below.
Isa active_isa();

/// Force an ISA for subsequent dispatched calls (tests, benchmarks).
/// Requesting an unsupported ISA falls back to scalar.
void set_active_isa(Isa isa);

/// dst[i] = (dst[i] + s * src[i]) mod p, for i < dst.size(). src.size() >= dst.size().
void axpy_mod(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src, std::uint32_t s,
              std::uint32_t p);

/// dst[i] = (s * dst[i]) mod p.
void scale_mod(std::span<std::uint32_t> dst, std::uint32_t s, std::uint32_t p);

namespace scalar {
void axpy_mod(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src, std::uint32_t s,
              std::uint32_t p);
void scale_mod(std::span<std::uint32_t> dst, std::uint32_t s, std::uint32_t p);
}  // namespace scalar

namespace avx2 {
bool supported();
void axpy_mod(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src, std::uint32_t s,
              std::uint32_t p);
void scale_mod(std::span<std::uint32_t> dst, std::uint32_t s, std::uint32_t p);
}  // namespace avx2

}  // namespace prymcalc::kernels
