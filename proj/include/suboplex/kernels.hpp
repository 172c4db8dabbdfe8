#pragma once
// Data-parallel inner loops of the exact linear algebra and the ideal
// membership tests. Every kernel has a scalar reference implementation; SIMD
// variants are chosen once at startup from the CPU features and must agree
// with the scalar version bit for bit.

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace suboplex::kernels {

enum class Isa { kScalar, kAvx2, kNeon };

std::string_view isa_name(Isa isa);

/// Variants compiled into this binary and supported by the running CPU.
/// Always contains kScalar.
std::vector<Isa> available_isas();

/// The variant used by the dispatching entry points below.
Isa active_isa();

/// Overrides dispatch (tests and benchmarking). Throws std::invalid_argument
/// if the variant is not available.
void force_isa(Isa isa);

/// Restores automatic selection.
void reset_isa();

/// dst[k] ^= src[k]. GF(2) row operation on bit-packed rows.
void xor_words(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src);

/// dst[k] = (dst[k] + factor * src[k]) mod p for entries already reduced
/// mod p. Requires 2 <= p < 2^31.
void axpy_mod(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src, std::uint32_t factor,
              std::uint32_t p);

/// True iff some mask m satisfies m & ~query == 0, i.e. the squarefree
/// monomial m divides `query` (flat variable encoding).
bool any_divides(std::span<const std::uint64_t> masks, std::uint64_t query);

// Direct access to each variant, for equivalence tests.
namespace scalar {
void xor_words(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src);
void axpy_mod(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src, std::uint32_t factor,
              std::uint32_t p);
bool any_divides(std::span<const std::uint64_t> masks, std::uint64_t query);
}  // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
#define SUBOPLEX_HAVE_AVX2_KERNELS 1
namespace avx2 {
void xor_words(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src);
void axpy_mod(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src, std::uint32_t factor,
              std::uint32_t p);
bool any_divides(std::span<const std::uint64_t> masks, std::uint64_t query);
}  // namespace avx2
#endif

#if defined(__aarch64__)
#define SUBOPLEX_HAVE_NEON_KERNELS 1
namespace neon {
void xor_words(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src);
void axpy_mod(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src, std::uint32_t factor,
              std::uint32_t p);
bool any_divides(std::span<const std::uint64_t> masks, std::uint64_t query);
}  // namespace neon
#endif

}  // namespace suboplex::kernels
