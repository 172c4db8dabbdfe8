#include "suboplex/kernels.hpp"

#if defined(SUBOPLEX_HAVE_NEON_KERNELS)

#include <arm_neon.h>

namespace suboplex::kernels::neon {

void xor_words(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src) {
    const std::size_t n = dst.size();
    std::size_t k = 0;
    for (; k + 2 <= n; k += 2) {
        vst1q_u64(dst.data() + k, veorq_u64(vld1q_u64(dst.data() + k), vld1q_u64(src.data() + k)));
    }
    for (; k < n; ++k) dst[k] ^= src[k];
}

// No exact 64-bit multiply-reduce is cheaper than the scalar loop here.
void axpy_mod(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src, std::uint32_t factor,
              std::uint32_t p) {
    scalar::axpy_mod(dst, src, factor, p);
}

bool any_divides(std::span<const std::uint64_t> masks, std::uint64_t query) {
    const uint64x2_t q = vdupq_n_u64(query);
    const std::size_t n = masks.size();
    std::size_t k = 0;
    for (; k + 2 <= n; k += 2) {
        const uint64x2_t outside = vbicq_u64(vld1q_u64(masks.data() + k), q);
        const uint64x2_t hit = vceqzq_u64(outside);
        if ((vgetq_lane_u64(hit, 0) | vgetq_lane_u64(hit, 1)) != 0) return true;
    }
    return scalar::any_divides(masks.subspan(k), query);
}

}  // namespace suboplex::kernels::neon

#endif
