// AVX2 variants. The translation unit is built without -mavx2; each kernel
// carries its own target attribute so that no AVX2 code leaks into inline
// functions shared with the rest of the program.

#include "suboplex/kernels.hpp"

#if defined(SUBOPLEX_HAVE_AVX2_KERNELS)

#include <immintrin.h>

#define SUBOPLEX_AVX2 __attribute__((target("avx2")))

namespace suboplex::kernels::avx2 {

SUBOPLEX_AVX2 void xor_words(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src) {
    const std::size_t n = dst.size();
    std::size_t k = 0;
    for (; k + 4 <= n; k += 4) {
        auto* d = reinterpret_cast<__m256i*>(dst.data() + k);
        const auto* s = reinterpret_cast<const __m256i*>(src.data() + k);
        _mm256_storeu_si256(d, _mm256_xor_si256(_mm256_loadu_si256(d), _mm256_loadu_si256(s)));
    }
    for (; k < n; ++k) dst[k] ^= src[k];
}

// Products f*s with f, s < 2^26 are exact in double precision, so the
// residue is x - floor(x/p)*p with a single correction step either way.
SUBOPLEX_AVX2 void axpy_mod(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src,
                            std::uint32_t factor, std::uint32_t p) {
    constexpr std::uint32_t kExactLimit = 1U << 26;
    if (p >= kExactLimit) {
        scalar::axpy_mod(dst, src, factor, p);
        return;
    }
    const std::uint32_t f = factor % p;
    const __m256d fv = _mm256_set1_pd(static_cast<double>(f));
    const __m256d pv = _mm256_set1_pd(static_cast<double>(p));
    const __m256d invp = _mm256_set1_pd(1.0 / static_cast<double>(p));
    const __m256d zero = _mm256_setzero_pd();

    const std::size_t n = dst.size();
    std::size_t k = 0;
    for (; k + 4 <= n; k += 4) {
        auto* dptr = reinterpret_cast<__m128i*>(dst.data() + k);
        const auto* sptr = reinterpret_cast<const __m128i*>(src.data() + k);
        const __m256d d = _mm256_cvtepi32_pd(_mm_loadu_si128(dptr));
        const __m256d s = _mm256_cvtepi32_pd(_mm_loadu_si128(sptr));
        const __m256d x = _mm256_add_pd(d, _mm256_mul_pd(s, fv));
        const __m256d q = _mm256_floor_pd(_mm256_mul_pd(x, invp));
        __m256d r = _mm256_sub_pd(x, _mm256_mul_pd(q, pv));
        r = _mm256_add_pd(r, _mm256_and_pd(_mm256_cmp_pd(r, zero, _CMP_LT_OQ), pv));
        r = _mm256_sub_pd(r, _mm256_and_pd(_mm256_cmp_pd(r, pv, _CMP_GE_OQ), pv));
        _mm_storeu_si128(dptr, _mm256_cvtpd_epi32(r));
    }
    if (k < n) scalar::axpy_mod(dst.subspan(k), src.subspan(k), f, p);
}

SUBOPLEX_AVX2 bool any_divides(std::span<const std::uint64_t> masks, std::uint64_t query) {
    const __m256i q = _mm256_set1_epi64x(static_cast<long long>(query));
    const __m256i zero = _mm256_setzero_si256();
    const std::size_t n = masks.size();
    std::size_t k = 0;
    for (; k + 4 <= n; k += 4) {
        const __m256i m = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(masks.data() + k));
        const __m256i outside = _mm256_andnot_si256(q, m);
        const __m256i hit = _mm256_cmpeq_epi64(outside, zero);
        if (_mm256_movemask_pd(_mm256_castsi256_pd(hit)) != 0) return true;
    }
    return scalar::any_divides(masks.subspan(k), query);
}

}  // namespace suboplex::kernels::avx2

#endif
