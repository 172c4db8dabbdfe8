#include "suboplex/kernels.hpp"

namespace suboplex::kernels::scalar {

void xor_words(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src) {
    for (std::size_t k = 0; k < dst.size(); ++k) dst[k] ^= src[k];
}

void axpy_mod(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src, std::uint32_t factor,
              std::uint32_t p) {
    const std::uint64_t f = factor % p;
    for (std::size_t k = 0; k < dst.size(); ++k) {
        dst[k] = static_cast<std::uint32_t>((dst[k] + f * src[k]) % p);
    }
}

bool any_divides(std::span<const std::uint64_t> masks, std::uint64_t query) {
    for (std::uint64_t m : masks) {
        if ((m & ~query) == 0) return true;
    }
    return false;
}

}  // namespace suboplex::kernels::scalar
