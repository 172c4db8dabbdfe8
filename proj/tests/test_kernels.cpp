#include <doctest.h>

#include <random>
#include <vector>

#include "suboplex/kernels.hpp"

using namespace suboplex;
using namespace suboplex::kernels;

namespace {

struct Variant {
    Isa isa;
    void (*xor_words)(std::span<std::uint64_t>, std::span<const std::uint64_t>);
    void (*axpy_mod)(std::span<std::uint32_t>, std::span<const std::uint32_t>, std::uint32_t, std::uint32_t);
    bool (*any_divides)(std::span<const std::uint64_t>, std::uint64_t);
};

std::vector<Variant> simd_variants() {
    std::vector<Variant> out;
    for (Isa isa : available_isas()) {
#if defined(SUBOPLEX_HAVE_AVX2_KERNELS)
        if (isa == Isa::kAvx2) out.push_back({isa, avx2::xor_words, avx2::axpy_mod, avx2::any_divides});
#endif
#if defined(SUBOPLEX_HAVE_NEON_KERNELS)
        if (isa == Isa::kNeon) out.push_back({isa, neon::xor_words, neon::axpy_mod, neon::any_divides});
#endif
        (void)isa;
    }
    return out;
}

}  // namespace

TEST_CASE("scalar is always available and dispatch can be forced") {
    const auto isas = available_isas();
    REQUIRE(!isas.empty());
    CHECK(isas.front() == Isa::kScalar);
    for (Isa isa : isas) {
        force_isa(isa);
        CHECK(active_isa() == isa);
    }
    reset_isa();
    CHECK(active_isa() == isas.back());
    MESSAGE("active kernel variant: " << isa_name(active_isa()));
}

TEST_CASE("xor_words variants agree with scalar") {
    std::mt19937_64 rng(0x5eed0101);
    for (const Variant& v : simd_variants()) {
        for (std::size_t len : {0u, 1u, 3u, 4u, 5u, 8u, 17u, 64u, 131u}) {
            std::vector<std::uint64_t> a(len), b(len);
            for (auto& x : a) x = rng();
            for (auto& x : b) x = rng();
            std::vector<std::uint64_t> ref = a;
            scalar::xor_words(ref, b);
            v.xor_words(a, b);
            CHECK(a == ref);
        }
    }
}

TEST_CASE("axpy_mod variants agree with scalar") {
    std::mt19937_64 rng(0x5eed0102);
    for (const Variant& v : simd_variants()) {
        for (std::uint32_t p : {2u, 3u, 7u, 65521u, 67108859u, 2147483647u}) {
            for (std::size_t len : {0u, 1u, 7u, 8u, 9u, 33u, 200u}) {
                std::vector<std::uint32_t> dst(len), src(len);
                for (auto& x : dst) x = static_cast<std::uint32_t>(rng() % p);
                for (auto& x : src) x = static_cast<std::uint32_t>(rng() % p);
                const auto factor = static_cast<std::uint32_t>(rng() % p);
                std::vector<std::uint32_t> ref = dst;
                scalar::axpy_mod(ref, src, factor, p);
                v.axpy_mod(dst, src, factor, p);
                CHECK(dst == ref);
            }
        }
    }
}

TEST_CASE("axpy_mod matches 64-bit arithmetic") {
    std::mt19937_64 rng(0x5eed0103);
    const std::uint32_t p = 1000003;
    std::vector<std::uint32_t> dst(50), src(50);
    for (auto& x : dst) x = static_cast<std::uint32_t>(rng() % p);
    for (auto& x : src) x = static_cast<std::uint32_t>(rng() % p);
    const std::uint32_t factor = 999999;
    std::vector<std::uint32_t> expect(50);
    for (std::size_t k = 0; k < 50; ++k) {
        expect[k] = static_cast<std::uint32_t>((dst[k] + std::uint64_t{factor} * src[k]) % p);
    }
    axpy_mod(dst, src, factor, p);
    CHECK(dst == expect);
}

TEST_CASE("any_divides variants agree with scalar") {
    std::mt19937_64 rng(0x5eed0104);
    for (const Variant& v : simd_variants()) {
        for (std::size_t len : {0u, 1u, 2u, 3u, 4u, 5u, 11u, 64u}) {
            for (int trial = 0; trial < 200; ++trial) {
                std::vector<std::uint64_t> masks(len);
                for (auto& m : masks) m = rng() & rng() & rng() & 0xfff;
                const std::uint64_t query = rng() & 0xfff;
                CHECK(v.any_divides(masks, query) == scalar::any_divides(masks, query));
            }
        }
    }
}

TEST_CASE("any_divides reference semantics") {
    const std::vector<std::uint64_t> masks{0b0110, 0b1001};
    CHECK(scalar::any_divides(masks, 0b0111));
    CHECK(scalar::any_divides(masks, 0b1001));
    CHECK_FALSE(scalar::any_divides(masks, 0b0101));
    CHECK_FALSE(scalar::any_divides({}, 0b1111));
    CHECK(any_divides(masks, 0b1111));
}
