#include <atomic>
#include <stdexcept>
#include <string>

#include "suboplex/kernels.hpp"

namespace suboplex::kernels {
namespace {

struct KernelTable {
    Isa isa;
    void (*xor_words)(std::span<std::uint64_t>, std::span<const std::uint64_t>);
    void (*axpy_mod)(std::span<std::uint32_t>, std::span<const std::uint32_t>, std::uint32_t, std::uint32_t);
    bool (*any_divides)(std::span<const std::uint64_t>, std::uint64_t);
};

constexpr KernelTable kScalarTable{Isa::kScalar, scalar::xor_words, scalar::axpy_mod, scalar::any_divides};
#if defined(SUBOPLEX_HAVE_AVX2_KERNELS)
constexpr KernelTable kAvx2Table{Isa::kAvx2, avx2::xor_words, avx2::axpy_mod, avx2::any_divides};
#endif
#if defined(SUBOPLEX_HAVE_NEON_KERNELS)
constexpr KernelTable kNeonTable{Isa::kNeon, neon::xor_words, neon::axpy_mod, neon::any_divides};
#endif

bool cpu_supports(Isa isa) {
    switch (isa) {
        case Isa::kScalar:
            return true;
        case Isa::kAvx2:
#if defined(SUBOPLEX_HAVE_AVX2_KERNELS)
            return __builtin_cpu_supports("avx2") != 0;
#else
            return false;
#endif
        case Isa::kNeon:
#if defined(SUBOPLEX_HAVE_NEON_KERNELS)
            return true;
#else
            return false;
#endif
    }
    return false;
}

const KernelTable* table_for(Isa isa) {
    switch (isa) {
        case Isa::kScalar:
            return &kScalarTable;
        case Isa::kAvx2:
#if defined(SUBOPLEX_HAVE_AVX2_KERNELS)
            return &kAvx2Table;
#else
            return nullptr;
#endif
        case Isa::kNeon:
#if defined(SUBOPLEX_HAVE_NEON_KERNELS)
            return &kNeonTable;
#else
            return nullptr;
#endif
    }
    return nullptr;
}

const KernelTable* best_table() {
    for (Isa isa : {Isa::kAvx2, Isa::kNeon}) {
        if (cpu_supports(isa)) return table_for(isa);
    }
    return &kScalarTable;
}

std::atomic<const KernelTable*>& current() {
    static std::atomic<const KernelTable*> table{best_table()};
    return table;
}

const KernelTable& active() { return *current().load(std::memory_order_acquire); }

}  // namespace

std::string_view isa_name(Isa isa) {
    switch (isa) {
        case Isa::kScalar:
            return "scalar";
        case Isa::kAvx2:
            return "avx2";
        case Isa::kNeon:
            return "neon";
    }
    return "unknown";
}

std::vector<Isa> available_isas() {
    std::vector<Isa> out;
    for (Isa isa : {Isa::kScalar, Isa::kAvx2, Isa::kNeon}) {
        if (cpu_supports(isa) && table_for(isa) != nullptr) out.push_back(isa);
    }
    return out;
}

Isa active_isa() { return active().isa; }

void force_isa(Isa isa) {
    const KernelTable* table = cpu_supports(isa) ? table_for(isa) : nullptr;
    if (table == nullptr) {
        throw std::invalid_argument("kernel variant " + std::string(isa_name(isa)) + " is not available");
    }
    current().store(table, std::memory_order_release);
}

void reset_isa() { current().store(best_table(), std::memory_order_release); }

void xor_words(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src) { active().xor_words(dst, src); }

void axpy_mod(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src, std::uint32_t factor,
              std::uint32_t p) {
    active().axpy_mod(dst, src, factor, p);
}

bool any_divides(std::span<const std::uint64_t> masks, std::uint64_t query) {
    return active().any_divides(masks, query);
}

}  // namespace suboplex::kernels
