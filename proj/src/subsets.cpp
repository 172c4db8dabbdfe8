#include "suboplex/subsets.hpp"

namespace suboplex {

GroundSpec::GroundSpec(int n) : n_(n) {
    if (n < 1 || n > kMaxGround) {
        throw ValidationError("ground size n must lie in [1, 64], got " + std::to_string(n));
    }
}

void validate_subset(Subset s, const GroundSpec& g) {
    if ((s.bits & ~g.full_mask()) != 0) {
        throw ValidationError("subset has elements outside [" + std::to_string(g.n()) + "]");
    }
}

std::string to_bitstring(Subset s, const GroundSpec& g) {
    std::string out(static_cast<std::size_t>(g.n()), '0');
    for (int i = 0; i < g.n(); ++i) {
        if (s.contains(i)) out[static_cast<std::size_t>(i)] = '1';
    }
    return out;
}

Subset parse_bitstring(std::string_view text, const GroundSpec& g) {
    if (text.size() != static_cast<std::size_t>(g.n())) {
        throw ValidationError("bitstring \"" + std::string(text) + "\" has length " + std::to_string(text.size()) +
                              ", expected n = " + std::to_string(g.n()));
    }
    Subset s;
    for (int i = 0; i < g.n(); ++i) {
        const char c = text[static_cast<std::size_t>(i)];
        if (c == '1') {
            s = s.with(i);
        } else if (c != '0') {
            throw ValidationError("bitstring \"" + std::string(text) + "\" contains a character other than 0/1");
        }
    }
    return s;
}

std::string to_pattern(const PartialFunction& f, const GroundSpec& g) {
    std::string out(static_cast<std::size_t>(g.n()), '*');
    for (int i = 0; i < g.n(); ++i) {
        if (f.ones.contains(i)) out[static_cast<std::size_t>(i)] = '1';
        if (f.zeros.contains(i)) out[static_cast<std::size_t>(i)] = '0';
    }
    return out;
}

PartialFunction delta(Subset a, Subset b, const GroundSpec& g) {
    validate_subset(a, g);
    validate_subset(b, g);
    if (!a.subset_of(b)) throw ValidationError("delta(A,B) requires A to be a subset of B");
    return {a, complement(b, g)};
}

SquarefreeMonomial monomial(Subset a, Subset b, const GroundSpec& g) {
    validate_subset(a, g);
    validate_subset(b, g);
    if (!a.subset_of(b)) throw ValidationError("m(A,B) requires A to be a subset of B");
    return {b, complement(a, g)};
}

std::pair<Subset, Subset> dictionary_pair(const SquarefreeMonomial& m, const GroundSpec& g) {
    if (!m.covers_ground(g)) {
        throw ValidationError("monomial " + to_string(m, g) + " is not of the form m(A,B)");
    }
    return {complement(m.support1, g), m.support0};
}

std::string to_string(const SquarefreeMonomial& m, const GroundSpec& g) {
    std::string out;
    for (int i = 0; i < g.n(); ++i) {
        for (int b = 0; b < 2; ++b) {
            const Subset& support = b == 0 ? m.support0 : m.support1;
            if (!support.contains(i)) continue;
            if (!out.empty()) out += '*';
            out += 'x' + std::to_string(i) + '_' + std::to_string(b);
        }
    }
    return out.empty() ? "1" : out;
}

std::string dictionary_label(const SquarefreeMonomial& m, const GroundSpec& g) {
    const auto [a, b] = dictionary_pair(m, g);
    return "m(" + to_bitstring(a, g) + "," + to_bitstring(b, g) + ")";
}

}  // namespace suboplex
