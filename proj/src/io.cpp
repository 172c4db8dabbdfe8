#include "suboplex/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace suboplex {
namespace {

const Json& field(const Json& j, const char* key, std::string_view what) {
    if (!j.is_object()) throw ValidationError(std::string(what) + " must be a JSON object");
    auto it = j.find(key);
    if (it == j.end()) throw ValidationError(std::string(what) + " is missing field \"" + key + "\"");
    return *it;
}

template <typename T>
T get_as(const Json& j, const char* key, std::string_view what) {
    const Json& v = field(j, key, what);
    try {
        return v.get<T>();
    } catch (const nlohmann::json::exception&) {
        throw ValidationError(std::string(what) + " field \"" + key + "\" has the wrong type");
    }
}

std::vector<Subset> bitstrings(const Json& list, const GroundSpec& g, std::string_view what) {
    if (!list.is_array()) throw ValidationError(std::string(what) + " must be an array of bitstrings");
    std::vector<Subset> out;
    for (const Json& item : list) {
        if (!item.is_string()) throw ValidationError(std::string(what) + " entries must be bitstrings");
        out.push_back(parse_bitstring(item.get<std::string>(), g));
    }
    return out;
}

bool is_matroid_type(const std::string& t) {
    return t == "uniform" || t == "linear" || t == "graphic" || t == "direct_sum";
}

LoadedInput from_poset(SubsetPoset p) {
    FunctionClass c = class_from_poset(p);
    return {std::move(c), std::move(p)};
}

}  // namespace

Json parse_json(std::string_view text, std::string_view what) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ValidationError("malformed JSON in " + std::string(what) + ": " + e.what());
    }
}

SubsetPoset poset_from_json(const Json& j) {
    const GroundSpec g(get_as<int>(j, "n", "poset"));
    return SubsetPoset(g, bitstrings(field(j, "elements", "poset"), g, "poset elements"));
}

FunctionClass class_from_json(const Json& j) {
    const GroundSpec g(get_as<int>(j, "n", "class"));
    return FunctionClass(g, bitstrings(field(j, "functions", "class"), g, "class functions"));
}

Matroid matroid_from_json(const Json& j) {
    const auto type = get_as<std::string>(j, "type", "matroid");
    if (type == "uniform") return Matroid::uniform(get_as<int>(j, "k", "matroid"), get_as<int>(j, "m", "matroid"));
    if (type == "linear") {
        return Matroid::linear(get_as<std::uint32_t>(j, "p", "matroid"),
                               get_as<std::vector<std::vector<std::int64_t>>>(j, "matrix", "matroid"));
    }
    if (type == "graphic") {
        return Matroid::graphic(get_as<int>(j, "vertices", "matroid"),
                                get_as<std::vector<std::pair<int, int>>>(j, "edges", "matroid"));
    }
    if (type == "direct_sum") {
        const Json& parts = field(j, "parts", "matroid");
        if (!parts.is_array()) throw ValidationError("direct_sum parts must be an array");
        std::vector<Matroid> out;
        for (const Json& part : parts) out.push_back(matroid_from_json(part));
        return Matroid::direct_sum(std::move(out));
    }
    throw ValidationError("unknown matroid type \"" + type + "\"");
}

FormulaClassSpec formula_from_json(const Json& j) {
    const auto type = get_as<std::string>(j, "type", "formula");
    FormulaClassSpec spec;
    spec.d = get_as<int>(j, "d", "formula");
    if (type == "kcnf" || type == "monotone_kcnf") {
        spec.kind = FormulaKind::kKcnf;
        spec.k = get_as<int>(j, "k", "formula");
        spec.monotone = type == "monotone_kcnf" || (j.contains("monotone") && get_as<bool>(j, "monotone", "formula"));
    } else if (type == "csp") {
        spec.kind = FormulaKind::kCsp;
        if (spec.d < 1 || spec.d > 4) throw CapExceeded("formula classes need 1 <= d <= 4 (ground size 2^d <= 16)");
        spec.generators = bitstrings(field(j, "generators", "formula"), GroundSpec(1 << spec.d), "csp generators");
    } else if (type == "parity_conj") {
        spec.kind = FormulaKind::kParityConj;
    } else if (type == "poly_conj") {
        spec.kind = FormulaKind::kPolyConj;
        spec.k = get_as<int>(j, "k", "formula");
    } else {
        throw ValidationError("unknown formula type \"" + type + "\"");
    }
    return spec;
}

CellComplexInput cells_from_json(const Json& j) {
    CellComplexInput x{get_as<int>(j, "vertices", "cell complex"), {}};
    const GroundSpec g(x.vertices);
    for (const auto& face : get_as<std::vector<std::vector<int>>>(j, "faces", "cell complex")) {
        Subset s;
        for (int v : face) {
            if (v < 0 || v >= x.vertices) throw ValidationError("cell complex face vertex " + std::to_string(v) + " out of range");
            s = s.with(v);
        }
        x.faces.push_back(s);
    }
    return x;
}

SimplicialComplex complex_from_json(const Json& j) {
    const int vertices = get_as<int>(j, "vertices", "simplicial complex");
    if (vertices < 0) throw ValidationError("simplicial complex needs a nonnegative vertex count");
    std::vector<Face> facets;
    for (auto face : get_as<std::vector<std::vector<std::uint32_t>>>(j, "facets", "simplicial complex")) {
        std::sort(face.begin(), face.end());
        facets.push_back(std::move(face));
    }
    return SimplicialComplex::from_facets(static_cast<std::size_t>(vertices), std::move(facets));
}

LoadedInput load_input(const Json& j) {
    if (!j.is_object()) throw ValidationError("input must be a JSON object");
    if (j.contains("type")) {
        const auto type = get_as<std::string>(j, "type", "input");
        if (is_matroid_type(type)) return from_poset(lattice_of_flats(matroid_from_json(j)));
        FormulaClass f = formula_class(formula_from_json(j));
        return {std::move(f.cls), std::move(f.poset)};
    }
    if (j.contains("elements")) return from_poset(poset_from_json(j));
    if (j.contains("faces")) return from_poset(face_poset(cells_from_json(j)));
    if (j.contains("facets")) throw ValidationError("simplicial complex input is only accepted by check");
    if (j.contains("functions")) {
        FunctionClass c = class_from_json(j);
        SubsetPoset p = c.support_poset();
        if (!is_intersection_closed(p)) return {std::move(c), std::nullopt};
        return {std::move(c), std::move(p)};
    }
    throw ValidationError("input JSON is not a poset, class, matroid, formula spec or cell complex");
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open input file " + path);
    std::ostringstream text;
    text << in.rdbuf();
    return parse_json(text.str(), path);
}

LoadedInput load_input_file(const std::string& path) { return load_input(read_json_file(path)); }

LoadedInput build_input(std::string_view spec) {
    const auto colon = spec.find(':');
    if (colon == std::string_view::npos) throw ValidationError("build spec must look like kind:payload");
    const std::string_view kind = spec.substr(0, colon);
    const std::string_view payload = spec.substr(colon + 1);
    if (kind == "cube") {
        int d = 0;
        try {
            std::size_t used = 0;
            d = std::stoi(std::string(payload), &used);
            if (used != payload.size()) throw std::invalid_argument("trailing");
        } catch (const std::logic_error&) {
            throw ValidationError("cube build spec needs an integer dimension");
        }
        return from_poset(cube_complex(d));
    }
    const Json j = parse_json(payload, std::string(kind) + " build spec");
    if (kind == "matroid") return from_poset(lattice_of_flats(matroid_from_json(j)));
    if (kind == "formula") {
        FormulaClass f = formula_class(formula_from_json(j));
        return {std::move(f.cls), std::move(f.poset)};
    }
    if (kind == "cells") return from_poset(face_poset(cells_from_json(j)));
    throw ValidationError("unknown build kind \"" + std::string(kind) + "\"");
}

Json poset_to_json(const SubsetPoset& p) {
    Json elements = Json::array();
    for (Subset s : p.elements()) elements.push_back(to_bitstring(s, p.ground()));
    return Json{{"n", p.ground().n()}, {"elements", std::move(elements)}};
}

Json class_to_json(const FunctionClass& c) {
    Json functions = Json::array();
    for (Subset f : c.functions()) functions.push_back(to_bitstring(f, c.ground()));
    return Json{{"n", c.ground().n()}, {"functions", std::move(functions)}};
}

Json betti_to_json(const BettiTable& t) {
    Json entries = Json::array();
    for (const auto& [key, value] : t.entries()) {
        entries.push_back(Json{{"i", key.i}, {"degree", degree_label(key.degree, t.ground())}, {"value", value}});
    }
    return Json{{"entries", std::move(entries)}};
}

}  // namespace suboplex
