#pragma once
// JSON formats for posets, classes, matroids, formula specs and cell
// complexes, and the "kind:payload" build specs used by the CLI.
//
//   poset    {"n":4,"elements":["0000","1000",...]}
//   class    {"n":4,"functions":["0111",...]}
//   matroid  {"type":"uniform","k":2,"m":3}
//            {"type":"linear","p":2,"matrix":[[1,0],[0,1]]}
//            {"type":"graphic","vertices":4,"edges":[[0,1],...]}
//            {"type":"direct_sum","parts":[...]}
//   formula  {"type":"kcnf","d":3,"k":2,"monotone":true}
//            {"type":"csp","d":3,"generators":["01101001",...]}
//            {"type":"parity_conj","d":3}, {"type":"poly_conj","d":3,"k":1}
//   cells    {"vertices":4,"faces":[[0,1,2],[2,3],...]}
//   complex  {"vertices":5,"facets":[[0,1,2],[2,3,4]]}

#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "suboplex/betti.hpp"
#include "suboplex/builders.hpp"
#include "suboplex/function_class.hpp"
#include "suboplex/poset.hpp"

namespace suboplex {

using Json = nlohmann::ordered_json;

/// A loaded analysis target. `poset` is set for poset-shaped sources
/// (posets, flat lattices, face posets, formula classes) and for classes
/// whose support family is intersection-closed.
struct LoadedInput {
    FunctionClass cls;
    std::optional<SubsetPoset> poset;
};

/// Parses text; malformed JSON becomes a ValidationError naming `what`.
Json parse_json(std::string_view text, std::string_view what);

SubsetPoset poset_from_json(const Json& j);
FunctionClass class_from_json(const Json& j);
Matroid matroid_from_json(const Json& j);
FormulaClassSpec formula_from_json(const Json& j);
CellComplexInput cells_from_json(const Json& j);
/// Simplicial complex generated by its facets.
SimplicialComplex complex_from_json(const Json& j);
/// Reads and parses a JSON file.
Json read_json_file(const std::string& path);

/// Dispatches on the shape of the document.
LoadedInput load_input(const Json& j);
LoadedInput load_input_file(const std::string& path);
/// "matroid:<json>", "formula:<json>", "cells:<json>" or "cube:<d>".
LoadedInput build_input(std::string_view spec);

Json poset_to_json(const SubsetPoset& p);
Json class_to_json(const FunctionClass& c);
/// {"entries":[{"i":..,"degree":"m(A,B)","value":..}, ...]}
Json betti_to_json(const BettiTable& t);

}  // namespace suboplex
