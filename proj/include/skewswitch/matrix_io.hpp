#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

#include "skewswitch/errors.hpp"
#include "skewswitch/modlinalg.hpp"
#include "skewswitch/pointcomplex.hpp"
#include "skewswitch/skewmat.hpp"

// Matrix files and verdict documents. All vertex labels in these formats
// are 1-based.
//
// JSON:  {"modulus": l, "size": n, "entries": [[...], ...]}
// Text:  first line "l n", then n rows of n whitespace-separated integers.
// Entries may be unreduced; they are reduced mod l on load.
namespace skewswitch::io {

// Documents keep their keys in insertion order.
using Json = nlohmann::ordered_json;

class ParseError : public Error {
 public:
  using Error::Error;
};

AltMatrix parse_matrix(std::string_view text);
AltMatrix load_matrix(const std::filesystem::path& path);

Json matrix_to_json(const AltMatrix& m);
std::string matrix_to_text(const AltMatrix& m);

Json permutation_to_json(const Permutation& sigma);
Permutation permutation_from_json(const Json& j);

Json exponents_to_json(const SwitchExponents& a);
Json facets_to_json(const SimplicialComplex& delta);

// Pretty-prints with two-space indentation, keeping arrays of scalars
// (matrix rows, facets, permutations) on one line.
std::string format_document(const Json& doc);

// Emits a number when it fits in 64 bits, otherwise a decimal string.
Json bigint_to_json(const modlinalg::BigInt& value);

// Graphviz text: an undirected graph for l = 2, otherwise a digraph with
// i -> j drawn for the orientation with the smaller exponent.
std::string to_dot(const AltMatrix& m);

}  // namespace skewswitch::io
