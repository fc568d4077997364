#ifndef COLORLIE_JSON_IO_HPP
#define COLORLIE_JSON_IO_HPP

#include <map>
#include <optional>
#include <string>

#include <json.hpp>

#include "colorlie/gmod.hpp"
#include "colorlie/liealg.hpp"

namespace colorlie {

/// Parsed algebra definition file: the algebra itself, an optional cocycle
/// for twisting, and named finite-dimensional modules.
struct AlgebraFile {
  ColorLieAlgebra algebra;
  std::optional<Cocycle> sigma;
  std::map<std::string, GradedModule> modules;
};

/// Parses the JSON schema
///   group:    {free_rank, torsion_orders}
///   gamma:    {matrix: [[unit monomial strings]]}
///   sigma:    {matrix: ...}                        (optional)
///   basis:    [{name, degree: [ints]}]
///   brackets: [{i, j, result: [{k, coeff}]}]      (optional; names or indices)
///   modules:  {name: {basis: [...], actions: {generator: [[scalars]]}}}
/// Omitted bracket pairs default to the skew-symmetric completion or zero.
/// Throws ParseError / SchemaError; never crashes on malformed input.
AlgebraFile parse_algebra_json(const nlohmann::json& j);
AlgebraFile load_algebra_string(const std::string& text);
AlgebraFile load_algebra_file(const std::string& path);

nlohmann::json algebra_to_json(const AlgebraFile& f);

/// Standalone module schema {basis, actions} against a fixed algebra.
GradedModule parse_module_json(const nlohmann::json& j, const ColorLieAlgebra& L);
GradedModule load_module_file(const std::string& path, const ColorLieAlgebra& L);

nlohmann::json group_to_json(const AbelianGroup& g);
nlohmann::json char_matrix_to_json(const GenMatrixChar& c);

}  // namespace colorlie

#endif
