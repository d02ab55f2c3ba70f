#pragma once

// JSON forms of library values and the operad / instance file formats.

#include "operad_forge/algebra_instance.hpp"

#include <json.hpp>

#include <string>

namespace operad_forge {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& r);
Json to_json(const Weight3Element& x);
Json to_json(const RelationModule& r);
Json to_json(const LRPair& p);
Json to_json(const QuadraticOperad& p);
Json to_json(const IsotypicProfile& p);
Json to_json(const TensorElement3& t);
Json to_json(const TargetCheck& c);
Json to_json(const ClosureCertificate& c);
Json to_json(const AlgebraInstance& a);
Json to_json(const Violation& v, const std::vector<Weight3Element>& targets);

/// Integer or "p/q" string.
Rational rational_from_json(const Json& j);

/// {dim, structure: [[i, j, k, c], ...]} with 1-based indices and c an
/// integer or a "p/q" string.  Optional "name".
AlgebraInstance instance_from_json(const Json& j);
AlgebraInstance parse_instance(const std::string& text);

/// Operad definition, JSON:
///   {"name": ..., "symmetry": "regular"|"comm"|"anticomm",
///    "relations": [...], "presentation": [{"v": ..., "w": ...}]}
/// or plain text, one "key: value" per line, '#' starts a comment:
///   name: leibniz
///   symmetry: regular
///   relation: x*(y*z) - (x*y)*z + (x*z)*y
///   presentation: Id - t23 ; Id
/// Without a presentation, each listed regular relation becomes one
/// generator.
QuadraticOperad parse_operad_definition(const std::string& text);
QuadraticOperad operad_from_json(const Json& j);

std::string read_file(const std::string& path);

/// Preset name or path to a definition file.
QuadraticOperad load_operad(const std::string& name_or_path);
/// Fixture name or path to an instance file.
AlgebraInstance load_instance(const std::string& name_or_path);

} // namespace operad_forge
