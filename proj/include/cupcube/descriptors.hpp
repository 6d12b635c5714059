#pragma once

#include <json.hpp>

#include "cupcube/branched.hpp"

// JSON descriptor loading and JSON views of results.  Schemas are documented
// in the README; every number is a decimal integer.
namespace cupcube::io {

using json = nlohmann::ordered_json;

std::shared_ptr<const FiniteGroup> load_group(const json& j);
GModule load_module(const json& j, std::shared_ptr<const FiniteGroup> g);
TrilinearPsi load_psi(const json& j, const GModule& m1, const GModule& m2, const GModule& m3);
Representation load_representation(const json& j, const LinkDiagram& d, const FiniteGroup& g);
RMoveSite load_site(const json& j);

json diagram_info(const LinkDiagram& d);
json coloring_info(const ColoringSpace& space);
json cubic_form_info(const CubicForm& f);
json branched_info(const BranchedResult& r);

json read_json_file(const std::string& path);
// Inline PD text or a path to a file containing one.
LinkDiagram load_diagram_arg(const std::string& arg);

inline constexpr const char* kSchemaVersion = "cupcube/1";
// Version of the diagram/weight convention pinning; results produced under
// different pinnings must not be compared silently.
inline constexpr const char* kConventionVersion = "conv-1";

}  // namespace cupcube::io
