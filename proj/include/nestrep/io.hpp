#pragma once

// Graph text files and the JSON encodings of graphs, elements, matrices,
// representations and reports. Every top-level document carries
// "schema_version".

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "nestrep/classify.hpp"
#include "nestrep/formal_element.hpp"
#include "nestrep/representation.hpp"
#include "nestrep/separation.hpp"

namespace nestrep {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

/// Line-oriented format:
///   vertex <name>
///   edge <name> <source> <range>
/// with '#' comments and blank lines. Vertices may be declared after the
/// edges that use them.
DirectedGraph parse_graph(std::string_view text);
DirectedGraph read_graph_file(const std::filesystem::path& file);
std::string format_graph(const DirectedGraph& g);

std::string read_text_file(const std::filesystem::path& file);
void write_text_file(const std::filesystem::path& file, std::string_view text);

/// Parses JSON text; syntax errors become ParseError.
Json parse_json(std::string_view text);

Json graph_to_json(const DirectedGraph& g);
DirectedGraph graph_from_json(const Json& j);

/// {"terms":[{"coeff":[re,im],"path":[...]} | {"coeff":[re,im],"vertex":"x"}]};
/// path arrays list edges in traversal order.
Json element_to_json(const FormalElement& a);
FormalElement element_from_json(const DirectedGraph& g, const Json& j);

/// {"rows":r,"cols":c,"entries":[[re,im],...]} in row-major order.
Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

Json representation_to_json(const FiniteRepresentation& rep,
                            const std::optional<NestStructure>& nest = std::nullopt);
FiniteRepresentation representation_from_json(const DirectedGraph& g, const Json& j);
std::optional<NestStructure> nest_from_json(const Json& j);

Json relations_to_json(const RelationReport& r);
Json witness_to_json(const SeparationWitness& w, const DirectedGraph& g);

Json report_to_json(const ClassificationReport& r, const DirectedGraph& g);
ClassificationReport report_from_json(const DirectedGraph& g, const Json& j);

}  // namespace nestrep
