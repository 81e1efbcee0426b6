#pragma once

// Graph documents and report sections as JSON. Every serializer here emits
// keys in a fixed order and lists vertices, edges and sets sorted by id, so
// two runs over the same input produce identical text.

#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "kgraph/analysis.hpp"
#include "kgraph/ideals.hpp"
#include "kgraph/kgraph.hpp"
#include "kgraph/periodicity.hpp"

namespace kgraph {

using Json = nlohmann::ordered_json;

/// Problems found while reading a graph document, each addressed by line and
/// column (syntax) or JSON pointer (fields).
class DocumentError : public InputError {
public:
    explicit DocumentError(std::vector<Violation> problems);
    const std::vector<Violation>& problems() const noexcept { return problems_; }

private:
    std::vector<Violation> problems_;
};

/// Reads {"name"?, "k", "vertices", "edges", "squares"?}. The name defaults
/// to `fallback_name`. Only shape is checked here; graph validation happens
/// in KGraph::build.
GraphInput parse_graph_document(std::string_view text, const std::string& fallback_name);
Json graph_document(const GraphInput& input);
/// graph_document plus a trailing newline, as written to files and stdout.
std::string dump_document(const Json& doc);

Json degree_json(const Degree& d);
Json path_json(const KGraph& g, const Path& p);
Json vertex_set_json(const KGraph& g, const VertexSet& s);
Json violations_json(const ValidationReport& report);
Json witness_json(const KGraph& g, const AperiodicityWitness& w);
Json tuple_json(const KGraph& g, const PeriodicityTuple& t);
Json rep_element_json(const KGraph& g, const RepElement& a);

Json cofinality_json(const KGraph& g, const CofinalityResult& r);
/// `with_entries` adds the per-(vertex, p) decisions and their witnesses.
Json scan_json(const KGraph& g, const ScanResult& r, bool with_entries);
Json simplicity_json(const SimplicityResult& r);
Json gauge_json(const KGraph& g, const GaugeResult& r);

/// Plain-text rendering with one line per scalar or scalar array, nested
/// objects indented under their key, array items introduced by "-".
std::string render_text(const Json& doc);

}  // namespace kgraph
