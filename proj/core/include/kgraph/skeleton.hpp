#pragma once

// The k-coloured directed multigraph underlying a k-graph: vertices, coloured
// edges, and the row-finite / no-sources validation.
//
// Direction convention: an edge e goes from s(e) to r(e); paths are written
// range-first, so a composable pair (e, f) has s(e) = r(f).

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "kgraph/error.hpp"

namespace kgraph {

enum class VertexIndex : std::uint32_t {};
enum class EdgeIndex : std::uint32_t {};

constexpr std::size_t to_index(VertexIndex v) noexcept { return static_cast<std::size_t>(v); }
constexpr std::size_t to_index(EdgeIndex e) noexcept { return static_cast<std::size_t>(e); }

/// One edge as it appears in a graph document.
struct EdgeRecord {
    std::string id;
    int color = 0;  // 1..k
    std::string range;
    std::string source;

    friend bool operator==(const EdgeRecord&, const EdgeRecord&) = default;
};

/// Unvalidated skeleton data, exactly as read from a document.
struct SkeletonInput {
    int rank = 0;
    std::vector<std::string> vertices;
    std::vector<EdgeRecord> edges;

    friend bool operator==(const SkeletonInput&, const SkeletonInput&) = default;
};

struct Violation {
    std::string kind;   // short machine-readable tag, e.g. "source", "dangling-range"
    std::string where;  // JSON pointer into the document, e.g. "/edges/3/color"
    std::string message;

    friend bool operator==(const Violation&, const Violation&) = default;
};

class ValidationReport {
public:
    bool ok() const noexcept { return violations_.empty(); }
    const std::vector<Violation>& violations() const noexcept { return violations_; }
    void add(std::string kind, std::string where, std::string message);
    void append(const ValidationReport& other);
    bool has_kind(std::string_view kind) const;
    std::string to_string() const;

private:
    std::vector<Violation> violations_;
};

/// Thrown when building a validated object from input that fails validation.
class ValidationError : public InputError {
public:
    explicit ValidationError(ValidationReport report);
    const ValidationReport& report() const noexcept { return report_; }

private:
    ValidationReport report_;
};

/// Lists dangling endpoints, bad colours, duplicate ids and sources
/// (vertices v with v E^i empty for some colour i). Never throws.
ValidationReport validate(const SkeletonInput& input);

/// Square nonnegative integer matrix indexed by vertices.
class CountMatrix {
public:
    explicit CountMatrix(std::size_t n = 0) : n_(n), data_(n * n, 0) {}
    static CountMatrix identity(std::size_t n);

    std::size_t size() const noexcept { return n_; }
    std::uint64_t& at(std::size_t r, std::size_t c) { return data_[r * n_ + c]; }
    std::uint64_t at(std::size_t r, std::size_t c) const { return data_[r * n_ + c]; }

    /// Throws DomainError on 64-bit overflow.
    friend CountMatrix operator*(const CountMatrix& a, const CountMatrix& b);
    friend bool operator==(const CountMatrix&, const CountMatrix&) = default;

private:
    std::size_t n_;
    std::vector<std::uint64_t> data_;
};

/// A validated skeleton. Vertices and edges are stored sorted by id, so index
/// order agrees with id order.
class Skeleton {
public:
    struct Edge {
        std::string id;
        int color;  // 1..k
        VertexIndex range;
        VertexIndex source;
    };

    /// Throws ValidationError carrying the full report when validate() fails.
    static Skeleton build(const SkeletonInput& input);

    std::size_t rank() const noexcept { return rank_; }
    std::size_t vertex_count() const noexcept { return vertex_ids_.size(); }
    std::size_t edge_count() const noexcept { return edges_.size(); }

    const std::string& vertex_id(VertexIndex v) const { return vertex_ids_.at(to_index(v)); }
    std::optional<VertexIndex> find_vertex(std::string_view id) const;
    /// Throws InputError for an unknown id.
    VertexIndex vertex(std::string_view id) const;

    const Edge& edge(EdgeIndex e) const { return edges_.at(to_index(e)); }
    std::optional<EdgeIndex> find_edge(std::string_view id) const;
    EdgeIndex edge_index(std::string_view id) const;

    /// v E^i: colour-i edges whose range is v.
    std::span<const EdgeIndex> edges_with_range(VertexIndex v, int color) const;
    /// E^i v: colour-i edges whose source is v.
    std::span<const EdgeIndex> edges_with_source(VertexIndex v, int color) const;

    SkeletonInput to_input() const;

private:
    Skeleton() = default;
    std::size_t slot(VertexIndex v, int color) const;

    std::size_t rank_ = 0;
    std::vector<std::string> vertex_ids_;
    std::vector<Edge> edges_;
    std::unordered_map<std::string, VertexIndex> vertex_lookup_;
    std::unordered_map<std::string, EdgeIndex> edge_lookup_;
    std::vector<std::vector<EdgeIndex>> by_range_;   // [v * k + color - 1]
    std::vector<std::vector<EdgeIndex>> by_source_;  // [v * k + color - 1]
};

/// M_i with (M_i)[v][w] = |v E^i w|, one matrix per colour.
std::vector<CountMatrix> vertex_matrices(const Skeleton& sk);

}  // namespace kgraph
