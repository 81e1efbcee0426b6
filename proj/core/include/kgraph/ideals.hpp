#pragma once

// Hereditary and saturated vertex sets, their closure lattice, cofinality and
// quotient graphs.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kgraph/kgraph.hpp"

namespace kgraph {

/// A subset of a graph's vertices.
class VertexSet {
public:
    explicit VertexSet(std::size_t universe = 0) : bits_(universe, false) {}
    static VertexSet all(std::size_t universe);
    /// Throws InputError on an unknown id.
    static VertexSet from_ids(const KGraph& g, const std::vector<std::string>& ids);

    std::size_t universe() const noexcept { return bits_.size(); }
    bool contains(VertexIndex v) const { return bits_.at(to_index(v)); }
    void insert(VertexIndex v) { bits_.at(to_index(v)) = true; }
    std::size_t size() const noexcept;
    bool empty() const noexcept { return size() == 0; }
    bool is_full() const noexcept { return size() == universe(); }

    std::vector<VertexIndex> members() const;
    /// Member ids in sorted order.
    std::vector<std::string> ids(const KGraph& g) const;
    std::string to_string(const KGraph& g) const;

    VertexSet united(const VertexSet& other) const;
    bool subset_of(const VertexSet& other) const;

    friend bool operator==(const VertexSet&, const VertexSet&) = default;

private:
    std::vector<bool> bits_;
};

/// Smaller sets first, then lexicographic on sorted members.
bool enumeration_less(const VertexSet& a, const VertexSet& b);

/// r(e) in H implies s(e) in H for every edge e.
bool is_hereditary(const KGraph& g, const VertexSet& h);
/// v is in H whenever, for some colour i, every edge in v E^i has its source in H.
bool is_saturated(const KGraph& g, const VertexSet& h);
/// Least saturated hereditary superset.
VertexSet sat_her_closure(const KGraph& g, const VertexSet& s);

constexpr std::size_t kDefaultEnumerationLimit = 20;
/// KGRAPH_MAX_VERTICES when set, else 20. Throws InputError on a malformed value.
std::size_t enumeration_limit();

/// Every saturated hereditary set, including the empty set and all vertices,
/// in enumeration order. Throws LimitError above `limit` vertices.
std::vector<VertexSet> enumerate_sat_her(const KGraph& g, std::optional<std::size_t> limit = std::nullopt);

struct CofinalityResult {
    bool cofinal = true;
    /// Least nonempty proper saturated hereditary set, when one exists.
    std::optional<VertexSet> witness;
};

CofinalityResult is_cofinal(const KGraph& g);

/// Reachability cross-check: for every infinite path x and every vertex v,
/// some n <= (depth, ..., depth) has v Lambda x(n) nonempty. Infinite paths
/// are enumerated through their windows x(0, (depth, ..., depth)).
bool cofinality_oracle(const KGraph& g, std::uint32_t depth);

/// The graph on the vertices outside H with every edge whose source is
/// outside H. Requires H saturated hereditary and not every vertex.
KGraph quotient(const KGraph& g, const VertexSet& h);

/// |Lambda^n v| for each vertex v, from products of the vertex matrices.
std::vector<std::uint64_t> core_dimensions(const KGraph& g, const Degree& n);

}  // namespace kgraph
