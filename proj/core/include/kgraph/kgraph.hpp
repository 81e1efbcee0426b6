#pragma once

// Factorization engine: a skeleton plus a table of commuting squares presents a
// k-graph. Paths are kept in canonical form (all colour-1 edges first, then
// colour 2, ..., then colour k), which makes path equality a sequence
// comparison. Reordering a path is done by adjacent square swaps; the cube
// condition makes the result independent of the swap schedule.

#include <array>
#include <compare>
#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "kgraph/degree.hpp"
#include "kgraph/skeleton.hpp"

namespace kgraph {

/// One commuting square: pair = (colour-i edge f, colour-j edge g) with i < j
/// and s(f) = r(g); image = (colour-j edge g', colour-i edge f').
struct SquareEntry {
    std::array<std::string, 2> pair;
    std::array<std::string, 2> image;

    friend bool operator==(const SquareEntry&, const SquareEntry&) = default;
};

struct SquareTableInput {
    std::vector<SquareEntry> squares;

    friend bool operator==(const SquareTableInput&, const SquareTableInput&) = default;
};

/// Everything a graph document carries.
struct GraphInput {
    std::string name;
    SkeletonInput skeleton;
    SquareTableInput squares;

    friend bool operator==(const GraphInput&, const GraphInput&) = default;
};

/// Checks that each colour-pair table is a bijection between the composable
/// (i, j) and (j, i) pairs with matching outer endpoints.
ValidationReport validate_squares(const Skeleton& sk, const SquareTableInput& squares);

/// For k >= 3: every composable three-edge path with three distinct colours
/// reverses to the same path under both reduced swap schedules. Reports a
/// "squares-invalid" violation instead when the squares themselves are bad.
ValidationReport validate_cubes(const Skeleton& sk, const SquareTableInput& squares);

/// A finite path in canonical form. Obtain paths from a KGraph.
class Path {
public:
    VertexIndex range() const noexcept { return range_; }
    VertexIndex source() const noexcept { return source_; }
    const Degree& degree() const noexcept { return degree_; }
    const std::vector<EdgeIndex>& edges() const noexcept { return edges_; }
    std::size_t length() const noexcept { return edges_.size(); }
    bool is_vertex() const noexcept { return edges_.empty(); }

    friend bool operator==(const Path& a, const Path& b) noexcept {
        return a.range_ == b.range_ && a.edges_ == b.edges_;
    }
    /// Lexicographic on canonical edge sequences (edge index order is id
    /// order), ties broken by range. This is the order behind every
    /// "canonically least" choice.
    friend std::strong_ordering operator<=>(const Path& a, const Path& b) noexcept;

private:
    friend class KGraph;
    Path(VertexIndex range, VertexIndex source, Degree degree, std::vector<EdgeIndex> edges)
        : range_(range), source_(source), degree_(std::move(degree)), edges_(std::move(edges)) {}

    VertexIndex range_{};
    VertexIndex source_{};
    Degree degree_;
    std::vector<EdgeIndex> edges_;
};

enum class SwapSchedule { left_to_right, right_to_left };

class KGraph {
public:
    /// Throws ValidationError (skeleton, square and cube violations together).
    static KGraph build(const GraphInput& input);
    static KGraph build(Skeleton skeleton, const SquareTableInput& squares, std::string name = {});

    const std::string& name() const noexcept { return name_; }
    const Skeleton& skeleton() const noexcept { return skeleton_; }
    std::size_t rank() const noexcept { return skeleton_.rank(); }
    std::size_t vertex_count() const noexcept { return skeleton_.vertex_count(); }
    std::vector<VertexIndex> vertices() const;
    int color(EdgeIndex e) const { return skeleton_.edge(e).color; }

    /// The square partner of a composable pair (a, b) of distinct colours:
    /// the unique (b', a') with colour(b') = colour(b), colour(a') = colour(a)
    /// and a b = b' a' in the k-graph.
    std::pair<EdgeIndex, EdgeIndex> swap(EdgeIndex a, EdgeIndex b) const;

    Path vertex_path(VertexIndex v) const;
    Path edge_path(EdgeIndex e) const;
    /// Canonical form of a composable edge sequence starting at `range`.
    /// Throws InputError when the sequence is not composable.
    Path normalize(VertexIndex range, std::span<const EdgeIndex> edges,
                   SwapSchedule schedule = SwapSchedule::left_to_right) const;

    /// mu nu; requires s(mu) = r(nu).
    Path compose(const Path& mu, const Path& nu) const;
    /// The unique (mu, nu) with d(mu) = m and lambda = mu nu; requires m <= d(lambda).
    std::pair<Path, Path> factor(const Path& lambda, const Degree& m) const;
    /// lambda(m, n); requires 0 <= m <= n <= d(lambda).
    Path segment(const Path& lambda, const Degree& m, const Degree& n) const;
    /// The vertex lambda(m) = s(lambda(0, m)).
    VertexIndex vertex_at(const Path& lambda, const Degree& m) const;
    Path extend_by_edge(const Path& lambda, EdgeIndex e) const;

    /// v Lambda^n in lexicographic order.
    std::vector<Path> paths_from(VertexIndex v, const Degree& n) const;
    /// Lambda^n v in lexicographic order.
    std::vector<Path> paths_into(VertexIndex v, const Degree& n) const;
    /// Lambda^n, all ranges, lexicographic order.
    std::vector<Path> paths_of_degree(const Degree& n) const;

    /// The square table in document form, sorted by pair ids.
    SquareTableInput squares() const;
    GraphInput to_input() const;

private:
    KGraph(Skeleton skeleton, std::string name) : skeleton_(std::move(skeleton)), name_(std::move(name)) {}

    Path make_path(VertexIndex range, std::vector<EdgeIndex> edges) const;
    /// Bubble-sorts adjacent edges into the colour word described by `keys`
    /// using square swaps.
    void reorder(std::vector<EdgeIndex>& edges, std::vector<std::size_t>& keys, SwapSchedule schedule) const;
    void reorder_to(std::vector<EdgeIndex>& edges, std::span<const Degree> blocks) const;
    void check_degree(const Degree& d) const;

    static std::uint64_t key(EdgeIndex a, EdgeIndex b) noexcept {
        return (std::uint64_t{static_cast<std::uint32_t>(a)} << 32) | static_cast<std::uint32_t>(b);
    }

    Skeleton skeleton_;
    std::string name_;
    // (a, b) -> (b', a') in both directions; an involution.
    std::unordered_map<std::uint64_t, std::uint64_t> swaps_;
};

}  // namespace kgraph

template <>
struct std::hash<kgraph::Path> {
    std::size_t operator()(const kgraph::Path& p) const noexcept;
};
