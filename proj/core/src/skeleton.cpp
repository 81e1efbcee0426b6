#include "kgraph/skeleton.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace kgraph {

void ValidationReport::add(std::string kind, std::string where, std::string message) {
    violations_.push_back({std::move(kind), std::move(where), std::move(message)});
}

void ValidationReport::append(const ValidationReport& other) {
    violations_.insert(violations_.end(), other.violations_.begin(), other.violations_.end());
}

bool ValidationReport::has_kind(std::string_view kind) const {
    return std::any_of(violations_.begin(), violations_.end(), [&](const Violation& v) { return v.kind == kind; });
}

std::string ValidationReport::to_string() const {
    std::ostringstream os;
    for (const auto& v : violations_) os << v.where << ": " << v.message << " [" << v.kind << "]\n";
    return os.str();
}

ValidationError::ValidationError(ValidationReport report)
    : InputError("validation failed:\n" + report.to_string()), report_(std::move(report)) {}

ValidationReport validate(const SkeletonInput& input) {
    ValidationReport report;
    if (input.rank < 1) {
        report.add("rank", "/k", "rank must be at least 1, got " + std::to_string(input.rank));
    }
    if (input.vertices.empty()) report.add("empty", "/vertices", "graph has no vertices");

    std::set<std::string> vertices;
    for (std::size_t i = 0; i < input.vertices.size(); ++i) {
        if (!vertices.insert(input.vertices[i]).second) {
            report.add("duplicate-vertex", "/vertices/" + std::to_string(i),
                       "duplicate vertex id '" + input.vertices[i] + "'");
        }
    }

    std::set<std::string> edge_ids;
    // (vertex, colour) pairs that occur as the range of some edge
    std::set<std::pair<std::string, int>> covered;
    for (std::size_t i = 0; i < input.edges.size(); ++i) {
        const auto& e = input.edges[i];
        const std::string at = "/edges/" + std::to_string(i);
        if (!edge_ids.insert(e.id).second) {
            report.add("duplicate-edge", at + "/id", "duplicate edge id '" + e.id + "'");
        }
        bool color_ok = e.color >= 1 && e.color <= input.rank;
        if (!color_ok) {
            report.add("color", at + "/color",
                       "edge '" + e.id + "' has colour " + std::to_string(e.color) + " outside 1.." +
                           std::to_string(input.rank));
        }
        bool range_ok = vertices.count(e.range) > 0;
        if (!range_ok) {
            report.add("dangling-range", at + "/range", "edge '" + e.id + "' has unknown range '" + e.range + "'");
        }
        if (!vertices.count(e.source)) {
            report.add("dangling-source", at + "/source", "edge '" + e.id + "' has unknown source '" + e.source + "'");
        }
        if (color_ok && range_ok) covered.emplace(e.range, e.color);
    }

    if (input.rank >= 1) {
        for (std::size_t i = 0; i < input.vertices.size(); ++i) {
            for (int c = 1; c <= input.rank; ++c) {
                if (!covered.count({input.vertices[i], c})) {
                    report.add("source", "/vertices/" + std::to_string(i),
                               "vertex '" + input.vertices[i] + "' receives no edge of colour " + std::to_string(c));
                }
            }
        }
    }
    return report;
}

CountMatrix CountMatrix::identity(std::size_t n) {
    CountMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

CountMatrix operator*(const CountMatrix& a, const CountMatrix& b) {
    if (a.size() != b.size()) throw InputError("matrix size mismatch");
    const std::size_t n = a.size();
    CountMatrix out(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t l = 0; l < n; ++l) {
            std::uint64_t x = a.at(i, l);
            if (x == 0) continue;
            for (std::size_t j = 0; j < n; ++j) {
                std::uint64_t prod = 0, sum = 0;
                if (__builtin_mul_overflow(x, b.at(l, j), &prod) || __builtin_add_overflow(out.at(i, j), prod, &sum)) {
                    throw DomainError("path count overflows 64 bits");
                }
                out.at(i, j) = sum;
            }
        }
    }
    return out;
}

Skeleton Skeleton::build(const SkeletonInput& input) {
    ValidationReport report = validate(input);
    if (!report.ok()) throw ValidationError(std::move(report));

    Skeleton sk;
    sk.rank_ = static_cast<std::size_t>(input.rank);
    sk.vertex_ids_ = input.vertices;
    std::sort(sk.vertex_ids_.begin(), sk.vertex_ids_.end());
    for (std::size_t i = 0; i < sk.vertex_ids_.size(); ++i) {
        sk.vertex_lookup_.emplace(sk.vertex_ids_[i], VertexIndex{static_cast<std::uint32_t>(i)});
    }

    std::vector<EdgeRecord> records = input.edges;
    std::sort(records.begin(), records.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
    sk.by_range_.resize(sk.vertex_ids_.size() * sk.rank_);
    sk.by_source_.resize(sk.vertex_ids_.size() * sk.rank_);
    for (std::size_t i = 0; i < records.size(); ++i) {
        const auto& r = records[i];
        Edge e{r.id, r.color, sk.vertex_lookup_.at(r.range), sk.vertex_lookup_.at(r.source)};
        EdgeIndex idx{static_cast<std::uint32_t>(i)};
        sk.by_range_[sk.slot(e.range, e.color)].push_back(idx);
        sk.by_source_[sk.slot(e.source, e.color)].push_back(idx);
        sk.edge_lookup_.emplace(e.id, idx);
        sk.edges_.push_back(std::move(e));
    }
    return sk;
}

std::size_t Skeleton::slot(VertexIndex v, int color) const {
    if (to_index(v) >= vertex_ids_.size()) throw InputError("vertex index out of range");
    if (color < 1 || static_cast<std::size_t>(color) > rank_) {
        throw InputError("colour " + std::to_string(color) + " outside 1.." + std::to_string(rank_));
    }
    return to_index(v) * rank_ + static_cast<std::size_t>(color - 1);
}

std::optional<VertexIndex> Skeleton::find_vertex(std::string_view id) const {
    auto it = vertex_lookup_.find(std::string(id));
    if (it == vertex_lookup_.end()) return std::nullopt;
    return it->second;
}

VertexIndex Skeleton::vertex(std::string_view id) const {
    if (auto v = find_vertex(id)) return *v;
    throw InputError("unknown vertex '" + std::string(id) + "'");
}

std::optional<EdgeIndex> Skeleton::find_edge(std::string_view id) const {
    auto it = edge_lookup_.find(std::string(id));
    if (it == edge_lookup_.end()) return std::nullopt;
    return it->second;
}

EdgeIndex Skeleton::edge_index(std::string_view id) const {
    if (auto e = find_edge(id)) return *e;
    throw InputError("unknown edge '" + std::string(id) + "'");
}

std::span<const EdgeIndex> Skeleton::edges_with_range(VertexIndex v, int color) const {
    return by_range_[slot(v, color)];
}

std::span<const EdgeIndex> Skeleton::edges_with_source(VertexIndex v, int color) const {
    return by_source_[slot(v, color)];
}

SkeletonInput Skeleton::to_input() const {
    SkeletonInput out;
    out.rank = static_cast<int>(rank_);
    out.vertices = vertex_ids_;
    for (const auto& e : edges_) {
        out.edges.push_back({e.id, e.color, vertex_ids_[to_index(e.range)], vertex_ids_[to_index(e.source)]});
    }
    return out;
}

std::vector<CountMatrix> vertex_matrices(const Skeleton& sk) {
    std::vector<CountMatrix> out(sk.rank(), CountMatrix(sk.vertex_count()));
    for (std::size_t i = 0; i < sk.edge_count(); ++i) {
        const auto& e = sk.edge(EdgeIndex{static_cast<std::uint32_t>(i)});
        ++out[static_cast<std::size_t>(e.color - 1)].at(to_index(e.range), to_index(e.source));
    }
    return out;
}

}  // namespace kgraph
