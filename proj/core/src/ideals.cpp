#include "kgraph/ideals.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <set>
#include <string_view>


namespace kgraph {

VertexSet VertexSet::all(std::size_t universe) {
    VertexSet s(universe);
    std::fill(s.bits_.begin(), s.bits_.end(), true);
    return s;
}

VertexSet VertexSet::from_ids(const KGraph& g, const std::vector<std::string>& ids) {
    VertexSet s(g.vertex_count());
    for (const auto& id : ids) s.insert(g.skeleton().vertex(id));
    return s;
}

std::size_t VertexSet::size() const noexcept {
    return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), true));
}

std::vector<VertexIndex> VertexSet::members() const {
    std::vector<VertexIndex> out;
    for (std::size_t i = 0; i < bits_.size(); ++i) {
        if (bits_[i]) out.push_back(VertexIndex{static_cast<std::uint32_t>(i)});
    }
    return out;
}

std::vector<std::string> VertexSet::ids(const KGraph& g) const {
    std::vector<std::string> out;
    for (VertexIndex v : members()) out.push_back(g.skeleton().vertex_id(v));
    return out;
}

std::string VertexSet::to_string(const KGraph& g) const {
    std::string out = "{";
    for (const auto& id : ids(g)) out += (out.size() > 1 ? ", " : "") + id;
    return out + "}";
}

VertexSet VertexSet::united(const VertexSet& other) const {
    if (universe() != other.universe()) throw InputError("vertex sets over different graphs");
    VertexSet out = *this;
    for (std::size_t i = 0; i < bits_.size(); ++i) out.bits_[i] = bits_[i] || other.bits_[i];
    return out;
}

bool VertexSet::subset_of(const VertexSet& other) const {
    for (std::size_t i = 0; i < bits_.size(); ++i) {
        if (bits_[i] && !other.bits_.at(i)) return false;
    }
    return true;
}

bool enumeration_less(const VertexSet& a, const VertexSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.members() < b.members();
}

namespace {

void check_universe(const KGraph& g, const VertexSet& h) {
    if (h.universe() != g.vertex_count()) throw InputError("vertex set does not match the graph");
}

EdgeIndex nth_edge(std::size_t i) { return EdgeIndex{static_cast<std::uint32_t>(i)}; }

// Some colour i with every edge of v E^i sourced in h.
bool forced_in(const KGraph& g, const VertexSet& h, VertexIndex v) {
    for (int c = 1; c <= static_cast<int>(g.rank()); ++c) {
        auto edges = g.skeleton().edges_with_range(v, c);
        if (std::all_of(edges.begin(), edges.end(),
                        [&](EdgeIndex e) { return h.contains(g.skeleton().edge(e).source); })) {
            return true;
        }
    }
    return false;
}

}  // namespace

bool is_hereditary(const KGraph& g, const VertexSet& h) {
    check_universe(g, h);
    const Skeleton& sk = g.skeleton();
    for (std::size_t i = 0; i < sk.edge_count(); ++i) {
        const auto& e = sk.edge(nth_edge(i));
        if (h.contains(e.range) && !h.contains(e.source)) return false;
    }
    return true;
}

bool is_saturated(const KGraph& g, const VertexSet& h) {
    check_universe(g, h);
    for (VertexIndex v : g.vertices()) {
        if (!h.contains(v) && forced_in(g, h, v)) return false;
    }
    return true;
}

VertexSet sat_her_closure(const KGraph& g, const VertexSet& s) {
    check_universe(g, s);
    const Skeleton& sk = g.skeleton();
    VertexSet h = s;
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < sk.edge_count(); ++i) {
            const auto& e = sk.edge(nth_edge(i));
            if (h.contains(e.range) && !h.contains(e.source)) {
                h.insert(e.source);
                changed = true;
            }
        }
        for (VertexIndex v : g.vertices()) {
            if (!h.contains(v) && forced_in(g, h, v)) {
                h.insert(v);
                changed = true;
            }
        }
    }
    return h;
}

std::size_t enumeration_limit() {
    const char* raw = std::getenv("KGRAPH_MAX_VERTICES");
    if (raw == nullptr || *raw == '\0') return kDefaultEnumerationLimit;
    std::string_view text(raw);
    std::size_t value = 0;
    auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || end != text.data() + text.size()) {
        throw InputError("KGRAPH_MAX_VERTICES must be a nonnegative integer, got '" + std::string(text) + "'");
    }
    return value;
}

std::vector<VertexSet> enumerate_sat_her(const KGraph& g, std::optional<std::size_t> limit) {
    const std::size_t cap = limit.value_or(enumeration_limit());
    if (g.vertex_count() > cap) {
        throw LimitError("graph has " + std::to_string(g.vertex_count()) +
                         " vertices; saturated hereditary enumeration is limited to " + std::to_string(cap) +
                         " (set KGRAPH_MAX_VERTICES to raise it)");
    }
    const std::size_t nv = g.vertex_count();
    std::vector<VertexSet> singles;
    for (VertexIndex v : g.vertices()) {
        VertexSet s(nv);
        s.insert(v);
        singles.push_back(sat_her_closure(g, s));
    }
    auto less = [](const VertexSet& a, const VertexSet& b) { return enumeration_less(a, b); };
    std::set<VertexSet, decltype(less)> found(less);
    std::vector<VertexSet> work{VertexSet(nv)};
    found.insert(VertexSet(nv));
    while (!work.empty()) {
        VertexSet a = std::move(work.back());
        work.pop_back();
        for (const VertexSet& c : singles) {
            VertexSet next = sat_her_closure(g, a.united(c));
            if (found.insert(next).second) work.push_back(std::move(next));
        }
    }
    return {found.begin(), found.end()};
}

CofinalityResult is_cofinal(const KGraph& g) {
    CofinalityResult out;
    for (VertexIndex v : g.vertices()) {
        VertexSet s(g.vertex_count());
        s.insert(v);
        VertexSet c = sat_her_closure(g, s);
        if (c.is_full()) continue;
        out.cofinal = false;
        if (!out.witness || enumeration_less(c, *out.witness)) out.witness = std::move(c);
    }
    return out;
}

bool cofinality_oracle(const KGraph& g, std::uint32_t depth) {
    const Skeleton& sk = g.skeleton();
    const std::size_t nv = g.vertex_count();
    // reach[v][w]: some path has range v and source w
    std::vector<std::vector<bool>> reach(nv, std::vector<bool>(nv, false));
    for (VertexIndex v : g.vertices()) {
        std::vector<VertexIndex> stack{v};
        reach[to_index(v)][to_index(v)] = true;
        while (!stack.empty()) {
            VertexIndex at = stack.back();
            stack.pop_back();
            for (int c = 1; c <= static_cast<int>(g.rank()); ++c) {
                for (EdgeIndex e : sk.edges_with_range(at, c)) {
                    VertexIndex s = sk.edge(e).source;
                    if (!reach[to_index(v)][to_index(s)]) {
                        reach[to_index(v)][to_index(s)] = true;
                        stack.push_back(s);
                    }
                }
            }
        }
    }
    // Each x(0, D) is a path of degree D = (depth, ..., depth) and every such
    // path extends to an infinite path, so these are exactly the windows to test.
    const Degree window = Degree::uniform(g.rank(), depth);
    const auto coords = degrees_below(window);
    for (const Path& lambda : g.paths_of_degree(window)) {
        std::vector<bool> visited(nv, false);
        for (const Degree& n : coords) visited[to_index(g.vertex_at(lambda, n))] = true;
        for (VertexIndex v : g.vertices()) {
            bool hit = false;
            for (std::size_t w = 0; w < nv && !hit; ++w) hit = visited[w] && reach[to_index(v)][w];
            if (!hit) return false;
        }
    }
    return true;
}

KGraph quotient(const KGraph& g, const VertexSet& h) {
    check_universe(g, h);
    if (h.is_full()) throw InputError("quotient by the full vertex set is empty");
    if (!is_hereditary(g, h) || !is_saturated(g, h)) {
        throw InputError("quotient needs a saturated hereditary set; " + h.to_string(g) + " is not");
    }
    const Skeleton& sk = g.skeleton();
    GraphInput in;
    in.name = h.empty() ? g.name() : g.name() + "\\" + h.to_string(g);
    in.skeleton.rank = static_cast<int>(g.rank());
    for (VertexIndex v : g.vertices()) {
        if (!h.contains(v)) in.skeleton.vertices.push_back(sk.vertex_id(v));
    }
    std::set<std::string> kept;
    for (std::size_t i = 0; i < sk.edge_count(); ++i) {
        const auto& e = sk.edge(nth_edge(i));
        if (h.contains(e.source)) continue;
        in.skeleton.edges.push_back({e.id, e.color, sk.vertex_id(e.range), sk.vertex_id(e.source)});
        kept.insert(e.id);
    }
    for (const SquareEntry& sq : g.squares().squares) {
        if (kept.contains(sq.pair[0]) && kept.contains(sq.pair[1])) in.squares.squares.push_back(sq);
    }
    return KGraph::build(in);
}

std::vector<std::uint64_t> core_dimensions(const KGraph& g, const Degree& n) {
    if (n.rank() != g.rank()) throw InputError("degree rank does not match the graph");
    const auto ms = vertex_matrices(g.skeleton());
    CountMatrix product = CountMatrix::identity(g.vertex_count());
    for (std::size_t c = 0; c < g.rank(); ++c) {
        for (std::uint32_t t = 0; t < n[c]; ++t) product = product * ms[c];
    }
    // rows are ranges, columns sources; Lambda^n v sums column v
    std::vector<std::uint64_t> out(g.vertex_count(), 0);
    for (std::size_t r = 0; r < g.vertex_count(); ++r) {
        for (std::size_t c = 0; c < g.vertex_count(); ++c) out[c] += product.at(r, c);
    }
    return out;
}

}  // namespace kgraph
