#include "kgraph/kgraph.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace kgraph {

std::strong_ordering operator<=>(const Path& a, const Path& b) noexcept {
    if (auto c = a.edges_ <=> b.edges_; c != 0) return c;
    return a.range_ <=> b.range_;
}

namespace {

using EdgePair = std::pair<EdgeIndex, EdgeIndex>;

EdgeIndex nth_edge(std::size_t i) { return EdgeIndex{static_cast<std::uint32_t>(i)}; }

std::string pair_name(const Skeleton& sk, EdgePair p) {
    return "(" + sk.edge(p.first).id + ", " + sk.edge(p.second).id + ")";
}

/// Resolved square entries plus every structural violation found on the way.
struct ResolvedSquares {
    std::map<EdgePair, EdgePair> forward;
    ValidationReport report;
};

ResolvedSquares resolve_squares(const Skeleton& sk, const SquareTableInput& table) {
    ResolvedSquares out;
    auto& report = out.report;
    std::map<EdgePair, std::size_t> image_owner;

    for (std::size_t i = 0; i < table.squares.size(); ++i) {
        const auto& entry = table.squares[i];
        const std::string at = "/squares/" + std::to_string(i);
        bool ids_ok = true;
        std::array<EdgeIndex, 4> e{};
        for (std::size_t j = 0; j < 4; ++j) {
            const std::string& id = j < 2 ? entry.pair[j] : entry.image[j - 2];
            auto found = sk.find_edge(id);
            if (!found) {
                report.add("unknown-edge", at + (j < 2 ? "/pair/" : "/image/") + std::to_string(j % 2),
                           "unknown edge '" + id + "'");
                ids_ok = false;
            } else {
                e[j] = *found;
            }
        }
        if (!ids_ok) continue;

        const auto& f = sk.edge(e[0]);
        const auto& g = sk.edge(e[1]);
        const auto& g2 = sk.edge(e[2]);
        const auto& f2 = sk.edge(e[3]);
        const std::string label = "square (" + f.id + ", " + g.id + ") -> (" + g2.id + ", " + f2.id + ")";
        bool ok = true;
        if (!(f.color < g.color)) {
            report.add("pair-colors", at + "/pair", label + ": pair must be (lower colour, higher colour)");
            ok = false;
        }
        if (g2.color != g.color || f2.color != f.color) {
            report.add("image-colors", at + "/image", label + ": image colours must be the pair's colours swapped");
            ok = false;
        }
        if (f.source != g.range) {
            report.add("pair-not-composable", at + "/pair", label + ": s(f) != r(g)");
            ok = false;
        }
        if (g2.source != f2.range) {
            report.add("image-not-composable", at + "/image", label + ": s(g') != r(f')");
            ok = false;
        }
        if (g2.range != f.range || f2.source != g.source) {
            report.add("endpoint-mismatch", at, label + ": image must have the same range and source as the pair");
            ok = false;
        }
        if (!ok) continue;

        EdgePair pair{e[0], e[1]}, image{e[2], e[3]};
        if (!out.forward.emplace(pair, image).second) {
            report.add("duplicate-pair", at + "/pair", label + ": pair " + pair_name(sk, pair) + " listed twice");
            continue;
        }
        auto [it, fresh] = image_owner.emplace(image, i);
        if (!fresh) {
            report.add("not-injective", at + "/image",
                       label + ": image " + pair_name(sk, image) + " already used by /squares/" +
                           std::to_string(it->second));
        }
    }

    // Totality and surjectivity over every composable pair of distinct colours.
    for (std::size_t a = 0; a < sk.edge_count(); ++a) {
        const auto& ea = sk.edge(nth_edge(a));
        for (int c = 1; c <= static_cast<int>(sk.rank()); ++c) {
            if (c == ea.color) continue;
            for (EdgeIndex b : sk.edges_with_range(ea.source, c)) {
                EdgePair p{nth_edge(a), b};
                if (ea.color < c) {
                    if (!out.forward.count(p)) {
                        report.add("missing-pair", "/squares", "no square for composable pair " + pair_name(sk, p));
                    }
                } else if (!image_owner.count(p)) {
                    report.add("not-surjective", "/squares",
                               "composable pair " + pair_name(sk, p) + " is not the image of any square");
                }
            }
        }
    }
    return out;
}

}  // namespace

ValidationReport validate_squares(const Skeleton& sk, const SquareTableInput& squares) {
    return resolve_squares(sk, squares).report;
}

ValidationReport validate_cubes(const Skeleton& sk, const SquareTableInput& table) {
    ValidationReport report;
    auto resolved = resolve_squares(sk, table);
    if (!resolved.report.ok()) {
        report.add("squares-invalid", "/squares", "cube condition not checked: square table is invalid");
        return report;
    }
    if (sk.rank() < 3) return report;

    std::map<EdgePair, EdgePair> swap;
    for (const auto& [p, img] : resolved.forward) {
        swap.emplace(p, img);
        swap.emplace(img, p);
    }
    auto apply = [&](std::array<EdgeIndex, 3> t, std::size_t pos) {
        auto [x, y] = swap.at({t[pos], t[pos + 1]});
        t[pos] = x;
        t[pos + 1] = y;
        return t;
    };

    // Every composable triple with strictly decreasing colours; the two
    // reduced words s0 s1 s0 and s1 s0 s1 must sort it to the same path.
    for (std::size_t i = 0; i < sk.edge_count(); ++i) {
        const auto& e1 = sk.edge(nth_edge(i));
        for (int c2 = 1; c2 < e1.color; ++c2) {
            for (EdgeIndex e2 : sk.edges_with_range(e1.source, c2)) {
                for (int c3 = 1; c3 < c2; ++c3) {
                    for (EdgeIndex e3 : sk.edges_with_range(sk.edge(e2).source, c3)) {
                        std::array<EdgeIndex, 3> t{nth_edge(i), e2, e3};
                        auto a = apply(apply(apply(t, 0), 1), 0);
                        auto b = apply(apply(apply(t, 1), 0), 1);
                        if (a != b) {
                            report.add("cube", "/squares",
                                       "cube condition fails for (" + e1.id + ", " + sk.edge(e2).id + ", " +
                                           sk.edge(e3).id + "): (" + sk.edge(a[0]).id + ", " + sk.edge(a[1]).id +
                                           ", " + sk.edge(a[2]).id + ") vs (" + sk.edge(b[0]).id + ", " +
                                           sk.edge(b[1]).id + ", " + sk.edge(b[2]).id + ")");
                        }
                    }
                }
            }
        }
    }
    return report;
}

KGraph KGraph::build(const GraphInput& input) {
    ValidationReport report = validate(input.skeleton);
    if (!report.ok()) throw ValidationError(std::move(report));
    return build(Skeleton::build(input.skeleton), input.squares, input.name);
}

KGraph KGraph::build(Skeleton skeleton, const SquareTableInput& squares, std::string name) {
    auto resolved = resolve_squares(skeleton, squares);
    ValidationReport report = resolved.report;
    if (report.ok()) report.append(validate_cubes(skeleton, squares));
    if (!report.ok()) throw ValidationError(std::move(report));

    KGraph g(std::move(skeleton), std::move(name));
    for (const auto& [p, img] : resolved.forward) {
        g.swaps_.emplace(key(p.first, p.second), key(img.first, img.second));
        g.swaps_.emplace(key(img.first, img.second), key(p.first, p.second));
    }
    return g;
}

std::vector<VertexIndex> KGraph::vertices() const {
    std::vector<VertexIndex> out;
    for (std::size_t i = 0; i < vertex_count(); ++i) out.push_back(VertexIndex{static_cast<std::uint32_t>(i)});
    return out;
}

std::pair<EdgeIndex, EdgeIndex> KGraph::swap(EdgeIndex a, EdgeIndex b) const {
    auto it = swaps_.find(key(a, b));
    if (it == swaps_.end()) {
        throw InputError("no square for (" + skeleton_.edge(a).id + ", " + skeleton_.edge(b).id + ")");
    }
    return {EdgeIndex{static_cast<std::uint32_t>(it->second >> 32)},
            EdgeIndex{static_cast<std::uint32_t>(it->second & 0xffffffffu)}};
}

Path KGraph::vertex_path(VertexIndex v) const {
    if (to_index(v) >= vertex_count()) throw InputError("vertex index out of range");
    return Path(v, v, Degree(rank()), {});
}

Path KGraph::edge_path(EdgeIndex e) const {
    const auto& rec = skeleton_.edge(e);
    return Path(rec.range, rec.source, Degree::unit(rank(), rec.color), {e});
}

Path KGraph::make_path(VertexIndex range, std::vector<EdgeIndex> edges) const {
    std::vector<Degree::value_type> d(rank(), 0);
    VertexIndex cur = range;
    for (EdgeIndex e : edges) {
        const auto& rec = skeleton_.edge(e);
        if (rec.range != cur) {
            throw InputError("edge '" + rec.id + "' is not composable with the path before it");
        }
        ++d[static_cast<std::size_t>(rec.color - 1)];
        cur = rec.source;
    }
    return Path(range, cur, Degree(std::move(d)), std::move(edges));
}

void KGraph::reorder(std::vector<EdgeIndex>& edges, std::vector<std::size_t>& keys, SwapSchedule schedule) const {
    const std::size_t n = edges.size();
    if (n < 2) return;
    auto step = [&](std::size_t i) {
        if (keys[i] <= keys[i + 1]) return false;
        auto [x, y] = swap(edges[i], edges[i + 1]);
        edges[i] = x;
        edges[i + 1] = y;
        std::swap(keys[i], keys[i + 1]);
        return true;
    };
    bool changed = true;
    while (changed) {
        changed = false;
        if (schedule == SwapSchedule::left_to_right) {
            for (std::size_t i = 0; i + 1 < n; ++i) changed |= step(i);
        } else {
            for (std::size_t i = n - 1; i-- > 0;) changed |= step(i);
        }
    }
}

void KGraph::reorder_to(std::vector<EdgeIndex>& edges, std::span<const Degree> blocks) const {
    // Target position of the t-th occurrence of each colour.
    std::vector<std::vector<std::size_t>> slots(rank());
    std::size_t pos = 0;
    for (const Degree& b : blocks) {
        for (std::size_t c = 0; c < rank(); ++c) {
            for (std::uint32_t t = 0; t < b[c]; ++t) slots[c].push_back(pos++);
        }
    }
    std::vector<std::size_t> used(rank(), 0), keys(edges.size());
    for (std::size_t i = 0; i < edges.size(); ++i) {
        auto c = static_cast<std::size_t>(color(edges[i]) - 1);
        keys[i] = slots[c].at(used[c]++);
    }
    reorder(edges, keys, SwapSchedule::left_to_right);
}

void KGraph::check_degree(const Degree& d) const {
    if (d.rank() != rank()) {
        throw InputError("degree " + d.to_string() + " has rank " + std::to_string(d.rank()) + ", graph has rank " +
                         std::to_string(rank()));
    }
}

Path KGraph::normalize(VertexIndex range, std::span<const EdgeIndex> edges, SwapSchedule schedule) const {
    Path p = make_path(range, std::vector<EdgeIndex>(edges.begin(), edges.end()));
    std::vector<std::size_t> keys(p.edges_.size());
    for (std::size_t i = 0; i < keys.size(); ++i) keys[i] = static_cast<std::size_t>(color(p.edges_[i]));
    reorder(p.edges_, keys, schedule);
    return p;
}

Path KGraph::compose(const Path& mu, const Path& nu) const {
    if (mu.source() != nu.range()) {
        throw InputError("cannot compose: s(mu) = '" + skeleton_.vertex_id(mu.source()) + "' but r(nu) = '" +
                         skeleton_.vertex_id(nu.range()) + "'");
    }
    if (nu.is_vertex()) return mu;
    if (mu.is_vertex()) return nu;
    std::vector<EdgeIndex> edges = mu.edges_;
    edges.insert(edges.end(), nu.edges_.begin(), nu.edges_.end());
    return normalize(mu.range(), edges);
}

std::pair<Path, Path> KGraph::factor(const Path& lambda, const Degree& m) const {
    check_degree(m);
    if (!leq(m, lambda.degree())) {
        throw DomainError("factor: " + m.to_string() + " is not below d(lambda) = " + lambda.degree().to_string());
    }
    std::vector<EdgeIndex> edges = lambda.edges_;
    const std::array<Degree, 2> blocks{m, subtract(lambda.degree(), m)};
    reorder_to(edges, blocks);
    const auto split = static_cast<std::ptrdiff_t>(m.total());
    std::vector<EdgeIndex> head(edges.begin(), edges.begin() + split);
    std::vector<EdgeIndex> tail(edges.begin() + split, edges.end());
    Path mu = make_path(lambda.range(), std::move(head));
    Path nu = make_path(mu.source(), std::move(tail));
    return {std::move(mu), std::move(nu)};
}

Path KGraph::segment(const Path& lambda, const Degree& m, const Degree& n) const {
    check_degree(m);
    check_degree(n);
    if (!leq(m, n) || !leq(n, lambda.degree())) {
        throw DomainError("segment bounds " + m.to_string() + " <= " + n.to_string() + " <= " +
                          lambda.degree().to_string() + " violated");
    }
    std::vector<EdgeIndex> edges = lambda.edges_;
    const std::array<Degree, 3> blocks{m, subtract(n, m), subtract(lambda.degree(), n)};
    reorder_to(edges, blocks);
    const auto lo = static_cast<std::ptrdiff_t>(m.total());
    const auto hi = static_cast<std::ptrdiff_t>(n.total());
    VertexIndex start = lo == 0 ? lambda.range() : skeleton_.edge(edges[static_cast<std::size_t>(lo - 1)]).source;
    return make_path(start, std::vector<EdgeIndex>(edges.begin() + lo, edges.begin() + hi));
}

VertexIndex KGraph::vertex_at(const Path& lambda, const Degree& m) const {
    return segment(lambda, m, m).range();
}

Path KGraph::extend_by_edge(const Path& lambda, EdgeIndex e) const { return compose(lambda, edge_path(e)); }

std::vector<Path> KGraph::paths_from(VertexIndex v, const Degree& n) const {
    check_degree(n);
    if (to_index(v) >= vertex_count()) throw InputError("vertex index out of range");
    std::vector<int> word;
    for (std::size_t c = 0; c < rank(); ++c) word.insert(word.end(), n[c], static_cast<int>(c + 1));

    std::vector<Path> out;
    std::vector<EdgeIndex> cur;
    auto dfs = [&](auto&& self, VertexIndex at) -> void {
        if (cur.size() == word.size()) {
            out.push_back(Path(v, at, n, cur));
            return;
        }
        for (EdgeIndex e : skeleton_.edges_with_range(at, word[cur.size()])) {
            cur.push_back(e);
            self(self, skeleton_.edge(e).source);
            cur.pop_back();
        }
    };
    dfs(dfs, v);
    return out;
}

std::vector<Path> KGraph::paths_into(VertexIndex v, const Degree& n) const {
    check_degree(n);
    if (to_index(v) >= vertex_count()) throw InputError("vertex index out of range");
    std::vector<int> word;
    for (std::size_t c = rank(); c-- > 0;) word.insert(word.end(), n[c], static_cast<int>(c + 1));

    std::vector<Path> out;
    std::vector<EdgeIndex> rev;
    auto dfs = [&](auto&& self, VertexIndex at) -> void {
        if (rev.size() == word.size()) {
            out.push_back(Path(at, v, n, std::vector<EdgeIndex>(rev.rbegin(), rev.rend())));
            return;
        }
        for (EdgeIndex e : skeleton_.edges_with_source(at, word[rev.size()])) {
            rev.push_back(e);
            self(self, skeleton_.edge(e).range);
            rev.pop_back();
        }
    };
    dfs(dfs, v);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Path> KGraph::paths_of_degree(const Degree& n) const {
    std::vector<Path> out;
    for (VertexIndex v : vertices()) {
        auto part = paths_from(v, n);
        out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
    }
    std::sort(out.begin(), out.end());
    return out;
}

SquareTableInput KGraph::squares() const {
    SquareTableInput out;
    for (const auto& [k, v] : swaps_) {
        EdgeIndex a{static_cast<std::uint32_t>(k >> 32)}, b{static_cast<std::uint32_t>(k & 0xffffffffu)};
        if (color(a) > color(b)) continue;
        EdgeIndex c{static_cast<std::uint32_t>(v >> 32)}, d{static_cast<std::uint32_t>(v & 0xffffffffu)};
        out.squares.push_back({{skeleton_.edge(a).id, skeleton_.edge(b).id}, {skeleton_.edge(c).id, skeleton_.edge(d).id}});
    }
    std::sort(out.squares.begin(), out.squares.end(),
              [](const SquareEntry& x, const SquareEntry& y) { return x.pair < y.pair; });
    return out;
}

GraphInput KGraph::to_input() const { return {name_, skeleton_.to_input(), squares()}; }

}  // namespace kgraph

std::size_t std::hash<kgraph::Path>::operator()(const kgraph::Path& p) const noexcept {
    std::size_t h = static_cast<std::size_t>(p.range()) * 0x9e3779b97f4a7c15ull;
    for (auto e : p.edges()) h = (h ^ static_cast<std::size_t>(e)) * 0x100000001b3ull;
    return h;
}
