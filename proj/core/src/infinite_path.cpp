#include "kgraph/infinite_path.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

namespace kgraph {

namespace {

// Smallest t with d(rho) + t d(gamma) >= target.
std::uint32_t copies_needed(const Degree& prefix, const Degree& loop, const Degree& target) {
    std::uint32_t t = 0;
    for (std::size_t i = 0; i < target.rank(); ++i) {
        if (target[i] > prefix[i]) {
            std::uint32_t need = (target[i] - prefix[i] + loop[i] - 1) / loop[i];
            t = std::max(t, need);
        }
    }
    return t;
}

Path unroll(const KGraph& g, const EPPath& x, std::uint32_t copies) {
    Path out = x.prefix();
    for (std::uint32_t i = 0; i < copies; ++i) out = g.compose(out, x.loop());
    return out;
}

struct PathPairHash {
    std::size_t operator()(const std::pair<Path, Path>& p) const noexcept {
        std::size_t h = std::hash<Path>{}(p.first);
        return h ^ (std::hash<Path>{}(p.second) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
    }
};

}  // namespace

EPPath EventuallyPeriodicPath::make(const KGraph& g, Path prefix, Path loop) {
    if (loop.range() != prefix.source() || loop.source() != prefix.source()) {
        throw InputError("loop of an eventually periodic path must be a cycle at the prefix source");
    }
    if (loop.degree().rank() != g.rank()) throw InputError("loop has the wrong rank");
    for (std::size_t i = 0; i < g.rank(); ++i) {
        if (loop.degree()[i] == 0) throw InputError("loop degree must be at least 1 in every coordinate");
    }
    const Degree& gd = loop.degree();
    while (leq(gd, prefix.degree())) {
        const Degree cut = subtract(prefix.degree(), gd);
        if (g.segment(prefix, cut, prefix.degree()) != loop) break;
        prefix = g.segment(prefix, Degree(g.rank()), cut);
    }
    return EPPath(std::move(prefix), std::move(loop));
}

Path ep_segment(const KGraph& g, const EPPath& x, const Degree& m, const Degree& n) {
    if (!leq(m, n)) throw DomainError("ep_segment needs m <= n, got " + m.to_string() + " and " + n.to_string());
    Path whole = unroll(g, x, copies_needed(x.prefix().degree(), x.loop().degree(), n));
    return g.segment(whole, m, n);
}

EPPath ep_shift(const KGraph& g, const EPPath& x, const Degree& p) {
    Path whole = unroll(g, x, copies_needed(x.prefix().degree(), x.loop().degree(), p));
    return EPPath::make(g, g.segment(whole, p, whole.degree()), x.loop());
}

EPPath ep_prepend(const KGraph& g, const Path& eta, const EPPath& x) {
    return EPPath::make(g, g.compose(eta, x.prefix()), x.loop());
}

bool ep_equal(const KGraph& g, const EPPath& x, const EPPath& y) {
    if (x.range() != y.range()) return false;
    const Degree a = join(x.prefix().degree(), y.prefix().degree());
    if (ep_segment(g, x, Degree(g.rank()), a) != ep_segment(g, y, Degree(g.rank()), a)) return false;

    // Past a, each path is periodic under the shift by its own loop degree,
    // so it is the infinite power of the loop read off at a.
    const Degree gx = x.loop().degree(), gy = y.loop().degree();
    Path zx = ep_segment(g, x, a, add(a, gx));
    Path zy = ep_segment(g, y, a, add(a, gy));
    const Degree zero(g.rank()), one = Degree::uniform(g.rank(), 1);
    std::unordered_set<std::pair<Path, Path>, PathPairHash> seen;
    while (seen.insert({zx, zy}).second) {
        if (g.segment(zx, zero, one) != g.segment(zy, zero, one)) return false;
        zx = g.segment(g.compose(zx, zx), one, add(one, gx));
        zy = g.segment(g.compose(zy, zy), one, add(one, gy));
    }
    return true;
}

std::optional<EPPath> rep_apply(const KGraph& g, const Path& eta, const EPPath& x) {
    if (x.range() != eta.source()) return std::nullopt;
    return ep_prepend(g, eta, x);
}

std::optional<EPPath> rep_apply_adjoint(const KGraph& g, const Path& eta, const EPPath& y) {
    if (y.range() != eta.range()) return std::nullopt;
    if (ep_segment(g, y, Degree(g.rank()), eta.degree()) != eta) return std::nullopt;
    return ep_shift(g, y, eta.degree());
}

std::vector<EPPath> ep_samples(const KGraph& g, VertexIndex v, std::uint32_t depth) {
    std::set<EPPath> out;
    if (depth == 0) return {};
    const auto prefix_degrees = degrees_below(Degree::uniform(g.rank(), depth));
    std::vector<Degree> loop_degrees;
    for (const Degree& d : degrees_below(Degree::uniform(g.rank(), depth - 1))) {
        loop_degrees.push_back(add(d, Degree::uniform(g.rank(), 1)));
    }
    // cycles at each vertex by loop degree, computed once
    std::vector<std::vector<std::vector<Path>>> cycles(g.vertex_count());
    auto cycles_at = [&](VertexIndex w) -> const std::vector<std::vector<Path>>& {
        auto& slot = cycles[to_index(w)];
        if (slot.empty()) {
            for (const Degree& gd : loop_degrees) {
                std::vector<Path> here;
                for (Path& p : g.paths_from(w, gd)) {
                    if (p.source() == w) here.push_back(std::move(p));
                }
                slot.push_back(std::move(here));
            }
        }
        return slot;
    };
    for (const Degree& pd : prefix_degrees) {
        for (const Path& rho : g.paths_from(v, pd)) {
            for (const auto& by_degree : cycles_at(rho.source())) {
                for (const Path& gamma : by_degree) out.insert(EPPath::make(g, rho, gamma));
            }
        }
    }
    return {out.begin(), out.end()};
}

std::vector<EPPath> ep_samples(const KGraph& g, std::uint32_t depth) {
    std::vector<EPPath> out;
    for (VertexIndex v : g.vertices()) {
        auto part = ep_samples(g, v, depth);
        out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
    }
    return out;
}

RepElement RepElement::make(Path left, Path right) {
    if (left.source() != right.source()) {
        throw InputError("RepElement paths must share a source");
    }
    return RepElement{std::move(left), std::move(right)};
}

AnnihilationResult verify_annihilation(const KGraph& g, const RepElement& a, const std::vector<EPPath>& samples) {
    AnnihilationResult result;
    result.degrees_differ = a.left.degree() != a.right.degree();
    for (const EPPath& x : samples) {
        ++result.samples_checked;
        auto tail = rep_apply_adjoint(g, a.left, x);
        if (!tail) continue;  // both terms vanish
        ++result.samples_in_support;
        auto t1 = rep_apply(g, a.left, *tail);
        auto t2 = rep_apply(g, a.right, *tail);
        bool zero = (!t1 && !t2) || (t1 && t2 && ep_equal(g, *t1, *t2));
        if (!zero) {
            result.annihilates = false;
            if (!result.counterexample) result.counterexample = x;
        }
    }
    return result;
}

}  // namespace kgraph
