#pragma once

// Infinite paths in eventually periodic form x = rho gamma gamma gamma ...,
// the shift maps, and the symbolic action of generators on basis vectors
// indexed by infinite paths.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "kgraph/kgraph.hpp"

namespace kgraph {

/// x = rho gamma^infinity. The loop gamma is a cycle at s(rho) whose degree is
/// at least 1 in every coordinate, so every segment x(m, n) is reachable by
/// unrolling finitely many copies.
class EventuallyPeriodicPath {
public:
    /// Validates the loop and strips trailing copies of the loop off the prefix.
    static EventuallyPeriodicPath make(const KGraph& g, Path prefix, Path loop);

    const Path& prefix() const noexcept { return prefix_; }
    const Path& loop() const noexcept { return loop_; }
    VertexIndex range() const noexcept { return prefix_.range(); }

    /// Representation equality. Use ep_equal for equality of the infinite paths.
    friend bool operator==(const EventuallyPeriodicPath&, const EventuallyPeriodicPath&) = default;
    friend auto operator<=>(const EventuallyPeriodicPath& a, const EventuallyPeriodicPath& b) {
        if (auto c = a.prefix_ <=> b.prefix_; c != 0) return c;
        return a.loop_ <=> b.loop_;
    }

private:
    EventuallyPeriodicPath(Path prefix, Path loop) : prefix_(std::move(prefix)), loop_(std::move(loop)) {}

    Path prefix_;
    Path loop_;
};

using EPPath = EventuallyPeriodicPath;

/// x(m, n); requires m <= n.
Path ep_segment(const KGraph& g, const EPPath& x, const Degree& m, const Degree& n);
/// sigma^p(x).
EPPath ep_shift(const KGraph& g, const EPPath& x, const Degree& p);
/// eta x; requires s(eta) = r(x).
EPPath ep_prepend(const KGraph& g, const Path& eta, const EPPath& x);
/// Whether x and y are the same infinite path. Exact: walks both tails in
/// unit diagonal steps until the pair of tail loops repeats.
bool ep_equal(const KGraph& g, const EPPath& x, const EPPath& y);

/// S_eta applied to the basis vector of x: the basis vector of eta x when
/// r(x) = s(eta), zero otherwise.
std::optional<EPPath> rep_apply(const KGraph& g, const Path& eta, const EPPath& x);
/// S*_eta applied to the basis vector of y: the basis vector of
/// sigma^{d(eta)}(y) when y(0, d(eta)) = eta, zero otherwise.
std::optional<EPPath> rep_apply_adjoint(const KGraph& g, const Path& eta, const EPPath& y);

/// Every eventually periodic path with range v whose prefix degree is at most
/// (depth, ..., depth) and whose loop degree lies in [1, depth]^k, one per
/// normalized representation, sorted.
std::vector<EPPath> ep_samples(const KGraph& g, VertexIndex v, std::uint32_t depth);
/// ep_samples over every vertex, in vertex order.
std::vector<EPPath> ep_samples(const KGraph& g, std::uint32_t depth);

/// The two-term element s_{left} s*_{left} - s_{right} s*_{left}, stored as
/// its two paths. Both paths must share a source.
struct RepElement {
    Path left;   // mu alpha
    Path right;  // nu alpha

    /// Throws InputError when s(left) != s(right).
    static RepElement make(Path left, Path right);
};

struct AnnihilationResult {
    bool annihilates = true;          // a xi_x = 0 for every sample
    bool degrees_differ = false;      // d(left) != d(right)
    std::size_t samples_checked = 0;
    std::size_t samples_in_support = 0;  // samples with x(0, d(left)) = left
    std::optional<EPPath> counterexample;
};

/// Evaluates a on each sample basis vector.
AnnihilationResult verify_annihilation(const KGraph& g, const RepElement& a, const std::vector<EPPath>& samples);

}  // namespace kgraph
