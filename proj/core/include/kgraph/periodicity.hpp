#pragma once

// Local periodicity: whether sigma^m(x) = sigma^n(x) for every infinite path x
// with range v, decided exactly, together with the certificates on either
// side and a bounded scan over difference vectors.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "kgraph/kgraph.hpp"

namespace kgraph {

/// A finite path lambda from v with d(lambda) >= m v n whose segments
/// lambda(m, m + q) and lambda(n, n + q), q = d(lambda) - (m v n), differ.
struct AperiodicityWitness {
    VertexIndex vertex{};
    Degree m, n;
    Path lambda;
    Path segment_m;
    Path segment_n;
};

/// mu in v Lambda^m, alpha in s(mu) Lambda^{(m v n) - m}, nu = (mu alpha)(0, n).
struct PeriodicityTuple {
    VertexIndex vertex{};
    Degree m, n;
    Path mu;
    Path alpha;
    Path nu;
};

/// Recomputes the segments; throws ContractError if they agree.
AperiodicityWitness make_witness(const KGraph& g, VertexIndex v, const Degree& m, const Degree& n, Path lambda);
/// Independent re-check of a witness against the graph.
bool witness_valid(const KGraph& g, const AperiodicityWitness& w);
/// Degree, endpoint and segment checks on a tuple (does not re-decide periodicity).
bool tuple_valid(const KGraph& g, const PeriodicityTuple& t);

enum class Decision { periodic, aperiodic, inconclusive };

struct DecisionLimits {
    /// Pair states explored before a decision gives up as inconclusive.
    std::size_t max_states = 1'000'000;
};

struct LocalPeriodicity {
    Decision decision = Decision::inconclusive;
    std::optional<AperiodicityWitness> witness;  // set iff aperiodic
    std::size_t states = 0;
};

/// Exact decision for one triple. Requires m != n and matching ranks.
LocalPeriodicity local_periodicity_at(const KGraph& g, VertexIndex v, const Degree& m, const Degree& n,
                                      const DecisionLimits& limits = {});

/// Canonically least tuple. Throws ContractError unless the triple is periodic.
PeriodicityTuple periodicity_tuple(const KGraph& g, VertexIndex v, const Degree& m, const Degree& n,
                                   const DecisionLimits& limits = {});

/// Chains witnesses lambda_1 lambda_2 ... with each pair tested at the source
/// of the previous witness. A periodic pair raises PeriodicPairError; an
/// inconclusive one raises LimitError.
Path aperiodic_prefix(const KGraph& g, VertexIndex v, const std::vector<std::pair<Degree, Degree>>& pairs,
                      const DecisionLimits& limits = {});

class PeriodicPairError : public ContractError {
public:
    PeriodicPairError(std::size_t index, VertexIndex vertex, Degree m, Degree n);
    std::size_t index() const noexcept { return index_; }
    VertexIndex vertex() const noexcept { return vertex_; }
    const Degree& m() const noexcept { return m_; }
    const Degree& n() const noexcept { return n_; }

private:
    std::size_t index_;
    VertexIndex vertex_;
    Degree m_, n_;
};

/// |Lambda^0| + max_i |E^i|.
std::uint32_t default_bound(const KGraph& g);

/// Nonzero p in [-B, B]^k whose first nonzero entry is positive, ordered with
/// the last coordinate most significant. p and -p name the same question, so
/// only one of each is listed.
std::vector<std::vector<std::int64_t>> scan_vectors(std::size_t rank, std::uint32_t bound);

struct ScanOptions {
    std::uint32_t bound = 1;
    unsigned jobs = 1;
    DecisionLimits limits;
};

enum class ScanVerdict { periodic, aperiodic_up_to_bound, inconclusive };

struct ScanEntry {
    VertexIndex vertex{};
    std::vector<std::int64_t> p;
    Decision decision = Decision::inconclusive;
    std::optional<AperiodicityWitness> witness;
};

struct ScanResult {
    ScanVerdict verdict = ScanVerdict::inconclusive;
    std::uint32_t bound = 0;
    /// First periodic hit in (vertex, p) order.
    std::optional<ScanEntry> hit;
    std::optional<PeriodicityTuple> tuple;
    /// Every decided (vertex, p) up to the hit, or all of them when none.
    std::vector<ScanEntry> entries;
};

/// Throws InputError when bound < 1.
ScanResult scan_aperiodicity(const KGraph& g, const ScanOptions& options);

/// Sampling cross-check for Condition (B) at v: true when some eventually
/// periodic x in v Lambda^infinity (sample depth `depth`) has mu x != nu x for
/// every pair mu != nu in Lambda v of total degree at most `depth`.
bool condition_b_oracle(const KGraph& g, VertexIndex v, std::uint32_t depth);

}  // namespace kgraph
