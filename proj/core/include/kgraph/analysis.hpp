#pragma once

// Simplicity and gauge invariance of all ideals, each decided from the
// combinatorial side: cofinality plus a bounded aperiodicity scan, and a
// bounded scan of every quotient by a saturated hereditary set.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kgraph/ideals.hpp"
#include "kgraph/infinite_path.hpp"
#include "kgraph/periodicity.hpp"

namespace kgraph {

/// The element built from a periodicity tuple: left = mu alpha, right = nu alpha.
RepElement rep_element(const KGraph& g, const PeriodicityTuple& t);

enum class SimpleVerdict {
    simple_up_to_bound,
    not_simple_not_cofinal,
    not_simple_locally_periodic,
    inconclusive_at_bound,
};

struct SimplicityResult {
    SimpleVerdict verdict = SimpleVerdict::inconclusive_at_bound;
    std::uint32_t bound = 0;
    CofinalityResult cofinality;
    ScanResult scan;
};

/// A missing cofinality certificate wins over a period; an aborted scan only
/// decides the verdict when the graph is cofinal.
SimplicityResult is_simple(const KGraph& g, const ScanOptions& options);

/// "Simple (up to bound 2)", "not simple: not cofinal", ...
std::string describe(SimpleVerdict verdict, std::uint32_t bound);

struct QuotientRow {
    VertexSet h;
    std::size_t quotient_vertices = 0;
    ScanResult scan;
};

enum class GaugeVerdict { all_gauge_invariant_up_to_bound, not_all_gauge_invariant, inconclusive_at_bound };

struct GaugeResult {
    GaugeVerdict verdict = GaugeVerdict::inconclusive_at_bound;
    std::uint32_t bound = 0;
    /// One row per proper saturated hereditary H, in enumeration order.
    std::vector<QuotientRow> rows;
    /// Index of the first row whose quotient is periodic.
    std::optional<std::size_t> offending;
};

/// Scans quotient(g, H) for every proper saturated hereditary H. With
/// options.jobs > 1 the quotients run concurrently, each scan single-threaded;
/// the rows come back in enumeration order either way. Throws LimitError
/// above the enumeration limit.
GaugeResult all_ideals_gauge_invariant(const KGraph& g, const ScanOptions& options);

std::string describe(GaugeVerdict verdict, std::uint32_t bound);

}  // namespace kgraph
