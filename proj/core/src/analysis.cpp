#include "kgraph/analysis.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <thread>

namespace kgraph {

RepElement rep_element(const KGraph& g, const PeriodicityTuple& t) {
    return RepElement::make(g.compose(t.mu, t.alpha), g.compose(t.nu, t.alpha));
}

SimplicityResult is_simple(const KGraph& g, const ScanOptions& options) {
    SimplicityResult out;
    out.bound = options.bound;
    out.cofinality = is_cofinal(g);
    out.scan = scan_aperiodicity(g, options);
    if (!out.cofinality.cofinal) {
        out.verdict = SimpleVerdict::not_simple_not_cofinal;
    } else if (out.scan.verdict == ScanVerdict::periodic) {
        out.verdict = SimpleVerdict::not_simple_locally_periodic;
    } else if (out.scan.verdict == ScanVerdict::inconclusive) {
        out.verdict = SimpleVerdict::inconclusive_at_bound;
    } else {
        out.verdict = SimpleVerdict::simple_up_to_bound;
    }
    return out;
}

std::string describe(SimpleVerdict verdict, std::uint32_t bound) {
    switch (verdict) {
        case SimpleVerdict::simple_up_to_bound:
            return "Simple (up to bound " + std::to_string(bound) + ")";
        case SimpleVerdict::not_simple_not_cofinal:
            return "not simple: not cofinal";
        case SimpleVerdict::not_simple_locally_periodic:
            return "not simple: locally periodic";
        case SimpleVerdict::inconclusive_at_bound:
            return "inconclusive at bound " + std::to_string(bound);
    }
    return {};
}

GaugeResult all_ideals_gauge_invariant(const KGraph& g, const ScanOptions& options) {
    std::vector<VertexSet> sets = enumerate_sat_her(g);
    std::erase_if(sets, [](const VertexSet& h) { return h.is_full(); });

    GaugeResult out;
    out.bound = options.bound;
    out.rows.resize(sets.size());
    ScanOptions inner = options;
    inner.jobs = 1;
    auto run = [&](std::size_t i) {
        KGraph q = quotient(g, sets[i]);
        out.rows[i] = QuotientRow{sets[i], q.vertex_count(), scan_aperiodicity(q, inner)};
    };

    const unsigned jobs = std::max(1u, std::min<unsigned>(options.jobs, static_cast<unsigned>(sets.size())));
    if (jobs == 1) {
        for (std::size_t i = 0; i < sets.size(); ++i) run(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::exception_ptr> errors(jobs);
        {
            std::vector<std::jthread> pool;
            for (unsigned t = 0; t < jobs; ++t) {
                pool.emplace_back([&, t] {
                    try {
                        for (std::size_t i = next++; i < sets.size(); i = next++) run(i);
                    } catch (...) {
                        errors[t] = std::current_exception();
                    }
                });
            }
        }
        for (auto& e : errors) {
            if (e) std::rethrow_exception(e);
        }
    }

    bool inconclusive = false;
    for (std::size_t i = 0; i < out.rows.size(); ++i) {
        const ScanVerdict v = out.rows[i].scan.verdict;
        if (v == ScanVerdict::periodic && !out.offending) out.offending = i;
        inconclusive = inconclusive || v == ScanVerdict::inconclusive;
    }
    if (out.offending) {
        out.verdict = GaugeVerdict::not_all_gauge_invariant;
    } else if (inconclusive) {
        out.verdict = GaugeVerdict::inconclusive_at_bound;
    } else {
        out.verdict = GaugeVerdict::all_gauge_invariant_up_to_bound;
    }
    return out;
}

std::string describe(GaugeVerdict verdict, std::uint32_t bound) {
    switch (verdict) {
        case GaugeVerdict::all_gauge_invariant_up_to_bound:
            return "all ideals gauge-invariant (up to bound " + std::to_string(bound) + ")";
        case GaugeVerdict::not_all_gauge_invariant:
            return "some ideal is not gauge-invariant";
        case GaugeVerdict::inconclusive_at_bound:
            return "inconclusive at bound " + std::to_string(bound);
    }
    return {};
}

}  // namespace kgraph
