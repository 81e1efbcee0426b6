// Acceptance run: one PASS or FAIL line per criterion. With no arguments every
// criterion runs; otherwise only the numbered ones. The exit status is
// nonzero when any selected criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "kgraph/analysis.hpp"
#include "kgraph/fixtures.hpp"
#include "support/oracles.hpp"
#include "support/random_graph.hpp"
#include "support/tail_family.hpp"

using namespace kgraph;

namespace {

constexpr std::uint64_t kCorpusSeed = 20261018;

struct Outcome {
    bool pass = true;
    std::string detail;
};

const std::vector<KGraph>& criterion_graphs() {
    static const std::vector<KGraph> graphs = [] {
        auto out = test_support::fixture_graphs();
        for (auto& g : test_support::random_corpus(kCorpusSeed, 50)) out.push_back(std::move(g));
        return out;
    }();
    return graphs;
}

KGraph fixture_graph(std::string_view name) { return KGraph::build(fixture(name)); }

std::vector<Degree> pair_degrees(std::size_t rank) { return degrees_below(Degree::uniform(rank, 2)); }

std::string fmt_seconds(double s) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.1f s", s);
    return buf;
}

Outcome factorization_soundness() {
    std::size_t checks = 0, failures = 0;
    const auto start = std::chrono::steady_clock::now();
    for (const KGraph& g : criterion_graphs()) {
        for (const Degree& d : degrees_below(Degree::uniform(g.rank(), 4))) {
            if (d.total() > 4) continue;
            for (const Path& lambda : g.paths_of_degree(d)) {
                const auto cuts = degrees_below(d);
                for (const Degree& m : cuts) {
                    auto [head, tail] = g.factor(lambda, m);
                    ++checks;
                    if (g.compose(head, tail) != lambda || head.degree() != m ||
                        test_support::factorization_count(g, lambda, m) != 1) {
                        ++failures;
                    }
                    for (const Degree& n : cuts) {
                        if (!leq(m, n)) continue;
                        Path three = g.compose(g.compose(g.segment(lambda, Degree(g.rank()), m), g.segment(lambda, m, n)),
                                               g.segment(lambda, n, d));
                        ++checks;
                        if (three != lambda) ++failures;
                    }
                }
            }
        }
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return {failures == 0 && secs < 30.0, std::to_string(checks) + " identities on " +
                                              std::to_string(criterion_graphs().size()) + " graphs, " +
                                              std::to_string(failures) + " failures, " + fmt_seconds(secs)};
}

Outcome commuting_matrices() {
    std::size_t pairs = 0, failures = 0;
    for (const KGraph& g : criterion_graphs()) {
        auto ms = vertex_matrices(g.skeleton());
        for (std::size_t i = 0; i < ms.size(); ++i) {
            for (std::size_t j = i + 1; j < ms.size(); ++j) {
                ++pairs;
                if (ms[i] * ms[j] != ms[j] * ms[i]) ++failures;
            }
        }
    }
    return {failures == 0, std::to_string(pairs) + " colour pairs, " + std::to_string(failures) + " non-commuting"};
}

struct DecidedTriple {
    const KGraph* g;
    PeriodicityTuple tuple;
};

// Criterion 3 also produces the tuples criterion 4 checks.
std::vector<DecidedTriple> periodic_triples;

Outcome periodicity_vs_oracle() {
    periodic_triples.clear();
    std::size_t triples = 0, disagreements = 0, periodic = 0;
    const auto start = std::chrono::steady_clock::now();
    for (const KGraph& g : criterion_graphs()) {
        const auto degrees = pair_degrees(g.rank());
        for (VertexIndex v : g.vertices()) {
            for (const Degree& m : degrees) {
                for (const Degree& n : degrees) {
                    if (m == n) continue;
                    ++triples;
                    auto decided = local_periodicity_at(g, v, m, n);
                    auto oracle = test_support::brute_force_witness(g, v, m, n, 4);
                    bool agree = false;
                    if (decided.decision == Decision::aperiodic) {
                        agree = oracle.has_value() && witness_valid(g, *decided.witness);
                    } else if (decided.decision == Decision::periodic) {
                        agree = !oracle.has_value();
                        ++periodic;
                        periodic_triples.push_back({&g, periodicity_tuple(g, v, m, n)});
                    }
                    if (!agree) ++disagreements;
                }
            }
        }
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return {disagreements == 0, std::to_string(triples) + " triples (" + std::to_string(periodic) + " periodic), " +
                                    std::to_string(disagreements) + " disagreements, " + fmt_seconds(secs)};
}

Outcome tuple_identity() {
    if (periodic_triples.empty()) periodicity_vs_oracle();
    std::size_t failures = 0, samples = 0;
    const auto start = std::chrono::steady_clock::now();
    std::map<const KGraph*, test_support::TailFamilyChecker> checkers;
    for (const DecidedTriple& t : periodic_triples) {
        auto it = checkers.try_emplace(t.g, *t.g, 3).first;
        const Path left = t.g->compose(t.tuple.mu, t.tuple.alpha);
        const Path right = t.g->compose(t.tuple.nu, t.tuple.alpha);
        samples += it->second.family_size(left.source());
        if (it->second.first_failure(left, right)) ++failures;
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return {failures == 0, std::to_string(periodic_triples.size()) + " tuples against " + std::to_string(samples) +
                               " (prefix, loop) samples, " + std::to_string(failures) + " failures, " +
                               fmt_seconds(secs)};
}

Outcome cofinality() {
    std::size_t disagreements = 0;
    for (const KGraph& g : criterion_graphs()) {
        if (is_cofinal(g).cofinal != cofinality_oracle(g, 3)) ++disagreements;
    }
    KGraph d = fixture_graph("D");
    auto rd = is_cofinal(d);
    const bool d_ok = !rd.cofinal && rd.witness && *rd.witness == VertexSet::from_ids(d, {"u"});
    const bool t2_ok = is_cofinal(fixture_graph("T2")).cofinal;
    const bool f_ok = is_cofinal(fixture_graph("F")).cofinal;
    std::ostringstream os;
    os << criterion_graphs().size() << " graphs, " << disagreements << " disagreements; D "
       << (rd.witness ? "NotCofinal(" + rd.witness->to_string(d) + ")" : std::string("Cofinal")) << ", T2 "
       << (t2_ok ? "Cofinal" : "NotCofinal") << ", F " << (f_ok ? "Cofinal" : "NotCofinal");
    return {disagreements == 0 && d_ok && t2_ok && f_ok, os.str()};
}

std::string simple_label(const KGraph& g, const SimplicityResult& r) {
    switch (r.verdict) {
        case SimpleVerdict::not_simple_not_cofinal:
            return "NotSimple(NotCofinal(" + r.cofinality.witness->to_string(g) + "))";
        case SimpleVerdict::not_simple_locally_periodic: {
            std::string p;
            for (auto c : r.scan.hit->p) p += (p.empty() ? "" : ",") + std::to_string(c);
            return "NotSimple(LocallyPeriodic at p=(" + p + "))";
        }
        case SimpleVerdict::simple_up_to_bound:
            return "Simple up to B=" + std::to_string(r.bound);
        case SimpleVerdict::inconclusive_at_bound:
            return "InconclusiveAtBound(" + std::to_string(r.bound) + ")";
    }
    return {};
}

Outcome simplicity() {
    KGraph t2 = fixture_graph("T2"), d = fixture_graph("D"), f = fixture_graph("F");
    auto rt = is_simple(t2, {.bound = 1});
    auto rd = is_simple(d, {.bound = 1});
    auto rf = is_simple(f, {.bound = 2});
    const bool t2_ok = rt.verdict == SimpleVerdict::not_simple_locally_periodic && tuple_valid(t2, *rt.scan.tuple) &&
                       local_periodicity_at(t2, rt.scan.tuple->vertex, rt.scan.tuple->m, rt.scan.tuple->n).decision ==
                           Decision::periodic;
    const VertexSet& h = rd.cofinality.witness.value_or(VertexSet(2));
    const bool d_ok = rd.verdict == SimpleVerdict::not_simple_not_cofinal && h == VertexSet::from_ids(d, {"u"}) &&
                      is_hereditary(d, h) && is_saturated(d, h);
    bool f_ok = rf.verdict == SimpleVerdict::simple_up_to_bound && rf.cofinality.cofinal;
    for (const ScanEntry& e : rf.scan.entries) f_ok = f_ok && e.witness && witness_valid(f, *e.witness);
    std::string detail = "T2 " + simple_label(t2, rt) + ", D " + simple_label(d, rd) + ", F " + simple_label(f, rf);
    if (!f_ok) detail += " (expected F: Simple up to B=2; the single red edge makes sigma^(0,2) the identity)";
    return {t2_ok && d_ok && f_ok, detail};
}

Outcome annihilation() {
    std::size_t tuples = 0, failures = 0, samples = 0;
    for (const KGraph& g : test_support::fixture_graphs()) {
        const auto family = ep_samples(g, 3);
        for (VertexIndex v : g.vertices()) {
            for (const Degree& m : pair_degrees(g.rank())) {
                for (const Degree& n : pair_degrees(g.rank())) {
                    if (m == n || local_periodicity_at(g, v, m, n).decision != Decision::periodic) continue;
                    ++tuples;
                    auto r = verify_annihilation(g, rep_element(g, periodicity_tuple(g, v, m, n)), family);
                    samples += r.samples_checked;
                    if (!r.annihilates || !r.degrees_differ) ++failures;
                }
            }
        }
    }
    return {failures == 0 && tuples > 0, std::to_string(tuples) + " fixture tuples, " + std::to_string(samples) +
                                             " sample evaluations, " + std::to_string(failures) + " failures"};
}

Outcome gauge() {
    KGraph d2 = fixture_graph("D2"), f = fixture_graph("F");
    auto r2 = all_ideals_gauge_invariant(d2, {.bound = 2});
    bool d2_ok = r2.verdict == GaugeVerdict::not_all_gauge_invariant && r2.offending;
    std::string d2_text = "D2 all gauge-invariant";
    if (r2.offending) {
        const QuotientRow& row = r2.rows[*r2.offending];
        KGraph q = quotient(d2, row.h);
        d2_ok = d2_ok && row.h == VertexSet::from_ids(d2, {"u"}) && row.scan.tuple && tuple_valid(q, *row.scan.tuple);
        d2_text = "D2 fails at H=" + row.h.to_string(d2) + " with a quotient tuple";
    }
    auto rf = all_ideals_gauge_invariant(f, {.bound = 2});
    const bool f_ok = rf.verdict == GaugeVerdict::all_gauge_invariant_up_to_bound;
    std::string detail = d2_text + ", F ";
    if (f_ok) {
        detail += "all gauge-invariant up to B=2";
    } else if (rf.offending) {
        detail += "fails at H=" + rf.rows[*rf.offending].h.to_string(f) +
                  " (expected all gauge-invariant up to B=2; F itself is periodic at p=(0,2))";
    } else {
        detail += describe(rf.verdict, rf.bound);
    }
    return {d2_ok && f_ok, detail};
}

Outcome degree_arithmetic() {
    const Degree m{10, 2}, n{5, 6}, l{2, 3};
    const Degree j = join(m, n);
    const Degree frame = add(j, l);
    const bool ok = j == Degree{10, 6} && frame == Degree{12, 9};
    return {ok, "join((10,2),(5,6)) = " + j.to_string() + ", plus (2,3) = " + frame.to_string()};
}

struct Criterion {
    const char* name;
    std::function<Outcome()> run;
};

const std::map<int, Criterion>& criteria() {
    static const std::map<int, Criterion> all = {
        {1, {"factorization soundness", factorization_soundness}},
        {2, {"commuting vertex matrices", commuting_matrices}},
        {3, {"periodicity decision vs oracle", periodicity_vs_oracle}},
        {4, {"periodicity tuples on eventually periodic tails", tuple_identity}},
        {5, {"cofinality vs oracle", cofinality}},
        {6, {"simplicity end to end", simplicity}},
        {7, {"annihilation on fixture tuples", annihilation}},
        {8, {"gauge invariance of all ideals", gauge}},
        {9, {"degree arithmetic values", degree_arithmetic}},
    };
    return all;
}

}  // namespace

int main(int argc, char** argv) {
    std::vector<int> selected;
    for (int i = 1; i < argc; ++i) {
        int id = std::atoi(argv[i]);
        if (!criteria().contains(id)) {
            std::cerr << "unknown criterion '" << argv[i] << "' (expected 1-9)\n";
            return 2;
        }
        selected.push_back(id);
    }
    if (selected.empty()) {
        for (const auto& [id, c] : criteria()) selected.push_back(id);
    }
    bool all_pass = true;
    for (int id : selected) {
        const Criterion& c = criteria().at(id);
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        std::cout << "criterion " << id << " " << (o.pass ? "PASS" : "FAIL") << " " << c.name << ": " << o.detail
                  << std::endl;
        all_pass = all_pass && o.pass;
    }
    return all_pass ? 0 : 1;
}
