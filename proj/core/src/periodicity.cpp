#include "kgraph/periodicity.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <thread>
#include <unordered_map>

#include "kgraph/infinite_path.hpp"

namespace kgraph {

namespace {

struct PairHash {
    std::size_t operator()(const std::pair<Path, Path>& p) const noexcept {
        std::size_t h = std::hash<Path>{}(p.first);
        return h ^ (std::hash<Path>{}(p.second) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
    }
};

void check_triple(const KGraph& g, VertexIndex v, const Degree& m, const Degree& n) {
    if (m.rank() != g.rank() || n.rank() != g.rank()) {
        throw InputError("degrees " + m.to_string() + " and " + n.to_string() + " do not have rank " +
                         std::to_string(g.rank()));
    }
    if (m == n) throw InputError("local periodicity needs m != n, both are " + m.to_string());
    if (to_index(v) >= g.vertex_count()) throw InputError("vertex index out of range");
}

// One explored pair state. Roots remember the path of degree m v n they came
// from; other nodes remember the extension that produced them.
struct Node {
    Path left;
    Path right;
    std::size_t parent;
    Path step;
};

constexpr std::size_t kRoot = std::numeric_limits<std::size_t>::max();

}  // namespace

PeriodicPairError::PeriodicPairError(std::size_t index, VertexIndex vertex, Degree m, Degree n)
    : ContractError("pair " + std::to_string(index) + " (m = " + m.to_string() + ", n = " + n.to_string() +
                    ") is periodic at the running vertex"),
      index_(index),
      vertex_(vertex),
      m_(std::move(m)),
      n_(std::move(n)) {}

AperiodicityWitness make_witness(const KGraph& g, VertexIndex v, const Degree& m, const Degree& n, Path lambda) {
    const Degree top = join(m, n);
    if (lambda.range() != v) throw ContractError("witness does not start at the tested vertex");
    if (!leq(top, lambda.degree())) throw ContractError("witness degree is below m v n");
    const Degree q = subtract(lambda.degree(), top);
    Path sm = g.segment(lambda, m, add(m, q));
    Path sn = g.segment(lambda, n, add(n, q));
    if (sm == sn) throw ContractError("witness segments agree");
    return AperiodicityWitness{v, m, n, std::move(lambda), std::move(sm), std::move(sn)};
}

bool witness_valid(const KGraph& g, const AperiodicityWitness& w) {
    try {
        auto again = make_witness(g, w.vertex, w.m, w.n, w.lambda);
        return again.segment_m == w.segment_m && again.segment_n == w.segment_n;
    } catch (const Error&) {
        return false;
    }
}

bool tuple_valid(const KGraph& g, const PeriodicityTuple& t) {
    try {
        const Degree top = join(t.m, t.n);
        if (t.mu.range() != t.vertex || t.mu.degree() != t.m) return false;
        if (t.alpha.range() != t.mu.source() || t.alpha.degree() != subtract(top, t.m)) return false;
        Path mu_alpha = g.compose(t.mu, t.alpha);
        if (g.segment(mu_alpha, Degree(g.rank()), t.n) != t.nu) return false;
        if (t.nu.source() != t.alpha.range()) return false;
        Path nu_alpha = g.compose(t.nu, t.alpha);
        return mu_alpha.degree() != nu_alpha.degree();
    } catch (const Error&) {
        return false;
    }
}

LocalPeriodicity local_periodicity_at(const KGraph& g, VertexIndex v, const Degree& m, const Degree& n,
                                      const DecisionLimits& limits) {
    check_triple(g, v, m, n);
    const Degree top = join(m, n);
    const Degree step = Degree::uniform(g.rank(), 1);

    // A state (left, right) stands for the question "left y = right y for
    // every infinite y from their common source". Extending by every kappa of
    // degree (1, ..., 1) and comparing the leading unit blocks either refutes
    // the state or reduces it to the residual pair. Since (1, ..., 1) steps
    // are cofinal, a state with no reachable refutation is consistent.
    std::vector<Node> nodes;
    std::unordered_map<std::pair<Path, Path>, std::size_t, PairHash> seen;
    for (Path& lambda : g.paths_from(v, top)) {
        Path left = g.segment(lambda, m, top);
        Path right = g.segment(lambda, n, top);
        if (seen.emplace(std::pair{left, right}, nodes.size()).second) {
            nodes.push_back({std::move(left), std::move(right), kRoot, std::move(lambda)});
        }
    }

    LocalPeriodicity result;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (nodes.size() > limits.max_states) {
            result.decision = Decision::inconclusive;
            result.states = nodes.size();
            return result;
        }
        const Path left = nodes[i].left;
        const Path right = nodes[i].right;
        for (const Path& kappa : g.paths_from(left.source(), step)) {
            auto [head_l, tail_l] = g.factor(g.compose(left, kappa), step);
            auto [head_r, tail_r] = g.factor(g.compose(right, kappa), step);
            if (head_l != head_r) {
                std::vector<const Path*> chain{&kappa};
                std::size_t at = i;
                for (; nodes[at].parent != kRoot; at = nodes[at].parent) chain.push_back(&nodes[at].step);
                Path lambda = nodes[at].step;
                for (auto it = chain.rbegin(); it != chain.rend(); ++it) lambda = g.compose(lambda, **it);
                result.decision = Decision::aperiodic;
                result.witness = make_witness(g, v, m, n, std::move(lambda));
                result.states = nodes.size();
                return result;
            }
            if (seen.emplace(std::pair{tail_l, tail_r}, nodes.size()).second) {
                nodes.push_back({std::move(tail_l), std::move(tail_r), i, kappa});
            }
        }
    }
    result.decision = Decision::periodic;
    result.states = nodes.size();
    return result;
}

PeriodicityTuple periodicity_tuple(const KGraph& g, VertexIndex v, const Degree& m, const Degree& n,
                                   const DecisionLimits& limits) {
    auto decided = local_periodicity_at(g, v, m, n, limits);
    if (decided.decision == Decision::aperiodic) {
        throw ContractError("periodicity_tuple called on an aperiodic triple (v = '" + g.skeleton().vertex_id(v) +
                            "', m = " + m.to_string() + ", n = " + n.to_string() + ")");
    }
    if (decided.decision == Decision::inconclusive) {
        throw LimitError("periodicity of the triple could not be decided within the state limit");
    }
    const Degree top = join(m, n);
    Path mu = g.paths_from(v, m).front();
    Path alpha = g.paths_from(mu.source(), subtract(top, m)).front();
    Path nu = g.segment(g.compose(mu, alpha), Degree(g.rank()), n);
    PeriodicityTuple t{v, m, n, std::move(mu), std::move(alpha), std::move(nu)};
    if (!tuple_valid(g, t)) throw ContractError("constructed periodicity tuple failed its own checks");
    return t;
}

Path aperiodic_prefix(const KGraph& g, VertexIndex v, const std::vector<std::pair<Degree, Degree>>& pairs,
                      const DecisionLimits& limits) {
    Path eta = g.vertex_path(v);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        const auto& [m, n] = pairs[i];
        const VertexIndex at = eta.source();
        auto decided = local_periodicity_at(g, at, m, n, limits);
        if (decided.decision == Decision::periodic) throw PeriodicPairError(i, at, m, n);
        if (decided.decision == Decision::inconclusive) {
            throw LimitError("pair " + std::to_string(i) + " could not be decided within the state limit");
        }
        eta = g.compose(eta, decided.witness->lambda);
    }
    return eta;
}

std::uint32_t default_bound(const KGraph& g) {
    std::vector<std::uint32_t> per_color(g.rank(), 0);
    for (std::size_t e = 0; e < g.skeleton().edge_count(); ++e) {
        ++per_color[static_cast<std::size_t>(g.color(EdgeIndex{static_cast<std::uint32_t>(e)}) - 1)];
    }
    return static_cast<std::uint32_t>(g.vertex_count()) + *std::max_element(per_color.begin(), per_color.end());
}

std::vector<std::vector<std::int64_t>> scan_vectors(std::size_t rank, std::uint32_t bound) {
    std::vector<std::vector<std::int64_t>> out;
    const auto b = static_cast<std::int64_t>(bound);
    std::vector<std::int64_t> p(rank, -b);
    while (true) {
        auto first = std::find_if(p.begin(), p.end(), [](std::int64_t x) { return x != 0; });
        if (first != p.end() && *first > 0) out.push_back(p);
        std::size_t i = 0;
        while (i < rank && p[i] == b) p[i++] = -b;
        if (i == rank) break;
        ++p[i];
    }
    return out;
}

ScanResult scan_aperiodicity(const KGraph& g, const ScanOptions& options) {
    if (options.bound < 1) throw InputError("scan bound must be at least 1");
    const auto vectors = scan_vectors(g.rank(), options.bound);
    std::vector<ScanEntry> tasks;
    for (VertexIndex v : g.vertices()) {
        for (const auto& p : vectors) tasks.push_back({v, p, Decision::inconclusive, std::nullopt});
    }

    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> first_hit{tasks.size()};
    auto worker = [&] {
        for (std::size_t i = next++; i < tasks.size(); i = next++) {
            if (i > first_hit.load()) continue;
            ScanEntry& task = tasks[i];
            auto [m, n] = positive_part(task.p);
            auto decided = local_periodicity_at(g, task.vertex, m, n, options.limits);
            task.decision = decided.decision;
            task.witness = std::move(decided.witness);
            if (task.decision == Decision::periodic) {
                std::size_t cur = first_hit.load();
                while (i < cur && !first_hit.compare_exchange_weak(cur, i)) {
                }
            }
        }
    };
    const unsigned jobs = std::max(1u, options.jobs);
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
    }

    ScanResult result;
    result.bound = options.bound;
    const std::size_t hit = first_hit.load();
    if (hit < tasks.size()) {
        result.verdict = ScanVerdict::periodic;
        result.hit = tasks[hit];
        auto [m, n] = positive_part(tasks[hit].p);
        result.tuple = periodicity_tuple(g, tasks[hit].vertex, m, n, options.limits);
        tasks.resize(hit + 1);
    } else {
        bool any_open = std::any_of(tasks.begin(), tasks.end(),
                                    [](const ScanEntry& e) { return e.decision == Decision::inconclusive; });
        result.verdict = any_open ? ScanVerdict::inconclusive : ScanVerdict::aperiodic_up_to_bound;
    }
    result.entries = std::move(tasks);
    return result;
}

bool condition_b_oracle(const KGraph& g, VertexIndex v, std::uint32_t depth) {
    std::vector<Path> into;
    for (const Degree& d : degrees_below(Degree::uniform(g.rank(), depth))) {
        if (d.total() > depth) continue;
        for (Path& p : g.paths_into(v, d)) into.push_back(std::move(p));
    }
    for (const EPPath& x : ep_samples(g, v, depth)) {
        std::vector<EPPath> images;
        for (const Path& mu : into) images.push_back(ep_prepend(g, mu, x));
        bool separated = true;
        for (std::size_t i = 0; i < images.size() && separated; ++i) {
            for (std::size_t j = i + 1; j < images.size() && separated; ++j) {
                separated = !ep_equal(g, images[i], images[j]);
            }
        }
        if (separated) return true;
    }
    return false;
}

}  // namespace kgraph
