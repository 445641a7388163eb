#include "linkrank/link_rank.hpp"

#include <cmath>
#include <stdexcept>

namespace linkrank {

namespace {

void check_params(const WebGraph& g, const IterationParams& iter) {
    if (g.empty()) {
        throw GraphError(GraphErrc::EmptyGraph, "rank computation needs a non-empty graph");
    }
    if (!(iter.tolerance > 0.0)) {
        throw std::invalid_argument("tolerance must be > 0");
    }
    if (iter.max_iterations < 1) {
        throw std::invalid_argument("max_iterations must be >= 1");
    }
}

void check_damping(double d) {
    if (!(d >= 0.0 && d <= 1.0)) {
        throw std::invalid_argument("dampening factor must be in [0, 1]");
    }
}

} // namespace

RankVector iterate_rank(const WebGraph& g, const RankSystem& system,
                        const IterationParams& iter) {
    const std::size_t n = g.page_count();
    std::vector<double> current(n, iter.initial_value);
    std::vector<double> next(n, 0.0);

    RankVector result;
    for (std::size_t k = 1; k <= iter.max_iterations; ++k) {
        bool finite = true;
        double diff = 0.0;
        for (std::size_t u = 0; u < n; ++u) {
            double score = system.base[u];
            for (const RankSystem::Term& term : system.rows[u]) {
                score += term.coeff * current[term.source];
            }
            next[u] = score;
            finite = finite && std::isfinite(score);
            diff = std::max(diff, std::abs(score - current[u]));
        }
        if (!finite) {
            // diverging run: keep the last finite iterate and report failure
            result.iterations_used = k;
            result.converged = false;
            break;
        }
        current.swap(next);
        result.iterations_used = k;
        if (diff < iter.tolerance) {
            result.converged = true;
            break;
        }
    }

    for (std::size_t u = 0; u < n; ++u) {
        result.scores.emplace(g.id_at(u), current[u]);
    }
    return result;
}

RankVector simplified_pagerank(const WebGraph& g, double c_norm,
                               const IterationParams& iter) {
    check_params(g, iter);
    if (!(c_norm > 0.0)) {
        throw std::invalid_argument("c_norm must be > 0");
    }

    const std::size_t n = g.page_count();
    RankSystem system;
    system.base.assign(n, 0.0);
    system.rows.resize(n);
    for (std::size_t u = 0; u < n; ++u) {
        for (const WebGraph::Edge& e : g.in_edges(u)) {
            const double out = static_cast<double>(g.out_degree_at(e.peer));
            system.rows[u].push_back({e.peer, c_norm / out});
        }
    }
    return iterate_rank(g, system, iter);
}

RankVector damped_pagerank(const WebGraph& g, const DampingParams& damping,
                           const IterationParams& iter) {
    check_params(g, iter);
    check_damping(damping.d);

    const std::size_t n = g.page_count();
    const double d = damping.d;
    RankSystem system;
    system.base.assign(n, 1.0 - d);
    system.rows.resize(n);
    for (std::size_t u = 0; u < n; ++u) {
        for (const WebGraph::Edge& e : g.in_edges(u)) {
            const double out = static_cast<double>(g.out_degree_at(e.peer));
            system.rows[u].push_back({e.peer, d / out});
        }
    }
    return iterate_rank(g, system, iter);
}

} // namespace linkrank
