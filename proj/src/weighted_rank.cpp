#include "linkrank/weighted_rank.hpp"

#include <cstdint>
#include <stdexcept>

namespace linkrank {

namespace {

void check_inputs(const WebGraph& g, const DampingParams& damping,
                  const IterationParams& iter) {
    if (g.empty()) {
        throw GraphError(GraphErrc::EmptyGraph, "rank computation needs a non-empty graph");
    }
    if (!(damping.d >= 0.0 && damping.d <= 1.0)) {
        throw std::invalid_argument("dampening factor must be in [0, 1]");
    }
    if (!(iter.tolerance > 0.0)) {
        throw std::invalid_argument("tolerance must be > 0");
    }
    if (iter.max_iterations < 1) {
        throw std::invalid_argument("max_iterations must be >= 1");
    }
}

std::uint64_t summed_in_degrees(const WebGraph& g, std::size_t source) {
    std::uint64_t sum = 0;
    for (const WebGraph::Edge& e : g.out_edges(source)) {
        sum += g.in_degree_at(e.peer);
    }
    return sum;
}

std::uint64_t summed_out_degrees(const WebGraph& g, std::size_t source) {
    std::uint64_t sum = 0;
    for (const WebGraph::Edge& e : g.out_edges(source)) {
        sum += g.out_degree_at(e.peer);
    }
    return sum;
}

std::size_t require_link(const WebGraph& g, const PageId& source, const PageId& target) {
    if (!g.has_page(source) || !g.has_page(target) || !g.has_link(source, target)) {
        throw GraphError(GraphErrc::NoSuchLink,
                         "no link '" + source.str() + "' -> '" + target.str() + "'");
    }
    return g.index_of(source);
}

} // namespace

LinkWeight inlink_weight(const WebGraph& g, const PageId& source, const PageId& target) {
    const std::size_t s = require_link(g, source, target);
    // denominator >= 1: every reference page has at least the inlink from source
    const double denom = static_cast<double>(summed_in_degrees(g, s));
    return {static_cast<double>(g.in_degree(target)) / denom};
}

LinkWeight outlink_weight(const WebGraph& g, const PageId& source, const PageId& target) {
    const std::size_t s = require_link(g, source, target);
    const std::uint64_t denom = summed_out_degrees(g, s);
    if (denom == 0) return {0.0}; // all reference pages dangling
    return {static_cast<double>(g.out_degree(target)) / static_cast<double>(denom)};
}

RankVector weighted_pagerank(const WebGraph& g, const DampingParams& damping,
                             const IterationParams& iter) {
    check_inputs(g, damping, iter);

    const std::size_t n = g.page_count();
    const double d = damping.d;
    RankSystem system;
    system.base.assign(n, 1.0 - d);
    system.rows.resize(n);
    // visiting sources in ascending index keeps every row sorted by source,
    // which fixes the accumulation order
    for (std::size_t v = 0; v < n; ++v) {
        const double in_denom = static_cast<double>(summed_in_degrees(g, v));
        const std::uint64_t out_denom = summed_out_degrees(g, v);
        for (const WebGraph::Edge& e : g.out_edges(v)) {
            if (out_denom == 0) continue; // weight 0, term drops out
            const double win = static_cast<double>(g.in_degree_at(e.peer)) / in_denom;
            const double wout =
                static_cast<double>(g.out_degree_at(e.peer)) / static_cast<double>(out_denom);
            system.rows[e.peer].push_back({v, d * win * wout});
        }
    }
    return iterate_rank(g, system, iter);
}

RankVector vol_pagerank(const WebGraph& g, const DampingParams& damping,
                        const IterationParams& iter) {
    check_inputs(g, damping, iter);

    const std::size_t n = g.page_count();
    const double d = damping.d;
    RankSystem system;
    system.base.assign(n, 1.0 - d);
    system.rows.resize(n);
    for (std::size_t u = 0; u < n; ++u) {
        for (const WebGraph::Edge& e : g.in_edges(u)) {
            const std::int64_t total = g.total_link_visits_at(e.peer);
            if (total == 0) continue; // unvisited source transfers nothing
            const double share = static_cast<double>(e.visits) / static_cast<double>(total);
            system.rows[u].push_back({e.peer, d * share});
        }
    }
    return iterate_rank(g, system, iter);
}

RankVector wpr_vol_pagerank(const WebGraph& g, const DampingParams& damping,
                            const IterationParams& iter) {
    check_inputs(g, damping, iter);

    const std::size_t n = g.page_count();
    const double d = damping.d;
    RankSystem system;
    system.base.assign(n, 1.0 - d);
    system.rows.resize(n);
    for (std::size_t v = 0; v < n; ++v) {
        const double in_denom = static_cast<double>(summed_in_degrees(g, v));
        const std::int64_t total = g.total_link_visits_at(v);
        if (total == 0) continue;
        for (const WebGraph::Edge& e : g.out_edges(v)) {
            const double win = static_cast<double>(g.in_degree_at(e.peer)) / in_denom;
            const double share = static_cast<double>(e.visits) / static_cast<double>(total);
            system.rows[e.peer].push_back({v, d * share * win});
        }
    }
    return iterate_rank(g, system, iter);
}

} // namespace linkrank
