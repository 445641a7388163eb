#ifndef LINKRANK_TESTS_RANDOM_GRAPHS_HPP
#define LINKRANK_TESTS_RANDOM_GRAPHS_HPP

// Seeded random digraph generation for property tests. All draws come from
// a caller-owned mt19937 so every test run sees the same graphs.

#include <cstdint>
#include <random>

#include "linear_oracle.hpp"

namespace oracle {

struct RandomGraphOptions {
    std::size_t min_pages = 1;
    std::size_t max_pages = 10;
    double edge_probability = 0.3;
    double self_loop_probability = 0.05;
    std::int64_t max_visits = 20;     // per-link counter drawn from [0, max]
    bool dangling_free = false;       // give every page at least one outlink
    bool uniform_visits = false;      // same positive counter on all links of a source
};

inline Graph random_digraph(std::mt19937& rng, const RandomGraphOptions& opt = {}) {
    Graph g;
    g.n = std::uniform_int_distribution<std::size_t>(opt.min_pages, opt.max_pages)(rng);
    std::bernoulli_distribution edge(opt.edge_probability);
    std::bernoulli_distribution self_loop(opt.self_loop_probability);
    std::uniform_int_distribution<std::int64_t> visits(0, opt.max_visits);

    for (std::size_t s = 0; s < g.n; ++s) {
        for (std::size_t t = 0; t < g.n; ++t) {
            const bool take = (s == t) ? self_loop(rng) : edge(rng);
            if (take) g.links.push_back({s, t, visits(rng)});
        }
    }

    if (opt.dangling_free) {
        std::uniform_int_distribution<std::size_t> any_page(0, g.n - 1);
        for (std::size_t s = 0; s < g.n; ++s) {
            if (g.out_degree(s) == 0) {
                g.links.push_back({s, any_page(rng), visits(rng)});
            }
        }
    }

    if (opt.uniform_visits) {
        std::uniform_int_distribution<std::int64_t> positive(1, opt.max_visits);
        for (std::size_t s = 0; s < g.n; ++s) {
            const std::int64_t shared = positive(rng);
            for (Link& l : g.links) {
                if (l.source == s) l.visits = shared;
            }
        }
    }
    return g;
}

} // namespace oracle

#endif
