#ifndef LINKRANK_LINK_RANK_HPP
#define LINKRANK_LINK_RANK_HPP

#include <cstddef>
#include <map>
#include <vector>

#include "linkrank/webgraph.hpp"

namespace linkrank {

// Output of a rank computation. Exactly one finite score per page.
struct RankVector {
    std::map<PageId, double> scores;
    std::size_t iterations_used = 0;
    bool converged = false;
};

struct IterationParams {
    double tolerance = 1e-10; // max-norm of successive-iterate difference
    std::size_t max_iterations = 1000;
    double initial_value = 1.0; // starting score of every page
};

struct DampingParams {
    double d = 0.85;     // dampening factor, in [0, 1]
    double c_norm = 1.0; // normalization factor of the simplified scheme, > 0
};

// Affine fixed-point system x = base + M x with M held as per-target sparse
// rows. Every rank algorithm in this project reduces to one of these; they
// all share the iteration loop below.
struct RankSystem {
    struct Term {
        std::size_t source;
        double coeff;
    };
    std::vector<double> base;             // one constant per page
    std::vector<std::vector<Term>> rows;  // incoming terms per page
};

// Iterates the system from initial_value until the max-norm change drops
// below tolerance or max_iterations is reached; `converged` reports which.
// Accumulation order is fixed, so results are bit-identical across runs.
RankVector iterate_rank(const WebGraph& g, const RankSystem& system,
                        const IterationParams& iter);

// Rank transfer without a baseline term: each page receives the scores of
// its in-neighbors divided by their outlink counts, scaled by c_norm.
// Dangling pages distribute nothing.
RankVector simplified_pagerank(const WebGraph& g, double c_norm,
                               const IterationParams& iter = {});

// The classic damped scheme: (1 - d) baseline plus d times the mass pulled
// in over inlinks. Converges for d < 1; d = 1 is allowed but may only be
// reported as non-converged.
RankVector damped_pagerank(const WebGraph& g, const DampingParams& damping = {},
                           const IterationParams& iter = {});

} // namespace linkrank

#endif
