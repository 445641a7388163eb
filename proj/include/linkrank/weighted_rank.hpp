#ifndef LINKRANK_WEIGHTED_RANK_HPP
#define LINKRANK_WEIGHTED_RANK_HPP

#include "linkrank/link_rank.hpp"
#include "linkrank/webgraph.hpp"

namespace linkrank {

// Per-link popularity weight, always in [0, 1].
struct LinkWeight {
    double value = 0.0;
};

// Share of the inlink popularity that `source` passes to `target`:
// in_degree(target) over the summed in-degrees of source's reference
// pages. Throws NoSuchLink if the link does not exist.
LinkWeight inlink_weight(const WebGraph& g, const PageId& source, const PageId& target);

// Same with out-degrees. A zero denominator (every reference page of
// `source` is dangling) yields weight 0 rather than an error.
LinkWeight outlink_weight(const WebGraph& g, const PageId& source, const PageId& target);

// Rank transfer proportional to the in- and outlink popularity of each
// target: (1 - d) + d * sum of PR(v) * Win(v,u) * Wout(v,u).
RankVector weighted_pagerank(const WebGraph& g, const DampingParams& damping = {},
                             const IterationParams& iter = {});

// Rank transfer proportional to recorded link visits: (1 - d) + d * sum of
// PR(v) * visits(v,u) / total_link_visits(v). Sources whose links were
// never visited transfer nothing.
RankVector vol_pagerank(const WebGraph& g, const DampingParams& damping = {},
                        const IterationParams& iter = {});

// Visits-based transfer additionally scaled by the inlink popularity
// weight (outlink popularity deliberately not applied):
// (1 - d) + d * sum of PR(v) * visits(v,u) * Win(v,u) / total_link_visits(v).
RankVector wpr_vol_pagerank(const WebGraph& g, const DampingParams& damping = {},
                            const IterationParams& iter = {});

} // namespace linkrank

#endif
