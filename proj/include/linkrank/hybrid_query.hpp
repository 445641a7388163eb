#ifndef LINKRANK_HYBRID_QUERY_HPP
#define LINKRANK_HYBRID_QUERY_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "linkrank/webgraph.hpp"

namespace linkrank {

// Coefficients of the hybrid score
//   c * s  +  d * vl * (inlinks + outlinks)  +  ga * hits / hits_divisor
// where c is 1 on a metadata match and 0 otherwise.
struct HybridWeights {
    double s = 0.65;   // weight of a metadata match
    double vl = 0.25;  // weight of the link-degree term
    double ga = 0.1;   // weight of the analytics term
    double d = 0.3;    // dampening factor applied to the link-degree term
    double hits_divisor = 1000.0;
};

// One ranked result row; ranks start at 1.
struct QueryRow {
    std::size_t rank = 0;
    PageId page;
    double score = 0.0;
};

// Full descending ranking of every page for one query.
struct QueryResult {
    std::vector<QueryRow> rows;
};

// Trims surrounding whitespace, collapses internal whitespace runs to a
// single space and lowercases. May return an empty string.
std::string normalize_phrase(std::string_view raw);

// The page's metadata phrases normalized, de-duplicated and sorted
// ascending; the form binary_search expects.
std::vector<std::string> sorted_metadata(const PageRecord& page);

// Classic lo/hi bisection over a strictly ascending array. Index of the
// key, or nullopt. At most two element comparisons per halving step.
template <typename T, typename K>
std::optional<std::size_t> binary_search(std::span<const T> sorted, const K& key) {
    std::ptrdiff_t lo = 0;
    std::ptrdiff_t hi = static_cast<std::ptrdiff_t>(sorted.size()) - 1;
    while (lo <= hi) {
        const std::ptrdiff_t mid = (lo + hi) / 2;
        const T& element = sorted[static_cast<std::size_t>(mid)];
        if (element < key) {
            lo = mid + 1;
        } else if (key < element) {
            hi = mid - 1;
        } else {
            return static_cast<std::size_t>(mid);
        }
    }
    return std::nullopt;
}

inline std::optional<std::size_t> binary_search(std::span<const std::string> sorted,
                                                std::string_view key) {
    return binary_search<std::string, std::string_view>(sorted, key);
}

// 1 if the normalized query equals one of the page's metadata phrases,
// else 0. An empty query never matches.
int match_counter(const PageRecord& page, std::string_view query);

// The hybrid score of one page for a query. Throws UnknownPage.
double hybrid_score(const WebGraph& g, const PageId& page, std::string_view query,
                    const HybridWeights& weights = {});

// Scores every page, sorts descending (ties broken by ascending page id)
// and assigns ranks 1..N. Throws EmptyGraph on an empty graph.
QueryResult rank_query(const WebGraph& g, std::string_view query,
                       const HybridWeights& weights = {});

} // namespace linkrank

#endif
