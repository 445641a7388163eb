#include "linkrank/hybrid_query.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace linkrank {

std::string normalize_phrase(std::string_view raw) {
    std::string out;
    out.reserve(raw.size());
    bool pending_space = false;
    for (const char ch : raw) {
        const auto uc = static_cast<unsigned char>(ch);
        if (std::isspace(uc)) {
            pending_space = !out.empty();
            continue;
        }
        if (pending_space) {
            out.push_back(' ');
            pending_space = false;
        }
        out.push_back(static_cast<char>(std::tolower(uc)));
    }
    return out;
}

std::vector<std::string> sorted_metadata(const PageRecord& page) {
    std::vector<std::string> phrases;
    phrases.reserve(page.metadata.size());
    for (const std::string& raw : page.metadata) {
        std::string normalized = normalize_phrase(raw);
        if (!normalized.empty()) {
            phrases.push_back(std::move(normalized));
        }
    }
    std::sort(phrases.begin(), phrases.end());
    phrases.erase(std::unique(phrases.begin(), phrases.end()), phrases.end());
    return phrases;
}

int match_counter(const PageRecord& page, std::string_view query) {
    const std::string key = normalize_phrase(query);
    if (key.empty()) return 0;
    const std::vector<std::string> phrases = sorted_metadata(page);
    return binary_search(std::span<const std::string>(phrases), key) ? 1 : 0;
}

double hybrid_score(const WebGraph& g, const PageId& page, std::string_view query,
                    const HybridWeights& weights) {
    if (!(weights.s >= 0.0 && weights.vl >= 0.0 && weights.ga >= 0.0)) {
        throw std::invalid_argument("hybrid weights must be >= 0");
    }
    if (!(weights.hits_divisor > 0.0)) {
        throw std::invalid_argument("hits_divisor must be > 0");
    }
    if (!(weights.d >= 0.0 && weights.d <= 1.0)) {
        throw std::invalid_argument("dampening factor must be in [0, 1]");
    }
    const PageRecord& record = g.page(page); // throws UnknownPage
    const int c = match_counter(record, query);
    const double degrees =
        static_cast<double>(g.in_degree(page) + g.out_degree(page));
    return c * weights.s + weights.d * weights.vl * degrees +
           weights.ga * static_cast<double>(record.hits) / weights.hits_divisor;
}

QueryResult rank_query(const WebGraph& g, std::string_view query,
                       const HybridWeights& weights) {
    if (g.empty()) {
        throw GraphError(GraphErrc::EmptyGraph, "rank_query needs a non-empty graph");
    }
    QueryResult result;
    result.rows.reserve(g.page_count());
    for (const PageRecord& record : g.pages()) {
        result.rows.push_back({0, record.id, hybrid_score(g, record.id, query, weights)});
    }
    // descending score; equal scores keep ascending id order
    std::stable_sort(result.rows.begin(), result.rows.end(),
                     [](const QueryRow& a, const QueryRow& b) { return a.score > b.score; });
    for (std::size_t i = 0; i < result.rows.size(); ++i) {
        result.rows[i].rank = i + 1;
    }
    return result;
}

} // namespace linkrank
