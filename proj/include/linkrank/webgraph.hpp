#ifndef LINKRANK_WEBGRAPH_HPP
#define LINKRANK_WEBGRAPH_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "linkrank/errors.hpp"

namespace linkrank {

// Case-sensitive page identifier. Must be non-empty with no surrounding
// whitespace; construction enforces this.
class PageId {
public:
    PageId() = default;
    explicit PageId(std::string value);

    const std::string& str() const { return value_; }

    auto operator<=>(const PageId&) const = default;

private:
    std::string value_;
};

struct PageRecord {
    PageId id;
    std::string title;
    std::vector<std::string> metadata; // keyword phrases, order as authored
    std::int64_t hits = 0;             // analytics visit count, >= 0
};

struct LinkRecord {
    PageId source;
    PageId target;
    std::int64_t visits = 0; // user clicks recorded on this link, >= 0
};

// Immutable directed page graph. Pages are stored sorted by id and every
// accessor iterates in that order, so identical inputs always produce
// identical outputs regardless of the order the records arrived in.
// Read-only after construction; concurrent reads are safe.
class WebGraph {
public:
    struct Edge {
        std::size_t peer;    // page index of the other endpoint
        std::int64_t visits; // click counter of the link
    };

    WebGraph() = default;
    WebGraph(std::vector<PageRecord> pages, std::vector<LinkRecord> links);

    std::size_t page_count() const { return pages_.size(); }
    std::size_t link_count() const { return link_count_; }
    bool empty() const { return pages_.empty(); }

    // All pages, sorted by id.
    const std::vector<PageRecord>& pages() const { return pages_; }

    bool has_page(const PageId& id) const;
    const PageRecord& page(const PageId& id) const; // throws UnknownPage

    // B(u): pages linking to u, sorted by id.
    std::vector<PageId> in_neighbors(const PageId& u) const;
    // R(v): pages v links out to, sorted by id.
    std::vector<PageId> out_neighbors(const PageId& v) const;

    std::size_t in_degree(const PageId& u) const;
    std::size_t out_degree(const PageId& v) const;

    // Sum of click counters over all links leaving v.
    std::int64_t total_link_visits(const PageId& v) const;

    bool has_link(const PageId& source, const PageId& target) const;
    std::int64_t link_visits(const PageId& source,
                             const PageId& target) const; // throws NoSuchLink

    // Index-based view used by the rank algorithms. Indices follow the
    // sorted page order and are stable for the lifetime of the graph.
    std::size_t index_of(const PageId& id) const; // throws UnknownPage
    const PageId& id_at(std::size_t i) const { return pages_[i].id; }
    const PageRecord& page_at(std::size_t i) const { return pages_[i]; }
    std::span<const Edge> in_edges(std::size_t target) const;
    std::span<const Edge> out_edges(std::size_t source) const;
    std::size_t in_degree_at(std::size_t i) const { return in_[i].size(); }
    std::size_t out_degree_at(std::size_t i) const { return out_[i].size(); }
    std::int64_t total_link_visits_at(std::size_t i) const { return total_visits_[i]; }

private:
    // find index of id, or page_count() if absent
    std::size_t find(const PageId& id) const;

    std::vector<PageRecord> pages_;        // sorted by id
    std::vector<std::vector<Edge>> out_;   // per source, sorted by target
    std::vector<std::vector<Edge>> in_;    // per target, sorted by source
    std::vector<std::int64_t> total_visits_;
    std::size_t link_count_ = 0;
};

// Validates and assembles a graph. Rejects duplicate page ids, links with
// undeclared endpoints, repeated (source, target) pairs and negative
// visit/hit counters.
WebGraph build_graph(std::vector<PageRecord> pages, std::vector<LinkRecord> links);

} // namespace linkrank

#endif
