#include "linkrank/webgraph.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <utility>

namespace linkrank {

const char* to_string(GraphErrc code) {
    switch (code) {
    case GraphErrc::DuplicatePageId: return "DuplicatePageId";
    case GraphErrc::UnknownLinkEndpoint: return "UnknownLinkEndpoint";
    case GraphErrc::DuplicateLink: return "DuplicateLink";
    case GraphErrc::NegativeVisits: return "NegativeVisits";
    case GraphErrc::UnknownPage: return "UnknownPage";
    case GraphErrc::NoSuchLink: return "NoSuchLink";
    case GraphErrc::EmptyGraph: return "EmptyGraph";
    }
    return "GraphError";
}

PageId::PageId(std::string value) : value_(std::move(value)) {
    if (value_.empty()) {
        throw std::invalid_argument("page id must be non-empty");
    }
    if (std::isspace(static_cast<unsigned char>(value_.front())) ||
        std::isspace(static_cast<unsigned char>(value_.back()))) {
        throw std::invalid_argument("page id must not have surrounding whitespace: '" +
                                    value_ + "'");
    }
}

namespace {

[[noreturn]] void throw_unknown_page(const PageId& id) {
    throw GraphError(GraphErrc::UnknownPage, "unknown page '" + id.str() + "'");
}

} // namespace

WebGraph::WebGraph(std::vector<PageRecord> pages, std::vector<LinkRecord> links)
    : pages_(std::move(pages)) {
    std::sort(pages_.begin(), pages_.end(),
              [](const PageRecord& a, const PageRecord& b) { return a.id < b.id; });
    for (std::size_t i = 0; i + 1 < pages_.size(); ++i) {
        if (pages_[i].id == pages_[i + 1].id) {
            throw GraphError(GraphErrc::DuplicatePageId,
                             "duplicate page id '" + pages_[i].id.str() + "'");
        }
    }
    for (const PageRecord& p : pages_) {
        if (p.hits < 0) {
            throw GraphError(GraphErrc::NegativeVisits,
                             "page '" + p.id.str() + "': negative hit count " +
                                 std::to_string(p.hits));
        }
    }

    out_.resize(pages_.size());
    in_.resize(pages_.size());
    total_visits_.assign(pages_.size(), 0);

    // deterministic edge order regardless of input order
    std::sort(links.begin(), links.end(), [](const LinkRecord& a, const LinkRecord& b) {
        if (a.source != b.source) return a.source < b.source;
        return a.target < b.target;
    });

    for (std::size_t i = 0; i < links.size(); ++i) {
        const LinkRecord& l = links[i];
        const std::string link_name = "link '" + l.source.str() + "' -> '" + l.target.str() + "'";
        if (l.visits < 0) {
            throw GraphError(GraphErrc::NegativeVisits,
                             link_name + ": negative visits " + std::to_string(l.visits));
        }
        const std::size_t s = find(l.source);
        if (s == pages_.size()) {
            throw GraphError(GraphErrc::UnknownLinkEndpoint,
                             link_name + ": unknown endpoint '" + l.source.str() + "'");
        }
        const std::size_t t = find(l.target);
        if (t == pages_.size()) {
            throw GraphError(GraphErrc::UnknownLinkEndpoint,
                             link_name + ": unknown endpoint '" + l.target.str() + "'");
        }
        if (i > 0 && links[i - 1].source == l.source && links[i - 1].target == l.target) {
            throw GraphError(GraphErrc::DuplicateLink, "duplicate " + link_name);
        }
        out_[s].push_back({t, l.visits});
        in_[t].push_back({s, l.visits});
        total_visits_[s] += l.visits;
        ++link_count_;
    }
    for (auto& row : in_) {
        std::sort(row.begin(), row.end(),
                  [](const Edge& a, const Edge& b) { return a.peer < b.peer; });
    }
}

std::size_t WebGraph::find(const PageId& id) const {
    auto it = std::lower_bound(pages_.begin(), pages_.end(), id,
                               [](const PageRecord& p, const PageId& key) { return p.id < key; });
    if (it == pages_.end() || it->id != id) return pages_.size();
    return static_cast<std::size_t>(it - pages_.begin());
}

bool WebGraph::has_page(const PageId& id) const { return find(id) != pages_.size(); }

const PageRecord& WebGraph::page(const PageId& id) const {
    const std::size_t i = find(id);
    if (i == pages_.size()) throw_unknown_page(id);
    return pages_[i];
}

std::size_t WebGraph::index_of(const PageId& id) const {
    const std::size_t i = find(id);
    if (i == pages_.size()) throw_unknown_page(id);
    return i;
}

std::vector<PageId> WebGraph::in_neighbors(const PageId& u) const {
    const std::size_t i = index_of(u);
    std::vector<PageId> result;
    result.reserve(in_[i].size());
    for (const Edge& e : in_[i]) result.push_back(pages_[e.peer].id);
    return result;
}

std::vector<PageId> WebGraph::out_neighbors(const PageId& v) const {
    const std::size_t i = index_of(v);
    std::vector<PageId> result;
    result.reserve(out_[i].size());
    for (const Edge& e : out_[i]) result.push_back(pages_[e.peer].id);
    return result;
}

std::size_t WebGraph::in_degree(const PageId& u) const { return in_[index_of(u)].size(); }

std::size_t WebGraph::out_degree(const PageId& v) const { return out_[index_of(v)].size(); }

std::int64_t WebGraph::total_link_visits(const PageId& v) const {
    return total_visits_[index_of(v)];
}

bool WebGraph::has_link(const PageId& source, const PageId& target) const {
    const std::size_t s = find(source);
    const std::size_t t = find(target);
    if (s == pages_.size() || t == pages_.size()) return false;
    const auto& row = out_[s];
    auto it = std::lower_bound(row.begin(), row.end(), t,
                               [](const Edge& e, std::size_t key) { return e.peer < key; });
    return it != row.end() && it->peer == t;
}

std::int64_t WebGraph::link_visits(const PageId& source, const PageId& target) const {
    const std::size_t s = index_of(source);
    const std::size_t t = index_of(target);
    const auto& row = out_[s];
    auto it = std::lower_bound(row.begin(), row.end(), t,
                               [](const Edge& e, std::size_t key) { return e.peer < key; });
    if (it == row.end() || it->peer != t) {
        throw GraphError(GraphErrc::NoSuchLink, "no link '" + source.str() + "' -> '" +
                                                    target.str() + "'");
    }
    return it->visits;
}

std::span<const WebGraph::Edge> WebGraph::in_edges(std::size_t target) const {
    return in_[target];
}

std::span<const WebGraph::Edge> WebGraph::out_edges(std::size_t source) const {
    return out_[source];
}

WebGraph build_graph(std::vector<PageRecord> pages, std::vector<LinkRecord> links) {
    return WebGraph(std::move(pages), std::move(links));
}

} // namespace linkrank
