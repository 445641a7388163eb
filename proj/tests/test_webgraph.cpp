#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <functional>
#include <random>

#include "linkrank/corpus_io.hpp"
#include "linkrank/webgraph.hpp"
#include "support/random_graphs.hpp"

using namespace linkrank;

namespace {

PageRecord page(const char* id, std::int64_t hits = 0) {
    return {PageId(id), id, {}, hits};
}

LinkRecord link(const char* s, const char* t, std::int64_t visits = 0) {
    return {PageId(s), PageId(t), visits};
}

GraphErrc code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const GraphError& e) {
        return e.code();
    }
    FAIL("expected a GraphError");
    return GraphErrc::EmptyGraph;
}

} // namespace

TEST_CASE("page id validation") {
    CHECK_NOTHROW(PageId("A"));
    CHECK_NOTHROW(PageId("with space inside"));
    CHECK_THROWS_AS(PageId(""), std::invalid_argument);
    CHECK_THROWS_AS(PageId(" A"), std::invalid_argument);
    CHECK_THROWS_AS(PageId("A "), std::invalid_argument);
    CHECK_THROWS_AS(PageId("A\t"), std::invalid_argument);
}

TEST_CASE("empty graph") {
    const WebGraph g = build_graph({}, {});
    CHECK(g.page_count() == 0);
    CHECK(g.link_count() == 0);
    CHECK(g.empty());
    CHECK_FALSE(g.has_page(PageId("A")));
}

TEST_CASE("self loop counts toward both degrees") {
    const WebGraph g = build_graph({page("A")}, {link("A", "A")});
    CHECK(g.page_count() == 1);
    CHECK(g.link_count() == 1);
    CHECK(g.in_degree(PageId("A")) == 1);
    CHECK(g.out_degree(PageId("A")) == 1);
    CHECK(g.in_neighbors(PageId("A")) == std::vector<PageId>{PageId("A")});
}

TEST_CASE("construction errors") {
    CHECK(code_of([] { build_graph({page("A")}, {link("A", "B")}); }) ==
          GraphErrc::UnknownLinkEndpoint);
    CHECK(code_of([] { build_graph({page("A")}, {link("B", "A")}); }) ==
          GraphErrc::UnknownLinkEndpoint);
    CHECK(code_of([] { build_graph({page("A"), page("A")}, {}); }) ==
          GraphErrc::DuplicatePageId);
    CHECK(code_of([] {
              build_graph({page("A"), page("B")}, {link("A", "B"), link("A", "B")});
          }) == GraphErrc::DuplicateLink);
    CHECK(code_of([] { build_graph({page("A"), page("B")}, {link("A", "B", -1)}); }) ==
          GraphErrc::NegativeVisits);
    CHECK(code_of([] { build_graph({page("A", -5)}, {}); }) == GraphErrc::NegativeVisits);
}

TEST_CASE("accessor errors") {
    const WebGraph g = build_graph({page("A"), page("B")}, {link("A", "B", 3)});
    CHECK(code_of([&] { g.page(PageId("C")); }) == GraphErrc::UnknownPage);
    CHECK(code_of([&] { g.in_degree(PageId("C")); }) == GraphErrc::UnknownPage);
    CHECK(code_of([&] { g.link_visits(PageId("B"), PageId("A")); }) == GraphErrc::NoSuchLink);
    CHECK(g.link_visits(PageId("A"), PageId("B")) == 3);
    CHECK(g.has_link(PageId("A"), PageId("B")));
    CHECK_FALSE(g.has_link(PageId("B"), PageId("A")));
    CHECK_FALSE(g.has_link(PageId("A"), PageId("C")));
}

TEST_CASE("isolated page") {
    const WebGraph g = build_graph({page("A"), page("B")}, {});
    CHECK(g.in_neighbors(PageId("A")).empty());
    CHECK(g.out_neighbors(PageId("A")).empty());
    CHECK(g.in_degree(PageId("A")) == 0);
    CHECK(g.out_degree(PageId("A")) == 0);
    CHECK(g.total_link_visits(PageId("A")) == 0);
}

TEST_CASE("total link visits sums the source's counters") {
    const WebGraph g = build_graph(
        {page("v"), page("a"), page("b"), page("c")},
        {link("v", "a", 10), link("v", "b", 20), link("v", "c", 30)});
    CHECK(g.total_link_visits(PageId("v")) == 60);

    const WebGraph zeros = build_graph(
        {page("v"), page("a"), page("b"), page("c")},
        {link("v", "a", 0), link("v", "b", 0), link("v", "c", 0)});
    CHECK(zeros.total_link_visits(PageId("v")) == 0);
}

TEST_CASE("demo corpus degrees") {
    const WebGraph g = paper_fixture();
    CHECK(g.page_count() == 10);
    CHECK(g.in_neighbors(PageId("FoodWorld")).size() == 4);
    CHECK(g.in_neighbors(PageId("Socialize")).size() == 6);
    CHECK(g.out_degree(PageId("FoodWorld")) == 3);
    CHECK(g.out_degree(PageId("StudyJava")) == 4);
    CHECK(g.in_degree(PageId("TennisPro")) == 5);
    CHECK(g.in_degree(PageId("Travelogue")) == 4);
}

TEST_CASE("neighbors come back sorted") {
    const WebGraph g = build_graph(
        {page("m"), page("z"), page("a"), page("k")},
        {link("z", "m"), link("a", "m"), link("k", "m"), link("m", "z"), link("m", "a")});
    const std::vector<PageId> expected_in = {PageId("a"), PageId("k"), PageId("z")};
    CHECK(g.in_neighbors(PageId("m")) == expected_in);
    const std::vector<PageId> expected_out = {PageId("a"), PageId("z")};
    CHECK(g.out_neighbors(PageId("m")) == expected_out);
}

TEST_CASE("handshake and per-page consistency on random graphs") {
    std::mt19937 rng(20240901);
    oracle::RandomGraphOptions opt;
    opt.max_pages = 12;
    for (int round = 0; round < 50; ++round) {
        const oracle::Graph raw = oracle::random_digraph(rng, opt);
        const WebGraph g = oracle::to_webgraph(raw);

        std::size_t in_sum = 0;
        std::size_t out_sum = 0;
        for (const PageRecord& p : g.pages()) {
            in_sum += g.in_degree(p.id);
            out_sum += g.out_degree(p.id);
            CHECK(g.in_neighbors(p.id).size() == g.in_degree(p.id));

            std::int64_t visit_sum = 0;
            for (const PageId& target : g.out_neighbors(p.id)) {
                visit_sum += g.link_visits(p.id, target);
            }
            CHECK(g.total_link_visits(p.id) == visit_sum);
        }
        CHECK(in_sum == g.link_count());
        CHECK(out_sum == g.link_count());
    }
}

TEST_CASE("construction is order independent") {
    std::mt19937 rng(77);
    oracle::RandomGraphOptions opt;
    opt.max_pages = 8;
    for (int round = 0; round < 20; ++round) {
        const oracle::Graph raw = oracle::random_digraph(rng, opt);

        std::vector<PageRecord> pages;
        for (std::size_t i = 0; i < raw.n; ++i) {
            pages.push_back({PageId(oracle::page_name(i)), "", {}, 0});
        }
        std::vector<LinkRecord> links;
        for (const oracle::Link& l : raw.links) {
            links.push_back({PageId(oracle::page_name(l.source)),
                             PageId(oracle::page_name(l.target)), l.visits});
        }

        const WebGraph a = build_graph(pages, links);
        std::shuffle(pages.begin(), pages.end(), rng);
        std::shuffle(links.begin(), links.end(), rng);
        const WebGraph b = build_graph(pages, links);

        // serialized form captures every accessor-visible property
        CHECK(save_corpus_text(a) == save_corpus_text(b));
    }
}
