#include "linkrank/corpus_io.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <utility>

#include <json.hpp>

namespace linkrank {

namespace {

using json = nlohmann::ordered_json;

std::pair<std::size_t, std::size_t> position_of(std::string_view text, std::size_t byte) {
    std::size_t line = 1;
    std::size_t column = 1;
    const std::size_t end = std::min(byte > 0 ? byte - 1 : 0, text.size());
    for (std::size_t i = 0; i < end; ++i) {
        if (text[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    return {line, column};
}

bool trimmed_empty(std::string_view s) {
    return std::all_of(s.begin(), s.end(), [](char ch) {
        return std::isspace(static_cast<unsigned char>(ch)) != 0;
    });
}

bool valid_id_text(const std::string& s) {
    if (s.empty()) return false;
    return !std::isspace(static_cast<unsigned char>(s.front())) &&
           !std::isspace(static_cast<unsigned char>(s.back()));
}

void reject_unknown_fields(const json& object, std::initializer_list<const char*> known,
                           const std::string& where) {
    for (const auto& item : object.items()) {
        const bool ok = std::any_of(known.begin(), known.end(), [&](const char* k) {
            return item.key() == k;
        });
        if (!ok) {
            throw ValidationError(where + ": unknown field '" + item.key() + "'");
        }
    }
}

const json& require_field(const json& object, const char* key, const std::string& where) {
    auto it = object.find(key);
    if (it == object.end()) {
        throw ValidationError(where + ": missing field '" + std::string(key) + "'");
    }
    return *it;
}

std::string get_string(const json& object, const char* key, const std::string& where) {
    const json& value = require_field(object, key, where);
    if (!value.is_string()) {
        throw ValidationError(where + ": field '" + std::string(key) + "' must be a string");
    }
    return value.get<std::string>();
}

std::int64_t get_integer(const json& object, const char* key, const std::string& where) {
    const json& value = require_field(object, key, where);
    if (!value.is_number_integer()) {
        throw ValidationError(where + ": field '" + std::string(key) +
                              "' must be an integer");
    }
    return value.get<std::int64_t>();
}

PageRecord parse_page(const json& node, std::size_t index) {
    const std::string where = "pages[" + std::to_string(index) + "]";
    if (!node.is_object()) {
        throw ValidationError(where + ": must be an object");
    }
    reject_unknown_fields(node, {"id", "title", "metadata", "hits"}, where);

    const std::string id_text = get_string(node, "id", where);
    if (!valid_id_text(id_text)) {
        throw ValidationError(where + ": invalid id '" + id_text +
                              "' (must be non-empty without surrounding whitespace)");
    }

    PageRecord record;
    record.id = PageId(id_text);
    record.title = get_string(node, "title", where);

    const json& metadata = require_field(node, "metadata", where);
    if (!metadata.is_array()) {
        throw ValidationError(where + ": field 'metadata' must be a list of strings");
    }
    for (std::size_t i = 0; i < metadata.size(); ++i) {
        if (!metadata[i].is_string()) {
            throw ValidationError(where + ": metadata[" + std::to_string(i) +
                                  "] must be a string");
        }
        std::string phrase = metadata[i].get<std::string>();
        if (trimmed_empty(phrase)) {
            throw ValidationError(where + ": metadata[" + std::to_string(i) +
                                  "] is empty after trimming");
        }
        record.metadata.push_back(std::move(phrase));
    }

    record.hits = get_integer(node, "hits", where);
    return record;
}

LinkRecord parse_link(const json& node, std::size_t index) {
    const std::string where = "links[" + std::to_string(index) + "]";
    if (!node.is_object()) {
        throw ValidationError(where + ": must be an object");
    }
    reject_unknown_fields(node, {"source", "target", "visits"}, where);

    const std::string source = get_string(node, "source", where);
    const std::string target = get_string(node, "target", where);
    if (!valid_id_text(source) || !valid_id_text(target)) {
        throw ValidationError(where + ": invalid endpoint id");
    }

    LinkRecord record;
    record.source = PageId(source);
    record.target = PageId(target);
    record.visits = get_integer(node, "visits", where);
    return record;
}

} // namespace

WebGraph load_corpus_text(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        const auto [line, column] = position_of(text, e.byte);
        throw ParseError(e.what(), line, column);
    }

    if (!doc.is_object()) {
        throw ValidationError("corpus: top level must be an object with 'pages' and 'links'");
    }
    reject_unknown_fields(doc, {"pages", "links"}, "corpus");
    const json& pages_node = require_field(doc, "pages", "corpus");
    const json& links_node = require_field(doc, "links", "corpus");
    if (!pages_node.is_array() || !links_node.is_array()) {
        throw ValidationError("corpus: 'pages' and 'links' must be lists");
    }

    std::vector<PageRecord> pages;
    pages.reserve(pages_node.size());
    for (std::size_t i = 0; i < pages_node.size(); ++i) {
        pages.push_back(parse_page(pages_node[i], i));
    }
    std::vector<LinkRecord> links;
    links.reserve(links_node.size());
    for (std::size_t i = 0; i < links_node.size(); ++i) {
        links.push_back(parse_link(links_node[i], i));
    }

    try {
        return build_graph(std::move(pages), std::move(links));
    } catch (const GraphError& e) {
        throw ValidationError(std::string("corpus: ") + e.what());
    }
}

WebGraph load_corpus(std::istream& in) {
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return load_corpus_text(buffer.str());
}

void save_corpus(const WebGraph& g, std::ostream& out) { out << save_corpus_text(g); }

std::string save_corpus_text(const WebGraph& g) {
    json doc;
    doc["pages"] = json::array();
    for (const PageRecord& page : g.pages()) {
        json node;
        node["id"] = page.id.str();
        node["title"] = page.title;
        node["metadata"] = page.metadata;
        node["hits"] = page.hits;
        doc["pages"].push_back(std::move(node));
    }
    doc["links"] = json::array();
    for (std::size_t s = 0; s < g.page_count(); ++s) {
        for (const WebGraph::Edge& e : g.out_edges(s)) {
            json node;
            node["source"] = g.id_at(s).str();
            node["target"] = g.id_at(e.peer).str();
            node["visits"] = e.visits;
            doc["links"].push_back(std::move(node));
        }
    }
    return doc.dump(2) + "\n";
}

WebGraph paper_fixture() {
    auto page = [](const char* id, const char* title, std::vector<std::string> metadata,
                   std::int64_t hits) {
        return PageRecord{PageId(id), title, std::move(metadata), hits};
    };
    std::vector<PageRecord> pages;
    pages.push_back(page("ChattingWeek", "Chatting Week",
                         {"Chatting Week", "Chat24*7 Chat", "Private Chat", "Public Chat"},
                         1200));
    pages.push_back(page("ConnectWithPHP", "Connect with PHP",
                         {"Connect with PHP", "PHP", "Backend", "Cookies", "Session"}, 900));
    pages.push_back(page("CricketMania", "Cricket Mania",
                         {"Cricket Mania", "IPL", "World Cup", "Cricket Live", "Cricket Score"},
                         4200));
    pages.push_back(page("EatYourWay", "Eat Your Way",
                         {"Eat Your Way", "Paratha", "Indian Food", "Dosa", "Parotta"}, 1800));
    pages.push_back(page("FoodWorld", "Food World",
                         {"Food World", "Pasta", "Pizza", "Burger", "Continental", "Food"},
                         6000));
    pages.push_back(page("Socialize", "Socialize",
                         {"Socialize", "Friends", "Strangers", "Blog", "Share"}, 7500));
    pages.push_back(page("StudyJava", "Study Java",
                         {"Study Java", "Java", "JVM", "Java Byte Code"}, 3500));
    pages.push_back(page("TennisPro", "Tennis Pro Group",
                         {"Tennis Pro Group", "Grand Slam", "Tennis Open Live", "Tennis Score",
                          "Tennis Wimbledon"},
                         2000));
    pages.push_back(page("Travelogue", "Travelogue",
                         {"Travelogue", "Explore India", "Travel Bangalore", "Travel Hyderabad"},
                         2500));
    pages.push_back(page("WelcomeToWorld", "Welcome to World",
                         {"Welcome to World", "Explore World", "Travel Paris",
                          "Travel Los Angeles"},
                         1100));

    auto link = [](const char* source, const char* target, std::int64_t visits) {
        return LinkRecord{PageId(source), PageId(target), visits};
    };
    std::vector<LinkRecord> links = {
        link("ChattingWeek", "Socialize", 140),
        link("ChattingWeek", "StudyJava", 35),
        link("ConnectWithPHP", "Socialize", 60),
        link("ConnectWithPHP", "StudyJava", 75),
        link("CricketMania", "StudyJava", 20),
        link("CricketMania", "TennisPro", 310),
        link("EatYourWay", "FoodWorld", 220),
        link("EatYourWay", "Travelogue", 45),
        link("FoodWorld", "EatYourWay", 180),
        link("FoodWorld", "Socialize", 260),
        link("FoodWorld", "Travelogue", 90),
        link("Socialize", "ChattingWeek", 150),
        link("Socialize", "FoodWorld", 330),
        link("Socialize", "TennisPro", 120),
        link("StudyJava", "ConnectWithPHP", 85),
        link("StudyJava", "FoodWorld", 110),
        link("StudyJava", "Socialize", 95),
        link("StudyJava", "TennisPro", 40),
        link("TennisPro", "CricketMania", 170),
        link("TennisPro", "Socialize", 65),
        link("TennisPro", "Travelogue", 55),
        link("Travelogue", "FoodWorld", 125),
        link("Travelogue", "Socialize", 105),
        link("Travelogue", "TennisPro", 80),
        link("Travelogue", "WelcomeToWorld", 95),
        link("WelcomeToWorld", "TennisPro", 30),
        link("WelcomeToWorld", "Travelogue", 130),
    };
    return build_graph(std::move(pages), std::move(links));
}

std::vector<QueryRow> ranking_of(const RankVector& ranks) {
    std::vector<QueryRow> rows;
    rows.reserve(ranks.scores.size());
    for (const auto& [id, score] : ranks.scores) {
        rows.push_back({0, id, score});
    }
    // scores map iterates in ascending id order, so stable sort keeps the
    // required tie-break
    std::stable_sort(rows.begin(), rows.end(),
                     [](const QueryRow& a, const QueryRow& b) { return a.score > b.score; });
    for (std::size_t i = 0; i < rows.size(); ++i) {
        rows[i].rank = i + 1;
    }
    return rows;
}

namespace {

std::string format_score(double score) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.6f", score);
    return buffer;
}

std::string tabular_rows(const std::vector<QueryRow>& rows) {
    std::string out = "rank\tpage\tscore\n";
    for (const QueryRow& row : rows) {
        out += std::to_string(row.rank);
        out += '\t';
        out += row.page.str();
        out += '\t';
        out += format_score(row.score);
        out += '\n';
    }
    return out;
}

json structured_rows(const std::vector<QueryRow>& rows) {
    json list = json::array();
    for (const QueryRow& row : rows) {
        json node;
        node["rank"] = row.rank;
        node["page"] = row.page.str();
        node["score"] = row.score;
        list.push_back(std::move(node));
    }
    return list;
}

} // namespace

std::string export_ranks(const RankVector& ranks, ExportFormat format) {
    const std::vector<QueryRow> rows = ranking_of(ranks);
    if (format == ExportFormat::Tabular) {
        return tabular_rows(rows);
    }
    json doc;
    doc["ranking"] = structured_rows(rows);
    doc["iterations_used"] = ranks.iterations_used;
    doc["converged"] = ranks.converged;
    return doc.dump(2) + "\n";
}

std::string export_ranks(const QueryResult& result, ExportFormat format) {
    if (format == ExportFormat::Tabular) {
        return tabular_rows(result.rows);
    }
    json doc;
    doc["results"] = structured_rows(result.rows);
    return doc.dump(2) + "\n";
}

} // namespace linkrank
