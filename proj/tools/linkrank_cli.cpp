// linkrank command line front end: loads a corpus (or the built-in demo
// corpus), runs one of the rank algorithms or a metadata query and prints
// the ranking. Results go to stdout, diagnostics to stderr.

#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "linkrank/corpus_io.hpp"
#include "linkrank/hybrid_query.hpp"
#include "linkrank/link_rank.hpp"
#include "linkrank/weighted_rank.hpp"

namespace {

// stable exit code contract, asserted by the test suite
enum ExitCode : int {
    kOk = 0,
    kUsage = 1,
    kIo = 2,
    kParse = 3,
    kValidation = 4,
    kNonConvergence = 5,
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// "paper-fixture" (or "fixture") selects the built-in demo corpus; anything
// else is a file path.
linkrank::WebGraph open_corpus(const std::string& spec) {
    if (spec == "paper-fixture" || spec == "fixture") {
        return linkrank::paper_fixture();
    }
    std::ifstream in(spec, std::ios::binary);
    if (!in) {
        throw IoError("cannot open corpus file '" + spec + "'");
    }
    return linkrank::load_corpus(in);
}

linkrank::ExportFormat parse_format(const std::string& name) {
    return name == "structured" ? linkrank::ExportFormat::Structured
                                : linkrank::ExportFormat::Tabular;
}

std::string format_score(double score) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.6f", score);
    return buffer;
}

int report_convergence(const linkrank::RankVector& ranks) {
    if (ranks.converged) return kOk;
    std::cerr << "warning: not converged after " << ranks.iterations_used
              << " iterations\n";
    return kNonConvergence;
}

struct RankOptions {
    std::string corpus = "paper-fixture";
    std::string algorithm = "pagerank";
    double d = 0.85;
    double c_norm = 1.0;
    double tolerance = 1e-10;
    std::size_t max_iterations = 1000;
    std::string format = "tabular";
};

int cmd_rank(const RankOptions& opt) {
    const linkrank::WebGraph graph = open_corpus(opt.corpus);
    const linkrank::IterationParams iter{opt.tolerance, opt.max_iterations, 1.0};
    const linkrank::DampingParams damping{opt.d, opt.c_norm};

    linkrank::RankVector ranks;
    if (opt.algorithm == "simplified") {
        ranks = linkrank::simplified_pagerank(graph, opt.c_norm, iter);
    } else if (opt.algorithm == "pagerank") {
        ranks = linkrank::damped_pagerank(graph, damping, iter);
    } else if (opt.algorithm == "wpr") {
        ranks = linkrank::weighted_pagerank(graph, damping, iter);
    } else if (opt.algorithm == "vol") {
        ranks = linkrank::vol_pagerank(graph, damping, iter);
    } else {
        ranks = linkrank::wpr_vol_pagerank(graph, damping, iter);
    }

    std::cout << linkrank::export_ranks(ranks, parse_format(opt.format));
    return report_convergence(ranks);
}

struct QueryOptions {
    std::string corpus = "paper-fixture";
    std::string text;
    linkrank::HybridWeights weights;
    std::string format = "tabular";
};

int cmd_query(const QueryOptions& opt) {
    if (opt.text.empty()) {
        std::cerr << "error: --text must be non-empty\n";
        return kUsage;
    }
    const linkrank::WebGraph graph = open_corpus(opt.corpus);
    const linkrank::QueryResult result = linkrank::rank_query(graph, opt.text, opt.weights);
    std::cout << linkrank::export_ranks(result, parse_format(opt.format));
    return kOk;
}

struct CompareOptions {
    std::string corpus = "paper-fixture";
    double d = 0.85;
    double tolerance = 1e-10;
    std::size_t max_iterations = 1000;
    std::string format = "tabular";
};

int cmd_compare(const CompareOptions& opt) {
    const linkrank::WebGraph graph = open_corpus(opt.corpus);
    const linkrank::IterationParams iter{opt.tolerance, opt.max_iterations, 1.0};
    const linkrank::DampingParams damping{opt.d, 1.0};

    const char* names[] = {"pagerank", "wpr", "vol", "wprvol"};
    const linkrank::RankVector results[] = {
        linkrank::damped_pagerank(graph, damping, iter),
        linkrank::weighted_pagerank(graph, damping, iter),
        linkrank::vol_pagerank(graph, damping, iter),
        linkrank::wpr_vol_pagerank(graph, damping, iter),
    };

    // rank position of every page under each algorithm
    std::map<linkrank::PageId, std::size_t> positions[4];
    for (int a = 0; a < 4; ++a) {
        for (const linkrank::QueryRow& row : linkrank::ranking_of(results[a])) {
            positions[a][row.page] = row.rank;
        }
    }

    if (parse_format(opt.format) == linkrank::ExportFormat::Tabular) {
        std::string out = "page";
        for (const char* name : names) {
            out += '\t';
            out += name;
            out += '\t';
            out += name;
            out += "_rank";
        }
        out += '\n';
        for (const linkrank::PageRecord& page : graph.pages()) {
            out += page.id.str();
            for (int a = 0; a < 4; ++a) {
                out += '\t';
                out += format_score(results[a].scores.at(page.id));
                out += '\t';
                out += std::to_string(positions[a].at(page.id));
            }
            out += '\n';
        }
        std::cout << out;
    } else {
        nlohmann::ordered_json doc;
        doc["pages"] = nlohmann::ordered_json::array();
        for (const linkrank::PageRecord& page : graph.pages()) {
            nlohmann::ordered_json node;
            node["page"] = page.id.str();
            for (int a = 0; a < 4; ++a) {
                node[names[a]] = {{"score", results[a].scores.at(page.id)},
                                  {"rank", positions[a].at(page.id)}};
            }
            doc["pages"].push_back(std::move(node));
        }
        std::cout << doc.dump(2) << "\n";
    }

    int status = kOk;
    for (const linkrank::RankVector& ranks : results) {
        if (report_convergence(ranks) != kOk) status = kNonConvergence;
    }
    return status;
}

int cmd_validate(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open corpus file '" + path + "'");
    }
    linkrank::load_corpus(in);
    std::cout << "OK\n";
    return kOk;
}

int cmd_fixture(const std::string& out_path) {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        throw IoError("cannot open '" + out_path + "' for writing");
    }
    linkrank::save_corpus(linkrank::paper_fixture(), out);
    out.flush();
    if (!out) {
        throw IoError("failed writing '" + out_path + "'");
    }
    return kOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"linkrank: link-analysis page ranking over corpus files"};
    app.require_subcommand(1);

    const auto format_check = CLI::IsMember({"tabular", "structured"});

    RankOptions rank_opt;
    CLI::App* rank = app.add_subcommand("rank", "run a rank algorithm over a corpus");
    rank->add_option("--corpus", rank_opt.corpus,
                     "corpus file, or 'paper-fixture' for the built-in demo corpus");
    rank->add_option("--algorithm", rank_opt.algorithm, "rank algorithm")
        ->check(CLI::IsMember({"simplified", "pagerank", "wpr", "vol", "wprvol"}));
    rank->add_option("--d", rank_opt.d, "dampening factor")->check(CLI::Range(0.0, 1.0));
    rank->add_option("--c-norm", rank_opt.c_norm, "normalization factor (simplified only)")
        ->check(CLI::PositiveNumber);
    rank->add_option("--tolerance", rank_opt.tolerance, "convergence tolerance")
        ->check(CLI::PositiveNumber);
    rank->add_option("--max-iterations", rank_opt.max_iterations, "iteration cap")
        ->check(CLI::PositiveNumber);
    rank->add_option("--format", rank_opt.format, "output format")->check(format_check);

    QueryOptions query_opt;
    CLI::App* query = app.add_subcommand("query", "rank pages for a metadata query");
    query->add_option("--corpus", query_opt.corpus,
                      "corpus file, or 'paper-fixture' for the built-in demo corpus");
    query->add_option("--text", query_opt.text, "query text")->required();
    query->add_option("--s", query_opt.weights.s, "semantics weight")
        ->check(CLI::NonNegativeNumber);
    query->add_option("--vl", query_opt.weights.vl, "link-degree weight")
        ->check(CLI::NonNegativeNumber);
    query->add_option("--ga", query_opt.weights.ga, "analytics weight")
        ->check(CLI::NonNegativeNumber);
    query->add_option("--hits-divisor", query_opt.weights.hits_divisor,
                      "analytics normalization divisor")
        ->check(CLI::PositiveNumber);
    query->add_option("--d", query_opt.weights.d, "dampening factor")
        ->check(CLI::Range(0.0, 1.0));
    query->add_option("--format", query_opt.format, "output format")->check(format_check);

    CompareOptions compare_opt;
    CLI::App* compare =
        app.add_subcommand("compare", "side-by-side scores of all rank algorithms");
    compare->add_option("--corpus", compare_opt.corpus,
                        "corpus file, or 'paper-fixture' for the built-in demo corpus");
    compare->add_option("--d", compare_opt.d, "dampening factor")
        ->check(CLI::Range(0.0, 1.0));
    compare->add_option("--tolerance", compare_opt.tolerance, "convergence tolerance")
        ->check(CLI::PositiveNumber);
    compare->add_option("--max-iterations", compare_opt.max_iterations, "iteration cap")
        ->check(CLI::PositiveNumber);
    compare->add_option("--format", compare_opt.format, "output format")->check(format_check);

    std::string validate_path;
    CLI::App* validate = app.add_subcommand("validate", "check that a corpus file loads");
    validate->add_option("corpus", validate_path, "corpus file")->required();

    std::string fixture_out;
    CLI::App* fixture =
        app.add_subcommand("fixture", "write the built-in demo corpus to a file");
    fixture->add_option("--out", fixture_out, "output path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e); // prints help or the error itself
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (rank->parsed()) return cmd_rank(rank_opt);
        if (query->parsed()) return cmd_query(query_opt);
        if (compare->parsed()) return cmd_compare(compare_opt);
        if (validate->parsed()) return cmd_validate(validate_path);
        if (fixture->parsed()) return cmd_fixture(fixture_out);
        std::cerr << app.help();
        return kUsage;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kIo;
    } catch (const linkrank::ParseError& e) {
        std::cerr << "parse error at line " << e.line() << ", column " << e.column()
                  << ": " << e.what() << "\n";
        return kParse;
    } catch (const linkrank::ValidationError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return kValidation;
    } catch (const linkrank::GraphError& e) {
        std::cerr << "error [" << linkrank::to_string(e.code()) << "]: " << e.what()
                  << "\n";
        return kValidation;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kIo;
    }
}
