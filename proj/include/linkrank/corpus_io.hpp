#ifndef LINKRANK_CORPUS_IO_HPP
#define LINKRANK_CORPUS_IO_HPP

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "linkrank/hybrid_query.hpp"
#include "linkrank/link_rank.hpp"
#include "linkrank/webgraph.hpp"

namespace linkrank {

// Corpus documents are JSON with exactly two top-level keys:
//
//   {
//     "pages": [{"id": "...", "title": "...", "metadata": ["..."], "hits": 0}],
//     "links": [{"source": "...", "target": "...", "visits": 0}]
//   }
//
// Loading is strict: unknown or missing fields, wrong types and any graph
// invariant violation are rejected with ValidationError; documents that are
// not JSON at all raise ParseError with the offending position.

WebGraph load_corpus(std::istream& in);
WebGraph load_corpus_text(std::string_view text);

// Writes a document that load_corpus reads back into an identical graph.
// Output is deterministic: pages and links in sorted order, 2-space indent.
void save_corpus(const WebGraph& g, std::ostream& out);
std::string save_corpus_text(const WebGraph& g);

// The bundled ten-site demo corpus. Every call builds the same graph; the
// copy shipped under data/ is this graph serialized with save_corpus.
WebGraph paper_fixture();

enum class ExportFormat { Tabular, Structured };

// Descending ranking view of a score vector; ties broken by ascending id,
// ranks numbered from 1.
std::vector<QueryRow> ranking_of(const RankVector& ranks);

// Tabular: tab-separated "rank\tpage\tscore" header plus one row per page,
// scores with six fractional digits. Structured: a JSON document carrying
// the same rows (plus convergence info for rank vectors).
std::string export_ranks(const RankVector& ranks, ExportFormat format);
std::string export_ranks(const QueryResult& result, ExportFormat format);

} // namespace linkrank

#endif
