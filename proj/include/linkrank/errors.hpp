#ifndef LINKRANK_ERRORS_HPP
#define LINKRANK_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace linkrank {

// Reason codes for graph construction and lookup failures.
enum class GraphErrc {
    DuplicatePageId,
    UnknownLinkEndpoint,
    DuplicateLink,
    NegativeVisits,
    UnknownPage,
    NoSuchLink,
    EmptyGraph,
};

const char* to_string(GraphErrc code);

class GraphError : public std::runtime_error {
public:
    GraphError(GraphErrc code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    GraphErrc code() const { return code_; }

private:
    GraphErrc code_;
};

// Malformed corpus document (not parseable at all). Position is 1-based.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t line, std::size_t column)
        : std::runtime_error(what), line_(line), column_(column) {}

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

// Well-formed document that violates the corpus schema or the graph
// invariants. Carries the offending record in the message.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what)
        : std::runtime_error(what) {}
};

} // namespace linkrank

#endif
