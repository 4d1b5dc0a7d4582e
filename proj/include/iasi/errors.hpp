#pragma once

#include <stdexcept>
#include <string>

namespace iasi {

// Base class for all library errors. The library throws and never exits;
// the CLI maps concrete types onto its exit-code table.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed values: empty sets, zero differences, out-of-range elements.
class InvalidArgumentError : public Error {
public:
    using Error::Error;
};

// Lookup of a vertex or edge that is not in the graph.
class NotFoundError : public Error {
public:
    using Error::Error;
};

// Operation preconditions: wrong degree, adjacent neighbours, labels too
// short for arithmetic classification, and the like.
class PreconditionError : public Error {
public:
    using Error::Error;
};

// A graph vertex has no entry in the labeling.
class MissingLabelError : public Error {
public:
    using Error::Error;
};

// The requested labeling provably does not exist for the given graph.
class ConstructionImpossibleError : public Error {
public:
    using Error::Error;
};

// Text input (edge lists, set literals, labeling JSON) that does not parse.
// Positions are 1-based; column 0 means "whole line".
class ParseError : public Error {
public:
    ParseError(const std::string& what, int line, int column)
        : Error(what), line_(line), column_(column) {}

    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

}  // namespace iasi
