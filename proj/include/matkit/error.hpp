#pragma once

#include <stdexcept>
#include <string>

namespace matkit {

/// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// An element index outside the ground set of the matroid at hand.
struct InvalidElementError : Error {
    explicit InvalidElementError(const std::string& what) : Error(what) {}
};

/// A basis family that fails the matroid axioms.
struct AxiomError : Error {
    explicit AxiomError(const std::string& what) : Error(what) {}
};

/// Syntax error in the matroid file format.
struct ParseError : Error {
    ParseError(const std::string& what, int line, int column)
        : Error(what + " (line " + std::to_string(line) + ", column " +
                std::to_string(column) + ")"),
          line(line),
          column(column) {}
    int line;
    int column;
};

/// An operation was called outside its stated precondition.
struct PreconditionError : Error {
    explicit PreconditionError(const std::string& what) : Error(what) {}
};

/// A theorem the library relies on failed on a concrete input.  Seeing this
/// means either a bug or a mathematically significant counterexample.
struct InternalInconsistencyError : Error {
    explicit InternalInconsistencyError(const std::string& what) : Error(what) {}
};

}  // namespace matkit
