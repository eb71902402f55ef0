#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace gkz {

// Base for all domain errors surfaced by the engine. The CLI maps these to
// exit code 2; anything else is a bug.
struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

struct RankError : DomainError {
    explicit RankError(const std::string& what) : DomainError(what) {}
};

struct SingularError : DomainError {
    explicit SingularError(const std::string& what) : DomainError(what) {}
};

struct NotPrimitiveError : DomainError {
    explicit NotPrimitiveError(const std::string& what) : DomainError(what) {}
};

struct ZeroColumnError : DomainError {
    int column;  // 1-based
    explicit ZeroColumnError(int col)
        : DomainError("weight matrix has zero column " + std::to_string(col)),
          column(col) {}
};

struct NotProjectiveError : DomainError {
    // Nonnegative integer relation among the columns (a nonconstant invariant
    // monomial exponent vector), scaled to integers.
    std::vector<long> witness;
    explicit NotProjectiveError(std::vector<long> w)
        : DomainError("action is not projective: nonconstant invariant monomial exists"),
          witness(std::move(w)) {}
};

struct OnWallError : DomainError {
    explicit OnWallError(const std::string& what) : DomainError(what) {}
};

struct DegeneratePathError : DomainError {
    explicit DegeneratePathError(const std::string& what) : DomainError(what) {}
};

struct DegenerateWallPointError : DomainError {
    explicit DegenerateWallPointError(const std::string& what) : DomainError(what) {}
};

struct InternalMismatchError : DomainError {
    explicit InternalMismatchError(const std::string& what) : DomainError(what) {}
};

struct EmptyChamberError : DomainError {
    explicit EmptyChamberError(const std::string& what) : DomainError(what) {}
};

struct NoBoundaryPathError : DomainError {
    explicit NoBoundaryPathError(const std::string& what) : DomainError(what) {}
};

struct NoAbyssPathError : DomainError {
    explicit NoAbyssPathError(const std::string& what) : DomainError(what) {}
};

struct NotPGL2LinearizableError : DomainError {
    explicit NotPGL2LinearizableError(const std::string& what) : DomainError(what) {}
};

struct SignMismatchError : DomainError {
    explicit SignMismatchError(const std::string& what) : DomainError(what) {}
};

struct SchemaError : DomainError {
    std::string field;
    SchemaError(std::string fld, const std::string& reason)
        : DomainError("input field '" + fld + "': " + reason), field(std::move(fld)) {}
};

struct UnsupportedFormatError : DomainError {
    explicit UnsupportedFormatError(const std::string& what) : DomainError(what) {}
};

}  // namespace gkz
