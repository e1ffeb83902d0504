#pragma once

#include <stdexcept>
#include <string>

namespace dtwist {

/// Root of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Matrix or space shapes that do not fit together.
class ShapeError : public Error {
public:
    using Error::Error;
};

/// A complex whose differential does not square to zero.
class InvalidComplex : public Error {
public:
    InvalidComplex(int degree, const std::string& what) : Error(what), degree_(degree) {}
    int degree() const { return degree_; }

private:
    int degree_;
};

/// A family of matrices that does not commute with the differentials.
class NotChainMap : public Error {
public:
    NotChainMap(int degree, const std::string& what) : Error(what), degree_(degree) {}
    int degree() const { return degree_; }

private:
    int degree_;
};

/// A computed long exact sequence failed its own exactness check.
class InternalConsistencyError : public Error {
public:
    using Error::Error;
};

/// Textual input that does not parse. Line and column are 1-based.
class ParseError : public Error {
public:
    ParseError(int line, int column, const std::string& msg)
        : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + msg),
          line_(line), column_(column) {}
    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

/// Cell data that does not describe a closed oriented connected surface.
class SurfaceError : public Error {
public:
    enum class Kind { EdgeUsage, NonOrientable, Disconnected, UnknownEdge, Other };
    SurfaceError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}
    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

/// A cellular loop that is not closed, not embedded, or otherwise malformed.
class CurveError : public Error {
public:
    using Error::Error;
};

/// Two curves that share an edge or touch without crossing.
class TransversalityError : public Error {
public:
    using Error::Error;
};

/// A curve bounding a disk; Floer operations require essential curves.
class ContractibleCurveError : public Error {
public:
    using Error::Error;
};

/// A cell map that fails to be an involution or to preserve a required curve.
class InvolutionError : public Error {
public:
    using Error::Error;
};

/// Numerical input outside the domain of a model formula.
class DomainError : public Error {
public:
    using Error::Error;
};

}  // namespace dtwist
