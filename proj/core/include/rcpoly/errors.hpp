#pragma once

#include <stdexcept>
#include <string>

namespace rcpoly {

// Base class for every failure this library reports on purpose.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error(what) {}
};

struct NotCoprimeError : Error {
    explicit NotCoprimeError(const std::string& what) : Error(what) {}
};

struct ZeroBaseError : Error {
    explicit ZeroBaseError(const std::string& what) : Error(what) {}
};

struct PoleError : Error {
    explicit PoleError(const std::string& what) : Error(what) {}
};

struct NotPolynomialError : Error {
    explicit NotPolynomialError(const std::string& what) : Error(what) {}
};

struct ZeroVectorError : Error {
    explicit ZeroVectorError(const std::string& what) : Error(what) {}
};

struct ZeroSlopeError : Error {
    explicit ZeroSlopeError(const std::string& what) : Error(what) {}
};

struct ZeroResidueError : Error {
    explicit ZeroResidueError(const std::string& what) : Error(what) {}
};

struct BothIntegersError : Error {
    explicit BothIntegersError(const std::string& what) : Error(what) {}
};

struct OutOfRangeError : Error {
    explicit OutOfRangeError(const std::string& what) : Error(what) {}
};

struct DegenerateConeError : Error {
    explicit DegenerateConeError(const std::string& what) : Error(what) {}
};

struct InvalidTriangleError : Error {
    explicit InvalidTriangleError(const std::string& what) : Error(what) {}
};

struct DegenerateTriangleError : Error {
    explicit DegenerateTriangleError(const std::string& what) : Error(what) {}
};

struct InvalidPolygonError : Error {
    explicit InvalidPolygonError(const std::string& what) : Error(what) {}
};

}  // namespace rcpoly
