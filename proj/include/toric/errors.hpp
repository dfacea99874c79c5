#pragma once

#include <stdexcept>
#include <string>

namespace toric {

/// Base class for every error this library raises on bad input or
/// violated preconditions. Internal logic errors use assert instead.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct ZeroVector : Error {
    ZeroVector() : Error("zero vector has no primitive part") {}
};

struct RankDeficient : Error {
    explicit RankDeficient(const std::string& what = "matrix rows are linearly dependent")
        : Error(what) {}
};

struct NotUnimodular : Error {
    explicit NotUnimodular(const std::string& det_text)
        : Error("matrix is not unimodular (det = " + det_text + ")"), det(det_text) {}
    std::string det;
};

struct DimensionMismatch : Error {
    explicit DimensionMismatch(const std::string& what = "dimension mismatch") : Error(what) {}
};

struct NotFullDimensional : Error {
    NotFullDimensional() : Error("point set does not span the ambient space") {}
};

struct NotAVertex : Error {
    NotAVertex() : Error("point is not a vertex of the polytope") {}
};

struct NonRationalDirection : Error {
    NonRationalDirection() : Error("edge direction admits no primitive integral representative") {}
};

struct UnknownLabel : Error {
    UnknownLabel() : Error("unknown chart label") {}
};

struct DomainViolation : Error {
    DomainViolation() : Error("point lies outside the transition domain") {}
};

struct ZeroCoordinate : Error {
    ZeroCoordinate() : Error("map requires all coordinates nonzero") {}
};

struct NotPrimitive : Error {
    explicit NotPrimitive(int which)
        : Error("spanning vector " + std::to_string(which + 1) + " is not primitive"),
          index(which) {}
    int index;
};

struct Dependent : Error {
    Dependent() : Error("spanning vectors are linearly dependent") {}
};

struct NonPositiveOffset : Error {
    explicit NonPositiveOffset(int which)
        : Error("offset entry " + std::to_string(which + 1) + " must be positive"),
          index(which) {}
    int index;
};

struct NotAVertexImage : Error {
    NotAVertexImage() : Error("projected vertex is not a vertex of the projected polytope") {}
};

struct NotSmooth : Error {
    NotSmooth() : Error("subtorus closure is singular; rerun in unchecked mode to explore") {}
};

struct SyntaxError : Error {
    SyntaxError(int line_, int column_, const std::string& what)
        : Error("syntax error at line " + std::to_string(line_) + ", column " +
                std::to_string(column_) + ": " + what),
          line(line_), column(column_) {}
    int line;
    int column;
};

struct SemanticError : Error {
    explicit SemanticError(const std::string& what) : Error(what) {}
};

struct DimensionUnsupported : Error {
    explicit DimensionUnsupported(const std::string& what) : Error(what) {}
};

struct IOError : Error {
    explicit IOError(const std::string& what) : Error(what) {}
};

}  // namespace toric
