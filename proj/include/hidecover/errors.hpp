#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hidecover {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Two edges (0-based start indices) that intersect improperly.
class NotSimple : public Error {
public:
    NotSimple(std::size_t edge_a, std::size_t edge_b);
    std::size_t edge_a, edge_b;
};

class DegenerateVertex : public Error {
public:
    explicit DegenerateVertex(std::size_t index);
    std::size_t index;
};

// Zero area, or fewer than three vertices left after normalization.
class DegeneratePolygon : public Error {
public:
    using Error::Error;
};

class OutsidePolygon : public Error {
public:
    using Error::Error;
};

// An input does not have the structure an operation requires.
class PreconditionError : public Error {
public:
    using Error::Error;
};

// line is 1-based; 0 when the input has no meaningful line (JSON documents).
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what);
    std::size_t line;
};

}  // namespace hidecover
