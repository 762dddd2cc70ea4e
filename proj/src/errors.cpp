#include "hidecover/errors.hpp"

namespace hidecover {

NotSimple::NotSimple(std::size_t a, std::size_t b)
    : Error("polygon is not simple: edges " + std::to_string(a + 1) + " and " + std::to_string(b + 1) +
            " intersect"),
      edge_a(a),
      edge_b(b) {}

DegenerateVertex::DegenerateVertex(std::size_t i)
    : Error("vertex " + std::to_string(i + 1) + " coincides with its successor"), index(i) {}

ParseError::ParseError(std::size_t l, const std::string& what)
    : Error(l ? "line " + std::to_string(l) + ": " + what : what), line(l) {}

}  // namespace hidecover
