#ifndef CEI_ERRORS_HPP
#define CEI_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "cei/vertex_set.hpp"

namespace cei {

/// Malformed graph text. `offset` is the byte offset of the offending input.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " (at byte " + std::to_string(offset) + ")"),
        offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// A graph that is well-formed text but violates a structural requirement.
class ValidationError : public std::runtime_error {
 public:
  enum class Kind {
    AmbientTooSmall,
    IsolatedVertex,
    Loop,
    DuplicateEdge,
    VertexOutOfRange,
    TooManyVertices,
  };

  ValidationError(Kind kind, const std::string& what, int vertex = 0)
      : std::runtime_error(what), kind_(kind), vertex_(vertex) {}

  Kind kind() const { return kind_; }
  /// 1-based label of the offending vertex, when one applies; otherwise 0.
  int vertex() const { return vertex_; }

 private:
  Kind kind_;
  int vertex_;
};

/// Raised when a linear quotient order is requested for a disconnected graph.
class NoOrderExists : public std::runtime_error {
 public:
  explicit NoOrderExists(std::vector<VertexSet> components);
  const std::vector<VertexSet>& components() const { return components_; }

 private:
  std::vector<VertexSet> components_;
};

}  // namespace cei

#endif  // CEI_ERRORS_HPP
