#ifndef DOMW_ERRORS_HPP
#define DOMW_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace domw {

/// Rejected input: malformed instances, violated preconditions, bad files.
class InvalidInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnknownVertex : public InvalidInput {
 public:
  explicit UnknownVertex(std::size_t v)
      : InvalidInput("unknown vertex " + std::to_string(v)) {}
};

class EmptySubtree : public InvalidInput {
 public:
  explicit EmptySubtree(std::size_t index)
      : InvalidInput("subtree " + std::to_string(index) + " is empty") {}
};

class DisconnectedSubtree : public InvalidInput {
 public:
  explicit DisconnectedSubtree(std::size_t index)
      : InvalidInput("subtree " + std::to_string(index) +
                     " is not connected in the host tree") {}
};

class EmptyEdgeSet : public InvalidInput {
 public:
  EmptyEdgeSet() : InvalidInput("weighted edge set F is empty") {}
};

class NotAClique : public InvalidInput {
 public:
  NotAClique(std::size_t u, std::size_t v)
      : InvalidInput("clique side: " + std::to_string(u) + " and " +
                     std::to_string(v) + " are not adjacent"),
        u(u),
        v(v) {}
  std::size_t u, v;
};

class NotIndependent : public InvalidInput {
 public:
  NotIndependent(std::size_t u, std::size_t v)
      : InvalidInput("independent side: " + std::to_string(u) + " and " +
                     std::to_string(v) + " are adjacent"),
        u(u),
        v(v) {}
  std::size_t u, v;
};

class NotAPartition : public InvalidInput {
 public:
  NotAPartition() : InvalidInput("A and B do not partition the vertex set") {}
};

class IsolatedBVertex : public InvalidInput {
 public:
  explicit IsolatedBVertex(std::size_t b)
      : InvalidInput("independent-side vertex " + std::to_string(b) +
                     " has no neighbor"),
        vertex(b) {}
  std::size_t vertex;
};

class BadPermutation : public InvalidInput {
 public:
  BadPermutation() : InvalidInput("order is not a permutation of the vertices") {}
};

class ParameterOutOfRange : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

class SyntaxError : public InvalidInput {
 public:
  SyntaxError(std::size_t line, const std::string& reason)
      : InvalidInput("line " + std::to_string(line) + ": " + reason),
        line(line) {}
  std::size_t line;
};

class SemanticError : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

/// The exhaustive oracles refuse instances above their vertex cap.
class InstanceTooLarge : public std::runtime_error {
 public:
  InstanceTooLarge(std::size_t n, std::size_t cap)
      : std::runtime_error("instance has " + std::to_string(n) +
                           " vertices, oracle cap is " + std::to_string(cap)) {}
};

/// A constructive step that the underlying theorem guarantees has failed.
/// Always an implementation bug; never caught and ignored.
class TheoremViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class LPInternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace domw

#endif  // DOMW_ERRORS_HPP
