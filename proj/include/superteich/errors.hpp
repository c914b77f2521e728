#pragma once

#include <stdexcept>
#include <string>

namespace superteich {

// Malformed input text (fatgraph documents, Grassmann expressions, scalars).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Half-edge data that does not describe a connected trivalent fatgraph of a
// punctured surface with negative Euler characteristic.
class GraphError : public ParseError {
 public:
  using ParseError::ParseError;
};

// A structurally valid object that violates an operation's precondition:
// non-generic flip, loop edge, graph mismatch, unknown vertex.
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Domain failures inside the Grassmann algebra: zero body, wrong parity,
// irrational square root or logarithm in exact mode.
class AlgebraError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace superteich
