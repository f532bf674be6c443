#pragma once

#include <stdexcept>

namespace mgraph {

// Wrong dimensions, odd size for a Pfaffian, non-skew input, and similar.
struct ShapeError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct SingularMatrixError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Forbidden family parameters, or a value hitting a genuine pole.
struct ParameterError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Shape combinations without an exact evaluation route.
struct UnsupportedError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct ParseError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

}  // namespace mgraph
