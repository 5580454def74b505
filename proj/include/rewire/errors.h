#pragma once

#include <stdexcept>
#include <string>

namespace rewire {

/// Malformed textual input (Pauli strings, gate programs).
struct ParseError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Operands disagree on qubit count or matrix shape.
struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A code document or code object failed schema or structural checks.
struct CodeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Rewiring synthesis could not produce a valid pair.
struct SynthesisError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An internal consistency check failed. Always indicates a bug, never bad input.
struct InvariantError : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace rewire
