#pragma once

#include <stdexcept>
#include <string>

namespace honeysim {

// Malformed input file (bad JSON, missing keys, wrong types).
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Structurally well-formed input that violates a model invariant.
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Agent/engine contract violation (invalid action, stepping a finished
// episode). Aborts the episode.
struct EngineError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace honeysim
