#pragma once

#include <stdexcept>
#include <string>

namespace hamc {

/// Loop edge or endpoint outside the graph's vertex range.
struct InvalidEdge : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Vertex index outside the graph's vertex range.
struct InvalidVertex : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Malformed input text (edge lists, spec JSON, plan JSON).
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Raised when an operation needs a spanning cycle but the graph has
/// fewer than three vertices.
struct TooSmallForCycle : std::domain_error {
    using std::domain_error::domain_error;
};

/// A lambda/delta combination that cannot occur (lambda = 0 on a
/// non-Hamiltonian graph).
struct InconsistentValue : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace hamc
