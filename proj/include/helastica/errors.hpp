#pragma once

#include <stdexcept>
#include <string>

namespace helastica {

// Parameters outside the admissible region kappa0^2 >= lambda + 2.
struct NoElasticaError : std::domain_error {
    explicit NoElasticaError(const std::string& what) : std::domain_error(what) {}
};

// The excluded locus kappa0^2 = lambda + 4, where theta(s) has real zeros.
struct DegenerateLocusError : std::domain_error {
    explicit DegenerateLocusError(const std::string& what) : std::domain_error(what) {}
};

// A closing-condition solve found no sign change in the scanned bracket.
struct NoRootError : std::runtime_error {
    explicit NoRootError(const std::string& what) : std::runtime_error(what) {}
};

// Discrete data too coarse for the requested quantity (turning number,
// flow gradient).
struct UnderResolvedError : std::runtime_error {
    explicit UnderResolvedError(const std::string& what) : std::runtime_error(what) {}
};

// Time stepper could not make progress (dt underflow) or the curve left
// the upper half-plane.
struct FlowBreakdownError : std::runtime_error {
    explicit FlowBreakdownError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace helastica
