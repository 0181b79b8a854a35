#pragma once

#include <cstddef>

#include "tpoly/laurent.hpp"
#include "tpoly/polygon.hpp"

namespace tpoly {

// Result of the normalized maximally-mutable construction.
struct MmlpResult {
    LaurentPoly poly;
    // Dimension of the solution space before normalization picked the unique
    // solution; 0 when the constraints pin every interior coefficient.
    std::size_t solution_dim = 0;
};

// Builds the normalized maximally-mutable Laurent polynomial supported on P:
// vertex coefficients 1, each edge slice (1+s)^len in the edge parameter,
// origin coefficient 0, interior coefficients determined by requiring that
// every slice of every mutated image at negative height factors as required
// for the mutation to proceed, propagated through all admissible mutations
// to the given depth.
//
// Errors: not_t_polygon when P has residual cones; non_unique_solution with
// detail = remaining dimension when the constraints leave freedom;
// inconsistent_constraints when no interior assignment satisfies them.
MmlpResult mmlp(const FanoPolygon& P, std::size_t depth = 3);

} // namespace tpoly
