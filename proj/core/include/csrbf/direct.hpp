#pragma once

#include "csrbf/assembly.hpp"
#include "csrbf/types.hpp"

namespace csrbf {

/// Densifies the saddle system and solves it with a pivoted factorization.
/// Verification oracle: refuses systems with more than 5000 unknowns.
/// A rank-deficient but consistent system yields one particular solution;
/// an inconsistent one raises singular_system_error.
SolutionVector direct_solve(const SaddleSystem& system);

/// Dense view of the block operator (test/oracle helper).
Matrix densify(const SaddleSystem& system);

}  // namespace csrbf
