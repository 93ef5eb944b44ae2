#pragma once

#include "nilext/automorphism.hpp"

namespace nilext {

enum class Decision { yes, no, undecided };

struct OrbitWitness {
  Matrix automorphism;     // phi with phi^*(span2) = span1 at class level
  Matrix change_of_basis;  // A with (c_1..c_m) A = (phi^* c'_1..phi^* c'_m) mod coboundaries
};

struct OrbitResult {
  Decision decision = Decision::undecided;
  std::optional<OrbitWitness> witness;
  std::string separating_invariant;  // set when decision == no
};

// Orbit test for spans of cocycle classes under the full automorphism group,
// decided by registered invariants (catalog labels, Darboux rank on abelian
// bases, tangent dimension) or by a deterministic witness search.
OrbitResult span_orbit_equivalent(const LieAlgebra& g, const std::vector<ExteriorForm>& span1,
                                  const std::vector<ExteriorForm>& span2, std::size_t budget);

// Same test under the graded automorphism subgroup of a Carnot algebra,
// inside the homogeneous cohomology of the spans' weight.
OrbitResult orbit_equivalent_graded(const LieAlgebra& g, const std::vector<ExteriorForm>& span1,
                                    const std::vector<ExteriorForm>& span2, std::size_t budget);

// Darboux-style canonical basis for a skew 2-form: pullback by the returned
// matrix is e1^e2 + e3^e4 + ... (rank/2 blocks).
Matrix skew_normal_basis(const ExteriorForm& w);

}  // namespace nilext
