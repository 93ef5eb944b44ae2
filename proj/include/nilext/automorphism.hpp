#pragma once

#include "nilext/cohomology.hpp"

namespace nilext {

// Automorphisms are stored as matrices whose columns are the images of the
// basis vectors.
bool is_automorphism(const LieAlgebra& g, const Matrix& phi);

struct GradedAutomorphism {
  Matrix matrix;                 // full map, block-diagonal w.r.t. the layout
  Matrix degree_one_block;       // the defining block on g_1
};

// Extends an invertible map on the degree-1 block of a Carnot algebra to a
// graded automorphism; nullopt when the induced map is inconsistent with
// the relations. Throws on singular input or a non-Carnot layout.
std::optional<GradedAutomorphism> extend_degree_one_map(const LieAlgebra& g, const Matrix& a);

// (phi^* w)(x_1..x_p) = w(phi x_1, .., phi x_p)
ExteriorForm pullback_form(const Matrix& phi, const ExteriorForm& w);

// Class-level pullback: coordinates of [phi^* w] in the given cocycle basis.
// The basis must be closed under the action (true for H^2 bases).
Vec pullback_on_h2(const LieAlgebra& g, const Matrix& phi, const std::vector<ExteriorForm>& basis,
                   const ExteriorForm& w);

// Basis of the derivation space, optionally restricted to weight-preserving
// maps (block-diagonal w.r.t. the layout).
std::vector<Matrix> derivations(const LieAlgebra& g, bool weight_zero_only = false);

// exp of a nilpotent matrix, exact; nullopt if the matrix is not nilpotent.
std::optional<Matrix> exp_nilpotent(const Matrix& d);

enum class RigidityOutcome { open_orbit_certified, moduli_direction_found, inconclusive };

struct TangentReport {
  std::size_t tangent_dim;       // rank of the derivation action at the point
  std::size_t grassmannian_dim;  // m (h - m)
  RigidityOutcome outcome;
};

// Infinitesimal orbit dimension of the Aut x GL_m action at the point
// span(classes) of Gr(m, H^2). graded = true restricts to weight-zero
// derivations acting on the homogeneous cohomology of the classes' weight.
TangentReport orbit_tangent_dimension(const LieAlgebra& g, const std::vector<ExteriorForm>& classes,
                                      bool graded = false);

// Deterministic stream of verified automorphisms used by witness searches:
// graded maps from a sample grid when the algebra is Carnot, exponentials
// of nilpotent derivations, and their pairwise compositions.
std::vector<Matrix> automorphism_samples(const LieAlgebra& g, std::size_t budget);

}  // namespace nilext
