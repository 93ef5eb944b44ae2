#pragma once

#include "nilext/exterior.hpp"

namespace nilext {

struct CohomologyBasis {
  int degree = 0;
  std::vector<ExteriorForm> representatives;  // deterministic coset representatives
  Subspace cocycle_space;                     // ker d_p inside Lambda^p coordinates
  Subspace boundary_space;                    // im d_{p-1}

  std::size_t dim() const { return representatives.size(); }
};

// Full H^p via exact kernel/image computation. Representatives are the RREF
// of a complement of the boundaries inside the cocycles, in lexicographic
// monomial order.
CohomologyBasis cohomology(const LieAlgebra& g, int p);

// Complex restricted to weight-lambda monomials before the kernel/image
// computation; requires a weight layout.
CohomologyBasis homogeneous_cohomology(const LieAlgebra& g, int p, int lambda);

// Coordinates of the class [w] in the given cocycle basis, i.e. x with
// w = sum x_i basis_i + (coboundary). nullopt when [w] is outside the span.
std::optional<Vec> class_coordinates(const LieAlgebra& g, const std::vector<ExteriorForm>& basis,
                                     const ExteriorForm& w);

// Subspace of Lambda^p (as coordinate vectors) of forms vanishing whenever
// the arguments' lower-central-series depths sum beyond k.
Subspace filtered_forms(const LieAlgebra& g, int p, int k);

// Smallest k with w in F^k Lambda^p, with respect to the LCS filtration.
int form_filtration(const LieAlgebra& g, const ExteriorForm& w);

// L_0 = 0, L_i = {rho : d rho in Lambda^2(L_{i-1})}; terminates at the full
// dual space. Returned list starts at L_0.
std::vector<Subspace> dual_chain_L(const LieAlgebra& g);

// True iff no nontrivial combination of the classes lies in F^{s-1} H^2,
// membership taken on representatives modulo coboundaries.
bool set_has_filtration_s(const LieAlgebra& g, const std::vector<ExteriorForm>& cocycles, int s);

}  // namespace nilext
