#pragma once

#include "nilext/extension.hpp"
#include "nilext/hall.hpp"

namespace nilext {
namespace catalog {

LieAlgebra abelian(std::size_t n);

// dim k+1, [e1, e_i] = e_{i+1} for 2 <= i <= k, natural layout (1,1,2,...,k)
LieAlgebra m0(int k);

// Heisenberg algebra = m0(2)
LieAlgebra heisenberg();

// dim 2m, [e1,e_i] = e_{i+1}, [e_k, e_{2m-k+1}] = (-1)^{k+1} e_{2m}
LieAlgebra m1(int two_m_minus_1);

// the 6-dimensional filiform algebra with weights (1,2,3,4,5,6)
LieAlgebra m2_5();

// free nilpotent L(2,3) on the named basis a1,b1,a2,a3,b3
LieAlgebra l_2_3();

// width-two Carnot algebra of dimension 7, layout (1,1,2,3,3,4,4)
LieAlgebra l_tilde_2_4();

// one-parameter extensions of m2_5 by the weight-7 cocycle line
LieAlgebra family_g7(const Scalar& t);

// width-two families of dimension 8, extensions of l_tilde_2_4
LieAlgebra family_Lt(const Scalar& t);
LieAlgebra family_Ltilde(const Scalar& tau);

// H^2 basis of m2_5 in the order (Omega7, omega7, omega5)
std::vector<ExteriorForm> m25_h2_basis();

// H^2 basis of l_2_3 in the order (a1^a3, a1^b3 + b1^a3, b1^b3)
std::vector<ExteriorForm> l23_h2_basis();

// weight-5 H^2 basis of l_tilde_2_4 carrying the lower-triangular action
std::vector<ExteriorForm> ltilde24_h2_weight5_basis();

// weight-4 generator of H^2(l_tilde_2_4)
ExteriorForm ltilde24_h2_weight4_form();

struct NamedAlgebra {
  std::string name;
  LieAlgebra algebra;
};

// Deterministic list of every catalog algebra exercised by the test suites.
std::vector<NamedAlgebra> all_named();

// Parses CLI catalog names such as m0:4, m1:5, m2_5, free:2:3, ltilde24,
// g7:t=1/2, Lt:t=0, Ltau:tau=1, abelian:3, h3, h3+K, l23.
std::optional<LieAlgebra> parse_name(const std::string& name);

}  // namespace catalog
}  // namespace nilext
