#pragma once

#include <map>
#include <vector>

#include "nilext/lie_algebra.hpp"

namespace nilext {

// Sparse exterior p-form on the dual of K^n: strictly increasing index
// tuples mapped to nonzero scalars. Degree 0 forms are constants keyed by
// the empty tuple.
struct ExteriorForm {
  int degree = 0;
  std::size_t ambient_dim = 0;
  std::map<std::vector<std::size_t>, Scalar> terms;

  bool is_zero() const { return terms.empty(); }
  void add_term(std::vector<std::size_t> idx, const Scalar& c);  // sorts, tracks sign, drops zeros

  friend bool operator==(const ExteriorForm& a, const ExteriorForm& b) = default;
};

ExteriorForm zero_form(int degree, std::size_t n);
ExteriorForm one_form(std::size_t n, std::size_t i);                       // e^i
ExteriorForm two_form(std::size_t n, std::size_t i, std::size_t j);        // e^i ^ e^j

ExteriorForm add(const ExteriorForm& a, const ExteriorForm& b);
ExteriorForm scale(const Scalar& c, const ExteriorForm& a);
ExteriorForm wedge(const ExteriorForm& a, const ExteriorForm& b);

// Full evaluation omega(x_1, ..., x_p) by Laplace-style expansion of the
// determinant of covector values.
Scalar eval(const ExteriorForm& w, const std::vector<Vec>& args);

// Lexicographic list of all strictly increasing p-tuples in [0, n).
const std::vector<std::vector<std::size_t>>& p_tuples(std::size_t n, int p);
std::size_t tuple_index(std::size_t n, int p, const std::vector<std::size_t>& t);

Vec form_to_coords(const ExteriorForm& w);
ExteriorForm form_from_coords(int degree, std::size_t n, const Vec& coords);

// Chevalley-Eilenberg differential. On 1-forms d e^k = sum_{i<j} c_{ij}^k
// e^i ^ e^j, the sign fixed so that d e^l reads off the defining cocycle of
// a central extension exactly; extended to higher degree as a derivation.
ExteriorForm differential(const LieAlgebra& g, const ExteriorForm& w);

// Matrix of d from degree p to degree p+1 in the p_tuples bases.
Matrix differential_matrix(const LieAlgebra& g, int p);

// Sum of layout weights of the factors when all monomials agree.
std::optional<int> weight_of_form(const LieAlgebra& g, const ExteriorForm& w);

std::string form_str(const ExteriorForm& w, const std::vector<std::string>& names);

}  // namespace nilext
