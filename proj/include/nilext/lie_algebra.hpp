#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nilext/subspace.hpp"

namespace nilext {

// Finite-dimensional Lie algebra given by structure constants on a fixed
// basis. Only pairs i < j are stored; [e_i, e_i] = 0 and antisymmetry are
// built in. An optional weight layout marks a positive grading: every stored
// coefficient c_{ij}^k must satisfy w(k) = w(i) + w(j).
struct LieAlgebra {
  std::size_t dim = 0;
  std::vector<std::string> basis_names;
  std::map<std::pair<std::size_t, std::size_t>, Vec> brackets;  // (i<j) -> coefficient vector
  std::optional<std::vector<int>> weight_layout;

  Vec bracket_basis(std::size_t i, std::size_t j) const;
  void set_bracket(std::size_t i, std::size_t j, const Vec& v);
  void set_bracket_single(std::size_t i, std::size_t j, std::size_t k, const Scalar& c);

  bool structure_equal(const LieAlgebra& other) const;
};

LieAlgebra make_algebra(std::size_t dim, const std::vector<std::string>& names = {});

// Bilinear bracket of arbitrary vectors.
Vec bracket(const LieAlgebra& g, const Vec& x, const Vec& y);

// Adjoint matrix of x: y -> [x, y].
Matrix adjoint(const LieAlgebra& g, const Vec& x);

struct Triple {
  std::size_t i, j, k;
};

// Empty result means the Jacobi identity holds on all basis triples.
std::vector<Triple> check_jacobi(const LieAlgebra& g);

// Checks the grading condition of weight_layout; true when absent.
bool weights_consistent(const LieAlgebra& g);

// g^1 = g, g^k = [g, g^{k-1}]; the list ends with the first zero term.
std::vector<Subspace> lower_central_series(const LieAlgebra& g);

// Smallest s with g^{s+1} = 0; nullopt if the series stabilizes nonzero.
std::optional<int> nil_index(const LieAlgebra& g);

bool is_nilpotent(const LieAlgebra& g);
bool is_abelian(const LieAlgebra& g);
bool is_filiform(const LieAlgebra& g);

Subspace center(const LieAlgebra& g);

struct Quotient {
  LieAlgebra algebra;
  Matrix projection;              // (dim - r) x dim, kills the ideal
  std::vector<std::size_t> lift;  // standard coordinates spanning the complement
};

// Quotient by an ideal, in the canonical complement basis (the non-pivot
// standard coordinates of the ideal's RREF). Throws if not an ideal.
Quotient quotient(const LieAlgebra& g, const Subspace& ideal);

bool is_ideal(const LieAlgebra& g, const Subspace& s);

LieAlgebra direct_sum(const LieAlgebra& g, const LieAlgebra& h);

struct CarnotCheck {
  bool ok;
  int witness;  // first failing weight when !ok, -1 otherwise
};

// Layout is Carnot (natural) iff [g_1, g_i] = g_{i+1} as subspaces for all i.
// Throws if there is no weight layout.
CarnotCheck is_carnot_layout(const LieAlgebra& g);

// Associated graded algebra of the lower-central-series filtration, on the
// deterministic adapted basis; output carries a Carnot layout.
LieAlgebra associated_graded(const LieAlgebra& g);

// Span of basis vectors of weight w (layout required).
Subspace weight_block(const LieAlgebra& g, int w);

std::vector<int> lcs_dims(const LieAlgebra& g);

// Linear map transport: structure constants of g under the invertible map
// T (columns = images of basis vectors), i.e. the algebra with bracket
// [x,y]' = T^{-1} [T x, T y].
LieAlgebra transport(const LieAlgebra& g, const Matrix& t_inv, const Matrix& t);

// True when T is a Lie algebra homomorphism g -> h on all basis pairs.
bool is_homomorphism(const LieAlgebra& g, const LieAlgebra& h, const Matrix& t);

}  // namespace nilext
