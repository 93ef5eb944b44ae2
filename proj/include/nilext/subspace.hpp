#pragma once

#include <vector>

#include "nilext/matrix.hpp"

namespace nilext {

// Linear subspace of K^n in canonical form: basis rows are the nonzero rows
// of an RREF, so two subspaces are equal iff their matrices are equal.
class Subspace {
 public:
  Subspace() : ambient_(0) {}
  explicit Subspace(std::size_t ambient) : ambient_(ambient), basis_(0, ambient) {}

  static Subspace from_vectors(const std::vector<Vec>& vs, std::size_t ambient);
  static Subspace full(std::size_t ambient);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }
  Vec basis_vector(std::size_t i) const { return basis_.row(i); }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;
  Subspace sum(const Subspace& other) const;

  // Coordinates of v in the row basis; nullopt if v is outside the subspace.
  std::optional<Vec> coordinates(const Vec& v) const;

  friend bool operator==(const Subspace& a, const Subspace& b) = default;

 private:
  std::size_t ambient_;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

// Annihilator {f in the dual : f(v) = 0 for all v in s}, as a subspace of K^n
// in dual coordinates.
Subspace annihilator(const Subspace& s);

}  // namespace nilext
