#include "nilext/subspace.hpp"

namespace nilext {

Subspace Subspace::from_vectors(const std::vector<Vec>& vs, std::size_t ambient) {
  Subspace s(ambient);
  if (vs.empty()) return s;
  Rref r = rref(Matrix::from_rows(vs, ambient));
  Matrix b(r.pivots.size(), ambient);
  for (std::size_t i = 0; i < r.pivots.size(); ++i) b.set_row(i, r.mat.row(i));
  s.basis_ = b;
  s.pivots_ = r.pivots;
  return s;
}

Subspace Subspace::full(std::size_t ambient) {
  Subspace s(ambient);
  s.basis_ = Matrix::identity(ambient);
  for (std::size_t i = 0; i < ambient; ++i) s.pivots_.push_back(i);
  return s;
}

bool Subspace::contains(const Vec& v) const { return coordinates(v).has_value(); }

bool Subspace::contains(const Subspace& other) const {
  for (std::size_t i = 0; i < other.dim(); ++i)
    if (!contains(other.basis_vector(i))) return false;
  return true;
}

Subspace Subspace::sum(const Subspace& other) const {
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < dim(); ++i) rows.push_back(basis_vector(i));
  for (std::size_t i = 0; i < other.dim(); ++i) rows.push_back(other.basis_vector(i));
  return from_vectors(rows, ambient_);
}

std::optional<Vec> Subspace::coordinates(const Vec& v) const {
  // Reduce v against the RREF rows; coefficients are read off the pivots.
  Vec coeffs(dim(), Scalar(0));
  Vec w(v);
  for (std::size_t i = 0; i < dim(); ++i) {
    const Scalar& c = w[pivots_[i]];
    if (c == 0) continue;
    coeffs[i] = c;
    for (std::size_t j = 0; j < ambient_; ++j) w[j] -= c * basis_.at(i, j);
  }
  if (!is_zero_vec(w)) return std::nullopt;
  return coeffs;
}

Subspace annihilator(const Subspace& s) {
  if (s.dim() == 0) return Subspace::full(s.ambient_dim());
  return Subspace::from_vectors(kernel_basis(s.basis()), s.ambient_dim());
}

}  // namespace nilext
