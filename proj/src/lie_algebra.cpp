#include "nilext/lie_algebra.hpp"

#include <stdexcept>

namespace nilext {

Vec LieAlgebra::bracket_basis(std::size_t i, std::size_t j) const {
  if (i == j) return zero_vec(dim);
  if (i < j) {
    auto it = brackets.find({i, j});
    return it == brackets.end() ? zero_vec(dim) : it->second;
  }
  auto it = brackets.find({j, i});
  return it == brackets.end() ? zero_vec(dim) : scale(Scalar(-1), it->second);
}

void LieAlgebra::set_bracket(std::size_t i, std::size_t j, const Vec& v) {
  if (i >= j) throw std::invalid_argument("set_bracket: need i < j");
  if (v.size() != dim) throw std::invalid_argument("set_bracket: bad vector length");
  if (is_zero_vec(v))
    brackets.erase({i, j});
  else
    brackets[{i, j}] = v;
}

void LieAlgebra::set_bracket_single(std::size_t i, std::size_t j, std::size_t k, const Scalar& c) {
  Vec v = bracket_basis(i, j);
  v[k] = c;
  set_bracket(i, j, v);
}

bool LieAlgebra::structure_equal(const LieAlgebra& other) const {
  return dim == other.dim && brackets == other.brackets;
}

LieAlgebra make_algebra(std::size_t dim, const std::vector<std::string>& names) {
  LieAlgebra g;
  g.dim = dim;
  if (!names.empty()) {
    if (names.size() != dim) throw std::invalid_argument("make_algebra: bad name count");
    g.basis_names = names;
  } else {
    for (std::size_t i = 1; i <= dim; ++i) g.basis_names.push_back("e" + std::to_string(i));
  }
  return g;
}

Vec bracket(const LieAlgebra& g, const Vec& x, const Vec& y) {
  if (x.size() != g.dim || y.size() != g.dim) throw std::invalid_argument("bracket: dimension mismatch");
  Vec r = zero_vec(g.dim);
  for (const auto& [ij, coeffs] : g.brackets) {
    Scalar c = x[ij.first] * y[ij.second] - x[ij.second] * y[ij.first];
    if (c == 0) continue;
    for (std::size_t k = 0; k < g.dim; ++k)
      if (coeffs[k] != 0) r[k] += c * coeffs[k];
  }
  return r;
}

Matrix adjoint(const LieAlgebra& g, const Vec& x) {
  Matrix m(g.dim, g.dim);
  for (std::size_t j = 0; j < g.dim; ++j) {
    Vec ej = zero_vec(g.dim);
    ej[j] = 1;
    Vec b = bracket(g, x, ej);
    for (std::size_t i = 0; i < g.dim; ++i) m.at(i, j) = b[i];
  }
  return m;
}

std::vector<Triple> check_jacobi(const LieAlgebra& g) {
  std::vector<Triple> bad;
  std::vector<Vec> basis(g.dim);
  for (std::size_t i = 0; i < g.dim; ++i) {
    basis[i] = zero_vec(g.dim);
    basis[i][i] = 1;
  }
  for (std::size_t i = 0; i < g.dim; ++i)
    for (std::size_t j = i + 1; j < g.dim; ++j)
      for (std::size_t k = j + 1; k < g.dim; ++k) {
        Vec s = bracket(g, basis[i], bracket(g, basis[j], basis[k]));
        s = add(s, bracket(g, basis[j], bracket(g, basis[k], basis[i])));
        s = add(s, bracket(g, basis[k], bracket(g, basis[i], basis[j])));
        if (!is_zero_vec(s)) bad.push_back({i, j, k});
      }
  return bad;
}

bool weights_consistent(const LieAlgebra& g) {
  if (!g.weight_layout) return true;
  const auto& w = *g.weight_layout;
  if (w.size() != g.dim) return false;
  for (int wi : w)
    if (wi < 1) return false;
  for (const auto& [ij, coeffs] : g.brackets)
    for (std::size_t k = 0; k < g.dim; ++k)
      if (coeffs[k] != 0 && w[k] != w[ij.first] + w[ij.second]) return false;
  return true;
}

std::vector<Subspace> lower_central_series(const LieAlgebra& g) {
  std::vector<Subspace> series;
  series.push_back(Subspace::full(g.dim));
  for (;;) {
    const Subspace& prev = series.back();
    if (prev.dim() == 0) break;
    std::vector<Vec> gens;
    std::vector<Vec> basis(g.dim);
    for (std::size_t i = 0; i < g.dim; ++i) {
      basis[i] = zero_vec(g.dim);
      basis[i][i] = 1;
    }
    for (std::size_t i = 0; i < g.dim; ++i)
      for (std::size_t r = 0; r < prev.dim(); ++r) {
        Vec b = bracket(g, basis[i], prev.basis_vector(r));
        if (!is_zero_vec(b)) gens.push_back(b);
      }
    Subspace next = Subspace::from_vectors(gens, g.dim);
    if (next == prev) {
      // stabilized at a nonzero ideal: not nilpotent; record and stop
      series.push_back(next);
      break;
    }
    series.push_back(next);
    if (next.dim() == 0) break;
  }
  return series;
}

std::optional<int> nil_index(const LieAlgebra& g) {
  auto series = lower_central_series(g);
  if (series.back().dim() != 0) return std::nullopt;
  if (series.size() == 1) return 0;  // zero-dimensional algebra
  return static_cast<int>(series.size()) - 1;
}

bool is_nilpotent(const LieAlgebra& g) { return nil_index(g).has_value(); }

bool is_abelian(const LieAlgebra& g) { return g.brackets.empty(); }

bool is_filiform(const LieAlgebra& g) {
  auto s = nil_index(g);
  return s && g.dim >= 1 && *s == static_cast<int>(g.dim) - 1;
}

Subspace center(const LieAlgebra& g) {
  // x is central iff ad_{e_i} x = 0 for all i: stack the adjoint matrices.
  if (g.dim == 0) return Subspace(0);
  Matrix stacked(g.dim * g.dim, g.dim);
  for (std::size_t i = 0; i < g.dim; ++i) {
    Vec ei = zero_vec(g.dim);
    ei[i] = 1;
    Matrix ad = adjoint(g, ei);
    for (std::size_t r = 0; r < g.dim; ++r)
      for (std::size_t c = 0; c < g.dim; ++c) stacked.at(i * g.dim + r, c) = ad.at(r, c);
  }
  return Subspace::from_vectors(kernel_basis(stacked), g.dim);
}

bool is_ideal(const LieAlgebra& g, const Subspace& s) {
  std::vector<Vec> basis(g.dim);
  for (std::size_t i = 0; i < g.dim; ++i) {
    basis[i] = zero_vec(g.dim);
    basis[i][i] = 1;
  }
  for (std::size_t i = 0; i < g.dim; ++i)
    for (std::size_t r = 0; r < s.dim(); ++r)
      if (!s.contains(bracket(g, basis[i], s.basis_vector(r)))) return false;
  return true;
}

Quotient quotient(const LieAlgebra& g, const Subspace& ideal) {
  if (ideal.ambient_dim() != g.dim) throw std::invalid_argument("quotient: ambient mismatch");
  if (!is_ideal(g, ideal)) throw std::domain_error("quotient: not an ideal");
  std::vector<bool> is_pivot(g.dim, false);
  for (auto p : ideal.pivots()) is_pivot[p] = true;
  std::vector<std::size_t> lift;
  for (std::size_t j = 0; j < g.dim; ++j)
    if (!is_pivot[j]) lift.push_back(j);
  std::size_t qdim = lift.size();

  // projection: reduce modulo the ideal's RREF rows, then read complement coords
  Matrix proj(qdim, g.dim);
  for (std::size_t j = 0; j < g.dim; ++j) {
    Vec v = zero_vec(g.dim);
    v[j] = 1;
    for (std::size_t r = 0; r < ideal.dim(); ++r) {
      const Scalar& c = v[ideal.pivots()[r]];
      if (c != 0) {
        Scalar f = c;
        for (std::size_t k = 0; k < g.dim; ++k) v[k] -= f * ideal.basis().at(r, k);
      }
    }
    for (std::size_t r = 0; r < qdim; ++r) proj.at(r, j) = v[lift[r]];
  }

  LieAlgebra q = make_algebra(qdim);
  for (std::size_t a = 0; a < qdim; ++a) q.basis_names[a] = g.basis_names[lift[a]];
  std::vector<Vec> basis(g.dim);
  for (std::size_t i = 0; i < g.dim; ++i) {
    basis[i] = zero_vec(g.dim);
    basis[i][i] = 1;
  }
  for (std::size_t a = 0; a < qdim; ++a)
    for (std::size_t b = a + 1; b < qdim; ++b) {
      Vec br = bracket(g, basis[lift[a]], basis[lift[b]]);
      Vec qc = mat_vec(proj, br);
      if (!is_zero_vec(qc)) q.set_bracket(a, b, qc);
    }
  return {q, proj, lift};
}

LieAlgebra direct_sum(const LieAlgebra& g, const LieAlgebra& h) {
  LieAlgebra s = make_algebra(g.dim + h.dim);
  for (std::size_t i = 0; i < g.dim; ++i) s.basis_names[i] = g.basis_names[i];
  for (std::size_t i = 0; i < h.dim; ++i) s.basis_names[g.dim + i] = h.basis_names[i] + "'";
  for (const auto& [ij, coeffs] : g.brackets) {
    Vec v = zero_vec(s.dim);
    for (std::size_t k = 0; k < g.dim; ++k) v[k] = coeffs[k];
    s.set_bracket(ij.first, ij.second, v);
  }
  for (const auto& [ij, coeffs] : h.brackets) {
    Vec v = zero_vec(s.dim);
    for (std::size_t k = 0; k < h.dim; ++k) v[g.dim + k] = coeffs[k];
    s.set_bracket(g.dim + ij.first, g.dim + ij.second, v);
  }
  return s;
}

Subspace weight_block(const LieAlgebra& g, int w) {
  if (!g.weight_layout) throw std::domain_error("weight_block: no layout");
  std::vector<Vec> vs;
  for (std::size_t i = 0; i < g.dim; ++i)
    if ((*g.weight_layout)[i] == w) {
      Vec v = zero_vec(g.dim);
      v[i] = 1;
      vs.push_back(v);
    }
  return Subspace::from_vectors(vs, g.dim);
}

CarnotCheck is_carnot_layout(const LieAlgebra& g) {
  if (!g.weight_layout) throw std::domain_error("is_carnot_layout: no layout");
  if (!weights_consistent(g)) return {false, 0};
  int top = 0;
  for (int w : *g.weight_layout) top = std::max(top, w);
  Subspace g1 = weight_block(g, 1);
  for (int i = 1; i < top; ++i) {
    Subspace gi = weight_block(g, i);
    Subspace gnext = weight_block(g, i + 1);
    std::vector<Vec> gens;
    for (std::size_t a = 0; a < g1.dim(); ++a)
      for (std::size_t b = 0; b < gi.dim(); ++b) {
        Vec v = bracket(g, g1.basis_vector(a), gi.basis_vector(b));
        if (!is_zero_vec(v)) gens.push_back(v);
      }
    if (Subspace::from_vectors(gens, g.dim) != gnext) return {false, i};
  }
  return {true, -1};
}

std::vector<int> lcs_dims(const LieAlgebra& g) {
  std::vector<int> dims;
  for (const auto& s : lower_central_series(g)) dims.push_back(static_cast<int>(s.dim()));
  return dims;
}

LieAlgebra associated_graded(const LieAlgebra& g) {
  if (!is_nilpotent(g)) throw std::domain_error("associated_graded: not nilpotent");
  auto series = lower_central_series(g);
  std::size_t levels = series.size() - 1;  // series ends with 0

  // Adapted basis: per level, the RREF rows of g^i whose pivot is not a pivot
  // of g^{i+1}. Pivot sets are nested, so this is a complement basis.
  std::vector<Vec> adapted;
  std::vector<int> weights;
  for (std::size_t i = 0; i < levels; ++i) {
    const Subspace& cur = series[i];
    const Subspace& next = series[i + 1];
    std::vector<bool> next_pivot(g.dim, false);
    for (auto p : next.pivots()) next_pivot[p] = true;
    for (std::size_t r = 0; r < cur.dim(); ++r) {
      if (next_pivot[cur.pivots()[r]]) continue;
      adapted.push_back(cur.basis_vector(r));
      weights.push_back(static_cast<int>(i) + 1);
    }
  }
  Matrix t = Matrix::from_rows(adapted, g.dim).transpose();  // columns = adapted basis
  Matrix t_inv = *inverse(t);

  LieAlgebra gr = make_algebra(g.dim);
  for (std::size_t i = 0; i < g.dim; ++i)
    gr.basis_names[i] = "g" + std::to_string(weights[i]) + "_" + std::to_string(i + 1);
  for (std::size_t a = 0; a < g.dim; ++a)
    for (std::size_t b = a + 1; b < g.dim; ++b) {
      Vec br = bracket(g, t.col(a), t.col(b));
      Vec coords = mat_vec(t_inv, br);
      // keep only the weight-(wa+wb) component: the graded bracket
      int w = weights[a] + weights[b];
      for (std::size_t k = 0; k < g.dim; ++k)
        if (weights[k] != w) coords[k] = 0;
      if (!is_zero_vec(coords)) gr.set_bracket(a, b, coords);
    }
  gr.weight_layout = weights;
  return gr;
}

LieAlgebra transport(const LieAlgebra& g, const Matrix& t_inv, const Matrix& t) {
  LieAlgebra h = make_algebra(g.dim);
  for (std::size_t a = 0; a < g.dim; ++a)
    for (std::size_t b = a + 1; b < g.dim; ++b) {
      Vec br = mat_vec(t_inv, bracket(g, t.col(a), t.col(b)));
      if (!is_zero_vec(br)) h.set_bracket(a, b, br);
    }
  return h;
}

bool is_homomorphism(const LieAlgebra& g, const LieAlgebra& h, const Matrix& t) {
  if (t.rows() != h.dim || t.cols() != g.dim) return false;
  for (std::size_t a = 0; a < g.dim; ++a)
    for (std::size_t b = a + 1; b < g.dim; ++b) {
      Vec lhs = mat_vec(t, g.bracket_basis(a, b));
      Vec rhs = bracket(h, t.col(a), t.col(b));
      if (lhs != rhs) return false;
    }
  return true;
}

}  // namespace nilext
