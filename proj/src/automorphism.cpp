#include "nilext/automorphism.hpp"

#include <stdexcept>

namespace nilext {

bool is_automorphism(const LieAlgebra& g, const Matrix& phi) {
  if (phi.rows() != g.dim || phi.cols() != g.dim) return false;
  if (!inverse(phi)) return false;
  return is_homomorphism(g, g, phi);
}

std::optional<GradedAutomorphism> extend_degree_one_map(const LieAlgebra& g, const Matrix& a) {
  if (!g.weight_layout) throw std::domain_error("extend_degree_one_map: no layout");
  auto carnot = is_carnot_layout(g);
  if (!carnot.ok) throw std::domain_error("extend_degree_one_map: layout is not Carnot");

  int top = 0;
  for (int w : *g.weight_layout) top = std::max(top, w);
  std::vector<std::vector<std::size_t>> block(top + 1);
  for (std::size_t i = 0; i < g.dim; ++i) block[(*g.weight_layout)[i]].push_back(i);
  if (a.rows() != block[1].size() || a.cols() != block[1].size())
    throw std::invalid_argument("extend_degree_one_map: block size mismatch");
  if (!inverse(a)) throw std::invalid_argument("extend_degree_one_map: singular block");

  Matrix phi(g.dim, g.dim);
  for (std::size_t r = 0; r < block[1].size(); ++r)
    for (std::size_t c = 0; c < block[1].size(); ++c) phi.at(block[1][r], block[1][c]) = a.at(r, c);

  // Induce each next block from phi on g_1 and g_k: the candidate block map
  // psi solves psi([x, y]) = [phi x, phi y] over all basis pairs.
  for (int w = 1; w < top; ++w) {
    const auto& b1 = block[1];
    const auto& bk = block[w];
    const auto& bn = block[w + 1];
    std::size_t dn = bn.size();
    std::vector<Vec> rows;  // unknowns: psi entries (dn x dn), row-major
    std::vector<Scalar> rhs_all;
    for (std::size_t r = 0; r < b1.size(); ++r)
      for (std::size_t c = 0; c < bk.size(); ++c) {
        Vec e1 = zero_vec(g.dim), ek = zero_vec(g.dim);
        e1[b1[r]] = 1;
        ek[bk[c]] = 1;
        Vec v = bracket(g, e1, ek);          // lies in block w+1
        Vec target = bracket(g, phi.col(b1[r]), phi.col(bk[c]));
        for (std::size_t out = 0; out < dn; ++out) {
          Vec row = zero_vec(dn * dn);
          for (std::size_t in = 0; in < dn; ++in) row[out * dn + in] = v[bn[in]];
          rows.push_back(row);
          rhs_all.push_back(target[bn[out]]);
        }
      }
    if (dn == 0) continue;
    Matrix sys = Matrix::from_rows(rows, dn * dn);
    auto sol = solve(sys, rhs_all);
    if (!sol) return std::nullopt;  // inconsistent: the map does not extend
    // uniqueness: [g_1, g_k] spans g_{k+1} for a Carnot layout
    for (std::size_t out = 0; out < dn; ++out)
      for (std::size_t in = 0; in < dn; ++in) phi.at(bn[out], bn[in]) = (*sol)[out * dn + in];
  }

  if (!is_automorphism(g, phi)) return std::nullopt;
  return GradedAutomorphism{phi, a};
}

ExteriorForm pullback_form(const Matrix& phi, const ExteriorForm& w) {
  std::size_t n = w.ambient_dim;
  if (phi.rows() != n || phi.cols() != n) throw std::invalid_argument("pullback_form: shape");
  // phi^* e^i = sum_j phi_{ij} e^j
  std::vector<ExteriorForm> pulled(n, zero_form(1, n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (phi.at(i, j) != 0) pulled[i].add_term({j}, phi.at(i, j));

  ExteriorForm r = zero_form(w.degree, n);
  for (const auto& [idx, c] : w.terms) {
    ExteriorForm prod = zero_form(0, n);
    prod.terms[{}] = c;
    for (auto i : idx) prod = wedge(prod, pulled[i]);
    r = add(r, prod);
  }
  return r;
}

Vec pullback_on_h2(const LieAlgebra& g, const Matrix& phi, const std::vector<ExteriorForm>& basis,
                   const ExteriorForm& w) {
  ExteriorForm pw = pullback_form(phi, w);
  auto coords = class_coordinates(g, basis, pw);
  if (!coords) throw std::domain_error("pullback_on_h2: class left the basis span");
  return *coords;
}

std::vector<Matrix> derivations(const LieAlgebra& g, bool weight_zero_only) {
  std::size_t n = g.dim;
  if (n == 0) return {};
  // unknowns: D entries row-major; equations: D[e_a,e_b] = [De_a,e_b] + [e_a,De_b]
  std::vector<std::size_t> unknown_of(n * n, 0);
  std::vector<std::pair<std::size_t, std::size_t>> unknowns;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (weight_zero_only) {
        if (!g.weight_layout) throw std::domain_error("derivations: no layout");
        if ((*g.weight_layout)[i] != (*g.weight_layout)[j]) continue;
      }
      unknown_of[i * n + j] = unknowns.size();
      unknowns.push_back({i, j});
    }
  auto allowed = [&](std::size_t i, std::size_t j) {
    if (!weight_zero_only) return true;
    return (*g.weight_layout)[i] == (*g.weight_layout)[j];
  };

  std::vector<Vec> rows;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      Vec br = g.bracket_basis(a, b);
      for (std::size_t out = 0; out < n; ++out) {
        Vec row = zero_vec(unknowns.size());
        // D [e_a, e_b]: sum_k br_k D_{out,k}
        for (std::size_t k = 0; k < n; ++k)
          if (br[k] != 0 && allowed(out, k)) row[unknown_of[out * n + k]] += br[k];
        // -[D e_a, e_b] = -sum_k D_{k,a} [e_k, e_b]_out
        for (std::size_t k = 0; k < n; ++k) {
          if (allowed(k, a)) {
            Vec v = g.bracket_basis(k, b);
            if (v[out] != 0) row[unknown_of[k * n + a]] -= v[out];
          }
          if (allowed(k, b)) {
            Vec v = g.bracket_basis(a, k);
            if (v[out] != 0) row[unknown_of[k * n + b]] -= v[out];
          }
        }
        if (!is_zero_vec(row)) rows.push_back(row);
      }
    }
  std::vector<Vec> ker;
  if (rows.empty()) {
    ker.clear();
    for (std::size_t u = 0; u < unknowns.size(); ++u) {
      Vec v = zero_vec(unknowns.size());
      v[u] = 1;
      ker.push_back(v);
    }
  } else {
    ker = kernel_basis(Matrix::from_rows(rows, unknowns.size()));
  }
  std::vector<Matrix> out;
  for (const auto& v : ker) {
    Matrix d(n, n);
    for (std::size_t u = 0; u < unknowns.size(); ++u) d.at(unknowns[u].first, unknowns[u].second) = v[u];
    out.push_back(d);
  }
  return out;
}

std::optional<Matrix> exp_nilpotent(const Matrix& d) {
  std::size_t n = d.rows();
  Matrix power = Matrix::identity(n);
  Matrix sum(n, n);
  Scalar fact(1);
  for (std::size_t k = 0; k <= n; ++k) {
    if (k > 0) {
      power = power * d;
      fact *= Scalar(static_cast<long>(k));
    }
    if (power.is_zero()) {
      return sum;
    }
    sum = sum + scalar_mul(Scalar(1) / fact, power);
  }
  return std::nullopt;  // d^{n+1} != 0: not nilpotent
}

TangentReport orbit_tangent_dimension(const LieAlgebra& g, const std::vector<ExteriorForm>& classes,
                                      bool graded) {
  if (classes.empty()) throw std::invalid_argument("orbit_tangent_dimension: empty span");
  CohomologyBasis h;
  if (graded) {
    auto w = weight_of_form(g, classes.front());
    if (!w) throw std::domain_error("orbit_tangent_dimension: inhomogeneous class in graded mode");
    h = homogeneous_cohomology(g, 2, *w);
  } else {
    h = cohomology(g, 2);
  }
  std::size_t hd = h.dim(), m = classes.size();
  if (hd < m) throw std::domain_error("orbit_tangent_dimension: span larger than H^2");

  // coordinates of the span in the representative basis
  std::vector<Vec> wcoords;
  for (const auto& c : classes) {
    auto x = class_coordinates(g, h.representatives, c);
    if (!x) throw std::domain_error("orbit_tangent_dimension: class outside H^2 basis");
    wcoords.push_back(*x);
  }
  Subspace w_span = Subspace::from_vectors(wcoords, hd);
  if (w_span.dim() != m) throw std::invalid_argument("orbit_tangent_dimension: dependent classes");

  // quotient H^2 / W via the non-pivot coordinates of the span
  std::vector<bool> is_pivot(hd, false);
  for (auto p : w_span.pivots()) is_pivot[p] = true;
  std::vector<std::size_t> quot;
  for (std::size_t i = 0; i < hd; ++i)
    if (!is_pivot[i]) quot.push_back(i);

  auto reduce_mod_w = [&](Vec v) {
    for (std::size_t r = 0; r < w_span.dim(); ++r) {
      const Scalar& c = v[w_span.pivots()[r]];
      if (c == 0) continue;
      Scalar f = c;
      for (std::size_t j = 0; j < hd; ++j) v[j] -= f * w_span.basis().at(r, j);
    }
    Vec out;
    for (auto qi : quot) out.push_back(v[qi]);
    return out;
  };

  std::vector<Matrix> ders = derivations(g, graded);
  std::vector<Vec> tangent_rows;
  for (const auto& d : ders) {
    Vec row;
    bool ok = true;
    for (const auto& c : classes) {
      // infinitesimal pullback: (D . w)(x, y) = w(Dx, y) + w(x, Dy)
      ExteriorForm dc = zero_form(2, g.dim);
      for (const auto& [idx, coeff] : c.terms) {
        for (std::size_t j = 0; j < g.dim; ++j) {
          if (d.at(idx[0], j) != 0) dc.add_term({j, idx[1]}, coeff * d.at(idx[0], j));
          if (d.at(idx[1], j) != 0) dc.add_term({idx[0], j}, coeff * d.at(idx[1], j));
        }
      }
      auto coords = class_coordinates(g, h.representatives, dc);
      if (!coords) {
        ok = false;  // class moved outside the ambient (graded) H^2 slice
        break;
      }
      Vec part = reduce_mod_w(*coords);
      row.insert(row.end(), part.begin(), part.end());
    }
    if (ok && !is_zero_vec(row)) tangent_rows.push_back(row);
  }

  std::size_t gr_dim = m * (hd - m);
  std::size_t tdim = 0;
  if (!tangent_rows.empty()) tdim = rank(Matrix::from_rows(tangent_rows, m * (hd - m)));
  RigidityOutcome out = (tdim == gr_dim) ? RigidityOutcome::open_orbit_certified
                                         : RigidityOutcome::moduli_direction_found;
  return {tdim, gr_dim, out};
}

std::vector<Matrix> automorphism_samples(const LieAlgebra& g, std::size_t budget) {
  std::vector<Matrix> out;
  out.push_back(Matrix::identity(g.dim));

  bool carnot = false;
  std::vector<std::size_t> b1;
  if (g.weight_layout) {
    auto c = is_carnot_layout(g);
    carnot = c.ok;
    for (std::size_t i = 0; i < g.dim; ++i)
      if ((*g.weight_layout)[i] == 1) b1.push_back(i);
  }

  // graded automorphisms from the sample grid on the degree-one block
  if (carnot && !b1.empty() && b1.size() <= 3) {
    std::size_t d1 = b1.size();
    const auto& grid = sample_grid();
    std::vector<Matrix> blocks;
    if (d1 == 1) {
      for (const auto& v : grid)
        if (v != 0) {
          Matrix m(1, 1);
          m.at(0, 0) = v;
          blocks.push_back(m);
        }
    } else if (d1 == 2) {
      for (const auto& a : grid)
        for (const auto& b : grid)
          for (const auto& c : grid)
            for (const auto& d : grid) {
              if (a * d - b * c == 0) continue;
              Matrix m(2, 2);
              m.at(0, 0) = a;
              m.at(0, 1) = b;
              m.at(1, 0) = c;
              m.at(1, 1) = d;
              blocks.push_back(m);
              if (blocks.size() > budget) break;
            }
    } else {
      // generators of GL_3 over the grid: diagonals, transvections, permutations
      for (const auto& a : grid)
        for (const auto& b : grid)
          for (const auto& c : grid) {
            if (a == 0 || b == 0 || c == 0) continue;
            Matrix m(3, 3);
            m.at(0, 0) = a;
            m.at(1, 1) = b;
            m.at(2, 2) = c;
            blocks.push_back(m);
          }
      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
          if (i == j) continue;
          for (const auto& v : grid) {
            if (v == 0) continue;
            Matrix m = Matrix::identity(3);
            m.at(i, j) = v;
            blocks.push_back(m);
          }
        }
      const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
      for (const auto& p : perms) {
        Matrix m(3, 3);
        for (std::size_t i = 0; i < 3; ++i) m.at(p[i], i) = 1;
        blocks.push_back(m);
      }
    }
    for (const auto& blk : blocks) {
      if (out.size() >= budget) break;
      auto phi = extend_degree_one_map(g, blk);
      if (phi) out.push_back(phi->matrix);
    }
  }

  // unipotent part: exponentials of nilpotent derivations
  std::vector<Matrix> ders = derivations(g);
  std::vector<Matrix> unipotent;
  for (const auto& d : ders) {
    auto e = exp_nilpotent(d);
    if (e && is_automorphism(g, *e)) unipotent.push_back(*e);
    if (out.size() + unipotent.size() >= budget) break;
  }
  for (const auto& u : unipotent)
    if (out.size() < budget) out.push_back(u);

  // a few compositions of graded and unipotent samples
  std::size_t base = out.size();
  for (std::size_t i = 1; i < base && out.size() < budget; ++i)
    for (std::size_t j = base - unipotent.size(); j < base && out.size() < budget; ++j) {
      if (i == j) continue;
      Matrix c = out[i] * out[j];
      out.push_back(c);
    }
  return out;
}

}  // namespace nilext
