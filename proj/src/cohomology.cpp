#include "nilext/cohomology.hpp"

#include <stdexcept>

namespace nilext {

namespace {

// Representatives: reduce each cocycle-space basis vector modulo the
// boundary RREF, keep the nonzero reductions, and RREF those.
std::vector<ExteriorForm> coset_representatives(int p, std::size_t n, const Subspace& cocycles,
                                                const Subspace& boundaries) {
  std::vector<Vec> reduced;
  for (std::size_t i = 0; i < cocycles.dim(); ++i) {
    Vec v = cocycles.basis_vector(i);
    for (std::size_t r = 0; r < boundaries.dim(); ++r) {
      const Scalar& c = v[boundaries.pivots()[r]];
      if (c == 0) continue;
      Scalar f = c;
      for (std::size_t j = 0; j < v.size(); ++j) v[j] -= f * boundaries.basis().at(r, j);
    }
    if (!is_zero_vec(v)) reduced.push_back(v);
  }
  Subspace rep = Subspace::from_vectors(reduced, cocycles.ambient_dim());
  std::vector<ExteriorForm> out;
  for (std::size_t i = 0; i < rep.dim(); ++i)
    out.push_back(form_from_coords(p, n, rep.basis_vector(i)));
  return out;
}

}  // namespace

CohomologyBasis cohomology(const LieAlgebra& g, int p) {
  if (p < 0 || p > static_cast<int>(g.dim)) throw std::invalid_argument("cohomology: bad degree");
  std::size_t np = p_tuples(g.dim, p).size();
  CohomologyBasis h;
  h.degree = p;

  Matrix dp = differential_matrix(g, p);
  h.cocycle_space = Subspace::from_vectors(kernel_basis(dp), np);

  if (p == 0) {
    h.boundary_space = Subspace(np);
  } else {
    Matrix dprev = differential_matrix(g, p - 1);
    std::vector<Vec> image;
    for (std::size_t j = 0; j < dprev.cols(); ++j) image.push_back(dprev.col(j));
    h.boundary_space = Subspace::from_vectors(image, np);
  }
  h.representatives = coset_representatives(p, g.dim, h.cocycle_space, h.boundary_space);
  return h;
}

CohomologyBasis homogeneous_cohomology(const LieAlgebra& g, int p, int lambda) {
  if (!g.weight_layout) throw std::domain_error("homogeneous_cohomology: no layout");
  const auto& w = *g.weight_layout;
  auto weight_of = [&](const std::vector<std::size_t>& t) {
    int s = 0;
    for (auto i : t) s += w[i];
    return s;
  };

  const auto& dom = p_tuples(g.dim, p);
  std::vector<std::size_t> dom_sel;
  for (std::size_t i = 0; i < dom.size(); ++i)
    if (weight_of(dom[i]) == lambda) dom_sel.push_back(i);

  std::size_t np = dom.size();
  CohomologyBasis h;
  h.degree = p;

  // d preserves weight, so restricting the domain is enough; kernel vectors
  // are re-embedded into full Lambda^p coordinates.
  Matrix dp = differential_matrix(g, p);
  Matrix dp_res(dp.rows(), dom_sel.size());
  for (std::size_t j = 0; j < dom_sel.size(); ++j)
    for (std::size_t i = 0; i < dp.rows(); ++i) dp_res.at(i, j) = dp.at(i, dom_sel[j]);
  std::vector<Vec> cocycles;
  for (const auto& k : kernel_basis(dp_res)) {
    Vec full = zero_vec(np);
    for (std::size_t j = 0; j < dom_sel.size(); ++j) full[dom_sel[j]] = k[j];
    cocycles.push_back(full);
  }
  h.cocycle_space = Subspace::from_vectors(cocycles, np);

  if (p == 0) {
    h.boundary_space = Subspace(np);
  } else {
    const auto& prev = p_tuples(g.dim, p - 1);
    Matrix dprev = differential_matrix(g, p - 1);
    std::vector<Vec> image;
    for (std::size_t j = 0; j < prev.size(); ++j)
      if (weight_of(prev[j]) == lambda) image.push_back(dprev.col(j));
    h.boundary_space = Subspace::from_vectors(image, np);
  }
  h.representatives = coset_representatives(p, g.dim, h.cocycle_space, h.boundary_space);
  return h;
}

std::optional<Vec> class_coordinates(const LieAlgebra& g, const std::vector<ExteriorForm>& basis,
                                     const ExteriorForm& w) {
  if (basis.empty()) {
    // class is zero iff w is a coboundary
    Matrix d1 = differential_matrix(g, w.degree - 1);
    if (solve(d1, form_to_coords(w))) return Vec{};
    return std::nullopt;
  }
  int p = w.degree;
  std::size_t np = p_tuples(g.dim, p).size();
  Matrix d1 = differential_matrix(g, p - 1);
  std::size_t nb = d1.cols();
  Matrix sys(np, basis.size() + nb);
  for (std::size_t j = 0; j < basis.size(); ++j) {
    Vec c = form_to_coords(basis[j]);
    for (std::size_t i = 0; i < np; ++i) sys.at(i, j) = c[i];
  }
  for (std::size_t j = 0; j < nb; ++j)
    for (std::size_t i = 0; i < np; ++i) sys.at(i, basis.size() + j) = d1.at(i, j);
  auto x = solve(sys, form_to_coords(w));
  if (!x) return std::nullopt;
  return Vec(x->begin(), x->begin() + basis.size());
}

Subspace filtered_forms(const LieAlgebra& g, int p, int k) {
  auto series = lower_central_series(g);
  int s = static_cast<int>(series.size()) - 1;  // deepest nonzero level index
  if (series.back().dim() != 0) throw std::domain_error("filtered_forms: not nilpotent");

  const auto& tuples = p_tuples(g.dim, p);
  std::vector<Vec> constraints;
  // one constraint per evaluation of the form on basis tuples of the series
  // ideals with depth sum > k
  std::vector<std::vector<int>> depth_tuples;
  std::vector<int> cur(p, 1);
  for (;;) {
    int sum = 0;
    for (int d : cur) sum += d;
    if (sum > k) depth_tuples.push_back(cur);
    int i = p - 1;
    while (i >= 0 && cur[i] == s) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < p; ++j) cur[j] = 1;
  }
  for (const auto& depths : depth_tuples) {
    // iterate over basis-vector choices from each g^{d}
    std::vector<std::size_t> choice(p, 0);
    bool any_empty = false;
    for (int t = 0; t < p; ++t)
      if (series[depths[t] - 1].dim() == 0) any_empty = true;
    if (any_empty) continue;
    for (;;) {
      std::vector<Vec> args;
      for (int t = 0; t < p; ++t) args.push_back(series[depths[t] - 1].basis_vector(choice[t]));
      Vec row = zero_vec(tuples.size());
      for (std::size_t m = 0; m < tuples.size(); ++m) {
        ExteriorForm mono = zero_form(p, g.dim);
        mono.terms[tuples[m]] = 1;
        row[m] = eval(mono, args);
      }
      constraints.push_back(row);
      int t = p - 1;
      while (t >= 0 && choice[t] + 1 == series[depths[t] - 1].dim()) --t;
      if (t < 0) break;
      ++choice[t];
      for (int j = t + 1; j < p; ++j) choice[j] = 0;
    }
  }
  if (constraints.empty()) return Subspace::full(tuples.size());
  Matrix m = Matrix::from_rows(constraints, tuples.size());
  return Subspace::from_vectors(kernel_basis(m), tuples.size());
}

int form_filtration(const LieAlgebra& g, const ExteriorForm& w) {
  if (w.is_zero()) return 0;
  auto series = lower_central_series(g);
  if (series.back().dim() != 0) throw std::domain_error("form_filtration: not nilpotent");
  int s = static_cast<int>(series.size()) - 1;
  int p = w.degree;
  // largest depth sum on which w fails to vanish
  int worst = 0;
  std::vector<int> cur(p, 1);
  for (;;) {
    int sum = 0;
    for (int d : cur) sum += d;
    if (sum > worst) {
      bool nonzero = false;
      std::vector<std::size_t> choice(p, 0);
      bool empty = false;
      for (int t = 0; t < p; ++t)
        if (series[cur[t] - 1].dim() == 0) empty = true;
      if (!empty) {
        for (;;) {
          std::vector<Vec> args;
          for (int t = 0; t < p; ++t) args.push_back(series[cur[t] - 1].basis_vector(choice[t]));
          if (eval(w, args) != 0) {
            nonzero = true;
            break;
          }
          int t = p - 1;
          while (t >= 0 && choice[t] + 1 == series[cur[t] - 1].dim()) --t;
          if (t < 0) break;
          ++choice[t];
          for (int j = t + 1; j < p; ++j) choice[j] = 0;
        }
      }
      if (nonzero) worst = sum;
    }
    int i = p - 1;
    while (i >= 0 && cur[i] == s) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < p; ++j) cur[j] = 1;
  }
  return worst;
}

std::vector<Subspace> dual_chain_L(const LieAlgebra& g) {
  std::vector<Subspace> chain;
  chain.push_back(Subspace(g.dim));  // L_0 = 0
  Matrix d1 = differential_matrix(g, 1);
  std::size_t n2 = p_tuples(g.dim, 2).size();
  for (;;) {
    const Subspace& prev = chain.back();
    // Lambda^2(L_{i-1}) as a subspace of Lambda^2 coordinates
    std::vector<Vec> wedges;
    for (std::size_t a = 0; a < prev.dim(); ++a)
      for (std::size_t b = a + 1; b < prev.dim(); ++b) {
        ExteriorForm fa = form_from_coords(1, g.dim, prev.basis_vector(a));
        ExteriorForm fb = form_from_coords(1, g.dim, prev.basis_vector(b));
        wedges.push_back(form_to_coords(wedge(fa, fb)));
      }
    Subspace lambda2 = Subspace::from_vectors(wedges, n2);
    // rho admissible iff Q (d1 rho) = 0 where rows of Q span the annihilator
    Subspace ann = annihilator(lambda2);
    Matrix q = ann.basis();
    Matrix qd = q * d1;
    Subspace next = Subspace::from_vectors(kernel_basis(qd), g.dim);
    if (next == prev) break;
    chain.push_back(next);
    if (next.dim() == g.dim) break;
  }
  return chain;
}

bool set_has_filtration_s(const LieAlgebra& g, const std::vector<ExteriorForm>& cocycles, int s) {
  if (cocycles.empty()) return false;
  std::size_t n2 = p_tuples(g.dim, 2).size();
  for (const auto& c : cocycles) {
    if (c.degree != 2 || c.ambient_dim != g.dim)
      throw std::invalid_argument("set_has_filtration_s: need 2-forms on g");
    if (!differential(g, c).is_zero()) throw std::domain_error("set_has_filtration_s: non-cocycle input");
  }
  Subspace filt = filtered_forms(g, 2, s - 1);
  Matrix d1 = differential_matrix(g, 1);
  std::vector<Vec> wb;
  for (std::size_t i = 0; i < filt.dim(); ++i) wb.push_back(filt.basis_vector(i));
  for (std::size_t j = 0; j < d1.cols(); ++j) wb.push_back(d1.col(j));
  Subspace modspace = Subspace::from_vectors(wb, n2);

  std::vector<Vec> all = wb;
  for (const auto& c : cocycles) all.push_back(form_to_coords(c));
  Subspace joined = Subspace::from_vectors(all, n2);
  return joined.dim() == modspace.dim() + cocycles.size();
}

}  // namespace nilext
