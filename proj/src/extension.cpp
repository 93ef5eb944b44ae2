#include "nilext/extension.hpp"

#include <stdexcept>

namespace nilext {

Extension central_extension(const ExtensionSpec& spec) {
  const LieAlgebra& b = spec.base;
  std::size_t m = spec.cocycles.size();
  if (m == 0) throw std::invalid_argument("central_extension: need at least one cocycle");
  for (const auto& c : spec.cocycles) {
    if (c.degree != 2 || c.ambient_dim != b.dim)
      throw std::invalid_argument("central_extension: cocycles must be 2-forms on the base");
    if (!differential(b, c).is_zero()) throw std::domain_error("central_extension: form is not closed");
  }

  std::size_t n = b.dim + m;
  LieAlgebra g = make_algebra(n);
  for (std::size_t i = 0; i < b.dim; ++i) g.basis_names[i] = b.basis_names[i];
  for (std::size_t l = 0; l < m; ++l)
    g.basis_names[b.dim + l] =
        l < spec.new_names.size() ? spec.new_names[l] : "z" + std::to_string(l + 1);

  for (std::size_t i = 0; i < b.dim; ++i)
    for (std::size_t j = i + 1; j < b.dim; ++j) {
      Vec v = zero_vec(n);
      Vec base_part = b.bracket_basis(i, j);
      for (std::size_t k = 0; k < b.dim; ++k) v[k] = base_part[k];
      for (std::size_t l = 0; l < m; ++l) {
        auto it = spec.cocycles[l].terms.find({i, j});
        if (it != spec.cocycles[l].terms.end()) v[b.dim + l] = it->second;
      }
      if (!is_zero_vec(v)) g.set_bracket(i, j, v);
    }

  if (b.weight_layout) {
    std::vector<int> layout(*b.weight_layout);
    bool ok = true;
    for (const auto& c : spec.cocycles) {
      auto w = weight_of_form(b, c);
      if (!w || *w <= 0) {
        ok = false;
        break;
      }
      layout.push_back(*w);
    }
    if (ok) {
      g.weight_layout = layout;
      if (!weights_consistent(g)) g.weight_layout.reset();
    }
  }

  Matrix emb(n, m);
  for (std::size_t l = 0; l < m; ++l) emb.at(b.dim + l, l) = 1;
  Matrix proj(b.dim, n);
  for (std::size_t i = 0; i < b.dim; ++i) proj.at(i, i) = 1;
  return {g, emb, proj};
}

ExtensionSpec shift_by_coboundary(const ExtensionSpec& spec, const std::vector<ExteriorForm>& mu) {
  if (mu.size() != spec.cocycles.size())
    throw std::invalid_argument("shift_by_coboundary: need one 1-form per cocycle");
  ExtensionSpec shifted(spec);
  for (std::size_t l = 0; l < mu.size(); ++l) {
    if (mu[l].degree != 1) throw std::invalid_argument("shift_by_coboundary: mu must be 1-forms");
    shifted.cocycles[l] = add(spec.cocycles[l], differential(spec.base, mu[l]));
  }
  return shifted;
}

Matrix coboundary_shift_isomorphism(const ExtensionSpec& spec, const std::vector<ExteriorForm>& mu) {
  // f(v, x) = (v + mu(x), x) maps the shifted extension to the original one.
  Extension orig = central_extension(spec);
  Extension shif = central_extension(shift_by_coboundary(spec, mu));
  std::size_t nb = spec.base.dim, m = spec.cocycles.size(), n = nb + m;
  Matrix f = Matrix::identity(n);
  for (std::size_t l = 0; l < m; ++l)
    for (std::size_t j = 0; j < nb; ++j) {
      auto it = mu[l].terms.find({j});
      if (it != mu[l].terms.end()) f.at(nb + l, j) = it->second;
    }
  if (!is_homomorphism(shif.algebra, orig.algebra, f))
    throw std::logic_error("coboundary_shift_isomorphism: map failed verification");
  return f;
}

ExtensionTheoremReport verify_extension_theorem(const LieAlgebra& g,
                                                const std::vector<ExteriorForm>& cocycles) {
  auto s_base = nil_index(g);
  if (!s_base) throw std::domain_error("verify_extension_theorem: base not nilpotent");
  int s = *s_base + 1;
  std::size_t m = cocycles.size();

  ExtensionTheoremReport rep{};
  rep.filtration_s = set_has_filtration_s(g, cocycles, s);

  Extension ext = central_extension({g, cocycles, {}});
  auto series = lower_central_series(ext.algebra);
  auto ni = nil_index(ext.algebra);
  rep.nil_index = ni ? *ni : -1;
  rep.ideal_dim =
      static_cast<int>(s < static_cast<int>(series.size()) ? series[s - 1].dim() : 0);
  bool raised = (rep.nil_index == s);
  bool full = (rep.ideal_dim == static_cast<int>(m));
  rep.nil_index_ok = (raised == rep.filtration_s);
  rep.ideal_dim_ok = ((raised && full) == rep.filtration_s);
  return rep;
}

Roundtrip roundtrip(const LieAlgebra& g) {
  if (!is_nilpotent(g)) throw std::domain_error("roundtrip: not nilpotent");
  if (is_abelian(g)) throw std::domain_error("roundtrip: abelian input has no canonical ideal");
  auto series = lower_central_series(g);
  const Subspace& last = series[series.size() - 2];  // last nonzero ideal

  Quotient q = quotient(g, last);
  std::size_t nb = q.algebra.dim, m = last.dim();

  // cocycle l reads off the l-th ideal coordinate of [lift_i, lift_j]
  std::vector<ExteriorForm> cocycles(m, zero_form(2, nb));
  std::vector<Vec> lift_basis;
  for (std::size_t a = 0; a < nb; ++a) {
    Vec v = zero_vec(g.dim);
    v[q.lift[a]] = 1;
    lift_basis.push_back(v);
  }
  for (std::size_t a = 0; a < nb; ++a)
    for (std::size_t b = a + 1; b < nb; ++b) {
      Vec br = bracket(g, lift_basis[a], lift_basis[b]);
      // subtract the complement part, express the rest in the ideal basis
      Vec comp = mat_vec(q.projection, br);
      Vec ideal_part(br);
      for (std::size_t r = 0; r < nb; ++r) ideal_part[q.lift[r]] -= comp[r];
      auto coords = last.coordinates(ideal_part);
      if (!coords) throw std::logic_error("roundtrip: bracket not split by ideal");
      for (std::size_t l = 0; l < m; ++l)
        if ((*coords)[l] != 0) cocycles[l].add_term({a, b}, (*coords)[l]);
    }

  // adapted basis: extension coordinates (complement then ideal) -> original
  Matrix adapted(g.dim, g.dim);
  for (std::size_t a = 0; a < nb; ++a) adapted.at(q.lift[a], a) = 1;
  for (std::size_t l = 0; l < m; ++l) {
    Vec v = last.basis_vector(l);
    for (std::size_t k = 0; k < g.dim; ++k) adapted.at(k, nb + l) = v[k];
  }

  Extension rebuilt = central_extension({q.algebra, cocycles, {}});
  if (!is_homomorphism(rebuilt.algebra, g, adapted))
    throw std::logic_error("roundtrip: reconstruction mismatch");

  return {q.algebra, cocycles, adapted};
}

}  // namespace nilext
