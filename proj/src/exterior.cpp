#include "nilext/exterior.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace nilext {

namespace {

// Sorts idx ascending; returns 0 on repeated index, else the permutation sign.
int sort_sign(std::vector<std::size_t>& idx) {
  int sign = 1;
  for (std::size_t i = 1; i < idx.size(); ++i)
    for (std::size_t j = i; j > 0 && idx[j - 1] >= idx[j]; --j) {
      if (idx[j - 1] == idx[j]) return 0;
      std::swap(idx[j - 1], idx[j]);
      sign = -sign;
    }
  return sign;
}

}  // namespace

void ExteriorForm::add_term(std::vector<std::size_t> idx, const Scalar& c) {
  if (c == 0) return;
  if (static_cast<int>(idx.size()) != degree) throw std::invalid_argument("add_term: wrong arity");
  std::vector<std::size_t> key(idx);
  int sign = sort_sign(key);
  if (sign == 0) return;
  for (auto i : key)
    if (i >= ambient_dim) throw std::invalid_argument("add_term: index out of range");
  auto it = terms.find(key);
  Scalar v = (it == terms.end() ? Scalar(0) : it->second) + (sign > 0 ? c : -c);
  if (v == 0) {
    if (it != terms.end()) terms.erase(it);
  } else {
    terms[key] = v;
  }
}

ExteriorForm zero_form(int degree, std::size_t n) {
  ExteriorForm w;
  w.degree = degree;
  w.ambient_dim = n;
  return w;
}

ExteriorForm one_form(std::size_t n, std::size_t i) {
  ExteriorForm w = zero_form(1, n);
  w.add_term({i}, Scalar(1));
  return w;
}

ExteriorForm two_form(std::size_t n, std::size_t i, std::size_t j) {
  ExteriorForm w = zero_form(2, n);
  w.add_term({i, j}, Scalar(1));
  return w;
}

ExteriorForm add(const ExteriorForm& a, const ExteriorForm& b) {
  if (a.degree != b.degree || a.ambient_dim != b.ambient_dim)
    throw std::invalid_argument("form add: shape mismatch");
  ExteriorForm r(a);
  for (const auto& [idx, c] : b.terms) r.add_term(idx, c);
  return r;
}

ExteriorForm scale(const Scalar& c, const ExteriorForm& a) {
  ExteriorForm r = zero_form(a.degree, a.ambient_dim);
  if (c == 0) return r;
  for (const auto& [idx, v] : a.terms) r.terms[idx] = c * v;
  return r;
}

ExteriorForm wedge(const ExteriorForm& a, const ExteriorForm& b) {
  if (a.ambient_dim != b.ambient_dim) throw std::invalid_argument("wedge: ambient mismatch");
  ExteriorForm r = zero_form(a.degree + b.degree, a.ambient_dim);
  for (const auto& [ia, ca] : a.terms)
    for (const auto& [ib, cb] : b.terms) {
      std::vector<std::size_t> idx(ia);
      idx.insert(idx.end(), ib.begin(), ib.end());
      r.add_term(idx, ca * cb);
    }
  return r;
}

Scalar eval(const ExteriorForm& w, const std::vector<Vec>& args) {
  if (static_cast<int>(args.size()) != w.degree) throw std::invalid_argument("eval: wrong arity");
  Scalar total(0);
  for (const auto& [idx, c] : w.terms) {
    // det of the p x p matrix M_{rs} = e^{idx_r}(args_s)
    std::size_t p = idx.size();
    Matrix m(p, p);
    for (std::size_t r = 0; r < p; ++r)
      for (std::size_t s = 0; s < p; ++s) m.at(r, s) = args[s][idx[r]];
    total += c * determinant(m);
  }
  return total;
}

const std::vector<std::vector<std::size_t>>& p_tuples(std::size_t n, int p) {
  static std::map<std::pair<std::size_t, int>, std::vector<std::vector<std::size_t>>> cache;
  auto key = std::make_pair(n, p);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  std::vector<std::vector<std::size_t>> out;
  if (p == 0) {
    out.push_back({});
  } else if (p <= static_cast<int>(n)) {
    std::vector<std::size_t> t(p);
    for (int i = 0; i < p; ++i) t[i] = i;
    for (;;) {
      out.push_back(t);
      int i = p - 1;
      while (i >= 0 && t[i] == n - p + i) --i;
      if (i < 0) break;
      ++t[i];
      for (int j = i + 1; j < p; ++j) t[j] = t[j - 1] + 1;
    }
  }
  return cache.emplace(key, std::move(out)).first->second;
}

std::size_t tuple_index(std::size_t n, int p, const std::vector<std::size_t>& t) {
  const auto& all = p_tuples(n, p);
  auto it = std::lower_bound(all.begin(), all.end(), t);
  if (it == all.end() || *it != t) throw std::invalid_argument("tuple_index: bad tuple");
  return static_cast<std::size_t>(it - all.begin());
}

Vec form_to_coords(const ExteriorForm& w) {
  const auto& all = p_tuples(w.ambient_dim, w.degree);
  Vec v = zero_vec(all.size());
  for (const auto& [idx, c] : w.terms) v[tuple_index(w.ambient_dim, w.degree, idx)] = c;
  return v;
}

ExteriorForm form_from_coords(int degree, std::size_t n, const Vec& coords) {
  const auto& all = p_tuples(n, degree);
  if (coords.size() != all.size()) throw std::invalid_argument("form_from_coords: bad length");
  ExteriorForm w = zero_form(degree, n);
  for (std::size_t i = 0; i < all.size(); ++i)
    if (coords[i] != 0) w.terms[all[i]] = coords[i];
  return w;
}

ExteriorForm differential(const LieAlgebra& g, const ExteriorForm& w) {
  if (w.ambient_dim != g.dim) throw std::invalid_argument("differential: ambient mismatch");
  ExteriorForm r = zero_form(w.degree + 1, g.dim);
  for (const auto& [idx, c] : w.terms) {
    for (std::size_t t = 0; t < idx.size(); ++t) {
      Scalar sign_c = (t % 2 == 0) ? c : -c;
      // d e^{idx_t} = sum_{i<j} c_{ij}^{idx_t} e^i ^ e^j
      for (const auto& [ij, coeffs] : g.brackets) {
        const Scalar& sc = coeffs[idx[t]];
        if (sc == 0) continue;
        std::vector<std::size_t> mono;
        mono.reserve(idx.size() + 1);
        for (std::size_t s = 0; s < idx.size(); ++s)
          if (s != t) mono.push_back(idx[s]);
        mono.push_back(ij.first);
        mono.push_back(ij.second);
        // (-1)^{t} moves d e^{idx_t} to the front; the two new factors stay
        // in place of the removed one, so the net prefactor is (-1)^{t-1}
        // in 1-based position terms, i.e. sign_c above.
        r.add_term(std::move(mono), sign_c * sc);
      }
    }
  }
  return r;
}

Matrix differential_matrix(const LieAlgebra& g, int p) {
  const auto& dom = p_tuples(g.dim, p);
  const auto& cod = p_tuples(g.dim, p + 1);
  Matrix m(cod.size(), dom.size());
  for (std::size_t j = 0; j < dom.size(); ++j) {
    ExteriorForm w = zero_form(p, g.dim);
    w.terms[dom[j]] = 1;
    ExteriorForm dw = differential(g, w);
    for (const auto& [idx, c] : dw.terms) m.at(tuple_index(g.dim, p + 1, idx), j) = c;
  }
  return m;
}

std::optional<int> weight_of_form(const LieAlgebra& g, const ExteriorForm& w) {
  if (!g.weight_layout) throw std::domain_error("weight_of_form: no layout");
  std::optional<int> weight;
  for (const auto& [idx, c] : w.terms) {
    int s = 0;
    for (auto i : idx) s += (*g.weight_layout)[i];
    if (weight && *weight != s) return std::nullopt;  // inhomogeneous
    weight = s;
  }
  if (!weight) return 0;  // zero form: weight 0 by convention
  return weight;
}

std::string form_str(const ExteriorForm& w, const std::vector<std::string>& names) {
  if (w.terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [idx, c] : w.terms) {
    if (!first) os << (sgn(c) >= 0 ? " + " : " - ");
    if (first && sgn(c) < 0) os << "-";
    first = false;
    Scalar a = abs(c);
    if (a != 1 || idx.empty()) os << scalar_str(a) << "*";
    for (std::size_t t = 0; t < idx.size(); ++t) {
      if (t) os << "^";
      os << names[idx[t]];
    }
  }
  return os.str();
}

}  // namespace nilext
