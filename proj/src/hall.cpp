#include "nilext/hall.hpp"

#include <functional>
#include <stdexcept>

namespace nilext {

HallBasis hall_basis(std::size_t generators, int max_degree) {
  if (generators < 1 || max_degree < 1) throw std::invalid_argument("hall_basis: bad parameters");
  HallBasis hb{generators, max_degree, {}};
  for (std::size_t i = 0; i < generators; ++i) {
    HallElement e;
    e.degree = 1;
    e.gen = i;
    e.name = std::string(1, static_cast<char>('a' + (i % 26))) + "1";
    hb.elements.push_back(e);
  }
  for (int d = 2; d <= max_degree; ++d) {
    std::size_t count_before = hb.elements.size();
    for (std::size_t u = 0; u < count_before; ++u)
      for (std::size_t v = 0; v < count_before; ++v) {
        const HallElement& eu = hb.elements[u];
        const HallElement& ev = hb.elements[v];
        if (eu.degree + ev.degree != d) continue;
        if (u <= v) continue;  // Hall: left strictly greater in creation order
        if (eu.left >= 0 && static_cast<std::size_t>(eu.right) > v) continue;
        HallElement e;
        e.degree = d;
        e.left = static_cast<int>(u);
        e.right = static_cast<int>(v);
        e.name = "[" + eu.name + "," + ev.name + "]";
        hb.elements.push_back(e);
      }
  }
  return hb;
}

LieAlgebra free_nilpotent(std::size_t generators, int nil_class, std::size_t dim_cap) {
  if (generators < 2 || nil_class < 1) throw std::invalid_argument("free_nilpotent: need m >= 2, c >= 1");
  HallBasis hb = hall_basis(generators, nil_class);
  std::size_t n = hb.elements.size();
  if (n > dim_cap) throw std::domain_error("free_nilpotent: dimension cap exceeded");

  LieAlgebra g = make_algebra(n);
  for (std::size_t i = 0; i < n; ++i) g.basis_names[i] = hb.elements[i].name;
  std::vector<int> layout(n);
  for (std::size_t i = 0; i < n; ++i) layout[i] = hb.elements[i].degree;

  // creation index of the Hall pair (u, v), if it is a basis element
  std::map<std::pair<int, int>, std::size_t> pair_index;
  for (std::size_t i = 0; i < n; ++i)
    if (hb.elements[i].left >= 0) pair_index[{hb.elements[i].left, hb.elements[i].right}] = i;

  // bracket of two basis elements, expanded into the Hall basis by the
  // classical rewriting: for u > v with u = [a, b] and b > v,
  // [u, v] = [[a, v], b] + [a, [b, v]] (Jacobi), recursing on smaller data.
  std::map<std::pair<std::size_t, std::size_t>, Vec> memo;
  std::function<Vec(std::size_t, std::size_t)> expand = [&](std::size_t u, std::size_t v) -> Vec {
    if (u == v) return zero_vec(n);
    if (u < v) return scale(Scalar(-1), expand(v, u));
    auto it = memo.find({u, v});
    if (it != memo.end()) return it->second;
    Vec result = zero_vec(n);
    if (hb.elements[u].degree + hb.elements[v].degree > nil_class) {
      memo[{u, v}] = result;
      return result;
    }
    auto pi = pair_index.find({static_cast<int>(u), static_cast<int>(v)});
    if (pi != pair_index.end()) {
      result[pi->second] = 1;
    } else {
      // u must be composite here with right component b > v
      int a = hb.elements[u].left, b = hb.elements[u].right;
      if (a < 0) throw std::logic_error("free_nilpotent: generator pair missing from basis");
      // expand [[a,v],b] bilinearly
      Vec av = expand(static_cast<std::size_t>(a), v);
      for (std::size_t k = 0; k < n; ++k)
        if (av[k] != 0) result = add(result, scale(av[k], expand(k, static_cast<std::size_t>(b))));
      Vec bv = expand(static_cast<std::size_t>(b), v);
      for (std::size_t k = 0; k < n; ++k)
        if (bv[k] != 0) result = add(result, scale(bv[k], expand(static_cast<std::size_t>(a), k)));
      // result = [[a,v],b] + [a,[b,v]] = -[v,[a,b]] = [u,v]
    }
    memo[{u, v}] = result;
    return result;
  };

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vec v = expand(j, i);  // [e_j, e_i] with j > i in creation order
      if (!is_zero_vec(v)) g.set_bracket(i, j, scale(Scalar(-1), v));
    }
  g.weight_layout = layout;

  if (!check_jacobi(g).empty()) throw std::logic_error("free_nilpotent: Jacobi failed");
  return g;
}

}  // namespace nilext
