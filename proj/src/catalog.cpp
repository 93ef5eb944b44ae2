#include "nilext/catalog.hpp"

#include <sstream>
#include <stdexcept>

namespace nilext {
namespace catalog {

LieAlgebra abelian(std::size_t n) { return make_algebra(n); }

LieAlgebra m0(int k) {
  if (k < 1) throw std::invalid_argument("m0: need k >= 1");
  std::size_t n = static_cast<std::size_t>(k) + 1;
  LieAlgebra g = make_algebra(n);
  for (std::size_t i = 1; i < n - 1; ++i) g.set_bracket_single(0, i, i + 1, Scalar(1));
  std::vector<int> layout(n);
  layout[0] = layout[1] = 1;
  for (std::size_t j = 2; j < n; ++j) layout[j] = static_cast<int>(j);
  g.weight_layout = layout;
  return g;
}

LieAlgebra heisenberg() { return m0(2); }

LieAlgebra m1(int two_m_minus_1) {
  if (two_m_minus_1 < 5 || two_m_minus_1 % 2 == 0)
    throw std::invalid_argument("m1: need an odd argument 2m-1 with m >= 3");
  int m = (two_m_minus_1 + 1) / 2;
  std::size_t n = static_cast<std::size_t>(2 * m);
  LieAlgebra g = make_algebra(n);
  for (std::size_t i = 1; i <= n - 3; ++i)
    g.set_bracket_single(0, i, i + 1, Scalar(1));  // [e1, e_i] = e_{i+1}, i = 2..2m-2
  for (int k = 2; k <= m; ++k) {
    Scalar sign = (k % 2 == 0) ? Scalar(-1) : Scalar(1);  // (-1)^{k+1}
    g.set_bracket_single(k - 1, 2 * m - k, n - 1, sign);
  }
  std::vector<int> layout(n);
  layout[0] = layout[1] = 1;
  for (std::size_t j = 2; j < n; ++j) layout[j] = static_cast<int>(j);
  g.weight_layout = layout;
  return g;
}

LieAlgebra m2_5() {
  LieAlgebra g = make_algebra(6);
  g.set_bracket_single(0, 1, 2, Scalar(1));  // [e1,e2]=e3
  g.set_bracket_single(0, 2, 3, Scalar(1));  // [e1,e3]=e4
  g.set_bracket_single(0, 3, 4, Scalar(1));  // [e1,e4]=e5
  g.set_bracket_single(0, 4, 5, Scalar(1));  // [e1,e5]=e6
  g.set_bracket_single(1, 2, 4, Scalar(1));  // [e2,e3]=e5
  g.set_bracket_single(1, 3, 5, Scalar(1));  // [e2,e4]=e6
  g.weight_layout = std::vector<int>{1, 2, 3, 4, 5, 6};
  return g;
}

LieAlgebra l_2_3() {
  LieAlgebra g = make_algebra(5, {"a1", "b1", "a2", "a3", "b3"});
  g.set_bracket_single(0, 1, 2, Scalar(1));  // [a1,b1]=a2
  g.set_bracket_single(0, 2, 3, Scalar(1));  // [a1,a2]=a3
  g.set_bracket_single(1, 2, 4, Scalar(1));  // [b1,a2]=b3
  g.weight_layout = std::vector<int>{1, 1, 2, 3, 3};
  return g;
}

LieAlgebra l_tilde_2_4() {
  LieAlgebra g = make_algebra(7, {"a1", "b1", "a2", "a3", "b3", "a4", "b4"});
  g.set_bracket_single(0, 1, 2, Scalar(1));  // [a1,b1]=a2
  g.set_bracket_single(0, 2, 3, Scalar(1));  // [a1,a2]=a3
  g.set_bracket_single(1, 2, 4, Scalar(1));  // [b1,a2]=b3
  g.set_bracket_single(0, 3, 5, Scalar(1));  // [a1,a3]=a4
  g.set_bracket_single(0, 4, 6, Scalar(1));  // [a1,b3]=b4
  g.set_bracket_single(1, 3, 6, Scalar(1));  // [b1,a3]=b4
  g.weight_layout = std::vector<int>{1, 1, 2, 3, 3, 4, 4};
  return g;
}

std::vector<ExteriorForm> m25_h2_basis() {
  ExteriorForm omega_cap = two_form(6, 0, 5);  // e1^e6 + e2^e5
  omega_cap = add(omega_cap, two_form(6, 1, 4));
  ExteriorForm omega7 = two_form(6, 1, 4);  // e2^e5 - e3^e4
  omega7 = add(omega7, scale(Scalar(-1), two_form(6, 2, 3)));
  ExteriorForm omega5 = two_form(6, 1, 2);  // e2^e3
  return {omega_cap, omega7, omega5};
}

std::vector<ExteriorForm> l23_h2_basis() {
  ExteriorForm v1 = two_form(5, 0, 3);                      // a1^a3
  ExteriorForm v2 = add(two_form(5, 0, 4), two_form(5, 1, 3));  // a1^b3 + b1^a3
  ExteriorForm v3 = two_form(5, 1, 4);                      // b1^b3
  return {v1, v2, v3};
}

std::vector<ExteriorForm> ltilde24_h2_weight5_basis() {
  ExteriorForm u1 = two_form(7, 0, 5);                          // a1^a4
  ExteriorForm u2 = add(two_form(7, 0, 6), two_form(7, 1, 5));  // a1^b4 + b1^a4
  ExteriorForm u3 = add(two_form(7, 1, 5), scale(Scalar(-1), two_form(7, 2, 3)));  // b1^a4 - a2^a3
  ExteriorForm u4 = add(two_form(7, 1, 6), scale(Scalar(-1), two_form(7, 2, 4)));  // b1^b4 - a2^b3
  return {u1, u2, u3, u4};
}

ExteriorForm ltilde24_h2_weight4_form() { return two_form(7, 1, 4); }  // b1^b3

LieAlgebra family_g7(const Scalar& t) {
  auto basis = m25_h2_basis();
  ExteriorForm c = add(basis[0], scale(t, basis[1]));  // Omega7 + t omega7
  return central_extension({m2_5(), {c}, {"e7"}}).algebra;
}

LieAlgebra family_Lt(const Scalar& t) {
  auto u = ltilde24_h2_weight5_basis();
  // coordinates (t : 0 : 1 : 1)
  ExteriorForm c = add(add(scale(t, u[0]), u[2]), u[3]);
  return central_extension({l_tilde_2_4(), {c}, {"a5"}}).algebra;
}

LieAlgebra family_Ltilde(const Scalar& tau) {
  auto u = ltilde24_h2_weight5_basis();
  // coordinates (0 : tau : 1 : 0)
  ExteriorForm c = add(scale(tau, u[1]), u[2]);
  return central_extension({l_tilde_2_4(), {c}, {"a5"}}).algebra;
}

std::vector<NamedAlgebra> all_named() {
  std::vector<NamedAlgebra> out;
  for (std::size_t n = 1; n <= 4; ++n) out.push_back({"abelian:" + std::to_string(n), abelian(n)});
  for (int k = 2; k <= 9; ++k) out.push_back({"m0:" + std::to_string(k), m0(k)});
  for (int k = 5; k <= 9; k += 2) out.push_back({"m1:" + std::to_string(k), m1(k)});
  out.push_back({"m2_5", m2_5()});
  out.push_back({"h3+K", direct_sum(heisenberg(), abelian(1))});
  out.push_back({"l23", l_2_3()});
  out.push_back({"free:2:2", free_nilpotent(2, 2)});
  out.push_back({"free:2:3", free_nilpotent(2, 3)});
  out.push_back({"free:2:4", free_nilpotent(2, 4)});
  out.push_back({"ltilde24", l_tilde_2_4()});
  out.push_back({"g7:t=0", family_g7(frac(0))});
  out.push_back({"g7:t=1", family_g7(frac(1))});
  out.push_back({"g7:t=-1", family_g7(frac(-1))});
  out.push_back({"Lt:t=0", family_Lt(frac(0))});
  out.push_back({"Lt:t=1", family_Lt(frac(1))});
  out.push_back({"Lt:t=-2", family_Lt(frac(-2))});
  out.push_back({"Lt:t=1/8", family_Lt(frac(1, 8))});
  out.push_back({"Ltau:tau=0", family_Ltilde(frac(0))});
  out.push_back({"Ltau:tau=1", family_Ltilde(frac(1))});
  return out;
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::istringstream is(s);
  std::string p;
  while (std::getline(is, p, sep)) parts.push_back(p);
  return parts;
}

std::optional<Scalar> param_value(const std::string& part, const std::string& key) {
  auto eq = part.find('=');
  if (eq == std::string::npos || part.substr(0, eq) != key) return std::nullopt;
  return parse_scalar(part.substr(eq + 1));
}

}  // namespace

std::optional<LieAlgebra> parse_name(const std::string& name) {
  if (name == "m2_5") return m2_5();
  if (name == "h3") return heisenberg();
  if (name == "h3+K") return direct_sum(heisenberg(), abelian(1));
  if (name == "l23") return l_2_3();
  if (name == "ltilde24") return l_tilde_2_4();
  auto parts = split(name, ':');
  if (parts.empty()) return std::nullopt;
  try {
    if (parts[0] == "abelian" && parts.size() == 2) return abelian(std::stoul(parts[1]));
    if (parts[0] == "m0" && parts.size() == 2) return m0(std::stoi(parts[1]));
    if (parts[0] == "m1" && parts.size() == 2) return m1(std::stoi(parts[1]));
    if (parts[0] == "free" && parts.size() == 3)
      return free_nilpotent(std::stoul(parts[1]), std::stoi(parts[2]));
    if (parts[0] == "g7" && parts.size() == 2) {
      auto t = param_value(parts[1], "t");
      if (t) return family_g7(*t);
    }
    if (parts[0] == "Lt" && parts.size() == 2) {
      auto t = param_value(parts[1], "t");
      if (t) return family_Lt(*t);
    }
    if (parts[0] == "Ltau" && parts.size() == 2) {
      auto tau = param_value(parts[1], "tau");
      if (tau) return family_Ltilde(*tau);
    }
  } catch (const std::exception&) {
    return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace catalog
}  // namespace nilext
