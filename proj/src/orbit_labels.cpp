#include "nilext/orbit_labels.hpp"

#include <stdexcept>

#include "nilext/matrix.hpp"

namespace nilext {

std::string M25Label::str() const {
  switch (kind) {
    case Kind::infinity_point:
      return "infinity-point(1:0:0)";
    case Kind::line:
      return t_infinite ? "line(t=inf)" : "line(t=" + scalar_str(t) + ")";
    case Kind::origin:
      return "origin(0:0:1)";
    case Kind::plus_ray:
      return "plus-ray(1:0:1)";
    case Kind::minus_ray:
      return "minus-ray(-1:0:1)";
  }
  return "?";
}

M25Label m25_normal_form(const Vec& x, Field field) {
  if (x.size() != 3) throw std::invalid_argument("m25_normal_form: need 3 coordinates");
  if (is_zero_vec(x)) throw std::domain_error("m25_normal_form: zero vector");
  const Scalar &x1 = x[0], &x2 = x[1], &x3 = x[2];
  M25Label l{};
  if (x2 != 0) {
    l.kind = M25Label::Kind::line;
    if (x1 != 0) {
      l.t = x2 / x1;
      l.representative = {Scalar(1), l.t, Scalar(0)};
    } else {
      l.t_infinite = true;
      l.representative = {Scalar(0), Scalar(1), Scalar(0)};
    }
    return l;
  }
  if (x1 == 0) {  // (0 : 0 : x3)
    l.kind = M25Label::Kind::origin;
    l.representative = {Scalar(0), Scalar(0), Scalar(1)};
    return l;
  }
  if (x3 == 0) {  // (x1 : 0 : 0)
    l.kind = M25Label::Kind::infinity_point;
    l.representative = {Scalar(1), Scalar(0), Scalar(0)};
    return l;
  }
  // (x1 : 0 : x3): the ray is classified by the sign of x1/x3, which only
  // changes by squares under the action
  Scalar ratio = x1 / x3;
  if (field == Field::complex || sgn(ratio) > 0) {
    l.kind = M25Label::Kind::plus_ray;
    l.representative = {Scalar(1), Scalar(0), Scalar(1)};
  } else {
    l.kind = M25Label::Kind::minus_ray;
    l.representative = {Scalar(-1), Scalar(0), Scalar(1)};
  }
  return l;
}

L23Label l23_orbit_label(const Vec& x, Field field) {
  if (x.size() != 3) throw std::invalid_argument("l23_orbit_label: need 3 coordinates");
  if (is_zero_vec(x)) return L23Label::zero;
  Scalar disc = x[1] * x[1] - x[0] * x[2];
  if (disc == 0) return L23Label::parabola;
  if (field == Field::complex) return L23Label::nondegenerate;
  return sgn(disc) < 0 ? L23Label::inside : L23Label::outside;
}

std::string l23_label_str(L23Label l) {
  switch (l) {
    case L23Label::zero:
      return "zero";
    case L23Label::parabola:
      return "parabola";
    case L23Label::inside:
      return "inside";
    case L23Label::outside:
      return "outside";
    case L23Label::nondegenerate:
      return "nondegenerate";
  }
  return "?";
}

std::string Ltilde24Label::str() const {
  switch (kind) {
    case Kind::t_value:
      return "t=" + scalar_str(value);
    case Kind::parabola_orbit:
      return "parabola-orbit";
    case Kind::plane_plus:
      return "plane-plus";
    case Kind::plane_minus:
      return "plane-minus";
    case Kind::inf_point:
      return "infinity(1:0:0:0)";
    case Kind::inf_axis:
      return "infinity(0:1:0:0)";
    case Kind::inf_line:
      return "infinity-line(tau=" + scalar_str(value) + ")";
  }
  return "?";
}

Ltilde24Label ltilde24_invariant(const Vec& x, Field field) {
  if (x.size() != 4) throw std::invalid_argument("ltilde24_invariant: need 4 coordinates");
  if (is_zero_vec(x)) throw std::domain_error("ltilde24_invariant: zero vector");
  const Scalar &x1 = x[0], &x2 = x[1], &x3 = x[2], &x4 = x[3];
  Ltilde24Label l{};
  if (x4 != 0) {
    Scalar ax = x1 / x4, ay = x2 / x4, az = x3 / x4;
    if (ay != az) {
      l.kind = Ltilde24Label::Kind::t_value;
      l.value = (ax - ay * ay - ay * az) / ((az - ay) * (az - ay));
      return l;
    }
    Scalar u = ax - 2 * ay * ay;  // position against the parabola x = 2 y^2
    if (u == 0) {
      l.kind = Ltilde24Label::Kind::parabola_orbit;
    } else if (field == Field::complex || sgn(u) > 0) {
      l.kind = Ltilde24Label::Kind::plane_plus;
    } else {
      l.kind = Ltilde24Label::Kind::plane_minus;
    }
    return l;
  }
  // plane at infinity: x2 and x3 transform by a common scalar
  if (x2 == 0 && x3 == 0) {
    l.kind = Ltilde24Label::Kind::inf_point;
    return l;
  }
  if (x3 == 0) {
    l.kind = Ltilde24Label::Kind::inf_axis;
    return l;
  }
  l.kind = Ltilde24Label::Kind::inf_line;
  l.value = x2 / x3;
  return l;
}

QuadricType quadric_type(const Scalar& t) {
  // determinant of the quadratic part in (y, z): 2t - 1/4
  Scalar det = 2 * t - frac(1, 4);
  if (det < 0) return QuadricType::hyperbolic_paraboloid;
  if (det == 0) return QuadricType::parabolic_cylinder;
  return QuadricType::elliptic_paraboloid;
}

std::string quadric_type_str(QuadricType q) {
  switch (q) {
    case QuadricType::hyperbolic_paraboloid:
      return "hyperbolic-paraboloid";
    case QuadricType::parabolic_cylinder:
      return "parabolic-cylinder";
    case QuadricType::elliptic_paraboloid:
      return "elliptic-paraboloid";
  }
  return "?";
}

}  // namespace nilext
