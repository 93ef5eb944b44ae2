#pragma once

#include <string>

#include "nilext/rational.hpp"

namespace nilext {

enum class Field { real, complex };

// Orbit label of a nonzero class x1*Omega7 + x2*omega7 + x3*omega5 under the
// automorphism action on the projective plane. Lines are keyed by the slope
// of x2 = t x1 (t_infinite marks the line x1 = 0). Over the complex field
// the two rays merge into plus_ray.
struct M25Label {
  enum class Kind { infinity_point, line, origin, plus_ray, minus_ray } kind;
  Scalar t = Scalar(0);    // slope for Kind::line with finite slope
  bool t_infinite = false;
  Vec representative;      // canonical projective representative

  friend bool operator==(const M25Label&, const M25Label&) = default;
  std::string str() const;
};

M25Label m25_normal_form(const Vec& x, Field field);

// Orbit label of a class on the free nilpotent L(2,3): the discriminant
// x2^2 - x1 x3 classifies the action; over the complex field inside and
// outside merge into nondegenerate.
enum class L23Label { zero, parabola, inside, outside, nondegenerate };

L23Label l23_orbit_label(const Vec& x, Field field);
std::string l23_label_str(L23Label l);

// Orbit data of a weight-5 class of the 7-dimensional width-two algebra in
// the basis carrying the lower-triangular action, homogeneous coordinates
// (x1 : x2 : x3 : x4).
struct Ltilde24Label {
  enum class Kind {
    t_value,        // affine chart, off the invariant plane: complete invariant t
    parabola_orbit, // orbit of the origin inside the invariant plane
    plane_plus,     // invariant plane, positive side (real field)
    plane_minus,    // invariant plane, negative side (real field)
    inf_point,      // (1:0:0:0)
    inf_axis,       // (0:1:0:0)
    inf_line        // line at infinity with slope tau = x2/x3
  } kind;
  Scalar value = Scalar(0);  // t for t_value, tau for inf_line

  friend bool operator==(const Ltilde24Label&, const Ltilde24Label&) = default;
  std::string str() const;
};

Ltilde24Label ltilde24_invariant(const Vec& x, Field field);

enum class QuadricType { hyperbolic_paraboloid, parabolic_cylinder, elliptic_paraboloid };

// Type of the second-order surface t(z-y)^2 + y^2 + yz - x = 0: the switch
// happens exactly at t = 1/8.
QuadricType quadric_type(const Scalar& t);
std::string quadric_type_str(QuadricType q);

}  // namespace nilext
