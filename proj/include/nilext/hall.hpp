#pragma once

#include "nilext/lie_algebra.hpp"

namespace nilext {

// Hall basis element over generators x1 < x2 < ...: either a generator or a
// bracket [left, right] with left > right in Hall order (degree, then
// creation index) and, when left = [a, b], b <= right.
struct HallElement {
  int degree;
  int left = -1;   // index into the basis, -1 for generators
  int right = -1;
  std::size_t gen = 0;  // generator number for degree-1 elements
  std::string name;
};

struct HallBasis {
  std::size_t generators;
  int max_degree;
  std::vector<HallElement> elements;  // grouped by degree, creation order
};

HallBasis hall_basis(std::size_t generators, int max_degree);

// Free nilpotent Lie algebra on the Hall basis; degrees give the Carnot
// layout. Throws when the dimension exceeds the cap.
LieAlgebra free_nilpotent(std::size_t generators, int nil_class, std::size_t dim_cap = 30);

}  // namespace nilext
