#pragma once

#include "nilext/cohomology.hpp"

namespace nilext {

struct ExtensionSpec {
  LieAlgebra base;
  std::vector<ExteriorForm> cocycles;  // closed 2-forms on the base
  std::vector<std::string> new_names;  // optional; defaults generated
};

struct Extension {
  LieAlgebra algebra;   // base basis first, new central vectors appended
  Matrix embedding;     // K^m -> algebra (the new central coordinates)
  Matrix projection;    // algebra -> base
};

// Bracket [(v,g),(w,h)] = (c(g,h), [g,h]). Throws on a non-closed form.
// When the base is graded and all cocycles are homogeneous, the output
// carries the extended weight layout.
Extension central_extension(const ExtensionSpec& spec);

// Replaces each cocycle by c_i + d mu_i; the result defines an isomorphic
// algebra via x -> x + mu(x) on the base coordinates.
ExtensionSpec shift_by_coboundary(const ExtensionSpec& spec, const std::vector<ExteriorForm>& mu);

// The explicit isomorphism between the extensions of spec and
// shift_by_coboundary(spec, mu), verified bracket-preserving.
Matrix coboundary_shift_isomorphism(const ExtensionSpec& spec, const std::vector<ExteriorForm>& mu);

struct ExtensionTheoremReport {
  bool filtration_s;    // set_has_filtration_s on the input
  int nil_index;        // of the constructed extension (-1 if not nilpotent)
  int ideal_dim;        // dim of the s-th lower-central-series ideal
  bool nil_index_ok;    // nil_index == s exactly when filtration_s
  bool ideal_dim_ok;    // ideal_dim == m exactly when filtration_s
};

// Builds the extension and checks both directions of the nil-index theorem
// against the filtration predicate.
ExtensionTheoremReport verify_extension_theorem(const LieAlgebra& g,
                                                const std::vector<ExteriorForm>& cocycles);

struct Roundtrip {
  LieAlgebra base;                     // quotient by the last nonzero LCS ideal
  std::vector<ExteriorForm> cocycles;  // read off as d of the dual functionals
  Matrix adapted;                      // basis change: extension coords -> original
};

// Decomposes a nilpotent non-abelian algebra as a central extension of the
// quotient by its last nonzero LCS ideal; the reconstruction equals the
// input in the adapted basis.
Roundtrip roundtrip(const LieAlgebra& g);

}  // namespace nilext
