#pragma once

#include "kanex/pipeline.hpp"

namespace kanex {

struct MeshReport {
  bool vanishing_ok = false;
  bool squares_ok = false;
  bool i_restrict_ok = false;   // restriction along i_n recovers x pointwise
  bool j_matches_g_ok = false;  // restriction along j^n matches g_n(x) pointwise
  int verified_squares = 0;
  int unverified_squares = 0;  // squares needing objects beyond the window
  MembershipReport membership;
  bool pass() const { return vanishing_ok && squares_ok && i_restrict_ok && j_matches_g_ok; }
  std::string summary() const;
};

struct MeshResult {
  Diagram window;  // the constructed coherent diagram on the mesh window
  MeshReport report;
};

// Performs the four Kan-extension stages of the coherent mesh construction
// restricted to the window: right extension by zero onto the boundary rows,
// quotient pushouts rightwards, left extension by zero, kernel pullbacks
// leftwards. Then checks the exactness conditions and the commutative
// triangle against g_n.
MeshResult mesh_build_and_check(int n, const Diagram& x, int kmin, int kmax);

// Just the window construction, without checks.
Diagram mesh_extend(int n, const Diagram& x, int kmin, int kmax);

}  // namespace kanex
