#pragma once

#include "kanex/diagram.hpp"
#include "kanex/models.hpp"

namespace kanex {

// Totalization of the normalized simplicial replacement over the strict
// chains of a full subposet of x.shape(): in auxiliary degree s the sum over
// chains p_0 < ... < p_s of X(p_0), face 0 applying the diagram arrow, inner
// faces deleting vertices, plus (-1)^s times the internal differential.
struct HocolimResult {
  ChainComplex total;
  std::vector<ChainMap> canonical;  // X_p -> total, one per subposet object
};
HocolimResult hocolim_over(const Diagram& x, const std::vector<int>& subposet);
HocolimResult hocolim(const Diagram& x);

// Dual cobar totalization: in auxiliary degree s the sum over chains of
// X(p_s) placed in total degree (internal - s).
struct HolimResult {
  ChainComplex total;
  std::vector<ChainMap> canonical;  // total -> X_p
};
HolimResult holim_over(const Diagram& x, const std::vector<int>& subposet);
HolimResult holim(const Diagram& x);

enum class KanSide { Left, Right };

// Pointwise homotopy Kan extension along u. Left: value at b is the bar
// totalization over the slice {a : u(a) <= b}; right dually. When the sieve
// kind matches the side, image values are copied verbatim and the complement
// is literally zero (extension by zero).
Diagram kan_extend(KanSide side, const MonotoneMap& u, const Diagram& x);

// Natural comparison maps for fully faithful u, realizing the (co)unit
// quasi-isomorphism checks at chain level:
//   left:  counit-style augmentation  u^*(u_! x) -> x
//   right: unit-style coaugmentation  x -> u^*(u_* x)
DiagramMap left_kan_comparison(const MonotoneMap& u, const Diagram& x, const Diagram& extended);
DiagramMap right_kan_comparison(const MonotoneMap& u, const Diagram& x, const Diagram& extended);

struct SquareRef {
  Label x00, x10, x01, x11;
};

// Cone of the comparison map from the homotopy pushout of the punctured
// square to its actual corner; acyclic iff the square is cocartesian.
ChainComplex total_cofiber(const SquareRef& sq, const Diagram& x);
// Dual; acyclic iff the square is cartesian.
ChainComplex total_fiber(const SquareRef& sq, const Diagram& x);

// Decides bicartesianness via total_cofiber acyclicity; in audit mode (the
// default) the dual total_fiber decision is computed too and must agree.
bool is_bicartesian(const SquareRef& sq, const Diagram& x, bool audit = true);

void validate_square(const SquareRef& sq, const FinPoset& shape);

}  // namespace kanex
