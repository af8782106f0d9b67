#pragma once

#include "kanex/complex.hpp"

namespace kanex {

// Mapping cylinder of f: A -> B. Degree n basis [A_n | A_{n-1} | B_n],
// d(a, a~, b) = (da + a~, -d a~, db - f a~). i_src is degreewise injective and
// proj is a quasi-isomorphism with proj . i_src = f.
struct Cylinder {
  ChainComplex cyl;
  ChainMap i_src;  // A -> cyl
  ChainMap i_tgt;  // B -> cyl
  ChainMap proj;   // cyl -> B
};
Cylinder cylinder(const ChainMap& f);

// Mapping cocylinder of g: A -> B. Degree n basis [A_n | B_{n+1} | B_n],
// d(a, b~, b) = (da, g a - b - d b~, db). eval is degreewise onto, section is
// a quasi-isomorphism with eval . section = g, proj . section = id.
struct Cocylinder {
  ChainComplex cocyl;
  ChainMap section;  // A -> cocyl
  ChainMap proj;     // cocyl -> A
  ChainMap eval;     // cocyl ->> B
};
Cocylinder cocylinder(const ChainMap& g);

// Homotopy pushout corner of the span  X01 <-f1- X00 -f2-> X10, modelled as
// P = X01 (+) X00[1] (+) X10 with d(y, a~, b) = (dy + f1 a~, -d a~, db - f2 a~).
// The strict square uses Cyl(f2) in the X10 slot: from_cyl . cyl.i_src equals
// from_leg1 . f1 on the nose.
struct PushoutCorner {
  ChainComplex corner;
  ChainMap from_leg1;  // X01 -> P
  ChainMap from_tenor; // X10 -> P (basis inclusion; not a square leg by itself)
  ChainMap from_cyl;   // Cyl(f2) -> P, (a, a~, b) -> (f1 a, a~, b)
};
PushoutCorner pushout_corner(const ChainMap& f1, const ChainMap& f2);
// Map P -> T induced by legs g01: X01 -> T and g10: X10 -> T with
// g01 f1 = g10 f2; kills the X00[1] part.
ChainMap pushout_corner_out(const PushoutCorner& p, const ChainMap& g01, const ChainMap& g10);
// Functorial action on all three inputs (maps forming strict squares).
ChainMap pushout_corner_map(const PushoutCorner& p, const PushoutCorner& q, const ChainMap& m01,
                            const ChainMap& m00, const ChainMap& m10);
ChainMap cylinder_map(const Cylinder& c, const Cylinder& d, const ChainMap& msrc,
                      const ChainMap& mtgt);

// Homotopy pullback corner of the cospan X10 -f-> X11 <-g- X01, modelled as
// Q = X10 (+) X01 (+) X11[+1] with d(v, a, b~) = (dv, da, g a - f v - d b~).
// The strict square uses Cocyl(g) in the X01 slot: eval . to_cocyl = f . pi1.
struct PullbackCorner {
  ChainComplex corner;
  ChainMap pi1;       // Q -> X10
  ChainMap pi_tenor;  // Q -> X01 (basis projection; not a square leg by itself)
  ChainMap to_cocyl;  // Q -> Cocyl(g), (v, a, b~) -> (a, b~, f v)
};
PullbackCorner pullback_corner(const ChainMap& f, const ChainMap& g);
// Map S -> Q induced by h10: S -> X10, h01: S -> X01 with f h10 = g h01.
ChainMap pullback_corner_in(const PullbackCorner& q, const ChainMap& h10, const ChainMap& h01);
ChainMap pullback_corner_map(const PullbackCorner& p, const PullbackCorner& q, const ChainMap& m10,
                             const ChainMap& m01, const ChainMap& m11);
ChainMap cocylinder_map(const Cocylinder& c, const Cocylinder& d, const ChainMap& msrc,
                        const ChainMap& mtgt);

// Ordinary pushout (X01 (+) X10) / <(f1 x, -f2 x)>. Requires (f1,-f2)
// degreewise injective (checked); then it computes the homotopy pushout and
// both quotient legs commute strictly.
struct QuotientPushout {
  ChainComplex corner;
  ChainMap leg1;  // X01 -> P0
  ChainMap leg2;  // X10 -> P0
};
QuotientPushout quotient_pushout(const ChainMap& f1, const ChainMap& f2);

// Ordinary pullback {(v,b) : f v = g b}. Requires [f | g] degreewise jointly
// surjective (checked); then it computes the homotopy pullback and both
// projections commute strictly.
struct KernelPullback {
  ChainComplex corner;
  ChainMap pi1;  // Q0 -> A (source of f)
  ChainMap pi2;  // Q0 -> B (source of g)
};
KernelPullback kernel_pullback(const ChainMap& f, const ChainMap& g);

// Acyclic complex A (+) A[1] with a degreewise injection from A.
struct InjCover {
  ChainComplex cover;
  ChainMap into;  // A -> cover, degreewise injective
};
InjCover inj_cover(const ChainComplex& a);

}  // namespace kanex
