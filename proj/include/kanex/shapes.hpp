#pragma once

#include "kanex/poset.hpp"

namespace kanex {

// The staircase poset underlying the A_n-with-relations enhancement: objects
// (0,0), the lower diagonal (x,x-1) for x = 1..n-2, the upper diagonal
// (x-1,x) for x = 1..n-2 and a top object, ordered componentwise. For n = 3
// the top is labelled (2,1); inside product shapes the generic labelling with
// top (n-2,n-2) is used instead, matching the three-dimensional coordinates.
FinPoset a_tilde(int n);
FinPoset a_tilde_generic(int n);

// a_tilde(n) enlarged by the interior object (1,1) (m = 2), then with (0,0)
// removed (m = 3) and with (0,1) removed as well (m = 4).
FinPoset k2_shape(int n, int m);

// The linear quiver A_n as a poset with objects 1 < 2 < ... < n.
FinPoset a_n_poset(int n);

// K(n,l,m) shape zoo; l = 1 gives the two-dimensional shapes, l >= 2 the
// product shapes with third coordinate in [l-1], and m = 5 the product shape
// with the (1,0,z), z >= 1, objects removed. K(3,1,4) is A_3.
FinPoset k_shape(int n, int l, int m);
bool k_shape_valid(int n, int l, int m);

// Window of the mesh category: objects (k,l) with kmin <= k <= kmax and
// 0 <= l <= n+1; (k,l) <= (k',l') iff k <= k' and k+l <= k'+l'.
FinPoset mesh_window(int n, int kmin, int kmax);

// The four-object test category of the homotopical-epimorphism counterexample
// (labels 0=a, 1=b, 2=c, 3=d) and its collapse where a and c are identified
// (poset skeleton b < a~c < d, labels 1 < 0 < 3).
FinPoset b_tilde();
FinPoset b_collapsed();

// Target of the chain-indexing map for n <= 4: integers n-1,...,0 ordered in
// reverse plus pt sitting between 2 and 1.
FinPoset ch_poset(int n);

// Staircase label helpers.
Label stair_lower(int x);                    // (x,x-1), with stair_lower(0) = (0,0)
Label stair_upper(int x);                    // (x-1,x)
Label stair_top(int n, bool generic);        // (2,1) for n = 3 unless generic
Label stair_interior();                      // (1,1)

// Named monotone maps.
MonotoneMap conn_i(int n, int l, int m);     // i^n_{l,m} of the equivalence proof
MonotoneMap conn_j(int n, int kmin, int kmax);        // A~(n,2) -> mesh window
MonotoneMap conn_i_mesh(int n, int kmin, int kmax);   // A_n -> mesh window, a -> (0,a)
MonotoneMap conn_u_map(int n);               // A~(n,2) -> ch_poset(n), n <= 4
MonotoneMap conn_f(int n, int kmin, int kmax);        // (k,l) -> (k+l, n+1-l)
MonotoneMap conn_t(int n, int kmin, int kmax);        // (k,l) -> (k-1, l)
MonotoneMap conn_collapse_v();

// Parses shape names like "A_tilde(4,2)", "K(4,2,5)", "A_n(4)", "interval(3)",
// "square", "mesh_window(3,-4,2)", "B_tilde", "B_collapsed".
FinPoset shape_by_name(const std::string& name);

}  // namespace kanex
