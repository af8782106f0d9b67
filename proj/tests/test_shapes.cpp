#include <set>

#include "doctest.h"
#include "kanex/shapes.hpp"

using namespace kanex;

namespace {
std::set<Label> object_set(const FinPoset& p) {
  return std::set<Label>(p.objects().begin(), p.objects().end());
}
}  // namespace

TEST_CASE("staircase shapes") {
  FinPoset a32 = a_tilde(3);
  CHECK(object_set(a32) ==
        std::set<Label>{Label::of(0, 0), Label::of(1, 0), Label::of(0, 1), Label::of(2, 1)});
  CHECK(a32.leq(Label::of(0, 1), Label::of(2, 1)));
  CHECK(!a32.leq(Label::of(1, 0), Label::of(0, 1)));

  FinPoset a42 = a_tilde(4);
  CHECK(a42.size() == 6);
  CHECK(a42.contains(Label::of(1, 2)));
  CHECK(a42.contains(Label::of(2, 2)));
  for (int n = 3; n <= 6; ++n) CHECK(a_tilde(n).size() == 2 * (n - 1));

  // generic labelling used inside products
  CHECK(a_tilde_generic(3).contains(Label::of(1, 1)));
}

TEST_CASE("K shapes") {
  CHECK(k_shape(4, 1, 2).size() == 7);
  CHECK(k_shape(4, 1, 3).size() == 6);
  CHECK(k_shape(4, 1, 4).size() == 5);
  CHECK(k_shape(4, 2, 1).size() == 8);
  CHECK(k_shape(4, 2, 2).size() == 10);
  CHECK(object_set(k_shape(4, 2, 5)) ==
        std::set<Label>{Label::of(1, 0, 0), Label::of(1, 1, 0), Label::of(1, 1, 1),
                        Label::of(2, 1, 0), Label::of(2, 1, 1)});
  // K(3,1,4) is the chain A_3
  CHECK(k_shape(3, 1, 4) == a_n_poset(3));
  CHECK(!k_shape_valid(3, 1, 5));
  CHECK(!k_shape_valid(4, 3, 1));
  CHECK(k_shape_valid(5, 3, 5));
}

TEST_CASE("mesh window order agrees with cover closure") {
  FinPoset m = mesh_window(3, -2, 1);
  // reachability via moves (0,+1) and (+1,-1) equals the leq formula
  auto reach = [&](int a, int b) {
    std::vector<bool> seen(m.size(), false);
    std::vector<int> stack = {a};
    seen[a] = true;
    while (!stack.empty()) {
      int cur = stack.back();
      stack.pop_back();
      if (cur == b) return true;
      const Label& l = m.label(cur);
      for (const Label& nxt : {Label::of(l.c[0], l.c[1] + 1), Label::of(l.c[0] + 1, l.c[1] - 1)}) {
        int i = m.index(nxt);
        if (i >= 0 && !seen[i]) {
          seen[i] = true;
          stack.push_back(i);
        }
      }
    }
    return false;
  };
  for (int a = 0; a < m.size(); ++a)
    for (int b = 0; b < m.size(); ++b) CHECK(m.leq(a, b) == reach(a, b));
}

TEST_CASE("connector values match the displayed formulas") {
  CHECK(conn_i(4, 2, 5).apply(Label::of(1, 1, 0)) == Label::of(2));
  CHECK(conn_i(4, 2, 5).apply(Label::of(1, 0, 0)) == Label::of(1));
  CHECK(conn_i(4, 2, 5).apply(Label::of(2, 1, 1)) == Label::of(4));
  CHECK(conn_f(4, -2, 2).apply(Label::of(0, 1)) == Label::of(1, 4));
  CHECK(conn_t(4, -2, 2).apply(Label::of(0, 1)) == Label::of(-1, 1));
  CHECK(conn_u_map(4).apply(Label::of(0, 0)) == Label::of(3));
  CHECK(conn_u_map(4).apply(Label::of(0, 1)) == Label::point());
  CHECK(conn_u_map(3).apply(Label::of(1, 0)) == Label::of(1));

  // fourth-step epimorphism
  MonotoneMap i14 = conn_i(4, 1, 4);
  CHECK(i14.apply(Label::of(0, 0, 0)) == Label::of(1, 0));
  CHECK(i14.apply(Label::of(0, 0, 1)) == Label::of(1, 1));
  CHECK(i14.apply(Label::of(1, 1, 1)) == Label::of(2, 2));
  CHECK(i14.is_surjective());

  // sixth-step maps for n = 5
  MonotoneMap i25 = conn_i(5, 2, 5);
  CHECK(i25.apply(Label::of(0, 0, 0)) == Label::of(1, 0, 0));
  CHECK(i25.apply(Label::of(0, 0, 1)) == Label::of(1, 1, 0));
  CHECK(i25.apply(Label::of(1, 0, 2)) == Label::of(2, 1, 1));
  CHECK(i25.is_surjective());
  MonotoneMap i24 = conn_i(5, 2, 4);
  CHECK(i24.apply(Label::of(1, 0, 1)) == Label::of(1, 0, 0));
  CHECK(i24.apply(Label::of(1, 1, 1)) == Label::of(1, 1, 1));
}

TEST_CASE("mesh embeddings agree with the worked examples") {
  MonotoneMap j4 = conn_j(4, -4, 1);
  CHECK(j4.apply(Label::of(0, 0)) == Label::of(-3, 1));
  CHECK(j4.apply(Label::of(1, 0)) == Label::of(-3, 4));
  CHECK(j4.apply(Label::of(0, 1)) == Label::of(-2, 0));
  CHECK(j4.apply(Label::of(1, 2)) == Label::of(-2, 5));
  CHECK(j4.apply(Label::of(2, 1)) == Label::of(0, 1));
  CHECK(j4.apply(Label::of(2, 2)) == Label::of(0, 4));

  MonotoneMap j3 = conn_j(3, -4, 2);
  CHECK(j3.apply(Label::of(0, 0)) == Label::of(-2, 3));
  CHECK(j3.apply(Label::of(1, 0)) == Label::of(0, 1));
  CHECK(j3.apply(Label::of(0, 1)) == Label::of(-2, 4));
  CHECK(j3.apply(Label::of(2, 1)) == Label::of(0, 3));

  CHECK_THROWS(conn_j(4, -1, 1));  // window too small

  MonotoneMap i3 = conn_i_mesh(3, -4, 2);
  CHECK(i3.apply(Label::of(2)) == Label::of(0, 2));
}

TEST_CASE("mesh symmetries commute") {
  for (int n : {3, 4}) {
    MonotoneMap f = conn_f(n, -3, 1);
    MonotoneMap t_after = conn_t(n, -3, 1 + n + 1);
    MonotoneMap t = conn_t(n, -3, 1);
    MonotoneMap f_after = conn_f(n, -4, 0);
    MonotoneMap ft = compose(t_after, f);
    MonotoneMap tf = compose(f_after, t);
    for (int i = 0; i < f.source().size(); ++i)
      CHECK(ft.apply(f.source().label(i)) == tf.apply(f.source().label(i)));
  }
}

TEST_CASE("collapse functor and its slice at d") {
  MonotoneMap v = conn_collapse_v();
  CHECK(v.apply(Label::of(2)) == Label::of(0));
  auto s = slice(v, v.apply(Label::of(3)), SliceSide::Under);
  CHECK(s.poset == b_tilde());
}

TEST_CASE("shape names parse") {
  CHECK(shape_by_name("A_tilde(4,2)") == a_tilde(4));
  CHECK(shape_by_name("K(4,2,5)") == k_shape(4, 2, 5));
  CHECK(shape_by_name("A_n(5)") == a_n_poset(5));
  CHECK(shape_by_name("square").size() == 4);
  CHECK(shape_by_name("mesh_window(3,-4,2)") == mesh_window(3, -4, 2));
  CHECK_THROWS(shape_by_name("nonsense(1)"));
}

TEST_CASE("u_map is rejected for n >= 5") { CHECK_THROWS(conn_u_map(5)); }
