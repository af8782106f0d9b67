#include "doctest.h"
#include "kanex/complex.hpp"
#include "kanex/models.hpp"

using namespace kanex;

namespace {

const FieldSpec F = make_field(32003);

ChainComplex stalk(int degree, int dim = 1, FieldSpec f = F) {
  return ChainComplex(f, degree, {dim}, {});
}

// k --id--> k in degrees 1, 0.
ChainComplex disk(FieldSpec f = F) {
  Matrix d(f, 1, 1);
  d.set(0, 0, 1);
  return ChainComplex(f, 0, {1, 1}, {{1, d}});
}

}  // namespace

TEST_CASE("homology of basic complexes") {
  CHECK(stalk(0).homology_dims() == std::map<int, int>{{0, 1}});
  CHECK(disk().is_acyclic());
  // k^2 -[1 0]-> k in degrees 1, 0: H_1 = 1, H_0 = 0.
  Matrix d(F, 1, 2);
  d.set(0, 0, 1);
  ChainComplex c(F, 0, {1, 2}, {{1, d}});
  CHECK(c.homology_dims() == std::map<int, int>{{1, 1}});
}

TEST_CASE("cone of identity is acyclic; cone of zero map splits") {
  ChainComplex k0 = stalk(0);
  CHECK(cone(ChainMap::identity(k0)).cone.is_acyclic());
  ChainMap z = ChainMap::zero(k0, k0);
  CHECK(cone(z).cone.homology_dims() == std::map<int, int>{{0, 1}, {1, 1}});
  // cone of 0 -> C is C.
  ChainComplex zero(F);
  ChainMap inc = ChainMap::zero(zero, k0);
  CHECK(cone(inc).cone.homology_dims() == k0.homology_dims());
}

TEST_CASE("shift translates homology and squares differentials") {
  ChainComplex c = disk();
  CHECK(c.shifted(0).homology_dims() == c.homology_dims());
  CHECK(stalk(0).shifted(1).homology_dims() == std::map<int, int>{{1, 1}});
  ChainComplex s2 = c.shifted(2);
  CHECK(s2.lo() == 2);
  CHECK(s2.is_acyclic());
}

TEST_CASE("direct sum adds homology degreewise") {
  auto s = direct_sum({stalk(0), stalk(2), disk()});
  CHECK(s.sum.homology_dims() == std::map<int, int>{{0, 1}, {2, 1}});
  CHECK(s.injections.size() == 3);
  // Euler characteristic additivity through cone: chi(cone f) = chi(Y) - chi(X).
  ChainMap f = ChainMap::zero(stalk(0), disk());
  CHECK(euler_characteristic(cone(f).cone) ==
        euler_characteristic(disk()) - euler_characteristic(stalk(0)));
}

TEST_CASE("quasi-isomorphism via both routes") {
  ChainComplex k0 = stalk(0);
  CHECK(is_quasi_iso(ChainMap::identity(k0)));
  ChainComplex zero(F);
  CHECK(is_quasi_iso(ChainMap::zero(zero, disk())));  // qis onto acyclic
  // projection X (+) A -> X with A acyclic is a qis
  auto s = direct_sum({k0, disk()});
  CHECK(is_quasi_iso(s.projections[0]));
  CHECK(!is_quasi_iso(ChainMap::zero(k0, k0)));
}

TEST_CASE("null homotopy exists exactly when expected") {
  ChainComplex k0 = stalk(0);
  auto h0 = null_homotopy(ChainMap::zero(k0, k0));
  REQUIRE(h0.has_value());
  ChainComplex dd = disk();
  auto h1 = null_homotopy(ChainMap::identity(dd));
  REQUIRE(h1.has_value());
  // verify f = dh + hd
  const auto& h = *h1;
  for (int n = dd.lo(); n <= dd.hi(); ++n) {
    Matrix lhs = ChainMap::identity(dd).component(n);
    Matrix rhs = Matrix::zeros(F, dd.dim(n), dd.dim(n));
    auto hn = h.find(n);
    if (hn != h.end()) rhs = rhs + dd.d(n + 1) * hn->second;
    auto hn1 = h.find(n - 1);
    if (hn1 != h.end()) rhs = rhs + hn1->second * dd.d(n);
    CHECK(lhs == rhs);
  }
  CHECK(!null_homotopy(ChainMap::identity(k0)).has_value());
}

TEST_CASE("cylinder, cocylinder and corner models") {
  ChainComplex a = disk();
  ChainComplex b = stalk(0);
  auto s = direct_sum({a, b});
  ChainMap f = s.projections[1];  // (disk + k) -> k... source is the sum
  Cylinder cy = cylinder(f);
  CHECK(is_quasi_iso(cy.proj));
  CHECK(compose(cy.proj, cy.i_src).equals(f));
  Cocylinder cc = cocylinder(f);
  CHECK(is_quasi_iso(cc.proj));
  CHECK(compose(cc.eval, cc.section).equals(f));
  CHECK(compose(cc.proj, cc.section).equals(ChainMap::identity(f.source())));

  // inj_cover and acyclic_cover
  InjCover ic = inj_cover(a);
  CHECK(ic.cover.is_acyclic());
  AcyclicCover ac = acyclic_cover(b);
  CHECK(ac.cover.is_acyclic());
  // onto is degreewise surjective
  CHECK(ac.onto.component(0).rank() == b.dim(0));
}

TEST_CASE("quotient pushout and kernel pullback model homotopy (co)limits") {
  // span k <-id- k -into-> inj_cover(k): pushout ~ cofiber(into) ~ k[1]-ish?
  ChainComplex k0 = stalk(0);
  InjCover ic = inj_cover(k0);
  QuotientPushout qp = quotient_pushout(ChainMap::identity(k0), ic.into);
  // hpo of (k <- k -> acyclic) ~ acyclic-glued = cofiber of identity-ish: compute both ways
  PushoutCorner pc = pushout_corner(ChainMap::identity(k0), ic.into);
  CHECK(qp.corner.homology_dims() == pc.corner.homology_dims());
  // strict square on the quotient legs
  CHECK(compose(qp.leg1, ChainMap::identity(k0)).equals(compose(qp.leg2, ic.into)));

  // cospan with a surjective leg: kernel pullback ~ homotopy pullback
  AcyclicCover ac = acyclic_cover(k0);
  KernelPullback kp = kernel_pullback(ChainMap::identity(k0), ac.onto);
  PullbackCorner qc = pullback_corner(ChainMap::identity(k0), ac.onto);
  CHECK(kp.corner.homology_dims() == qc.corner.homology_dims());
  CHECK(compose(ChainMap::identity(k0), kp.pi1).equals(compose(ac.onto, kp.pi2)));
}
