#include "kanex/mesh.hpp"

#include <sstream>
#include <stdexcept>

namespace kanex {

std::string MeshReport::summary() const {
  std::ostringstream os;
  os << (pass() ? "mesh window checks pass" : "mesh window checks FAIL") << ": vanishing "
     << (vanishing_ok ? "ok" : "FAIL") << ", " << verified_squares << " squares "
     << (squares_ok ? "bicartesian" : "FAIL") << " (" << unverified_squares
     << " unverified at the window edge), i_n-restriction "
     << (i_restrict_ok ? "recovers the input" : "FAILS") << ", j^n-restriction "
     << (j_matches_g_ok ? "matches g_n" : "FAILS");
  return os.str();
}

Diagram mesh_extend(int n, const Diagram& x, int kmin, int kmax) {
  if (x.shape() != a_n_poset(n)) throw std::invalid_argument("mesh_extend expects a diagram on A_n");
  if (kmin > -1 || kmax < 1)
    throw std::invalid_argument("window too small: need kmin <= -1 and kmax >= 1");
  const FieldSpec f = x.field();
  const FinPoset shape = mesh_window(n, kmin, kmax);
  std::vector<ChainComplex> vals(shape.size(), ChainComplex(f));
  std::map<std::pair<int, int>, ChainMap> arr;  // (m1/m2 cover maps by index)
  auto idx = [&](int k, int l) { return shape.index_checked(Label::of(k, l)); };
  auto put = [&](int k1, int l1, int k2, int l2, ChainMap m) {
    arr.emplace(std::make_pair(idx(k1, l1), idx(k2, l2)), std::move(m));
  };
  // Column 0: the filtration itself, extended by zero onto rows 0 and n+1.
  for (int l = 1; l <= n; ++l) vals[idx(0, l)] = x.at(Label::of(l));
  for (int l = 1; l < n; ++l) put(0, l, 0, l + 1, x.arrow(Label::of(l), Label::of(l + 1)));
  put(0, 0, 0, 1, ChainMap::zero(vals[idx(0, 0)], vals[idx(0, 1)]));
  put(0, n, 0, n + 1, ChainMap::zero(vals[idx(0, n)], vals[idx(0, n + 1)]));
  // Rightwards: quotient pushouts along degreewise-injective second legs.
  for (int k = 1; k <= kmax; ++k) {
    InjCover pad = inj_cover(vals[idx(k - 1, 1)]);
    vals[idx(k, 0)] = pad.cover;
    put(k - 1, 1, k, 0, pad.into);
    for (int l = 1; l <= n; ++l) {
      const ChainMap f1 = arr.at({idx(k - 1, l), idx(k - 1, l + 1)});
      const ChainMap f2 = arr.at({idx(k - 1, l), idx(k, l - 1)});
      QuotientPushout po = quotient_pushout(f1, f2);
      vals[idx(k, l)] = po.corner;
      put(k - 1, l + 1, k, l, po.leg1);
      put(k, l - 1, k, l, po.leg2);
    }
    put(k, n, k, n + 1, ChainMap::zero(vals[idx(k, n)], vals[idx(k, n + 1)]));
  }
  // Leftwards: kernel pullbacks along degreewise-onto second legs.
  for (int k = -1; k >= kmin; --k) {
    AcyclicCover pad = acyclic_cover(vals[idx(k + 1, n)]);
    vals[idx(k, n + 1)] = pad.cover;
    put(k, n + 1, k + 1, n, pad.onto);
    for (int l = n; l >= 1; --l) {
      const ChainMap phi = arr.at({idx(k, l + 1), idx(k + 1, l)});
      const ChainMap gam = arr.at({idx(k + 1, l - 1), idx(k + 1, l)});
      KernelPullback pb = kernel_pullback(phi, gam);
      vals[idx(k, l)] = pb.corner;
      put(k, l, k, l + 1, pb.pi1);
      put(k, l, k + 1, l - 1, pb.pi2);
    }
    put(k, 0, k, 1, ChainMap::zero(vals[idx(k, 0)], vals[idx(k, 1)]));
  }
  return Diagram::make(shape, std::move(vals), std::move(arr), false);
}

MeshResult mesh_build_and_check(int n, const Diagram& x, int kmin, int kmax) {
  // The window must contain the staircase embedding and the filtration column
  // with one column of margin.
  MonotoneMap j = conn_j(n, kmin, kmax);  // throws "window too small" if it escapes
  int jmin = 0, jmax = 0;
  for (const auto& l : j.source().objects()) {
    const Label im = j.apply(l);
    jmin = std::min(jmin, im.c[0]);
    jmax = std::max(jmax, im.c[0]);
  }
  if (kmin > jmin - 1 || kmax < jmax + 1)
    throw std::invalid_argument("window too small: need one column of margin around the image");
  MeshResult r{mesh_extend(n, x, kmin, kmax), {}};
  SubderivatorSpec spec = spec_mesh_ex(n, kmin, kmax);
  MembershipReport rep = is_member(spec, r.window);
  r.report.vanishing_ok = true;
  r.report.squares_ok = true;
  for (const auto& c : rep.conditions) {
    if (c.kind == "vanishing") r.report.vanishing_ok = r.report.vanishing_ok && c.ok;
    if (c.kind == "bicartesian") {
      r.report.squares_ok = r.report.squares_ok && c.ok;
      ++r.report.verified_squares;
    }
  }
  r.report.unverified_squares = n;  // the squares needing the column kmax+1
  r.report.membership = std::move(rep);
  Diagram via_i = restrict_diagram(conn_i_mesh(n, kmin, kmax), r.window);
  r.report.i_restrict_ok = pointwise_same_homology(via_i, x);
  Diagram via_j = restrict_diagram(j, r.window);
  r.report.j_matches_g_ok = pointwise_same_homology(via_j, g_n(n, x));
  return r;
}

}  // namespace kanex
