#include "kanex/models.hpp"

#include <stdexcept>

namespace kanex {

namespace {

struct Triple {
  // Helper for three-summand graded pieces with per-degree offsets.
  const ChainComplex* a;
  int shift_a;  // degree offset: part contributes a->dim(n - shift_a) in degree n
  const ChainComplex* b;
  int shift_b;
  const ChainComplex* c;
  int shift_c;

  int dim(int n) const { return a->dim(n - shift_a) + b->dim(n - shift_b) + c->dim(n - shift_c); }
  int off_b(int n) const { return a->dim(n - shift_a); }
  int off_c(int n) const { return a->dim(n - shift_a) + b->dim(n - shift_b); }
};

void put_block(Matrix& m, const Matrix& blk, int roff, int coff, bool negate = false) {
  m.insert_block(blk, roff, coff, negate);
}

}  // namespace

Cylinder cylinder(const ChainMap& f) {
  const ChainComplex& a = f.source();
  const ChainComplex& b = f.target();
  const FieldSpec fld = a.field();
  Triple t{&a, 0, &a, 1, &b, 0};
  int lo = std::min({a.lo(), a.lo() + 1, b.lo()});
  int hi = std::max({a.hi(), a.hi() + 1, b.hi()});
  std::vector<int> dims;
  for (int n = lo; n <= hi; ++n) dims.push_back(t.dim(n));
  std::map<int, Matrix> diffs;
  for (int n = lo + 1; n <= hi; ++n) {
    const int r = t.dim(n - 1), c = t.dim(n);
    if (r == 0 || c == 0) continue;
    Matrix m(fld, r, c);
    put_block(m, a.d(n), 0, 0);                                   // da
    for (int i = 0; i < a.dim(n - 1); ++i) m.set(i, t.off_b(n) + i, 1);  // +a~
    put_block(m, a.d(n - 1), t.off_b(n - 1), t.off_b(n), true);   // -d a~
    put_block(m, b.d(n), t.off_c(n - 1), t.off_c(n));             // db
    put_block(m, f.component(n - 1), t.off_c(n - 1), t.off_b(n), true);  // -f a~
    diffs.emplace(n, std::move(m));
  }
  ChainComplex cyl(fld, lo, dims, std::move(diffs));
  auto part_map = [&](const ChainComplex& src, int shift, int which) {
    std::map<int, Matrix> comps;
    for (int n = lo; n <= hi; ++n) {
      const int sd = src.dim(n - shift);
      if (sd == 0 || cyl.dim(n) == 0) continue;
      Matrix m(fld, cyl.dim(n), sd);
      const int off = which == 0 ? 0 : (which == 1 ? t.off_b(n) : t.off_c(n));
      for (int i = 0; i < sd; ++i) m.set(off + i, i, 1);
      comps.emplace(n, std::move(m));
    }
    return comps;
  };
  ChainMap i_src(a, cyl, part_map(a, 0, 0), false);
  ChainMap i_tgt(b, cyl, part_map(b, 0, 2), false);
  std::map<int, Matrix> proj;
  for (int n = lo; n <= hi; ++n) {
    if (b.dim(n) == 0 || cyl.dim(n) == 0) continue;
    Matrix m(fld, b.dim(n), cyl.dim(n));
    put_block(m, f.component(n), 0, 0);  // f on the A part
    for (int i = 0; i < b.dim(n); ++i) m.set(i, t.off_c(n) + i, 1);
    proj.emplace(n, std::move(m));
  }
  return Cylinder{cyl, std::move(i_src), std::move(i_tgt), ChainMap(cyl, b, std::move(proj), false)};
}

Cocylinder cocylinder(const ChainMap& g) {
  const ChainComplex& a = g.source();
  const ChainComplex& b = g.target();
  const FieldSpec fld = a.field();
  Triple t{&a, 0, &b, -1, &b, 0};
  int lo = std::min({a.lo(), b.lo() - 1, b.lo()});
  int hi = std::max({a.hi(), b.hi() - 1, b.hi()});
  std::vector<int> dims;
  for (int n = lo; n <= hi; ++n) dims.push_back(t.dim(n));
  std::map<int, Matrix> diffs;
  for (int n = lo + 1; n <= hi; ++n) {
    const int r = t.dim(n - 1), c = t.dim(n);
    if (r == 0 || c == 0) continue;
    Matrix m(fld, r, c);
    put_block(m, a.d(n), 0, 0);                                        // da
    put_block(m, g.component(n), t.off_b(n - 1), 0);                   // +g a
    for (int i = 0; i < b.dim(n); ++i) m.set(t.off_b(n - 1) + i, t.off_c(n) + i, 1);
    // the b~ slot holds B_{n+1}; -b and -d b~ rows:
    put_block(m, b.d(n + 1), t.off_b(n - 1), t.off_b(n), true);        // -d b~
    put_block(m, b.d(n), t.off_c(n - 1), t.off_c(n));                  // db
    diffs.emplace(n, std::move(m));
  }
  // Fix sign of the "-b" entry: rewrite with -1 instead of +1.
  for (auto& [n, m] : diffs) {
    for (int i = 0; i < b.dim(n); ++i) {
      m.set(t.off_b(n - 1) + i, t.off_c(n) + i, -1);
    }
  }
  ChainComplex cocyl(fld, lo, dims, std::move(diffs));
  std::map<int, Matrix> sec, proj, eval;
  for (int n = lo; n <= hi; ++n) {
    const int cd = cocyl.dim(n);
    if (cd == 0) continue;
    if (a.dim(n)) {
      Matrix ms(fld, cd, a.dim(n));
      for (int i = 0; i < a.dim(n); ++i) ms.set(i, i, 1);
      put_block(ms, g.component(n), t.off_c(n), 0);
      sec.emplace(n, std::move(ms));
      Matrix mp(fld, a.dim(n), cd);
      for (int i = 0; i < a.dim(n); ++i) mp.set(i, i, 1);
      proj.emplace(n, std::move(mp));
    }
    if (b.dim(n)) {
      Matrix me(fld, b.dim(n), cd);
      for (int i = 0; i < b.dim(n); ++i) me.set(i, t.off_c(n) + i, 1);
      eval.emplace(n, std::move(me));
    }
  }
  return Cocylinder{cocyl, ChainMap(a, cocyl, std::move(sec), false),
                    ChainMap(cocyl, a, std::move(proj), false),
                    ChainMap(cocyl, b, std::move(eval), false)};
}

PushoutCorner pushout_corner(const ChainMap& f1, const ChainMap& f2) {
  const ChainComplex& x00 = f1.source();
  const ChainComplex& x01 = f1.target();
  const ChainComplex& x10 = f2.target();
  if (!f2.source().same_node(x00) && f2.source().total_dim() != x00.total_dim())
    throw std::invalid_argument("pushout_corner: span legs must share the root");
  const FieldSpec fld = x00.field();
  Triple t{&x01, 0, &x00, 1, &x10, 0};
  int lo = std::min({x01.lo(), x00.lo() + 1, x10.lo()});
  int hi = std::max({x01.hi(), x00.hi() + 1, x10.hi()});
  std::vector<int> dims;
  for (int n = lo; n <= hi; ++n) dims.push_back(t.dim(n));
  std::map<int, Matrix> diffs;
  for (int n = lo + 1; n <= hi; ++n) {
    const int r = t.dim(n - 1), c = t.dim(n);
    if (r == 0 || c == 0) continue;
    Matrix m(fld, r, c);
    put_block(m, x01.d(n), 0, 0);                                   // dy
    put_block(m, f1.component(n - 1), 0, t.off_b(n));               // +f1 a~
    put_block(m, x00.d(n - 1), t.off_b(n - 1), t.off_b(n), true);   // -d a~
    put_block(m, x10.d(n), t.off_c(n - 1), t.off_c(n));             // db
    put_block(m, f2.component(n - 1), t.off_c(n - 1), t.off_b(n), true);  // -f2 a~
    diffs.emplace(n, std::move(m));
  }
  ChainComplex p(fld, lo, dims, std::move(diffs));
  auto include_part = [&](const ChainComplex& src, int which) {
    std::map<int, Matrix> comps;
    for (int n = lo; n <= hi; ++n) {
      if (src.dim(n) == 0 || p.dim(n) == 0) continue;
      Matrix m(fld, p.dim(n), src.dim(n));
      const int off = which == 0 ? 0 : t.off_c(n);
      for (int i = 0; i < src.dim(n); ++i) m.set(off + i, i, 1);
      comps.emplace(n, std::move(m));
    }
    return comps;
  };
  ChainMap from_leg1(x01, p, include_part(x01, 0), false);
  ChainMap from_tenor(x10, p, include_part(x10, 1), false);
  // from_cyl needs the actual cylinder object; built on demand.
  Cylinder cy = cylinder(f2);
  std::map<int, Matrix> fc;
  for (int n = lo; n <= hi; ++n) {
    if (cy.cyl.dim(n) == 0 || p.dim(n) == 0) continue;
    Matrix m(fld, p.dim(n), cy.cyl.dim(n));
    // (a, a~, b) -> (f1 a, a~, b)
    put_block(m, f1.component(n), 0, 0);
    for (int i = 0; i < x00.dim(n - 1); ++i) m.set(t.off_b(n) + i, x00.dim(n) + i, 1);
    for (int i = 0; i < x10.dim(n); ++i) m.set(t.off_c(n) + i, x00.dim(n) + x00.dim(n - 1) + i, 1);
    fc.emplace(n, std::move(m));
  }
  ChainMap from_cyl(cy.cyl, p, std::move(fc), false);
  return PushoutCorner{p, std::move(from_leg1), std::move(from_tenor), std::move(from_cyl)};
}

ChainMap pushout_corner_out(const PushoutCorner& p, const ChainMap& g01, const ChainMap& g10) {
  const ChainComplex& x01 = g01.source();
  const ChainComplex& x10 = g10.source();
  const ChainComplex& tgt = g01.target();
  const FieldSpec fld = tgt.field();
  std::map<int, Matrix> comps;
  for (int n = p.corner.lo(); n <= p.corner.hi(); ++n) {
    if (p.corner.dim(n) == 0 || tgt.dim(n) == 0) continue;
    Matrix m(fld, tgt.dim(n), p.corner.dim(n));
    put_block(m, g01.component(n), 0, 0);
    put_block(m, g10.component(n), 0, p.corner.dim(n) - x10.dim(n));
    (void)x01;
    comps.emplace(n, std::move(m));
  }
  return ChainMap(p.corner, tgt, std::move(comps), false);
}

ChainMap pushout_corner_map(const PushoutCorner& p, const PushoutCorner& q, const ChainMap& m01,
                            const ChainMap& m00, const ChainMap& m10) {
  const FieldSpec fld = p.corner.field();
  std::map<int, Matrix> comps;
  for (int n = p.corner.lo(); n <= p.corner.hi(); ++n) {
    if (p.corner.dim(n) == 0 || q.corner.dim(n) == 0) continue;
    Matrix m(fld, q.corner.dim(n), p.corner.dim(n));
    const int p01 = m01.source().dim(n), p00 = m00.source().dim(n - 1);
    const int q01 = m01.target().dim(n), q00 = m00.target().dim(n - 1);
    put_block(m, m01.component(n), 0, 0);
    put_block(m, m00.component(n - 1), q01, p01);
    put_block(m, m10.component(n), q01 + q00, p01 + p00);
    comps.emplace(n, std::move(m));
  }
  return ChainMap(p.corner, q.corner, std::move(comps), false);
}

ChainMap cylinder_map(const Cylinder& c, const Cylinder& d, const ChainMap& msrc,
                      const ChainMap& mtgt) {
  const FieldSpec fld = c.cyl.field();
  std::map<int, Matrix> comps;
  for (int n = c.cyl.lo(); n <= c.cyl.hi(); ++n) {
    if (c.cyl.dim(n) == 0 || d.cyl.dim(n) == 0) continue;
    Matrix m(fld, d.cyl.dim(n), c.cyl.dim(n));
    const int ca = msrc.source().dim(n), ca1 = msrc.source().dim(n - 1);
    const int da = msrc.target().dim(n), da1 = msrc.target().dim(n - 1);
    put_block(m, msrc.component(n), 0, 0);
    put_block(m, msrc.component(n - 1), da, ca);
    put_block(m, mtgt.component(n), da + da1, ca + ca1);
    comps.emplace(n, std::move(m));
  }
  return ChainMap(c.cyl, d.cyl, std::move(comps), false);
}

PullbackCorner pullback_corner(const ChainMap& f, const ChainMap& g) {
  const ChainComplex& x10 = f.source();
  const ChainComplex& x01 = g.source();
  const ChainComplex& x11 = f.target();
  const FieldSpec fld = x11.field();
  Triple t{&x10, 0, &x01, 0, &x11, -1};
  int lo = std::min({x10.lo(), x01.lo(), x11.lo() - 1});
  int hi = std::max({x10.hi(), x01.hi(), x11.hi() - 1});
  std::vector<int> dims;
  for (int n = lo; n <= hi; ++n) dims.push_back(t.dim(n));
  std::map<int, Matrix> diffs;
  for (int n = lo + 1; n <= hi; ++n) {
    const int r = t.dim(n - 1), c = t.dim(n);
    if (r == 0 || c == 0) continue;
    Matrix m(fld, r, c);
    put_block(m, x10.d(n), 0, 0);
    put_block(m, x01.d(n), t.off_b(n - 1), t.off_b(n));
    put_block(m, f.component(n), t.off_c(n - 1), 0, true);          // -f v
    put_block(m, g.component(n), t.off_c(n - 1), t.off_b(n));       // +g a
    put_block(m, x11.d(n + 1), t.off_c(n - 1), t.off_c(n), true);   // -d b~
    diffs.emplace(n, std::move(m));
  }
  ChainComplex q(fld, lo, dims, std::move(diffs));
  std::map<int, Matrix> p1, pt;
  for (int n = lo; n <= hi; ++n) {
    if (q.dim(n) == 0) continue;
    if (x10.dim(n)) {
      Matrix m(fld, x10.dim(n), q.dim(n));
      for (int i = 0; i < x10.dim(n); ++i) m.set(i, i, 1);
      p1.emplace(n, std::move(m));
    }
    if (x01.dim(n)) {
      Matrix m(fld, x01.dim(n), q.dim(n));
      for (int i = 0; i < x01.dim(n); ++i) m.set(i, t.off_b(n) + i, 1);
      pt.emplace(n, std::move(m));
    }
  }
  Cocylinder cc = cocylinder(g);
  std::map<int, Matrix> tc;
  for (int n = lo; n <= hi; ++n) {
    if (q.dim(n) == 0 || cc.cocyl.dim(n) == 0) continue;
    Matrix m(fld, cc.cocyl.dim(n), q.dim(n));
    // (v, a, b~) -> (a, b~, f v)
    for (int i = 0; i < x01.dim(n); ++i) m.set(i, t.off_b(n) + i, 1);
    for (int i = 0; i < x11.dim(n + 1); ++i) m.set(x01.dim(n) + i, t.off_c(n) + i, 1);
    put_block(m, f.component(n), x01.dim(n) + x11.dim(n + 1), 0);
    tc.emplace(n, std::move(m));
  }
  return PullbackCorner{q, ChainMap(q, x10, std::move(p1), false),
                        ChainMap(q, x01, std::move(pt), false),
                        ChainMap(q, cc.cocyl, std::move(tc), false)};
}

ChainMap pullback_corner_in(const PullbackCorner& q, const ChainMap& h10, const ChainMap& h01) {
  const ChainComplex& s = h10.source();
  const FieldSpec fld = s.field();
  const ChainComplex& x10 = h10.target();
  std::map<int, Matrix> comps;
  for (int n = s.lo(); n <= s.hi(); ++n) {
    if (s.dim(n) == 0 || q.corner.dim(n) == 0) continue;
    Matrix m(fld, q.corner.dim(n), s.dim(n));
    put_block(m, h10.component(n), 0, 0);
    put_block(m, h01.component(n), x10.dim(n), 0);
    comps.emplace(n, std::move(m));
  }
  return ChainMap(s, q.corner, std::move(comps), false);
}

ChainMap pullback_corner_map(const PullbackCorner& p, const PullbackCorner& q, const ChainMap& m10,
                             const ChainMap& m01, const ChainMap& m11) {
  const FieldSpec fld = p.corner.field();
  std::map<int, Matrix> comps;
  for (int n = p.corner.lo(); n <= p.corner.hi(); ++n) {
    if (p.corner.dim(n) == 0 || q.corner.dim(n) == 0) continue;
    Matrix m(fld, q.corner.dim(n), p.corner.dim(n));
    const int pa = m10.source().dim(n), pb = m01.source().dim(n);
    const int qa = m10.target().dim(n), qb = m01.target().dim(n);
    put_block(m, m10.component(n), 0, 0);
    put_block(m, m01.component(n), qa, pa);
    put_block(m, m11.component(n + 1), qa + qb, pa + pb);
    comps.emplace(n, std::move(m));
  }
  return ChainMap(p.corner, q.corner, std::move(comps), false);
}

ChainMap cocylinder_map(const Cocylinder& c, const Cocylinder& d, const ChainMap& msrc,
                        const ChainMap& mtgt) {
  const FieldSpec fld = c.cocyl.field();
  std::map<int, Matrix> comps;
  for (int n = c.cocyl.lo(); n <= c.cocyl.hi(); ++n) {
    if (c.cocyl.dim(n) == 0 || d.cocyl.dim(n) == 0) continue;
    Matrix m(fld, d.cocyl.dim(n), c.cocyl.dim(n));
    const int ca = msrc.source().dim(n), cb1 = mtgt.source().dim(n + 1);
    const int da = msrc.target().dim(n), db1 = mtgt.target().dim(n + 1);
    put_block(m, msrc.component(n), 0, 0);
    put_block(m, mtgt.component(n + 1), da, ca);
    put_block(m, mtgt.component(n), da + db1, ca + cb1);
    comps.emplace(n, std::move(m));
  }
  return ChainMap(c.cocyl, d.cocyl, std::move(comps), false);
}

QuotientPushout quotient_pushout(const ChainMap& f1, const ChainMap& f2) {
  const ChainComplex& x00 = f1.source();
  const ChainComplex& x01 = f1.target();
  const ChainComplex& x10 = f2.target();
  const FieldSpec fld = x00.field();
  const int lo = std::min(x01.lo(), x10.lo());
  const int hi = std::max(x01.hi(), x10.hi());
  // Relation embedding W_n = im( (f1, -f2) ) in V_n = X01_n (+) X10_n; pick a
  // coordinate complement per degree by pivoting [W | I].
  std::vector<std::vector<int>> comp_cols(hi - lo + 1);
  std::vector<Matrix> proj(hi - lo + 1, Matrix());  // V_n -> quotient coords
  std::vector<int> qdims(hi - lo + 1, 0);
  for (int n = lo; n <= hi; ++n) {
    const int vd = x01.dim(n) + x10.dim(n);
    if (vd == 0) continue;
    Matrix w(fld, vd, x00.dim(n));
    put_block(w, f1.component(n), 0, 0);
    put_block(w, f2.component(n), x01.dim(n), 0, true);
    if (x00.dim(n) > 0 && w.rank() != x00.dim(n))
      throw std::logic_error("quotient_pushout: span legs are not jointly injective");
    Matrix wi(fld, vd, x00.dim(n) + vd);
    put_block(wi, w, 0, 0);
    for (int i = 0; i < vd; ++i) wi.set(i, x00.dim(n) + i, 1);
    std::vector<int> pivots = wi.pivot_columns();
    std::vector<int> comp;
    for (int p : pivots)
      if (p >= x00.dim(n)) comp.push_back(p - x00.dim(n));
    comp_cols[n - lo] = comp;
    qdims[n - lo] = static_cast<int>(comp.size());
    // projection: solve [W | C] t = v, take the C-part.
    Matrix wc(fld, vd, x00.dim(n) + static_cast<int>(comp.size()));
    put_block(wc, w, 0, 0);
    for (size_t k = 0; k < comp.size(); ++k) wc.set(comp[k], x00.dim(n) + static_cast<int>(k), 1);
    auto sol = wc.solve(Matrix::identity(fld, vd));
    if (!sol) throw std::logic_error("quotient_pushout: complement solve failed");
    proj[n - lo] = sol->submatrix(x00.dim(n), x00.dim(n) + static_cast<int>(comp.size()), 0, vd);
  }
  auto include_coords = [&](int n) {
    const int vd = x01.dim(n) + x10.dim(n);
    Matrix inc(fld, vd, qdims[n - lo]);
    for (size_t k = 0; k < comp_cols[n - lo].size(); ++k) inc.set(comp_cols[n - lo][k], static_cast<int>(k), 1);
    return inc;
  };
  std::map<int, Matrix> diffs;
  for (int n = lo + 1; n <= hi; ++n) {
    if (qdims[n - lo] == 0 || qdims[n - 1 - lo] == 0) continue;
    Matrix dv(fld, x01.dim(n - 1) + x10.dim(n - 1), x01.dim(n) + x10.dim(n));
    put_block(dv, x01.d(n), 0, 0);
    put_block(dv, x10.d(n), x01.dim(n - 1), x01.dim(n));
    diffs.emplace(n, proj[n - 1 - lo] * (dv * include_coords(n)));
  }
  std::vector<int> dims(qdims.begin(), qdims.end());
  ChainComplex p0(fld, lo, dims, std::move(diffs));
  std::map<int, Matrix> l1, l2;
  for (int n = lo; n <= hi; ++n) {
    if (p0.dim(n) == 0) continue;
    if (x01.dim(n)) {
      Matrix inc(fld, x01.dim(n) + x10.dim(n), x01.dim(n));
      for (int i = 0; i < x01.dim(n); ++i) inc.set(i, i, 1);
      l1.emplace(n, proj[n - lo] * inc);
    }
    if (x10.dim(n)) {
      Matrix inc(fld, x01.dim(n) + x10.dim(n), x10.dim(n));
      for (int i = 0; i < x10.dim(n); ++i) inc.set(x01.dim(n) + i, i, 1);
      l2.emplace(n, proj[n - lo] * inc);
    }
  }
  return QuotientPushout{p0, ChainMap(x01, p0, std::move(l1), false),
                         ChainMap(x10, p0, std::move(l2), false)};
}

KernelPullback kernel_pullback(const ChainMap& f, const ChainMap& g) {
  const ChainComplex& a = f.source();
  const ChainComplex& b = g.source();
  const ChainComplex& z = f.target();
  const FieldSpec fld = a.field();
  const int lo = std::min(a.lo(), b.lo());
  const int hi = std::max(a.hi(), b.hi());
  std::vector<Matrix> basis(hi - lo + 1, Matrix());  // columns span ker in A (+) B coords
  std::vector<int> qdims(hi - lo + 1, 0);
  for (int n = lo; n <= hi; ++n) {
    const int vd = a.dim(n) + b.dim(n);
    if (vd == 0) continue;
    Matrix m(fld, z.dim(n), vd);
    put_block(m, f.component(n), 0, 0);
    put_block(m, g.component(n), 0, a.dim(n), true);
    if (z.dim(n) > 0) {
      Matrix joint(fld, z.dim(n), vd);
      put_block(joint, f.component(n), 0, 0);
      put_block(joint, g.component(n), 0, a.dim(n));
      if (joint.rank() != z.dim(n))
        throw std::logic_error("kernel_pullback: cospan legs are not jointly surjective");
    }
    basis[n - lo] = m.nullspace();
    qdims[n - lo] = basis[n - lo].cols();
  }
  std::map<int, Matrix> diffs;
  for (int n = lo + 1; n <= hi; ++n) {
    if (qdims[n - lo] == 0 || qdims[n - 1 - lo] == 0) continue;
    Matrix dv(fld, a.dim(n - 1) + b.dim(n - 1), a.dim(n) + b.dim(n));
    put_block(dv, a.d(n), 0, 0);
    put_block(dv, b.d(n), a.dim(n - 1), a.dim(n));
    auto sol = basis[n - 1 - lo].solve(dv * basis[n - lo]);
    if (!sol) throw std::logic_error("kernel_pullback: kernel not closed under d");
    diffs.emplace(n, std::move(*sol));
  }
  std::vector<int> dims(qdims.begin(), qdims.end());
  ChainComplex q0(fld, lo, dims, std::move(diffs));
  std::map<int, Matrix> p1, p2;
  for (int n = lo; n <= hi; ++n) {
    if (q0.dim(n) == 0) continue;
    if (a.dim(n)) p1.emplace(n, basis[n - lo].submatrix(0, a.dim(n), 0, q0.dim(n)));
    if (b.dim(n)) p2.emplace(n, basis[n - lo].submatrix(a.dim(n), a.dim(n) + b.dim(n), 0, q0.dim(n)));
  }
  return KernelPullback{q0, ChainMap(q0, a, std::move(p1), false),
                        ChainMap(q0, b, std::move(p2), false)};
}

InjCover inj_cover(const ChainComplex& a) {
  // C = A (+) A[1], d(x, x~) = (dx + x~, -d x~); x -> (x, 0) is injective and
  // C is contractible.
  const FieldSpec fld = a.field();
  if (a.lo() > a.hi()) {
    ChainComplex z(fld);
    return InjCover{z, ChainMap::zero(a, z)};
  }
  const int lo = a.lo(), hi = a.hi() + 1;
  std::vector<int> dims;
  for (int n = lo; n <= hi; ++n) dims.push_back(a.dim(n) + a.dim(n - 1));
  std::map<int, Matrix> diffs;
  for (int n = lo + 1; n <= hi; ++n) {
    const int r = a.dim(n - 1) + a.dim(n - 2), c = a.dim(n) + a.dim(n - 1);
    if (r == 0 || c == 0) continue;
    Matrix m(fld, r, c);
    put_block(m, a.d(n), 0, 0);
    for (int i = 0; i < a.dim(n - 1); ++i) m.set(i, a.dim(n) + i, 1);
    put_block(m, a.d(n - 1), a.dim(n - 1), a.dim(n), true);
    diffs.emplace(n, std::move(m));
  }
  ChainComplex c(fld, lo, dims, std::move(diffs));
  std::map<int, Matrix> into;
  for (int n = a.lo(); n <= a.hi(); ++n) {
    if (a.dim(n) == 0 || c.dim(n) == 0) continue;
    Matrix m(fld, c.dim(n), a.dim(n));
    for (int i = 0; i < a.dim(n); ++i) m.set(i, i, 1);
    into.emplace(n, std::move(m));
  }
  return InjCover{c, ChainMap(a, c, std::move(into), false)};
}

}  // namespace kanex
