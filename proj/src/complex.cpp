#include "kanex/complex.hpp"

#include <stdexcept>

namespace kanex {

struct ChainComplex::Impl {
  FieldSpec field;
  int lo = 0;
  std::vector<int> dims;         // degree lo+k
  std::map<int, Matrix> diffs;   // d_n for n in (lo, hi]
  mutable std::optional<std::map<int, int>> homology;
  mutable std::map<int, Matrix> cycle_memo;
  mutable std::map<int, Matrix> reps_memo;

  int dim_at(int n) const {
    const int k = n - lo;
    if (k < 0 || k >= static_cast<int>(dims.size())) return 0;
    return dims[k];
  }
};

ChainComplex::ChainComplex(FieldSpec f) {
  auto im = std::make_shared<Impl>();
  im->field = f;
  impl_ = im;
}

ChainComplex::ChainComplex(FieldSpec f, int lo, std::vector<int> dims, std::map<int, Matrix> diffs) {
  // Trim zero-dimensional ends so that lo/hi are tight.
  int begin = 0, end = static_cast<int>(dims.size());
  while (begin < end && dims[begin] == 0) ++begin;
  while (end > begin && dims[end - 1] == 0) --end;
  auto im = std::make_shared<Impl>();
  im->field = f;
  im->lo = lo + begin;
  im->dims.assign(dims.begin() + begin, dims.begin() + end);
  for (auto& [n, m] : diffs) {
    if (m.field() != f) throw std::invalid_argument("differential field mismatch");
    if (m.rows() == 0 || m.cols() == 0) continue;
    im->diffs.emplace(n, std::move(m));
  }
  // Shape checks plus d.d = 0.
  for (auto& [n, m] : im->diffs) {
    if (m.rows() != im->dim_at(n - 1) || m.cols() != im->dim_at(n))
      throw std::invalid_argument("differential shape mismatch at degree " + std::to_string(n));
  }
  for (auto& [n, m] : im->diffs) {
    auto above = im->diffs.find(n + 1);
    if (above != im->diffs.end() && !(m * above->second).is_zero())
      throw std::invalid_argument("d.d != 0 at degree " + std::to_string(n + 1));
  }
  impl_ = im;
}

const FieldSpec& ChainComplex::field() const { return impl_->field; }
int ChainComplex::lo() const { return impl_->lo; }
int ChainComplex::hi() const { return impl_->lo + static_cast<int>(impl_->dims.size()) - 1; }
int ChainComplex::dim(int n) const { return impl_->dim_at(n); }

int ChainComplex::total_dim() const {
  int t = 0;
  for (int d : impl_->dims) t += d;
  return t;
}

Matrix ChainComplex::d(int n) const {
  auto it = impl_->diffs.find(n);
  if (it != impl_->diffs.end()) return it->second;
  return Matrix::zeros(impl_->field, dim(n - 1), dim(n));
}

const std::map<int, int>& ChainComplex::homology_dims() const {
  if (!impl_->homology) {
    std::map<int, int> h;
    for (int n = lo(); n <= hi(); ++n) {
      const int rk_n = dim(n) ? d(n).rank() : 0;
      const int rk_n1 = dim(n + 1) ? d(n + 1).rank() : 0;
      const int hn = dim(n) - rk_n - rk_n1;
      if (hn) h[n] = hn;
    }
    impl_->homology = std::move(h);
  }
  return *impl_->homology;
}

bool ChainComplex::is_acyclic() const { return homology_dims().empty(); }

int ChainComplex::homology_dim(int n) const {
  const auto& h = homology_dims();
  auto it = h.find(n);
  return it == h.end() ? 0 : it->second;
}

const Matrix& ChainComplex::cycles(int n) const {
  auto it = impl_->cycle_memo.find(n);
  if (it != impl_->cycle_memo.end()) return it->second;
  Matrix z = dim(n) ? d(n).nullspace() : Matrix::zeros(impl_->field, 0, 0);
  return impl_->cycle_memo.emplace(n, std::move(z)).first->second;
}

const Matrix& ChainComplex::homology_reps(int n) const {
  auto it = impl_->reps_memo.find(n);
  if (it != impl_->reps_memo.end()) return it->second;
  const Matrix& z = cycles(n);
  const Matrix b = d(n + 1);
  Matrix reps(impl_->field, dim(n), 0);
  if (z.cols() > 0) {
    Matrix cat(impl_->field, dim(n), b.cols() + z.cols());
    cat.insert_block(b, 0, 0);
    cat.insert_block(z, 0, b.cols());
    std::vector<int> chosen;
    for (int p : cat.pivot_columns())
      if (p >= b.cols()) chosen.push_back(p - b.cols());
    reps = Matrix(impl_->field, dim(n), static_cast<int>(chosen.size()));
    for (size_t k = 0; k < chosen.size(); ++k)
      reps.insert_block(z.submatrix(0, dim(n), chosen[k], chosen[k] + 1), 0, static_cast<int>(k));
  }
  return impl_->reps_memo.emplace(n, std::move(reps)).first->second;
}

ChainComplex ChainComplex::shifted(int k) const {
  if (k == 0) return *this;
  std::map<int, Matrix> diffs;
  for (const auto& [n, m] : impl_->diffs) diffs.emplace(n + k, (k % 2 == 0) ? m : m.negated());
  return ChainComplex(impl_->field, impl_->lo + k, impl_->dims, std::move(diffs));
}

SumWithMaps direct_sum(const std::vector<ChainComplex>& parts) {
  if (parts.empty()) throw std::invalid_argument("direct_sum of empty list needs a field; use the zero complex");
  const FieldSpec f = parts[0].field();
  int lo = 0, hi = -1;
  bool any = false;
  for (const auto& p : parts) {
    if (p.field() != f) throw std::invalid_argument("direct_sum field mismatch");
    if (p.lo() > p.hi()) continue;
    if (!any) {
      lo = p.lo();
      hi = p.hi();
      any = true;
    } else {
      lo = std::min(lo, p.lo());
      hi = std::max(hi, p.hi());
    }
  }
  if (!any) {
    ChainComplex z(f);
    SumWithMaps out{z, {}, {}};
    for (const auto& p : parts) {
      out.injections.push_back(ChainMap::zero(p, z));
      out.projections.push_back(ChainMap::zero(z, p));
    }
    return out;
  }
  std::vector<int> dims(hi - lo + 1, 0);
  std::vector<std::vector<int>> offsets(parts.size(), std::vector<int>(hi - lo + 1, 0));
  for (int n = lo; n <= hi; ++n) {
    int off = 0;
    for (size_t i = 0; i < parts.size(); ++i) {
      offsets[i][n - lo] = off;
      off += parts[i].dim(n);
    }
    dims[n - lo] = off;
  }
  std::map<int, Matrix> diffs;
  for (int n = lo + 1; n <= hi; ++n) {
    if (dims[n - lo] == 0 || dims[n - 1 - lo] == 0) continue;
    Matrix m(f, dims[n - 1 - lo], dims[n - lo]);
    for (size_t i = 0; i < parts.size(); ++i) {
      const Matrix di = parts[i].d(n);
      if (di.rows() && di.cols()) m.insert_block(di, offsets[i][n - 1 - lo], offsets[i][n - lo]);
    }
    diffs.emplace(n, std::move(m));
  }
  ChainComplex total(f, lo, dims, std::move(diffs));
  SumWithMaps out{total, {}, {}};
  for (size_t i = 0; i < parts.size(); ++i) {
    std::map<int, Matrix> inj, proj;
    for (int n = std::max(lo, parts[i].lo()); n <= std::min(hi, parts[i].hi()); ++n) {
      const int pd = parts[i].dim(n);
      if (pd == 0 || total.dim(n) == 0) continue;
      Matrix mi(f, total.dim(n), pd), mp(f, pd, total.dim(n));
      for (int r = 0; r < pd; ++r) {
        mi.set(offsets[i][n - lo] + r, r, 1);
        mp.set(r, offsets[i][n - lo] + r, 1);
      }
      inj.emplace(n, std::move(mi));
      proj.emplace(n, std::move(mp));
    }
    out.injections.emplace_back(parts[i], total, std::move(inj), false);
    out.projections.emplace_back(total, parts[i], std::move(proj), false);
  }
  return out;
}

ChainMap::ChainMap(ChainComplex source, ChainComplex target, std::map<int, Matrix> comps, bool verify)
    : source_(std::move(source)), target_(std::move(target)) {
  if (source_.field() != target_.field()) throw std::invalid_argument("chain map field mismatch");
  for (auto& [n, m] : comps) {
    if (m.rows() != target_.dim(n) || m.cols() != source_.dim(n))
      throw std::invalid_argument("chain map component shape mismatch at degree " + std::to_string(n));
    if (m.rows() == 0 || m.cols() == 0) continue;
    comps_.emplace(n, std::move(m));
  }
  if (verify) {
    const int lo = std::min(source_.lo(), target_.lo());
    const int hi = std::max(source_.hi(), target_.hi());
    for (int n = lo; n <= hi; ++n) {
      const Matrix lhs = target_.d(n) * component(n);
      const Matrix rhs = component(n - 1) * source_.d(n);
      if (!(lhs - rhs).is_zero())
        throw std::invalid_argument("chain map does not commute with differentials at degree " +
                                    std::to_string(n));
    }
  }
}

ChainMap ChainMap::zero(ChainComplex source, ChainComplex target) {
  return ChainMap(std::move(source), std::move(target), {}, false);
}

ChainMap ChainMap::identity(const ChainComplex& c) {
  std::map<int, Matrix> comps;
  for (int n = c.lo(); n <= c.hi(); ++n)
    if (c.dim(n)) comps.emplace(n, Matrix::identity(c.field(), c.dim(n)));
  return ChainMap(c, c, std::move(comps), false);
}

Matrix ChainMap::component(int n) const {
  auto it = comps_.find(n);
  if (it != comps_.end()) return it->second;
  return Matrix::zeros(source_.field(), target_.dim(n), source_.dim(n));
}

bool ChainMap::is_zero_map() const {
  for (const auto& [n, m] : comps_)
    if (!m.is_zero()) return false;
  return true;
}

bool ChainMap::equals(const ChainMap& o) const {
  const int lo = std::min(source_.lo(), o.source_.lo());
  const int hi = std::max(source_.hi(), o.source_.hi());
  for (int n = lo; n <= hi; ++n)
    if (component(n) != o.component(n)) return false;
  return true;
}

ChainMap ChainMap::shifted(int k) const {
  std::map<int, Matrix> comps;
  for (const auto& [n, m] : comps_) comps.emplace(n + k, m);
  return ChainMap(source_.shifted(k), target_.shifted(k), std::move(comps), false);
}

ChainMap compose(const ChainMap& g, const ChainMap& f) {
  std::map<int, Matrix> comps;
  for (int n = f.source().lo(); n <= f.source().hi(); ++n) {
    if (f.source().dim(n) == 0 || g.target().dim(n) == 0) continue;
    comps.emplace(n, g.component(n) * f.component(n));
  }
  return ChainMap(f.source(), g.target(), std::move(comps), false);
}

ChainMap add_maps(const ChainMap& f, const ChainMap& g) {
  std::map<int, Matrix> comps;
  for (int n = std::min(f.source().lo(), g.source().lo()); n <= std::max(f.source().hi(), g.source().hi()); ++n) {
    if (f.source().dim(n) == 0 || f.target().dim(n) == 0) continue;
    comps.emplace(n, f.component(n) + g.component(n));
  }
  return ChainMap(f.source(), f.target(), std::move(comps), false);
}

ChainMap negate(const ChainMap& f) {
  std::map<int, Matrix> comps;
  for (const auto& [n, m] : f.components()) comps.emplace(n, m.negated());
  return ChainMap(f.source(), f.target(), std::move(comps), false);
}

ConeResult cone(const ChainMap& f) {
  const ChainComplex& x = f.source();
  const ChainComplex& y = f.target();
  if (x.field() != y.field()) throw std::invalid_argument("cone field mismatch");
  const FieldSpec field = x.field();
  const int lo = std::min(x.lo() + 1, y.lo());
  const int hi = std::max(x.hi() + 1, y.hi());
  if (lo > hi) {
    ChainComplex z(field);
    return ConeResult{z, ChainMap::zero(y, z), ChainMap::zero(z, x.shifted(1))};
  }
  std::vector<int> dims(hi - lo + 1, 0);
  for (int n = lo; n <= hi; ++n) dims[n - lo] = x.dim(n - 1) + y.dim(n);
  std::map<int, Matrix> diffs;
  for (int n = lo + 1; n <= hi; ++n) {
    if (dims[n - lo] == 0 || dims[n - 1 - lo] == 0) continue;
    const Matrix a = x.d(n - 1).negated();            // X_{n-1} -> X_{n-2}
    const Matrix b = f.component(n - 1).negated();    // X_{n-1} -> Y_{n-1}
    const Matrix c = y.d(n);                          // Y_n -> Y_{n-1}
    const Matrix z01 = Matrix::zeros(field, x.dim(n - 2), y.dim(n));
    std::vector<std::vector<const Matrix*>> grid = {{&a, &z01}, {&b, &c}};
    diffs.emplace(n, Matrix::block(field, grid));
  }
  ChainComplex cn(field, lo, dims, std::move(diffs));
  std::map<int, Matrix> inc, proj;
  for (int n = lo; n <= hi; ++n) {
    const int xd = x.dim(n - 1), yd = y.dim(n), cd = cn.dim(n);
    if (cd == 0) continue;
    if (yd) {
      Matrix mi(field, cd, yd);
      for (int r = 0; r < yd; ++r) mi.set(xd + r, r, 1);
      inc.emplace(n, std::move(mi));
    }
    if (xd) {
      Matrix mp(field, xd, cd);
      for (int r = 0; r < xd; ++r) mp.set(r, r, 1);
      proj.emplace(n, std::move(mp));
    }
  }
  ChainMap include_target(y, cn, std::move(inc), false);
  ChainMap project_shifted(cn, x.shifted(1), std::move(proj), false);
  return ConeResult{cn, std::move(include_target), std::move(project_shifted)};
}

Matrix homology_induced(const ChainMap& f, int n) {
  const ChainComplex& x = f.source();
  const ChainComplex& y = f.target();
  const FieldSpec field = x.field();
  const Matrix& rx = x.homology_reps(n);
  const Matrix& ry = y.homology_reps(n);
  const Matrix by = y.d(n + 1);
  const Matrix frx = f.component(n) * rx;
  Matrix sysm(field, y.dim(n), by.cols() + ry.cols());
  sysm.insert_block(by, 0, 0);
  sysm.insert_block(ry, 0, by.cols());
  auto sol = sysm.solve(frx);
  if (!sol) throw std::logic_error("homology_induced: cycle image not expressible (not a chain map?)");
  return sol->submatrix(by.cols(), by.cols() + ry.cols(), 0, frx.cols());
}

bool is_quasi_iso(const ChainMap& f) {
  const bool via_cone = cone(f).cone.is_acyclic();
  // Independent route: induced maps on homology are isomorphisms.
  bool via_homology = true;
  const auto& hx = f.source().homology_dims();
  const auto& hy = f.target().homology_dims();
  if (hx != hy) {
    via_homology = false;
  } else {
    for (const auto& [n, dimh] : hx) {
      const Matrix hf = homology_induced(f, n);
      if (hf.rows() != dimh || hf.cols() != dimh || hf.rank() != dimh) {
        via_homology = false;
        break;
      }
    }
  }
  if (via_cone != via_homology)
    throw std::logic_error("is_quasi_iso: cone and homology routes disagree");
  return via_cone;
}

std::optional<std::map<int, Matrix>> null_homotopy(const ChainMap& f) {
  const ChainComplex& x = f.source();
  const ChainComplex& y = f.target();
  const FieldSpec field = x.field();
  // Unknowns: h_n : X_n -> Y_{n+1} for n in [x.lo(), x.hi()].
  // Equations per degree n: f_n = d^Y_{n+1} h_n + h_{n-1} d^X_n.
  std::vector<int> hdeg;
  std::vector<int> hoff;
  int total = 0;
  for (int n = x.lo(); n <= x.hi(); ++n) {
    hdeg.push_back(n);
    hoff.push_back(total);
    total += x.dim(n) * y.dim(n + 1);
  }
  auto hindex = [&](int n) -> int {
    for (size_t i = 0; i < hdeg.size(); ++i)
      if (hdeg[i] == n) return static_cast<int>(i);
    return -1;
  };
  // Rows: for each degree n, y.dim(n) * x.dim(n) equations.
  int eqs = 0;
  std::vector<int> eoff;
  std::vector<int> edeg;
  for (int n = std::min(x.lo(), y.lo()); n <= std::max(x.hi(), y.hi()); ++n) {
    if (x.dim(n) == 0 || y.dim(n) == 0) continue;
    edeg.push_back(n);
    eoff.push_back(eqs);
    eqs += x.dim(n) * y.dim(n);
  }
  Matrix A(field, eqs, total);
  Matrix rhs(field, eqs, 1);
  for (size_t e = 0; e < edeg.size(); ++e) {
    const int n = edeg[e];
    const Matrix fn = f.component(n);
    const Matrix dy = y.d(n + 1);   // y_{n+1} -> y_n
    const Matrix dx = x.d(n);       // x_n -> x_{n-1}
    for (int r = 0; r < y.dim(n); ++r)
      for (int c = 0; c < x.dim(n); ++c) {
        const int row = eoff[e] + r * x.dim(n) + c;
        if (!fn.entry_is_zero(r, c)) rhs.set_rational(row, 0, fn.get_rational(r, c));
        // d^Y_{n+1} h_n term: sum_k dy(r,k) h_n(k,c)
        const int hi1 = hindex(n);
        if (hi1 >= 0 && y.dim(n + 1) > 0)
          for (int k = 0; k < y.dim(n + 1); ++k)
            if (!dy.entry_is_zero(r, k))
              A.set_rational(row, hoff[hi1] + c * y.dim(n + 1) + k, dy.get_rational(r, k));
        // h_{n-1} d^X_n term: sum_k h_{n-1}(r,k) dx(k,c)
        const int hi0 = hindex(n - 1);
        if (hi0 >= 0 && x.dim(n - 1) > 0)
          for (int k = 0; k < x.dim(n - 1); ++k)
            if (!dx.entry_is_zero(k, c))
              A.set_rational(row, hoff[hi0] + k * y.dim(n) + r, dx.get_rational(k, c));
      }
  }
  auto sol = A.solve(rhs);
  if (!sol) return std::nullopt;
  std::map<int, Matrix> h;
  for (size_t i = 0; i < hdeg.size(); ++i) {
    const int n = hdeg[i];
    if (x.dim(n) == 0 || y.dim(n + 1) == 0) continue;
    Matrix hn(field, y.dim(n + 1), x.dim(n));
    for (int c = 0; c < x.dim(n); ++c)
      for (int k = 0; k < y.dim(n + 1); ++k) {
        const Rational v = sol->get_rational(hoff[i] + c * y.dim(n + 1) + k, 0);
        if (v != 0) hn.set_rational(k, c, v);
      }
    h.emplace(n, std::move(hn));
  }
  return h;
}

long long euler_characteristic(const ChainComplex& c) {
  long long chi = 0;
  for (int n = c.lo(); n <= c.hi(); ++n) chi += (n % 2 == 0 ? 1 : -1) * static_cast<long long>(c.dim(n));
  return chi;
}

AcyclicCover acyclic_cover(const ChainComplex& b) {
  // K(B)_n = B_{n+1} (+) B_n with d(b', b) = (-d b' + b, d b); onto map is the
  // second projection.
  const FieldSpec field = b.field();
  if (b.lo() > b.hi()) {
    ChainComplex z(field);
    return AcyclicCover{z, ChainMap::zero(z, b)};
  }
  const int lo = b.lo() - 1, hi = b.hi();
  std::vector<int> dims(hi - lo + 1, 0);
  for (int n = lo; n <= hi; ++n) dims[n - lo] = b.dim(n + 1) + b.dim(n);
  std::map<int, Matrix> diffs;
  for (int n = lo + 1; n <= hi; ++n) {
    const int r = dims[n - 1 - lo], c = dims[n - lo];
    if (r == 0 || c == 0) continue;
    Matrix m(field, r, c);
    const Matrix dn1 = b.d(n + 1).negated();  // B_{n+1} -> B_n block, negated
    for (int i = 0; i < dn1.rows(); ++i)
      for (int j = 0; j < dn1.cols(); ++j)
        if (!dn1.entry_is_zero(i, j)) m.set_rational(i, j, dn1.get_rational(i, j));
    // +b part into the b'-slot: B_n -> B_n identity placed at rows 0.., cols b.dim(n+1)..
    for (int i = 0; i < b.dim(n); ++i) m.set(i, b.dim(n + 1) + i, 1);
    const Matrix dn = b.d(n);
    for (int i = 0; i < dn.rows(); ++i)
      for (int j = 0; j < dn.cols(); ++j)
        if (!dn.entry_is_zero(i, j)) m.set_rational(b.dim(n) + i, b.dim(n + 1) + j, dn.get_rational(i, j));
    diffs.emplace(n, std::move(m));
  }
  ChainComplex k(field, lo, dims, std::move(diffs));
  std::map<int, Matrix> onto;
  for (int n = b.lo(); n <= b.hi(); ++n) {
    if (b.dim(n) == 0 || k.dim(n) == 0) continue;
    Matrix m(field, b.dim(n), k.dim(n));
    for (int i = 0; i < b.dim(n); ++i) m.set(i, b.dim(n + 1) + i, 1);
    onto.emplace(n, std::move(m));
  }
  return AcyclicCover{k, ChainMap(k, b, std::move(onto), false)};
}

}  // namespace kanex
