#include "kanex/randgen.hpp"

#include <stdexcept>

namespace kanex {

std::uint64_t Rng::next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

int Rng::uniform(int lo, int hi) {
  if (hi < lo) throw std::invalid_argument("empty uniform range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<int>(next() % span);
}

namespace {

long long random_scalar(Rng& rng, FieldSpec f) {
  if (f.is_rational()) return rng.uniform(-3, 3);
  return rng.uniform(0, static_cast<int>(f.characteristic) - 1);
}

Matrix random_matrix(Rng& rng, FieldSpec f, int rows, int cols) {
  Matrix m(f, rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m.set(i, j, random_scalar(rng, f));
  return m;
}

Matrix transpose(const Matrix& m) {
  Matrix t(m.field(), m.cols(), m.rows());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (!m.entry_is_zero(i, j)) t.set_rational(j, i, m.get_rational(i, j));
  return t;
}

}  // namespace

ChainComplex random_complex(Rng& rng, FieldSpec f, const RandomSpec& spec) {
  const int lo = spec.lo_degree, hi = spec.hi_degree;
  std::vector<int> dims(hi - lo + 1, 0);
  for (int& d : dims) d = rng.uniform(0, spec.max_dim);
  std::map<int, Matrix> diffs;
  // Build downward: d_n rows must lie in the left kernel of d_{n+1}.
  for (int n = hi; n > lo; --n) {
    const int r = dims[n - 1 - lo], c = dims[n - lo];
    if (r == 0 || c == 0) continue;
    auto above = diffs.find(n + 1);
    if (above == diffs.end()) {
      diffs.emplace(n, random_matrix(rng, f, r, c));
    } else {
      // rows of d_n from the left nullspace of d_{n+1}
      Matrix ln = transpose(above->second).nullspace();  // c x k
      if (ln.cols() == 0) continue;
      Matrix coeff = random_matrix(rng, f, r, ln.cols());
      Matrix dn = coeff * transpose(ln);
      if (!dn.is_zero()) diffs.emplace(n, std::move(dn));
    }
  }
  return ChainComplex(f, lo, dims, std::move(diffs));
}

ChainComplex random_acyclic(Rng& rng, FieldSpec f, const RandomSpec& spec) {
  // Sum of disks k --1--> k in random adjacent degrees.
  const int disks = rng.uniform(1, 2);
  std::vector<ChainComplex> parts;
  for (int i = 0; i < disks; ++i) {
    const int top = rng.uniform(spec.lo_degree + 1, spec.hi_degree);
    Matrix d(f, 1, 1);
    d.set(0, 0, rng.uniform(1, 2));
    parts.push_back(ChainComplex(f, top - 1, {1, 1}, {{top, d}}));
  }
  return direct_sum(parts).sum;
}

ChainMap random_chain_map(Rng& rng, const ChainComplex& src, const ChainComplex& tgt,
                          const ChainMap* pre) {
  const FieldSpec f = src.field();
  // Unknowns: components f_n (tgt.dim(n) x src.dim(n)).
  std::vector<int> degs;
  std::vector<int> offs;
  int total = 0;
  for (int n = src.lo(); n <= src.hi(); ++n) {
    if (src.dim(n) == 0 || tgt.dim(n) == 0) continue;
    degs.push_back(n);
    offs.push_back(total);
    total += src.dim(n) * tgt.dim(n);
  }
  auto idx_of = [&](int n) {
    for (size_t i = 0; i < degs.size(); ++i)
      if (degs[i] == n) return static_cast<int>(i);
    return -1;
  };
  if (total == 0) return ChainMap::zero(src, tgt);
  // Equations: d f - f d = 0 in every degree; plus f . pre = 0 when given.
  int rows = 0;
  for (int n = src.lo() - 1; n <= src.hi() + 1; ++n) {
    const int r = tgt.dim(n - 1) * src.dim(n);
    if (r > 0) rows += r;
  }
  if (pre) {
    for (int n = pre->source().lo(); n <= pre->source().hi(); ++n)
      rows += tgt.dim(n) * pre->source().dim(n);
  }
  Matrix a(f, rows, total);
  int row0 = 0;
  auto entry_col = [&](int n, int r, int c) {
    const int k = idx_of(n);
    if (k < 0) return -1;
    return offs[k] + r * src.dim(n) + c;
  };
  for (int n = src.lo() - 1; n <= src.hi() + 1; ++n) {
    // (d_tgt f_n - f_{n-1} d_src)(r, c) = 0 : tgt.dim(n-1) x src.dim(n)
    const int nr = tgt.dim(n - 1), nc = src.dim(n);
    if (nr == 0 || nc == 0) continue;
    const Matrix dt = tgt.d(n);
    const Matrix ds = src.d(n);
    for (int r = 0; r < nr; ++r)
      for (int c = 0; c < nc; ++c) {
        const int row = row0 + r * nc + c;
        for (int k = 0; k < tgt.dim(n); ++k) {
          const int col = entry_col(n, k, c);
          if (col >= 0 && !dt.entry_is_zero(r, k))
            a.set_rational(row, col, dt.get_rational(r, k));
        }
        for (int k = 0; k < src.dim(n - 1); ++k) {
          const int col = entry_col(n - 1, r, k);
          if (col >= 0 && !ds.entry_is_zero(k, c)) {
            Rational v = ds.get_rational(k, c);
            a.set_rational(row, col, Rational(0) - v);
          }
        }
      }
    row0 += nr * nc;
  }
  if (pre) {
    const ChainComplex& w = pre->source();
    for (int n = w.lo(); n <= w.hi(); ++n) {
      const int nr = tgt.dim(n), nc = w.dim(n);
      if (nr == 0 || nc == 0) continue;
      const Matrix pn = pre->component(n);
      for (int r = 0; r < nr; ++r)
        for (int c = 0; c < nc; ++c) {
          const int row = row0 + r * nc + c;
          for (int k = 0; k < src.dim(n); ++k) {
            const int col = entry_col(n, r, k);
            if (col >= 0 && !pn.entry_is_zero(k, c))
              a.set_rational(row, col, pn.get_rational(k, c));
          }
        }
      row0 += nr * nc;
    }
  }
  Matrix basis = a.submatrix(0, row0, 0, total).nullspace();
  Matrix coeff = random_matrix(rng, f, basis.cols(), 1);
  Matrix sol = basis * coeff;
  std::map<int, Matrix> comps;
  for (size_t k = 0; k < degs.size(); ++k) {
    const int n = degs[k];
    Matrix m(f, tgt.dim(n), src.dim(n));
    bool nz = false;
    for (int r = 0; r < tgt.dim(n); ++r)
      for (int c = 0; c < src.dim(n); ++c) {
        const Rational v = sol.get_rational(offs[k] + r * src.dim(n) + c, 0);
        if (v != 0) {
          m.set_rational(r, c, v);
          nz = true;
        }
      }
    if (nz) comps.emplace(n, std::move(m));
  }
  return ChainMap(src, tgt, std::move(comps), true);
}

namespace {

Diagram upset_stalk(const FinPoset& shape, int base, const ChainComplex& c) {
  const FieldSpec f = c.field();
  std::vector<ChainComplex> vals;
  for (int i = 0; i < shape.size(); ++i)
    vals.push_back(shape.leq(base, i) ? c : ChainComplex(f));
  std::map<std::pair<int, int>, ChainMap> covers;
  for (const auto& [a, b] : shape.covers()) {
    if (shape.leq(base, a))
      covers.emplace(std::make_pair(a, b), ChainMap::identity(c));
    else
      covers.emplace(std::make_pair(a, b), ChainMap::zero(vals[a], vals[b]));
  }
  return Diagram::make(shape, std::move(vals), std::move(covers), false);
}

}  // namespace

StalkSum random_stalk_sum(Rng& rng, const FinPoset& shape, FieldSpec f, const RandomSpec& spec,
                          bool acyclic_values) {
  StalkSum s;
  const int gens = std::max(1, spec.generators);
  std::vector<Diagram> parts;
  for (int g = 0; g < gens; ++g) {
    const int base = rng.uniform(0, shape.size() - 1);
    ChainComplex c = acyclic_values ? random_acyclic(rng, f, spec) : random_complex(rng, f, spec);
    s.gens.emplace_back(base, c);
    parts.push_back(upset_stalk(shape, base, c));
  }
  s.diagram = diagram_sum(parts);
  return s;
}

DiagramMap random_stalk_map(Rng& rng, const StalkSum& x, const StalkSum& y) {
  const FinPoset& shape = x.diagram.shape();
  const FieldSpec f = x.diagram.field();
  // A natural map is a matrix of chain maps g_{ij}: C_i -> D_j supported on
  // pairs with base_j <= base_i, acting at every object above base_i.
  std::vector<std::vector<ChainMap>> g(x.gens.size(), std::vector<ChainMap>(y.gens.size()));
  for (size_t i = 0; i < x.gens.size(); ++i)
    for (size_t j = 0; j < y.gens.size(); ++j)
      if (shape.leq(y.gens[j].first, x.gens[i].first))
        g[i][j] = random_chain_map(rng, x.gens[i].second, y.gens[j].second);
  std::vector<ChainMap> comps;
  for (int t = 0; t < shape.size(); ++t) {
    // offsets of generator blocks inside the sums at object t
    std::map<int, Matrix> cm;
    const ChainComplex& sx = x.diagram.at(t);
    const ChainComplex& sy = y.diagram.at(t);
    for (int n = sx.lo(); n <= sx.hi(); ++n) {
      if (sx.dim(n) == 0 || sy.dim(n) == 0) continue;
      Matrix m(f, sy.dim(n), sx.dim(n));
      int coff = 0;
      for (size_t i = 0; i < x.gens.size(); ++i) {
        const bool xi = shape.leq(x.gens[i].first, t);
        const int xd = xi ? x.gens[i].second.dim(n) : 0;
        int roff = 0;
        for (size_t j = 0; j < y.gens.size(); ++j) {
          const bool yj = shape.leq(y.gens[j].first, t);
          const int yd = yj ? y.gens[j].second.dim(n) : 0;
          if (xd && yd && shape.leq(y.gens[j].first, x.gens[i].first)) {
            m.insert_block(g[i][j].component(n), roff, coff);
          }
          roff += yd;
        }
        coff += xd;
      }
      cm.emplace(n, std::move(m));
    }
    comps.emplace_back(sx, sy, std::move(cm), false);
  }
  return DiagramMap(x.diagram, y.diagram, std::move(comps), false);
}

Diagram random_diagram(Rng& rng, const FinPoset& shape, FieldSpec f, const RandomSpec& spec) {
  StalkSum a = random_stalk_sum(rng, shape, f, spec);
  if (rng.uniform(0, 1) == 0) return a.diagram;
  StalkSum b = random_stalk_sum(rng, shape, f, spec);
  return diagram_cone(random_stalk_map(rng, a, b));
}

DiagramMap random_diagram_map(Rng& rng, const FinPoset& shape, FieldSpec f,
                              const RandomSpec& spec) {
  StalkSum a = random_stalk_sum(rng, shape, f, spec);
  StalkSum b = random_stalk_sum(rng, shape, f, spec);
  return random_stalk_map(rng, a, b);
}

QuiverComplex random_quiver(Rng& rng, int n, FieldSpec f, const RandomSpec& spec) {
  QuiverComplex q;
  q.n = n;
  for (int i = 0; i < n; ++i) q.c.push_back(random_complex(rng, f, spec));
  for (int i = 0; i + 1 < n; ++i) {
    const ChainMap* pre = i > 0 ? &q.alpha[i - 1] : nullptr;
    q.alpha.push_back(random_chain_map(rng, q.c[i], q.c[i + 1], pre));
  }
  q.validate();
  return q;
}

Diagram random_member_a_n2(Rng& rng, int n, FieldSpec f, const RandomSpec& spec,
                           bool literal_zeros) {
  Diagram placed = quiver_placement(random_quiver(rng, n, f, spec));
  if (literal_zeros) return placed;
  StalkSum noise = random_stalk_sum(rng, a_tilde(n), f, spec, /*acyclic_values=*/true);
  return diagram_sum({placed, noise.diagram});
}

}  // namespace kanex
