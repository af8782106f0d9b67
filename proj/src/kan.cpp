#include "kanex/kan.hpp"

#include <algorithm>
#include <stdexcept>

namespace kanex {

namespace {

// Chains of a subposet, listed as ascending sequences of parent indices,
// lexicographically ordered for determinism.
std::vector<std::vector<int>> subposet_chains(const FinPoset& shape, const std::vector<int>& sub) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> extend = [&](int last) {
    for (int j : sub) {
      if (j == last || !shape.leq(last, j)) continue;
      cur.push_back(j);
      out.push_back(cur);
      extend(j);
      cur.pop_back();
    }
  };
  for (int i : sub) {
    cur = {i};
    out.push_back(cur);
    extend(i);
  }
  std::sort(out.begin(), out.end());
  return out;
}

struct BarLayout {
  std::vector<std::vector<int>> chains;
  std::map<std::vector<int>, int> chain_id;
  // offset[chain][degree - lo] = column offset of that chain's block
  int lo = 0, hi = -1;
  std::vector<int> dims;
  std::vector<std::map<int, int>> offsets;  // per chain: total degree -> offset

  int chain_value_dim(const Diagram& x, int c, int n, bool bar) const {
    const auto& ch = chains[c];
    const int s = static_cast<int>(ch.size()) - 1;
    const int obj = bar ? ch.front() : ch.back();
    return x.at(obj).dim(bar ? n - s : n + s);
  }
};

BarLayout bar_layout(const Diagram& x, const std::vector<int>& sub, bool bar) {
  BarLayout l;
  l.chains = subposet_chains(x.shape(), sub);
  for (size_t i = 0; i < l.chains.size(); ++i) l.chain_id.emplace(l.chains[i], static_cast<int>(i));
  int lo = 0, hi = -1;
  bool any = false;
  for (size_t c = 0; c < l.chains.size(); ++c) {
    const int s = static_cast<int>(l.chains[c].size()) - 1;
    const int obj = bar ? l.chains[c].front() : l.chains[c].back();
    const ChainComplex& v = x.at(obj);
    if (v.lo() > v.hi()) continue;
    const int clo = bar ? v.lo() + s : v.lo() - s;
    const int chi = bar ? v.hi() + s : v.hi() - s;
    if (!any) {
      lo = clo;
      hi = chi;
      any = true;
    } else {
      lo = std::min(lo, clo);
      hi = std::max(hi, chi);
    }
  }
  l.lo = any ? lo : 0;
  l.hi = any ? hi : -1;
  l.dims.assign(std::max(0, l.hi - l.lo + 1), 0);
  l.offsets.resize(l.chains.size());
  for (int n = l.lo; n <= l.hi; ++n) {
    int off = 0;
    for (size_t c = 0; c < l.chains.size(); ++c) {
      const int d = l.chain_value_dim(x, static_cast<int>(c), n, bar);
      if (d > 0) l.offsets[c][n] = off;
      off += d;
    }
    l.dims[n - l.lo] = off;
  }
  return l;
}

ChainComplex bar_total(const Diagram& x, const std::vector<int>& sub, bool bar, BarLayout& l) {
  l = bar_layout(x, sub, bar);
  const FieldSpec fld = x.field();
  if (l.hi < l.lo) return ChainComplex(fld);
  std::map<int, Matrix> diffs;
  std::vector<bool> in_sub(x.shape().size(), false);
  for (int i : sub) in_sub[i] = true;
  for (int n = l.lo + 1; n <= l.hi; ++n) {
    if (l.dims[n - l.lo] == 0 || l.dims[n - 1 - l.lo] == 0) continue;
    Matrix m(fld, l.dims[n - 1 - l.lo], l.dims[n - l.lo]);
    for (size_t c = 0; c < l.chains.size(); ++c) {
      const auto& ch = l.chains[c];
      const int s = static_cast<int>(ch.size()) - 1;
      const int obj = bar ? ch.front() : ch.back();
      const int vdeg = bar ? n - s : n + s;
      const int vd = x.at(obj).dim(vdeg);
      if (vd == 0) continue;
      const int coff = l.offsets[c].at(n);
      auto add_block = [&](int target_chain, const Matrix& blk, int sign) {
        if (blk.rows() == 0) return;
        auto it = l.offsets[target_chain].find(n - 1);
        if (it == l.offsets[target_chain].end()) return;
        m.insert_block(blk, it->second, coff, sign < 0);
      };
      if (bar) {
        // Simplicial faces.
        for (int i = 0; i <= s && s > 0; ++i) {
          std::vector<int> face = ch;
          face.erase(face.begin() + i);
          const int tid = l.chain_id.at(face);
          const int sign = (i % 2 == 0) ? 1 : -1;
          if (i == 0) {
            add_block(tid, x.arrow(ch[0], ch[1]).component(vdeg), sign);
          } else {
            Matrix id = Matrix::identity(fld, vd);
            add_block(tid, id, sign);
          }
        }
        // Internal differential with sign (-1)^s.
        const Matrix dint = x.at(obj).d(vdeg);
        if (dint.rows() > 0) add_block(static_cast<int>(c), dint, (s % 2 == 0) ? 1 : -1);
      } else {
        // Cobar: cofaces insert a vertex; generator (ch, v in X(last)).
        for (int q : sub) {
          // Insertion positions where q fits strictly.
          for (int pos = 0; pos <= s + 1; ++pos) {
            const bool below_ok = pos == 0 || x.shape().lt(ch[pos - 1], q);
            const bool above_ok = pos == s + 1 || x.shape().lt(q, ch[pos]);
            if (!below_ok || !above_ok) continue;
            std::vector<int> bigger = ch;
            bigger.insert(bigger.begin() + pos, q);
            auto tit = l.chain_id.find(bigger);
            if (tit == l.chain_id.end()) continue;
            const int sign = (pos % 2 == 0) ? 1 : -1;
            if (pos == s + 1) {
              add_block(tit->second, x.arrow(ch[s], q).component(vdeg), sign);
            } else {
              Matrix id = Matrix::identity(fld, vd);
              add_block(tit->second, id, sign);
            }
          }
        }
        const Matrix dint = x.at(obj).d(vdeg);
        if (dint.rows() > 0) add_block(static_cast<int>(c), dint, (s % 2 == 0) ? 1 : -1);
      }
    }
    diffs.emplace(n, std::move(m));
  }
  return ChainComplex(fld, l.lo, l.dims, std::move(diffs));
}

}  // namespace

HocolimResult hocolim_over(const Diagram& x, const std::vector<int>& sub) {
  BarLayout l;
  ChainComplex total = bar_total(x, sub, /*bar=*/true, l);
  HocolimResult r{total, {}};
  const FieldSpec fld = x.field();
  for (int p : sub) {
    std::map<int, Matrix> comps;
    const std::vector<int> ch = {p};
    const auto cid = l.chain_id.at(ch);
    const ChainComplex& v = x.at(p);
    for (int n = v.lo(); n <= v.hi(); ++n) {
      if (v.dim(n) == 0 || total.dim(n) == 0) continue;
      Matrix m(fld, total.dim(n), v.dim(n));
      const int off = l.offsets[cid].at(n);
      for (int i = 0; i < v.dim(n); ++i) m.set(off + i, i, 1);
      comps.emplace(n, std::move(m));
    }
    r.canonical.emplace_back(v, total, std::move(comps), false);
  }
  return r;
}

HocolimResult hocolim(const Diagram& x) {
  std::vector<int> all(x.shape().size());
  for (int i = 0; i < x.shape().size(); ++i) all[i] = i;
  return hocolim_over(x, all);
}

HolimResult holim_over(const Diagram& x, const std::vector<int>& sub) {
  BarLayout l;
  ChainComplex total = bar_total(x, sub, /*bar=*/false, l);
  HolimResult r{total, {}};
  const FieldSpec fld = x.field();
  for (int p : sub) {
    std::map<int, Matrix> comps;
    const std::vector<int> ch = {p};
    const auto cid = l.chain_id.at(ch);
    const ChainComplex& v = x.at(p);
    for (int n = v.lo(); n <= v.hi(); ++n) {
      if (v.dim(n) == 0 || total.dim(n) == 0) continue;
      Matrix m(fld, v.dim(n), total.dim(n));
      const int off = l.offsets[cid].at(n);
      for (int i = 0; i < v.dim(n); ++i) m.set(i, off + i, 1);
      comps.emplace(n, std::move(m));
    }
    r.canonical.emplace_back(total, v, std::move(comps), false);
  }
  return r;
}

HolimResult holim(const Diagram& x) {
  std::vector<int> all(x.shape().size());
  for (int i = 0; i < x.shape().size(); ++i) all[i] = i;
  return holim_over(x, all);
}

namespace {

Diagram kan_extend_zero(const MonotoneMap& u, const Diagram& x) {
  const FinPoset& tgt = u.target();
  std::vector<int> preimage(tgt.size(), -1);
  for (int a = 0; a < u.source().size(); ++a) preimage[u.apply(a)] = a;
  std::vector<ChainComplex> values;
  for (int b = 0; b < tgt.size(); ++b)
    values.push_back(preimage[b] >= 0 ? x.at(preimage[b]) : ChainComplex(x.field()));
  std::map<std::pair<int, int>, ChainMap> covers;
  for (const auto& [a, b] : tgt.covers()) {
    if (preimage[a] >= 0 && preimage[b] >= 0)
      covers.emplace(std::make_pair(a, b), x.arrow(preimage[a], preimage[b]));
    else
      covers.emplace(std::make_pair(a, b), ChainMap::zero(values[a], values[b]));
  }
  return Diagram::make(tgt, std::move(values), std::move(covers), false);
}

// Chain-inclusion bar(slice_a) -> bar(slice_b) for slice_a a subset of
// slice_b; chains are matched by their source-index sequences.
ChainMap bar_inclusion(const ChainComplex& small, const BarLayout& ls, const ChainComplex& big,
                       const BarLayout& lb, const FieldSpec& fld, const Diagram& x, bool bar) {
  std::map<int, Matrix> comps;
  for (int n = small.lo(); n <= small.hi(); ++n) {
    if (small.dim(n) == 0 || big.dim(n) == 0) continue;
    Matrix m(fld, big.dim(n), small.dim(n));
    for (size_t c = 0; c < ls.chains.size(); ++c) {
      auto so = ls.offsets[c].find(n);
      if (so == ls.offsets[c].end()) continue;
      const int d = ls.chain_value_dim(x, static_cast<int>(c), n, bar);
      auto bid = lb.chain_id.find(ls.chains[c]);
      if (bid == lb.chain_id.end()) throw std::logic_error("bar_inclusion: chain missing in target");
      const int boff = lb.offsets[bid->second].at(n);
      for (int i = 0; i < d; ++i) m.set(boff + i, so->second + i, 1);
    }
    comps.emplace(n, std::move(m));
  }
  return ChainMap(small, big, std::move(comps), false);
}

// Projection cobar(slice_a) -> cobar(slice_b) for slice_b a subset of slice_a.
ChainMap cobar_projection(const ChainComplex& big, const BarLayout& lb, const ChainComplex& small,
                          const BarLayout& ls, const FieldSpec& fld, const Diagram& x) {
  std::map<int, Matrix> comps;
  for (int n = big.lo(); n <= big.hi(); ++n) {
    if (small.dim(n) == 0 || big.dim(n) == 0) continue;
    Matrix m(fld, small.dim(n), big.dim(n));
    for (size_t c = 0; c < ls.chains.size(); ++c) {
      auto so = ls.offsets[c].find(n);
      if (so == ls.offsets[c].end()) continue;
      const int d = ls.chain_value_dim(x, static_cast<int>(c), n, /*bar=*/false);
      const int boff = lb.offsets[lb.chain_id.at(ls.chains[c])].at(n);
      for (int i = 0; i < d; ++i) m.set(so->second + i, boff + i, 1);
    }
    comps.emplace(n, std::move(m));
  }
  return ChainMap(big, small, std::move(comps), false);
}

}  // namespace

Diagram kan_extend(KanSide side, const MonotoneMap& u, const Diagram& x) {
  if (u.source() != x.shape()) throw std::invalid_argument("kan_extend: shape mismatch");
  const SieveKind k = sieve_kind(u);
  const bool fast = (side == KanSide::Left && (k == SieveKind::Cosieve || k == SieveKind::Both)) ||
                    (side == KanSide::Right && (k == SieveKind::Sieve || k == SieveKind::Both));
  if (fast) return kan_extend_zero(u, x);
  const FinPoset& tgt = u.target();
  const FieldSpec fld = x.field();
  std::vector<std::vector<int>> slices(tgt.size());
  for (int b = 0; b < tgt.size(); ++b) {
    for (int a = 0; a < u.source().size(); ++a) {
      const bool in = side == KanSide::Left ? tgt.leq(u.apply(a), b) : tgt.leq(b, u.apply(a));
      if (in) slices[b].push_back(a);
    }
  }
  std::vector<ChainComplex> values;
  std::vector<BarLayout> layouts(tgt.size());
  for (int b = 0; b < tgt.size(); ++b)
    values.push_back(bar_total(x, slices[b], side == KanSide::Left, layouts[b]));
  std::map<std::pair<int, int>, ChainMap> covers;
  for (const auto& [a, b] : tgt.covers()) {
    if (side == KanSide::Left)
      covers.emplace(std::make_pair(a, b),
                     bar_inclusion(values[a], layouts[a], values[b], layouts[b], fld, x, true));
    else
      covers.emplace(std::make_pair(a, b),
                     cobar_projection(values[a], layouts[a], values[b], layouts[b], fld, x));
  }
  return Diagram::make(tgt, std::move(values), std::move(covers), false);
}

DiagramMap left_kan_comparison(const MonotoneMap& u, const Diagram& x, const Diagram& extended) {
  // Augmentation epsilon: (u^* u_! x)_a = bar(slice u(a)) -> x_a, defined by
  // X(p -> a) on 0-chains (p) and zero on longer chains.
  Diagram restr = restrict_diagram(u, extended);
  const FieldSpec fld = x.field();
  std::vector<ChainMap> comps;
  for (int a = 0; a < u.source().size(); ++a) {
    const int b = u.apply(a);
    std::vector<int> sub;
    for (int s = 0; s < u.source().size(); ++s)
      if (u.target().leq(u.apply(s), b)) sub.push_back(s);
    BarLayout l = bar_layout(x, sub, true);
    const ChainComplex& bar = restr.at(a);
    const ChainComplex& va = x.at(a);
    std::map<int, Matrix> cm;
    for (int n = bar.lo(); n <= bar.hi(); ++n) {
      if (bar.dim(n) == 0 || va.dim(n) == 0) continue;
      Matrix m(fld, va.dim(n), bar.dim(n));
      for (int p : sub) {
        const std::vector<int> ch = {p};
        auto off = l.offsets[l.chain_id.at(ch)].find(n);
        if (off == l.offsets[l.chain_id.at(ch)].end()) continue;
        if (!u.source().leq(p, a))
          throw std::logic_error("left_kan_comparison requires a fully faithful u");
        const Matrix blk = x.arrow(p, a).component(n);
        m.insert_block(blk, 0, off->second);
      }
      cm.emplace(n, std::move(m));
    }
    comps.emplace_back(bar, va, std::move(cm), false);
  }
  return DiagramMap(restr, x, std::move(comps), false);
}

DiagramMap right_kan_comparison(const MonotoneMap& u, const Diagram& x, const Diagram& extended) {
  // Coaugmentation: x_a -> cobar(slice over u(a)), phi_x((p)) = X(a -> p)(x).
  Diagram restr = restrict_diagram(u, extended);
  const FieldSpec fld = x.field();
  std::vector<ChainMap> comps;
  for (int a = 0; a < u.source().size(); ++a) {
    const int b = u.apply(a);
    std::vector<int> sub;
    for (int s = 0; s < u.source().size(); ++s)
      if (u.target().leq(b, u.apply(s))) sub.push_back(s);
    BarLayout l = bar_layout(x, sub, false);
    const ChainComplex& cobar = restr.at(a);
    const ChainComplex& va = x.at(a);
    std::map<int, Matrix> cm;
    for (int n = va.lo(); n <= va.hi(); ++n) {
      if (cobar.dim(n) == 0 || va.dim(n) == 0) continue;
      Matrix m(fld, cobar.dim(n), va.dim(n));
      for (int p : sub) {
        const std::vector<int> ch = {p};
        auto off = l.offsets[l.chain_id.at(ch)].find(n);
        if (off == l.offsets[l.chain_id.at(ch)].end()) continue;
        if (!u.source().leq(a, p))
          throw std::logic_error("right_kan_comparison requires a fully faithful u");
        const Matrix blk = x.arrow(a, p).component(n);
        m.insert_block(blk, off->second, 0);
      }
      cm.emplace(n, std::move(m));
    }
    comps.emplace_back(va, cobar, std::move(cm), false);
  }
  return DiagramMap(x, restr, std::move(comps), false);
}

void validate_square(const SquareRef& sq, const FinPoset& shape) {
  const int a = shape.index_checked(sq.x00), b = shape.index_checked(sq.x10);
  const int c = shape.index_checked(sq.x01), d = shape.index_checked(sq.x11);
  if (!(shape.lt(a, b) && shape.lt(a, c) && shape.lt(b, d) && shape.lt(c, d)))
    throw std::invalid_argument("invalid square reference");
}

ChainComplex total_cofiber(const SquareRef& sq, const Diagram& x) {
  validate_square(sq, x.shape());
  const ChainMap f1 = x.arrow(sq.x00, sq.x01);
  const ChainMap f2 = x.arrow(sq.x00, sq.x10);
  PushoutCorner p = pushout_corner(f1, f2);
  const ChainMap can =
      pushout_corner_out(p, x.arrow(sq.x01, sq.x11), x.arrow(sq.x10, sq.x11));
  return cone(can).cone;
}

ChainComplex total_fiber(const SquareRef& sq, const Diagram& x) {
  validate_square(sq, x.shape());
  const ChainMap f = x.arrow(sq.x10, sq.x11);
  const ChainMap g = x.arrow(sq.x01, sq.x11);
  PullbackCorner q = pullback_corner(f, g);
  const ChainMap can = pullback_corner_in(q, x.arrow(sq.x00, sq.x10), x.arrow(sq.x00, sq.x01));
  return cone(can).cone.shifted(-1);
}

bool is_bicartesian(const SquareRef& sq, const Diagram& x, bool audit) {
  const bool cocart = total_cofiber(sq, x).is_acyclic();
  if (audit) {
    const bool cart = total_fiber(sq, x).is_acyclic();
    if (cart != cocart)
      throw std::logic_error("stability violated: total fiber and cofiber decisions disagree");
  }
  return cocart;
}

}  // namespace kanex
