#include "kanex/diagram.hpp"
#include "kanex/shapes.hpp"

#include <stdexcept>

namespace kanex {

Diagram Diagram::make(FinPoset shape, std::vector<ChainComplex> values,
                      std::map<std::pair<int, int>, ChainMap> cover_maps, bool verify) {
  Diagram d;
  if (static_cast<int>(values.size()) != shape.size())
    throw std::invalid_argument("diagram value count mismatch");
  d.field_ = values.empty() ? FieldSpec{32003} : values[0].field();
  for (const auto& v : values)
    if (v.field() != d.field_) throw std::invalid_argument("diagram field mismatch");
  const auto covers = shape.covers();
  for (const auto& [a, b] : covers) {
    auto it = cover_maps.find({a, b});
    if (it == cover_maps.end())
      throw std::invalid_argument("missing cover map " + shape.label(a).str() + " -> " +
                                  shape.label(b).str());
    const ChainMap& m = it->second;
    if (!m.source().same_node(values[a]) && m.source().homology_dims() != values[a].homology_dims())
      ;  // sources are compared structurally below
    if (m.source().lo() != values[a].lo() && m.source().total_dim() != values[a].total_dim())
      throw std::invalid_argument("cover map source mismatch at " + shape.label(a).str());
  }
  // Drop any entries that are not covering arrows.
  std::map<std::pair<int, int>, ChainMap> kept;
  for (const auto& [a, b] : covers) kept.emplace(std::make_pair(a, b), cover_maps.at({a, b}));
  d.shape_ = std::move(shape);
  d.values_ = std::move(values);
  d.covers_ = std::move(kept);
  if (verify) d.check_strict();
  return d;
}

ChainMap Diagram::arrow(int a, int b) const {
  if (!shape_.leq(a, b)) throw std::invalid_argument("arrow requested for unrelated objects");
  if (a == b) return ChainMap::identity(values_[a]);
  auto it = memo_->arrows.find({a, b});
  if (it != memo_->arrows.end()) return it->second;
  auto cov = covers_.find({a, b});
  if (cov != covers_.end()) {
    memo_->arrows.emplace(std::make_pair(a, b), cov->second);
    return cov->second;
  }
  // Compose along the first cover of a below b (object order fixes the path).
  for (int m = 0; m < shape_.size(); ++m) {
    if (covers_.count({a, m}) && shape_.leq(m, b)) {
      ChainMap res = compose(arrow(m, b), covers_.at({a, m}));
      memo_->arrows.emplace(std::make_pair(a, b), res);
      return res;
    }
  }
  throw std::logic_error("no covering path found; poset data corrupt");
}

ChainMap Diagram::arrow(const Label& a, const Label& b) const {
  return arrow(shape_.index_checked(a), shape_.index_checked(b));
}

void Diagram::check_strict() const {
  for (int a = 0; a < shape_.size(); ++a)
    for (int b = 0; b < shape_.size(); ++b) {
      if (a == b || !shape_.leq(a, b)) continue;
      const ChainMap ab = arrow(a, b);
      for (int m = 0; m < shape_.size(); ++m) {
        if (m == a || m == b) continue;
        if (covers_.count({a, m}) && shape_.leq(m, b)) {
          const ChainMap via = compose(arrow(m, b), covers_.at({a, m}));
          if (!via.equals(ab))
            throw std::logic_error("diagram not strictly commutative: paths " + shape_.label(a).str() +
                                   " -> " + shape_.label(b).str() + " disagree");
        }
      }
    }
}

DiagramMap::DiagramMap(Diagram source, Diagram target, std::vector<ChainMap> components, bool verify)
    : source_(std::move(source)), target_(std::move(target)), comps_(std::move(components)) {
  if (source_.shape() != target_.shape())
    throw std::invalid_argument("diagram map requires equal shapes");
  if (static_cast<int>(comps_.size()) != source_.shape().size())
    throw std::invalid_argument("diagram map component count mismatch");
  if (verify) {
    for (const auto& [a, b] : source_.shape().covers()) {
      const ChainMap lhs = compose(target_.arrow(a, b), comps_[a]);
      const ChainMap rhs = compose(comps_[b], source_.arrow(a, b));
      if (!lhs.equals(rhs))
        throw std::invalid_argument("diagram map not natural at " + source_.shape().label(a).str() +
                                    " -> " + source_.shape().label(b).str());
    }
  }
}

Diagram restrict_diagram(const MonotoneMap& u, const Diagram& x) {
  if (u.target() != x.shape()) throw std::invalid_argument("restrict: shape mismatch");
  std::vector<ChainComplex> values;
  values.reserve(u.source().size());
  for (int i = 0; i < u.source().size(); ++i) values.push_back(x.at(u.apply(i)));
  std::map<std::pair<int, int>, ChainMap> covers;
  for (const auto& [a, b] : u.source().covers())
    covers.emplace(std::make_pair(a, b), x.arrow(u.apply(a), u.apply(b)));
  return Diagram::make(u.source(), std::move(values), std::move(covers), false);
}

DiagramMap restrict_map(const MonotoneMap& u, const DiagramMap& f) {
  Diagram s = restrict_diagram(u, f.source());
  Diagram t = restrict_diagram(u, f.target());
  std::vector<ChainMap> comps;
  for (int i = 0; i < u.source().size(); ++i) comps.push_back(f.component(u.apply(i)));
  return DiagramMap(std::move(s), std::move(t), std::move(comps), false);
}

bool diagram_qis(const DiagramMap& f) {
  for (int i = 0; i < f.source().shape().size(); ++i)
    if (!is_quasi_iso(f.component(i))) return false;
  return true;
}

Diagram diagram_sum(const std::vector<Diagram>& parts) {
  if (parts.empty()) throw std::invalid_argument("diagram_sum of nothing");
  const FinPoset& shape = parts[0].shape();
  for (const auto& p : parts)
    if (p.shape() != shape) throw std::invalid_argument("diagram_sum shape mismatch");
  std::vector<ChainComplex> values;
  std::vector<SumWithMaps> sums;
  for (int i = 0; i < shape.size(); ++i) {
    std::vector<ChainComplex> slot;
    for (const auto& p : parts) slot.push_back(p.at(i));
    sums.push_back(direct_sum(slot));
    values.push_back(sums.back().sum);
  }
  std::map<std::pair<int, int>, ChainMap> covers;
  for (const auto& [a, b] : shape.covers()) {
    ChainMap m = ChainMap::zero(values[a], values[b]);
    for (size_t k = 0; k < parts.size(); ++k)
      m = add_maps(m, compose(sums[b].injections[k], compose(parts[k].arrow(a, b), sums[a].projections[k])));
    covers.emplace(std::make_pair(a, b), std::move(m));
  }
  return Diagram::make(shape, std::move(values), std::move(covers), false);
}

Diagram diagram_cone(const DiagramMap& f) {
  const FinPoset& shape = f.source().shape();
  std::vector<ChainComplex> values;
  std::vector<ConeResult> cones;
  for (int i = 0; i < shape.size(); ++i) {
    cones.push_back(cone(f.component(i)));
    values.push_back(cones.back().cone);
  }
  std::map<std::pair<int, int>, ChainMap> covers;
  for (const auto& [a, b] : shape.covers()) {
    const ChainMap xa = f.source().arrow(a, b);
    const ChainMap ya = f.target().arrow(a, b);
    std::map<int, Matrix> comps;
    const ChainComplex& ca = values[a];
    const ChainComplex& cb = values[b];
    const FieldSpec fld = ca.field();
    for (int n = ca.lo(); n <= ca.hi(); ++n) {
      if (ca.dim(n) == 0 || cb.dim(n) == 0) continue;
      const Matrix x_blk = xa.component(n - 1);
      const Matrix y_blk = ya.component(n);
      Matrix m(fld, cb.dim(n), ca.dim(n));
      const int xb_rows = f.source().at(b).dim(n - 1);
      const int xa_rows = f.source().at(a).dim(n - 1);
      m.insert_block(x_blk, 0, 0);
      m.insert_block(y_blk, xb_rows, xa_rows);
      comps.emplace(n, std::move(m));
    }
    covers.emplace(std::make_pair(a, b), ChainMap(ca, cb, std::move(comps), false));
  }
  return Diagram::make(shape, std::move(values), std::move(covers), false);
}

std::vector<std::map<int, int>> homology_table(const Diagram& x) {
  std::vector<std::map<int, int>> out;
  for (int i = 0; i < x.shape().size(); ++i) out.push_back(x.at(i).homology_dims());
  return out;
}

bool pointwise_same_homology(const Diagram& a, const Diagram& b) {
  if (a.shape() != b.shape()) return false;
  for (int i = 0; i < a.shape().size(); ++i)
    if (a.at(i).homology_dims() != b.at(i).homology_dims()) return false;
  return true;
}

Diagram zero_diagram(const FinPoset& shape, FieldSpec f) {
  std::vector<ChainComplex> values(shape.size(), ChainComplex(f));
  std::map<std::pair<int, int>, ChainMap> covers;
  for (const auto& [a, b] : shape.covers())
    covers.emplace(std::make_pair(a, b), ChainMap::zero(values[a], values[b]));
  return Diagram::make(shape, std::move(values), std::move(covers), false);
}

Diagram diagram_by_labels(const FinPoset& shape, const std::map<Label, ChainComplex>& values,
                          const std::map<std::pair<Label, Label>, ChainMap>& covers, FieldSpec f,
                          bool verify) {
  std::vector<ChainComplex> vals;
  for (int i = 0; i < shape.size(); ++i) {
    auto it = values.find(shape.label(i));
    vals.push_back(it == values.end() ? ChainComplex(f) : it->second);
  }
  std::map<std::pair<int, int>, ChainMap> cov;
  for (const auto& [a, b] : shape.covers()) {
    auto it = covers.find({shape.label(a), shape.label(b)});
    cov.emplace(std::make_pair(a, b),
                it == covers.end() ? ChainMap::zero(vals[a], vals[b]) : it->second);
  }
  return Diagram::make(shape, std::move(vals), std::move(cov), verify);
}

Diagram chain_diagram(const std::vector<ChainComplex>& values, const std::vector<ChainMap>& maps,
                      bool verify) {
  const int n = static_cast<int>(values.size());
  if (static_cast<int>(maps.size()) != n - 1)
    throw std::invalid_argument("chain_diagram needs n-1 maps for n values");
  FinPoset shape = a_n_poset(n);
  std::map<std::pair<int, int>, ChainMap> covers;
  for (int i = 0; i + 1 < n; ++i) covers.emplace(std::make_pair(i, i + 1), maps[i]);
  return Diagram::make(shape, std::vector<ChainComplex>(values), std::move(covers), verify);
}

}  // namespace kanex
