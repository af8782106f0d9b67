#pragma once

#include <map>
#include <memory>

#include "kanex/complex.hpp"
#include "kanex/poset.hpp"

namespace kanex {

// Strictly commutative FinPoset-indexed diagram of chain complexes. Values
// and covering-arrow maps are stored; all other arrows arise by composition
// (memoized). Path independence is validated when verify is requested.
class Diagram {
 public:
  Diagram() = default;
  static Diagram make(FinPoset shape, std::vector<ChainComplex> values,
                      std::map<std::pair<int, int>, ChainMap> cover_maps, bool verify);

  const FinPoset& shape() const { return shape_; }
  const FieldSpec& field() const { return field_; }
  const ChainComplex& at(int i) const { return values_[i]; }
  const ChainComplex& at(const Label& l) const { return values_[shape_.index_checked(l)]; }
  ChainMap arrow(int a, int b) const;  // requires a <= b
  ChainMap arrow(const Label& a, const Label& b) const;

  void check_strict() const;  // throws on a path-independence failure

 private:
  FinPoset shape_;
  FieldSpec field_;
  std::vector<ChainComplex> values_;
  std::map<std::pair<int, int>, ChainMap> covers_;
  struct Memo {
    std::map<std::pair<int, int>, ChainMap> arrows;
  };
  std::shared_ptr<Memo> memo_ = std::make_shared<Memo>();
};

class DiagramMap {
 public:
  DiagramMap() = default;
  // verify checks naturality on covering arrows.
  DiagramMap(Diagram source, Diagram target, std::vector<ChainMap> components, bool verify);

  const Diagram& source() const { return source_; }
  const Diagram& target() const { return target_; }
  const ChainMap& component(int i) const { return comps_[i]; }
  const ChainMap& component(const Label& l) const {
    return comps_[source_.shape().index_checked(l)];
  }

 private:
  Diagram source_, target_;
  std::vector<ChainMap> comps_;
};

Diagram restrict_diagram(const MonotoneMap& u, const Diagram& x);  // u^* x
DiagramMap restrict_map(const MonotoneMap& u, const DiagramMap& f);

// true iff every component is a quasi-isomorphism.
bool diagram_qis(const DiagramMap& f);

// Pointwise direct sum of diagrams over one shape.
Diagram diagram_sum(const std::vector<Diagram>& parts);

// Pointwise mapping cone; a strict diagram again.
Diagram diagram_cone(const DiagramMap& f);

// Pointwise homology tables (degree -> dim per object).
std::vector<std::map<int, int>> homology_table(const Diagram& x);
bool pointwise_same_homology(const Diagram& a, const Diagram& b);

Diagram zero_diagram(const FinPoset& shape, FieldSpec f);

// Convenience builder: values by label (absent labels get the zero complex),
// cover maps by label pair (absent pairs get the zero map, which is only
// valid when one side is zero).
Diagram diagram_by_labels(const FinPoset& shape, const std::map<Label, ChainComplex>& values,
                          const std::map<std::pair<Label, Label>, ChainMap>& covers, FieldSpec f,
                          bool verify = true);

// Diagram on A_n (objects 1..n) from n complexes and the n-1 connecting maps.
Diagram chain_diagram(const std::vector<ChainComplex>& values, const std::vector<ChainMap>& maps,
                      bool verify = true);

// Pullback along a monotone projection; alias for restrict_diagram with the
// emphasis that it is used to spread a diagram constantly along new factors.
}  // namespace kanex
