#pragma once

#include <cstdint>

#include "kanex/pipeline.hpp"

namespace kanex {

// Deterministic generator (splitmix64); identical seeds give identical
// streams on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed + 0x9e3779b97f4a7c15ull) {}
  std::uint64_t next();
  int uniform(int lo, int hi);  // inclusive bounds

 private:
  std::uint64_t state_;
};

struct RandomSpec {
  int lo_degree = -2;
  int hi_degree = 3;
  int max_dim = 6;
  int generators = 3;  // stalk generators per random diagram
};

ChainComplex random_complex(Rng& rng, FieldSpec f, const RandomSpec& spec);
ChainComplex random_acyclic(Rng& rng, FieldSpec f, const RandomSpec& spec);

// Uniform sample from the space of chain maps src -> tgt; when
// must_precompose_to_zero is given, also requires f . pre = 0.
ChainMap random_chain_map(Rng& rng, const ChainComplex& src, const ChainComplex& tgt,
                          const ChainMap* must_precompose_to_zero = nullptr);

// Sum of upset-stalk diagrams k[P_{>=b}] (x) C with a remembered generator
// list, so that random natural maps between two sums can be built.
struct StalkSum {
  Diagram diagram;
  std::vector<std::pair<int, ChainComplex>> gens;  // (base object, value)
};
StalkSum random_stalk_sum(Rng& rng, const FinPoset& shape, FieldSpec f, const RandomSpec& spec,
                          bool acyclic_values = false);

// Random bounded diagram: a stalk sum, optionally replaced by the pointwise
// cone of a random natural map between two stalk sums (non-split strictness).
Diagram random_diagram(Rng& rng, const FinPoset& shape, FieldSpec f, const RandomSpec& spec);

DiagramMap random_stalk_map(Rng& rng, const StalkSum& x, const StalkSum& y);

// Random natural endomap-style pair over a shape: a map f: X -> Y between
// independently generated stalk sums.
DiagramMap random_diagram_map(Rng& rng, const FinPoset& shape, FieldSpec f, const RandomSpec& spec);

// Random strict quiver complex with alpha_{i+1} alpha_i = 0 exactly.
QuiverComplex random_quiver(Rng& rng, int n, FieldSpec f, const RandomSpec& spec);

// Random member of the A(n,2) spec: quiver placement, optionally padded by an
// all-acyclic stalk-sum (acyclic vanishing slots instead of literal zeros).
Diagram random_member_a_n2(Rng& rng, int n, FieldSpec f, const RandomSpec& spec,
                           bool literal_zeros);

}  // namespace kanex
