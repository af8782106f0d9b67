#pragma once

#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "kanex/matrix.hpp"

namespace kanex {

// Bounded chain complex with homological grading: d_n : X_n -> X_{n-1}.
// Value-semantic handle over shared immutable data; homology is memoized on
// the shared node, so copies and restrictions reuse it.
class ChainComplex {
 public:
  ChainComplex() : ChainComplex(FieldSpec{32003}) {}
  explicit ChainComplex(FieldSpec f);  // the zero complex
  // dims[k] is the dimension in degree lo+k; diffs maps degree n in
  // (lo, lo+dims.size()) to d_n. Missing differentials are zero.
  ChainComplex(FieldSpec f, int lo, std::vector<int> dims, std::map<int, Matrix> diffs);

  const FieldSpec& field() const;
  int lo() const;
  int hi() const;  // inclusive; lo() > hi() for the zero complex
  int dim(int n) const;
  int total_dim() const;
  Matrix d(int n) const;  // dim(n-1) x dim(n), zero if absent

  const std::map<int, int>& homology_dims() const;  // degrees with H != 0 only
  bool is_acyclic() const;
  int homology_dim(int n) const;

  // Memoized cycle basis (columns) and homology representatives in degree n.
  const Matrix& cycles(int n) const;
  const Matrix& homology_reps(int n) const;

  ChainComplex shifted(int k) const;  // X[k]_n = X_{n-k}, d scaled by (-1)^k

  bool same_node(const ChainComplex& o) const { return impl_ == o.impl_; }

 private:
  struct Impl;
  std::shared_ptr<const Impl> impl_;
};

struct SumWithMaps;

// Degreewise direct sum with canonical injections/projections.
SumWithMaps direct_sum(const std::vector<ChainComplex>& parts);

class ChainMap {
 public:
  ChainMap() : source_(FieldSpec{32003}), target_(FieldSpec{32003}) {}
  // Zero map by default components; verify checks f d = d f degreewise.
  ChainMap(ChainComplex source, ChainComplex target, std::map<int, Matrix> comps,
           bool verify = true);
  static ChainMap zero(ChainComplex source, ChainComplex target);
  static ChainMap identity(const ChainComplex& c);

  const ChainComplex& source() const { return source_; }
  const ChainComplex& target() const { return target_; }
  Matrix component(int n) const;  // target.dim(n) x source.dim(n)
  const std::map<int, Matrix>& components() const { return comps_; }

  bool is_zero_map() const;
  bool equals(const ChainMap& o) const;

  ChainMap shifted(int k) const;

 private:
  ChainComplex source_, target_;
  std::map<int, Matrix> comps_;  // only degrees where both sides have dim > 0
};

struct SumWithMaps {
  ChainComplex sum;
  std::vector<ChainMap> injections;
  std::vector<ChainMap> projections;
};

ChainMap compose(const ChainMap& g, const ChainMap& f);            // g after f
ChainMap add_maps(const ChainMap& f, const ChainMap& g);
ChainMap negate(const ChainMap& f);

struct ConeResult {
  ChainComplex cone;  // cone(f)_n = X_{n-1} (+) Y_n, d = [[-dX, 0], [-f, dY]]
  ChainMap include_target;   // Y -> cone(f)
  ChainMap project_shifted;  // cone(f) -> X[1]
};
ConeResult cone(const ChainMap& f);

bool is_quasi_iso(const ChainMap& f);

// Map induced on homology in degree n, in chosen bases of H_n.
Matrix homology_induced(const ChainMap& f, int n);

// Degreewise h with f = d h + h d, if one exists.
std::optional<std::map<int, Matrix>> null_homotopy(const ChainMap& f);

long long euler_characteristic(const ChainComplex& c);

// Acyclic complex K(B) = B[1] (+) B with a degreewise-onto chain map to B;
// used to build surjective resolutions of towers.
struct AcyclicCover {
  ChainComplex cover;
  ChainMap onto;  // cover ->> B
};
AcyclicCover acyclic_cover(const ChainComplex& b);

}  // namespace kanex
