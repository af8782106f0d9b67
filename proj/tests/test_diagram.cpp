#include "doctest.h"
#include "kanex/diagram.hpp"
#include "kanex/shapes.hpp"

using namespace kanex;

namespace {
const FieldSpec F = make_field(32003);
ChainComplex stalk(int degree) { return ChainComplex(F, degree, {1}, {}); }
}  // namespace

TEST_CASE("strictness validation catches bad squares") {
  FinPoset sq = product(interval(1), interval(1));
  ChainComplex k0 = stalk(0);
  std::map<Label, ChainComplex> vals;
  for (const auto& l : sq.objects()) vals.emplace(l, k0);
  std::map<std::pair<Label, Label>, ChainMap> covers;
  ChainMap id = ChainMap::identity(k0);
  ChainMap z = ChainMap::zero(k0, k0);
  covers.emplace(std::make_pair(Label::of(0, 0), Label::of(1, 0)), id);
  covers.emplace(std::make_pair(Label::of(0, 0), Label::of(0, 1)), id);
  covers.emplace(std::make_pair(Label::of(1, 0), Label::of(1, 1)), id);
  covers.emplace(std::make_pair(Label::of(0, 1), Label::of(1, 1)), z);
  CHECK_THROWS(diagram_by_labels(sq, vals, covers, F, true));
  covers[{Label::of(0, 1), Label::of(1, 1)}] = id;
  CHECK_NOTHROW(diagram_by_labels(sq, vals, covers, F, true));
}

TEST_CASE("diagram cone and sums are pointwise") {
  ChainComplex k0 = stalk(0);
  Diagram x = chain_diagram({k0, k0}, {ChainMap::identity(k0)});
  DiagramMap idm(x, x, {ChainMap::identity(k0), ChainMap::identity(k0)}, true);
  Diagram c = diagram_cone(idm);
  CHECK(c.at(0).is_acyclic());
  CHECK(c.at(1).is_acyclic());
  CHECK(diagram_qis(idm));

  Diagram s = diagram_sum({x, x});
  CHECK(s.at(0).homology_dims() == std::map<int, int>{{0, 2}});
  s.check_strict();
}

TEST_CASE("restriction reindexes strictly") {
  Diagram x = chain_diagram({stalk(0), stalk(0), stalk(1)},
                            {ChainMap::identity(stalk(0)), ChainMap::zero(stalk(0), stalk(1))});
  // restrict along the inclusion 1 -> A_3 hitting object 2
  FinPoset a1 = a_n_poset(1);
  MonotoneMap u = MonotoneMap::make(a1, a_n_poset(3), [](const Label&) { return Label::of(2); });
  Diagram r = restrict_diagram(u, x);
  CHECK(r.at(0).homology_dims() == std::map<int, int>{{0, 1}});
}
