#include "doctest.h"
#include "kanex/kan.hpp"
#include "kanex/shapes.hpp"

using namespace kanex;

namespace {

const FieldSpec F = make_field(32003);

ChainComplex stalk(int degree) { return ChainComplex(F, degree, {1}, {}); }

Diagram stalk_at(const FinPoset& shape, const Label& l) {
  return diagram_by_labels(shape, {{l, stalk(0)}}, {}, F);
}

FinPoset span_shape() {  // 1 <- 0 -> 2
  return FinPoset::make({Label::of(0), Label::of(1), Label::of(2)},
                        [](const Label& a, const Label& b) { return a == b || a.c[0] == 0; });
}

FinPoset cospan_shape() {  // 0 -> 2 <- 1
  return FinPoset::make({Label::of(0), Label::of(1), Label::of(2)},
                        [](const Label& a, const Label& b) { return a == b || b.c[0] == 2; });
}

}  // namespace

TEST_CASE("hocolim collapses on a single point and suspends spans") {
  Diagram one = stalk_at(interval(0), Label::of(0));
  auto h = hocolim(one);
  CHECK(h.total.homology_dims() == std::map<int, int>{{0, 1}});

  Diagram sp = stalk_at(span_shape(), Label::of(0));
  CHECK(hocolim(sp).total.homology_dims() == std::map<int, int>{{1, 1}});
}

TEST_CASE("holim of cospans desuspends and constants have contractible nerve") {
  Diagram co = stalk_at(cospan_shape(), Label::of(2));
  CHECK(holim(co).total.homology_dims() == std::map<int, int>{{-1, 1}});

  // constant diagram on the square
  FinPoset sq = product(interval(1), interval(1));
  std::map<Label, ChainComplex> vals;
  std::map<std::pair<Label, Label>, ChainMap> covers;
  ChainComplex k0 = stalk(0);
  for (const auto& l : sq.objects()) vals.emplace(l, k0);
  for (const auto& [a, b] : sq.covers())
    covers.emplace(std::make_pair(sq.label(a), sq.label(b)), ChainMap::identity(k0));
  Diagram cst = diagram_by_labels(sq, vals, covers, F);
  CHECK(holim(cst).total.homology_dims() == std::map<int, int>{{0, 1}});
  CHECK(hocolim(cst).total.homology_dims() == std::map<int, int>{{0, 1}});
}

TEST_CASE("hocolim over a shape with maximum is the value at the maximum") {
  // nontrivial values on interval(2)
  ChainComplex k0 = stalk(0), k1 = stalk(1);
  auto s = direct_sum({k0, k1});
  ChainMap inc = s.injections[0];
  Diagram x = chain_diagram({k0, s.sum, s.sum}, {inc, ChainMap::identity(s.sum)});
  auto h = hocolim(x);
  // canonical map from the maximum is a quasi-isomorphism
  CHECK(is_quasi_iso(h.canonical[2]));
}

TEST_CASE("kan_extend: cosieve fast path gives literal zeros") {
  MonotoneMap u = conn_i(4, 1, 3);  // cosieve K(4,1,4) -> K(4,1,3)
  Diagram x = stalk_at(u.source(), Label::of(1, 0));
  Diagram e = kan_extend(KanSide::Left, u, x);
  CHECK(e.at(Label::of(0, 1)).total_dim() == 0);
  CHECK(e.at(Label::of(1, 0)).homology_dims() == std::map<int, int>{{0, 1}});
}

TEST_CASE("fully faithful comparisons are pointwise quasi-isomorphisms") {
  // u: span -> square (missing the terminal corner)
  FinPoset sq = product(interval(1), interval(1));
  FinPoset sp = span_shape();
  MonotoneMap u = MonotoneMap::make(sp, sq, [](const Label& l) {
    if (l.c[0] == 0) return Label::of(0, 0);
    if (l.c[0] == 1) return Label::of(1, 0);
    return Label::of(0, 1);
  });
  Diagram x = stalk_at(sp, Label::of(0));
  Diagram e = kan_extend(KanSide::Left, u, x);
  DiagramMap eps = left_kan_comparison(u, x, e);
  CHECK(diagram_qis(eps));
  // the pushout corner of the extension computes the suspension
  CHECK(e.at(Label::of(1, 1)).homology_dims() == std::map<int, int>{{1, 1}});

  MonotoneMap w = MonotoneMap::make(cospan_shape(), sq, [](const Label& l) {
    if (l.c[0] == 0) return Label::of(1, 0);
    if (l.c[0] == 1) return Label::of(0, 1);
    return Label::of(1, 1);
  });
  Diagram y = stalk_at(cospan_shape(), Label::of(2));
  Diagram er = kan_extend(KanSide::Right, w, y);
  DiagramMap eta = right_kan_comparison(w, y, er);
  CHECK(diagram_qis(eta));
  CHECK(er.at(Label::of(0, 0)).homology_dims() == std::map<int, int>{{-1, 1}});
}

TEST_CASE("total cofiber detects (co)cartesian squares") {
  FinPoset sq = product(interval(1), interval(1));
  SquareRef ref{Label::of(0, 0), Label::of(1, 0), Label::of(0, 1), Label::of(1, 1)};

  // square built by left Kan extension from the span is bicartesian
  FinPoset sp = span_shape();
  MonotoneMap u = MonotoneMap::make(sp, sq, [](const Label& l) {
    if (l.c[0] == 0) return Label::of(0, 0);
    if (l.c[0] == 1) return Label::of(1, 0);
    return Label::of(0, 1);
  });
  Diagram x = stalk_at(sp, Label::of(0));
  Diagram e = kan_extend(KanSide::Left, u, x);
  CHECK(total_cofiber(ref, e).is_acyclic());
  CHECK(is_bicartesian(ref, e));

  // constant square is bicartesian
  std::map<Label, ChainComplex> vals;
  std::map<std::pair<Label, Label>, ChainMap> covers;
  ChainComplex k0 = stalk(0);
  for (const auto& l : sq.objects()) vals.emplace(l, k0);
  for (const auto& [a, b] : sq.covers())
    covers.emplace(std::make_pair(sq.label(a), sq.label(b)), ChainMap::identity(k0));
  CHECK(is_bicartesian(ref, diagram_by_labels(sq, vals, covers, F)));

  // zeros with k at the corner: total cofiber is k@0, not bicartesian
  Diagram corner = stalk_at(sq, Label::of(1, 1));
  CHECK(total_cofiber(ref, corner).homology_dims() == std::map<int, int>{{0, 1}});
  CHECK(!is_bicartesian(ref, corner));
  CHECK(!total_fiber(ref, corner).is_acyclic());

  // square of zeros is bicartesian
  CHECK(is_bicartesian(ref, zero_diagram(sq, F)));
}

TEST_CASE("restriction along the collapse makes the identified arrow an identity") {
  MonotoneMap v = conn_collapse_v();
  Diagram y = stalk_at(v.target(), Label::of(0));
  // give the collapsed object a nonzero value and pull back
  Diagram x = restrict_diagram(v, y);
  CHECK(x.at(Label::of(0)).homology_dims() == x.at(Label::of(2)).homology_dims());
  ChainMap ac = x.arrow(Label::of(0), Label::of(2));
  CHECK(is_quasi_iso(ac));
}

TEST_CASE("unrelated-variable commutation on a product shape") {
  // u: {0} -> interval(1) on the first factor, Q = interval(1)
  FinPoset pt = interval(0);
  FinPoset p1 = interval(1);
  MonotoneMap u = MonotoneMap::make(pt, p1, [](const Label&) { return Label::of(0); });
  FinPoset pq = product(pt, p1);
  FinPoset bq = product(p1, p1);
  MonotoneMap uq = MonotoneMap::make(pq, bq, [](const Label& l) { return Label::of(0, l.c[1]); });
  Diagram x = stalk_at(pq, Label::of(0, 0));
  Diagram big = kan_extend(KanSide::Left, uq, x);
  // evaluate at q = 1 then compare with extending the restriction
  MonotoneMap at1 = MonotoneMap::make(pt, pq, [](const Label&) { return Label::of(0, 1); });
  Diagram small = kan_extend(KanSide::Left, u, restrict_diagram(at1, x));
  MonotoneMap bigat1 = MonotoneMap::make(p1, bq, [](const Label& l) { return Label::of(l.c[0], 1); });
  Diagram bigres = restrict_diagram(bigat1, big);
  CHECK(pointwise_same_homology(small, bigres));
}
