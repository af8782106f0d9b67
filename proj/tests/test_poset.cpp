#include <functional>

#include "doctest.h"
#include "kanex/poset.hpp"
#include "kanex/shapes.hpp"

using namespace kanex;

namespace {
int count_true(const FinPoset& p) {
  int c = 0;
  for (int i = 0; i < p.size(); ++i)
    for (int j = 0; j < p.size(); ++j)
      if (p.leq(i, j)) ++c;
  return c;
}
}  // namespace

TEST_CASE("interval posets") {
  CHECK(interval(0).size() == 1);
  FinPoset i1 = interval(1);
  CHECK(i1.size() == 2);
  CHECK(i1.leq(Label::of(0), Label::of(1)));
  CHECK(!i1.leq(Label::of(1), Label::of(0)));
  CHECK(count_true(interval(3)) == 10);  // pairs i <= j among 0..3
}

TEST_CASE("products") {
  FinPoset sq = product(interval(1), interval(1));
  CHECK(sq.size() == 4);
  CHECK(sq.leq(Label::of(0, 0), Label::of(1, 1)));
  CHECK(!sq.leq(Label::of(1, 0), Label::of(0, 1)));
  FinPoset unit = product(interval(2), interval(0));
  CHECK(unit.size() == 3);

  // brute-force chain census of [2] x [1]
  FinPoset p = product(interval(2), interval(1));
  CHECK(p.size() == 6);
  auto chains = p.chains();
  int maximal4 = 0;  // maximal chains have 4 vertices
  for (const auto& c : chains)
    if (c.size() == 4) ++maximal4;
  CHECK(maximal4 == 3);
}

TEST_CASE("chain enumeration is deterministic and complete") {
  CHECK(interval(0).chains().size() == 1);
  auto c1 = interval(1).chains();
  REQUIRE(c1.size() == 3);
  CHECK(c1[0] == std::vector<int>{0});
  CHECK(c1[1] == std::vector<int>{0, 1});
  CHECK(c1[2] == std::vector<int>{1});
  FinPoset sq = product(interval(1), interval(1));
  CHECK(sq.chains().size() == 11);  // 4 vertices + 5 edges + 2 two-chains
}

TEST_CASE("slices") {
  MonotoneMap id2 = MonotoneMap::identity(interval(2));
  auto s = slice(id2, Label::of(1), SliceSide::Under);
  CHECK(s.poset.size() == 2);
  CHECK(s.poset.contains(Label::of(0)));
  CHECK(s.poset.contains(Label::of(1)));

  MonotoneMap cst = MonotoneMap::make(interval(1), interval(0),
                                      [](const Label&) { return Label::of(0); });
  CHECK(slice(cst, Label::of(0), SliceSide::Under).poset.size() == 2);

  // step-4 map for n = 4: the slice under the terminal object is everything
  MonotoneMap u = conn_i(4, 1, 4);
  CHECK(slice(u, Label::of(2, 2), SliceSide::Under).poset.size() == 8);
  // and under (2,1) the brute-force preimage-downset has 4 objects
  CHECK(slice(u, Label::of(2, 1), SliceSide::Under).poset.size() == 4);
}

TEST_CASE("sieve kinds") {
  Subposet bottom = full_subposet(interval(1), {0});
  MonotoneMap inc0 = MonotoneMap::make(bottom.poset, interval(1), bottom.parent_index, false);
  CHECK(sieve_kind(inc0) == SieveKind::Sieve);

  MonotoneMap i13 = conn_i(4, 1, 3);
  CHECK(sieve_kind(i13) == SieveKind::Cosieve);
  CHECK(sieve_kind(conn_i(3, 1, 3)) == SieveKind::Cosieve);
  CHECK(sieve_kind(conn_i(5, 2, 3)) == SieveKind::Cosieve);

  // {0,2} inside interval(2) is not full
  Subposet gap = full_subposet(interval(2), {0, 2});
  std::vector<std::vector<bool>> leq = {{true, false}, {false, true}};  // discrete order
  FinPoset disc = FinPoset::from_table({Label::of(0), Label::of(2)}, leq);
  MonotoneMap notfull = MonotoneMap::make(disc, interval(2), {0, 2}, false);
  CHECK(sieve_kind(notfull) == SieveKind::None);
  (void)gap;
}

TEST_CASE("poset axioms are enforced") {
  std::vector<std::vector<bool>> bad = {{true, true}, {true, true}};
  CHECK_THROWS(FinPoset::from_table({Label::of(0), Label::of(1)}, bad));
  std::vector<std::vector<bool>> notrans = {
      {true, true, false}, {false, true, true}, {false, false, true}};
  CHECK_THROWS(FinPoset::from_table({Label::of(0), Label::of(1), Label::of(2)}, notrans));
}

TEST_CASE("monotone maps validate order preservation") {
  CHECK_THROWS(MonotoneMap::make(interval(1), interval(1), std::vector<int>{1, 0}));
  MonotoneMap ok = MonotoneMap::make(interval(1), interval(1), std::vector<int>{0, 0});
  CHECK(ok.is_injective() == false);
}

TEST_CASE("label parsing round trip") {
  for (const auto& s : {"pt", "3", "-2", "(1,0)", "(-3,4)", "(1,0,2)"})
    CHECK(parse_label(s).str() == s);
}
