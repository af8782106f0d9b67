#include "doctest.h"
#include "kanex/matrix.hpp"

using namespace kanex;

namespace {
Matrix from_rows(FieldSpec f, int r, int c, std::initializer_list<long long> vals) {
  Matrix m(f, r, c);
  auto it = vals.begin();
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m.set(i, j, *it++);
  return m;
}
}  // namespace

TEST_CASE("rank and nullspace over F_p and Q") {
  for (auto f : {make_field(32003), make_field(0), make_field(5)}) {
    Matrix a = from_rows(f, 2, 3, {1, 2, 3, 2, 4, 6});
    CHECK(a.rank() == 1);
    Matrix n = a.nullspace();
    CHECK(n.cols() == 2);
    CHECK((a * n).is_zero());
    Matrix id = Matrix::identity(f, 4);
    CHECK(id.rank() == 4);
    CHECK(id.nullspace().cols() == 0);
  }
}

TEST_CASE("solve consistent and inconsistent systems") {
  FieldSpec f = make_field(32003);
  Matrix a = from_rows(f, 2, 2, {1, 1, 0, 1});
  Matrix b = from_rows(f, 2, 1, {3, 2});
  auto x = a.solve(b);
  REQUIRE(x.has_value());
  CHECK((a * *x) == b);
  Matrix sing = from_rows(f, 2, 1, {1, 1});
  Matrix bad = from_rows(f, 2, 1, {1, 2});
  CHECK(!sing.solve(bad).has_value());
}

TEST_CASE("rational arithmetic is exact") {
  FieldSpec f = make_field(0);
  Matrix a(f, 1, 1);
  a.set_parsed(0, 0, "1/3");
  Matrix b(f, 1, 1);
  b.set_parsed(0, 0, "2/3");
  CHECK((a + b) == Matrix::identity(f, 1));
  CHECK((a * b).entry_string(0, 0) == "2/9");
}

TEST_CASE("block assembly") {
  FieldSpec f = make_field(32003);
  Matrix a = Matrix::identity(f, 2);
  Matrix z = Matrix::zeros(f, 2, 1);
  Matrix m = Matrix::block(f, {{&a, &z}});
  CHECK(m.rows() == 2);
  CHECK(m.cols() == 3);
  CHECK(m.rank() == 2);
}

TEST_CASE("pivot columns identify independent columns mod earlier ones") {
  FieldSpec f = make_field(32003);
  Matrix a = from_rows(f, 2, 4, {1, 2, 0, 1, 0, 0, 0, 1});
  auto p = a.pivot_columns();
  REQUIRE(p.size() == 2);
  CHECK(p[0] == 0);
  CHECK(p[1] == 3);
}
