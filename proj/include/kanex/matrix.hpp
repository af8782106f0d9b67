#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "kanex/field.hpp"

namespace kanex {

// Dense matrix over FieldSpec. Storage is row-major; F_p entries live in a
// uint32 buffer, rationals in a cpp_rational buffer. All arithmetic is exact.
class Matrix {
 public:
  Matrix() : Matrix(FieldSpec{32003}, 0, 0) {}
  Matrix(FieldSpec f, int rows, int cols);

  static Matrix identity(FieldSpec f, int n);
  static Matrix zeros(FieldSpec f, int rows, int cols) { return Matrix(f, rows, cols); }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const FieldSpec& field() const { return field_; }

  void set(int i, int j, long long v);
  void set_rational(int i, int j, const Rational& v);
  // Parses "a/b" or an integer literal.
  void set_parsed(int i, int j, const std::string& v);
  Rational get_rational(int i, int j) const;
  std::string entry_string(int i, int j) const;
  bool entry_is_zero(int i, int j) const;

  bool is_zero() const;
  bool operator==(const Matrix& o) const;
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix negated() const;
  Matrix scaled_int(long long c) const;

  // Block assembly: grid of matrices, ragged checks enforced.
  static Matrix block(FieldSpec f, const std::vector<std::vector<const Matrix*>>& grid);

  // Writes blk (optionally negated) at offset (roff, coff); fast path that
  // avoids per-entry rational conversions.
  void insert_block(const Matrix& blk, int roff, int coff, bool negate = false);
  void insert_identity(int size, int roff, int coff, bool negate = false);

  Matrix submatrix(int r0, int r1, int c0, int c1) const;  // half-open ranges

  int rank() const;
  // Pivot column indices of the row echelon form.
  std::vector<int> pivot_columns() const;
  // Basis of { x : A x = 0 } as columns. Shape cols() x nullity.
  Matrix nullspace() const;
  // Solves A X = B columnwise; returns nullopt if inconsistent.
  std::optional<Matrix> solve(const Matrix& b) const;

 private:
  FieldSpec field_;
  int rows_ = 0;
  int cols_ = 0;
  std::variant<std::vector<std::uint32_t>, std::vector<Rational>> data_;

  template <class F>
  friend auto visit_mats(F&& f, const Matrix& a, const Matrix& b);
};

}  // namespace kanex
