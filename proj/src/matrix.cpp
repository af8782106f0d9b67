#include "kanex/matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace kanex {

namespace {

struct FpOps {
  std::uint32_t p;
  using T = std::uint32_t;
  T zero() const { return 0; }
  T one() const { return 1; }
  bool is_zero(const T& a) const { return a == 0; }
  T add(const T& a, const T& b) const { return fp::add(a, b, p); }
  T sub(const T& a, const T& b) const { return fp::sub(a, b, p); }
  T mul(const T& a, const T& b) const { return fp::mul(a, b, p); }
  T neg(const T& a) const { return fp::neg(a, p); }
  T inv(const T& a) const { return fp::inv(a, p); }
};

struct QOps {
  using T = Rational;
  T zero() const { return T(0); }
  T one() const { return T(1); }
  bool is_zero(const T& a) const { return a == 0; }
  T add(const T& a, const T& b) const { return a + b; }
  T sub(const T& a, const T& b) const { return a - b; }
  T mul(const T& a, const T& b) const { return a * b; }
  T neg(const T& a) const { return -a; }
  T inv(const T& a) const {
    if (a == 0) throw std::domain_error("division by zero");
    return 1 / a;
  }
};

template <class O>
void mul_into(const O& ops, const std::vector<typename O::T>& a, int ar, int ac,
              const std::vector<typename O::T>& b, int bc, std::vector<typename O::T>& out) {
  for (int i = 0; i < ar; ++i) {
    for (int k = 0; k < ac; ++k) {
      const auto& aik = a[static_cast<size_t>(i) * ac + k];
      if (ops.is_zero(aik)) continue;
      const size_t brow = static_cast<size_t>(k) * bc;
      const size_t orow = static_cast<size_t>(i) * bc;
      for (int j = 0; j < bc; ++j)
        out[orow + j] = ops.add(out[orow + j], ops.mul(aik, b[brow + j]));
    }
  }
}

// Reduces m (rows x cols, row-major) to row echelon form in place, returns
// pivot columns. If rhs != nullptr it has the same row count and is carried
// along (for solving).
template <class O>
std::vector<int> echelon(const O& ops, std::vector<typename O::T>& m, int rows, int cols,
                         std::vector<typename O::T>* rhs, int rhs_cols) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pr = -1;
    for (int i = r; i < rows; ++i) {
      if (!ops.is_zero(m[static_cast<size_t>(i) * cols + c])) {
        pr = i;
        break;
      }
    }
    if (pr < 0) continue;
    if (pr != r) {
      for (int j = 0; j < cols; ++j)
        std::swap(m[static_cast<size_t>(pr) * cols + j], m[static_cast<size_t>(r) * cols + j]);
      if (rhs)
        for (int j = 0; j < rhs_cols; ++j)
          std::swap((*rhs)[static_cast<size_t>(pr) * rhs_cols + j],
                    (*rhs)[static_cast<size_t>(r) * rhs_cols + j]);
    }
    const auto piv_inv = ops.inv(m[static_cast<size_t>(r) * cols + c]);
    for (int j = c; j < cols; ++j)
      m[static_cast<size_t>(r) * cols + j] = ops.mul(piv_inv, m[static_cast<size_t>(r) * cols + j]);
    if (rhs)
      for (int j = 0; j < rhs_cols; ++j)
        (*rhs)[static_cast<size_t>(r) * rhs_cols + j] =
            ops.mul(piv_inv, (*rhs)[static_cast<size_t>(r) * rhs_cols + j]);
    for (int i = 0; i < rows; ++i) {
      if (i == r) continue;
      const auto f = m[static_cast<size_t>(i) * cols + c];
      if (ops.is_zero(f)) continue;
      for (int j = c; j < cols; ++j)
        m[static_cast<size_t>(i) * cols + j] = ops.sub(
            m[static_cast<size_t>(i) * cols + j], ops.mul(f, m[static_cast<size_t>(r) * cols + j]));
      if (rhs)
        for (int j = 0; j < rhs_cols; ++j)
          (*rhs)[static_cast<size_t>(i) * rhs_cols + j] =
              ops.sub((*rhs)[static_cast<size_t>(i) * rhs_cols + j],
                      ops.mul(f, (*rhs)[static_cast<size_t>(r) * rhs_cols + j]));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <class O>
std::vector<typename O::T> nullspace_impl(const O& ops, std::vector<typename O::T> m, int rows,
                                          int cols, int& nullity) {
  auto pivots = echelon(ops, m, rows, cols, static_cast<std::vector<typename O::T>*>(nullptr), 0);
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<int> free_cols;
  for (int c = 0; c < cols; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  nullity = static_cast<int>(free_cols.size());
  std::vector<typename O::T> basis(static_cast<size_t>(cols) * nullity, ops.zero());
  for (int k = 0; k < nullity; ++k) {
    const int fc = free_cols[k];
    basis[static_cast<size_t>(fc) * nullity + k] = ops.one();
    for (size_t r = 0; r < pivots.size(); ++r) {
      const auto v = m[r * cols + fc];
      if (!ops.is_zero(v)) basis[static_cast<size_t>(pivots[r]) * nullity + k] = ops.neg(v);
    }
  }
  return basis;
}

}  // namespace

Matrix::Matrix(FieldSpec f, int rows, int cols) : field_(f), rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
  const size_t n = static_cast<size_t>(rows) * static_cast<size_t>(cols);
  if (f.is_rational())
    data_ = std::vector<Rational>(n, Rational(0));
  else
    data_ = std::vector<std::uint32_t>(n, 0u);
}

Matrix Matrix::identity(FieldSpec f, int n) {
  Matrix m(f, n, n);
  for (int i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

void Matrix::set(int i, int j, long long v) {
  const size_t idx = static_cast<size_t>(i) * cols_ + j;
  if (field_.is_rational())
    std::get<std::vector<Rational>>(data_)[idx] = Rational(v);
  else
    std::get<std::vector<std::uint32_t>>(data_)[idx] = fp::from_int(v, field_.characteristic);
}

void Matrix::set_rational(int i, int j, const Rational& v) {
  const size_t idx = static_cast<size_t>(i) * cols_ + j;
  if (field_.is_rational()) {
    std::get<std::vector<Rational>>(data_)[idx] = v;
  } else {
    const auto p = field_.characteristic;
    Rational r = v;
    const boost::multiprecision::cpp_int num(boost::multiprecision::numerator(r));
    const boost::multiprecision::cpp_int den(boost::multiprecision::denominator(r));
    boost::multiprecision::cpp_int nm = num % p;
    if (nm < 0) nm += p;
    const std::uint32_t n32 = static_cast<std::uint32_t>(nm);
    const std::uint32_t d32 = static_cast<std::uint32_t>(boost::multiprecision::cpp_int(den % p));
    if (d32 == 0) throw std::domain_error("rational has zero denominator mod p");
    std::get<std::vector<std::uint32_t>>(data_)[idx] = fp::mul(n32, fp::inv(d32, p), p);
  }
}

void Matrix::set_parsed(int i, int j, const std::string& v) {
  const auto slash = v.find('/');
  if (slash == std::string::npos) {
    set_rational(i, j, Rational(boost::multiprecision::cpp_int(v)));
  } else {
    boost::multiprecision::cpp_int num(v.substr(0, slash)), den(v.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator in matrix entry");
    set_rational(i, j, Rational(num, den));
  }
}

Rational Matrix::get_rational(int i, int j) const {
  const size_t idx = static_cast<size_t>(i) * cols_ + j;
  if (field_.is_rational()) return std::get<std::vector<Rational>>(data_)[idx];
  return Rational(std::get<std::vector<std::uint32_t>>(data_)[idx]);
}

std::string Matrix::entry_string(int i, int j) const {
  if (field_.is_rational()) {
    const Rational& r = std::get<std::vector<Rational>>(data_)[static_cast<size_t>(i) * cols_ + j];
    return r.str();
  }
  return std::to_string(std::get<std::vector<std::uint32_t>>(data_)[static_cast<size_t>(i) * cols_ + j]);
}

bool Matrix::entry_is_zero(int i, int j) const {
  const size_t idx = static_cast<size_t>(i) * cols_ + j;
  if (field_.is_rational()) return std::get<std::vector<Rational>>(data_)[idx] == 0;
  return std::get<std::vector<std::uint32_t>>(data_)[idx] == 0;
}

bool Matrix::is_zero() const {
  if (field_.is_rational()) {
    for (const auto& v : std::get<std::vector<Rational>>(data_))
      if (v != 0) return false;
  } else {
    for (const auto& v : std::get<std::vector<std::uint32_t>>(data_))
      if (v != 0) return false;
  }
  return true;
}

bool Matrix::operator==(const Matrix& o) const {
  return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (field_ != o.field_) throw std::invalid_argument("matrix field mismatch in product");
  if (cols_ != o.rows_) throw std::invalid_argument("matrix shape mismatch in product");
  Matrix out(field_, rows_, o.cols_);
  if (field_.is_rational())
    mul_into(QOps{}, std::get<std::vector<Rational>>(data_), rows_, cols_,
             std::get<std::vector<Rational>>(o.data_), o.cols_,
             std::get<std::vector<Rational>>(out.data_));
  else
    mul_into(FpOps{field_.characteristic}, std::get<std::vector<std::uint32_t>>(data_), rows_,
             cols_, std::get<std::vector<std::uint32_t>>(o.data_), o.cols_,
             std::get<std::vector<std::uint32_t>>(out.data_));
  return out;
}

namespace {
template <class O, class V>
V elementwise(const O& ops, const V& a, const V& b, bool subtract) {
  V out(a.size(), ops.zero());
  for (size_t i = 0; i < a.size(); ++i) out[i] = subtract ? ops.sub(a[i], b[i]) : ops.add(a[i], b[i]);
  return out;
}
}  // namespace

Matrix Matrix::operator+(const Matrix& o) const {
  if (field_ != o.field_ || rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("matrix shape/field mismatch in sum");
  Matrix out(field_, rows_, cols_);
  if (field_.is_rational())
    out.data_ = elementwise(QOps{}, std::get<std::vector<Rational>>(data_),
                            std::get<std::vector<Rational>>(o.data_), false);
  else
    out.data_ = elementwise(FpOps{field_.characteristic}, std::get<std::vector<std::uint32_t>>(data_),
                            std::get<std::vector<std::uint32_t>>(o.data_), false);
  return out;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (field_ != o.field_ || rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("matrix shape/field mismatch in difference");
  Matrix out(field_, rows_, cols_);
  if (field_.is_rational())
    out.data_ = elementwise(QOps{}, std::get<std::vector<Rational>>(data_),
                            std::get<std::vector<Rational>>(o.data_), true);
  else
    out.data_ = elementwise(FpOps{field_.characteristic}, std::get<std::vector<std::uint32_t>>(data_),
                            std::get<std::vector<std::uint32_t>>(o.data_), true);
  return out;
}

Matrix Matrix::negated() const { return scaled_int(-1); }

Matrix Matrix::scaled_int(long long c) const {
  Matrix out(field_, rows_, cols_);
  if (field_.is_rational()) {
    const auto& a = std::get<std::vector<Rational>>(data_);
    auto& b = std::get<std::vector<Rational>>(out.data_);
    for (size_t i = 0; i < a.size(); ++i) b[i] = a[i] * c;
  } else {
    const auto p = field_.characteristic;
    const std::uint32_t cf = fp::from_int(c, p);
    const auto& a = std::get<std::vector<std::uint32_t>>(data_);
    auto& b = std::get<std::vector<std::uint32_t>>(out.data_);
    for (size_t i = 0; i < a.size(); ++i) b[i] = fp::mul(a[i], cf, p);
  }
  return out;
}

Matrix Matrix::block(FieldSpec f, const std::vector<std::vector<const Matrix*>>& grid) {
  const int brows = static_cast<int>(grid.size());
  const int bcols = brows ? static_cast<int>(grid[0].size()) : 0;
  std::vector<int> rheights(brows, 0), cwidths(bcols, 0);
  for (int i = 0; i < brows; ++i) {
    if (static_cast<int>(grid[i].size()) != bcols)
      throw std::invalid_argument("ragged block grid");
    for (int j = 0; j < bcols; ++j) {
      const Matrix* m = grid[i][j];
      if (!m) continue;
      if (m->field() != f) throw std::invalid_argument("block field mismatch");
      if (rheights[i] == 0) rheights[i] = m->rows();
      if (cwidths[j] == 0) cwidths[j] = m->cols();
      if (m->rows() != rheights[i] || m->cols() != cwidths[j])
        throw std::invalid_argument("block shape mismatch");
    }
  }
  int total_r = 0, total_c = 0;
  std::vector<int> roff(brows, 0), coff(bcols, 0);
  for (int i = 0; i < brows; ++i) {
    roff[i] = total_r;
    total_r += rheights[i];
  }
  for (int j = 0; j < bcols; ++j) {
    coff[j] = total_c;
    total_c += cwidths[j];
  }
  Matrix out(f, total_r, total_c);
  for (int i = 0; i < brows; ++i)
    for (int j = 0; j < bcols; ++j) {
      const Matrix* m = grid[i][j];
      if (!m) continue;
      out.insert_block(*m, roff[i], coff[j]);
    }
  return out;
}

void Matrix::insert_block(const Matrix& blk, int roff, int coff, bool negate) {
  if (blk.field() != field_) throw std::invalid_argument("insert_block field mismatch");
  if (roff + blk.rows() > rows_ || coff + blk.cols() > cols_)
    throw std::invalid_argument("insert_block out of range");
  if (field_.is_rational()) {
    auto& dst = std::get<std::vector<Rational>>(data_);
    const auto& src = std::get<std::vector<Rational>>(blk.data_);
    for (int i = 0; i < blk.rows(); ++i)
      for (int j = 0; j < blk.cols(); ++j) {
        const Rational& v = src[static_cast<size_t>(i) * blk.cols_ + j];
        if (v != 0) dst[static_cast<size_t>(roff + i) * cols_ + coff + j] = negate ? Rational(-v) : v;
      }
  } else {
    auto& dst = std::get<std::vector<std::uint32_t>>(data_);
    const auto& src = std::get<std::vector<std::uint32_t>>(blk.data_);
    const auto p = field_.characteristic;
    for (int i = 0; i < blk.rows(); ++i)
      for (int j = 0; j < blk.cols(); ++j) {
        const std::uint32_t v = src[static_cast<size_t>(i) * blk.cols_ + j];
        if (v) dst[static_cast<size_t>(roff + i) * cols_ + coff + j] = negate ? fp::neg(v, p) : v;
      }
  }
}

void Matrix::insert_identity(int size, int roff, int coff, bool negate) {
  for (int i = 0; i < size; ++i) set(roff + i, coff + i, negate ? -1 : 1);
}

Matrix Matrix::submatrix(int r0, int r1, int c0, int c1) const {
  Matrix out(field_, r1 - r0, c1 - c0);
  if (field_.is_rational()) {
    auto& dst = std::get<std::vector<Rational>>(out.data_);
    const auto& src = std::get<std::vector<Rational>>(data_);
    for (int i = r0; i < r1; ++i)
      for (int j = c0; j < c1; ++j)
        dst[static_cast<size_t>(i - r0) * out.cols_ + (j - c0)] = src[static_cast<size_t>(i) * cols_ + j];
  } else {
    auto& dst = std::get<std::vector<std::uint32_t>>(out.data_);
    const auto& src = std::get<std::vector<std::uint32_t>>(data_);
    for (int i = r0; i < r1; ++i)
      for (int j = c0; j < c1; ++j)
        dst[static_cast<size_t>(i - r0) * out.cols_ + (j - c0)] = src[static_cast<size_t>(i) * cols_ + j];
  }
  return out;
}

int Matrix::rank() const {
  if (rows_ == 0 || cols_ == 0) return 0;
  if (field_.is_rational()) {
    auto m = std::get<std::vector<Rational>>(data_);
    return static_cast<int>(
        echelon(QOps{}, m, rows_, cols_, static_cast<std::vector<Rational>*>(nullptr), 0).size());
  }
  auto m = std::get<std::vector<std::uint32_t>>(data_);
  return static_cast<int>(echelon(FpOps{field_.characteristic}, m, rows_, cols_,
                                  static_cast<std::vector<std::uint32_t>*>(nullptr), 0)
                              .size());
}

std::vector<int> Matrix::pivot_columns() const {
  if (rows_ == 0 || cols_ == 0) return {};
  if (field_.is_rational()) {
    auto m = std::get<std::vector<Rational>>(data_);
    return echelon(QOps{}, m, rows_, cols_, static_cast<std::vector<Rational>*>(nullptr), 0);
  }
  auto m = std::get<std::vector<std::uint32_t>>(data_);
  return echelon(FpOps{field_.characteristic}, m, rows_, cols_,
                 static_cast<std::vector<std::uint32_t>*>(nullptr), 0);
}

Matrix Matrix::nullspace() const {
  int nullity = 0;
  Matrix out(field_, cols_, 0);
  if (field_.is_rational()) {
    auto basis = nullspace_impl(QOps{}, std::get<std::vector<Rational>>(data_), rows_, cols_, nullity);
    out = Matrix(field_, cols_, nullity);
    out.data_ = std::move(basis);
  } else {
    auto basis = nullspace_impl(FpOps{field_.characteristic},
                                std::get<std::vector<std::uint32_t>>(data_), rows_, cols_, nullity);
    out = Matrix(field_, cols_, nullity);
    out.data_ = std::move(basis);
  }
  out.rows_ = cols_;
  out.cols_ = nullity;
  return out;
}

namespace {
template <class O>
std::optional<std::vector<typename O::T>> solve_impl(const O& ops, std::vector<typename O::T> m,
                                                     int rows, int cols,
                                                     std::vector<typename O::T> rhs, int rhs_cols) {
  auto pivots = echelon(ops, m, rows, cols, &rhs, rhs_cols);
  // Consistency: any zero row of m must have a zero rhs row.
  const int r = static_cast<int>(pivots.size());
  for (int i = r; i < rows; ++i)
    for (int j = 0; j < rhs_cols; ++j)
      if (!ops.is_zero(rhs[static_cast<size_t>(i) * rhs_cols + j])) return std::nullopt;
  std::vector<typename O::T> x(static_cast<size_t>(cols) * rhs_cols, ops.zero());
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < rhs_cols; ++j)
      x[static_cast<size_t>(pivots[i]) * rhs_cols + j] = rhs[static_cast<size_t>(i) * rhs_cols + j];
  return x;
}
}  // namespace

std::optional<Matrix> Matrix::solve(const Matrix& b) const {
  if (field_ != b.field_ || rows_ != b.rows_)
    throw std::invalid_argument("solve: shape/field mismatch");
  Matrix out(field_, cols_, b.cols_);
  if (field_.is_rational()) {
    auto x = solve_impl(QOps{}, std::get<std::vector<Rational>>(data_), rows_, cols_,
                        std::get<std::vector<Rational>>(b.data_), b.cols_);
    if (!x) return std::nullopt;
    out.data_ = std::move(*x);
  } else {
    auto x = solve_impl(FpOps{field_.characteristic}, std::get<std::vector<std::uint32_t>>(data_),
                        rows_, cols_, std::get<std::vector<std::uint32_t>>(b.data_), b.cols_);
    if (!x) return std::nullopt;
    out.data_ = std::move(*x);
  }
  return out;
}

}  // namespace kanex
