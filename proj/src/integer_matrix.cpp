#include "coincidence/integer_matrix.hpp"

#include <limits>
#include <sstream>
#include <utility>

namespace coincidence {

namespace {

int64_t narrow_or_throw(__int128 v) {
  if (v > std::numeric_limits<int64_t>::max() ||
      v < std::numeric_limits<int64_t>::min())
    throw Error(Errc::IntegerOverflow, "matrix entry left int64 range");
  return static_cast<int64_t>(v);
}

void require_positive_dims(int rows, int cols) {
  if (rows <= 0 || cols <= 0)
    throw Error(Errc::DimensionMismatch,
                "matrix dimensions must be positive, got " +
                    std::to_string(rows) + "x" + std::to_string(cols));
}

} // namespace

IntegerMatrix::IntegerMatrix(int rows, int cols)
    : rows_(rows), cols_(cols) {
  require_positive_dims(rows, cols);
  data_.assign(static_cast<std::size_t>(rows) * cols, 0);
}

IntegerMatrix::IntegerMatrix(
    std::initializer_list<std::initializer_list<int64_t>> rows)
    : rows_(static_cast<int>(rows.size())),
      cols_(rows.size() == 0 ? 0 : static_cast<int>(rows.begin()->size())) {
  require_positive_dims(rows_, cols_);
  data_.reserve(static_cast<std::size_t>(rows_) * cols_);
  for (const auto &r : rows) {
    if (static_cast<int>(r.size()) != cols_)
      throw Error(Errc::DimensionMismatch, "ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

IntegerMatrix::IntegerMatrix(int rows, int cols, std::vector<int64_t> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  require_positive_dims(rows, cols);
  if (data_.size() != static_cast<std::size_t>(rows) * cols)
    throw Error(Errc::DimensionMismatch, "entry count does not match shape");
}

IntegerMatrix IntegerMatrix::identity(int n) {
  IntegerMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    m(i, i) = 1;
  return m;
}

IntegerMatrix IntegerMatrix::transpose() const {
  IntegerMatrix t(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c)
      t(c, r) = (*this)(r, c);
  return t;
}

IntegerMatrix IntegerMatrix::minor(std::span<const int> row_idx,
                                   std::span<const int> col_idx) const {
  IntegerMatrix m(static_cast<int>(row_idx.size()),
                  static_cast<int>(col_idx.size()));
  for (std::size_t r = 0; r < row_idx.size(); ++r)
    for (std::size_t c = 0; c < col_idx.size(); ++c)
      m(static_cast<int>(r), static_cast<int>(c)) =
          (*this)(row_idx[r], col_idx[c]);
  return m;
}

IntegerMatrix IntegerMatrix::vstack(const IntegerMatrix &top,
                                    const IntegerMatrix &bottom) {
  if (top.cols_ != bottom.cols_)
    throw Error(Errc::DimensionMismatch, "vstack of matrices with " +
                                             std::to_string(top.cols_) +
                                             " and " +
                                             std::to_string(bottom.cols_) +
                                             " columns");
  std::vector<int64_t> data = top.data_;
  data.insert(data.end(), bottom.data_.begin(), bottom.data_.end());
  return {top.rows_ + bottom.rows_, top.cols_, std::move(data)};
}

int64_t IntegerMatrix::determinant() const {
  if (!is_square())
    throw Error(Errc::DimensionMismatch, "determinant of non-square matrix");
  const int n = rows_;
  IntegerMatrix m = *this;
  int64_t sign = 1;
  int64_t prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m(k, k) == 0) {
      int p = k + 1;
      while (p < n && m(p, k) == 0)
        ++p;
      if (p == n)
        return 0;
      m.swap_rows(k, p);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        const __int128 v = static_cast<__int128>(m(i, j)) * m(k, k) -
                           static_cast<__int128>(m(i, k)) * m(k, j);
        m(i, j) = narrow_or_throw(v / prev);
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return checked_mul(sign, m(n - 1, n - 1));
}

void IntegerMatrix::swap_rows(int a, int b) {
  if (a == b)
    return;
  for (int c = 0; c < cols_; ++c)
    std::swap((*this)(a, c), (*this)(b, c));
}

void IntegerMatrix::swap_cols(int a, int b) {
  if (a == b)
    return;
  for (int r = 0; r < rows_; ++r)
    std::swap((*this)(r, a), (*this)(r, b));
}

void IntegerMatrix::add_row_multiple(int dst, int src, int64_t factor) {
  if (factor == 0)
    return;
  for (int c = 0; c < cols_; ++c)
    (*this)(dst, c) =
        checked_add((*this)(dst, c), checked_mul(factor, (*this)(src, c)));
}

void IntegerMatrix::add_col_multiple(int dst, int src, int64_t factor) {
  if (factor == 0)
    return;
  for (int r = 0; r < rows_; ++r)
    (*this)(r, dst) =
        checked_add((*this)(r, dst), checked_mul(factor, (*this)(r, src)));
}

void IntegerMatrix::negate_row(int r) {
  for (int c = 0; c < cols_; ++c)
    (*this)(r, c) = checked_neg((*this)(r, c));
}

void IntegerMatrix::negate_col(int c) {
  for (int r = 0; r < rows_; ++r)
    (*this)(r, c) = checked_neg((*this)(r, c));
}

bool IntegerMatrix::is_zero() const {
  for (int64_t v : data_)
    if (v != 0)
      return false;
  return true;
}

std::string IntegerMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (int r = 0; r < rows_; ++r) {
    os << (r ? "; " : "");
    for (int c = 0; c < cols_; ++c)
      os << (c ? " " : "") << (*this)(r, c);
  }
  os << ']';
  return os.str();
}

IntegerMatrix operator*(const IntegerMatrix &a, const IntegerMatrix &b) {
  if (a.cols_ != b.rows_)
    throw Error(Errc::DimensionMismatch,
                "product of " + std::to_string(a.rows_) + "x" +
                    std::to_string(a.cols_) + " and " +
                    std::to_string(b.rows_) + "x" + std::to_string(b.cols_));
  IntegerMatrix out(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      const int64_t aik = a(i, k);
      if (aik == 0)
        continue;
      for (int j = 0; j < b.cols_; ++j)
        out(i, j) = checked_add(out(i, j), checked_mul(aik, b(k, j)));
    }
  return out;
}

IntegerMatrix operator+(const IntegerMatrix &a, const IntegerMatrix &b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw Error(Errc::DimensionMismatch, "sum of differently shaped matrices");
  IntegerMatrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i)
    out.data_[i] = checked_add(a.data_[i], b.data_[i]);
  return out;
}

IntegerMatrix operator-(const IntegerMatrix &a, const IntegerMatrix &b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw Error(Errc::DimensionMismatch,
                "difference of differently shaped matrices");
  IntegerMatrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i)
    out.data_[i] = checked_sub(a.data_[i], b.data_[i]);
  return out;
}

} // namespace coincidence
