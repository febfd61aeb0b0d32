#pragma once

#include "coincidence/checked.hpp"

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace coincidence {

/// Dense row-major int64 matrix. Arithmetic is overflow-checked.
class IntegerMatrix {
public:
  IntegerMatrix(int rows, int cols);
  IntegerMatrix(std::initializer_list<std::initializer_list<int64_t>> rows);
  IntegerMatrix(int rows, int cols, std::vector<int64_t> entries);

  static IntegerMatrix identity(int n);
  static IntegerMatrix zero(int rows, int cols) { return {rows, cols}; }

  [[nodiscard]] int rows() const noexcept { return rows_; }
  [[nodiscard]] int cols() const noexcept { return cols_; }
  [[nodiscard]] bool is_square() const noexcept { return rows_ == cols_; }

  int64_t &operator()(int r, int c) { return data_[index(r, c)]; }
  int64_t operator()(int r, int c) const { return data_[index(r, c)]; }

  [[nodiscard]] std::span<const int64_t> row(int r) const {
    return {data_.data() + static_cast<std::size_t>(r) * cols_,
            static_cast<std::size_t>(cols_)};
  }
  [[nodiscard]] std::span<const int64_t> entries() const { return data_; }

  [[nodiscard]] IntegerMatrix transpose() const;
  /// Submatrix on the given 0-based row and column indices.
  [[nodiscard]] IntegerMatrix minor(std::span<const int> row_idx,
                                    std::span<const int> col_idx) const;
  /// Rows of `top` followed by rows of `bottom`.
  static IntegerMatrix vstack(const IntegerMatrix &top,
                              const IntegerMatrix &bottom);

  /// Fraction-free (Bareiss) determinant. Throws DimensionMismatch if not
  /// square, IntegerOverflow if an intermediate leaves int64.
  [[nodiscard]] int64_t determinant() const;

  void swap_rows(int a, int b);
  void swap_cols(int a, int b);
  /// row[dst] += factor * row[src]
  void add_row_multiple(int dst, int src, int64_t factor);
  /// col[dst] += factor * col[src]
  void add_col_multiple(int dst, int src, int64_t factor);
  void negate_row(int r);
  void negate_col(int c);

  [[nodiscard]] bool is_zero() const;
  [[nodiscard]] std::string to_string() const;

  friend IntegerMatrix operator*(const IntegerMatrix &a, const IntegerMatrix &b);
  friend IntegerMatrix operator+(const IntegerMatrix &a, const IntegerMatrix &b);
  friend IntegerMatrix operator-(const IntegerMatrix &a, const IntegerMatrix &b);
  friend bool operator==(const IntegerMatrix &, const IntegerMatrix &) = default;

private:
  [[nodiscard]] std::size_t index(int r, int c) const {
    return static_cast<std::size_t>(r) * cols_ + c;
  }

  int rows_;
  int cols_;
  std::vector<int64_t> data_;
};

} // namespace coincidence
