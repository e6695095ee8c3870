#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "troprank/semifield.hpp"

namespace troprank {

/// Dense column vector over a semifield.
class Vector {
 public:
  Vector() = default;
  // Zero vector of the given dimension.
  Vector(Semifield f, std::size_t dim);
  Vector(Semifield f, std::vector<Scalar> entries);

  static Vector from_strings(Semifield f,
                             std::initializer_list<std::string_view> entries);

  const Semifield& field() const noexcept { return field_; }
  std::size_t dim() const noexcept { return entries_.size(); }
  const Scalar& operator[](std::size_t i) const { return entries_[i]; }
  const std::vector<Scalar>& entries() const noexcept { return entries_; }
  void set(std::size_t i, Scalar v);

  // No zero entries.
  bool is_regular() const;

  std::string to_string() const;

  friend bool operator==(const Vector&, const Vector&) = default;

 private:
  Semifield field_{};
  std::vector<Scalar> entries_;
};

/// Dense row-major matrix over a semifield.
class Matrix {
 public:
  Matrix() = default;
  // Zero matrix.
  Matrix(Semifield f, std::size_t rows, std::size_t cols);

  static Matrix identity(Semifield f, std::size_t n);
  static Matrix from_rows(Semifield f, std::vector<std::vector<Scalar>> rows);
  static Matrix from_strings(
      Semifield f,
      std::initializer_list<std::initializer_list<std::string_view>> rows);
  static Matrix from_columns(Semifield f, std::size_t rows,
                             const std::vector<Vector>& columns);

  const Semifield& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  const Scalar& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }
  void set(std::size_t i, std::size_t j, Scalar v);

  Vector row(std::size_t i) const;
  Vector column(std::size_t j) const;

  // No zero entries ("positive" for max-times).
  bool is_regular() const;
  bool is_zero() const;

  // One row per line, entries separated by ", ".
  std::string to_string() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  Semifield field_{};
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> entries_;
};

}  // namespace troprank
