#include "troprank/matrix.hpp"

#include <algorithm>

#include "troprank/errors.hpp"

namespace troprank {

Vector::Vector(Semifield f, std::size_t dim)
    : field_(f), entries_(dim, Scalar::zero(f)) {
  if (dim == 0) throw UsageError("vector dimension must be positive");
}

Vector::Vector(Semifield f, std::vector<Scalar> entries)
    : field_(f), entries_(std::move(entries)) {
  if (entries_.empty()) throw UsageError("vector dimension must be positive");
  for (const auto& e : entries_) require_same_field(f, e.field(), "vector");
}

Vector Vector::from_strings(Semifield f,
                            std::initializer_list<std::string_view> entries) {
  std::vector<Scalar> out;
  out.reserve(entries.size());
  for (auto e : entries) out.push_back(Scalar::parse(f, e));
  return Vector(f, std::move(out));
}

void Vector::set(std::size_t i, Scalar v) {
  require_same_field(field_, v.field(), "vector set");
  entries_.at(i) = std::move(v);
}

bool Vector::is_regular() const {
  return std::none_of(entries_.begin(), entries_.end(),
                      [](const Scalar& s) { return s.is_zero(); });
}

std::string Vector::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) out += ", ";
    out += entries_[i].to_string();
  }
  return out + ")";
}

Matrix::Matrix(Semifield f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), entries_(rows * cols, Scalar::zero(f)) {
  if (rows == 0 || cols == 0) {
    throw UsageError("matrix dimensions must be positive");
  }
}

Matrix Matrix::identity(Semifield f, std::size_t n) {
  Matrix out(f, n, n);
  for (std::size_t i = 0; i < n; ++i) out.entries_[i * n + i] = Scalar::one(f);
  return out;
}

Matrix Matrix::from_rows(Semifield f, std::vector<std::vector<Scalar>> rows) {
  if (rows.empty() || rows.front().empty()) {
    throw UsageError("matrix dimensions must be positive");
  }
  Matrix out(f, rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != out.cols_) {
      throw UsageError("ragged rows: row " + std::to_string(i + 1) + " has " +
                       std::to_string(rows[i].size()) + " entries, expected " +
                       std::to_string(out.cols_));
    }
    for (std::size_t j = 0; j < out.cols_; ++j) {
      out.set(i, j, std::move(rows[i][j]));
    }
  }
  return out;
}

Matrix Matrix::from_strings(
    Semifield f,
    std::initializer_list<std::initializer_list<std::string_view>> rows) {
  std::vector<std::vector<Scalar>> parsed;
  for (const auto& r : rows) {
    auto& row = parsed.emplace_back();
    for (auto e : r) row.push_back(Scalar::parse(f, e));
  }
  return from_rows(f, std::move(parsed));
}

Matrix Matrix::from_columns(Semifield f, std::size_t rows,
                            const std::vector<Vector>& columns) {
  if (columns.empty()) throw UsageError("matrix needs at least one column");
  Matrix out(f, rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].dim() != rows) {
      throw UsageError("column " + std::to_string(j) + " has wrong dimension");
    }
    for (std::size_t i = 0; i < rows; ++i) out.set(i, j, columns[j][i]);
  }
  return out;
}

void Matrix::set(std::size_t i, std::size_t j, Scalar v) {
  if (i >= rows_ || j >= cols_) {
    throw UsageError("matrix index (" + std::to_string(i) + ", " +
                     std::to_string(j) + ") out of range");
  }
  require_same_field(field_, v.field(), "matrix set");
  entries_[i * cols_ + j] = std::move(v);
}

Vector Matrix::row(std::size_t i) const {
  std::vector<Scalar> out(entries_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                          entries_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
  return Vector(field_, std::move(out));
}

Vector Matrix::column(std::size_t j) const {
  std::vector<Scalar> out;
  out.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out.push_back((*this)(i, j));
  return Vector(field_, std::move(out));
}

bool Matrix::is_regular() const {
  return std::none_of(entries_.begin(), entries_.end(),
                      [](const Scalar& s) { return s.is_zero(); });
}

bool Matrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const Scalar& s) { return s.is_zero(); });
}

std::string Matrix::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) out += ", ";
      out += (*this)(i, j).to_string();
    }
    out += '\n';
  }
  return out;
}

}  // namespace troprank
