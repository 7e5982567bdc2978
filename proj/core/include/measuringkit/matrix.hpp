#pragma once

// Dense matrices over a Field. A linear map V -> W is stored as a
// dim W x dim V matrix acting on column vectors.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

#include "measuringkit/scalar.hpp"

namespace measuringkit {

using Vector = std::vector<Scalar>;

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class Matrix {
 public:
  Matrix(Field field, std::size_t rows, std::size_t cols);
  /// Row-major integer entries, reduced into the field.
  Matrix(Field field, std::size_t rows, std::size_t cols, const std::vector<std::int64_t>& entries);

  static Matrix identity(Field field, std::size_t n);
  static Matrix from_rows(Field field, std::size_t cols, const std::vector<Vector>& rows);
  static Matrix from_columns(Field field, std::size_t rows, const std::vector<Vector>& cols);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Scalar& operator()(std::size_t r, std::size_t c) { return at(r, c); }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return at(r, c); }

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;
  void set_row(std::size_t r, const Vector& v);
  void set_column(std::size_t c, const Vector& v);

  Matrix transpose() const;
  Vector apply(const Vector& v) const;
  bool is_zero() const;

  Matrix& operator+=(const Matrix& rhs);
  Matrix& operator-=(const Matrix& rhs);
  Matrix& operator*=(const Scalar& s);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const Scalar& s) { return a *= s; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);

  bool operator==(const Matrix& rhs) const;

  /// Multi-line human-readable dump.
  std::string to_string() const;

 private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> data_;
};

using LinearMap = Matrix;

Vector zero_vector(const Field& field, std::size_t n);
Vector unit_vector(const Field& field, std::size_t n, std::size_t i);
Vector add(const Vector& a, const Vector& b);
Vector subtract(const Vector& a, const Vector& b);
Vector scale(const Scalar& s, const Vector& v);
Scalar dot(const Field& field, const Vector& a, const Vector& b);
bool is_zero(const Vector& v);
std::string to_string(const Vector& v);

}  // namespace measuringkit
