#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "univalg/rational.hpp"

namespace univalg {

using Vector = std::vector<Rational>;

/// Dense row-major matrix over Q.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  /// Row-major initializer; all rows must have equal length.
  static Matrix from_rows(const std::vector<std::vector<Rational>>& rows, std::size_t cols = 0);
  static Matrix identity(std::size_t n);
  static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }
  /// Matrix whose j-th column is cols[j]; every column has length `rows`.
  static Matrix from_columns(const std::vector<Vector>& cols, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector column(std::size_t c) const;
  Vector row(std::size_t r) const;
  void set_column(std::size_t c, const Vector& v);

  bool is_zero() const;
  Matrix transpose() const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(const Rational& s);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const Rational& s) { return a *= s; }
  friend Matrix operator*(const Rational& s, Matrix a) { return a *= s; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Vector operator*(const Matrix& a, const Vector& v);
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Kronecker product; index (i,k) of the result is i * b.rows() + k.
Matrix kron(const Matrix& a, const Matrix& b);
Matrix commutator(const Matrix& a, const Matrix& b);

bool is_zero(const Vector& v);
Vector add(const Vector& a, const Vector& b);
Vector scale(const Vector& a, const Rational& s);
/// Axpy: a += s * b.
void add_scaled(Vector& a, const Vector& b, const Rational& s);

/// Reduced row echelon form computed in place; returns pivot columns.
std::vector<std::size_t> rref(Matrix& m);
std::size_t rank(Matrix m);
/// Basis of {x : m x = 0}, one vector per free column (standard basis of
/// the reduced echelon form).
std::vector<Vector> nullspace(Matrix m);
std::optional<Matrix> inverse(const Matrix& m);

struct LinearSolution {
  bool consistent = false;
  Vector particular;        // valid only if consistent
  std::size_t nullity = 0;  // dimension of the solution space
  bool unique() const { return consistent && nullity == 0; }
};

LinearSolution solve(const Matrix& a, const Vector& b);

}  // namespace univalg
