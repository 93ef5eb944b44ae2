#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "nilext/rational.hpp"

namespace nilext {

// Dense rational matrix. Everything in scope is small (at most ~120 columns),
// so density keeps elimination simple and exact.
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols, Scalar(0)) {}

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<Vec>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  const Scalar& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

  Vec row(std::size_t i) const;
  Vec col(std::size_t j) const;
  void set_row(std::size_t i, const Vec& v);

  Matrix transpose() const;
  bool is_zero() const;

  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  std::size_t rows_, cols_;
  std::vector<Scalar> e_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Vec mat_vec(const Matrix& m, const Vec& v);
Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix scalar_mul(const Scalar& c, const Matrix& m);

struct Rref {
  Matrix mat;
  std::vector<std::size_t> pivots;  // strictly increasing pivot columns
};

// Unique reduced row echelon form (zero rows dropped from the pivot list but
// kept in the matrix shape).
Rref rref(const Matrix& m);

std::size_t rank(const Matrix& m);

// Basis of the right kernel {v : m v = 0}. Deterministic convention: one
// vector per free column, free coordinate set to 1, others read off the RREF.
std::vector<Vec> kernel_basis(const Matrix& m);

// Particular solution of m x = b with all free variables set to 0;
// nullopt when inconsistent.
std::optional<Vec> solve(const Matrix& m, const Vec& b);

// Inverse of a square matrix; nullopt when singular.
std::optional<Matrix> inverse(const Matrix& m);

Scalar determinant(const Matrix& m);

}  // namespace nilext
