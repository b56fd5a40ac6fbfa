#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "secinv/rational.hpp"

namespace secinv {

/// Dense square matrix over Q, row-major.
class Matrix {
 public:
  Matrix() = default;
  /// n x n zero matrix.
  explicit Matrix(std::size_t n) : n_(n), data_(n * n) {}

  static Matrix identity(std::size_t n);
  /// Throws DimensionError unless the rows form a square matrix.
  static Matrix from_rows(const std::vector<std::vector<Rational>>& rows);
  /// Column-list notation (e_{c_1} e_{c_2} ... e_{c_n}), 1-based indices.
  static Matrix from_unit_columns(std::span<const std::size_t> columns);

  std::size_t size() const { return n_; }
  const Rational& operator()(std::size_t row, std::size_t col) const { return data_[row * n_ + col]; }
  Rational& operator()(std::size_t row, std::size_t col) { return data_[row * n_ + col]; }

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b) { return a.n_ == b.n_ && a.data_ == b.data_; }

  Rational determinant() const;
  bool is_identity() const;
  std::size_t hash() const;

 private:
  std::size_t n_ = 0;
  std::vector<Rational> data_;
};

struct MatrixHash {
  std::size_t operator()(const Matrix& m) const { return m.hash(); }
};

/// "a,b;c,d" row notation as used in problem files.
std::string to_string(const Matrix& m);

}  // namespace secinv
