#include "secinv/matrix.hpp"

#include <utility>

#include "secinv/errors.hpp"

namespace secinv {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  Matrix m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size())
      throw DimensionError("matrix row " + std::to_string(i + 1) + " has " +
                           std::to_string(rows[i].size()) + " entries, expected " +
                           std::to_string(rows.size()));
    for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Matrix Matrix::from_unit_columns(std::span<const std::size_t> columns) {
  Matrix m(columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j] < 1 || columns[j] > columns.size()) throw DimensionError("unit column index out of range");
    m(columns[j] - 1, j) = 1;
  }
  return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.n_ != b.n_) throw DimensionError("matrix size mismatch");
  const std::size_t n = a.n_;
  Matrix c(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const Rational& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (b(k, j) != 0) c(i, j) += aik * b(k, j);
    }
  return c;
}

Rational Matrix::determinant() const {
  Matrix a = *this;
  Rational det = 1;
  for (std::size_t k = 0; k < n_; ++k) {
    std::size_t pivot = k;
    while (pivot < n_ && a(pivot, k) == 0) ++pivot;
    if (pivot == n_) return 0;
    if (pivot != k) {
      for (std::size_t j = 0; j < n_; ++j) std::swap(a(k, j), a(pivot, j));
      det = -det;
    }
    det *= a(k, k);
    for (std::size_t i = k + 1; i < n_; ++i) {
      if (a(i, k) == 0) continue;
      Rational f = a(i, k) / a(k, k);
      for (std::size_t j = k; j < n_; ++j) a(i, j) -= f * a(k, j);
    }
  }
  return det;
}

bool Matrix::is_identity() const { return *this == identity(n_); }

std::size_t Matrix::hash() const {
  std::size_t h = n_;
  for (const auto& q : data_) {
    std::size_t v = mpz_get_ui(q.get_num_mpz_t()) * 31 + mpz_get_ui(q.get_den_mpz_t());
    if (q < 0) v = ~v;
    h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

std::string to_string(const Matrix& m) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i) out += ";";
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (j) out += ",";
      out += m(i, j).get_str();
    }
  }
  return out;
}

}  // namespace secinv
