#pragma once

// Dense matrices over exact rationals and the handful of eliminations the
// homology code needs. Sizes stay small (a few dozen rows and columns).

#include <gmpxx.h>

#include <string>
#include <vector>

namespace surftutte {

using Vector = std::vector<mpq_class>;

class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows * cols)) {}
  static Matrix from_rows(const std::vector<Vector>& rows, int cols);
  static Matrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  mpq_class& at(int r, int c) { return data_[static_cast<std::size_t>(r * cols_ + c)]; }
  const mpq_class& at(int r, int c) const { return data_[static_cast<std::size_t>(r * cols_ + c)]; }
  Vector row(int r) const;
  void append_row(const Vector& v);

  Matrix transpose() const;
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  std::string to_string() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<mpq_class> data_;
};

Vector operator*(const Matrix& a, const Vector& v);
mpq_class dot(const Vector& a, const Vector& b);

// Reduced row-echelon form with zero rows removed; pivots[i] is the pivot
// column of row i.
struct Echelon {
  Matrix matrix;
  std::vector<int> pivots;
};
Echelon rref(const Matrix& m);
int rank(const Matrix& m);
// Basis (as rows) of { x : m x = 0 }, one vector per free column with a 1
// in that column.
Matrix nullspace(const Matrix& m);
mpq_class determinant(Matrix m);

}  // namespace surftutte
