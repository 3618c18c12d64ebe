#include "surftutte/linalg.hpp"

#include <utility>

namespace surftutte {

Matrix Matrix::from_rows(const std::vector<Vector>& rows, int cols) {
  Matrix m(0, cols);
  for (const auto& r : rows) m.append_row(r);
  return m;
}

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Vector Matrix::row(int r) const {
  return Vector(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
}

void Matrix::append_row(const Vector& v) {
  data_.insert(data_.end(), v.begin(), v.end());
  ++rows_;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      if (a.at(i, k) == 0) continue;
      for (int j = 0; j < b.cols_; ++j) out.at(i, j) += a.at(i, k) * b.at(k, j);
    }
  return out;
}

Vector operator*(const Matrix& a, const Vector& v) {
  Vector out(static_cast<std::size_t>(a.rows()));
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) out[static_cast<std::size_t>(i)] += a.at(i, k) * v[static_cast<std::size_t>(k)];
  return out;
}

mpq_class dot(const Vector& a, const Vector& b) {
  mpq_class s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

std::string Matrix::to_string() const {
  std::string out = "[";
  for (int r = 0; r < rows_; ++r) {
    out += r ? ",[" : "[";
    for (int c = 0; c < cols_; ++c) out += (c ? "," : "") + at(r, c).get_str();
    out += "]";
  }
  return out + "]";
}

Echelon rref(const Matrix& input) {
  Matrix m = input;
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int p = row;
    while (p < m.rows() && m.at(p, col) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != row)
      for (int c = 0; c < m.cols(); ++c) std::swap(m.at(p, c), m.at(row, c));
    const mpq_class inv = 1 / m.at(row, col);
    for (int c = col; c < m.cols(); ++c) m.at(row, c) *= inv;
    for (int r = 0; r < m.rows(); ++r) {
      if (r == row || m.at(r, col) == 0) continue;
      const mpq_class f = m.at(r, col);
      for (int c = col; c < m.cols(); ++c) m.at(r, c) -= f * m.at(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  Matrix trimmed(0, m.cols());
  for (int r = 0; r < row; ++r) trimmed.append_row(m.row(r));
  return {std::move(trimmed), std::move(pivots)};
}

int rank(const Matrix& m) { return static_cast<int>(rref(m).pivots.size()); }

Matrix nullspace(const Matrix& m) {
  const auto e = rref(m);
  std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
  for (int p : e.pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  Matrix out(0, m.cols());
  for (int free = 0; free < m.cols(); ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    Vector v(static_cast<std::size_t>(m.cols()));
    v[static_cast<std::size_t>(free)] = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i)
      v[static_cast<std::size_t>(e.pivots[i])] = -e.matrix.at(static_cast<int>(i), free);
    out.append_row(v);
  }
  return out;
}

mpq_class determinant(Matrix m) {
  const int n = m.rows();
  mpq_class det = 1;
  for (int col = 0; col < n; ++col) {
    int p = col;
    while (p < n && m.at(p, col) == 0) ++p;
    if (p == n) return 0;
    if (p != col) {
      for (int c = 0; c < n; ++c) std::swap(m.at(p, c), m.at(col, c));
      det = -det;
    }
    det *= m.at(col, col);
    for (int r = col + 1; r < n; ++r) {
      if (m.at(r, col) == 0) continue;
      const mpq_class f = m.at(r, col) / m.at(col, col);
      for (int c = col; c < n; ++c) m.at(r, c) -= f * m.at(col, c);
    }
  }
  return det;
}

}  // namespace surftutte
