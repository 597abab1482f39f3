#pragma once

#include <string>
#include <utility>
#include <vector>

#include "tropmono/error.hpp"
#include "tropmono/rational.hpp"

namespace tropmono {

using QVector = std::vector<Rat>;

/// Dense exact rational matrix, row-major.
class QMatrix {
public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  static QMatrix identity(std::size_t n) {
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Rat(1);
    return m;
  }
  static QMatrix from_rows(const std::vector<QVector> &rows, std::size_t cols) {
    QMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw DimensionError("ragged matrix rows");
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }
  static QMatrix from_rows(const std::vector<QVector> &rows) {
    return from_rows(rows, rows.empty() ? 0 : rows.front().size());
  }
  /// Matrix whose columns are the given vectors (all of length `height`).
  static QMatrix from_columns(const std::vector<QVector> &columns, std::size_t height) {
    QMatrix m(height, columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
      if (columns[j].size() != height) throw DimensionError("column has wrong length");
      for (std::size_t i = 0; i < height; ++i) m(i, j) = columns[j][i];
    }
    return m;
  }

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }
  Rat &operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  [[nodiscard]] const Rat &operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  [[nodiscard]] QVector row(std::size_t i) const {
    return QVector(a_.begin() + static_cast<long>(i * cols_),
                   a_.begin() + static_cast<long>((i + 1) * cols_));
  }
  [[nodiscard]] QVector column(std::size_t j) const {
    QVector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
  }

  [[nodiscard]] bool is_zero() const {
    for (const auto &x : a_)
      if (!x.is_zero()) return false;
    return true;
  }

  [[nodiscard]] QMatrix transpose() const {
    QMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend QMatrix operator*(const QMatrix &a, const QMatrix &b) {
    if (a.cols_ != b.rows_) throw DimensionError("matrix product shape mismatch");
    QMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Rat &aik = a(i, k);
        if (aik.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          if (!b(k, j).is_zero()) c(i, j) += aik * b(k, j);
      }
    return c;
  }
  friend QVector operator*(const QMatrix &a, const QVector &v) {
    if (a.cols_ != v.size()) throw DimensionError("matrix-vector shape mismatch");
    QVector out(a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t j = 0; j < a.cols_; ++j)
        if (!a(i, j).is_zero() && !v[j].is_zero()) out[i] += a(i, j) * v[j];
    return out;
  }
  friend QMatrix operator+(QMatrix a, const QMatrix &b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionError("matrix sum shape mismatch");
    for (std::size_t k = 0; k < a.a_.size(); ++k) a.a_[k] += b.a_[k];
    return a;
  }
  friend QMatrix operator*(const Rat &s, QMatrix a) {
    for (auto &x : a.a_) x *= s;
    return a;
  }
  friend bool operator==(const QMatrix &, const QMatrix &) = default;

  /// [top; bottom], column counts must agree.
  [[nodiscard]] static QMatrix vstack(const QMatrix &top, const QMatrix &bottom) {
    if (top.cols_ != bottom.cols_) throw DimensionError("vstack column mismatch");
    QMatrix m(top.rows_ + bottom.rows_, top.cols_);
    for (std::size_t i = 0; i < top.rows_; ++i)
      for (std::size_t j = 0; j < top.cols_; ++j) m(i, j) = top(i, j);
    for (std::size_t i = 0; i < bottom.rows_; ++i)
      for (std::size_t j = 0; j < top.cols_; ++j) m(top.rows_ + i, j) = bottom(i, j);
    return m;
  }

  [[nodiscard]] std::string str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < rows_; ++i) {
      s += i ? ",[" : "[";
      for (std::size_t j = 0; j < cols_; ++j) s += (j ? "," : "") + (*this)(i, j).str();
      s += "]";
    }
    return s + "]";
  }

private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rat> a_;
};

/// Reduced row echelon form with the first nonzero entry of each column as
/// pivot; returns the pivot columns.
struct Echelon {
  QMatrix reduced;
  std::vector<std::size_t> pivots;
};

inline Echelon rref(QMatrix m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t piv = r;
    while (piv < m.rows() && m(piv, c).is_zero()) ++piv;
    if (piv == m.rows()) continue;
    if (piv != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(r, j));
    Rat inv = Rat(1) / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      Rat f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (!m(r, j).is_zero()) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

inline std::size_t rank(const QMatrix &m) { return rref(m).pivots.size(); }

/// Exact kernel basis: one vector per free column, with a 1 in that column.
inline std::vector<QVector> kernel_basis(const QMatrix &m) {
  auto [red, pivots] = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<QVector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    QVector v(m.cols());
    v[f] = Rat(1);
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -red(k, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Rank of a family of vectors of common length `dim`.
inline std::size_t span_rank(const std::vector<QVector> &vs, std::size_t dim) {
  if (vs.empty()) return 0;
  return rank(QMatrix::from_rows(vs, dim));
}

inline bool in_span(const QVector &v, const std::vector<QVector> &family) {
  auto fam = family;
  std::size_t before = span_rank(fam, v.size());
  fam.push_back(v);
  return span_rank(fam, v.size()) == before;
}

/// dim span(ambient) - dim span(sub); throws when sub is not inside span(ambient).
inline std::size_t quotient_dim(const std::vector<QVector> &sub, const std::vector<QVector> &ambient) {
  if (sub.empty() && ambient.empty()) return 0;
  std::size_t dim = !ambient.empty() ? ambient.front().size() : sub.front().size();
  for (const auto &v : sub)
    if (v.size() != dim) throw DimensionError("quotient_dim vectors of different length");
  for (const auto &v : ambient)
    if (v.size() != dim) throw DimensionError("quotient_dim vectors of different length");
  std::size_t ra = span_rank(ambient, dim);
  auto all = ambient;
  all.insert(all.end(), sub.begin(), sub.end());
  if (span_rank(all, dim) != ra) throw DomainError("subspace is not contained in the ambient span");
  return ra - span_rank(sub, dim);
}

/// Fraction-free (Bareiss) determinant.
inline Rat det(const QMatrix &input) {
  if (input.rows() != input.cols()) throw DimensionError("determinant of a non-square matrix");
  std::size_t n = input.rows();
  if (n == 0) return Rat(1);
  QMatrix m = input;
  int sign = 1;
  Rat prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k).is_zero()) {
      std::size_t s = k + 1;
      while (s < n && m(s, k).is_zero()) ++s;
      if (s == n) return Rat(0);
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(s, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
    prev = m(k, k);
  }
  return sign > 0 ? m(n - 1, n - 1) : -m(n - 1, n - 1);
}

inline bool is_zero_vector(const QVector &v) {
  for (const auto &x : v)
    if (!x.is_zero()) return false;
  return true;
}

inline std::string vector_str(const QVector &v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].str();
  return s + "]";
}

} // namespace tropmono
