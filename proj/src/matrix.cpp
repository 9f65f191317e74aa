#include "bfalg/matrix.hpp"

#include <algorithm>

namespace bfalg {

Vec zero_vec(const ScalarField& field, Index n) {
  return Vec(n, field.zero());
}

Vec add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw Error("vector length mismatch");
  Vec r = a;
  for (Index i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Vec sub(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw Error("vector length mismatch");
  Vec r = a;
  for (Index i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

Vec scale(const Scalar& c, const Vec& v) {
  Vec r = v;
  for (auto& x : r) x *= c;
  return r;
}

bool is_zero_vec(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& x) { return x.is_zero(); });
}

Matrix::Matrix(ScalarField field, Index rows, Index cols)
    : field_(field), rows_(rows), cols_(cols), e_(rows * cols, field.zero()) {}

Matrix Matrix::identity(ScalarField field, Index n) {
  Matrix m(field, n, n);
  for (Index i = 0; i < n; ++i) m.at(i, i) = field.one();
  return m;
}

Matrix Matrix::from_rows(ScalarField field, const std::vector<Vec>& rows, Index cols) {
  Matrix m(field, rows.size(), cols);
  for (Index i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw Error("row length mismatch");
    for (Index j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

Vec Matrix::row(Index i) const {
  Vec r;
  r.reserve(cols_);
  for (Index j = 0; j < cols_; ++j) r.push_back(at(i, j));
  return r;
}

Vec Matrix::col(Index j) const {
  Vec c;
  c.reserve(rows_);
  for (Index i = 0; i < rows_; ++i) c.push_back(at(i, j));
  return c;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (Index i = 0; i < rows_; ++i)
    for (Index j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw Error("matrix product dimension mismatch");
  Matrix r(field_, rows_, o.cols_);
  for (Index i = 0; i < rows_; ++i)
    for (Index k = 0; k < cols_; ++k) {
      if (at(i, k).is_zero()) continue;
      for (Index j = 0; j < o.cols_; ++j) r.at(i, j) += at(i, k) * o.at(k, j);
    }
  return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("matrix sum dimension mismatch");
  Matrix r = *this;
  for (Index i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("matrix difference dimension mismatch");
  Matrix r = *this;
  for (Index i = 0; i < e_.size(); ++i) r.e_[i] -= o.e_[i];
  return r;
}

Vec Matrix::apply(const Vec& x) const {
  if (x.size() != cols_) throw Error("matrix apply dimension mismatch");
  Vec r = zero_vec(field_, rows_);
  for (Index i = 0; i < rows_; ++i)
    for (Index j = 0; j < cols_; ++j) r[i] += at(i, j) * x[j];
  return r;
}

bool Matrix::operator==(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_ || field_ != o.field_) return false;
  for (Index i = 0; i < e_.size(); ++i)
    if (e_[i] != o.e_[i]) return false;
  return true;
}

bool Matrix::is_zero() const {
  return std::all_of(e_.begin(), e_.end(), [](const Scalar& x) { return x.is_zero(); });
}

RrefResult rref(const Matrix& m) {
  Matrix r = m;
  std::vector<Index> pivots;
  Index prow = 0;
  for (Index col = 0; col < r.cols() && prow < r.rows(); ++col) {
    Index sel = prow;
    while (sel < r.rows() && r.at(sel, col).is_zero()) ++sel;
    if (sel == r.rows()) continue;
    if (sel != prow) {
      for (Index j = 0; j < r.cols(); ++j) std::swap(r.at(sel, j), r.at(prow, j));
    }
    Scalar inv = r.at(prow, col).inverse();
    for (Index j = col; j < r.cols(); ++j) r.at(prow, j) *= inv;
    for (Index i = 0; i < r.rows(); ++i) {
      if (i == prow || r.at(i, col).is_zero()) continue;
      Scalar f = r.at(i, col);
      for (Index j = col; j < r.cols(); ++j) r.at(i, j) -= f * r.at(prow, j);
    }
    pivots.push_back(col);
    ++prow;
  }
  return {std::move(r), std::move(pivots)};
}

Index rank(const Matrix& m) { return rref(m).pivots.size(); }

std::vector<Vec> kernel_basis(const Matrix& m) {
  const ScalarField& field = m.field();
  RrefResult rr = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (Index p : rr.pivots) is_pivot[p] = true;

  std::vector<Vec> basis;
  for (Index f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vec v = zero_vec(field, m.cols());
    v[f] = field.one();
    for (Index r = 0; r < rr.pivots.size(); ++r) {
      v[rr.pivots[r]] = -rr.rref.at(r, f);
    }
    // scale so the first nonzero entry is 1
    for (Index i = 0; i < v.size(); ++i) {
      if (!v[i].is_zero()) {
        Scalar inv = v[i].inverse();
        for (Index j = i; j < v.size(); ++j) v[j] *= inv;
        break;
      }
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vec> solve(const Matrix& m, const Vec& b) {
  if (b.size() != m.rows()) throw Error("solve: rhs length mismatch");
  const ScalarField& field = m.field();
  Matrix aug(field, m.rows(), m.cols() + 1);
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols()) = b[i];
  }
  RrefResult rr = rref(aug);
  // inconsistent iff a pivot lands in the rhs column
  if (!rr.pivots.empty() && rr.pivots.back() == m.cols()) return std::nullopt;
  Vec x = zero_vec(field, m.cols());
  for (Index r = 0; r < rr.pivots.size(); ++r) x[rr.pivots[r]] = rr.rref.at(r, m.cols());
  return x;
}

bool in_row_space(const Matrix& m, const Vec& v) {
  if (v.size() != m.cols()) throw Error("in_row_space: length mismatch");
  Matrix ext(m.field(), m.rows() + 1, m.cols());
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) ext.at(i, j) = m.at(i, j);
  for (Index j = 0; j < m.cols(); ++j) ext.at(m.rows(), j) = v[j];
  return rank(ext) == rank(m);
}

std::optional<Vec> coordinates_in_basis(const std::vector<Vec>& basis, const Vec& v,
                                        const ScalarField& field) {
  // columns of the system are the basis vectors
  Matrix m(field, v.size(), basis.size());
  for (Index j = 0; j < basis.size(); ++j) {
    if (basis[j].size() != v.size()) throw Error("coordinates_in_basis: length mismatch");
    for (Index i = 0; i < v.size(); ++i) m.at(i, j) = basis[j][i];
  }
  return solve(m, v);
}

}  // namespace bfalg
