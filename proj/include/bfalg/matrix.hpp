#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "bfalg/scalar.hpp"

namespace bfalg {

using Index = std::size_t;

/// Coordinate vector over the active field.
using Vec = std::vector<Scalar>;

Vec zero_vec(const ScalarField& field, Index n);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Scalar& c, const Vec& v);
bool is_zero_vec(const Vec& v);

/// Dense row-major matrix over the active field.  All arithmetic exact.
class Matrix {
 public:
  Matrix(ScalarField field, Index rows, Index cols);
  static Matrix identity(ScalarField field, Index n);
  static Matrix from_rows(ScalarField field, const std::vector<Vec>& rows, Index cols);

  Index rows() const { return rows_; }
  Index cols() const { return cols_; }
  const ScalarField& field() const { return field_; }

  Scalar& at(Index i, Index j) { return e_[i * cols_ + j]; }
  const Scalar& at(Index i, Index j) const { return e_[i * cols_ + j]; }

  Vec row(Index i) const;
  Vec col(Index j) const;
  Matrix transpose() const;
  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Vec apply(const Vec& x) const;  // matrix * column vector

  bool operator==(const Matrix& o) const;
  bool operator!=(const Matrix& o) const { return !(*this == o); }
  bool is_zero() const;

 private:
  ScalarField field_;
  Index rows_, cols_;
  std::vector<Scalar> e_;
};

struct RrefResult {
  Matrix rref;
  std::vector<Index> pivots;  // pivot column per pivot row
};

/// Reduced row echelon form; row space preserved.
RrefResult rref(const Matrix& m);

Index rank(const Matrix& m);

/// Basis of the right null space, one vector per free column in ascending
/// column order, each scaled so its first nonzero entry is 1.  Empty when
/// the kernel is trivial.
std::vector<Vec> kernel_basis(const Matrix& m);

/// One solution of m*x = b with free variables set to 0, or nullopt when
/// the system is inconsistent.
std::optional<Vec> solve(const Matrix& m, const Vec& b);

/// True iff v is a linear combination of the rows of m.
bool in_row_space(const Matrix& m, const Vec& v);

/// Coordinates of v in the given spanning rows (assumed independent);
/// nullopt when v is outside their span.
std::optional<Vec> coordinates_in_basis(const std::vector<Vec>& basis, const Vec& v,
                                        const ScalarField& field);

}  // namespace bfalg
