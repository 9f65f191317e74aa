#include "bfalg/algebra.hpp"

#include <algorithm>

namespace bfalg {

AlgebraSpec::AlgebraSpec(ScalarField field, std::vector<std::string> basis_names,
                         std::vector<Vec> table, std::optional<Vec> unit)
    : field_(field),
      basis_names_(std::move(basis_names)),
      table_(std::move(table)),
      unit_(std::move(unit)) {
  const Index n = basis_names_.size();
  if (table_.size() != n * n) throw Error("structure constant table must have dim^2 rows");
  for (const Vec& row : table_) {
    if (row.size() != n) throw Error("structure constant row length mismatch");
  }
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j)
      if (basis_names_[i] == basis_names_[j])
        throw Error("duplicate basis name '" + basis_names_[i] + "'");
  if (unit_) {
    if (unit_->size() != n) throw Error("unit coordinate length mismatch");
    for (Index j = 0; j < n; ++j) {
      Vec left = multiply(*unit_, basis_element(j));
      Vec right = multiply(basis_element(j), *unit_);
      Vec ej = basis_element(j);
      if (left != ej || right != ej) throw Error("declared unit is not a two-sided identity");
    }
  }
}

AlgebraSpec AlgebraSpec::abelian(ScalarField field, std::vector<std::string> basis_names) {
  Index n = basis_names.size();
  std::vector<Vec> table(n * n, zero_vec(field, n));
  return AlgebraSpec(field, std::move(basis_names), std::move(table));
}

AlgebraSpec AlgebraSpec::scalar_algebra(ScalarField field) {
  std::vector<Vec> table{Vec{field.one()}};
  return AlgebraSpec(field, {"1"}, std::move(table), Vec{field.one()});
}

std::optional<Index> AlgebraSpec::basis_index(const std::string& name) const {
  for (Index i = 0; i < basis_names_.size(); ++i)
    if (basis_names_[i] == name) return i;
  return std::nullopt;
}

Vec AlgebraSpec::multiply(const Vec& x, const Vec& y) const {
  const Index n = dim();
  if (x.size() != n || y.size() != n) throw Error("multiply: element dimension mismatch");
  Vec r = zero();
  for (Index i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (Index j = 0; j < n; ++j) {
      if (y[j].is_zero()) continue;
      Scalar c = x[i] * y[j];
      const Vec& prod = basis_product(i, j);
      for (Index l = 0; l < n; ++l) r[l] += c * prod[l];
    }
  }
  return r;
}

bool AlgebraSpec::is_abelian() const {
  return std::all_of(table_.begin(), table_.end(), is_zero_vec);
}

Vec AlgebraSpec::basis_element(Index i) const {
  Vec v = zero();
  v[i] = field_.one();
  return v;
}

std::optional<Vec> AlgebraSpec::find_identity() const {
  const Index n = dim();
  // unknown u: sum_i u_i c[i][j][l] = delta(j,l) and sum_j u_j c[i][j][l] = delta(i,l)
  Matrix sys(field_, 2 * n * n, n);
  Vec rhs = zero_vec(field_, 2 * n * n);
  for (Index j = 0; j < n; ++j)
    for (Index l = 0; l < n; ++l) {
      Index row = j * n + l;
      for (Index i = 0; i < n; ++i) sys.at(row, i) = basis_product(i, j)[l];
      rhs[row] = (j == l) ? field_.one() : field_.zero();
    }
  for (Index i = 0; i < n; ++i)
    for (Index l = 0; l < n; ++l) {
      Index row = n * n + i * n + l;
      for (Index j = 0; j < n; ++j) sys.at(row, j) = basis_product(i, j)[l];
      rhs[row] = (i == l) ? field_.one() : field_.zero();
    }
  return solve(sys, rhs);
}

AlgebraSpec AlgebraSpec::with_detected_identity() const {
  if (unit_) return *this;
  std::optional<Vec> u = find_identity();
  if (!u) return *this;
  return AlgebraSpec(field_, basis_names_, table_, std::move(u));
}

std::optional<TripleWitness> AlgebraSpec::associativity_witness() const {
  const Index n = dim();
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      const Vec& ij = basis_product(i, j);
      for (Index l = 0; l < n; ++l) {
        Vec lhs = multiply(ij, basis_element(l));
        Vec rhs = multiply(basis_element(i), basis_product(j, l));
        if (lhs != rhs) return TripleWitness{i, j, l};
      }
    }
  return std::nullopt;
}

std::optional<PairWitness> AlgebraSpec::commutativity_witness() const {
  const Index n = dim();
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      if (basis_product(i, j) != basis_product(j, i)) return PairWitness{i, j};
  return std::nullopt;
}

bool AlgebraSpec::is_idempotent(const Vec& r) const { return multiply(r, r) == r; }

AlgebraSpec AlgebraSpec::negate_multiplication() const {
  std::vector<Vec> neg = table_;
  for (Vec& row : neg)
    for (Scalar& c : row) c = -c;
  // a unit of the original is not a unit of the negation (x*1 = -x), so re-detect
  return AlgebraSpec(field_, basis_names_, std::move(neg)).with_detected_identity();
}

Matrix AlgebraSpec::left_multiplication(const Vec& a) const {
  const Index n = dim();
  Matrix m(field_, n, n);
  for (Index j = 0; j < n; ++j) {
    Vec col = multiply(a, basis_element(j));
    for (Index i = 0; i < n; ++i) m.at(i, j) = col[i];
  }
  return m;
}

Matrix AlgebraSpec::right_multiplication(const Vec& a) const {
  const Index n = dim();
  Matrix m(field_, n, n);
  for (Index j = 0; j < n; ++j) {
    Vec col = multiply(basis_element(j), a);
    for (Index i = 0; i < n; ++i) m.at(i, j) = col[i];
  }
  return m;
}

std::optional<PairWitness> algebra_morphism_witness(const AlgebraSpec& src,
                                                    const AlgebraSpec& dst,
                                                    const Matrix& f) {
  if (src.field() != dst.field()) throw Error("morphism check: field mismatch");
  if (f.rows() != dst.dim() || f.cols() != src.dim())
    throw Error("morphism check: matrix shape mismatch");
  for (Index i = 0; i < src.dim(); ++i) {
    Vec fi = f.col(i);
    for (Index j = 0; j < src.dim(); ++j) {
      Vec lhs = f.apply(src.basis_product(i, j));
      Vec rhs = dst.multiply(fi, f.col(j));
      if (lhs != rhs) return PairWitness{i, j};
    }
  }
  return std::nullopt;
}

std::optional<PairWitness> unital_morphism_witness(const AlgebraSpec& src,
                                                   const AlgebraSpec& dst,
                                                   const Matrix& f) {
  if (!src.is_unital() || !dst.is_unital())
    throw Error("unital morphism check requires identities on both sides");
  if (auto w = algebra_morphism_witness(src, dst, f)) return w;
  if (f.apply(*src.unit()) != *dst.unit()) return PairWitness{src.dim(), src.dim()};
  return std::nullopt;
}

Matrix idempotent_to_morphism(const AlgebraSpec& a, const Vec& r) {
  if (!a.is_idempotent(r)) throw Error("element is not idempotent");
  Matrix m(a.field(), a.dim(), 1);
  for (Index i = 0; i < a.dim(); ++i) m.at(i, 0) = r[i];
  return m;
}

std::vector<Vec> enumerate_idempotents(const AlgebraSpec& a, std::uint64_t budget) {
  const ScalarField& field = a.field();
  if (!field.is_prime_field())
    throw Error("idempotent enumeration is only supported over prime fields");
  const std::uint64_t p = field.modulus();
  const Index n = a.dim();
  std::uint64_t count = 1;
  for (Index i = 0; i < n; ++i) {
    if (count > budget / p + 1) throw Error("idempotent enumeration budget exceeded");
    count *= p;
    if (count > budget) throw Error("idempotent enumeration budget exceeded");
  }

  std::vector<Vec> found;
  std::vector<std::uint64_t> digits(n, 0);
  for (std::uint64_t step = 0; step < count; ++step) {
    Vec r;
    r.reserve(n);
    for (Index i = 0; i < n; ++i) r.push_back(field.from_int(static_cast<long>(digits[i])));
    if (a.is_idempotent(r)) found.push_back(std::move(r));
    // odometer, last coordinate fastest: lexicographic order over tuples
    for (Index i = n; i-- > 0;) {
      if (++digits[i] < p) break;
      digits[i] = 0;
    }
  }
  return found;
}

namespace {

Matrix span_matrix(const AlgebraSpec& a, const std::vector<Vec>& span) {
  for (const Vec& v : span)
    if (v.size() != a.dim()) throw Error("span vector dimension mismatch");
  return Matrix::from_rows(a.field(), span, a.dim());
}

}  // namespace

bool is_ideal(const AlgebraSpec& a, const std::vector<Vec>& span) {
  Matrix m = span_matrix(a, span);
  for (Index i = 0; i < a.dim(); ++i) {
    Vec ei = a.basis_element(i);
    for (const Vec& x : span) {
      if (!in_row_space(m, a.multiply(ei, x))) return false;
      if (!in_row_space(m, a.multiply(x, ei))) return false;
    }
  }
  return true;
}

bool is_subalgebra(const AlgebraSpec& a, const std::vector<Vec>& span) {
  Matrix m = span_matrix(a, span);
  for (const Vec& x : span)
    for (const Vec& y : span)
      if (!in_row_space(m, a.multiply(x, y))) return false;
  return true;
}

}  // namespace bfalg
