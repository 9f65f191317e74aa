#include "bfalg/bform.hpp"

namespace bfalg {

BFAlgebra::BFAlgebra(AlgebraSpec a, Matrix b) : algebra(std::move(a)), form(std::move(b)) {
  if (form.rows() != algebra.dim() || form.cols() != algebra.dim())
    throw Error("bilinear form must be square of the algebra dimension");
  if (form.field() != algebra.field()) throw Error("bilinear form field mismatch");
}

Scalar eval_form(const Matrix& form, const Vec& x, const Vec& y) {
  if (x.size() != form.rows() || y.size() != form.cols())
    throw Error("eval_form: dimension mismatch");
  Scalar acc = form.field().zero();
  for (Index i = 0; i < x.size(); ++i) {
    if (x[i].is_zero()) continue;
    for (Index j = 0; j < y.size(); ++j) acc += x[i] * form.at(i, j) * y[j];
  }
  return acc;
}

bool is_symmetric(const Matrix& form) { return form == form.transpose(); }

std::optional<PairWitness> orthogonal_morphism_witness(const Matrix& src_form,
                                                       const Matrix& dst_form,
                                                       const Matrix& f) {
  if (f.cols() != src_form.rows() || f.rows() != dst_form.rows())
    throw Error("orthogonality check: shape mismatch");
  for (Index i = 0; i < src_form.rows(); ++i) {
    Vec fi = f.col(i);
    for (Index j = 0; j < src_form.cols(); ++j) {
      if (src_form.at(i, j) != eval_form(dst_form, fi, f.col(j))) return PairWitness{i, j};
    }
  }
  return std::nullopt;
}

std::optional<Vec> factors_through_mu(const AlgebraSpec& a, const Matrix& form) {
  const Index n = a.dim();
  if (form.rows() != n || form.cols() != n) throw Error("factors_through_mu: form shape");
  // row (i,j) of the system holds the coordinates of e_i e_j; eps solves
  // <row, eps> = b(e_i, e_j)
  Matrix sys(a.field(), n * n, n);
  Vec rhs = zero_vec(a.field(), n * n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      const Vec& prod = a.basis_product(i, j);
      for (Index l = 0; l < n; ++l) sys.at(i * n + j, l) = prod[l];
      rhs[i * n + j] = form.at(i, j);
    }
  return solve(sys, rhs);
}

std::optional<PairWitness> unital_compatibility_witness(const AlgebraSpec& a,
                                                        const Matrix& form) {
  std::optional<Vec> unit = a.unit();
  if (!unit) unit = a.find_identity();
  if (!unit) throw Error("compatibility test requires a unital algebra");
  for (Index i = 0; i < a.dim(); ++i)
    for (Index j = 0; j < a.dim(); ++j) {
      Scalar lhs = form.at(i, j);
      Scalar rhs = eval_form(form, a.basis_product(i, j), *unit);
      if (lhs != rhs) return PairWitness{i, j};
    }
  return std::nullopt;
}

std::optional<TripleWitness> balance_identity_witness(const AlgebraSpec& a,
                                                      const Matrix& form) {
  const Index n = a.dim();
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      for (Index l = 0; l < n; ++l) {
        Scalar lhs = eval_form(form, a.basis_product(i, j), a.basis_element(l));
        Scalar rhs = eval_form(form, a.basis_element(i), a.basis_product(j, l));
        if (lhs != rhs) return TripleWitness{i, j, l};
      }
  return std::nullopt;
}

CompatibilityReport compatibility_status(const AlgebraSpec& a, const Matrix& form) {
  std::optional<Vec> unit = a.unit();
  if (!unit) unit = a.find_identity();
  if (unit) {
    if (auto w = unital_compatibility_witness(a.is_unital() ? a : a.with_detected_identity(), form))
      return {Compatibility::Incompatible, w, std::nullopt};
    // the factoring functional eps(x) = b(x, 1) exists and is unique
    Vec eps;
    eps.reserve(a.dim());
    for (Index i = 0; i < a.dim(); ++i)
      eps.push_back(eval_form(form, a.basis_element(i), *unit));
    return {Compatibility::Compatible, std::nullopt, std::move(eps)};
  }
  if (a.is_abelian()) {
    // all products coincide at 0, so compatibility forces b = 0
    for (Index i = 0; i < a.dim(); ++i)
      for (Index j = 0; j < a.dim(); ++j)
        if (!form.at(i, j).is_zero())
          return {Compatibility::Incompatible, PairWitness{i, j}, std::nullopt};
    return {Compatibility::Compatible, std::nullopt, zero_vec(a.field(), a.dim())};
  }
  if (auto eps = factors_through_mu(a, form))
    return {Compatibility::FactorsOnly, std::nullopt, std::move(eps)};
  return {Compatibility::Unknown, std::nullopt, std::nullopt};
}

const char* to_string(Compatibility c) {
  switch (c) {
    case Compatibility::Compatible: return "compatible";
    case Compatibility::Incompatible: return "incompatible";
    case Compatibility::FactorsOnly: return "factors-only";
    case Compatibility::Unknown: return "unknown";
  }
  return "?";
}

}  // namespace bfalg
