#include "bfalg/extension.hpp"

#include <algorithm>

namespace bfalg {

namespace {

std::string fresh_name(const std::vector<std::string>& taken, const std::string& stem) {
  if (std::find(taken.begin(), taken.end(), stem) == taken.end()) return stem;
  for (int i = 0;; ++i) {
    std::string candidate = stem + std::to_string(i);
    if (std::find(taken.begin(), taken.end(), candidate) == taken.end()) return candidate;
  }
}

Extension build_extension(const AlgebraSpec& r, const Matrix* form) {
  const ScalarField& field = r.field();
  const Index n = r.dim();
  std::vector<std::string> names = r.basis_names();
  names.push_back(fresh_name(names, "u"));

  std::vector<Vec> table(static_cast<std::size_t>(n + 1) * (n + 1), zero_vec(field, n + 1));
  auto entry = [&](Index i, Index j) -> Vec& { return table[i * (n + 1) + j]; };
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      const Vec& p = r.basis_product(i, j);
      for (Index l = 0; l < n; ++l) entry(i, j)[l] = p[l];
      if (form) entry(i, j)[n] = -form->at(i, j);
    }
    entry(i, n)[i] = field.one();  // e_i * u = e_i
    entry(n, i)[i] = field.one();  // u * e_i = e_i
  }
  entry(n, n)[n] = field.one();  // u * u = u

  Vec unit = zero_vec(field, n + 1);
  unit[n] = field.one();
  Vec eps = unit;
  return Extension{AlgebraSpec(field, std::move(names), std::move(table), unit),
                   std::move(eps)};
}

}  // namespace

Vec require_unit(const AlgebraSpec& a) {
  if (a.unit()) return *a.unit();
  if (auto u = a.find_identity()) return *u;
  throw Error("algebra has no identity");
}

Extension hash_extend(const AlgebraSpec& r) { return build_extension(r, nullptr); }

Extension at_extend(const BFAlgebra& rb) { return build_extension(rb.algebra, &rb.form); }

std::pair<Vec, Scalar> ext_product(const BFAlgebra& rb, const std::pair<Vec, Scalar>& x,
                                   const std::pair<Vec, Scalar>& y) {
  const auto& [r, lam] = x;
  const auto& [rp, lamp] = y;
  Vec part = add(rb.algebra.multiply(r, rp), add(scale(lam, rp), scale(lamp, r)));
  Scalar sc = lam * lamp - eval_form(rb.form, r, rp);
  return {std::move(part), std::move(sc)};
}

namespace {

Scalar apply_functional(const Vec& eps, const Vec& x) {
  if (eps.size() != x.size()) throw Error("functional dimension mismatch");
  if (eps.empty()) throw Error("functional on the zero algebra");
  Scalar acc = eps[0].field().zero();
  for (Index i = 0; i < eps.size(); ++i) acc += eps[i] * x[i];
  return acc;
}

}  // namespace

bool is_weak_augmentation(const AlgebraSpec& a, const Vec& eps) {
  if (eps.size() != a.dim()) throw Error("augmentation length mismatch");
  Vec unit = require_unit(a);
  // the zero algebra is unital (1 = 0) but eps(1) = 0 != 1 there
  if (a.dim() == 0) return false;
  return apply_functional(eps, unit).is_one();
}

bool is_augmentation(const AlgebraSpec& a, const Vec& eps) {
  if (!is_weak_augmentation(a, eps)) return false;
  for (Index i = 0; i < a.dim(); ++i)
    for (Index j = 0; j < a.dim(); ++j) {
      if (apply_functional(eps, a.basis_product(i, j)) != eps[i] * eps[j]) return false;
    }
  return true;
}

Decomposition decompose(const AlgebraSpec& a, const Vec& eps) {
  if (!is_weak_augmentation(a, eps)) throw Error("not a weak augmentation");
  const ScalarField& field = a.field();
  const Index n = a.dim();
  Vec unit = require_unit(a);

  Matrix eps_m(field, 1, n);
  for (Index j = 0; j < n; ++j) eps_m.at(0, j) = eps[j];
  std::vector<Vec> kbasis = kernel_basis(eps_m);
  const Index m = kbasis.size();

  auto kernel_coords = [&](const Vec& x) -> Vec {
    auto c = coordinates_in_basis(kbasis, x, field);
    if (!c) throw Error("internal: element outside kernel span");
    return *c;
  };

  std::vector<std::string> knames;
  knames.reserve(m);
  for (Index i = 0; i < m; ++i) knames.push_back("z" + std::to_string(i + 1));

  std::vector<Vec> ktable(m * m, zero_vec(field, m));
  Matrix kform(field, m, m);
  for (Index i = 0; i < m; ++i)
    for (Index j = 0; j < m; ++j) {
      Vec prod = a.multiply(kbasis[i], kbasis[j]);
      Scalar s = apply_functional(eps, prod);
      ktable[i * m + j] = kernel_coords(sub(prod, scale(s, unit)));
      kform.at(i, j) = -s;
    }

  Matrix embed(field, n, m);
  for (Index j = 0; j < m; ++j)
    for (Index i = 0; i < n; ++i) embed.at(i, j) = kbasis[j][i];

  Matrix proj1(field, m, n);
  for (Index j = 0; j < n; ++j) {
    Vec c = kernel_coords(sub(a.basis_element(j), scale(eps[j], unit)));
    for (Index i = 0; i < m; ++i) proj1.at(i, j) = c[i];
  }

  return Decomposition{BFAlgebra(AlgebraSpec(field, std::move(knames), std::move(ktable)),
                                 std::move(kform)),
                       std::move(embed), std::move(proj1), eps};
}

namespace {

bool is_invertible(const Matrix& m) { return m.rows() == m.cols() && rank(m) == m.rows(); }

}  // namespace

RoundTrip roundtrip_gh(const BFAlgebra& rb) {
  Extension ext = at_extend(rb);
  Decomposition dec = decompose(ext.algebra, ext.eps);
  const Index n = rb.algebra.dim();

  // canonical map r ↦ (r,0) landing in K, in kernel coordinates
  Matrix incl(rb.algebra.field(), n + 1, n);
  for (Index i = 0; i < n; ++i) incl.at(i, i) = rb.algebra.field().one();
  Matrix iso = dec.proj1 * incl;

  if (dec.kernel.algebra.dim() != n)
    return {false, iso, "kernel dimension differs from the source"};
  if (!is_invertible(iso)) return {false, iso, "canonical map is not invertible"};
  if (auto w = algebra_morphism_witness(rb.algebra, dec.kernel.algebra, iso))
    return {false, iso,
            "canonical map is not an algebra morphism at pair (" + std::to_string(w->i) +
                "," + std::to_string(w->j) + ")"};
  if (auto w = orthogonal_morphism_witness(rb.form, dec.kernel.form, iso))
    return {false, iso,
            "canonical map is not orthogonal at pair (" + std::to_string(w->i) + "," +
                std::to_string(w->j) + ")"};
  return {true, iso, ""};
}

RoundTrip roundtrip_hg(const AlgebraSpec& a, const Vec& eps) {
  Decomposition dec = decompose(a, eps);
  Extension ext = at_extend(dec.kernel);
  const Index n = a.dim();
  const Index m = dec.kernel.algebra.dim();

  // canonical map x ↦ (proj1 x, eps x)
  Matrix iso(a.field(), m + 1, n);
  for (Index i = 0; i < m; ++i)
    for (Index j = 0; j < n; ++j) iso.at(i, j) = dec.proj1.at(i, j);
  for (Index j = 0; j < n; ++j) iso.at(m, j) = eps[j];

  if (m + 1 != n) return {false, iso, "kernel does not split off one dimension"};
  if (!is_invertible(iso)) return {false, iso, "canonical map is not invertible"};
  AlgebraSpec a_unital = a.is_unital() ? a : a.with_detected_identity();
  if (auto w = unital_morphism_witness(a_unital, ext.algebra, iso))
    return {false, iso,
            "canonical map is not a unital morphism at pair (" + std::to_string(w->i) +
                "," + std::to_string(w->j) + ")"};
  // eps_ext ∘ iso = eps: eps_ext is the last coordinate
  for (Index j = 0; j < n; ++j) {
    if (iso.at(m, j) != eps[j]) return {false, iso, "augmentations do not commute"};
  }
  return {true, iso, ""};
}

Matrix weak_aug_to_compatible_form(const AlgebraSpec& a, const Vec& eps) {
  if (!is_weak_augmentation(a, eps)) throw Error("not a weak augmentation");
  Matrix b(a.field(), a.dim(), a.dim());
  for (Index i = 0; i < a.dim(); ++i)
    for (Index j = 0; j < a.dim(); ++j)
      b.at(i, j) = apply_functional(eps, a.basis_product(i, j));
  return b;
}

Vec compatible_form_to_weak_aug(const AlgebraSpec& a, const Matrix& form) {
  AlgebraSpec au = a.is_unital() ? a : a.with_detected_identity();
  if (auto w = unital_compatibility_witness(au, form))
    throw Error("form is not compatible with the multiplication (pair " +
                std::to_string(w->i) + "," + std::to_string(w->j) + ")");
  Vec unit = require_unit(au);
  Vec eps;
  eps.reserve(a.dim());
  for (Index i = 0; i < a.dim(); ++i)
    eps.push_back(eval_form(form, au.basis_element(i), unit));
  return eps;
}

IdempotentEndo weak_aug_to_idempotent_endo(const AlgebraSpec& a, const Vec& eps) {
  if (!is_weak_augmentation(a, eps)) throw Error("not a weak augmentation");
  Vec unit = require_unit(a);
  Matrix e(a.field(), a.dim(), a.dim());
  for (Index i = 0; i < a.dim(); ++i)
    for (Index j = 0; j < a.dim(); ++j) e.at(i, j) = unit[i] * eps[j];
  return IdempotentEndo{std::move(e), is_augmentation(a, eps)};
}

Vec idempotent_endo_to_weak_aug(const AlgebraSpec& a, const Matrix& endo) {
  const Index n = a.dim();
  if (endo.rows() != n || endo.cols() != n) throw Error("endomorphism shape mismatch");
  if (endo * endo != endo) throw Error("endomorphism is not idempotent");
  if (n == 0 || endo.is_zero()) throw Error("endomorphism image is not k*1_A");
  Vec unit = require_unit(a);
  std::vector<Vec> unit_basis{unit};
  Vec eps;
  eps.reserve(n);
  for (Index j = 0; j < n; ++j) {
    auto c = coordinates_in_basis(unit_basis, endo.col(j), a.field());
    if (!c) throw Error("endomorphism image is not k*1_A");
    eps.push_back((*c)[0]);
  }
  if (!apply_functional(eps, unit).is_one())
    throw Error("endomorphism does not split the unit embedding");
  return eps;
}

std::optional<TripleWitness> extension_associativity_witness(const BFAlgebra& rb) {
  const AlgebraSpec& a = rb.algebra;
  const Matrix& b = rb.form;
  const Index n = a.dim();
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      const Vec& ij = a.basis_product(i, j);
      Scalar bij = b.at(i, j);
      for (Index l = 0; l < n; ++l) {
        const Vec& jl = a.basis_product(j, l);
        if (eval_form(b, ij, a.basis_element(l)) !=
            eval_form(b, a.basis_element(i), jl))
          return TripleWitness{i, j, l};
        Vec lhs = sub(a.multiply(ij, a.basis_element(l)), scale(bij, a.basis_element(l)));
        Vec rhs = sub(a.multiply(a.basis_element(i), jl),
                      scale(b.at(j, l), a.basis_element(i)));
        if (lhs != rhs) return TripleWitness{i, j, l};
      }
    }
  return std::nullopt;
}

std::optional<PairWitness> extension_commutativity_witness(const BFAlgebra& rb) {
  const Index n = rb.algebra.dim();
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      if (rb.algebra.basis_product(i, j) != rb.algebra.basis_product(j, i))
        return PairWitness{i, j};
      if (rb.form.at(i, j) != rb.form.at(j, i)) return PairWitness{i, j};
    }
  return std::nullopt;
}

Matrix lift_morphism(const Matrix& psi, const BFAlgebra& src, const BFAlgebra& dst) {
  const Index n = src.algebra.dim();
  const Index m = dst.algebra.dim();
  if (psi.rows() != m || psi.cols() != n) throw Error("lift_morphism: psi shape mismatch");
  Matrix f(src.algebra.field(), m + 1, n + 1);
  for (Index i = 0; i < m; ++i)
    for (Index j = 0; j < n; ++j) f.at(i, j) = psi.at(i, j);
  f.at(m, n) = src.algebra.field().one();
  return f;
}

}  // namespace bfalg
