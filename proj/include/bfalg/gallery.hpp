#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bfalg/extension.hpp"

namespace bfalg {

/// 1-dimensional abelian algebra over Q with form [1]; its extension has a
/// generator squaring to -1.
BFAlgebra make_complex();

/// The cross product on 3-space with the dot product; its extension is the
/// quaternions.
BFAlgebra make_quaternions();

/// The 7-dimensional cross product (skew table, corrected at the (e1,e6)
/// entry) with the Euclidean scalar product; its extension is the octonions.
BFAlgebra make_octonions();

/// The same table with the (e1,e6) entry as printed in the source we follow,
/// which breaks skew-symmetry; kept for the failure demonstrations.
BFAlgebra make_octonions_literal();

/// n-dimensional abelian algebra with the opposite of the dot product; its
/// extension is the spin factor Jordan algebra.
BFAlgebra make_spin_factor(Index n);

/// 1-dimensional abelian algebra with form [-c]; the extension generator
/// squares to c.
BFAlgebra make_quadratic(const Scalar& c);

/// A field extension K[t]/(min_poly) presented for the trace
/// construction.  min_poly holds c_0..c_d with c_d = 1; the polynomial is
/// verified irreducible and the characteristic must not divide d.
struct NumberFieldSpec {
  ScalarField base;
  std::vector<Scalar> min_poly;

  NumberFieldSpec(ScalarField base_field, std::vector<Scalar> coeffs);
  Index degree() const { return min_poly.size() - 1; }
};

/// The d-dimensional algebra K[t]/(p) with basis 1, t, ..., t^{d-1} and the
/// normalized trace eps = Tr/d as weak augmentation.
Extension make_number_field(const NumberFieldSpec& nf);

/// The trace-zero part (Z, mu_Z, b_Z) of the field extension: the kernel
/// object of the decomposition of make_number_field.
BFAlgebra trace_zero_decomposition(const NumberFieldSpec& nf);

struct NormReport {
  bool ok;
  std::string detail;  // first counterexample on failure
  std::size_t samples;
};

/// Checks N(uv) = N(u) N(v) on the extension of rb, N(r,l) = l^2 + b(r,r),
/// over seeded random samples with small integer coordinates.  Exact per
/// sample.
NormReport norm_multiplicativity_check(const BFAlgebra& rb, std::size_t samples,
                                       std::uint64_t seed = 20240810);

}  // namespace bfalg
