#pragma once

#include <optional>
#include <string>

#include "bfalg/algebra.hpp"

namespace bfalg {

/// A k-algebra together with a bilinear form b(x,y) = x^T B y, the objects
/// the extension functors act on.  The form matrix must be dim x dim.
struct BFAlgebra {
  AlgebraSpec algebra;
  Matrix form;

  BFAlgebra(AlgebraSpec a, Matrix b);
};

Scalar eval_form(const Matrix& form, const Vec& x, const Vec& y);

bool is_symmetric(const Matrix& form);

/// Nullopt iff b_src(e_i,e_j) = b_dst(f e_i, f e_j) on all basis pairs.
std::optional<PairWitness> orthogonal_morphism_witness(const Matrix& src_form,
                                                       const Matrix& dst_form,
                                                       const Matrix& f);

/// A linear functional eps with eps(xy) = b(x,y), if the form factors
/// through the multiplication; returned as a row vector.
std::optional<Vec> factors_through_mu(const AlgebraSpec& a, const Matrix& form);

/// For unital algebras, compatibility reduces to b(e_i,e_j) = b(e_i e_j, 1).
/// Nullopt iff compatible; throws if the algebra has no identity.
std::optional<PairWitness> unital_compatibility_witness(const AlgebraSpec& a,
                                                        const Matrix& form);

/// Nullopt iff b(e_i e_j, e_l) = b(e_i, e_j e_l) on all basis triples.
std::optional<TripleWitness> balance_identity_witness(const AlgebraSpec& a,
                                                      const Matrix& form);

enum class Compatibility { Compatible, Incompatible, FactorsOnly, Unknown };

struct CompatibilityReport {
  Compatibility status;
  /// For Incompatible: the basis pair whose product coincides with another
  /// product of different form value (unital case: with the identity
  /// factorization; abelian case: with 0*0).
  std::optional<PairWitness> witness;
  /// For Compatible/FactorsOnly: a factoring functional when one was built.
  std::optional<Vec> eps;
};

/// Exact decision for unital and abelian algebras; FactorsOnly when a
/// factoring functional exists (sufficient); Unknown otherwise.
CompatibilityReport compatibility_status(const AlgebraSpec& a, const Matrix& form);

const char* to_string(Compatibility c);

}  // namespace bfalg
