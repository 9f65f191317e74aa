#pragma once

#include <string>
#include <utility>

#include "bfalg/bform.hpp"

namespace bfalg {

/// A unital algebra together with the functional the construction singles
/// out (the second projection for the extension functors).
struct Extension {
  AlgebraSpec algebra;
  Vec eps;  // row functional on the extension
};

/// The algebra's identity, declared or detected; throws when there is none.
Vec require_unit(const AlgebraSpec& a);

/// Adjoin an identity: R#k with (r,l)(r',l') = (rr' + l r' + l' r, l l').
/// The returned eps (second projection) is a full augmentation.
Extension hash_extend(const AlgebraSpec& r);

/// The perturbed extension (R,b)@_b k with scalar part l l' - b(r,r').
/// The returned eps is a weak augmentation; it is an augmentation iff b = 0.
Extension at_extend(const BFAlgebra& rb);

/// Product in (R,b)@_b k on (element, scalar) pairs, without materializing
/// the extension algebra.
std::pair<Vec, Scalar> ext_product(const BFAlgebra& rb, const std::pair<Vec, Scalar>& x,
                                   const std::pair<Vec, Scalar>& y);

/// eps(1_A) = 1 (linearity is structural).
bool is_weak_augmentation(const AlgebraSpec& a, const Vec& eps);

/// eps(1_A) = 1 and eps multiplicative on basis pairs.
bool is_augmentation(const AlgebraSpec& a, const Vec& eps);

/// The splitting A = K + k*1_A induced by a weak augmentation, with the
/// kernel algebra (K, mu_K, b_K): mu_K(x,y) = xy - eps(xy) 1_A and
/// b_K(x,y) = -eps(xy), expressed in the kernel basis.
struct Decomposition {
  BFAlgebra kernel;
  Matrix embed;  // dim(A) x dim(K), columns are the kernel basis vectors
  Matrix proj1;  // dim(K) x dim(A), kernel coordinates of x - eps(x) 1_A
  Vec proj2;     // the weak augmentation itself
};

Decomposition decompose(const AlgebraSpec& a, const Vec& eps);

struct RoundTrip {
  bool ok;
  Matrix iso;          // the canonical isomorphism
  std::string detail;  // failure description, empty when ok
};

/// decompose(at_extend(rb)) against rb via r ↦ (r,0): the map must be an
/// invertible algebra morphism and an orthogonal transformation.
RoundTrip roundtrip_gh(const BFAlgebra& rb);

/// at_extend(decompose(a,eps)) against (a,eps) via a ↦ (proj1 a, eps a):
/// the map must be a unital algebra isomorphism commuting with the
/// augmentations.
RoundTrip roundtrip_hg(const AlgebraSpec& a, const Vec& eps);

/// B[i][j] = eps(e_i e_j); the compatible form a weak augmentation induces.
Matrix weak_aug_to_compatible_form(const AlgebraSpec& a, const Vec& eps);

/// eps(x) = b(x, 1_A); throws when the form is not compatible.
Vec compatible_form_to_weak_aug(const AlgebraSpec& a, const Matrix& form);

struct IdempotentEndo {
  Matrix endo;        // phi_1 ∘ eps, idempotent with image k*1_A
  bool algebra_endo;  // true iff eps is a full augmentation
};

IdempotentEndo weak_aug_to_idempotent_endo(const AlgebraSpec& a, const Vec& eps);

/// Recovers eps from an idempotent module endomorphism with image exactly
/// k*1_A (throws otherwise).
Vec idempotent_endo_to_weak_aug(const AlgebraSpec& a, const Matrix& endo);

/// Criterion for associativity of (R,b)@_b k checked on R itself:
/// b(xy,z) = b(x,yz) and (xy)z - b(x,y)z = x(yz) - b(y,z)x on basis triples.
std::optional<TripleWitness> extension_associativity_witness(const BFAlgebra& rb);

/// Criterion for commutativity of the extension: R commutative and b
/// symmetric; smallest basis pair violating either.
std::optional<PairWitness> extension_commutativity_witness(const BFAlgebra& rb);

/// psi ⊕ id between the extensions of src and dst, as a matrix.
Matrix lift_morphism(const Matrix& psi, const BFAlgebra& src, const BFAlgebra& dst);

}  // namespace bfalg
