#pragma once

#include <string>
#include <vector>

#include "bfalg/extension.hpp"

namespace bfalg {

/// An R-R-bimodule K with an internal multiplication and an R-valued
/// pairing, the data of a (semi-)trivial ring extension K + R.  All tables
/// give basis products: left[i][a] = e_i * f_a in K, right[a][i] = f_a * e_i
/// in K, kmul[a][c] = f_a * f_c in K, pairing[a][c] = b(f_a, f_c) in R.
struct BimoduleSpec {
  AlgebraSpec ring;
  std::vector<std::string> mod_basis;
  std::vector<std::vector<Vec>> left;     // [ring.dim][moddim] -> Vec(moddim)
  std::vector<std::vector<Vec>> right;    // [moddim][ring.dim] -> Vec(moddim)
  std::vector<std::vector<Vec>> kmul;     // [moddim][moddim] -> Vec(moddim)
  std::vector<std::vector<Vec>> pairing;  // [moddim][moddim] -> Vec(ring.dim)

  BimoduleSpec(AlgebraSpec ring_algebra, std::vector<std::string> module_basis);

  Index moddim() const { return mod_basis.size(); }

  /// Bilinear extensions of the action tables.
  Vec act_left(const Vec& r, const Vec& k) const;
  Vec act_right(const Vec& k, const Vec& r) const;
  Vec mul_k(const Vec& k1, const Vec& k2) const;
  Vec pair_k(const Vec& k1, const Vec& k2) const;  // value in the ring
};

struct BimoduleWitness {
  std::string axiom;
  std::vector<Index> at;
};

/// Nullopt iff the unital bimodule axioms hold on basis triples.  Throws
/// when the ring is not associative unital.
std::optional<BimoduleWitness> check_bimodule(const BimoduleSpec& bs);

/// Nullopt iff kmul and pairing are balanced R-bimodule morphisms on basis
/// triples.
std::optional<BimoduleWitness> check_balanced(const BimoduleSpec& bs);

/// The algebra K + R with (k,r)(k',r') = (kr' + rk' + kk', rr' + b(k,k')),
/// basis f_1..f_m, e_1..e_n, identity (0, 1_R).  Preconditions
/// check_bimodule and check_balanced unless force is set.
AlgebraSpec semitrivial_extend(const BimoduleSpec& bs, bool force = false);

/// Every failing associativity triple (full list, for diagnosis).
std::vector<TripleWitness> associativity_audit(const AlgebraSpec& a);

/// Basis of the centralizer C_S(R) = {x : x phi(e_i) = phi(e_i) x}.  The
/// embedding must be an injective unital algebra morphism into an
/// associative unital S.
std::vector<Vec> centralizer_basis(const AlgebraSpec& s, const AlgebraSpec& r,
                                   const Matrix& embed);

struct IdemHomReport {
  Matrix phi_e;                // r ↦ e * phi(r)
  bool right_module_morphism;  // phi_e(r r') = phi_e(r) phi(r'); always true
  bool ring_morphism;          // phi_e multiplicative
  bool centralizes;            // e in C_S(R); equivalent to ring_morphism
};

IdemHomReport idempotent_hom_correspondence(const AlgebraSpec& s, const AlgebraSpec& r,
                                            const Matrix& embed, const Vec& e);

enum class AugmentationClass { Augmentation, WeakAugmentation, Neither };

struct AugmentationReport {
  bool identity_on_r;   // eps ∘ embed = id_R
  bool multiplicative;  // eps(x y) = eps(x) eps(y)
  bool bimodule_linear; // eps(phi(r) s phi(r')) = r eps(s) r'
  AugmentationClass cls;
};

/// Classifies eps : S -> R against the embedding: identity on R plus
/// multiplicativity (Augmentation) or bimodule linearity (WeakAugmentation).
AugmentationReport classify_augmentation_detailed(const AlgebraSpec& s, const AlgebraSpec& r,
                                                  const Matrix& embed, const Matrix& eps);
AugmentationClass classify_augmentation(const AlgebraSpec& s, const AlgebraSpec& r,
                                        const Matrix& embed, const Matrix& eps);

const char* to_string(AugmentationClass c);

}  // namespace bfalg
