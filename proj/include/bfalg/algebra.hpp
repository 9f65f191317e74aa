#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bfalg/matrix.hpp"

namespace bfalg {

struct PairWitness {
  Index i, j;
  bool operator==(const PairWitness&) const = default;
};

struct TripleWitness {
  Index i, j, l;
  bool operator==(const TripleWitness&) const = default;
};

/// A finite-dimensional k-algebra given by structure constants:
/// e_i * e_j = sum_l table[i*n+j][l] e_l.  Multiplication is bilinear and
/// not assumed associative, commutative, or unital.  Elements are plain
/// coordinate vectors (Vec); the algebra they live in is passed explicitly.
class AlgebraSpec {
 public:
  /// table has n*n rows (row-major over (i,j)), each of length n.
  /// A declared unit is verified to be a two-sided identity.
  AlgebraSpec(ScalarField field, std::vector<std::string> basis_names,
              std::vector<Vec> table, std::optional<Vec> unit = std::nullopt);

  /// All products zero.
  static AlgebraSpec abelian(ScalarField field, std::vector<std::string> basis_names);

  /// k itself as a 1-dimensional unital algebra with basis "1".
  static AlgebraSpec scalar_algebra(ScalarField field);

  Index dim() const { return basis_names_.size(); }
  const ScalarField& field() const { return field_; }
  const std::vector<std::string>& basis_names() const { return basis_names_; }
  std::optional<Index> basis_index(const std::string& name) const;

  const Vec& basis_product(Index i, Index j) const { return table_[i * dim() + j]; }
  Vec multiply(const Vec& x, const Vec& y) const;

  const std::optional<Vec>& unit() const { return unit_; }
  bool is_unital() const { return unit_.has_value(); }
  bool is_abelian() const;

  Vec zero() const { return zero_vec(field_, dim()); }
  Vec basis_element(Index i) const;

  /// Solves the linear system for a two-sided identity (unique if any).
  std::optional<Vec> find_identity() const;

  /// Copy with the unit slot filled in by find_identity (if one exists).
  AlgebraSpec with_detected_identity() const;

  /// Smallest basis triple with (e_i e_j) e_l != e_i (e_j e_l), if any.
  std::optional<TripleWitness> associativity_witness() const;

  /// Smallest basis pair with e_i e_j != e_j e_i, if any.
  std::optional<PairWitness> commutativity_witness() const;

  bool is_idempotent(const Vec& r) const;

  /// Same module, multiplication negated.  An involution.
  AlgebraSpec negate_multiplication() const;

  /// Matrix of x ↦ a*x (resp. x ↦ x*a) in the basis.
  Matrix left_multiplication(const Vec& a) const;
  Matrix right_multiplication(const Vec& a) const;

 private:
  ScalarField field_;
  std::vector<std::string> basis_names_;
  std::vector<Vec> table_;
  std::optional<Vec> unit_;
};

/// Nullopt iff f(e_i e_j) = f(e_i) f(e_j) on all basis pairs (f is then a
/// morphism by bilinearity); else the smallest failing pair.
std::optional<PairWitness> algebra_morphism_witness(const AlgebraSpec& src,
                                                    const AlgebraSpec& dst,
                                                    const Matrix& f);

/// Morphism check plus f(1_src) = 1_dst.  Both algebras must be unital.
/// A unit failure is reported as witness {dim,dim} of the source.
std::optional<PairWitness> unital_morphism_witness(const AlgebraSpec& src,
                                                   const AlgebraSpec& dst,
                                                   const Matrix& f);

/// The morphism k -> a corresponding to an idempotent r: lambda ↦ lambda*r,
/// as a dim(a) x 1 matrix.  Throws if r is not idempotent.
Matrix idempotent_to_morphism(const AlgebraSpec& a, const Vec& r);

/// Exhaustive list of idempotents over a prime field, lexicographic in the
/// coordinates.  Throws over the rationals or when p^dim exceeds the budget.
std::vector<Vec> enumerate_idempotents(const AlgebraSpec& a,
                                       std::uint64_t budget = std::uint64_t(1) << 20);

/// The subspace spanned by `span` absorbs multiplication by the whole
/// algebra on both sides.
bool is_ideal(const AlgebraSpec& a, const std::vector<Vec>& span);

/// The subspace spanned by `span` is closed under multiplication.
bool is_subalgebra(const AlgebraSpec& a, const std::vector<Vec>& span);

}  // namespace bfalg
