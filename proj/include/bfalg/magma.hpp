#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bfalg/extension.hpp"

namespace bfalg {

/// A parenthesized power of the single generator x: the free cyclic unital
/// magma.  Unit (degree 0) never appears strictly inside a product; the
/// product constructor simplifies 1*v = v = v*1.  Immutable and cheap to
/// copy (shared subtrees).
class MagmaMonomial {
 public:
  static MagmaMonomial unit();
  static MagmaMonomial leaf();
  static MagmaMonomial product(const MagmaMonomial& l, const MagmaMonomial& r);

  int degree() const { return deg_; }
  bool is_unit() const { return deg_ == 0; }
  bool is_leaf() const { return deg_ == 1 && !kids_; }
  bool is_node() const { return static_cast<bool>(kids_); }
  const MagmaMonomial& left() const;
  const MagmaMonomial& right() const;

  /// "1", "x", "(x.x)", "(x.(x.x))"
  std::string str() const;
  static std::optional<MagmaMonomial> parse(std::string_view text);

  /// Total order: degree first, then left degree, then children recursively.
  int compare(const MagmaMonomial& o) const;
  bool operator==(const MagmaMonomial& o) const { return compare(o) == 0; }
  bool operator!=(const MagmaMonomial& o) const { return compare(o) != 0; }
  bool operator<(const MagmaMonomial& o) const { return compare(o) < 0; }

 private:
  MagmaMonomial(int deg, std::shared_ptr<const std::pair<MagmaMonomial, MagmaMonomial>> kids)
      : deg_(deg), kids_(std::move(kids)) {}
  int deg_;
  std::shared_ptr<const std::pair<MagmaMonomial, MagmaMonomial>> kids_;
};

/// All monomials of degree exactly d, ordered left-degree-major (matches
/// MagmaMonomial::compare).  Counts are the Catalan numbers C(d-1) for d >= 1.
std::vector<MagmaMonomial> enumerate_monomials(int degree);

struct TensorKey {
  MagmaMonomial shape;
  std::vector<Index> indices;  // one base-algebra basis index per leaf
  bool operator<(const TensorKey& o) const;
  bool operator==(const TensorKey& o) const;
};

/// An element of the truncated non-associative tensor algebra T_na(R):
/// a finite k-linear combination of (shape, index sequence) monomials of
/// degree <= bound.  Zero coefficients are never stored.
class NATensorElement {
 public:
  NATensorElement(ScalarField field, Index base_dim, int bound);

  static NATensorElement scalar_term(ScalarField field, Index base_dim, int bound,
                                     const Scalar& c);
  static NATensorElement generator(ScalarField field, Index base_dim, int bound, Index i);
  static NATensorElement monomial(ScalarField field, Index base_dim, int bound,
                                  const MagmaMonomial& shape, std::vector<Index> indices,
                                  const Scalar& c);
  /// Degree-1 embedding of an algebra element.
  static NATensorElement embed(ScalarField field, int bound, const Vec& r);

  const ScalarField& field() const { return field_; }
  Index base_dim() const { return base_dim_; }
  int bound() const { return bound_; }
  const std::map<TensorKey, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  NATensorElement operator+(const NATensorElement& o) const;
  NATensorElement scaled(const Scalar& c) const;

  /// Graded product: shapes multiply in the magma, index sequences
  /// concatenate.  Throws when a product degree exceeds the bound, naming
  /// the offending shape.
  NATensorElement operator*(const NATensorElement& o) const;

  void add_term(TensorKey key, const Scalar& c);

 private:
  ScalarField field_;
  Index base_dim_;
  int bound_;
  std::map<TensorKey, Scalar> terms_;
};

/// Image of t in (R,b)@_b k under the rewrite x (x) y -> mu(x,y) - b(x,y):
/// children are reduced to (element, scalar) pairs first, then combined
/// with the extension product.  Linear in t, identity on degree <= 1.
std::pair<Vec, Scalar> reduce_to_normal_form(const NATensorElement& t, const BFAlgebra& base);

/// Which degree-2 subtree a rewriting step contracts first.
enum class RedexOrder { Leftmost, Rightmost };

/// Same normal form computed by explicit one-step rewriting on the tensor
/// element.  Exists so strategy independence is a tested fact.
std::pair<Vec, Scalar> reduce_by_rewriting(const NATensorElement& t, const BFAlgebra& base,
                                           RedexOrder order);

struct MagmaReport {
  bool ok;
  std::string detail;  // offending shapes/indices on failure
  std::size_t cases_checked;
};

/// Checks that reduction is a unital algebra morphism onto the extension:
/// reduce(s*t) = reduce(s) * reduce(t) for all shape pairs up to the degree
/// bound, exhaustively over index assignments (seeded random sample above
/// a size threshold).
MagmaReport verify_quotient_iso(const BFAlgebra& rb, int degree_bound,
                                std::uint64_t seed = 20240810);

/// In the associative case all shapes of a degree must reduce alike; throws
/// when the extension is not associative.
MagmaReport shape_independence_check(const BFAlgebra& rb, int degree_bound);

}  // namespace bfalg
