#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "bfalg/gallery.hpp"
#include "bfalg/magma.hpp"
#include "helpers.hpp"

using namespace bfalg;
using namespace testutil;

TEST_CASE("complex numbers") {
  BFAlgebra c = make_complex();
  auto Q = c.algebra.field();
  Extension ext = at_extend(c);
  // z^2 = -1
  CHECK(ext.algebra.basis_product(0, 0) == vec(Q, {0, -1}));
  CHECK(!extension_associativity_witness(c).has_value());
  CHECK(!extension_commutativity_witness(c).has_value());
  CHECK(norm_multiplicativity_check(c, 20).ok);
}

TEST_CASE("quaternions") {
  BFAlgebra q = make_quaternions();
  auto Q = q.algebra.field();
  Extension ext = at_extend(q);
  // ij = k: (e1,0)(e2,0) = (e3,0)
  CHECK(ext.algebra.basis_product(0, 1) == vec(Q, {0, 0, 1, 0}));
  // ji = -k
  CHECK(ext.algebra.basis_product(1, 0) == vec(Q, {0, 0, -1, 0}));
  // i^2 = j^2 = k^2 = -1
  for (Index i = 0; i < 3; ++i)
    CHECK(ext.algebra.basis_product(i, i) == vec(Q, {0, 0, 0, -1}));
  CHECK(!extension_associativity_witness(q).has_value());
  auto w = extension_commutativity_witness(q);
  REQUIRE(w.has_value());
  CHECK(norm_multiplicativity_check(q, 20).ok);
}

TEST_CASE("octonions, corrected table") {
  BFAlgebra o = make_octonions();
  const AlgebraSpec& a = o.algebra;
  auto Q = a.field();

  SUBCASE("spot table entries") {
    CHECK(a.basis_product(3, 4) == vec(Q, {1, 0, 0, 0, 0, 0, 0}));   // e4 e5 = e1
    Vec m35 = a.basis_product(2, 4);                                 // e3 e5 = -e6
    CHECK(m35 == scale(-Q.one(), a.basis_element(5)));
    CHECK(a.basis_product(0, 5) == scale(-Q.one(), a.basis_element(6)));  // corrected
    CHECK(a.basis_product(5, 0) == a.basis_element(6));                   // e6 e1 = e7
  }
  SUBCASE("diagonal zero and skew-symmetric") {
    for (Index i = 0; i < 7; ++i) CHECK(is_zero_vec(a.basis_product(i, i)));
    for (Index i = 0; i < 7; ++i)
      for (Index j = 0; j < 7; ++j)
        CHECK(a.basis_product(i, j) == scale(-Q.one(), a.basis_product(j, i)));
  }
  SUBCASE("non-associativity witness (e1,e2,e4)") {
    // (e1 e2) e4 = e3 e4 = e7 but e1 (e2 e4) = e1 e6 = -e7
    CHECK(a.multiply(a.basis_product(0, 1), a.basis_element(3)) == a.basis_element(6));
    CHECK(a.multiply(a.basis_element(0), a.basis_product(1, 3)) ==
          scale(-Q.one(), a.basis_element(6)));
    auto w = extension_associativity_witness(o);
    REQUIRE(w.has_value());
    CHECK(*w == TripleWitness{0, 1, 3});
    auto direct = at_extend(o).algebra.associativity_witness();
    REQUIRE(direct.has_value());
    CHECK(*direct == TripleWitness{0, 1, 3});
  }
  SUBCASE("alternative on 50 seeded samples") {
    Extension ext = at_extend(o);
    Rng rng{424242};
    for (int s = 0; s < 50; ++s) {
      Vec u, v;
      for (Index i = 0; i < 8; ++i) {
        u.push_back(Q.from_int(rng.range(-5, 5)));
        v.push_back(Q.from_int(rng.range(-5, 5)));
      }
      Vec uu = ext.algebra.multiply(u, u);
      CHECK(ext.algebra.multiply(u, ext.algebra.multiply(u, v)) ==
            ext.algebra.multiply(uu, v));
      CHECK(ext.algebra.multiply(ext.algebra.multiply(v, u), u) ==
            ext.algebra.multiply(v, uu));
    }
  }
  SUBCASE("norm is multiplicative") {
    CHECK(norm_multiplicativity_check(o, 50).ok);
  }
}

TEST_CASE("octonions, literal table") {
  BFAlgebra o = make_octonions_literal();
  const AlgebraSpec& a = o.algebra;
  auto Q = a.field();
  // the printed table has e1 e6 = e7 AND e6 e1 = e7: skew-symmetry fails
  CHECK(a.basis_product(0, 5) == a.basis_element(6));
  CHECK(a.basis_product(5, 0) == a.basis_element(6));
  CHECK(a.basis_product(0, 5) != scale(-Q.one(), a.basis_product(5, 0)));
  // and the norm is not multiplicative
  auto rep = norm_multiplicativity_check(o, 200);
  CHECK(!rep.ok);
}

TEST_CASE("spin factors") {
  BFAlgebra s = make_spin_factor(2);
  auto Q = s.algebra.field();
  Extension ext = at_extend(s);
  // (e1,0) o (e1,0) = (0,1): second coordinate x.x' + t t'
  CHECK(ext.algebra.basis_product(0, 0) == vec(Q, {0, 0, 1}));
  CHECK(!extension_commutativity_witness(s).has_value());
  CHECK(!at_extend(s).algebra.commutativity_witness().has_value());

  SUBCASE("the displayed product matches at_extend exactly") {
    // (x,t)(x',t') = (t x' + t' x, x.x' + t t') on random samples
    Rng rng{11};
    for (int trial = 0; trial < 20; ++trial) {
      Vec x = vec(Q, {rng.range(-5, 5), rng.range(-5, 5)});
      Vec xp = vec(Q, {rng.range(-5, 5), rng.range(-5, 5)});
      Scalar t = Q.from_int(rng.range(-5, 5)), tp = Q.from_int(rng.range(-5, 5));
      auto prod = ext_product(s, {x, t}, {xp, tp});
      CHECK(prod.first == add(scale(t, xp), scale(tp, x)));
      Scalar dot = x[0] * xp[0] + x[1] * xp[1];
      CHECK(prod.second == dot + t * tp);
    }
  }
  SUBCASE("Jordan identity on seeded samples, n in {2,3}") {
    for (Index n : {Index(2), Index(3)}) {
      BFAlgebra sf = make_spin_factor(n);
      Extension ext2 = at_extend(sf);
      Rng rng{900 + n};
      for (int trial = 0; trial < 20; ++trial) {
        Vec u, v;
        for (Index i = 0; i < n + 1; ++i) {
          u.push_back(Q.from_int(rng.range(-5, 5)));
          v.push_back(Q.from_int(rng.range(-5, 5)));
        }
        Vec uu = ext2.algebra.multiply(u, u);
        Vec lhs = ext2.algebra.multiply(ext2.algebra.multiply(u, v), uu);
        Vec rhs = ext2.algebra.multiply(u, ext2.algebra.multiply(v, uu));
        CHECK(lhs == rhs);
      }
    }
  }
  SUBCASE("norm fails for the isotropic spin form") {
    CHECK(!norm_multiplicativity_check(make_spin_factor(2), 200).ok);
  }
}

TEST_CASE("quadratic algebras") {
  auto Q = ScalarField::rationals();
  SUBCASE("c = -1 squares to -1") {
    Extension ext = at_extend(make_quadratic(Q.from_int(-1)));
    CHECK(ext.algebra.basis_product(0, 0) == vec(Q, {0, -1}));
  }
  SUBCASE("c = 2 adjoins sqrt(2)") {
    Extension ext = at_extend(make_quadratic(Q.from_int(2)));
    CHECK(ext.algebra.basis_product(0, 0) == vec(Q, {0, 2}));
  }
  SUBCASE("c = 0 gives dual numbers") {
    Extension ext = at_extend(make_quadratic(Q.zero()));
    CHECK(is_zero_vec(ext.algebra.basis_product(0, 0)));
  }
}

TEST_CASE("number field construction") {
  auto Q = ScalarField::rationals();
  SUBCASE("t^2 - 2: trace and augmentation") {
    NumberFieldSpec nf(Q, {Q.from_int(-2), Q.zero(), Q.one()});
    Extension l = make_number_field(nf);
    CHECK(l.algebra.dim() == 2);
    // Tr(a + b t) = 2a, eps(a + b t) = a
    CHECK(l.eps == vec(Q, {1, 0}));
    // t * t = 2
    CHECK(l.algebra.basis_product(1, 1) == vec(Q, {2, 0}));
    CHECK(is_weak_augmentation(l.algebra, l.eps));
    CHECK(!is_augmentation(l.algebra, l.eps));  // eps(t t) = 2 != 0
  }
  SUBCASE("t^3 - 2: eps kills t and t^2") {
    NumberFieldSpec nf(Q, {Q.from_int(-2), Q.zero(), Q.zero(), Q.one()});
    Extension l = make_number_field(nf);
    CHECK(l.eps == vec(Q, {1, 0, 0}));
    // t2 * t2 = t^4 = 2t
    CHECK(l.algebra.basis_product(2, 2) == vec(Q, {0, 2, 0}));
  }
  SUBCASE("scalars have trace d * lambda") {
    NumberFieldSpec nf(Q, {Q.from_int(-2), Q.zero(), Q.zero(), Q.one()});
    Extension l = make_number_field(nf);
    // eps(1) = (1/3) Tr(1) = 1, so Tr(1) = 3 = d
    Scalar eps1 = l.eps[0];
    CHECK(eps1.is_one());
  }
  SUBCASE("reducible polynomials are rejected") {
    CHECK_THROWS_AS(NumberFieldSpec(Q, {Q.from_int(-1), Q.zero(), Q.one()}), Error);
    // x^2 - 1
    CHECK_THROWS_AS(NumberFieldSpec(Q, {Q.zero(), Q.zero(), Q.one()}), Error);  // x^2
    // x^4 + 2x^2 + 1 = (x^2+1)^2: no rational root, quadratic factor
    CHECK_THROWS_AS(
        NumberFieldSpec(Q, {Q.one(), Q.zero(), Q.from_int(2), Q.zero(), Q.one()}), Error);
  }
  SUBCASE("irreducible quartic passes") {
    // x^4 - 2 (Eisenstein at 2)
    NumberFieldSpec nf(Q, {Q.from_int(-2), Q.zero(), Q.zero(), Q.zero(), Q.one()});
    CHECK(make_number_field(nf).algebra.dim() == 4);
  }
  SUBCASE("non-monic is rejected") {
    CHECK_THROWS_AS(NumberFieldSpec(Q, {Q.one(), Q.from_int(2)}), Error);
  }
  SUBCASE("characteristic dividing the degree is rejected") {
    auto F2 = ScalarField::prime_field(2);
    // x^2 + x + 1 is irreducible over F_2 but d = p = 2
    CHECK_THROWS_AS(NumberFieldSpec(F2, {F2.one(), F2.one(), F2.one()}), Error);
  }
  SUBCASE("prime field extensions work when p does not divide d") {
    auto F7 = ScalarField::prime_field(7);
    // x^2 - 3: 3 is not a square mod 7 (squares: 1,4,2)
    NumberFieldSpec nf(F7, {F7.from_int(-3), F7.zero(), F7.one()});
    Extension l = make_number_field(nf);
    CHECK(l.algebra.dim() == 2);
    CHECK(is_weak_augmentation(l.algebra, l.eps));
    // and a reducible one is caught: x^2 - 1 = (x-1)(x+1)
    CHECK_THROWS_AS(NumberFieldSpec(F7, {F7.from_int(-1), F7.zero(), F7.one()}), Error);
  }
}

TEST_CASE("trace zero decomposition") {
  auto Q = ScalarField::rationals();
  SUBCASE("t^2 + 1: Z = span{t} with mu = 0 and b(t,t) = 1") {
    NumberFieldSpec nf(Q, {Q.one(), Q.zero(), Q.one()});
    BFAlgebra z = trace_zero_decomposition(nf);
    CHECK(z.algebra.dim() == 1);
    CHECK(is_zero_vec(z.algebra.basis_product(0, 0)));
    CHECK(z.form.at(0, 0) == Q.one());
    auto rep = compatibility_status(z.algebra, z.form);
    CHECK(rep.status == Compatibility::Incompatible);
  }
  SUBCASE("t^2 - 2: b(t,t) = -2") {
    NumberFieldSpec nf(Q, {Q.from_int(-2), Q.zero(), Q.one()});
    BFAlgebra z = trace_zero_decomposition(nf);
    CHECK(is_zero_vec(z.algebra.basis_product(0, 0)));
    CHECK(z.form.at(0, 0) == Q.from_int(-2));
  }
  SUBCASE("t^3 - 2: mu_Z is commutative but not associative") {
    NumberFieldSpec nf(Q, {Q.from_int(-2), Q.zero(), Q.zero(), Q.one()});
    BFAlgebra z = trace_zero_decomposition(nf);
    CHECK(z.algebra.dim() == 2);
    CHECK(!z.algebra.commutativity_witness().has_value());
    auto w = z.algebra.associativity_witness();
    REQUIRE(w.has_value());
    // balance holds on Z even though mu_Z is not associative
    CHECK(!balance_identity_witness(z.algebra, z.form).has_value());
  }
  SUBCASE("reconstruction: at_extend(Z, b_Z) is isomorphic to L") {
    for (auto coeffs : {std::vector<long>{1, 0, 1}, std::vector<long>{-2, 0, 1},
                        std::vector<long>{-2, 0, 0, 1}}) {
      std::vector<Scalar> cs;
      for (long c : coeffs) cs.push_back(Q.from_int(c));
      NumberFieldSpec nf(Q, cs);
      Extension l = make_number_field(nf);
      CHECK(roundtrip_hg(l.algebra, l.eps).ok);
    }
  }
}

TEST_CASE("number field forms are compatible with the multiplication") {
  auto Q = ScalarField::rationals();
  NumberFieldSpec nf(Q, {Q.from_int(-2), Q.zero(), Q.one()});
  Extension l = make_number_field(nf);
  // b'(a,b) = eps(a b) is compatible, and the bijection returns eps
  Matrix b = weak_aug_to_compatible_form(l.algebra, l.eps);
  CHECK(!unital_compatibility_witness(l.algebra, b).has_value());
  CHECK(compatible_form_to_weak_aug(l.algebra, b) == l.eps);
}

TEST_CASE("octonion extension: balanced form on a non-associative algebra") {
  // the induced form of pi_2 satisfies the balance identity even though the
  // extension is not associative, and it is compatible
  BFAlgebra o = make_octonions();
  Extension ext = at_extend(o);
  Matrix b = weak_aug_to_compatible_form(ext.algebra, ext.eps);
  REQUIRE(ext.algebra.associativity_witness().has_value());
  CHECK(!balance_identity_witness(ext.algebra, b).has_value());
  CHECK(!unital_compatibility_witness(ext.algebra, b).has_value());
}

TEST_CASE("octonion base is rejected by the associative shape check") {
  BFAlgebra o = make_octonions();
  CHECK_THROWS_AS(shape_independence_check(o, 3), Error);
  // the non-associative quotient still works
  CHECK(verify_quotient_iso(o, 3).ok);
}

TEST_CASE("norm multiplicativity reporting") {
  BFAlgebra q = make_quaternions();
  auto rep = norm_multiplicativity_check(q, 50);
  CHECK(rep.ok);
  CHECK(rep.samples == 50);
  auto bad = norm_multiplicativity_check(make_spin_factor(3), 300);
  CHECK(!bad.ok);
  CHECK(!bad.detail.empty());
}
