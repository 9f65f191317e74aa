#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "bfalg/magma.hpp"
#include "helpers.hpp"

using namespace bfalg;
using namespace testutil;

TEST_CASE("monomial construction and unit simplification") {
  auto u = MagmaMonomial::unit();
  auto x = MagmaMonomial::leaf();
  CHECK(u.degree() == 0);
  CHECK(x.degree() == 1);
  CHECK(MagmaMonomial::product(u, x) == x);
  CHECK(MagmaMonomial::product(x, u) == x);
  auto xx = MagmaMonomial::product(x, x);
  CHECK(xx.degree() == 2);
  CHECK(xx.str() == "(x.x)");
  auto x4 = MagmaMonomial::product(xx, xx);
  CHECK(x4.str() == "((x.x).(x.x))");
  CHECK(x4.degree() == 4);
}

TEST_CASE("monomial text round trip") {
  for (const char* text : {"1", "x", "(x.x)", "(x.(x.x))", "((x.x).x)", "((x.x).(x.x))"}) {
    auto m = MagmaMonomial::parse(text);
    REQUIRE(m.has_value());
    CHECK(m->str() == text);
  }
  CHECK(!MagmaMonomial::parse("").has_value());
  CHECK(!MagmaMonomial::parse("(x.x").has_value());
  CHECK(!MagmaMonomial::parse("xx").has_value());
  CHECK(!MagmaMonomial::parse("(x,x)").has_value());
  // unit simplification happens at parse: (1.x) is the leaf
  auto m = MagmaMonomial::parse("(1.x)");
  REQUIRE(m.has_value());
  CHECK(*m == MagmaMonomial::leaf());
}

TEST_CASE("enumerate_monomials matches the Catalan sequence") {
  CHECK(enumerate_monomials(0).size() == 1);
  // degrees 1..10 -> Catalan(d-1)
  std::vector<std::size_t> expected{1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862};
  for (int d = 1; d <= 10; ++d) CHECK(enumerate_monomials(d).size() == expected[d - 1]);
}

TEST_CASE("degree-3 monomials in left-degree-major order") {
  auto ms = enumerate_monomials(3);
  REQUIRE(ms.size() == 2);
  CHECK(ms[0].str() == "(x.(x.x))");
  CHECK(ms[1].str() == "((x.x).x)");
  // degree 4: all five, deterministic order
  auto m4 = enumerate_monomials(4);
  REQUIRE(m4.size() == 5);
  CHECK(m4[0].str() == "(x.(x.(x.x)))");
  CHECK(m4[1].str() == "(x.((x.x).x))");
  CHECK(m4[2].str() == "((x.x).(x.x))");
  CHECK(m4[3].str() == "((x.(x.x)).x)");
  CHECK(m4[4].str() == "(((x.x).x).x)");
}

TEST_CASE("tensor multiply pairs shapes and concatenates indices") {
  auto Q = ScalarField::rationals();
  const Index n = 3;
  auto ei = NATensorElement::generator(Q, n, 4, 0);
  auto ej = NATensorElement::generator(Q, n, 4, 1);
  auto prod = ei * ej;
  REQUIRE(prod.terms().size() == 1);
  const auto& [key, c] = *prod.terms().begin();
  CHECK(key.shape.str() == "(x.x)");
  CHECK(key.indices == std::vector<Index>{0, 1});
  CHECK(c.is_one());

  SUBCASE("scalar unit term acts as identity") {
    auto one = NATensorElement::scalar_term(Q, n, 4, Q.one());
    auto t = (ei * ej) * ej;
    CHECK((one * t).terms() == t.terms());
    CHECK((t * one).terms() == t.terms());
  }
  SUBCASE("parenthesizations stay distinct") {
    auto el = NATensorElement::generator(Q, n, 4, 2);
    auto left = (ei * ej) * el;
    auto right = ei * (ej * el);
    CHECK(left.terms().begin()->first.shape.str() == "((x.x).x)");
    CHECK(right.terms().begin()->first.shape.str() == "(x.(x.x))");
    CHECK(!(left.terms() == right.terms()));
  }
  SUBCASE("degree overflow names the shape") {
    auto xx = ei * ej;
    auto x4 = xx * xx;
    CHECK_THROWS_WITH_AS((x4 * x4), doctest::Contains("degree bound"), Error);
  }
}

TEST_CASE("reduce_to_normal_form on small terms") {
  auto Q = ScalarField::rationals();
  SUBCASE("degree <= 1 is already a normal form") {
    BFAlgebra rb(cross_product(Q), Matrix::identity(Q, 3));
    Vec r = vec(Q, {1, -2, 0});
    auto t = NATensorElement::embed(Q, 4, r);
    auto nf = reduce_to_normal_form(t, rb);
    CHECK(nf.first == r);
    CHECK(nf.second.is_zero());
  }
  SUBCASE("x (x) y rewrites to mu(x,y) - b(x,y)") {
    BFAlgebra rb(cross_product(Q), Matrix::identity(Q, 3));
    auto t = NATensorElement::generator(Q, 3, 4, 0) * NATensorElement::generator(Q, 3, 4, 0);
    auto nf = reduce_to_normal_form(t, rb);
    CHECK(is_zero_vec(nf.first));       // e1 x e1 = 0
    CHECK(nf.second == Q.from_int(-1)); // -b(e1,e1)
  }
  SUBCASE("complex-number base: (x.x) at (0,0) gives -1") {
    BFAlgebra rb(AlgebraSpec::abelian(Q, {"i"}), mat(Q, 1, 1, {1}));
    auto t = NATensorElement::monomial(Q, 1, 4, *MagmaMonomial::parse("(x.x)"), {0, 0},
                                       Q.one());
    auto nf = reduce_to_normal_form(t, rb);
    CHECK(is_zero_vec(nf.first));
    CHECK(nf.second == Q.from_int(-1));
  }
  SUBCASE("reduction is linear") {
    BFAlgebra rb(cross_product(Q), Matrix::identity(Q, 3));
    auto s = NATensorElement::monomial(Q, 3, 4, *MagmaMonomial::parse("(x.(x.x))"),
                                       {0, 1, 2}, Q.from_int(2));
    auto t = NATensorElement::monomial(Q, 3, 4, *MagmaMonomial::parse("((x.x).x)"),
                                       {1, 1, 0}, Q.from_int(-3));
    auto nf_sum = reduce_to_normal_form(s + t, rb);
    auto nf_s = reduce_to_normal_form(s, rb);
    auto nf_t = reduce_to_normal_form(t, rb);
    CHECK(nf_sum.first == add(nf_s.first, nf_t.first));
    CHECK(nf_sum.second == nf_s.second + nf_t.second);
  }
}

TEST_CASE("rewriting strategies agree with the recursive reduction") {
  auto Q = ScalarField::rationals();
  auto F7 = ScalarField::prime_field(7);
  Rng rng{808};
  for (int trial = 0; trial < 30; ++trial) {
    const ScalarField& f = (trial % 2 == 0) ? Q : F7;
    BFAlgebra rb = random_bfalgebra(rng, f, 2);
    // random element with terms of degree up to 5
    NATensorElement t(f, 2, 5);
    for (int term = 0; term < 4; ++term) {
      int d = static_cast<int>(rng.next() % 6);
      auto shapes = enumerate_monomials(d);
      auto shape = shapes[rng.next() % shapes.size()];
      std::vector<Index> idx(d);
      for (int i = 0; i < d; ++i) idx[i] = static_cast<Index>(rng.next() % 2);
      t = t + NATensorElement::monomial(f, 2, 5, shape, idx, f.from_int(rng.range(-3, 3)));
    }
    auto a = reduce_to_normal_form(t, rb);
    auto b = reduce_by_rewriting(t, rb, RedexOrder::Leftmost);
    auto c = reduce_by_rewriting(t, rb, RedexOrder::Rightmost);
    CHECK(a == b);
    CHECK(a == c);
  }
}

TEST_CASE("verify_quotient_iso") {
  auto Q = ScalarField::rationals();
  SUBCASE("complex base, exhaustive at D = 4") {
    BFAlgebra rb(AlgebraSpec::abelian(Q, {"i"}), mat(Q, 1, 1, {1}));
    auto rep = verify_quotient_iso(rb, 4);
    CHECK(rep.ok);
    CHECK(rep.cases_checked > 0);
  }
  SUBCASE("quaternion base at D = 3") {
    BFAlgebra rb(cross_product(Q), Matrix::identity(Q, 3));
    CHECK(verify_quotient_iso(rb, 3).ok);
  }
  SUBCASE("any base at D = 2") {
    for (const BFAlgebra& rb : standard_corpus(5, 10)) CHECK(verify_quotient_iso(rb, 2).ok);
  }
  SUBCASE("degree bound below 2 is rejected") {
    BFAlgebra rb(AlgebraSpec::abelian(Q, {"i"}), mat(Q, 1, 1, {1}));
    CHECK_THROWS_AS(verify_quotient_iso(rb, 1), Error);
  }
}

TEST_CASE("shape independence in the associative case") {
  auto Q = ScalarField::rationals();
  SUBCASE("quaternion base at D = 4") {
    BFAlgebra rb(cross_product(Q), Matrix::identity(Q, 3));
    REQUIRE(!extension_associativity_witness(rb).has_value());
    auto rep = shape_independence_check(rb, 4);
    CHECK(rep.ok);
  }
  SUBCASE("sqrt(2) base at D = 4") {
    BFAlgebra rb(AlgebraSpec::abelian(Q, {"z"}), mat(Q, 1, 1, {-2}));
    CHECK(shape_independence_check(rb, 4).ok);
  }
  SUBCASE("non-associative extensions are rejected") {
    // abelian dim-2 core with b = -I: the spin factor, not associative
    BFAlgebra rb(AlgebraSpec::abelian(Q, {"e1", "e2"}), mat(Q, 2, 2, {-1, 0, 0, -1}));
    CHECK_THROWS_AS(shape_independence_check(rb, 3), Error);
  }
}
