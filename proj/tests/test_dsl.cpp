#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "bfalg/dsl.hpp"
#include "helpers.hpp"

using namespace bfalg;
using namespace testutil;

namespace {

const char* kQuaternionFile = R"(# quaternion core
scalars Q
algebra R dim 3 basis i j k
  mul i j = k
  mul j i = -k
  mul j k = i
  mul k j = -i
  mul k i = j
  mul i k = -j
bform dot on R
  i i = 1
  j j = 1
  k k = 1
)";

}  // namespace

TEST_CASE("smallest file: the complex-number core") {
  auto res = parse_alg_file("scalars Q\nalgebra R dim 1 basis i\nbform b on R\n  i i = 1\n");
  REQUIRE(res.ok());
  const AlgFile& f = *res.file;
  REQUIRE(f.algebras.size() == 1);
  CHECK(f.algebras[0].first == "R");
  CHECK(f.algebras[0].second.dim() == 1);
  CHECK(f.algebras[0].second.is_abelian());
  REQUIRE(f.forms.size() == 1);
  CHECK(f.forms[0].matrix.at(0, 0).is_one());
}

TEST_CASE("quaternion file round trip") {
  auto res = parse_alg_file(kQuaternionFile);
  REQUIRE(res.ok());
  const AlgebraSpec& r = res.file->algebras[0].second;
  CHECK(r.basis_product(0, 1) == vec(r.field(), {0, 0, 1}));
  CHECK(r.basis_product(1, 0) == vec(r.field(), {0, 0, -1}));

  std::string printed = print_alg_file(*res.file);
  auto res2 = parse_alg_file(printed);
  REQUIRE(res2.ok());
  // structural identity of the round trip
  CHECK(res2.file->algebras[0].first == "R");
  for (Index i = 0; i < 3; ++i)
    for (Index j = 0; j < 3; ++j)
      CHECK(res2.file->algebras[0].second.basis_product(i, j) == r.basis_product(i, j));
  CHECK(res2.file->forms[0].matrix == res.file->forms[0].matrix);
  // printing is canonical: a second round trip reproduces the text
  CHECK(print_alg_file(*res2.file) == printed);
}

TEST_CASE("prime field scalars") {
  auto res = parse_alg_file(
      "scalars F 7\nalgebra A dim 2 basis a b unit [1, 0]\n  mul a a = a\n  mul a b = b\n"
      "  mul b a = b\n  mul b b = 10 a\n");
  REQUIRE(res.ok());
  const AlgebraSpec& a = res.file->algebras[0].second;
  CHECK(a.field().modulus() == 7);
  // 10 = 3 mod 7
  CHECK(a.basis_product(1, 1) == vec(a.field(), {3, 0}));
  CHECK(a.is_unital());
}

TEST_CASE("units are validated at parse time") {
  auto res = parse_alg_file("scalars Q\nalgebra A dim 1 basis e unit [1]\n");
  CHECK(!res.ok());  // abelian: e is not an identity
  REQUIRE(!res.diagnostics.empty());
}

TEST_CASE("aug, map and bimodule blocks") {
  const char* text = R"(scalars Q
algebra L dim 2 basis one t unit [1, 0]
  mul one one = one
  mul one t = t
  mul t one = t
  mul t t = 2 one
aug tr on L = [1, 0]
map f from L to L
  one -> one
  t -> -t
bimodule M over L dim 1 basis z
  left one z = z
  left t z = -z
  right z one = z
  right z t = -z
)";
  auto res = parse_alg_file(text);
  REQUIRE(res.ok());
  const AlgFile& f = *res.file;
  REQUIRE(f.augs.size() == 1);
  CHECK(f.augs[0].eps == vec(f.field, {1, 0}));
  REQUIRE(f.maps.size() == 1);
  CHECK(f.maps[0].matrix == mat(f.field, 2, 2, {1, 0, 0, -1}));
  REQUIRE(f.bimodules.size() == 1);
  CHECK(f.bimodules[0].spec.left[1][0] == vec(f.field, {-1}));

  // full round trip including the bimodule
  auto res2 = parse_alg_file(print_alg_file(f));
  REQUIRE(res2.ok());
  CHECK(print_alg_file(*res2.file) == print_alg_file(f));
}

TEST_CASE("diagnostics carry line and column") {
  SUBCASE("unknown identifier") {
    auto res = parse_alg_file("scalars Q\nalgebra A dim 2 basis i j\n  mul i z = j\n");
    CHECK(!res.ok());
    REQUIRE(!res.diagnostics.empty());
    CHECK(res.diagnostics[0].line == 3);
    CHECK(res.diagnostics[0].column == 9);
    CHECK(res.diagnostics[0].message.find("z") != std::string::npos);
  }
  SUBCASE("duplicate product entries") {
    auto res =
        parse_alg_file("scalars Q\nalgebra A dim 1 basis e\n  mul e e = e\n  mul e e = 0\n");
    CHECK(!res.ok());
    REQUIRE(!res.diagnostics.empty());
    CHECK(res.diagnostics[0].line == 4);
    CHECK(res.diagnostics[0].message.find("duplicate") != std::string::npos);
  }
  SUBCASE("unknown algebra reference") {
    auto res = parse_alg_file("scalars Q\nbform b on X\n");
    CHECK(!res.ok());
    CHECK(res.diagnostics[0].line == 2);
  }
  SUBCASE("missing scalars header") {
    auto res = parse_alg_file("algebra A dim 0 basis\n");
    CHECK(!res.ok());
  }
  SUBCASE("several errors are collected") {
    auto res = parse_alg_file(
        "scalars Q\nalgebra A dim 2 basis i j\n  mul i z = j\n  mul w i = j\n  mul i j = q\n");
    CHECK(!res.ok());
    CHECK(res.diagnostics.size() == 3);
  }
  SUBCASE("at most 20 diagnostics") {
    std::string text = "scalars Q\nalgebra A dim 1 basis e\n";
    for (int i = 0; i < 40; ++i) text += "  mul e q = e\n";
    auto res = parse_alg_file(text);
    CHECK(res.diagnostics.size() <= 20);
  }
}

TEST_CASE("semicolons separate entries on one line") {
  auto res = parse_alg_file(
      "scalars Q\nalgebra k dim 1 basis e unit [1]\n  mul e e = e\n"
      "bimodule M over k dim 1 basis z\n  left e z = z ; right z e = z\n");
  REQUIRE(res.ok());
  const BimoduleSpec& bs = res.file->bimodules[0].spec;
  CHECK(bs.left[0][0] == vec(res.file->field, {1}));
  CHECK(bs.right[0][0] == vec(res.file->field, {1}));
}

TEST_CASE("dim 0 algebra block") {
  auto res = parse_alg_file("scalars Q\nalgebra Z dim 0 basis\n");
  REQUIRE(res.ok());
  CHECK(res.file->algebras[0].second.dim() == 0);
  auto res2 = parse_alg_file(print_alg_file(*res.file));
  REQUIRE(res2.ok());
  CHECK(res2.file->algebras[0].second.dim() == 0);
}

TEST_CASE("linear combination parsing") {
  auto res = parse_alg_file(
      "scalars Q\nalgebra A dim 3 basis x y z\n  mul x y = 2 x + 1/3 y - z\n  mul y x = -2 z\n");
  REQUIRE(res.ok());
  const AlgebraSpec& a = res.file->algebras[0].second;
  auto Q = a.field();
  Vec expect = {Q.from_int(2), Q.from_fraction(1, 3), Q.from_int(-1)};
  CHECK(a.basis_product(0, 1) == expect);
  CHECK(a.basis_product(1, 0) == vec(Q, {0, 0, -2}));

  SUBCASE("missing joiners are rejected") {
    CHECK(!parse_alg_file("scalars Q\nalgebra A dim 2 basis x y\n  mul x y = x y\n").ok());
  }
  SUBCASE("coefficient without a basis name is rejected") {
    CHECK(!parse_alg_file("scalars Q\nalgebra A dim 2 basis x y\n  mul x y = 2\n").ok());
  }
}

TEST_CASE("signed coefficients without spaces") {
  auto res = parse_alg_file("scalars Q\nalgebra A dim 2 basis x y\n  mul x y = -2 x +3 y\n");
  REQUIRE(res.ok());
  const AlgebraSpec& a = res.file->algebras[0].second;
  CHECK(a.basis_product(0, 1) == vec(a.field(), {-2, 3}));
}

TEST_CASE("arbitrary junk produces diagnostics, never a crash") {
  Rng rng{20240810};
  const std::string alphabet = "axy10 =+-/[],.;#\t()\nmulbformscalarsQF";
  for (int trial = 0; trial < 300; ++trial) {
    std::string text = "scalars Q\n";
    std::size_t len = rng.next() % 120;
    for (std::size_t i = 0; i < len; ++i)
      text.push_back(alphabet[rng.next() % alphabet.size()]);
    auto res = parse_alg_file(text);  // must not throw
    if (!res.ok()) CHECK(!res.diagnostics.empty());
  }
}

TEST_CASE("names are globally unique") {
  CHECK(!parse_alg_file("scalars Q\nalgebra A dim 0 basis\nbform A on A\n").ok());
  CHECK(!parse_alg_file("scalars Q\nalgebra A dim 0 basis\nalgebra A dim 0 basis\n").ok());
}

TEST_CASE("format helpers") {
  auto Q = ScalarField::rationals();
  std::vector<std::string> names{"x", "y", "z"};
  CHECK(format_lin_comb(vec(Q, {0, 0, 0}), names) == "0");
  CHECK(format_lin_comb(vec(Q, {1, 0, 0}), names) == "x");
  CHECK(format_lin_comb(vec(Q, {-1, 0, 2}), names) == "-x + 2 z");
  Vec v{Q.from_fraction(1, 2), Q.from_int(-3), Q.zero()};
  CHECK(format_lin_comb(v, names) == "1/2 x - 3 y");
  CHECK(format_vec(v) == "[1/2, -3, 0]");
}
