#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "bfalg/matrix.hpp"

using namespace bfalg;

namespace {

Matrix mat(const ScalarField& f, std::size_t r, std::size_t c,
           const std::vector<long>& entries) {
  Matrix m(f, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = f.from_int(entries[i * c + j]);
  return m;
}

Vec vec(const ScalarField& f, const std::vector<long>& entries) {
  Vec v;
  for (long e : entries) v.push_back(f.from_int(e));
  return v;
}

// splitmix-style generator, fully specified (no distribution dependence)
struct Rng {
  std::uint64_t state;
  std::uint64_t next() {
    state += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  long small(long lo, long hi) { return lo + static_cast<long>(next() % (hi - lo + 1)); }
};

}  // namespace

TEST_CASE("rref: identity stays identity") {
  auto Q = ScalarField::rationals();
  auto rr = rref(Matrix::identity(Q, 2));
  CHECK(rr.rref == Matrix::identity(Q, 2));
  CHECK(rr.pivots == std::vector<Index>{0, 1});
}

TEST_CASE("rref: rank-1 rational matrix") {
  auto Q = ScalarField::rationals();
  auto rr = rref(mat(Q, 2, 2, {1, 2, 2, 4}));
  CHECK(rr.rref == mat(Q, 2, 2, {1, 2, 0, 0}));
  CHECK(rr.pivots == std::vector<Index>{0});
}

TEST_CASE("rref: permutation over F_7") {
  auto F7 = ScalarField::prime_field(7);
  auto rr = rref(mat(F7, 2, 2, {0, 1, 1, 0}));
  CHECK(rr.rref == Matrix::identity(F7, 2));
  CHECK(rr.pivots == std::vector<Index>{0, 1});
}

TEST_CASE("rref is idempotent on random matrices") {
  auto Q = ScalarField::rationals();
  auto F7 = ScalarField::prime_field(7);
  Rng rng{20240811};
  for (int trial = 0; trial < 40; ++trial) {
    const ScalarField& f = (trial % 2 == 0) ? Q : F7;
    std::size_t r = 1 + rng.next() % 4, c = 1 + rng.next() % 4;
    Matrix m(f, r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m.at(i, j) = f.from_int(rng.small(-3, 3));
    Matrix once = rref(m).rref;
    CHECK(rref(once).rref == once);
  }
}

TEST_CASE("kernel of the zero map is the standard basis") {
  auto Q = ScalarField::rationals();
  auto basis = kernel_basis(Matrix(Q, 1, 3));
  REQUIRE(basis.size() == 3);
  CHECK(basis[0] == vec(Q, {1, 0, 0}));
  CHECK(basis[1] == vec(Q, {0, 1, 0}));
  CHECK(basis[2] == vec(Q, {0, 0, 1}));
}

TEST_CASE("kernel vectors are normalized with leading one") {
  auto Q = ScalarField::rationals();
  auto basis = kernel_basis(mat(Q, 1, 2, {1, 1}));
  REQUIRE(basis.size() == 1);
  CHECK(basis[0] == vec(Q, {1, -1}));
}

TEST_CASE("invertible matrices have trivial kernel") {
  auto Q = ScalarField::rationals();
  CHECK(kernel_basis(mat(Q, 2, 2, {1, 1, 0, 1})).empty());
}

TEST_CASE("kernel basis vectors are annihilated (property)") {
  auto F7 = ScalarField::prime_field(7);
  Rng rng{7};
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t r = 1 + rng.next() % 3, c = 1 + rng.next() % 5;
    Matrix m(F7, r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m.at(i, j) = F7.from_int(rng.small(0, 6));
    auto basis = kernel_basis(m);
    CHECK(basis.size() == c - rank(m));
    for (const Vec& u : basis) {
      CHECK(is_zero_vec(m.apply(u)));
      // leading-one normal form
      for (const Scalar& x : u) {
        if (!x.is_zero()) {
          CHECK(x.is_one());
          break;
        }
      }
    }
  }
}

TEST_CASE("solve: identity system returns the rhs") {
  auto Q = ScalarField::rationals();
  Vec b = vec(Q, {3, -2});
  CHECK(solve(Matrix::identity(Q, 2), b) == b);
}

TEST_CASE("solve: free variables pinned to zero") {
  auto Q = ScalarField::rationals();
  auto x = solve(mat(Q, 2, 2, {1, 2, 2, 4}), vec(Q, {1, 2}));
  REQUIRE(x.has_value());
  CHECK(*x == vec(Q, {1, 0}));
}

TEST_CASE("solve: inconsistent system reports no solution") {
  auto Q = ScalarField::rationals();
  CHECK(!solve(mat(Q, 2, 2, {1, 2, 2, 4}), vec(Q, {1, 3})).has_value());
}

TEST_CASE("solutions satisfy the system exactly (property)") {
  auto Q = ScalarField::rationals();
  Rng rng{99};
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t r = 1 + rng.next() % 4, c = 1 + rng.next() % 4;
    Matrix m(Q, r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j)
        m.at(i, j) = Q.from_fraction(rng.small(-3, 3), rng.small(1, 3));
    Vec b;
    for (std::size_t i = 0; i < r; ++i) b.push_back(Q.from_int(rng.small(-2, 2)));
    if (auto x = solve(m, b)) CHECK(m.apply(*x) == b);
  }
}

TEST_CASE("in_row_space basics") {
  auto Q = ScalarField::rationals();
  Matrix m1 = mat(Q, 1, 2, {1, 0});
  CHECK(in_row_space(m1, vec(Q, {0, 0})));
  CHECK(!in_row_space(m1, vec(Q, {0, 1})));
  Matrix m2 = mat(Q, 2, 2, {1, 1, 0, 1});
  CHECK(in_row_space(m2, vec(Q, {2, 3})));  // 2*row1 + 1*row2
}

TEST_CASE("coordinates_in_basis inverts spans") {
  auto Q = ScalarField::rationals();
  std::vector<Vec> basis = {vec(Q, {1, 1, 0}), vec(Q, {0, 1, 1})};
  auto c = coordinates_in_basis(basis, vec(Q, {2, 5, 3}), Q);
  REQUIRE(c.has_value());
  CHECK(*c == vec(Q, {2, 3}));
  CHECK(!coordinates_in_basis(basis, vec(Q, {1, 0, 0}), Q).has_value());
}
