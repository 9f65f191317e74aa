#pragma once

// Shared builders and seeded generators for the test suites.

#include <cstdint>
#include <string>
#include <vector>

#include "bfalg/ringext.hpp"

namespace testutil {

using namespace bfalg;

inline Matrix mat(const ScalarField& f, Index r, Index c, const std::vector<long>& entries) {
  Matrix m(f, r, c);
  for (Index i = 0; i < r; ++i)
    for (Index j = 0; j < c; ++j) m.at(i, j) = f.from_int(entries[i * c + j]);
  return m;
}

inline Vec vec(const ScalarField& f, const std::vector<long>& entries) {
  Vec v;
  for (long e : entries) v.push_back(f.from_int(e));
  return v;
}

// deterministic splitmix64; no library distributions involved
struct Rng {
  std::uint64_t state;
  std::uint64_t next() {
    state += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  long range(long lo, long hi) {  // inclusive
    return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }
};

inline std::vector<std::string> names(const std::string& stem, Index n) {
  std::vector<std::string> out;
  for (Index i = 1; i <= n; ++i) out.push_back(stem + std::to_string(i));
  return out;
}

// k x k with componentwise product; identity (1,1)
inline AlgebraSpec kxk(const ScalarField& f) {
  std::vector<Vec> sc(4, zero_vec(f, 2));
  sc[0 * 2 + 0] = vec(f, {1, 0});
  sc[1 * 2 + 1] = vec(f, {0, 1});
  return AlgebraSpec(f, {"e1", "e2"}, std::move(sc), vec(f, {1, 1}));
}

// k^n with componentwise product
inline AlgebraSpec diagonal_algebra(const ScalarField& f, Index n) {
  std::vector<Vec> sc(n * n, zero_vec(f, n));
  for (Index i = 0; i < n; ++i) {
    Vec v = zero_vec(f, n);
    v[i] = f.one();
    sc[i * n + i] = v;
  }
  return AlgebraSpec(f, names("e", n), std::move(sc), Vec(n, f.one()));
}

// full 2x2 matrix algebra, basis E11 E12 E21 E22 (row-major)
inline AlgebraSpec matrix2(const ScalarField& f) {
  auto idx = [](Index a, Index b) { return a * 2 + b; };
  std::vector<Vec> sc(16, zero_vec(f, 4));
  for (Index a = 0; a < 2; ++a)
    for (Index b = 0; b < 2; ++b)
      for (Index c = 0; c < 2; ++c)
        for (Index d = 0; d < 2; ++d) {
          if (b != c) continue;
          Vec v = zero_vec(f, 4);
          v[idx(a, d)] = f.one();
          sc[idx(a, b) * 4 + idx(c, d)] = v;
        }
  Vec unit = zero_vec(f, 4);
  unit[idx(0, 0)] = f.one();
  unit[idx(1, 1)] = f.one();
  return AlgebraSpec(f, {"E11", "E12", "E21", "E22"}, std::move(sc), std::move(unit));
}

// k[x]/(x^2): identity (1,0), x^2 = 0
inline AlgebraSpec dual_numbers(const ScalarField& f) {
  std::vector<Vec> sc(4, zero_vec(f, 2));
  sc[0 * 2 + 0] = vec(f, {1, 0});
  sc[0 * 2 + 1] = vec(f, {0, 1});
  sc[1 * 2 + 0] = vec(f, {0, 1});
  return AlgebraSpec(f, {"one", "x"}, std::move(sc), vec(f, {1, 0}));
}

// cross product on 3-space (quaternion base)
inline AlgebraSpec cross_product(const ScalarField& f) {
  std::vector<Vec> sc(9, zero_vec(f, 3));
  auto set = [&](Index i, Index j, Index l, long c) { sc[i * 3 + j][l] = f.from_int(c); };
  set(0, 1, 2, 1);
  set(1, 0, 2, -1);
  set(1, 2, 0, 1);
  set(2, 1, 0, -1);
  set(2, 0, 1, 1);
  set(0, 2, 1, -1);
  return AlgebraSpec(f, {"e1", "e2", "e3"}, std::move(sc));
}

// bimodule over the 1-dim scalar algebra with identity actions; internal
// multiplication and pairing left at zero for the caller to fill in
inline BimoduleSpec scalar_bimodule(const AlgebraSpec& k, std::vector<std::string> fnames) {
  BimoduleSpec bs(k, std::move(fnames));
  for (Index a = 0; a < bs.moddim(); ++a) {
    Vec fa = zero_vec(k.field(), bs.moddim());
    fa[a] = k.field().one();
    bs.left[0][a] = fa;
    bs.right[a][0] = fa;
  }
  return bs;
}

// seeded random algebra-with-form corpus member: structure constants and
// form entries are small integers (reduced in F_p)
inline BFAlgebra random_bfalgebra(Rng& rng, const ScalarField& f, Index dim) {
  std::vector<Vec> sc(dim * dim, zero_vec(f, dim));
  for (Index i = 0; i < dim; ++i)
    for (Index j = 0; j < dim; ++j)
      for (Index l = 0; l < dim; ++l) sc[i * dim + j][l] = f.from_int(rng.range(-2, 2));
  Matrix b(f, dim, dim);
  for (Index i = 0; i < dim; ++i)
    for (Index j = 0; j < dim; ++j) b.at(i, j) = f.from_int(rng.range(-2, 2));
  return BFAlgebra(AlgebraSpec(f, names("e", dim), std::move(sc)), std::move(b));
}

// the standard corpus: >= 100 seeded members, dims 0..4, over Q and F_7
inline std::vector<BFAlgebra> standard_corpus(std::uint64_t seed = 20240810,
                                              std::size_t count = 104) {
  auto Q = ScalarField::rationals();
  auto F7 = ScalarField::prime_field(7);
  Rng rng{seed};
  std::vector<BFAlgebra> corpus;
  corpus.reserve(count);
  for (std::size_t s = 0; s < count; ++s) {
    const ScalarField& f = (s % 2 == 0) ? Q : F7;
    Index dim = static_cast<Index>(s % 5);  // 0..4
    corpus.push_back(random_bfalgebra(rng, f, dim));
  }
  return corpus;
}

}  // namespace testutil
