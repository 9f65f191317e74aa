#include "bfalg/gallery.hpp"

#include <algorithm>

namespace bfalg {

namespace {

std::vector<std::string> indexed_names(const std::string& stem, Index n) {
  std::vector<std::string> names;
  names.reserve(n);
  for (Index i = 1; i <= n; ++i) names.push_back(stem + std::to_string(i));
  return names;
}

// signed target encoding: entry s means e_i e_j = sign(s) * e_|s|, 0 means 0
AlgebraSpec from_signed_table(const ScalarField& f, Index n, const int (*table)[7],
                              std::vector<std::string> names) {
  std::vector<Vec> sc(n * n, zero_vec(f, n));
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      int s = table[i][j];
      if (s == 0) continue;
      sc[i * n + j][static_cast<Index>(std::abs(s)) - 1] = f.from_int(s > 0 ? 1 : -1);
    }
  return AlgebraSpec(f, std::move(names), std::move(sc));
}

constexpr int kOctonionLiteral[7][7] = {
    {0, 3, -2, 5, -4, 7, 6},    //
    {-3, 0, 1, 6, 7, -4, -5},   //
    {2, -1, 0, 7, -6, 5, -4},   //
    {-5, -6, -7, 0, 1, 2, 3},   //
    {4, -7, 6, -1, 0, -3, 2},   //
    {7, 4, -5, -2, 3, 0, -1},   //
    {-6, 5, 4, -3, -2, 1, 0},   //
};

constexpr int kOctonionCorrected[7][7] = {
    {0, 3, -2, 5, -4, -7, 6},   // (e1,e6) = -e7, the unique skew-consistent fix
    {-3, 0, 1, 6, 7, -4, -5},   //
    {2, -1, 0, 7, -6, 5, -4},   //
    {-5, -6, -7, 0, 1, 2, 3},   //
    {4, -7, 6, -1, 0, -3, 2},   //
    {7, 4, -5, -2, 3, 0, -1},   //
    {-6, 5, 4, -3, -2, 1, 0},   //
};

}  // namespace

BFAlgebra make_complex() {
  auto Q = ScalarField::rationals();
  AlgebraSpec r = AlgebraSpec::abelian(Q, {"i"});
  Matrix b(Q, 1, 1);
  b.at(0, 0) = Q.one();
  return BFAlgebra(std::move(r), std::move(b));
}

BFAlgebra make_quaternions() {
  auto Q = ScalarField::rationals();
  std::vector<Vec> sc(9, zero_vec(Q, 3));
  auto set = [&](Index i, Index j, Index l, long c) { sc[i * 3 + j][l] = Q.from_int(c); };
  set(0, 1, 2, 1);
  set(1, 0, 2, -1);
  set(1, 2, 0, 1);
  set(2, 1, 0, -1);
  set(2, 0, 1, 1);
  set(0, 2, 1, -1);
  AlgebraSpec r(Q, indexed_names("e", 3), std::move(sc));
  return BFAlgebra(std::move(r), Matrix::identity(Q, 3));
}

BFAlgebra make_octonions() {
  auto Q = ScalarField::rationals();
  return BFAlgebra(from_signed_table(Q, 7, kOctonionCorrected, indexed_names("e", 7)),
                   Matrix::identity(Q, 7));
}

BFAlgebra make_octonions_literal() {
  auto Q = ScalarField::rationals();
  return BFAlgebra(from_signed_table(Q, 7, kOctonionLiteral, indexed_names("e", 7)),
                   Matrix::identity(Q, 7));
}

BFAlgebra make_spin_factor(Index n) {
  if (n < 1) throw Error("spin factor dimension must be at least 1");
  auto Q = ScalarField::rationals();
  AlgebraSpec r = AlgebraSpec::abelian(Q, indexed_names("e", n));
  Matrix b(Q, n, n);
  for (Index i = 0; i < n; ++i) b.at(i, i) = -Q.one();
  return BFAlgebra(std::move(r), std::move(b));
}

BFAlgebra make_quadratic(const Scalar& c) {
  const ScalarField& f = c.field();
  AlgebraSpec r = AlgebraSpec::abelian(f, {"r"});
  Matrix b(f, 1, 1);
  b.at(0, 0) = -c;
  return BFAlgebra(std::move(r), std::move(b));
}

namespace {

// ---- polynomial helpers over exact scalars (dense, low degree) ----

bool is_integer_vec(const std::vector<Scalar>& coeffs) {
  return std::all_of(coeffs.begin(), coeffs.end(),
                     [](const Scalar& c) { return c.value().get_den() == 1; });
}

std::vector<mpz_class> positive_divisors(const mpz_class& n) {
  std::vector<mpz_class> divs;
  mpz_class a = abs(n);
  for (mpz_class d = 1; d * d <= a; ++d) {
    if (a % d == 0) {
      divs.push_back(d);
      if (d * d != a) divs.push_back(a / d);
    }
  }
  return divs;
}

// Evaluation p(r) over the field.
Scalar eval_poly(const std::vector<Scalar>& coeffs, const Scalar& r) {
  Scalar acc = r.field().zero();
  for (Index i = coeffs.size(); i-- > 0;) acc = acc * r + coeffs[i];
  return acc;
}

bool has_root_in_prime_field(const std::vector<Scalar>& coeffs, const ScalarField& f) {
  for (std::uint64_t a = 0; a < f.modulus(); ++a)
    if (eval_poly(coeffs, f.from_int(static_cast<long>(a))).is_zero()) return true;
  return false;
}

bool has_rational_root(const std::vector<Scalar>& coeffs, const ScalarField& f) {
  // clear denominators: integer coefficients C_i, roots r/s need r | C_0, s | C_d
  mpz_class lcm_den = 1;
  for (const Scalar& c : coeffs) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(),
                                         c.value().get_den().get_mpz_t());
  std::vector<mpz_class> C;
  C.reserve(coeffs.size());
  for (const Scalar& c : coeffs)
    C.push_back(c.value().get_num() * (lcm_den / c.value().get_den()));
  if (C.front() == 0) return true;  // root 0
  auto rs = positive_divisors(C.front());
  auto ss = positive_divisors(C.back());
  for (const mpz_class& r : rs)
    for (const mpz_class& s : ss)
      for (int sign = -1; sign <= 1; sign += 2) {
        Scalar cand(f, mpq_class(sign * r, s));
        if (eval_poly(coeffs, cand).is_zero()) return true;
      }
  return false;
}

// Monic polynomial division check: does g (monic, deg m) divide p (monic)?
bool monic_divides(const std::vector<Scalar>& g, const std::vector<Scalar>& p) {
  std::vector<Scalar> rem = p;
  const Index m = g.size() - 1;
  while (rem.size() >= g.size()) {
    Scalar lead = rem.back();
    Index shift = rem.size() - g.size();
    if (!lead.is_zero()) {
      for (Index i = 0; i <= m; ++i) rem[shift + i] -= lead * g[i];
    }
    rem.pop_back();
  }
  return std::all_of(rem.begin(), rem.end(), [](const Scalar& c) { return c.is_zero(); });
}

void check_irreducible(const NumberFieldSpec& nf) {
  const ScalarField& f = nf.base;
  const Index d = nf.degree();
  if (d == 1) return;
  if (f.is_prime_field()) {
    if (has_root_in_prime_field(nf.min_poly, f))
      throw Error("min_poly has a root in the base field");
    // trial division by monic factors of degree 2..d/2
    for (Index m = 2; 2 * m <= d; ++m) {
      std::uint64_t space = 1;
      for (Index i = 0; i < m; ++i) {
        space *= f.modulus();
        if (space > 2000000) throw Error("irreducibility check budget exceeded");
      }
      std::vector<std::uint64_t> digits(m, 0);
      for (std::uint64_t step = 0; step < space; ++step) {
        std::vector<Scalar> g;
        g.reserve(m + 1);
        for (Index i = 0; i < m; ++i) g.push_back(f.from_int(static_cast<long>(digits[i])));
        g.push_back(f.one());
        if (monic_divides(g, nf.min_poly)) throw Error("min_poly is reducible");
        for (Index i = m; i-- > 0;) {
          if (++digits[i] < f.modulus()) break;
          digits[i] = 0;
        }
      }
    }
    return;
  }
  // rationals
  if (has_rational_root(nf.min_poly, f)) throw Error("min_poly has a rational root");
  if (d <= 3) return;
  if (d > 4) throw Error("irreducibility over Q is only decided for degree <= 4");
  // degree 4, no linear factor: rule out monic quadratic factors.  Monic
  // integer quartics factor over Q only into monic integer quadratics, so
  // integer coefficients are required here.
  if (!is_integer_vec(nf.min_poly))
    throw Error("degree-4 irreducibility requires integer coefficients");
  mpz_class p0 = nf.min_poly[0].value().get_num();
  mpz_class p1 = nf.min_poly[1].value().get_num();
  mpz_class p2 = nf.min_poly[2].value().get_num();
  mpz_class p3 = nf.min_poly[3].value().get_num();
  // x^4+p3x^3+p2x^2+p1x+p0 = (x^2+ax+b)(x^2+cx+e): b*e = p0 (p0 != 0 since
  // no root 0), a bounded via the coefficient bound 2*(1+max|p_i|)
  mpz_class bound = 1;
  for (const mpz_class* c : {&p0, &p1, &p2, &p3}) {
    mpz_class a = abs(*c);
    if (a > bound) bound = a;
  }
  bound = 2 * (1 + bound);
  for (const mpz_class& bdiv : positive_divisors(p0))
    for (int bsign = -1; bsign <= 1; bsign += 2) {
      mpz_class b = bsign * bdiv;
      if (b == 0 || p0 % b != 0) continue;
      mpz_class e = p0 / b;
      for (mpz_class a = -bound; a <= bound; ++a) {
        mpz_class c = p3 - a;
        if (b + e + a * c == p2 && a * e + b * c == p1)
          throw Error("min_poly is reducible (quadratic factor)");
      }
    }
}

}  // namespace

NumberFieldSpec::NumberFieldSpec(ScalarField base_field, std::vector<Scalar> coeffs)
    : base(base_field), min_poly(std::move(coeffs)) {
  if (min_poly.size() < 2) throw Error("min_poly must have degree at least 1");
  if (!min_poly.back().is_one()) throw Error("min_poly must be monic");
  Index d = degree();
  if (base.is_prime_field() && d % base.modulus() == 0)
    throw Error("characteristic divides the extension degree");
  check_irreducible(*this);
}

Extension make_number_field(const NumberFieldSpec& nf) {
  const ScalarField& f = nf.base;
  const Index d = nf.degree();

  // powers of t: t^k mod p for k = 0 .. 2d-2
  std::vector<Vec> powers;
  powers.push_back(zero_vec(f, d));
  powers[0][0] = f.one();
  for (Index k = 1; k <= 2 * d - 2; ++k) {
    Vec prev = powers.back();
    Vec next = zero_vec(f, d);
    // multiply by t, then reduce the overflow coefficient via t^d = -sum c_i t^i
    Scalar carry = prev[d - 1];
    for (Index i = d - 1; i >= 1; --i) next[i] = prev[i - 1];
    next[0] = f.zero();
    if (!carry.is_zero())
      for (Index i = 0; i < d; ++i) next[i] -= carry * nf.min_poly[i];
    powers.push_back(std::move(next));
  }

  std::vector<Vec> sc(d * d, zero_vec(f, d));
  for (Index i = 0; i < d; ++i)
    for (Index j = 0; j < d; ++j) sc[i * d + j] = powers[i + j];

  std::vector<std::string> names;
  names.reserve(d);
  names.push_back("one");
  for (Index i = 1; i < d; ++i)
    names.push_back(i == 1 ? "t" : "t" + std::to_string(i));
  Vec unit = zero_vec(f, d);
  unit[0] = f.one();
  AlgebraSpec field_algebra(f, std::move(names), std::move(sc), unit);

  // eps = Tr/d where Tr(a) is the trace of left multiplication by a
  Scalar dinv = f.from_int(static_cast<long>(d)).inverse();
  Vec eps;
  eps.reserve(d);
  for (Index i = 0; i < d; ++i) {
    Matrix lm = field_algebra.left_multiplication(field_algebra.basis_element(i));
    Scalar tr = f.zero();
    for (Index j = 0; j < d; ++j) tr += lm.at(j, j);
    eps.push_back(dinv * tr);
  }
  if (!is_weak_augmentation(field_algebra, eps))
    throw Error("internal: normalized trace is not a weak augmentation");
  return Extension{std::move(field_algebra), std::move(eps)};
}

BFAlgebra trace_zero_decomposition(const NumberFieldSpec& nf) {
  Extension l = make_number_field(nf);
  return decompose(l.algebra, l.eps).kernel;
}

namespace {

struct SplitMix {
  std::uint64_t state;
  std::uint64_t next() {
    state += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  long coord() { return static_cast<long>(next() % 11) - 5; }  // [-5, 5]
};

std::string show_pair(const std::pair<Vec, Scalar>& u) {
  std::string s = "(";
  for (const Scalar& c : u.first) s += c.str() + ",";
  return s + " | " + u.second.str() + ")";
}

}  // namespace

NormReport norm_multiplicativity_check(const BFAlgebra& rb, std::size_t samples,
                                       std::uint64_t seed) {
  const ScalarField& f = rb.algebra.field();
  const Index n = rb.algebra.dim();
  SplitMix rng{seed};
  auto norm = [&](const std::pair<Vec, Scalar>& u) {
    return u.second * u.second + eval_form(rb.form, u.first, u.first);
  };
  auto draw = [&]() {
    Vec r;
    r.reserve(n);
    for (Index i = 0; i < n; ++i) r.push_back(f.from_int(rng.coord()));
    return std::make_pair(std::move(r), f.from_int(rng.coord()));
  };
  for (std::size_t s = 0; s < samples; ++s) {
    auto u = draw();
    auto v = draw();
    auto uv = ext_product(rb, u, v);
    if (norm(uv) != norm(u) * norm(v)) {
      return {false,
              "N(uv) != N(u)N(v) at u = " + show_pair(u) + ", v = " + show_pair(v),
              s + 1};
    }
  }
  return {true, "", samples};
}

}  // namespace bfalg
