#include "bfalg/ringext.hpp"

#include <algorithm>

namespace bfalg {

BimoduleSpec::BimoduleSpec(AlgebraSpec ring_algebra, std::vector<std::string> module_basis)
    : ring(std::move(ring_algebra)), mod_basis(std::move(module_basis)) {
  const Index n = ring.dim();
  const Index m = mod_basis.size();
  left.assign(n, std::vector<Vec>(m, zero_vec(ring.field(), m)));
  right.assign(m, std::vector<Vec>(n, zero_vec(ring.field(), m)));
  kmul.assign(m, std::vector<Vec>(m, zero_vec(ring.field(), m)));
  pairing.assign(m, std::vector<Vec>(m, zero_vec(ring.field(), n)));
}

Vec BimoduleSpec::act_left(const Vec& r, const Vec& k) const {
  Vec out = zero_vec(ring.field(), moddim());
  for (Index i = 0; i < ring.dim(); ++i) {
    if (r[i].is_zero()) continue;
    for (Index a = 0; a < moddim(); ++a) {
      if (k[a].is_zero()) continue;
      Scalar c = r[i] * k[a];
      for (Index b = 0; b < moddim(); ++b) out[b] += c * left[i][a][b];
    }
  }
  return out;
}

Vec BimoduleSpec::act_right(const Vec& k, const Vec& r) const {
  Vec out = zero_vec(ring.field(), moddim());
  for (Index a = 0; a < moddim(); ++a) {
    if (k[a].is_zero()) continue;
    for (Index i = 0; i < ring.dim(); ++i) {
      if (r[i].is_zero()) continue;
      Scalar c = k[a] * r[i];
      for (Index b = 0; b < moddim(); ++b) out[b] += c * right[a][i][b];
    }
  }
  return out;
}

Vec BimoduleSpec::mul_k(const Vec& k1, const Vec& k2) const {
  Vec out = zero_vec(ring.field(), moddim());
  for (Index a = 0; a < moddim(); ++a) {
    if (k1[a].is_zero()) continue;
    for (Index c = 0; c < moddim(); ++c) {
      if (k2[c].is_zero()) continue;
      Scalar s = k1[a] * k2[c];
      for (Index b = 0; b < moddim(); ++b) out[b] += s * kmul[a][c][b];
    }
  }
  return out;
}

Vec BimoduleSpec::pair_k(const Vec& k1, const Vec& k2) const {
  Vec out = zero_vec(ring.field(), ring.dim());
  for (Index a = 0; a < moddim(); ++a) {
    if (k1[a].is_zero()) continue;
    for (Index c = 0; c < moddim(); ++c) {
      if (k2[c].is_zero()) continue;
      Scalar s = k1[a] * k2[c];
      for (Index b = 0; b < ring.dim(); ++b) out[b] += s * pairing[a][c][b];
    }
  }
  return out;
}

std::optional<BimoduleWitness> check_bimodule(const BimoduleSpec& bs) {
  const AlgebraSpec& ring = bs.ring;
  if (ring.associativity_witness()) throw Error("bimodule ring must be associative");
  Vec unit = require_unit(ring);
  const Index n = ring.dim();
  const Index m = bs.moddim();

  for (Index a = 0; a < m; ++a) {
    Vec fa = zero_vec(ring.field(), m);
    fa[a] = ring.field().one();
    if (bs.act_left(unit, fa) != fa) return BimoduleWitness{"1*f = f", {a}};
    if (bs.act_right(fa, unit) != fa) return BimoduleWitness{"f*1 = f", {a}};
  }
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      for (Index a = 0; a < m; ++a) {
        Vec fa = zero_vec(ring.field(), m);
        fa[a] = ring.field().one();
        Vec ei = ring.basis_element(i), ej = ring.basis_element(j);
        if (bs.act_left(ring.basis_product(i, j), fa) !=
            bs.act_left(ei, bs.act_left(ej, fa)))
          return BimoduleWitness{"(rr')f = r(r'f)", {i, j, a}};
        if (bs.act_right(bs.act_right(fa, ei), ej) !=
            bs.act_right(fa, ring.basis_product(i, j)))
          return BimoduleWitness{"f(rr') = (fr)r'", {a, i, j}};
        if (bs.act_right(bs.act_left(ei, fa), ej) !=
            bs.act_left(ei, bs.act_right(fa, ej)))
          return BimoduleWitness{"(rf)r' = r(fr')", {i, a, j}};
      }
  return std::nullopt;
}

std::optional<BimoduleWitness> check_balanced(const BimoduleSpec& bs) {
  const AlgebraSpec& ring = bs.ring;
  const Index n = ring.dim();
  const Index m = bs.moddim();
  auto f_at = [&](Index a) {
    Vec v = zero_vec(ring.field(), m);
    v[a] = ring.field().one();
    return v;
  };
  for (Index a = 0; a < m; ++a)
    for (Index i = 0; i < n; ++i)
      for (Index c = 0; c < m; ++c) {
        Vec fa = f_at(a), fc = f_at(c);
        Vec ei = ring.basis_element(i);
        // balance and R-linearity of the internal multiplication
        if (bs.mul_k(bs.act_right(fa, ei), fc) != bs.mul_k(fa, bs.act_left(ei, fc)))
          return BimoduleWitness{"mu(fe, f') = mu(f, ef')", {a, i, c}};
        if (bs.act_left(ei, bs.mul_k(fa, fc)) != bs.mul_k(bs.act_left(ei, fa), fc))
          return BimoduleWitness{"e mu(f, f') = mu(ef, f')", {i, a, c}};
        if (bs.act_right(bs.mul_k(fa, fc), ei) != bs.mul_k(fa, bs.act_right(fc, ei)))
          return BimoduleWitness{"mu(f, f') e = mu(f, f'e)", {a, c, i}};
        // same conditions for the pairing, with values in the ring
        if (bs.pair_k(bs.act_right(fa, ei), fc) != bs.pair_k(fa, bs.act_left(ei, fc)))
          return BimoduleWitness{"b(fe, f') = b(f, ef')", {a, i, c}};
        if (ring.multiply(ei, bs.pair_k(fa, fc)) != bs.pair_k(bs.act_left(ei, fa), fc))
          return BimoduleWitness{"e b(f, f') = b(ef, f')", {i, a, c}};
        if (ring.multiply(bs.pair_k(fa, fc), ei) != bs.pair_k(fa, bs.act_right(fc, ei)))
          return BimoduleWitness{"b(f, f') e = b(f, f'e)", {a, c, i}};
      }
  return std::nullopt;
}

AlgebraSpec semitrivial_extend(const BimoduleSpec& bs, bool force) {
  if (!force) {
    if (auto w = check_bimodule(bs))
      throw Error("bimodule axioms fail: " + w->axiom);
    if (auto w = check_balanced(bs))
      throw Error("balance axioms fail: " + w->axiom);
  } else {
    if (bs.ring.associativity_witness()) throw Error("bimodule ring must be associative");
    require_unit(bs.ring);
  }
  const ScalarField& f = bs.ring.field();
  const Index n = bs.ring.dim();
  const Index m = bs.moddim();
  const Index dim = m + n;

  std::vector<std::string> names = bs.mod_basis;
  for (const std::string& rn : bs.ring.basis_names()) {
    std::string candidate = rn;
    while (std::find(names.begin(), names.end(), candidate) != names.end())
      candidate += "_r";
    names.push_back(candidate);
  }

  auto as_pair = [&](const Vec& k, const Vec& r) {
    Vec v = zero_vec(f, dim);
    for (Index a = 0; a < m; ++a) v[a] = k[a];
    for (Index i = 0; i < n; ++i) v[m + i] = r[i];
    return v;
  };

  std::vector<Vec> sc(dim * dim, zero_vec(f, dim));
  Vec zk = zero_vec(f, m), zr = zero_vec(f, n);
  for (Index x = 0; x < dim; ++x)
    for (Index y = 0; y < dim; ++y) {
      // decompose basis vectors into (k, r) parts
      Vec kx = zk, rx = zr, ky = zk, ry = zr;
      if (x < m)
        kx[x] = f.one();
      else
        rx[x - m] = f.one();
      if (y < m)
        ky[y] = f.one();
      else
        ry[y - m] = f.one();
      Vec kpart = add(add(bs.act_right(kx, ry), bs.act_left(rx, ky)), bs.mul_k(kx, ky));
      Vec rpart = add(bs.ring.multiply(rx, ry), bs.pair_k(kx, ky));
      sc[x * dim + y] = as_pair(kpart, rpart);
    }

  Vec unit = as_pair(zk, require_unit(bs.ring));
  try {
    return AlgebraSpec(f, names, sc, unit);
  } catch (const Error&) {
    // forced builds from invalid data may not have (0, 1_R) as an identity;
    // construct without a declared unit so the audit can still run
    if (!force) throw;
    return AlgebraSpec(f, std::move(names), std::move(sc));
  }
}

std::vector<TripleWitness> associativity_audit(const AlgebraSpec& a) {
  std::vector<TripleWitness> failures;
  const Index n = a.dim();
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      for (Index l = 0; l < n; ++l) {
        Vec lhs = a.multiply(a.basis_product(i, j), a.basis_element(l));
        Vec rhs = a.multiply(a.basis_element(i), a.basis_product(j, l));
        if (lhs != rhs) failures.push_back({i, j, l});
      }
  return failures;
}

namespace {

void require_ring_embedding(const AlgebraSpec& s, const AlgebraSpec& r, const Matrix& embed) {
  if (s.associativity_witness()) throw Error("S must be associative");
  require_unit(s);
  if (embed.rows() != s.dim() || embed.cols() != r.dim())
    throw Error("embedding shape mismatch");
  if (algebra_morphism_witness(r, s, embed)) throw Error("embedding is not a morphism");
  if (rank(embed) != r.dim()) throw Error("embedding is not injective");
}

}  // namespace

std::vector<Vec> centralizer_basis(const AlgebraSpec& s, const AlgebraSpec& r,
                                   const Matrix& embed) {
  require_ring_embedding(s, r, embed);
  if (embed.apply(require_unit(r)) != require_unit(s))
    throw Error("embedding is not unital");
  const Index ns = s.dim();
  const Index nr = r.dim();
  // stack commutator conditions: (R_g - L_g) x = 0 for each generator image g
  Matrix sys(s.field(), nr * ns, ns);
  for (Index i = 0; i < nr; ++i) {
    Vec g = embed.col(i);
    Matrix commutator = s.right_multiplication(g) - s.left_multiplication(g);
    for (Index row = 0; row < ns; ++row)
      for (Index colk = 0; colk < ns; ++colk)
        sys.at(i * ns + row, colk) = commutator.at(row, colk);
  }
  std::vector<Vec> basis = kernel_basis(sys);
  if (!is_subalgebra(s, basis)) throw Error("internal: centralizer is not a subalgebra");
  return basis;
}

IdemHomReport idempotent_hom_correspondence(const AlgebraSpec& s, const AlgebraSpec& r,
                                            const Matrix& embed, const Vec& e) {
  require_ring_embedding(s, r, embed);
  if (!s.is_idempotent(e)) throw Error("element is not idempotent");
  const Index nr = r.dim();

  Matrix phi_e(s.field(), s.dim(), nr);
  for (Index j = 0; j < nr; ++j) {
    Vec val = s.multiply(e, embed.col(j));
    for (Index i = 0; i < s.dim(); ++i) phi_e.at(i, j) = val[i];
  }

  bool right_module = true;
  for (Index i = 0; i < nr && right_module; ++i)
    for (Index j = 0; j < nr; ++j) {
      // phi_e(r r') = phi_e(r) * phi(r'): S as a right R-module along phi
      Vec lhs = phi_e.apply(r.basis_product(i, j));
      Vec rhs = s.multiply(phi_e.col(i), embed.col(j));
      if (lhs != rhs) {
        right_module = false;
        break;
      }
    }

  bool ring_morphism = !algebra_morphism_witness(r, s, phi_e).has_value();

  bool centralizes = true;
  for (Index i = 0; i < nr; ++i) {
    Vec g = embed.col(i);
    if (s.multiply(e, g) != s.multiply(g, e)) {
      centralizes = false;
      break;
    }
  }
  return IdemHomReport{std::move(phi_e), right_module, ring_morphism, centralizes};
}

AugmentationReport classify_augmentation_detailed(const AlgebraSpec& s, const AlgebraSpec& r,
                                                  const Matrix& embed, const Matrix& eps) {
  require_ring_embedding(s, r, embed);
  if (eps.rows() != r.dim() || eps.cols() != s.dim())
    throw Error("augmentation shape mismatch");

  AugmentationReport rep{};
  rep.identity_on_r = (eps * embed == Matrix::identity(s.field(), r.dim()));

  rep.multiplicative = true;
  for (Index i = 0; i < s.dim() && rep.multiplicative; ++i)
    for (Index j = 0; j < s.dim(); ++j) {
      if (eps.apply(s.basis_product(i, j)) != r.multiply(eps.col(i), eps.col(j))) {
        rep.multiplicative = false;
        break;
      }
    }

  rep.bimodule_linear = true;
  for (Index i = 0; i < r.dim() && rep.bimodule_linear; ++i)
    for (Index a = 0; a < s.dim() && rep.bimodule_linear; ++a)
      for (Index j = 0; j < r.dim(); ++j) {
        Vec lhs = eps.apply(
            s.multiply(s.multiply(embed.col(i), s.basis_element(a)), embed.col(j)));
        Vec rhs = r.multiply(r.multiply(r.basis_element(i), eps.col(a)),
                             r.basis_element(j));
        if (lhs != rhs) {
          rep.bimodule_linear = false;
          break;
        }
      }

  if (rep.identity_on_r && rep.multiplicative)
    rep.cls = AugmentationClass::Augmentation;
  else if (rep.identity_on_r && rep.bimodule_linear)
    rep.cls = AugmentationClass::WeakAugmentation;
  else
    rep.cls = AugmentationClass::Neither;
  return rep;
}

AugmentationClass classify_augmentation(const AlgebraSpec& s, const AlgebraSpec& r,
                                        const Matrix& embed, const Matrix& eps) {
  return classify_augmentation_detailed(s, r, embed, eps).cls;
}

const char* to_string(AugmentationClass c) {
  switch (c) {
    case AugmentationClass::Augmentation: return "augmentation";
    case AugmentationClass::WeakAugmentation: return "weak-augmentation";
    case AugmentationClass::Neither: return "neither";
  }
  return "?";
}

}  // namespace bfalg
