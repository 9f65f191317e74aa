#include "bfalg/magma.hpp"

#include <algorithm>

namespace bfalg {

MagmaMonomial MagmaMonomial::unit() { return MagmaMonomial(0, nullptr); }
MagmaMonomial MagmaMonomial::leaf() { return MagmaMonomial(1, nullptr); }

MagmaMonomial MagmaMonomial::product(const MagmaMonomial& l, const MagmaMonomial& r) {
  if (l.is_unit()) return r;
  if (r.is_unit()) return l;
  return MagmaMonomial(l.deg_ + r.deg_,
                       std::make_shared<const std::pair<MagmaMonomial, MagmaMonomial>>(l, r));
}

const MagmaMonomial& MagmaMonomial::left() const {
  if (!kids_) throw Error("monomial has no children");
  return kids_->first;
}

const MagmaMonomial& MagmaMonomial::right() const {
  if (!kids_) throw Error("monomial has no children");
  return kids_->second;
}

std::string MagmaMonomial::str() const {
  if (is_unit()) return "1";
  if (is_leaf()) return "x";
  return "(" + left().str() + "." + right().str() + ")";
}

namespace {

// recursive descent over "1" | "x" | "(" term "." term ")"
std::optional<MagmaMonomial> parse_term(std::string_view& s) {
  if (s.empty()) return std::nullopt;
  if (s[0] == '1') {
    s.remove_prefix(1);
    return MagmaMonomial::unit();
  }
  if (s[0] == 'x') {
    s.remove_prefix(1);
    return MagmaMonomial::leaf();
  }
  if (s[0] != '(') return std::nullopt;
  s.remove_prefix(1);
  auto l = parse_term(s);
  if (!l || s.empty() || s[0] != '.') return std::nullopt;
  s.remove_prefix(1);
  auto r = parse_term(s);
  if (!r || s.empty() || s[0] != ')') return std::nullopt;
  s.remove_prefix(1);
  return MagmaMonomial::product(*l, *r);
}

}  // namespace

std::optional<MagmaMonomial> MagmaMonomial::parse(std::string_view text) {
  std::string compact;
  for (char c : text)
    if (c != ' ' && c != '\t') compact.push_back(c);
  std::string_view s(compact);
  auto m = parse_term(s);
  if (!m || !s.empty()) return std::nullopt;
  return m;
}

int MagmaMonomial::compare(const MagmaMonomial& o) const {
  if (deg_ != o.deg_) return deg_ < o.deg_ ? -1 : 1;
  if (!kids_ && !o.kids_) return 0;
  // same degree >= 2: both are nodes
  if (int c = left().compare(o.left())) return c;
  return right().compare(o.right());
}

std::vector<MagmaMonomial> enumerate_monomials(int degree) {
  if (degree < 0) throw Error("negative monomial degree");
  std::vector<std::vector<MagmaMonomial>> by_degree;
  by_degree.push_back({MagmaMonomial::unit()});
  if (degree == 0) return by_degree[0];
  by_degree.push_back({MagmaMonomial::leaf()});
  for (int d = 2; d <= degree; ++d) {
    std::vector<MagmaMonomial> out;
    for (int dl = 1; dl < d; ++dl)
      for (const auto& l : by_degree[dl])
        for (const auto& r : by_degree[d - dl]) out.push_back(MagmaMonomial::product(l, r));
    by_degree.push_back(std::move(out));
  }
  return by_degree[degree];
}

bool TensorKey::operator<(const TensorKey& o) const {
  if (int c = shape.compare(o.shape)) return c < 0;
  return indices < o.indices;
}

bool TensorKey::operator==(const TensorKey& o) const {
  return shape == o.shape && indices == o.indices;
}

NATensorElement::NATensorElement(ScalarField field, Index base_dim, int bound)
    : field_(field), base_dim_(base_dim), bound_(bound) {
  if (bound < 0) throw Error("tensor degree bound must be nonnegative");
}

NATensorElement NATensorElement::scalar_term(ScalarField field, Index base_dim, int bound,
                                             const Scalar& c) {
  NATensorElement t(field, base_dim, bound);
  t.add_term(TensorKey{MagmaMonomial::unit(), {}}, c);
  return t;
}

NATensorElement NATensorElement::generator(ScalarField field, Index base_dim, int bound,
                                           Index i) {
  NATensorElement t(field, base_dim, bound);
  if (i >= base_dim) throw Error("generator index out of range");
  t.add_term(TensorKey{MagmaMonomial::leaf(), {i}}, field.one());
  return t;
}

NATensorElement NATensorElement::monomial(ScalarField field, Index base_dim, int bound,
                                          const MagmaMonomial& shape,
                                          std::vector<Index> indices, const Scalar& c) {
  NATensorElement t(field, base_dim, bound);
  if (static_cast<int>(indices.size()) != shape.degree())
    throw Error("index sequence length must equal the shape degree");
  for (Index i : indices)
    if (i >= base_dim) throw Error("tensor index out of range");
  if (shape.degree() > bound) throw Error("monomial degree exceeds the bound");
  t.add_term(TensorKey{shape, std::move(indices)}, c);
  return t;
}

NATensorElement NATensorElement::embed(ScalarField field, int bound, const Vec& r) {
  NATensorElement t(field, r.size(), bound);
  for (Index i = 0; i < r.size(); ++i)
    if (!r[i].is_zero()) t.add_term(TensorKey{MagmaMonomial::leaf(), {i}}, r[i]);
  return t;
}

void NATensorElement::add_term(TensorKey key, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(std::move(key), c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

NATensorElement NATensorElement::operator+(const NATensorElement& o) const {
  if (field_ != o.field_ || base_dim_ != o.base_dim_ || bound_ != o.bound_)
    throw Error("tensor element mismatch in +");
  NATensorElement r = *this;
  for (const auto& [k, c] : o.terms_) r.add_term(k, c);
  return r;
}

NATensorElement NATensorElement::scaled(const Scalar& c) const {
  NATensorElement r(field_, base_dim_, bound_);
  if (c.is_zero()) return r;
  for (const auto& [k, v] : terms_) r.add_term(k, v * c);
  return r;
}

NATensorElement NATensorElement::operator*(const NATensorElement& o) const {
  if (field_ != o.field_ || base_dim_ != o.base_dim_ || bound_ != o.bound_)
    throw Error("tensor element mismatch in *");
  NATensorElement r(field_, base_dim_, bound_);
  for (const auto& [ka, ca] : terms_)
    for (const auto& [kb, cb] : o.terms_) {
      MagmaMonomial shape = MagmaMonomial::product(ka.shape, kb.shape);
      if (shape.degree() > bound_)
        throw Error("tensor product exceeds degree bound at shape " + shape.str());
      std::vector<Index> idx = ka.indices;
      idx.insert(idx.end(), kb.indices.begin(), kb.indices.end());
      r.add_term(TensorKey{std::move(shape), std::move(idx)}, ca * cb);
    }
  return r;
}

namespace {

std::pair<Vec, Scalar> eval_shape(const BFAlgebra& rb, const MagmaMonomial& shape,
                                  const std::vector<Index>& idx, std::size_t lo,
                                  std::size_t hi) {
  const ScalarField& f = rb.algebra.field();
  if (shape.is_unit()) return {rb.algebra.zero(), f.one()};
  if (shape.is_leaf()) return {rb.algebra.basis_element(idx[lo]), f.zero()};
  std::size_t split = lo + static_cast<std::size_t>(shape.left().degree());
  auto l = eval_shape(rb, shape.left(), idx, lo, split);
  auto r = eval_shape(rb, shape.right(), idx, split, hi);
  return ext_product(rb, l, r);
}

}  // namespace

std::pair<Vec, Scalar> reduce_to_normal_form(const NATensorElement& t, const BFAlgebra& base) {
  if (t.base_dim() != base.algebra.dim() || t.field() != base.algebra.field())
    throw Error("reduce: base algebra mismatch");
  const ScalarField& f = base.algebra.field();
  Vec part = base.algebra.zero();
  Scalar sc = f.zero();
  for (const auto& [key, c] : t.terms()) {
    auto [r, lam] = eval_shape(base, key.shape, key.indices, 0, key.indices.size());
    part = add(part, scale(c, r));
    sc += c * lam;
  }
  return {std::move(part), std::move(sc)};
}

namespace {

// One contraction of a degree-2 subtree Node(Leaf, Leaf): x_i (x) x_j
// becomes mu(e_i, e_j) - b(e_i, e_j), spliced back into the enclosing
// shape.  Output: (shape, indices, coefficient factor) triples.
struct RewrittenTerm {
  MagmaMonomial shape;
  std::vector<Index> indices;
  Scalar coeff;
};

void contract(const BFAlgebra& rb, const MagmaMonomial& shape, const std::vector<Index>& idx,
              std::size_t lo, RedexOrder order, std::vector<RewrittenTerm>& out) {
  if (shape.degree() == 2) {
    Index i = idx[lo], j = idx[lo + 1];
    const Vec& mu = rb.algebra.basis_product(i, j);
    for (Index l = 0; l < mu.size(); ++l)
      if (!mu[l].is_zero()) out.push_back({MagmaMonomial::leaf(), {l}, mu[l]});
    Scalar b = rb.form.at(i, j);
    if (!b.is_zero()) out.push_back({MagmaMonomial::unit(), {}, -b});
    return;
  }
  const MagmaMonomial& l = shape.left();
  const MagmaMonomial& r = shape.right();
  bool go_left = (order == RedexOrder::Leftmost) ? l.degree() >= 2 : r.degree() < 2;
  std::size_t split = lo + static_cast<std::size_t>(l.degree());
  std::vector<RewrittenTerm> inner;
  if (go_left) {
    contract(rb, l, idx, lo, order, inner);
    for (auto& t : inner) {
      std::vector<Index> merged = t.indices;
      merged.insert(merged.end(), idx.begin() + static_cast<std::ptrdiff_t>(split),
                    idx.begin() + static_cast<std::ptrdiff_t>(lo + shape.degree()));
      out.push_back({MagmaMonomial::product(t.shape, r), std::move(merged), t.coeff});
    }
  } else {
    contract(rb, r, idx, split, order, inner);
    for (auto& t : inner) {
      std::vector<Index> merged(idx.begin() + static_cast<std::ptrdiff_t>(lo),
                                idx.begin() + static_cast<std::ptrdiff_t>(split));
      merged.insert(merged.end(), t.indices.begin(), t.indices.end());
      out.push_back({MagmaMonomial::product(l, t.shape), std::move(merged), t.coeff});
    }
  }
}

}  // namespace

std::pair<Vec, Scalar> reduce_by_rewriting(const NATensorElement& t, const BFAlgebra& base,
                                           RedexOrder order) {
  if (t.base_dim() != base.algebra.dim() || t.field() != base.algebra.field())
    throw Error("reduce: base algebra mismatch");
  const ScalarField& f = base.algebra.field();
  Vec part = base.algebra.zero();
  Scalar sc = f.zero();

  std::map<TensorKey, Scalar> work(t.terms().begin(), t.terms().end());
  while (!work.empty()) {
    auto it = work.begin();
    TensorKey key = it->first;
    Scalar c = it->second;
    work.erase(it);
    if (c.is_zero()) continue;
    if (key.shape.is_unit()) {
      sc += c;
      continue;
    }
    if (key.shape.is_leaf()) {
      part[key.indices[0]] += c;
      continue;
    }
    std::vector<RewrittenTerm> next;
    contract(base, key.shape, key.indices, 0, order, next);
    for (auto& n : next) {
      TensorKey nk{std::move(n.shape), std::move(n.indices)};
      auto [pos, inserted] = work.emplace(nk, c * n.coeff);
      if (!inserted) {
        pos->second += c * n.coeff;
        if (pos->second.is_zero()) work.erase(pos);
      }
    }
  }
  return {std::move(part), std::move(sc)};
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
};

constexpr std::size_t kExhaustiveLimit = 20000;
constexpr std::size_t kSampleSize = 200;

std::string describe_case(const MagmaMonomial& u, const MagmaMonomial& v,
                          const std::vector<Index>& idx) {
  std::string s = u.str() + " * " + v.str() + " at indices (";
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(idx[i]);
  }
  return s + ")";
}

}  // namespace

MagmaReport verify_quotient_iso(const BFAlgebra& rb, int degree_bound, std::uint64_t seed) {
  if (degree_bound < 2) throw Error("degree bound must be at least 2");
  const ScalarField& f = rb.algebra.field();
  const Index n = rb.algebra.dim();
  std::vector<std::vector<MagmaMonomial>> shapes;
  for (int d = 0; d <= degree_bound; ++d) shapes.push_back(enumerate_monomials(d));

  std::size_t cases = 0;
  for (int du = 0; du <= degree_bound; ++du)
    for (int dv = 0; du + dv <= degree_bound; ++dv) {
      int dt = du + dv;
      if (dt > 0 && n == 0) continue;  // no index assignments
      std::size_t space = 1;
      bool overflow = false;
      for (int i = 0; i < dt; ++i) {
        space *= n;
        if (space > kExhaustiveLimit) {
          overflow = true;
          break;
        }
      }
      for (const auto& u : shapes[du])
        for (const auto& v : shapes[dv]) {
          auto run_case = [&](const std::vector<Index>& idx) -> std::optional<std::string> {
            std::vector<Index> ui(idx.begin(), idx.begin() + du);
            std::vector<Index> vi(idx.begin() + du, idx.end());
            auto s = NATensorElement::monomial(f, n, degree_bound, u, ui, f.one());
            auto t = NATensorElement::monomial(f, n, degree_bound, v, vi, f.one());
            auto lhs = reduce_to_normal_form(s * t, rb);
            auto rhs = ext_product(rb, reduce_to_normal_form(s, rb),
                                   reduce_to_normal_form(t, rb));
            ++cases;
            if (lhs != rhs) return describe_case(u, v, idx);
            return std::nullopt;
          };
          if (!overflow) {
            std::vector<Index> idx(dt, 0);
            for (std::size_t step = 0; step < space; ++step) {
              if (auto fail = run_case(idx))
                return {false, "morphism identity fails at " + *fail, cases};
              for (int i = dt; i-- > 0;) {
                if (++idx[i] < n) break;
                idx[i] = 0;
              }
            }
          } else {
            SplitMix rng{seed ^ (static_cast<std::uint64_t>(du) << 32 | dv)};
            for (std::size_t s0 = 0; s0 < kSampleSize; ++s0) {
              std::vector<Index> idx(dt);
              for (int i = 0; i < dt; ++i) idx[i] = rng.next() % n;
              if (auto fail = run_case(idx))
                return {false, "morphism identity fails at " + *fail, cases};
            }
          }
        }
    }
  return {true, "", cases};
}

MagmaReport shape_independence_check(const BFAlgebra& rb, int degree_bound) {
  if (auto w = extension_associativity_witness(rb))
    throw Error("extension is not associative (triple " + std::to_string(w->i) + "," +
                std::to_string(w->j) + "," + std::to_string(w->l) +
                "); use the non-associative quotient");
  const ScalarField& f = rb.algebra.field();
  const Index n = rb.algebra.dim();
  std::size_t cases = 0;
  for (int d = 0; d <= degree_bound; ++d) {
    auto shapes = enumerate_monomials(d);
    if (shapes.size() < 2) continue;
    if (d > 0 && n == 0) continue;
    std::size_t space = 1;
    for (int i = 0; i < d; ++i) space *= n;
    if (space > kExhaustiveLimit) space = kExhaustiveLimit;  // clipped scan
    std::vector<Index> idx(d, 0);
    for (std::size_t step = 0; step < space; ++step) {
      auto ref = reduce_to_normal_form(
          NATensorElement::monomial(f, n, degree_bound, shapes[0], idx, f.one()), rb);
      ++cases;
      for (std::size_t s = 1; s < shapes.size(); ++s) {
        auto alt = reduce_to_normal_form(
            NATensorElement::monomial(f, n, degree_bound, shapes[s], idx, f.one()), rb);
        ++cases;
        if (alt != ref)
          return {false,
                  "shapes " + shapes[0].str() + " and " + shapes[s].str() +
                      " disagree at indices " + describe_case(shapes[0], shapes[s], idx),
                  cases};
      }
      for (int i = d; i-- > 0;) {
        if (++idx[i] < n) break;
        idx[i] = 0;
      }
    }
  }
  return {true, "", cases};
}

}  // namespace bfalg
