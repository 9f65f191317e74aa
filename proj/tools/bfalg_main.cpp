// Command-line workbench for finite-dimensional algebras with bilinear
// forms: definition files in the line-oriented DSL (see README), extension
// and decomposition functors, the classical gallery, magma monomials and
// tensor normal forms, and semi-trivial ring extensions.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "bfalg/dsl.hpp"
#include "bfalg/gallery.hpp"
#include "bfalg/magma.hpp"

using namespace bfalg;
using ordered_json = nlohmann::ordered_json;

namespace {

struct Output {
  std::string command;
  bool json = false;
  ordered_json results = ordered_json::array();
  bool any_fail = false;
  std::ostringstream text;

  Output(std::string cmd, bool use_json) : command(std::move(cmd)), json(use_json) {}

  void add(const std::string& check, bool ok, ordered_json witness = nullptr) {
    ordered_json r;
    r["check"] = check;
    r["ok"] = ok;
    r["witness"] = std::move(witness);
    results.push_back(std::move(r));
    if (!ok) any_fail = true;
  }

  void note(const std::string& line) {
    text << line;
    if (line.empty() || line.back() != '\n') text << "\n";
  }

  int finish() {
    if (json) {
      ordered_json out;
      out["command"] = command;
      out["ok"] = !any_fail;
      out["results"] = results;
      std::cout << out.dump() << "\n";
    } else {
      std::cout << text.str();
      for (const auto& r : results) {
        std::cout << (r["ok"].get<bool>() ? "[ok]  " : "[FAIL] ")
                  << r["check"].get<std::string>();
        if (!r["witness"].is_null()) std::cout << ": " << r["witness"].dump();
        std::cout << "\n";
      }
    }
    return any_fail ? 1 : 0;
  }
};

int emit_diagnostics(const std::vector<Diagnostic>& diags, bool json,
                     const std::string& command) {
  if (json) {
    ordered_json out;
    out["command"] = command;
    out["ok"] = false;
    out["results"] = ordered_json::array();
    ordered_json derr = ordered_json::array();
    for (const auto& d : diags) {
      ordered_json j;
      j["severity"] = d.severity == Diagnostic::Severity::Error ? "error" : "warning";
      j["message"] = d.message;
      j["line"] = d.line;
      j["column"] = d.column;
      derr.push_back(std::move(j));
    }
    out["diagnostics"] = std::move(derr);
    std::cout << out.dump() << "\n";
  } else {
    for (const auto& d : diags)
      std::cerr << "error:" << d.line << ":" << d.column << ": " << d.message << "\n";
  }
  return 2;
}

std::optional<std::string> read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) return std::nullopt;
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ordered_json pair_json(const AlgebraSpec& a, const PairWitness& w) {
  return ordered_json::array({a.basis_names()[w.i], a.basis_names()[w.j]});
}

ordered_json triple_json(const AlgebraSpec& a, const TripleWitness& w) {
  return ordered_json::array(
      {a.basis_names()[w.i], a.basis_names()[w.j], a.basis_names()[w.l]});
}

ordered_json vec_json(const Vec& v) {
  ordered_json out = ordered_json::array();
  for (const Scalar& c : v) out.push_back(c.str());
  return out;
}

ordered_json matrix_json(const Matrix& m) {
  ordered_json out = ordered_json::array();
  for (Index i = 0; i < m.rows(); ++i) out.push_back(vec_json(m.row(i)));
  return out;
}

// tables with all basis squares zero must be skew-symmetric: by bilinearity
// x^2 = 0 for all x forces xy = -yx, so a zero diagonal with a non-skew
// entry is inconsistent data
bool skew_check_applicable(const AlgebraSpec& a) {
  if (a.dim() == 0) return false;
  for (Index i = 0; i < a.dim(); ++i)
    if (!is_zero_vec(a.basis_product(i, i))) return false;
  return true;
}

std::optional<PairWitness> skew_witness(const AlgebraSpec& a) {
  for (Index i = 0; i < a.dim(); ++i)
    for (Index j = 0; j < a.dim(); ++j) {
      Vec neg = a.basis_product(j, i);
      for (Scalar& c : neg) c = -c;
      if (a.basis_product(i, j) != neg) return PairWitness{i, j};
    }
  return std::nullopt;
}

// ---- check ---------------------------------------------------------------

void check_algebra(Output& out, const std::string& name, const AlgebraSpec& a) {
  auto id = a.find_identity();
  out.add(name + ".identity", true,
          ordered_json{{"identity", id ? vec_json(*id) : ordered_json(nullptr)}});

  auto aw = a.associativity_witness();
  out.add(name + ".associativity", true,
          aw ? ordered_json{{"associative", false}, {"witness", triple_json(a, *aw)}}
             : ordered_json{{"associative", true}});

  auto cw = a.commutativity_witness();
  out.add(name + ".commutativity", true,
          cw ? ordered_json{{"commutative", false}, {"witness", pair_json(a, *cw)}}
             : ordered_json{{"commutative", true}});

  if (skew_check_applicable(a)) {
    auto sw = skew_witness(a);
    out.add(name + ".skew_symmetry", !sw.has_value(),
            sw ? pair_json(a, *sw) : ordered_json(nullptr));
  }

  // small prime fields: exhaustive idempotents, each checked against its
  // morphism k -> A
  if (a.field().is_prime_field()) {
    std::uint64_t space = 1;
    bool small = true;
    for (Index i = 0; i < a.dim() && small; ++i) {
      space *= a.field().modulus();
      if (space > 4096) small = false;
    }
    if (small) {
      auto idems = enumerate_idempotents(a);
      AlgebraSpec k = AlgebraSpec::scalar_algebra(a.field());
      bool all_morphisms = true;
      for (const Vec& r : idems) {
        Matrix phi = idempotent_to_morphism(a, r);
        if (algebra_morphism_witness(k, a, phi)) all_morphisms = false;
      }
      out.add(name + ".idempotents", all_morphisms,
              ordered_json{{"count", idems.size()}});
    }
  }
}

void check_form(Output& out, const AlgFile& f, const NamedForm& bf) {
  const AlgebraSpec& a = *f.find_algebra(bf.algebra);
  out.add(bf.name + ".symmetric", true,
          ordered_json{{"symmetric", is_symmetric(bf.matrix)}});

  auto rep = compatibility_status(a, bf.matrix);
  ordered_json w;
  w["status"] = to_string(rep.status);
  if (rep.witness) w["witness"] = pair_json(a, *rep.witness);
  if (rep.eps) w["eps"] = vec_json(*rep.eps);
  out.add(bf.name + ".compatibility", true, std::move(w));

  auto bwit = balance_identity_witness(a, bf.matrix);
  out.add(bf.name + ".balance", true,
          bwit ? ordered_json{{"balanced", false}, {"witness", triple_json(a, *bwit)}}
               : ordered_json{{"balanced", true}});

  BFAlgebra rb(a, bf.matrix);
  auto awit = extension_associativity_witness(rb);
  out.add(bf.name + ".extension_associative", true,
          awit ? ordered_json{{"associative", false}, {"witness", triple_json(a, *awit)}}
               : ordered_json{{"associative", true}});
  auto cwit = extension_commutativity_witness(rb);
  out.add(bf.name + ".extension_commutative", true,
          cwit ? ordered_json{{"commutative", false}, {"witness", pair_json(a, *cwit)}}
               : ordered_json{{"commutative", true}});

  auto norm = norm_multiplicativity_check(rb, 50);
  out.add(bf.name + ".norm_multiplicative", true,
          ordered_json{{"multiplicative", norm.ok}});
}

void check_aug(Output& out, const AlgFile& f, const NamedAug& ag) {
  const AlgebraSpec& a = *f.find_algebra(ag.algebra);
  if (!a.find_identity()) {
    out.add(ag.name + ".weak_augmentation", false,
            ordered_json{{"error", "algebra has no identity"}});
    return;
  }
  AlgebraSpec au = a.with_detected_identity();
  bool weak = is_weak_augmentation(au, ag.eps);
  out.add(ag.name + ".weak_augmentation", weak,
          weak ? ordered_json(nullptr) : ordered_json{{"error", "eps(1) != 1"}});
  if (!weak) return;

  out.add(ag.name + ".classification", true,
          ordered_json{{"augmentation", is_augmentation(au, ag.eps)}});

  // induced compatible form, with the inverse direction as a consistency gate
  Matrix induced = weak_aug_to_compatible_form(au, ag.eps);
  bool inverse_ok = compatible_form_to_weak_aug(au, induced) == ag.eps;
  out.add(ag.name + ".induced_form", inverse_ok,
          ordered_json{{"matrix", matrix_json(induced)}});

  // idempotent endomorphism correspondence, both directions
  auto ie = weak_aug_to_idempotent_endo(au, ag.eps);
  bool endo_ok = idempotent_endo_to_weak_aug(au, ie.endo) == ag.eps;
  out.add(ag.name + ".idempotent_endo", endo_ok,
          ordered_json{{"algebra_endomorphism", ie.algebra_endo}});

  // the kernel splits off: always a submodule, an ideal iff eps is
  // multiplicative
  Matrix eps_m(au.field(), 1, au.dim());
  for (Index j = 0; j < au.dim(); ++j) eps_m.at(0, j) = ag.eps[j];
  auto kernel = kernel_basis(eps_m);
  out.add(ag.name + ".kernel", true,
          ordered_json{{"dim", kernel.size()},
                       {"ideal", is_ideal(au, kernel)},
                       {"subalgebra", is_subalgebra(au, kernel)}});
}

void check_map(Output& out, const AlgFile& f, const NamedMap& mp) {
  const AlgebraSpec& src = *f.find_algebra(mp.from);
  const AlgebraSpec& dst = *f.find_algebra(mp.to);
  auto w = algebra_morphism_witness(src, dst, mp.matrix);
  out.add(mp.name + ".morphism", true,
          w ? ordered_json{{"morphism", false}, {"witness", pair_json(src, *w)}}
            : ordered_json{{"morphism", true}});

  // with forms on both sides, the map lifts to the extensions exactly when
  // it is an orthogonal morphism of the cores; the agreement is a gate
  const NamedForm* src_form = nullptr;
  const NamedForm* dst_form = nullptr;
  for (const auto& bf : f.forms) {
    if (bf.algebra == mp.from && !src_form) src_form = &bf;
    if (bf.algebra == mp.to && !dst_form) dst_form = &bf;
  }
  if (src_form && dst_form) {
    BFAlgebra sb(src, src_form->matrix);
    BFAlgebra db(dst, dst_form->matrix);
    bool core_ok = !w.has_value() &&
                   !orthogonal_morphism_witness(sb.form, db.form, mp.matrix).has_value();
    Matrix lifted = lift_morphism(mp.matrix, sb, db);
    bool lift_ok = !algebra_morphism_witness(at_extend(sb).algebra, at_extend(db).algebra,
                                             lifted)
                        .has_value();
    out.add(mp.name + ".lift", core_ok == lift_ok,
            ordered_json{{"core_orthogonal_morphism", core_ok},
                         {"lift_is_morphism", lift_ok}});
  }
}

void check_bimodule_block(Output& out, const NamedBimodule& bm) {
  auto w = check_bimodule(bm.spec);
  out.add(bm.name + ".bimodule_axioms", !w.has_value(),
          w ? ordered_json{{"axiom", w->axiom}, {"at", w->at}} : ordered_json(nullptr));
  if (!w) {
    auto bw = check_balanced(bm.spec);
    out.add(bm.name + ".balanced", !bw.has_value(),
            bw ? ordered_json{{"axiom", bw->axiom}, {"at", bw->at}}
               : ordered_json(nullptr));
  }
}

int run_check(const std::string& path, bool json) {
  Output out{"check", json};
  auto text = read_input(path);
  if (!text) {
    std::cerr << "error: cannot read " << path << "\n";
    return 2;
  }
  auto res = parse_alg_file(*text);
  if (!res.ok()) return emit_diagnostics(res.diagnostics, json, "check");
  const AlgFile& f = *res.file;
  for (const auto& [name, a] : f.algebras) check_algebra(out, name, a);
  for (const auto& bf : f.forms) check_form(out, f, bf);
  for (const auto& ag : f.augs) check_aug(out, f, ag);
  for (const auto& mp : f.maps) check_map(out, f, mp);
  for (const auto& bm : f.bimodules) check_bimodule_block(out, bm);
  return out.finish();
}

// ---- extend / decompose / roundtrip ---------------------------------------

AlgFile single_algebra_file(const ScalarField& field, const std::string& name,
                            const AlgebraSpec& a) {
  AlgFile f;
  f.field = field;
  f.algebras.emplace_back(name, a);
  return f;
}

int run_extend(const std::string& path, const std::string& algebra,
               const std::string& form, bool negate, bool json) {
  Output out{"extend", json};
  auto text = read_input(path);
  if (!text) {
    std::cerr << "error: cannot read " << path << "\n";
    return 2;
  }
  auto res = parse_alg_file(*text);
  if (!res.ok()) return emit_diagnostics(res.diagnostics, json, "extend");
  const AlgFile& f = *res.file;
  const AlgebraSpec* found = f.find_algebra(algebra);
  if (!found) {
    std::cerr << "error: unknown algebra '" << algebra << "'\n";
    return 2;
  }
  // --negate extends the conjugate core (multiplication negated, same form)
  AlgebraSpec core = negate ? found->negate_multiplication() : *found;
  Extension ext = [&]() -> Extension {
    if (form.empty()) return hash_extend(core);
    const NamedForm* bf = f.find_form(form);
    if (!bf || bf->algebra != algebra) throw Error("unknown form '" + form + "'");
    return at_extend(BFAlgebra(core, bf->matrix));
  }();
  AlgFile outfile = single_algebra_file(f.field, algebra + "_ext", ext.algebra);
  outfile.augs.push_back({"eps", algebra + "_ext", ext.eps});
  std::string printed = print_alg_file(outfile);
  if (json) {
    out.add("extend", true, ordered_json{{"text", printed}});
  } else {
    out.note(printed);
  }
  return out.finish();
}

int run_decompose(const std::string& path, const std::string& algebra,
                  const std::string& aug, bool json) {
  Output out{"decompose", json};
  auto text = read_input(path);
  if (!text) {
    std::cerr << "error: cannot read " << path << "\n";
    return 2;
  }
  auto res = parse_alg_file(*text);
  if (!res.ok()) return emit_diagnostics(res.diagnostics, json, "decompose");
  const AlgFile& f = *res.file;
  const AlgebraSpec* a = f.find_algebra(algebra);
  const NamedAug* ag = f.find_aug(aug);
  if (!a || !ag || ag->algebra != algebra) {
    std::cerr << "error: need an algebra and an augmentation on it\n";
    return 2;
  }
  Decomposition dec = decompose(a->with_detected_identity(), ag->eps);
  AlgFile outfile =
      single_algebra_file(f.field, algebra + "_ker", dec.kernel.algebra);
  outfile.forms.push_back({algebra + "_ker_b", algebra + "_ker", dec.kernel.form});
  std::string printed = print_alg_file(outfile);
  if (json) {
    out.add("decompose", true,
            ordered_json{{"text", printed},
                         {"kernel_basis", matrix_json(dec.embed.transpose())},
                         {"proj1", matrix_json(dec.proj1)},
                         {"eps", vec_json(dec.proj2)}});
  } else {
    out.note(printed);
    out.note("# kernel basis rows in the coordinates of " + algebra + ":");
    Matrix rows = dec.embed.transpose();
    for (Index i = 0; i < rows.rows(); ++i)
      out.note("#   " + format_vec(rows.row(i)));
  }
  return out.finish();
}

int run_roundtrip(const std::string& path, const std::string& algebra,
                  const std::string& form, const std::string& aug, bool json) {
  Output out{"roundtrip", json};
  auto text = read_input(path);
  if (!text) {
    std::cerr << "error: cannot read " << path << "\n";
    return 2;
  }
  auto res = parse_alg_file(*text);
  if (!res.ok()) return emit_diagnostics(res.diagnostics, json, "roundtrip");
  const AlgFile& f = *res.file;
  const AlgebraSpec* a = f.find_algebra(algebra);
  if (!a) {
    std::cerr << "error: unknown algebra '" << algebra << "'\n";
    return 2;
  }
  if (form.empty() == aug.empty()) {
    std::cerr << "error: pass exactly one of --form or --aug\n";
    return 2;
  }
  RoundTrip rt{false, Matrix(f.field, 0, 0), ""};
  std::string direction;
  if (!form.empty()) {
    const NamedForm* bf = f.find_form(form);
    if (!bf || bf->algebra != algebra) {
      std::cerr << "error: unknown form '" << form << "'\n";
      return 2;
    }
    rt = roundtrip_gh(BFAlgebra(*a, bf->matrix));
    direction = "decompose(at_extend) vs identity";
  } else {
    const NamedAug* ag = f.find_aug(aug);
    if (!ag || ag->algebra != algebra) {
      std::cerr << "error: unknown augmentation '" << aug << "'\n";
      return 2;
    }
    rt = roundtrip_hg(a->with_detected_identity(), ag->eps);
    direction = "at_extend(decompose) vs identity";
  }
  out.add("roundtrip", rt.ok,
          rt.ok ? ordered_json{{"direction", direction}, {"iso", matrix_json(rt.iso)}}
                : ordered_json{{"direction", direction}, {"error", rt.detail}});
  if (!json) {
    out.note("# " + direction + (rt.ok ? ": pass" : ": FAIL " + rt.detail));
    for (Index i = 0; i < rt.iso.rows(); ++i) out.note("#   " + format_vec(rt.iso.row(i)));
  }
  return out.finish();
}

// ---- gallery ---------------------------------------------------------------

int run_gallery(const std::string& name, const std::string& param,
                const std::string& poly, bool json) {
  Output out{"gallery", json};
  auto Q = ScalarField::rationals();
  AlgFile f;
  f.field = Q;
  if (name == "complex" || name == "quaternions" || name == "octonions" ||
      name == "octonions-literal" || name == "spin" || name == "quadratic") {
    BFAlgebra rb = [&]() -> BFAlgebra {
      if (name == "complex") return make_complex();
      if (name == "quaternions") return make_quaternions();
      if (name == "octonions") return make_octonions();
      if (name == "octonions-literal") return make_octonions_literal();
      if (name == "spin") {
        long n = param.empty() ? 3 : std::strtol(param.c_str(), nullptr, 10);
        if (n < 1) throw Error("spin factor needs --param n >= 1");
        return make_spin_factor(static_cast<Index>(n));
      }
      auto c = Q.parse(param.empty() ? "1" : param);
      if (!c) throw Error("quadratic needs a scalar --param");
      return make_quadratic(*c);
    }();
    f.algebras.emplace_back("R", rb.algebra);
    f.forms.push_back({"b", "R", rb.form});
  } else if (name == "numberfield") {
    if (poly.empty()) throw Error("numberfield needs --poly c0,c1,...");
    std::vector<Scalar> coeffs;
    std::stringstream ss(poly);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      auto c = Q.parse(tok);
      if (!c) throw Error("bad coefficient '" + tok + "'");
      coeffs.push_back(*c);
    }
    Extension l = make_number_field(NumberFieldSpec(Q, std::move(coeffs)));
    f.algebras.emplace_back("L", l.algebra);
    f.augs.push_back({"tr", "L", l.eps});
  } else {
    std::cerr << "error: unknown gallery instance '" << name << "'\n";
    return 2;
  }
  std::string printed = print_alg_file(f);
  if (json) {
    out.add("gallery", true, ordered_json{{"name", name}, {"text", printed}});
  } else {
    out.note(printed);
  }
  return out.finish();
}

// ---- magma / reduce --------------------------------------------------------

int run_magma(int degree, bool count_only, bool json) {
  Output out{"magma", json};
  auto ms = enumerate_monomials(degree);
  if (json) {
    ordered_json w;
    w["degree"] = degree;
    w["count"] = ms.size();
    if (!count_only) {
      ordered_json list = ordered_json::array();
      for (const auto& m : ms) list.push_back(m.str());
      w["monomials"] = std::move(list);
    }
    out.add("magma", true, std::move(w));
  } else {
    if (count_only) {
      out.note(std::to_string(ms.size()));
    } else {
      for (const auto& m : ms) out.note(m.str());
    }
  }
  return out.finish();
}

int run_reduce(const std::string& path, const std::string& algebra, const std::string& form,
               const std::string& expr, const std::string& coords, int verify_quotient,
               int shape_check, bool json) {
  Output out{"reduce", json};
  auto text = read_input(path);
  if (!text) {
    std::cerr << "error: cannot read " << path << "\n";
    return 2;
  }
  auto res = parse_alg_file(*text);
  if (!res.ok()) return emit_diagnostics(res.diagnostics, json, "reduce");
  const AlgFile& f = *res.file;
  const AlgebraSpec* a = f.find_algebra(algebra);
  const NamedForm* bf = f.find_form(form);
  if (!a || !bf || bf->algebra != algebra) {
    std::cerr << "error: need an algebra and a form on it\n";
    return 2;
  }
  if (verify_quotient > 0 || shape_check > 0) {
    BFAlgebra rb(*a, bf->matrix);
    if (verify_quotient > 0) {
      auto rep = verify_quotient_iso(rb, verify_quotient);
      out.add("quotient_morphism", rep.ok,
              ordered_json{{"degree", verify_quotient},
                           {"cases", rep.cases_checked},
                           {"detail", rep.detail}});
    }
    if (shape_check > 0) {
      auto rep = shape_independence_check(rb, shape_check);
      out.add("shape_independence", rep.ok,
              ordered_json{{"degree", shape_check},
                           {"cases", rep.cases_checked},
                           {"detail", rep.detail}});
    }
    if (expr.empty()) return out.finish();
  }
  if (expr.empty()) {
    std::cerr << "error: pass --expr, --verify-quotient, or --shape-check\n";
    return 2;
  }
  auto shape = MagmaMonomial::parse(expr);
  if (!shape) {
    std::cerr << "error: bad monomial expression '" << expr << "'\n";
    return 2;
  }
  std::vector<Index> idx;
  if (!coords.empty()) {
    std::stringstream ss(coords);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      long v = std::strtol(tok.c_str(), nullptr, 10);
      if (v < 0 || static_cast<Index>(v) >= a->dim()) {
        std::cerr << "error: coordinate index out of range: " << tok << "\n";
        return 2;
      }
      idx.push_back(static_cast<Index>(v));
    }
  } else if (a->dim() == 1) {
    idx.assign(static_cast<std::size_t>(shape->degree()), 0);
  }
  if (idx.size() != static_cast<std::size_t>(shape->degree())) {
    std::cerr << "error: --coords needs exactly " << shape->degree() << " indices\n";
    return 2;
  }
  BFAlgebra rb(*a, bf->matrix);
  int bound = std::max(shape->degree(), 2);
  auto t = NATensorElement::monomial(f.field, a->dim(), bound, *shape, idx, f.field.one());
  auto nf = reduce_to_normal_form(t, rb);
  if (json) {
    out.add("reduce", true,
            ordered_json{{"expr", shape->str()},
                         {"element", vec_json(nf.first)},
                         {"scalar", nf.second.str()}});
  } else {
    out.note("element: " + format_lin_comb(nf.first, a->basis_names()));
    out.note("scalar:  " + nf.second.str());
  }
  return out.finish();
}

// ---- ringext ---------------------------------------------------------------

// the --embed path: a ring extension R -> S given by a map block; reports
// the centralizer, idempotent correspondences, and augmentation classes
int run_ringext_embedding(Output& out, const AlgFile& f, const std::string& embed_name,
                          const std::string& idem, const std::string& classify) {
  const NamedMap* embed = f.find_map(embed_name);
  if (!embed) {
    std::cerr << "error: unknown map '" << embed_name << "'\n";
    return 2;
  }
  const AlgebraSpec r = f.find_algebra(embed->from)->with_detected_identity();
  const AlgebraSpec s = f.find_algebra(embed->to)->with_detected_identity();

  auto cbasis = centralizer_basis(s, r, embed->matrix);
  ordered_json rows = ordered_json::array();
  for (const Vec& v : cbasis) rows.push_back(vec_json(v));
  out.add("centralizer", true, ordered_json{{"dim", cbasis.size()}, {"basis", rows}});
  if (!out.json) {
    out.note("# centralizer basis:");
    for (const Vec& v : cbasis) out.note("#   " + format_lin_comb(v, s.basis_names()));
  }

  if (!idem.empty()) {
    std::stringstream ss(idem);
    std::string tok;
    Vec e;
    while (std::getline(ss, tok, ',')) {
      auto c = s.field().parse(tok);
      if (!c) {
        std::cerr << "error: bad idempotent coordinate '" << tok << "'\n";
        return 2;
      }
      e.push_back(*c);
    }
    if (e.size() != s.dim()) {
      std::cerr << "error: --idempotent needs " << s.dim() << " coordinates\n";
      return 2;
    }
    auto rep = idempotent_hom_correspondence(s, r, embed->matrix, e);
    out.add("idempotent_hom", rep.ring_morphism == rep.centralizes,
            ordered_json{{"right_module_morphism", rep.right_module_morphism},
                         {"ring_morphism", rep.ring_morphism},
                         {"centralizes", rep.centralizes}});
  }

  if (!classify.empty()) {
    const NamedMap* eps = f.find_map(classify);
    if (!eps || eps->from != embed->to || eps->to != embed->from) {
      std::cerr << "error: --classify needs a map from " << embed->to << " to "
                << embed->from << "\n";
      return 2;
    }
    auto rep = classify_augmentation_detailed(s, r, embed->matrix, eps->matrix);
    out.add("augmentation_class",
            rep.cls != AugmentationClass::Augmentation || rep.bimodule_linear,
            ordered_json{{"class", to_string(rep.cls)},
                         {"identity_on_ring", rep.identity_on_r},
                         {"multiplicative", rep.multiplicative},
                         {"bimodule_linear", rep.bimodule_linear}});
  }
  return out.finish();
}

int run_ringext(const std::string& path, const std::string& bimodule,
                const std::string& embed_name, const std::string& idem,
                const std::string& classify, bool audit, bool force, bool json) {
  Output out{"ringext", json};
  auto text = read_input(path);
  if (!text) {
    std::cerr << "error: cannot read " << path << "\n";
    return 2;
  }
  auto res = parse_alg_file(*text);
  if (!res.ok()) return emit_diagnostics(res.diagnostics, json, "ringext");
  const AlgFile& f = *res.file;
  if (bimodule.empty() != embed_name.empty()) {
    if (!embed_name.empty()) return run_ringext_embedding(out, f, embed_name, idem, classify);
  } else {
    std::cerr << "error: pass exactly one of --bimodule or --embed\n";
    return 2;
  }
  const NamedBimodule* bm = f.find_bimodule(bimodule);
  if (!bm) {
    std::cerr << "error: unknown bimodule '" << bimodule << "'\n";
    return 2;
  }
  auto axioms = check_bimodule(bm->spec);
  out.add(bimodule + ".bimodule_axioms", !axioms.has_value() || force,
          axioms ? ordered_json{{"axiom", axioms->axiom}, {"at", axioms->at}}
                 : ordered_json(nullptr));
  std::optional<BimoduleWitness> balance;
  if (!axioms) {
    balance = check_balanced(bm->spec);
    out.add(bimodule + ".balanced", !balance.has_value() || force,
            balance ? ordered_json{{"axiom", balance->axiom}, {"at", balance->at}}
                    : ordered_json(nullptr));
  }
  if ((axioms || balance) && !force) return out.finish();

  AlgebraSpec ext = semitrivial_extend(bm->spec, force);
  AlgFile outfile = single_algebra_file(f.field, bimodule + "_ext", ext);
  std::string printed = print_alg_file(outfile);
  if (json) {
    ordered_json w{{"text", printed}};
    if (audit) {
      auto failures = associativity_audit(ext);
      ordered_json list = ordered_json::array();
      for (const auto& t : failures) list.push_back(triple_json(ext, t));
      w["audit"] = std::move(list);
    }
    out.add("ringext", true, std::move(w));
  } else {
    out.note(printed);
    if (audit) {
      auto failures = associativity_audit(ext);
      if (failures.empty()) {
        out.note("# audit: associative");
      } else {
        out.note("# audit: " + std::to_string(failures.size()) + " failing triples");
        for (const auto& t : failures)
          out.note("#   (" + ext.basis_names()[t.i] + ", " + ext.basis_names()[t.j] +
                   ", " + ext.basis_names()[t.l] + ")");
      }
    }
  }
  return out.finish();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"workbench for algebras with bilinear forms"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "machine-readable output");

  std::string file, algebra, form, aug, expr, coords, param, poly, bimodule;
  std::string embed, idem, classify;
  int degree = 0, verify_quotient = 0, shape_check = 0;
  bool count_only = false, audit = false, force = false, negate = false;

  auto* c_check = app.add_subcommand("check", "structural checks on every object");
  c_check->add_option("file", file, "definition file or -")->required();

  auto* c_extend = app.add_subcommand("extend", "adjoin an identity (# or @_b)");
  c_extend->add_option("file", file)->required();
  c_extend->add_option("--algebra", algebra)->required();
  c_extend->add_option("--form", form);
  c_extend->add_flag("--negate", negate, "extend the conjugate core (negated multiplication)");

  auto* c_dec = app.add_subcommand("decompose", "split a unital algebra along a weak augmentation");
  c_dec->add_option("file", file)->required();
  c_dec->add_option("--algebra", algebra)->required();
  c_dec->add_option("--aug", aug)->required();

  auto* c_rt = app.add_subcommand("roundtrip", "category equivalence round trip");
  c_rt->add_option("file", file)->required();
  c_rt->add_option("--algebra", algebra)->required();
  c_rt->add_option("--form", form);
  c_rt->add_option("--aug", aug);

  auto* c_gal = app.add_subcommand("gallery", "emit a classical instance as DSL text");
  c_gal->add_option("name", param)
      ->required()
      ->description("complex|quaternions|octonions|octonions-literal|spin|quadratic|numberfield");
  std::string gal_param;
  c_gal->add_option("--param", gal_param, "n for spin, c for quadratic");
  c_gal->add_option("--poly", poly, "comma-separated min_poly coefficients c0,c1,...");

  auto* c_magma = app.add_subcommand("magma", "enumerate free magma monomials");
  c_magma->add_option("--degree", degree)->required();
  c_magma->add_flag("--count-only", count_only);

  auto* c_red = app.add_subcommand("reduce", "normal form of a tensor monomial in the extension");
  c_red->add_option("file", file)->required();
  c_red->add_option("--algebra", algebra)->required();
  c_red->add_option("--form", form)->required();
  c_red->add_option("--expr", expr);
  c_red->add_option("--coords", coords, "comma-separated basis indices, one per x");
  c_red->add_option("--verify-quotient", verify_quotient,
                    "check the reduction morphism up to this degree");
  c_red->add_option("--shape-check", shape_check,
                    "check shape independence up to this degree (associative case)");

  auto* c_ring = app.add_subcommand("ringext", "ring extensions: semi-trivial builds and embeddings");
  c_ring->add_option("file", file)->required();
  c_ring->add_option("--bimodule", bimodule);
  c_ring->add_flag("--audit", audit);
  c_ring->add_flag("--force", force);
  c_ring->add_option("--embed", embed, "map block embedding R into S");
  c_ring->add_option("--idempotent", idem, "comma-separated coordinates of e in S");
  c_ring->add_option("--classify", classify, "map block S -> R to classify");

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (c_check->parsed()) return run_check(file, json);
    if (c_extend->parsed()) return run_extend(file, algebra, form, negate, json);
    if (c_dec->parsed()) return run_decompose(file, algebra, aug, json);
    if (c_rt->parsed()) return run_roundtrip(file, algebra, form, aug, json);
    if (c_gal->parsed()) return run_gallery(param, gal_param, poly, json);
    if (c_magma->parsed()) return run_magma(degree, count_only, json);
    if (c_red->parsed())
      return run_reduce(file, algebra, form, expr, coords, verify_quotient, shape_check,
                        json);
    if (c_ring->parsed())
      return run_ringext(file, bimodule, embed, idem, classify, audit, force, json);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
