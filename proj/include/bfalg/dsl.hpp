#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bfalg/ringext.hpp"

namespace bfalg {

struct Diagnostic {
  enum class Severity { Error, Warning };
  Severity severity;
  std::string message;
  std::size_t line;    // 1-based
  std::size_t column;  // 1-based
};

struct NamedForm {
  std::string name;
  std::string algebra;
  Matrix matrix;
};

struct NamedAug {
  std::string name;
  std::string algebra;
  Vec eps;
};

struct NamedMap {
  std::string name;
  std::string from, to;
  Matrix matrix;  // dim(to) x dim(from)
};

struct NamedBimodule {
  std::string name;
  std::string ring;
  BimoduleSpec spec;
};

/// A parsed definition file: one scalars declaration, then named algebras,
/// forms, augmentations, maps, and bimodules.  Names are unique per kind;
/// references resolve to earlier definitions.
struct AlgFile {
  ScalarField field = ScalarField::rationals();
  std::vector<std::pair<std::string, AlgebraSpec>> algebras;
  std::vector<NamedForm> forms;
  std::vector<NamedAug> augs;
  std::vector<NamedMap> maps;
  std::vector<NamedBimodule> bimodules;

  const AlgebraSpec* find_algebra(const std::string& name) const;
  const NamedForm* find_form(const std::string& name) const;
  const NamedAug* find_aug(const std::string& name) const;
  const NamedMap* find_map(const std::string& name) const;
  const NamedBimodule* find_bimodule(const std::string& name) const;
};

struct ParseResult {
  std::optional<AlgFile> file;  // present iff no error diagnostics
  std::vector<Diagnostic> diagnostics;
  bool ok() const { return file.has_value(); }
};

/// Line-oriented parser; # starts a comment.  Collects up to 20 errors
/// before giving up.
ParseResult parse_alg_file(std::string_view text);

/// Canonical serialization; parse(print(f)) is structurally equal to f.
std::string print_alg_file(const AlgFile& f);

/// Canonical rendering of a linear combination over named basis vectors,
/// e.g. "e3", "-e3", "2 e1 + 1/2 e2", "0".
std::string format_lin_comb(const Vec& v, const std::vector<std::string>& names);

std::string format_vec(const Vec& v);  // "[1, 0, -2/3]"

}  // namespace bfalg
