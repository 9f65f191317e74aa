#include "bfalg/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace bfalg {

const AlgebraSpec* AlgFile::find_algebra(const std::string& name) const {
  for (const auto& [n, a] : algebras)
    if (n == name) return &a;
  return nullptr;
}

const NamedForm* AlgFile::find_form(const std::string& name) const {
  for (const auto& f : forms)
    if (f.name == name) return &f;
  return nullptr;
}

const NamedAug* AlgFile::find_aug(const std::string& name) const {
  for (const auto& a : augs)
    if (a.name == name) return &a;
  return nullptr;
}

const NamedMap* AlgFile::find_map(const std::string& name) const {
  for (const auto& m : maps)
    if (m.name == name) return &m;
  return nullptr;
}

const NamedBimodule* AlgFile::find_bimodule(const std::string& name) const {
  for (const auto& b : bimodules)
    if (b.name == name) return &b;
  return nullptr;
}

namespace {

struct Token {
  enum class Kind { Ident, Number, LBracket, RBracket, Comma, Equals, Arrow, Semicolon };
  Kind kind;
  std::string text;
  std::size_t column;  // 1-based
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool digit(char c) { return c >= '0' && c <= '9'; }

std::optional<std::vector<Token>> tokenize_line(const std::string& line, std::size_t lineno,
                                                std::vector<Diagnostic>& diags) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    char c = line[i];
    if (c == ' ' || c == '\t' || c == '\r') {
      ++i;
      continue;
    }
    if (c == '#') break;
    std::size_t col = i + 1;
    if (ident_start(c)) {
      std::size_t j = i;
      while (j < line.size() && ident_char(line[j])) ++j;
      out.push_back({Token::Kind::Ident, line.substr(i, j - i), col});
      i = j;
    } else if (digit(c) || ((c == '-' || c == '+') && i + 1 < line.size() && digit(line[i + 1]))) {
      std::size_t j = i + 1;
      while (j < line.size() && (digit(line[j]) || line[j] == '/')) ++j;
      out.push_back({Token::Kind::Number, line.substr(i, j - i), col});
      i = j;
    } else if (c == '[') {
      out.push_back({Token::Kind::LBracket, "[", col});
      ++i;
    } else if (c == ']') {
      out.push_back({Token::Kind::RBracket, "]", col});
      ++i;
    } else if (c == ',') {
      out.push_back({Token::Kind::Comma, ",", col});
      ++i;
    } else if (c == ';') {
      out.push_back({Token::Kind::Semicolon, ";", col});
      ++i;
    } else if (c == '=') {
      out.push_back({Token::Kind::Equals, "=", col});
      ++i;
    } else if (c == '-' && i + 1 < line.size() && line[i + 1] == '>') {
      out.push_back({Token::Kind::Arrow, "->", col});
      i += 2;
    } else if (c == '-' || c == '+') {
      // bare sign inside a linear combination; treat as a one-char number prefix
      out.push_back({Token::Kind::Number, std::string(1, c), col});
      ++i;
    } else {
      diags.push_back({Diagnostic::Severity::Error,
                       std::string("unexpected character '") + c + "'", lineno, col});
      return std::nullopt;
    }
  }
  return out;
}

// ---- parser state -------------------------------------------------------

struct PendingEntry {
  std::vector<Token> tokens;
  std::size_t line;
};

struct PendingBlock {
  enum class Kind { Algebra, BForm, Map, Bimodule };
  Kind kind;
  std::size_t line;
  std::vector<Token> header;
  std::vector<PendingEntry> body;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  ParseResult run();

 private:
  void error(std::size_t line, std::size_t col, std::string msg) {
    if (diags_.size() < 20)
      diags_.push_back({Diagnostic::Severity::Error, std::move(msg), line, col});
    failed_ = true;
  }

  bool unique_name(const std::string& name, std::size_t line, std::size_t col);

  // linear combination over `names`, written on tokens [pos..end)
  std::optional<Vec> parse_lin_comb(const std::vector<Token>& toks, std::size_t pos,
                                    const std::vector<std::string>& names, std::size_t line);
  // bracketed scalar list "[c1, ..., cn]"
  std::optional<Vec> parse_vector(const std::vector<Token>& toks, std::size_t& pos,
                                  std::size_t expected, std::size_t line);
  std::optional<Scalar> parse_scalar_token(const Token& t, std::size_t line);

  void flush_block();
  void finalize_algebra(const PendingBlock& b);
  void finalize_bform(const PendingBlock& b);
  void finalize_map(const PendingBlock& b);
  void finalize_bimodule(const PendingBlock& b);

  std::string_view text_;
  std::vector<Diagnostic> diags_;
  bool failed_ = false;
  bool scalars_seen_ = false;
  bool any_block_ = false;
  AlgFile file_;
  std::optional<PendingBlock> block_;
};

bool Parser::unique_name(const std::string& name, std::size_t line, std::size_t col) {
  bool taken = file_.find_algebra(name) || file_.find_form(name) || file_.find_aug(name) ||
               file_.find_map(name) || file_.find_bimodule(name);
  if (taken) error(line, col, "name '" + name + "' is already defined");
  return !taken;
}

std::optional<Scalar> Parser::parse_scalar_token(const Token& t, std::size_t line) {
  if (t.kind != Token::Kind::Number) {
    error(line, t.column, "expected a scalar literal");
    return std::nullopt;
  }
  auto s = file_.field.parse(t.text);
  if (!s) error(line, t.column, "bad scalar literal '" + t.text + "'");
  return s;
}

std::optional<Vec> Parser::parse_lin_comb(const std::vector<Token>& toks, std::size_t pos,
                                          const std::vector<std::string>& names,
                                          std::size_t line) {
  Vec v(names.size(), file_.field.zero());
  if (pos >= toks.size()) {
    error(line, toks.empty() ? 1 : toks.back().column, "missing linear combination");
    return std::nullopt;
  }
  // the literal zero element
  if (pos + 1 == toks.size() && toks[pos].kind == Token::Kind::Number &&
      toks[pos].text == "0")
    return v;

  bool first = true;
  while (pos < toks.size()) {
    Scalar coeff = file_.field.one();
    bool joined = false;
    if (toks[pos].kind == Token::Kind::Number &&
        (toks[pos].text == "+" || toks[pos].text == "-")) {
      if (toks[pos].text == "-") coeff = -coeff;
      joined = true;
      ++pos;
    } else if (toks[pos].kind == Token::Kind::Number &&
               (toks[pos].text[0] == '+' || toks[pos].text[0] == '-')) {
      joined = true;  // merged signed number, consumed below
    }
    if (!first && !joined) {
      error(line, toks[pos].column, "terms must be joined with + or -");
      return std::nullopt;
    }
    if (pos < toks.size() && toks[pos].kind == Token::Kind::Number) {
      auto s = file_.field.parse(toks[pos].text);
      if (!s) {
        error(line, toks[pos].column, "bad scalar literal '" + toks[pos].text + "'");
        return std::nullopt;
      }
      coeff *= *s;
      ++pos;
    }
    if (pos >= toks.size() || toks[pos].kind != Token::Kind::Ident) {
      error(line, pos < toks.size() ? toks[pos].column : toks.back().column + 1,
            "expected a basis name");
      return std::nullopt;
    }
    auto it = std::find(names.begin(), names.end(), toks[pos].text);
    if (it == names.end()) {
      error(line, toks[pos].column, "unknown basis name '" + toks[pos].text + "'");
      return std::nullopt;
    }
    v[static_cast<Index>(it - names.begin())] += coeff;
    ++pos;
    first = false;
  }
  return v;
}

std::optional<Vec> Parser::parse_vector(const std::vector<Token>& toks, std::size_t& pos,
                                        std::size_t expected, std::size_t line) {
  if (pos >= toks.size() || toks[pos].kind != Token::Kind::LBracket) {
    error(line, pos < toks.size() ? toks[pos].column : 1, "expected '['");
    return std::nullopt;
  }
  ++pos;
  Vec v;
  if (pos < toks.size() && toks[pos].kind == Token::Kind::RBracket) {
    ++pos;
  } else {
    while (true) {
      if (pos >= toks.size()) {
        error(line, toks.back().column + 1, "unterminated vector");
        return std::nullopt;
      }
      auto s = parse_scalar_token(toks[pos], line);
      if (!s) return std::nullopt;
      v.push_back(*s);
      ++pos;
      if (pos < toks.size() && toks[pos].kind == Token::Kind::Comma) {
        ++pos;
        continue;
      }
      if (pos < toks.size() && toks[pos].kind == Token::Kind::RBracket) {
        ++pos;
        break;
      }
      error(line, pos < toks.size() ? toks[pos].column : toks.back().column + 1,
            "expected ',' or ']'");
      return std::nullopt;
    }
  }
  if (v.size() != expected) {
    error(line, toks[pos - 1].column,
          "vector has " + std::to_string(v.size()) + " entries, expected " +
              std::to_string(expected));
    return std::nullopt;
  }
  return v;
}

void Parser::finalize_algebra(const PendingBlock& b) {
  // header: algebra <name> dim <n> basis <ids...> [unit [..]]
  const auto& h = b.header;
  std::size_t pos = 1;
  if (pos >= h.size() || h[pos].kind != Token::Kind::Ident) {
    error(b.line, 1, "algebra needs a name");
    return;
  }
  std::string name = h[pos++].text;
  if (!unique_name(name, b.line, h[1].column)) return;
  if (pos + 1 >= h.size() || h[pos].text != "dim" ||
      h[pos + 1].kind != Token::Kind::Number) {
    error(b.line, pos < h.size() ? h[pos].column : 1, "expected 'dim <n>'");
    return;
  }
  long n_long = std::strtol(h[pos + 1].text.c_str(), nullptr, 10);
  if (n_long < 0) {
    error(b.line, h[pos + 1].column, "dimension must be nonnegative");
    return;
  }
  Index n = static_cast<Index>(n_long);
  pos += 2;
  if (pos >= h.size() || h[pos].text != "basis") {
    error(b.line, pos < h.size() ? h[pos].column : 1, "expected 'basis'");
    return;
  }
  ++pos;
  std::vector<std::string> names;
  while (pos < h.size() && h[pos].kind == Token::Kind::Ident && h[pos].text != "unit")
    names.push_back(h[pos++].text);
  if (names.size() != n) {
    error(b.line, h.back().column, "expected " + std::to_string(n) + " basis names, found " +
                                       std::to_string(names.size()));
    return;
  }
  std::optional<Vec> unit;
  if (pos < h.size()) {
    if (h[pos].text != "unit") {
      error(b.line, h[pos].column, "unexpected token '" + h[pos].text + "'");
      return;
    }
    ++pos;
    unit = parse_vector(h, pos, n, b.line);
    if (!unit) return;
    if (pos != h.size()) {
      error(b.line, h[pos].column, "trailing tokens after unit");
      return;
    }
  }

  std::vector<Vec> table(n * n, zero_vec(file_.field, n));
  std::vector<bool> seen(n * n, false);
  for (const auto& entry : b.body) {
    const auto& t = entry.tokens;
    // mul <idi> <idj> = <lin-comb>
    if (t.size() < 4 || t[0].text != "mul" || t[1].kind != Token::Kind::Ident ||
        t[2].kind != Token::Kind::Ident || t[3].kind != Token::Kind::Equals) {
      error(entry.line, t.empty() ? 1 : t[0].column, "expected 'mul <i> <j> = <value>'");
      continue;
    }
    auto find_name = [&](const Token& tok) -> std::optional<Index> {
      auto it = std::find(names.begin(), names.end(), tok.text);
      if (it == names.end()) {
        error(entry.line, tok.column, "unknown basis name '" + tok.text + "'");
        return std::nullopt;
      }
      return static_cast<Index>(it - names.begin());
    };
    auto i = find_name(t[1]);
    auto j = find_name(t[2]);
    if (!i || !j) continue;
    if (seen[*i * n + *j]) {
      error(entry.line, t[1].column,
            "duplicate product entry for (" + t[1].text + ", " + t[2].text + ")");
      continue;
    }
    auto v = parse_lin_comb(t, 4, names, entry.line);
    if (!v) continue;
    seen[*i * n + *j] = true;
    table[*i * n + *j] = std::move(*v);
  }
  if (failed_) return;
  try {
    file_.algebras.emplace_back(name,
                                AlgebraSpec(file_.field, names, std::move(table), unit));
  } catch (const Error& e) {
    error(b.line, 1, e.what());
  }
}

void Parser::finalize_bform(const PendingBlock& b) {
  // header: bform <name> on <algebra>
  const auto& h = b.header;
  if (h.size() != 4 || h[1].kind != Token::Kind::Ident || h[2].text != "on" ||
      h[3].kind != Token::Kind::Ident) {
    error(b.line, 1, "expected 'bform <name> on <algebra>'");
    return;
  }
  std::string name = h[1].text;
  if (!unique_name(name, b.line, h[1].column)) return;
  const AlgebraSpec* alg = file_.find_algebra(h[3].text);
  if (!alg) {
    error(b.line, h[3].column, "unknown algebra '" + h[3].text + "'");
    return;
  }
  const Index n = alg->dim();
  Matrix m(file_.field, n, n);
  std::vector<bool> seen(n * n, false);
  for (const auto& entry : b.body) {
    const auto& t = entry.tokens;
    if (t.size() != 4 || t[0].kind != Token::Kind::Ident ||
        t[1].kind != Token::Kind::Ident || t[2].kind != Token::Kind::Equals) {
      error(entry.line, t.empty() ? 1 : t[0].column, "expected '<i> <j> = <scalar>'");
      continue;
    }
    auto i = alg->basis_index(t[0].text);
    auto j = alg->basis_index(t[1].text);
    if (!i) {
      error(entry.line, t[0].column, "unknown basis name '" + t[0].text + "'");
      continue;
    }
    if (!j) {
      error(entry.line, t[1].column, "unknown basis name '" + t[1].text + "'");
      continue;
    }
    if (seen[*i * n + *j]) {
      error(entry.line, t[0].column, "duplicate form entry");
      continue;
    }
    auto s = parse_scalar_token(t[3], entry.line);
    if (!s) continue;
    seen[*i * n + *j] = true;
    m.at(*i, *j) = *s;
  }
  if (!failed_) file_.forms.push_back({std::move(name), h[3].text, std::move(m)});
}

void Parser::finalize_map(const PendingBlock& b) {
  // header: map <name> from <A> to <B>
  const auto& h = b.header;
  if (h.size() != 6 || h[1].kind != Token::Kind::Ident || h[2].text != "from" ||
      h[3].kind != Token::Kind::Ident || h[4].text != "to" ||
      h[5].kind != Token::Kind::Ident) {
    error(b.line, 1, "expected 'map <name> from <A> to <B>'");
    return;
  }
  std::string name = h[1].text;
  if (!unique_name(name, b.line, h[1].column)) return;
  const AlgebraSpec* src = file_.find_algebra(h[3].text);
  const AlgebraSpec* dst = file_.find_algebra(h[5].text);
  if (!src) {
    error(b.line, h[3].column, "unknown algebra '" + h[3].text + "'");
    return;
  }
  if (!dst) {
    error(b.line, h[5].column, "unknown algebra '" + h[5].text + "'");
    return;
  }
  Matrix m(file_.field, dst->dim(), src->dim());
  std::vector<bool> seen(src->dim(), false);
  for (const auto& entry : b.body) {
    const auto& t = entry.tokens;
    if (t.size() < 3 || t[0].kind != Token::Kind::Ident ||
        t[1].kind != Token::Kind::Arrow) {
      error(entry.line, t.empty() ? 1 : t[0].column, "expected '<i> -> <lin-comb>'");
      continue;
    }
    auto i = src->basis_index(t[0].text);
    if (!i) {
      error(entry.line, t[0].column, "unknown basis name '" + t[0].text + "'");
      continue;
    }
    if (seen[*i]) {
      error(entry.line, t[0].column, "duplicate map entry for '" + t[0].text + "'");
      continue;
    }
    auto v = parse_lin_comb(t, 2, dst->basis_names(), entry.line);
    if (!v) continue;
    seen[*i] = true;
    for (Index r = 0; r < dst->dim(); ++r) m.at(r, *i) = (*v)[r];
  }
  if (!failed_) file_.maps.push_back({std::move(name), h[3].text, h[5].text, std::move(m)});
}

void Parser::finalize_bimodule(const PendingBlock& b) {
  // header: bimodule <name> over <ring> dim <m> basis <ids...>
  const auto& h = b.header;
  std::size_t pos = 1;
  if (pos >= h.size() || h[pos].kind != Token::Kind::Ident) {
    error(b.line, 1, "bimodule needs a name");
    return;
  }
  std::string name = h[pos++].text;
  if (!unique_name(name, b.line, h[1].column)) return;
  if (pos >= h.size() || h[pos].text != "over" || pos + 1 >= h.size() ||
      h[pos + 1].kind != Token::Kind::Ident) {
    error(b.line, pos < h.size() ? h[pos].column : 1, "expected 'over <ring>'");
    return;
  }
  std::string ring_name = h[pos + 1].text;
  const AlgebraSpec* ring = file_.find_algebra(ring_name);
  if (!ring) {
    error(b.line, h[pos + 1].column, "unknown algebra '" + ring_name + "'");
    return;
  }
  pos += 2;
  if (pos + 1 >= h.size() || h[pos].text != "dim" ||
      h[pos + 1].kind != Token::Kind::Number) {
    error(b.line, pos < h.size() ? h[pos].column : 1, "expected 'dim <m>'");
    return;
  }
  long m_long = std::strtol(h[pos + 1].text.c_str(), nullptr, 10);
  if (m_long < 0) {
    error(b.line, h[pos + 1].column, "dimension must be nonnegative");
    return;
  }
  Index m = static_cast<Index>(m_long);
  pos += 2;
  if (pos >= h.size() || h[pos].text != "basis") {
    error(b.line, pos < h.size() ? h[pos].column : 1, "expected 'basis'");
    return;
  }
  ++pos;
  std::vector<std::string> fnames;
  while (pos < h.size() && h[pos].kind == Token::Kind::Ident) fnames.push_back(h[pos++].text);
  if (fnames.size() != m || pos != h.size()) {
    error(b.line, h.back().column, "expected " + std::to_string(m) + " module basis names");
    return;
  }

  BimoduleSpec spec(*ring, fnames);
  const Index n = ring->dim();
  enum class Slot { Left, Right, Kmul, Pair };
  std::map<std::pair<int, std::pair<Index, Index>>, bool> seen;

  for (const auto& entry : b.body) {
    const auto& t = entry.tokens;
    if (t.size() < 5 || t[0].kind != Token::Kind::Ident ||
        t[1].kind != Token::Kind::Ident || t[2].kind != Token::Kind::Ident ||
        t[3].kind != Token::Kind::Equals) {
      error(entry.line, t.empty() ? 1 : t[0].column,
            "expected 'left|right|kmul|pair <a> <b> = <lin-comb>'");
      continue;
    }
    std::string op = t[0].text;
    auto ring_index = [&](const Token& tok) -> std::optional<Index> {
      auto i = ring->basis_index(tok.text);
      if (!i) error(entry.line, tok.column, "unknown ring basis name '" + tok.text + "'");
      return i;
    };
    auto mod_index = [&](const Token& tok) -> std::optional<Index> {
      auto it = std::find(fnames.begin(), fnames.end(), tok.text);
      if (it == fnames.end()) {
        error(entry.line, tok.column, "unknown module basis name '" + tok.text + "'");
        return std::nullopt;
      }
      return static_cast<Index>(it - fnames.begin());
    };
    Slot slot;
    std::optional<Index> first, second;
    const std::vector<std::string>* value_names = &fnames;
    if (op == "left") {
      slot = Slot::Left;
      first = ring_index(t[1]);
      second = mod_index(t[2]);
    } else if (op == "right") {
      slot = Slot::Right;
      first = mod_index(t[1]);
      second = ring_index(t[2]);
    } else if (op == "kmul") {
      slot = Slot::Kmul;
      first = mod_index(t[1]);
      second = mod_index(t[2]);
    } else if (op == "pair") {
      slot = Slot::Pair;
      first = mod_index(t[1]);
      second = mod_index(t[2]);
      value_names = &ring->basis_names();
    } else {
      error(entry.line, t[0].column, "unknown bimodule entry '" + op + "'");
      continue;
    }
    if (!first || !second) continue;
    auto key = std::make_pair(static_cast<int>(slot), std::make_pair(*first, *second));
    if (seen.count(key)) {
      error(entry.line, t[0].column, "duplicate bimodule entry");
      continue;
    }
    seen[key] = true;
    auto v = parse_lin_comb(t, 4, *value_names, entry.line);
    if (!v) continue;
    switch (slot) {
      case Slot::Left: spec.left[*first][*second] = std::move(*v); break;
      case Slot::Right: spec.right[*first][*second] = std::move(*v); break;
      case Slot::Kmul: spec.kmul[*first][*second] = std::move(*v); break;
      case Slot::Pair: spec.pairing[*first][*second] = std::move(*v); break;
    }
  }
  (void)n;
  if (!failed_) file_.bimodules.push_back({std::move(name), ring_name, std::move(spec)});
}

void Parser::flush_block() {
  if (!block_) return;
  PendingBlock b = std::move(*block_);
  block_.reset();
  switch (b.kind) {
    case PendingBlock::Kind::Algebra: finalize_algebra(b); break;
    case PendingBlock::Kind::BForm: finalize_bform(b); break;
    case PendingBlock::Kind::Map: finalize_map(b); break;
    case PendingBlock::Kind::Bimodule: finalize_bimodule(b); break;
  }
}

ParseResult Parser::run() {
  std::size_t lineno = 0;
  std::size_t start = 0;
  while (start <= text_.size()) {
    std::size_t end = text_.find('\n', start);
    std::string line(text_.substr(start, end == std::string_view::npos ? std::string_view::npos
                                                                       : end - start));
    start = end == std::string_view::npos ? text_.size() + 1 : end + 1;
    ++lineno;
    if (diags_.size() >= 20) break;

    auto toks_opt = tokenize_line(line, lineno, diags_);
    if (!toks_opt) {
      failed_ = true;
      continue;
    }
    auto& toks = *toks_opt;
    if (toks.empty()) continue;

    const std::string& head = toks[0].text;
    if (toks[0].kind == Token::Kind::Ident &&
        (head == "scalars" || head == "algebra" || head == "bform" || head == "aug" ||
         head == "map" || head == "bimodule")) {
      flush_block();
      if (head == "scalars") {
        if (scalars_seen_) {
          error(lineno, toks[0].column, "duplicate scalars declaration");
          continue;
        }
        scalars_seen_ = true;
        if (any_block_) {
          error(lineno, toks[0].column, "scalars must be declared before any block");
          continue;
        }
        if (toks.size() == 2 && toks[1].text == "Q") {
          file_.field = ScalarField::rationals();
        } else if (toks.size() == 3 && toks[1].text == "F" &&
                   toks[2].kind == Token::Kind::Number) {
          try {
            file_.field =
                ScalarField::prime_field(std::strtoull(toks[2].text.c_str(), nullptr, 10));
          } catch (const Error& e) {
            error(lineno, toks[2].column, e.what());
          }
        } else {
          error(lineno, toks[0].column, "expected 'scalars Q' or 'scalars F <p>'");
        }
      } else if (head == "aug") {
        any_block_ = true;
        // single-line block: aug <name> on <algebra> = [..]
        if (toks.size() < 6 || toks[1].kind != Token::Kind::Ident || toks[2].text != "on" ||
            toks[3].kind != Token::Kind::Ident ||
            toks[4].kind != Token::Kind::Equals) {
          error(lineno, toks[0].column, "expected 'aug <name> on <algebra> = [..]'");
          continue;
        }
        if (!unique_name(toks[1].text, lineno, toks[1].column)) continue;
        const AlgebraSpec* alg = file_.find_algebra(toks[3].text);
        if (!alg) {
          error(lineno, toks[3].column, "unknown algebra '" + toks[3].text + "'");
          continue;
        }
        std::size_t pos = 5;
        auto v = parse_vector(toks, pos, alg->dim(), lineno);
        if (!v) continue;
        if (pos != toks.size()) {
          error(lineno, toks[pos].column, "trailing tokens after augmentation vector");
          continue;
        }
        file_.augs.push_back({toks[1].text, toks[3].text, std::move(*v)});
      } else {
        any_block_ = true;
        PendingBlock::Kind kind = head == "algebra" ? PendingBlock::Kind::Algebra
                                  : head == "bform" ? PendingBlock::Kind::BForm
                                  : head == "map"   ? PendingBlock::Kind::Map
                                                    : PendingBlock::Kind::Bimodule;
        if (!scalars_seen_) {
          error(lineno, toks[0].column, "a scalars declaration must come first");
          scalars_seen_ = true;  // report once
        }
        block_ = PendingBlock{kind, lineno, std::move(toks), {}};
      }
      continue;
    }

    if (!block_) {
      error(lineno, toks[0].column, "line outside of any block");
      continue;
    }
    // semicolons separate several entries written on one line
    std::vector<Token> part;
    for (auto& t : toks) {
      if (t.kind == Token::Kind::Semicolon) {
        if (!part.empty()) block_->body.push_back({std::move(part), lineno});
        part.clear();
      } else {
        part.push_back(std::move(t));
      }
    }
    if (!part.empty()) block_->body.push_back({std::move(part), lineno});
  }
  flush_block();

  ParseResult result;
  result.diagnostics = std::move(diags_);
  if (!failed_) result.file = std::move(file_);
  return result;
}

}  // namespace

ParseResult parse_alg_file(std::string_view text) { return Parser(text).run(); }

std::string format_lin_comb(const Vec& v, const std::vector<std::string>& names) {
  std::string out;
  for (Index i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    Scalar c = v[i];
    bool negative = c.value() < 0;
    Scalar mag = negative ? -c : c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (!mag.is_one()) out += mag.str() + " ";
    out += names[i];
  }
  return out.empty() ? "0" : out;
}

std::string format_vec(const Vec& v) {
  std::string out = "[";
  for (Index i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += v[i].str();
  }
  return out + "]";
}

std::string print_alg_file(const AlgFile& f) {
  std::ostringstream out;
  out << "scalars " << f.field.str() << "\n";
  for (const auto& [name, a] : f.algebras) {
    out << "algebra " << name << " dim " << a.dim() << " basis";
    for (const auto& bn : a.basis_names()) out << " " << bn;
    if (a.unit()) out << " unit " << format_vec(*a.unit());
    out << "\n";
    for (Index i = 0; i < a.dim(); ++i)
      for (Index j = 0; j < a.dim(); ++j) {
        if (is_zero_vec(a.basis_product(i, j))) continue;
        out << "  mul " << a.basis_names()[i] << " " << a.basis_names()[j] << " = "
            << format_lin_comb(a.basis_product(i, j), a.basis_names()) << "\n";
      }
  }
  for (const auto& bf : f.forms) {
    const AlgebraSpec* a = f.find_algebra(bf.algebra);
    out << "bform " << bf.name << " on " << bf.algebra << "\n";
    for (Index i = 0; i < bf.matrix.rows(); ++i)
      for (Index j = 0; j < bf.matrix.cols(); ++j) {
        if (bf.matrix.at(i, j).is_zero()) continue;
        out << "  " << a->basis_names()[i] << " " << a->basis_names()[j] << " = "
            << bf.matrix.at(i, j).str() << "\n";
      }
  }
  for (const auto& ag : f.augs) {
    out << "aug " << ag.name << " on " << ag.algebra << " = " << format_vec(ag.eps) << "\n";
  }
  for (const auto& mp : f.maps) {
    const AlgebraSpec* src = f.find_algebra(mp.from);
    const AlgebraSpec* dst = f.find_algebra(mp.to);
    out << "map " << mp.name << " from " << mp.from << " to " << mp.to << "\n";
    for (Index j = 0; j < src->dim(); ++j) {
      Vec col = mp.matrix.col(j);
      if (is_zero_vec(col)) continue;
      out << "  " << src->basis_names()[j] << " -> "
          << format_lin_comb(col, dst->basis_names()) << "\n";
    }
  }
  for (const auto& bm : f.bimodules) {
    const BimoduleSpec& s = bm.spec;
    out << "bimodule " << bm.name << " over " << bm.ring << " dim " << s.moddim()
        << " basis";
    for (const auto& fn : s.mod_basis) out << " " << fn;
    out << "\n";
    for (Index i = 0; i < s.ring.dim(); ++i)
      for (Index a = 0; a < s.moddim(); ++a) {
        if (is_zero_vec(s.left[i][a])) continue;
        out << "  left " << s.ring.basis_names()[i] << " " << s.mod_basis[a] << " = "
            << format_lin_comb(s.left[i][a], s.mod_basis) << "\n";
      }
    for (Index a = 0; a < s.moddim(); ++a)
      for (Index i = 0; i < s.ring.dim(); ++i) {
        if (is_zero_vec(s.right[a][i])) continue;
        out << "  right " << s.mod_basis[a] << " " << s.ring.basis_names()[i] << " = "
            << format_lin_comb(s.right[a][i], s.mod_basis) << "\n";
      }
    for (Index a = 0; a < s.moddim(); ++a)
      for (Index c = 0; c < s.moddim(); ++c) {
        if (is_zero_vec(s.kmul[a][c])) continue;
        out << "  kmul " << s.mod_basis[a] << " " << s.mod_basis[c] << " = "
            << format_lin_comb(s.kmul[a][c], s.mod_basis) << "\n";
      }
    for (Index a = 0; a < s.moddim(); ++a)
      for (Index c = 0; c < s.moddim(); ++c) {
        if (is_zero_vec(s.pairing[a][c])) continue;
        out << "  pair " << s.mod_basis[a] << " " << s.mod_basis[c] << " = "
            << format_lin_comb(s.pairing[a][c], s.ring.basis_names()) << "\n";
      }
  }
  return out.str();
}

}  // namespace bfalg
