#include "quotkit/qk/parser.hpp"

#include <cctype>
#include <set>
#include <sstream>

#include "quotkit/errors.hpp"

namespace quotkit::qk {

namespace {

enum class Tok { Ident, Int, Punct, End };

struct Token {
  Tok kind = Tok::End;
  std::string text;
  int line = 1, col = 1;
};

class Lexer {
 public:
  explicit Lexer(const std::string& src) : src_(src) { advance(); }

  const Token& peek() const { return cur_; }
  Token take() {
    Token t = cur_;
    advance();
    return t;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, cur_.line, cur_.col);
  }

 private:
  void advance() {
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (c == '#') {
        while (pos_ < src_.size() && src_[pos_] != '\n') ++pos_;
      } else if (c == '\n') {
        ++line_;
        col_ = 1;
        ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++col_;
        ++pos_;
      } else {
        break;
      }
    }
    cur_.line = line_;
    cur_.col = col_;
    if (pos_ >= src_.size()) {
      cur_ = Token{Tok::End, "", line_, col_};
      return;
    }
    char c = src_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
        consume();
      cur_.kind = Tok::Ident;
      cur_.text = src_.substr(start, pos_ - start);
      return;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) consume();
      cur_.kind = Tok::Int;
      cur_.text = src_.substr(start, pos_ - start);
      return;
    }
    // Multi-character punctuation first.
    if (c == '.' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '.') {
      cur_ = Token{Tok::Punct, "..", line_, col_};
      consume();
      consume();
      return;
    }
    if (c == '-' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '>') {
      cur_ = Token{Tok::Punct, "->", line_, col_};
      consume();
      consume();
      return;
    }
    static const std::string singles = "+-*/^()[]{},;=";
    if (singles.find(c) != std::string::npos) {
      cur_ = Token{Tok::Punct, std::string(1, c), line_, col_};
      consume();
      return;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", line_, col_);
  }

  void consume() {
    ++pos_;
    ++col_;
  }

  const std::string& src_;
  std::size_t pos_ = 0;
  int line_ = 1, col_ = 1;
  Token cur_;
};

class Parser {
 public:
  explicit Parser(const std::string& src) : lex_(src) {}

  InputDocument run() {
    expect_ident("ring");
    doc_.fiber_vars = var_group();
    if (peek_is_ident("over")) {
      lex_.take();
      doc_.base_vars = var_group();
    }
    expect_punct(";");
    build_ring();

    while (lex_.peek().kind != Tok::End) statement();
    return std::move(doc_);
  }

 private:
  void build_ring() {
    std::vector<std::string> names = doc_.fiber_vars;
    std::vector<VarRole> roles(names.size(), VarRole::Fiber);
    for (const auto& v : doc_.base_vars) {
      names.push_back(v);
      roles.push_back(VarRole::Base);
    }
    std::map<std::string, int> seen;
    for (const auto& n : names)
      if (++seen[n] > 1) lex_.fail("duplicate variable '" + n + "' in ring declaration");
    doc_.ring = Ring::make(std::move(names), std::move(roles));
  }

  // ident[..ident] {, ident[..ident]}
  std::vector<std::string> var_group() {
    std::vector<std::string> out;
    while (true) {
      std::string first = expect_any_ident("variable name");
      if (peek_is_punct("..")) {
        lex_.take();
        std::string last = expect_any_ident("variable name");
        auto split = [&](const std::string& v) -> std::pair<std::string, long> {
          std::size_t i = v.size();
          while (i > 0 && std::isdigit(static_cast<unsigned char>(v[i - 1]))) --i;
          if (i == v.size()) lex_.fail("range endpoint '" + v + "' has no numeric suffix");
          return {v.substr(0, i), std::stol(v.substr(i))};
        };
        auto [p1, i1] = split(first);
        auto [p2, i2] = split(last);
        if (p1 != p2 || i2 < i1) lex_.fail("bad variable range " + first + ".." + last);
        for (long i = i1; i <= i2; ++i) out.push_back(p1 + std::to_string(i));
      } else {
        out.push_back(first);
      }
      if (!peek_is_punct(",")) break;
      lex_.take();
    }
    return out;
  }

  void statement() {
    std::string kw = expect_any_ident("declaration keyword");
    if (kw == "poly") return poly_stmt();
    if (kw == "matrix") return matrix_stmt();
    if (kw == "module") return module_stmt(false);
    if (kw == "family") return module_stmt(true);
    if (kw == "grasspoint") return grass_stmt();
    lex_.fail("unknown declaration '" + kw + "'");
  }

  std::string new_name() {
    std::string name = expect_any_ident("object name");
    if (names_.count(name)) lex_.fail("duplicate object name '" + name + "'");
    if (doc_.ring->index_of(name) >= 0) lex_.fail("object name '" + name + "' shadows a variable");
    names_.insert(name);
    return name;
  }

  void poly_stmt() {
    PolyDef def;
    def.name = new_name();
    expect_punct("=");
    def.value = expr_as_poly();
    expect_punct(";");
    doc_.decls.push_back(std::move(def));
  }

  void matrix_stmt() {
    MatrixDef def;
    def.name = new_name();
    expect_punct("=");
    def.entries = matrix_literal_rat();
    expect_punct(";");
    doc_.decls.push_back(std::move(def));
  }

  void module_stmt(bool family) {
    ModuleDef def;
    def.is_family = family;
    def.name = new_name();
    expect_punct("=");
    expect_ident("coker");
    def.source_twists = free_spec();
    expect_punct("->");
    def.target_twists = free_spec();
    expect_ident("by");
    auto rows = matrix_literal();
    def.map = to_polymatrix(rows);
    expect_punct(";");
    if (def.map.rows() != static_cast<int>(def.target_twists.size()) ||
        def.map.cols() != static_cast<int>(def.source_twists.size()))
      lex_.fail("presentation matrix shape disagrees with the free modules in '" + def.name +
                "' (want target-rank x source-rank)");
    if (!family) {
      for (int i = 0; i < def.map.rows(); ++i)
        for (int j = 0; j < def.map.cols(); ++j)
          for (const auto& [e, c] : def.map(i, j).terms())
            for (int v = doc_.ring->fiber_count(); v < doc_.ring->size(); ++v)
              if (e[v] != 0)
                lex_.fail("module '" + def.name + "' uses base variable " + doc_.ring->name(v) +
                          "; declare it as a family");
    }
    doc_.decls.push_back(std::move(def));
  }

  // S[(twist)][^count] { + S[(twist)][^count] }
  std::vector<int> free_spec() {
    std::vector<int> twists;
    while (true) {
      expect_ident("S");
      int twist = 0;
      if (peek_is_punct("(")) {
        lex_.take();
        twist = static_cast<int>(integer());
        expect_punct(")");
      }
      long count = 1;
      if (peek_is_punct("^")) {
        lex_.take();
        count = integer();
        if (count < 0) lex_.fail("negative multiplicity in free module spec");
      }
      for (long i = 0; i < count; ++i) twists.push_back(twist);
      if (!peek_is_punct("+")) break;
      lex_.take();
    }
    return twists;
  }

  void grass_stmt() {
    GrassDef def;
    def.name = new_name();
    expect_punct("=");
    expect_ident("grass");
    expect_ident("r");
    expect_punct("=");
    def.r = static_cast<int>(integer());
    expect_ident("d");
    expect_punct("=");
    def.d = static_cast<int>(integer());
    def.entries = matrix_literal();
    expect_punct(";");
    if (static_cast<int>(def.entries.size()) != def.d)
      lex_.fail("grasspoint '" + def.name + "' has " + std::to_string(def.entries.size()) +
                " rows, expected d = " + std::to_string(def.d));
    for (const auto& row : def.entries)
      if (static_cast<int>(row.size()) != def.r)
        lex_.fail("grasspoint '" + def.name + "' row width differs from r");
    doc_.decls.push_back(std::move(def));
  }

  std::vector<std::vector<MultiPoly>> matrix_literal() {
    std::vector<std::vector<MultiPoly>> rows;
    for (auto& row : matrix_literal_rat()) {
      std::vector<MultiPoly> prow;
      for (auto& [num, den] : row) {
        if (!den.is_constant())
          lex_.fail("division by a non-constant polynomial in a polynomial matrix");
        prow.push_back(num.scaled(den.constant_term().inverse()));
      }
      rows.push_back(std::move(prow));
    }
    return rows;
  }

  std::vector<std::vector<std::pair<MultiPoly, MultiPoly>>> matrix_literal_rat() {
    std::vector<std::vector<std::pair<MultiPoly, MultiPoly>>> rows;
    expect_punct("[");
    while (true) {
      expect_punct("[");
      std::vector<std::pair<MultiPoly, MultiPoly>> row;
      if (!peek_is_punct("]")) {
        while (true) {
          RatExpr e = expr();
          if (e.den.is_constant()) {
            row.emplace_back(e.num.scaled(e.den.constant_term().inverse()),
                             MultiPoly::constant(doc_.ring, 1));
          } else {
            row.emplace_back(std::move(e.num), std::move(e.den));
          }
          if (!peek_is_punct(",")) break;
          lex_.take();
        }
      }
      expect_punct("]");
      rows.push_back(std::move(row));
      if (!peek_is_punct(",")) break;
      lex_.take();
    }
    expect_punct("]");
    if (rows.empty()) lex_.fail("empty matrix literal");
    for (const auto& r : rows)
      if (r.size() != rows[0].size()) lex_.fail("ragged matrix literal");
    return rows;
  }

  PolyMatrix to_polymatrix(const std::vector<std::vector<MultiPoly>>& rows) {
    PolyMatrix m(doc_.ring, static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < rows[i].size(); ++j)
        m(static_cast<int>(i), static_cast<int>(j)) = rows[i][j];
    return m;
  }

  // Expressions evaluate to num/den pairs so that constant division works.
  struct RatExpr {
    MultiPoly num, den;
  };

  MultiPoly expr_as_poly() {
    Token at = lex_.peek();
    RatExpr e = expr();
    if (!e.den.is_constant())
      throw ParseError("division by a non-constant polynomial", at.line, at.col);
    return e.num.scaled(e.den.constant_term().inverse());
  }

  RatExpr expr() {
    RatExpr lhs = term();
    while (peek_is_punct("+") || peek_is_punct("-")) {
      bool plus = lex_.take().text == "+";
      RatExpr rhs = term();
      RatExpr out;
      out.num = plus ? lhs.num * rhs.den + rhs.num * lhs.den
                     : lhs.num * rhs.den - rhs.num * lhs.den;
      out.den = lhs.den * rhs.den;
      lhs = std::move(out);
    }
    return lhs;
  }

  RatExpr term() {
    RatExpr lhs = factor();
    while (peek_is_punct("*") || peek_is_punct("/")) {
      bool mult = lex_.take().text == "*";
      Token at = lex_.peek();
      RatExpr rhs = factor();
      RatExpr out;
      if (mult) {
        out.num = lhs.num * rhs.num;
        out.den = lhs.den * rhs.den;
      } else {
        if (rhs.num.is_zero()) throw ParseError("division by zero", at.line, at.col);
        out.num = lhs.num * rhs.den;
        out.den = lhs.den * rhs.num;
      }
      lhs = std::move(out);
    }
    return lhs;
  }

  RatExpr factor() {
    if (peek_is_punct("-")) {
      lex_.take();
      RatExpr e = factor();
      e.num = -e.num;
      return e;
    }
    RatExpr base = atom();
    if (peek_is_punct("^")) {
      lex_.take();
      long k = integer();
      if (k < 0) lex_.fail("negative exponent");
      RatExpr out{MultiPoly::constant(doc_.ring, 1), MultiPoly::constant(doc_.ring, 1)};
      for (long i = 0; i < k; ++i) {
        out.num = out.num * base.num;
        out.den = out.den * base.den;
      }
      return out;
    }
    return base;
  }

  RatExpr atom() {
    Token t = lex_.peek();
    if (t.kind == Tok::Int) {
      lex_.take();
      return {MultiPoly::constant(doc_.ring, Rational::parse(t.text)),
              MultiPoly::constant(doc_.ring, 1)};
    }
    if (t.kind == Tok::Ident) {
      lex_.take();
      int v = doc_.ring->index_of(t.text);
      if (v < 0) throw ParseError("undeclared variable '" + t.text + "'", t.line, t.col);
      return {MultiPoly::variable(doc_.ring, v), MultiPoly::constant(doc_.ring, 1)};
    }
    if (peek_is_punct("(")) {
      lex_.take();
      RatExpr e = expr();
      expect_punct(")");
      return e;
    }
    lex_.fail("expected a number, variable or parenthesized expression");
  }

  long integer() {
    bool neg = false;
    if (peek_is_punct("-")) {
      lex_.take();
      neg = true;
    }
    Token t = lex_.take();
    if (t.kind != Tok::Int) throw ParseError("expected an integer", t.line, t.col);
    long v = std::stol(t.text);
    return neg ? -v : v;
  }

  bool peek_is_punct(const std::string& p) const {
    return lex_.peek().kind == Tok::Punct && lex_.peek().text == p;
  }
  bool peek_is_ident(const std::string& s) const {
    return lex_.peek().kind == Tok::Ident && lex_.peek().text == s;
  }
  void expect_punct(const std::string& p) {
    if (!peek_is_punct(p)) lex_.fail("expected '" + p + "'");
    lex_.take();
  }
  void expect_ident(const std::string& s) {
    if (!peek_is_ident(s)) lex_.fail("expected '" + s + "'");
    lex_.take();
  }
  std::string expect_any_ident(const std::string& what) {
    Token t = lex_.peek();
    if (t.kind != Tok::Ident) lex_.fail("expected " + what);
    return lex_.take().text;
  }

  Lexer lex_;
  InputDocument doc_;
  std::set<std::string> names_;
};

// Canonical variable-list printing: contiguous prefix+index runs collapse to
// ranges.
std::string print_var_group(const std::vector<std::string>& vars) {
  auto split = [](const std::string& v) -> std::pair<std::string, long> {
    std::size_t i = v.size();
    while (i > 0 && std::isdigit(static_cast<unsigned char>(v[i - 1]))) --i;
    if (i == v.size()) return {v, -1};
    return {v.substr(0, i), std::stol(v.substr(i))};
  };
  std::ostringstream os;
  std::size_t i = 0;
  bool first = true;
  while (i < vars.size()) {
    auto [prefix, idx] = split(vars[i]);
    std::size_t j = i;
    if (idx >= 0) {
      long expect = idx;
      while (j + 1 < vars.size()) {
        auto [p2, i2] = split(vars[j + 1]);
        if (p2 != prefix || i2 != expect + 1) break;
        ++j;
        ++expect;
      }
    }
    if (!first) os << ", ";
    first = false;
    if (j > i)
      os << vars[i] << ".." << vars[j];
    else
      os << vars[i];
    i = j + 1;
  }
  return os.str();
}

std::string print_free_spec(const std::vector<int>& twists) {
  std::ostringstream os;
  std::size_t i = 0;
  bool first = true;
  while (i < twists.size()) {
    std::size_t j = i;
    while (j + 1 < twists.size() && twists[j + 1] == twists[i]) ++j;
    if (!first) os << " + ";
    first = false;
    os << "S";
    if (twists[i] != 0) os << "(" << twists[i] << ")";
    os << "^" << (j - i + 1);
    i = j + 1;
  }
  if (first) os << "S^0";
  return os.str();
}

std::string print_matrix(const std::vector<std::vector<MultiPoly>>& rows) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i) os << ", ";
    os << "[";
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      if (j) os << ", ";
      os << rows[i][j].str();
    }
    os << "]";
  }
  os << "]";
  return os.str();
}

std::vector<std::vector<MultiPoly>> matrix_rows(const PolyMatrix& m) {
  std::vector<std::vector<MultiPoly>> rows(m.rows());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) rows[i].push_back(m(i, j));
  return rows;
}

std::string print_rat_matrix(const std::vector<std::vector<std::pair<MultiPoly, MultiPoly>>>& rows) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i) os << ", ";
    os << "[";
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      if (j) os << ", ";
      const auto& [num, den] = rows[i][j];
      if (den.is_constant()) {
        os << num.str();
      } else {
        os << "(" << num.str() << ")/(" << den.str() << ")";
      }
    }
    os << "]";
  }
  os << "]";
  return os.str();
}

}  // namespace

Presentation ModuleDef::presentation(const RingPtr& fiber_ring) const {
  Presentation P;
  P.F0 = FreeModule{fiber_ring, target_twists};
  for (int j = 0; j < map.cols(); ++j) {
    Vec col;
    for (int i = 0; i < map.rows(); ++i) col.push_back(map(i, j).map_to_ring(fiber_ring));
    if (!vec_is_zero(col)) P.relations.push_back(std::move(col));
  }
  P.validate();
  return P;
}

FamilyPresentation ModuleDef::family_presentation() const {
  FamilyPresentation F;
  F.F0 = FreeModule{map.ring(), target_twists};
  for (int j = 0; j < map.cols(); ++j) {
    Vec col;
    for (int i = 0; i < map.rows(); ++i) col.push_back(map(i, j));
    if (!vec_is_zero(col)) F.relations.push_back(std::move(col));
  }
  F.validate();
  return F;
}

const PolyDef* InputDocument::find_poly(const std::string& name) const {
  for (const auto& d : decls)
    if (const auto* p = std::get_if<PolyDef>(&d); p && p->name == name) return p;
  return nullptr;
}
const MatrixDef* InputDocument::find_matrix(const std::string& name) const {
  for (const auto& d : decls)
    if (const auto* p = std::get_if<MatrixDef>(&d); p && p->name == name) return p;
  return nullptr;
}
const ModuleDef* InputDocument::find_module(const std::string& name) const {
  for (const auto& d : decls)
    if (const auto* p = std::get_if<ModuleDef>(&d); p && p->name == name) return p;
  return nullptr;
}
const GrassDef* InputDocument::find_grass(const std::string& name) const {
  for (const auto& d : decls)
    if (const auto* p = std::get_if<GrassDef>(&d); p && p->name == name) return p;
  return nullptr;
}

RingPtr InputDocument::fiber_ring() const { return ring->fiber_subring(); }

PolyMatrix MatrixDef::as_polymatrix() const {
  RingPtr ring = entries.front().front().first.ring();
  PolyMatrix m(ring, rows(), cols());
  for (int i = 0; i < rows(); ++i)
    for (int j = 0; j < cols(); ++j) {
      const auto& [num, den] = entries[i][j];
      if (!den.is_constant())
        throw PreconditionError("matrix has rational-function entries where polynomials are required");
      m(i, j) = num.scaled(den.constant_term().inverse());
    }
  return m;
}

Mat<Rational> MatrixDef::as_rational_matrix() const {
  Mat<Rational> m(rows(), cols());
  for (int i = 0; i < rows(); ++i)
    for (int j = 0; j < cols(); ++j) {
      const auto& [num, den] = entries[i][j];
      if (!num.is_constant() || !den.is_constant())
        throw PreconditionError("matrix entries must be rational constants for this command");
      m(i, j) = num.constant_term() / den.constant_term();
    }
  return m;
}

UPoly to_upoly(const MultiPoly& p) {
  if (p.ring()->size() != 1)
    throw PreconditionError("expected a univariate polynomial (declare 'ring t;')");
  std::vector<Rational> coeffs;
  for (const auto& [e, c] : p.terms()) {
    if (static_cast<std::size_t>(e[0]) >= coeffs.size()) coeffs.resize(e[0] + 1, Rational(0));
    coeffs[e[0]] = c;
  }
  return UPoly(std::move(coeffs));
}

Mat<RationalFunction> MatrixDef::as_ratfunc_matrix() const {
  Mat<RationalFunction> m(rows(), cols());
  for (int i = 0; i < rows(); ++i)
    for (int j = 0; j < cols(); ++j) {
      const auto& [num, den] = entries[i][j];
      m(i, j) = RationalFunction(to_upoly(num), to_upoly(den));
    }
  return m;
}

InputDocument parse(const std::string& text) { return Parser(text).run(); }

std::string print(const InputDocument& doc) {
  std::ostringstream os;
  os << "ring " << print_var_group(doc.fiber_vars);
  if (!doc.base_vars.empty()) os << " over " << print_var_group(doc.base_vars);
  os << ";\n";
  for (const auto& d : doc.decls) {
    if (const auto* p = std::get_if<PolyDef>(&d)) {
      os << "poly " << p->name << " = " << p->value.str() << ";\n";
    } else if (const auto* m = std::get_if<MatrixDef>(&d)) {
      os << "matrix " << m->name << " = " << print_rat_matrix(m->entries) << ";\n";
    } else if (const auto* mod = std::get_if<ModuleDef>(&d)) {
      os << (mod->is_family ? "family " : "module ") << mod->name << " = coker "
         << print_free_spec(mod->source_twists) << " -> " << print_free_spec(mod->target_twists)
         << " by " << print_matrix(matrix_rows(mod->map)) << ";\n";
    } else if (const auto* g = std::get_if<GrassDef>(&d)) {
      os << "grasspoint " << g->name << " = grass r=" << g->r << " d=" << g->d << " "
         << print_matrix(g->entries) << ";\n";
    }
  }
  return os.str();
}

}  // namespace quotkit::qk
