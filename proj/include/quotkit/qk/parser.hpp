// Text grammar for quotkit input documents (.qk files).
//
//   ring x0..x2 over y1..y2;
//   poly f = 3/2*x0^2*x1 - x2;
//   matrix A = [[1, 0], [x0, 1]];
//   module M = coker S(-1)^2 -> S^1 by [[x0, x1]];
//   family F = coker S(-1)^1 -> S^1 by [[x0 - y1*x1]];
//   grasspoint G = grass r=2 d=1 [[1, 2]];
//
// Whitespace-insensitive; '#' starts a line comment. parse() and print()
// round-trip on canonical forms.
#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "quotkit/flattening.hpp"
#include "quotkit/matrix.hpp"
#include "quotkit/polymatrix.hpp"
#include "quotkit/presentation.hpp"
#include "quotkit/ratfunc.hpp"

namespace quotkit::qk {

struct ParseError : std::runtime_error {
  int line, column;
  ParseError(const std::string& what, int line_, int col_)
      : std::runtime_error(what + " at line " + std::to_string(line_) + ", column " +
                           std::to_string(col_)),
        line(line_),
        column(col_) {}
};

struct PolyDef {
  std::string name;
  MultiPoly value;
};

// Matrix entries are stored as numerator/denominator pairs so that matrices
// over Q(t) (for the valuative-limit command) share the grammar. Constant
// denominators are folded into the numerator at parse time.
struct MatrixDef {
  std::string name;
  std::vector<std::vector<std::pair<MultiPoly, MultiPoly>>> entries;

  int rows() const { return static_cast<int>(entries.size()); }
  int cols() const { return entries.empty() ? 0 : static_cast<int>(entries[0].size()); }

  // Requires every denominator to be 1.
  PolyMatrix as_polymatrix() const;
  // Requires constant entries.
  Mat<Rational> as_rational_matrix() const;
  // Requires a univariate ring (the t of Q(t)).
  Mat<RationalFunction> as_ratfunc_matrix() const;
};

// Coefficient vector of a polynomial in a univariate ring.
UPoly to_upoly(const MultiPoly& p);

// module/family M = coker F1 -> F0 by map; columns of map generate the
// relation submodule of F0.
struct ModuleDef {
  std::string name;
  bool is_family = false;
  std::vector<int> source_twists;  // F1
  std::vector<int> target_twists;  // F0
  PolyMatrix map;                  // target rank x source rank

  Presentation presentation(const RingPtr& fiber_ring) const;
  FamilyPresentation family_presentation() const;
};

struct GrassDef {
  std::string name;
  int r = 0, d = 0;
  std::vector<std::vector<MultiPoly>> entries;  // d rows, r columns
};

using Decl = std::variant<PolyDef, MatrixDef, ModuleDef, GrassDef>;

struct InputDocument {
  std::vector<std::string> fiber_vars;
  std::vector<std::string> base_vars;
  RingPtr ring;  // family ring over all declared variables
  std::vector<Decl> decls;

  const PolyDef* find_poly(const std::string& name) const;
  const MatrixDef* find_matrix(const std::string& name) const;
  const ModuleDef* find_module(const std::string& name) const;
  const GrassDef* find_grass(const std::string& name) const;

  // The fiber-only ring (memoized by Ring, shared across uses).
  RingPtr fiber_ring() const;
};

InputDocument parse(const std::string& text);

// Canonical serialization; parse(print(doc)) reproduces doc.
std::string print(const InputDocument& doc);

}  // namespace quotkit::qk
