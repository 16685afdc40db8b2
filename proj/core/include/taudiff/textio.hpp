#pragma once

// Text formats: polynomial expressions, problem files and printed
// presentations.
//
// Expression grammar (no implicit multiplication):
//   expr  := term (('+' | '-') term)*
//   term  := unary (('*' | '/') unary)*
//   unary := '-' unary | power
//   power := atom ('^' digits)?
//   atom  := digits | identifier | '(' expr ')'
// The right operand of '/' must evaluate to a nonzero element of K.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "taudiff/geometry.hpp"

namespace taudiff {

// line and column locate the start of text inside a larger document; they
// only affect error messages.
Poly parse_poly(std::string_view text, const RingCtxPtr& ctx, int line = 1, int column = 1);
FieldElem parse_field_elem(std::string_view text, const BaseFieldPtr& field, int line = 1, int column = 1);
// Comma-separated list of field elements, as in "1, t".
std::vector<FieldElem> parse_point(std::string_view text, const BaseFieldPtr& field, int line = 1, int column = 1);

struct MorphismDecl {
  std::string name;
  std::string source;  // "X" or the name of an earlier morphism, whose target is used
  PresentedAlgebra target;
  std::vector<Poly> images;  // one per target variable, in the source ring
};

struct Assertions {
  std::optional<bool> prime;
  std::optional<bool> smooth;
  std::optional<std::size_t> dim;
};

struct ProblemFile {
  BaseFieldPtr field;
  PresentedAlgebra algebra;
  std::vector<std::vector<FieldElem>> points;
  std::vector<MorphismDecl> morphisms;
  Assertions assertions;

  const RingCtxPtr& ring() const noexcept { return algebra.ctx(); }
  const MorphismDecl* find_morphism(std::string_view name) const;
  const PresentedAlgebra& source_of(const MorphismDecl& m) const;
  Morphism morphism(const MorphismDecl& m) const;
};

struct ParseOptions {
  std::optional<MonomialOrder> order;  // overrides the file
  GroebnerLimits limits;
};

ProblemFile parse_problem(std::string_view text, const ParseOptions& options = {});
ProblemFile load_problem(const std::string& path, const ParseOptions& options = {});
// Canonical text of a problem; parse_problem accepts it back.
std::string print_problem(const ProblemFile& p);

// "free: tau_e, tau_x; relations: (-1, 2*x)".  Canonical printing scales each
// row to a monic leading entry, drops zero and repeated rows and sorts them.
std::string print_presentation(const ModulePresentation& m, bool canonical = false);
ModulePresentation parse_presentation(std::string_view text, const PresentedAlgebra& algebra);

// "<label>: x, y; ideal: g1, g2".  Canonical printing lists the reduced
// Groebner basis.
std::string print_variety(std::string_view label, const PresentedAlgebra& v, bool canonical = false);
std::string print_cone(const ConeAlgebra& cone, bool canonical = false);
std::string print_slice(const SlicedVariety& v, bool canonical = false);

struct ParsedVariety {
  std::string label;
  PresentedAlgebra algebra;
};
ParsedVariety parse_variety(std::string_view text, const BaseFieldPtr& field,
                            MonomialOrder order = MonomialOrder::degrevlex);

}  // namespace taudiff
