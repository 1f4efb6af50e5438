#pragma once

#include <optional>
#include <set>
#include <string>
#include <string_view>

#include "ratmc/alphabet.hpp"
#include "ratmc/formula.hpp"

namespace ratmc {

/// Names a formula may refer to. With `open` set, undeclared names are
/// accepted (useful for formulas parsed before a model is at hand).
struct FormulaSignature {
  std::optional<Alphabet> alphabet;
  std::set<std::string> relations;
  std::set<std::string> propositions;
  std::set<std::string> nominals;
  bool open = false;
};

/// Parses the concrete formula syntax:
///
///   f    := true | false | IDENT | #IDENT | lit(CHAR)
///         | ~f | f & f | f | f | f -> f
///         | <rel>f | [rel]f | <U>f | [U]f | <D>f | [D]f
///         | @IDENT.f | count(rel, cmp) f | <<prog>>f | [[prog]]f
///   rel  := IDENT | IDENT~
///   cmp  := >=NAT | <=NAT | =NAT | inf
///   prog := rel | prog' | prog + prog | prog ; prog | f? | arrow(f)
///
/// Precedence from loosest: `->` (right associative), `|`, `&`, prefix
/// operators. In programs: `+`, `;`, postfix `'`.
///
/// Throws ParseError (with column) on syntax errors or undeclared names, and
/// UndecidableConstruct for the state binder `down x. f`.
Formula parse_formula(std::string_view text, const FormulaSignature& signature);

}  // namespace ratmc
