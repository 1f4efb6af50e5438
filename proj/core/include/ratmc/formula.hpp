#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace ratmc {

/// Reference to a named relation, forward or inverse (R vs R~).
struct RelRef {
  std::string name;
  bool inverse = false;

  friend bool operator==(const RelRef&, const RelRef&) = default;
  std::string to_string() const { return inverse ? name + "~" : name; }
};

/// Successor-count constraint of a counting modality.
struct Comparison {
  enum class Kind { AtLeast, AtMost, Exactly, Infinite };
  Kind kind = Kind::AtLeast;
  std::uint64_t bound = 0;

  static Comparison at_least(std::uint64_t k) { return {Kind::AtLeast, k}; }
  static Comparison at_most(std::uint64_t k) { return {Kind::AtMost, k}; }
  static Comparison exactly(std::uint64_t k) { return {Kind::Exactly, k}; }
  static Comparison infinitely_many() { return {Kind::Infinite, 0}; }

  friend bool operator==(const Comparison&, const Comparison&) = default;
  std::string to_string() const;
};

enum class FormulaKind {
  Atom,
  Nominal,
  Letter,  // l_a: true exactly at the one-letter word a
  True,
  False,
  Not,
  And,
  Or,
  Implies,
  Diamond,
  Box,
  UnivDiamond,
  UnivBox,
  DiffDiamond,
  DiffBox,
  At,
  Count,
  ProgramDiamond,
  ProgramBox,
};

enum class ProgramKind { Atomic, Converse, Union, Compose, Test, Arrow };

struct FormulaNode;
struct ProgramNode;
class Program;

/// Immutable, structurally shared formula tree.
class Formula {
 public:
  static Formula atom(std::string name);
  static Formula nominal(std::string name);
  static Formula letter(char a);
  static Formula top();
  static Formula bottom();
  static Formula negation(Formula f);
  static Formula conjunction(Formula a, Formula b);
  static Formula disjunction(Formula a, Formula b);
  static Formula implication(Formula a, Formula b);
  static Formula diamond(RelRef rel, Formula f);
  static Formula box(RelRef rel, Formula f);
  static Formula univ_diamond(Formula f);
  static Formula univ_box(Formula f);
  static Formula diff_diamond(Formula f);
  static Formula diff_box(Formula f);
  static Formula at(std::string nominal, Formula f);
  static Formula count(RelRef rel, Comparison cmp, Formula f);
  static Formula program_diamond(Program p, Formula f);
  static Formula program_box(Program p, Formula f);

  FormulaKind kind() const;
  /// Atom, nominal, and @ nominal names.
  const std::string& name() const;
  char letter() const;
  const RelRef& rel() const;
  const Comparison& comparison() const;
  std::size_t arity() const;
  const Formula& child(std::size_t i = 0) const;
  const Program& program() const;

  /// Node count, programs included.
  std::size_t size() const;

  friend bool operator==(const Formula& a, const Formula& b);

 private:
  explicit Formula(std::shared_ptr<const FormulaNode> node) : node_(std::move(node)) {}
  std::shared_ptr<const FormulaNode> node_;
};

/// Immutable program tree of word-based PDL.
class Program {
 public:
  static Program atomic(RelRef rel);
  static Program converse(Program p);
  static Program choice(Program a, Program b);
  static Program sequence(Program a, Program b);
  static Program test(Formula f);
  static Program arrow(Formula f);

  ProgramKind kind() const;
  const RelRef& rel() const;
  const Program& child(std::size_t i = 0) const;
  const Formula& formula() const;

  std::size_t size() const;

  friend bool operator==(const Program& a, const Program& b);

 private:
  explicit Program(std::shared_ptr<const ProgramNode> node) : node_(std::move(node)) {}
  std::shared_ptr<const ProgramNode> node_;
};

/// Concrete syntax accepted by parse_formula; parse(to_string(f)) == f.
std::string to_string(const Formula& f);
std::string to_string(const Program& p);

/// Short kind label ("diamond", "and", ...) for statistics output.
const char* kind_name(FormulaKind kind);

/// True if a counting modality occurs anywhere in `f` (including inside programs).
bool contains_count(const Formula& f);

}  // namespace ratmc
