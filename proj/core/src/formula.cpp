#include "ratmc/formula.hpp"

#include <optional>
#include <sstream>

#include "ratmc/error.hpp"

namespace ratmc {

struct FormulaNode {
  FormulaKind kind;
  std::string name{};
  char letter = 0;
  RelRef rel{};
  Comparison cmp{};
  std::vector<Formula> children{};
  std::optional<Program> program{};
};

struct ProgramNode {
  ProgramKind kind;
  RelRef rel{};
  std::vector<Program> children{};
  std::optional<Formula> formula{};
};

std::string Comparison::to_string() const {
  switch (kind) {
    case Kind::AtLeast: return ">=" + std::to_string(bound);
    case Kind::AtMost: return "<=" + std::to_string(bound);
    case Kind::Exactly: return "=" + std::to_string(bound);
    case Kind::Infinite: return "inf";
  }
  return "?";
}

// Factories -------------------------------------------------------------

#define RATMC_MAKE_FORMULA(...) Formula(std::make_shared<const FormulaNode>(FormulaNode{__VA_ARGS__}))

Formula Formula::atom(std::string name) { return RATMC_MAKE_FORMULA(FormulaKind::Atom, std::move(name)); }
Formula Formula::nominal(std::string name) { return RATMC_MAKE_FORMULA(FormulaKind::Nominal, std::move(name)); }
Formula Formula::letter(char a) { return RATMC_MAKE_FORMULA(FormulaKind::Letter, {}, a); }
Formula Formula::top() { return RATMC_MAKE_FORMULA(FormulaKind::True); }
Formula Formula::bottom() { return RATMC_MAKE_FORMULA(FormulaKind::False); }
Formula Formula::negation(Formula f) { return RATMC_MAKE_FORMULA(FormulaKind::Not, {}, 0, {}, {}, {std::move(f)}); }
Formula Formula::conjunction(Formula a, Formula b) {
  return RATMC_MAKE_FORMULA(FormulaKind::And, {}, 0, {}, {}, {std::move(a), std::move(b)});
}
Formula Formula::disjunction(Formula a, Formula b) {
  return RATMC_MAKE_FORMULA(FormulaKind::Or, {}, 0, {}, {}, {std::move(a), std::move(b)});
}
Formula Formula::implication(Formula a, Formula b) {
  return RATMC_MAKE_FORMULA(FormulaKind::Implies, {}, 0, {}, {}, {std::move(a), std::move(b)});
}
Formula Formula::diamond(RelRef rel, Formula f) {
  return RATMC_MAKE_FORMULA(FormulaKind::Diamond, {}, 0, std::move(rel), {}, {std::move(f)});
}
Formula Formula::box(RelRef rel, Formula f) {
  return RATMC_MAKE_FORMULA(FormulaKind::Box, {}, 0, std::move(rel), {}, {std::move(f)});
}
Formula Formula::univ_diamond(Formula f) {
  return RATMC_MAKE_FORMULA(FormulaKind::UnivDiamond, {}, 0, {}, {}, {std::move(f)});
}
Formula Formula::univ_box(Formula f) { return RATMC_MAKE_FORMULA(FormulaKind::UnivBox, {}, 0, {}, {}, {std::move(f)}); }
Formula Formula::diff_diamond(Formula f) {
  return RATMC_MAKE_FORMULA(FormulaKind::DiffDiamond, {}, 0, {}, {}, {std::move(f)});
}
Formula Formula::diff_box(Formula f) { return RATMC_MAKE_FORMULA(FormulaKind::DiffBox, {}, 0, {}, {}, {std::move(f)}); }
Formula Formula::at(std::string nominal, Formula f) {
  return RATMC_MAKE_FORMULA(FormulaKind::At, std::move(nominal), 0, {}, {}, {std::move(f)});
}
Formula Formula::count(RelRef rel, Comparison cmp, Formula f) {
  return RATMC_MAKE_FORMULA(FormulaKind::Count, {}, 0, std::move(rel), cmp, {std::move(f)});
}
Formula Formula::program_diamond(Program p, Formula f) {
  return RATMC_MAKE_FORMULA(FormulaKind::ProgramDiamond, {}, 0, {}, {}, {std::move(f)}, std::move(p));
}
Formula Formula::program_box(Program p, Formula f) {
  return RATMC_MAKE_FORMULA(FormulaKind::ProgramBox, {}, 0, {}, {}, {std::move(f)}, std::move(p));
}

#undef RATMC_MAKE_FORMULA

FormulaKind Formula::kind() const { return node_->kind; }
const std::string& Formula::name() const { return node_->name; }
char Formula::letter() const { return node_->letter; }
const RelRef& Formula::rel() const { return node_->rel; }
const Comparison& Formula::comparison() const { return node_->cmp; }
std::size_t Formula::arity() const { return node_->children.size(); }
const Formula& Formula::child(std::size_t i) const { return node_->children.at(i); }

const Program& Formula::program() const {
  if (!node_->program) throw Error("formula node has no program");
  return *node_->program;
}

std::size_t Formula::size() const {
  std::size_t n = 1;
  for (const auto& c : node_->children) n += c.size();
  if (node_->program) n += node_->program->size();
  return n;
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  return x.kind == y.kind && x.name == y.name && x.letter == y.letter && x.rel == y.rel && x.cmp == y.cmp &&
         x.children == y.children && x.program == y.program;
}

#define RATMC_MAKE_PROGRAM(...) Program(std::make_shared<const ProgramNode>(ProgramNode{__VA_ARGS__}))

Program Program::atomic(RelRef rel) { return RATMC_MAKE_PROGRAM(ProgramKind::Atomic, std::move(rel)); }
Program Program::converse(Program p) { return RATMC_MAKE_PROGRAM(ProgramKind::Converse, {}, {std::move(p)}); }
Program Program::choice(Program a, Program b) {
  return RATMC_MAKE_PROGRAM(ProgramKind::Union, {}, {std::move(a), std::move(b)});
}
Program Program::sequence(Program a, Program b) {
  return RATMC_MAKE_PROGRAM(ProgramKind::Compose, {}, {std::move(a), std::move(b)});
}
Program Program::test(Formula f) { return RATMC_MAKE_PROGRAM(ProgramKind::Test, {}, {}, std::move(f)); }
Program Program::arrow(Formula f) { return RATMC_MAKE_PROGRAM(ProgramKind::Arrow, {}, {}, std::move(f)); }

#undef RATMC_MAKE_PROGRAM

ProgramKind Program::kind() const { return node_->kind; }
const RelRef& Program::rel() const { return node_->rel; }
const Program& Program::child(std::size_t i) const { return node_->children.at(i); }

const Formula& Program::formula() const {
  if (!node_->formula) throw Error("program node has no formula");
  return *node_->formula;
}

std::size_t Program::size() const {
  std::size_t n = 1;
  for (const auto& c : node_->children) n += c.size();
  if (node_->formula) n += node_->formula->size();
  return n;
}

bool operator==(const Program& a, const Program& b) {
  if (a.node_ == b.node_) return true;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  return x.kind == y.kind && x.rel == y.rel && x.children == y.children && x.formula == y.formula;
}

// Printing --------------------------------------------------------------

namespace {

void print(std::ostream& out, const Formula& f);

void print(std::ostream& out, const Program& p) {
  switch (p.kind()) {
    case ProgramKind::Atomic: out << p.rel().to_string(); return;
    case ProgramKind::Converse: print(out, p.child()); out << '\''; return;
    case ProgramKind::Union:
    case ProgramKind::Compose:
      out << '(';
      print(out, p.child(0));
      out << (p.kind() == ProgramKind::Union ? " + " : " ; ");
      print(out, p.child(1));
      out << ')';
      return;
    case ProgramKind::Test: print(out, p.formula()); out << '?'; return;
    case ProgramKind::Arrow: out << "arrow("; print(out, p.formula()); out << ')'; return;
  }
}

void print_binary(std::ostream& out, const Formula& f, const char* op) {
  out << '(';
  print(out, f.child(0));
  out << ' ' << op << ' ';
  print(out, f.child(1));
  out << ')';
}

void print(std::ostream& out, const Formula& f) {
  switch (f.kind()) {
    case FormulaKind::Atom: out << f.name(); return;
    case FormulaKind::Nominal: out << '#' << f.name(); return;
    case FormulaKind::Letter: out << "lit(" << f.letter() << ')'; return;
    case FormulaKind::True: out << "true"; return;
    case FormulaKind::False: out << "false"; return;
    case FormulaKind::Not: out << '~'; break;
    case FormulaKind::And: print_binary(out, f, "&"); return;
    case FormulaKind::Or: print_binary(out, f, "|"); return;
    case FormulaKind::Implies: print_binary(out, f, "->"); return;
    case FormulaKind::Diamond: out << '<' << f.rel().to_string() << '>'; break;
    case FormulaKind::Box: out << '[' << f.rel().to_string() << ']'; break;
    case FormulaKind::UnivDiamond: out << "<U>"; break;
    case FormulaKind::UnivBox: out << "[U]"; break;
    case FormulaKind::DiffDiamond: out << "<D>"; break;
    case FormulaKind::DiffBox: out << "[D]"; break;
    case FormulaKind::At: out << '@' << f.name() << '.'; break;
    case FormulaKind::Count:
      out << "count(" << f.rel().to_string() << ',' << f.comparison().to_string() << ") ";
      break;
    case FormulaKind::ProgramDiamond: out << "<<"; print(out, f.program()); out << ">>"; break;
    case FormulaKind::ProgramBox: out << "[["; print(out, f.program()); out << "]]"; break;
  }
  // Prefix operators: the operand follows directly.
  print(out, f.child());
}

}  // namespace

std::string to_string(const Formula& f) {
  std::ostringstream out;
  print(out, f);
  return out.str();
}

std::string to_string(const Program& p) {
  std::ostringstream out;
  print(out, p);
  return out.str();
}

const char* kind_name(FormulaKind kind) {
  switch (kind) {
    case FormulaKind::Atom: return "atom";
    case FormulaKind::Nominal: return "nominal";
    case FormulaKind::Letter: return "letter";
    case FormulaKind::True: return "true";
    case FormulaKind::False: return "false";
    case FormulaKind::Not: return "not";
    case FormulaKind::And: return "and";
    case FormulaKind::Or: return "or";
    case FormulaKind::Implies: return "implies";
    case FormulaKind::Diamond: return "diamond";
    case FormulaKind::Box: return "box";
    case FormulaKind::UnivDiamond: return "univ_diamond";
    case FormulaKind::UnivBox: return "univ_box";
    case FormulaKind::DiffDiamond: return "diff_diamond";
    case FormulaKind::DiffBox: return "diff_box";
    case FormulaKind::At: return "at";
    case FormulaKind::Count: return "count";
    case FormulaKind::ProgramDiamond: return "program_diamond";
    case FormulaKind::ProgramBox: return "program_box";
  }
  return "?";
}

namespace {

bool program_contains_count(const Program& p) {
  switch (p.kind()) {
    case ProgramKind::Atomic: return false;
    case ProgramKind::Converse: return program_contains_count(p.child());
    case ProgramKind::Union:
    case ProgramKind::Compose: return program_contains_count(p.child(0)) || program_contains_count(p.child(1));
    case ProgramKind::Test:
    case ProgramKind::Arrow: return contains_count(p.formula());
  }
  return false;
}

}  // namespace

bool contains_count(const Formula& f) {
  if (f.kind() == FormulaKind::Count) return true;
  for (std::size_t i = 0; i < f.arity(); ++i) {
    if (contains_count(f.child(i))) return true;
  }
  if (f.kind() == FormulaKind::ProgramDiamond || f.kind() == FormulaKind::ProgramBox) {
    return program_contains_count(f.program());
  }
  return false;
}

}  // namespace ratmc
