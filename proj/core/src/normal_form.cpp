#include "ratmc/normal_form.hpp"

#include <algorithm>
#include <limits>

namespace ratmc {

namespace {

Formula push(const Formula& f, bool positive);

Program normalize_program(const Program& p) {
  switch (p.kind()) {
    case ProgramKind::Atomic: return p;
    case ProgramKind::Converse: return Program::converse(normalize_program(p.child()));
    case ProgramKind::Union: return Program::choice(normalize_program(p.child(0)), normalize_program(p.child(1)));
    case ProgramKind::Compose:
      return Program::sequence(normalize_program(p.child(0)), normalize_program(p.child(1)));
    case ProgramKind::Test: return Program::test(push(p.formula(), true));
    case ProgramKind::Arrow: return Program::arrow(push(p.formula(), true));
  }
  return p;
}

Formula push(const Formula& f, bool positive) {
  using K = FormulaKind;
  switch (f.kind()) {
    case K::Atom:
    case K::Nominal:
    case K::Letter: return positive ? f : Formula::negation(f);
    case K::True: return positive ? f : Formula::bottom();
    case K::False: return positive ? f : Formula::top();
    case K::Not: return push(f.child(), !positive);
    case K::And: {
      Formula a = push(f.child(0), positive);
      Formula b = push(f.child(1), positive);
      return positive ? Formula::conjunction(a, b) : Formula::disjunction(a, b);
    }
    case K::Or: {
      Formula a = push(f.child(0), positive);
      Formula b = push(f.child(1), positive);
      return positive ? Formula::disjunction(a, b) : Formula::conjunction(a, b);
    }
    case K::Implies: {
      Formula a = push(f.child(0), !positive);
      Formula b = push(f.child(1), positive);
      return positive ? Formula::disjunction(a, b) : Formula::conjunction(a, b);
    }
    case K::Diamond:
      return positive ? Formula::diamond(f.rel(), push(f.child(), true)) : Formula::box(f.rel(), push(f.child(), false));
    case K::Box:
      return positive ? Formula::box(f.rel(), push(f.child(), true)) : Formula::diamond(f.rel(), push(f.child(), false));
    case K::UnivDiamond:
      return positive ? Formula::univ_diamond(push(f.child(), true)) : Formula::univ_box(push(f.child(), false));
    case K::UnivBox:
      return positive ? Formula::univ_box(push(f.child(), true)) : Formula::univ_diamond(push(f.child(), false));
    case K::DiffDiamond:
      return positive ? Formula::diff_diamond(push(f.child(), true)) : Formula::diff_box(push(f.child(), false));
    case K::DiffBox:
      return positive ? Formula::diff_box(push(f.child(), true)) : Formula::diff_diamond(push(f.child(), false));
    case K::At:
      // The nominal denotes exactly one state, so ~@i.f and @i.~f coincide.
      return Formula::at(f.name(), push(f.child(), positive));
    case K::Count: {
      const Formula body = push(f.child(), true);
      const Comparison cmp = f.comparison();
      if (positive) return Formula::count(f.rel(), cmp, body);
      if (cmp.kind == Comparison::Kind::AtLeast) {
        if (cmp.bound == 0) return Formula::bottom();
        return Formula::count(f.rel(), Comparison::at_most(cmp.bound - 1), body);
      }
      if (cmp.kind == Comparison::Kind::AtMost && cmp.bound < std::numeric_limits<std::uint64_t>::max()) {
        return Formula::count(f.rel(), Comparison::at_least(cmp.bound + 1), body);
      }
      return Formula::negation(Formula::count(f.rel(), cmp, body));
    }
    case K::ProgramDiamond:
    case K::ProgramBox: {
      const Program p = normalize_program(f.program());
      const Formula body = push(f.child(), true);
      Formula inner = f.kind() == K::ProgramDiamond ? Formula::program_diamond(p, body) : Formula::program_box(p, body);
      return positive ? inner : Formula::negation(inner);
    }
  }
  return f;
}

bool is_opaque(FormulaKind k) {
  return k == FormulaKind::Count || k == FormulaKind::ProgramDiamond || k == FormulaKind::ProgramBox;
}

bool is_literal_base(FormulaKind k) {
  return k == FormulaKind::Atom || k == FormulaKind::Nominal || k == FormulaKind::Letter;
}

bool program_is_nnf(const Program& p) {
  switch (p.kind()) {
    case ProgramKind::Atomic: return true;
    case ProgramKind::Converse: return program_is_nnf(p.child());
    case ProgramKind::Union:
    case ProgramKind::Compose: return program_is_nnf(p.child(0)) && program_is_nnf(p.child(1));
    case ProgramKind::Test:
    case ProgramKind::Arrow: return is_nnf(p.formula());
  }
  return true;
}

bool is_diamond_like(FormulaKind k) {
  return k == FormulaKind::Diamond || k == FormulaKind::UnivDiamond || k == FormulaKind::DiffDiamond;
}

bool is_box_like(FormulaKind k) {
  return k == FormulaKind::Box || k == FormulaKind::UnivBox || k == FormulaKind::DiffBox || k == FormulaKind::At;
}

std::size_t rank_of(const Formula& f) {
  const auto k = f.kind();
  if (k == FormulaKind::And || k == FormulaKind::Or) return std::max(rank_of(f.child(0)), rank_of(f.child(1)));
  if (is_diamond_like(k) || is_box_like(k)) return rank_of(f.child()) + 1;
  return 0;
}

AlternatingRanks ranks_of(const Formula& f) {
  const auto k = f.kind();
  if (k == FormulaKind::And || k == FormulaKind::Or) {
    const auto a = ranks_of(f.child(0));
    const auto b = ranks_of(f.child(1));
    return {std::max(a.box, b.box), std::max(a.diamond, b.diamond)};
  }
  if (is_diamond_like(k)) {
    const auto c = ranks_of(f.child());
    return {c.box, c.box + 1};
  }
  if (is_box_like(k)) {
    const auto c = ranks_of(f.child());
    return {c.diamond + 1, c.diamond};
  }
  return {};
}

}  // namespace

Formula nnf(const Formula& f) { return push(f, true); }

bool is_nnf(const Formula& f) {
  const auto k = f.kind();
  if (k == FormulaKind::Implies) return false;
  if (k == FormulaKind::Not) {
    const auto ck = f.child().kind();
    if (is_literal_base(ck)) return true;
    return is_opaque(ck) && is_nnf(f.child());
  }
  for (std::size_t i = 0; i < f.arity(); ++i) {
    if (!is_nnf(f.child(i))) return false;
  }
  if (k == FormulaKind::ProgramDiamond || k == FormulaKind::ProgramBox) return program_is_nnf(f.program());
  return true;
}

std::size_t modal_rank(const Formula& f) { return rank_of(nnf(f)); }

AlternatingRanks alternating_ranks(const Formula& f) { return ranks_of(nnf(f)); }

std::size_t alternation_rank(const Formula& f) {
  const auto r = alternating_ranks(f);
  return std::max(r.box, r.diamond);
}

}  // namespace ratmc
