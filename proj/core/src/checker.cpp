#include "ratmc/checker.hpp"

#include <chrono>
#include <sstream>

#include "ratmc/automata.hpp"
#include "ratmc/automaton_io.hpp"
#include "ratmc/error.hpp"

namespace ratmc {

std::string StepStats::to_string() const {
  std::ostringstream out;
  out << kind << " states=" << states << " transitions=" << transitions;
  if (has_product) {
    out << " relation_transitions=" << relation_transitions << " operand_states=" << operand_states
        << " operand_transitions=" << operand_transitions << " product_states=" << product_states
        << " product_transitions=" << product_transitions;
  }
  if (cached) out << " cached";
  out << " ms=" << millis << " formula=" << formula;
  return out.str();
}

Checker::Checker(RationalKripkeModel model, CheckerOptions options)
    : model_(std::move(model)), options_(options) {}

Nfa Checker::global_check(const Formula& f) {
  if (contains_count(f)) {
    throw UnsupportedFragment(
        "counting modalities support local checking only; whether they preserve regularity is open (in '" +
        to_string(f) + "')");
  }
  return eval(f);
}

std::optional<std::string> Checker::sat_check(const Formula& f) { return shortest_word(global_check(f)); }

void Checker::check_state(std::string_view state) const {
  for (char c : state) {
    if (!model_.alphabet.contains(c)) {
      throw InputError("state " + format_word(state) + " uses " + describe_symbol(c) + ", which is not in the alphabet");
    }
  }
  if (!accepts(model_.states, state)) throw InputError("word " + format_word(state) + " is not a state of the model");
}

bool Checker::local_check(std::string_view state, const Formula& f) {
  check_state(state);
  return local_eval(state, f);
}

bool Checker::local_eval(std::string_view state, const Formula& f) {
  if (!contains_count(f)) return accepts(eval(f), state);
  switch (f.kind()) {
    case FormulaKind::Not:
      return !local_eval(state, f.child());
    case FormulaKind::And:
      return local_eval(state, f.child(0)) && local_eval(state, f.child(1));
    case FormulaKind::Or:
      return local_eval(state, f.child(0)) || local_eval(state, f.child(1));
    case FormulaKind::Implies:
      return !local_eval(state, f.child(0)) || local_eval(state, f.child(1));
    case FormulaKind::Count:
      if (!contains_count(f.child())) return count_holds(state, f);
      [[fallthrough]];
    default:
      throw UnsupportedFragment("outside the C0_t fragment: a counting modality occurs under a modal operator in '" +
                                to_string(f) + "'");
  }
}

bool Checker::count_holds(std::string_view state, const Formula& f) {
  const Transducer& t = relation_of(f.rel());
  // {v | state R v} as the preimage of {state} under the inverse relation.
  const Nfa successors = preimage(inverse(t), Nfa::single_word(model_.alphabet, state));
  const Cardinality n = count_words(trim(intersection(successors, eval(f.child()))));
  const Comparison& cmp = f.comparison();
  switch (cmp.kind) {
    case Comparison::Kind::AtLeast:
      return n.at_least(cmp.bound);
    case Comparison::Kind::AtMost:
      return n.is_finite() && n.count() <= cmp.bound;
    case Comparison::Kind::Exactly:
      return n.is_finite() && n.count() == cmp.bound;
    case Comparison::Kind::Infinite:
      return n.is_infinite();
  }
  return false;
}

const Transducer& Checker::relation_of(const RelRef& rel) {
  const Transducer& t = model_.relation(rel.name);
  if (!rel.inverse) return t;
  auto it = inverse_relations_.find(rel.name);
  if (it == inverse_relations_.end()) it = inverse_relations_.emplace(rel.name, inverse(t)).first;
  return it->second;
}

Transducer Checker::eval_program(const Program& p) {
  switch (p.kind()) {
    case ProgramKind::Atomic:
      return relation_of(p.rel());
    case ProgramKind::Converse:
      return inverse(eval_program(p.child()));
    case ProgramKind::Union:
      return t_union(eval_program(p.child(0)), eval_program(p.child(1)));
    case ProgramKind::Compose:
      return compose(eval_program(p.child(0)), eval_program(p.child(1)));
    case ProgramKind::Test:
      return test_relation(global_check(p.formula()));
    case ProgramKind::Arrow:
      return arrow_relation(global_check(p.formula()));
  }
  throw Error("unknown program kind");
}

Nfa Checker::eval(const Formula& f) {
  const auto start = std::chrono::steady_clock::now();
  const std::string key = to_string(f);
  StepStats step;
  step.kind = kind_name(f.kind());
  step.formula = key;

  std::optional<Nfa> result;
  if (options_.use_cache) {
    if (const auto it = cache_.find(key); it != cache_.end()) {
      result = it->second;
      step.cached = true;
    }
  }
  if (!result) {
    result = compute(f, step);
    if (options_.use_cache) cache_.insert_or_assign(key, *result);
  }
  step.states = result->num_states();
  step.transitions = result->num_transitions();
  step.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  stats_.push_back(std::move(step));
  return *result;
}

Nfa Checker::complement_in_states(const Nfa& a) const { return trim(complement(a, model_.states)); }

Nfa Checker::diamond_of(const Transducer& t, const Nfa& arg, StepStats& step) {
  const Nfa operand = remove_epsilon(arg);
  const Nfa product = synchronized_product(t, operand);
  step.has_product = true;
  step.relation_transitions = t.num_transitions();
  step.operand_states = operand.num_states();
  step.operand_transitions = operand.num_transitions();
  step.product_states = product.num_states();
  step.product_transitions = product.num_transitions();
  return trim(intersection(trim(remove_epsilon(trim(product))), model_.states));
}

Nfa Checker::compute(const Formula& f, StepStats& step) {
  const Nfa& states = model_.states;
  const Alphabet& sigma = model_.alphabet;
  const Nfa none = Nfa::empty_language(sigma);
  switch (f.kind()) {
    case FormulaKind::Atom:
      return trim(intersection(model_.proposition(f.name()), states));
    case FormulaKind::Nominal:
      return trim(intersection(Nfa::single_word(sigma, model_.nominal(f.name())), states));
    case FormulaKind::Letter:
      if (!sigma.contains(f.letter())) {
        throw InputError("letter " + describe_symbol(f.letter()) + " is not in the model alphabet");
      }
      return trim(intersection(Nfa::single_word(sigma, std::string(1, f.letter())), states));
    case FormulaKind::True:
      return trim(states);
    case FormulaKind::False:
      return none;
    case FormulaKind::Not:
      return complement_in_states(eval(f.child()));
    case FormulaKind::And:
    case FormulaKind::Or:
    case FormulaKind::Implies: {
      // Children in order, so statistics are deterministic.
      const Nfa left = eval(f.child(0));
      const Nfa right = eval(f.child(1));
      if (f.kind() == FormulaKind::And) return trim(intersection(left, right));
      if (f.kind() == FormulaKind::Or) return trim(union_of(left, right));
      return trim(union_of(complement_in_states(left), right));
    }
    case FormulaKind::Diamond:
      return diamond_of(relation_of(f.rel()), eval(f.child()), step);
    case FormulaKind::Box:
      return complement_in_states(diamond_of(relation_of(f.rel()), complement_in_states(eval(f.child())), step));
    case FormulaKind::UnivDiamond:
      return is_empty(eval(f.child())) ? none : trim(states);
    case FormulaKind::UnivBox:
      return is_subset(states, eval(f.child())) ? trim(states) : none;
    case FormulaKind::DiffDiamond:
    case FormulaKind::DiffBox: {
      if (!difference_) difference_ = difference_relation(sigma);
      if (f.kind() == FormulaKind::DiffDiamond) return diamond_of(*difference_, eval(f.child()), step);
      return complement_in_states(diamond_of(*difference_, complement_in_states(eval(f.child())), step));
    }
    case FormulaKind::At:
      return eval(Formula::univ_box(Formula::implication(Formula::nominal(f.name()), f.child())));
    case FormulaKind::Count:
      throw UnsupportedFragment("counting modalities support local checking only");
    case FormulaKind::ProgramDiamond:
      return diamond_of(eval_program(f.program()), eval(f.child()), step);
    case FormulaKind::ProgramBox:
      return complement_in_states(diamond_of(eval_program(f.program()), complement_in_states(eval(f.child())), step));
  }
  throw Error("unknown formula kind");
}

Nfa global_check(const RationalKripkeModel& m, const Formula& f) { return Checker(m).global_check(f); }

bool local_check(const RationalKripkeModel& m, std::string_view state, const Formula& f) {
  return Checker(m).local_check(state, f);
}

std::optional<std::string> sat_check(const RationalKripkeModel& m, const Formula& f) { return Checker(m).sat_check(f); }

Transducer eval_program(const RationalKripkeModel& m, const Program& p) { return Checker(m).eval_program(p); }

bool regex_equiv(const StarFreeRegex& e1, const StarFreeRegex& e2, const Alphabet& alphabet) {
  Checker checker(free_word_model(alphabet));
  return is_equivalent(checker.global_check(translate_regex(e1)), checker.global_check(translate_regex(e2)));
}

}  // namespace ratmc
