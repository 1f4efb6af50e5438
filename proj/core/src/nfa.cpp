#include "ratmc/nfa.hpp"

#include <algorithm>

#include "ratmc/error.hpp"

namespace ratmc {

Nfa::Nfa(Alphabet alphabet, std::string initial_name) : alphabet_(std::move(alphabet)) {
  add_state(std::move(initial_name));
}

Nfa Nfa::empty_language(const Alphabet& alphabet) { return Nfa(alphabet); }

Nfa Nfa::universal(const Alphabet& alphabet) {
  Nfa a(alphabet);
  a.set_accepting(0);
  for (char c : alphabet) a.add_transition(0, c, 0);
  return a;
}

Nfa Nfa::single_word(const Alphabet& alphabet, std::string_view word) {
  alphabet.check_word(word);
  Nfa a(alphabet);
  State current = a.initial();
  for (char c : word) {
    const State next = a.add_state();
    a.add_transition(current, c, next);
    current = next;
  }
  a.set_accepting(current);
  return a;
}

void Nfa::check_state(State s) const {
  if (s >= out_.size()) {
    throw InputError("state id " + std::to_string(s) + " out of range (" +
                     std::to_string(out_.size()) + " states)");
  }
}

Nfa::State Nfa::add_state(std::string name) {
  const auto id = static_cast<State>(out_.size());
  out_.emplace_back();
  accepting_.push_back(0);
  names_.push_back(std::move(name));
  return id;
}

void Nfa::set_initial(State s) {
  check_state(s);
  initial_ = s;
}

void Nfa::set_accepting(State s, bool accepting) {
  check_state(s);
  accepting_[s] = accepting ? 1 : 0;
}

void Nfa::add_transition(State source, char label, State target) {
  check_state(source);
  check_state(target);
  if (label != kEpsilon && !alphabet_.contains(label)) {
    throw InputError("transition label " + describe_symbol(label) + " is not in the alphabet {" +
                     alphabet_.symbols() + "}");
  }
  auto& edges = out_[source];
  const Edge e{label, target};
  if (std::find(edges.begin(), edges.end(), e) != edges.end()) return;
  edges.push_back(e);
  ++num_transitions_;
  if (label == kEpsilon) ++num_epsilon_;
}

std::vector<Nfa::State> Nfa::accepting_states() const {
  std::vector<State> result;
  for (State s = 0; s < accepting_.size(); ++s) {
    if (accepting_[s]) result.push_back(s);
  }
  return result;
}

std::vector<Nfa::Transition> Nfa::transitions() const {
  std::vector<Transition> result;
  result.reserve(num_transitions_);
  for (State s = 0; s < out_.size(); ++s) {
    for (const Edge& e : out_[s]) result.push_back({s, e.label, e.target});
  }
  return result;
}

std::string Nfa::state_name(State s) const {
  check_state(s);
  return names_[s].empty() ? "q" + std::to_string(s) : names_[s];
}

}  // namespace ratmc
