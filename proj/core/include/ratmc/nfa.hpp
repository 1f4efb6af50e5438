#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ratmc/alphabet.hpp"

namespace ratmc {

/// Nondeterministic finite automaton with optional epsilon transitions and a
/// single initial state. States are dense integers; textual names are kept
/// only for I/O.
///
/// A freshly constructed Nfa has one non-accepting initial state and
/// recognizes the empty language.
class Nfa {
 public:
  using State = std::uint32_t;

  struct Edge {
    char label;  // kEpsilon or a member of the alphabet
    State target;
    friend bool operator==(const Edge&, const Edge&) = default;
  };

  struct Transition {
    State source;
    char label;
    State target;
    friend bool operator==(const Transition&, const Transition&) = default;
  };

  explicit Nfa(Alphabet alphabet, std::string initial_name = {});

  static Nfa empty_language(const Alphabet& alphabet);
  /// Sigma*.
  static Nfa universal(const Alphabet& alphabet);
  /// Exactly {word}.
  static Nfa single_word(const Alphabet& alphabet, std::string_view word);

  State add_state(std::string name = {});
  void set_initial(State s);
  void set_accepting(State s, bool accepting = true);
  /// Duplicate transitions are ignored.
  void add_transition(State source, char label, State target);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::size_t num_states() const noexcept { return out_.size(); }
  std::size_t num_transitions() const noexcept { return num_transitions_; }
  State initial() const noexcept { return initial_; }
  bool is_accepting(State s) const { return accepting_.at(s) != 0; }
  std::vector<State> accepting_states() const;
  std::span<const Edge> edges(State s) const { return out_.at(s); }
  std::vector<Transition> transitions() const;
  bool has_epsilon_transitions() const noexcept { return num_epsilon_ > 0; }

  /// Declared name, or "q<id>" for anonymous states.
  std::string state_name(State s) const;
  bool has_declared_name(State s) const { return !names_.at(s).empty(); }

 private:
  void check_state(State s) const;

  Alphabet alphabet_;
  std::vector<std::vector<Edge>> out_;
  std::vector<char> accepting_;
  std::vector<std::string> names_;
  State initial_ = 0;
  std::size_t num_transitions_ = 0;
  std::size_t num_epsilon_ = 0;
};

}  // namespace ratmc
