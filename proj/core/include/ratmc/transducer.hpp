#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ratmc/alphabet.hpp"
#include "ratmc/nfa.hpp"

namespace ratmc {

/// Asynchronous two-tape (rational) transducer in letter normal form: every
/// transition reads at most one letter and writes at most one letter.
/// Input and output alphabets coincide.
class Transducer {
 public:
  using State = std::uint32_t;

  struct Edge {
    char input;   // kEpsilon or a letter
    char output;  // kEpsilon or a letter
    State target;
    friend bool operator==(const Edge&, const Edge&) = default;
  };

  struct Transition {
    State source;
    char input;
    char output;
    State target;
    friend bool operator==(const Transition&, const Transition&) = default;
  };

  /// One non-accepting initial state, no transitions: the empty relation.
  explicit Transducer(Alphabet alphabet, std::string initial_name = {});

  State add_state(std::string name = {});
  void set_initial(State s);
  void set_accepting(State s, bool accepting = true);
  /// Duplicate transitions are ignored.
  void add_transition(State source, char input, char output, State target);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::size_t num_states() const noexcept { return out_.size(); }
  std::size_t num_transitions() const noexcept { return num_transitions_; }
  State initial() const noexcept { return initial_; }
  bool is_accepting(State s) const { return accepting_.at(s) != 0; }
  std::vector<State> accepting_states() const;
  std::span<const Edge> edges(State s) const { return out_.at(s); }
  std::vector<Transition> transitions() const;

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
};

/// Transducer whose transitions may carry whole words on either tape, as
/// written in transducer files.
struct RawTransducer {
  struct Transition {
    std::size_t source;
    std::string input;
    std::string output;
    std::size_t target;
  };

  Alphabet alphabet;
  std::vector<std::string> state_names;
  std::size_t initial = 0;
  std::vector<std::size_t> accepting;
  std::vector<Transition> transitions;
};

/// Splits word-labelled transitions into chains of letter steps through fresh
/// intermediate states. A label u/v becomes u1/v1, u2/v2, ... while both
/// sides have letters left, then drains the longer side against epsilon.
/// An empty label stays a single EPS/EPS step.
Transducer normalize(const RawTransducer& raw);

/// (u, v) in R(t). Characters outside the alphabet make the answer false.
bool relation_membership(const Transducer& t, std::string_view u, std::string_view v);

/// Swaps the tapes of every transition.
Transducer inverse(const Transducer& t);

Transducer t_union(const Transducer& a, const Transducer& b);

/// Relational composition {(u, w) | exists v: (u, v) in R(a), (v, w) in R(b)}.
Transducer compose(const Transducer& a, const Transducer& b);

/// Component-wise concatenation {(u1 u2, v1 v2) | (u1, v1) in R(a), (u2, v2) in R(b)}.
Transducer t_concat(const Transducer& a, const Transducer& b);

/// Identity relation on Sigma*.
Transducer identity_relation(const Alphabet& alphabet);

/// {(u, epsilon) | u in L(x)}; x must be epsilon-free.
Transducer eraser_relation(const Nfa& x);

/// {(u, u) | u in L(x)}; x must be epsilon-free.
Transducer test_relation(const Nfa& x);

/// {(uv, v) | u in L(x), v in Sigma*}: the eraser for x followed by the identity.
/// x must be epsilon-free.
Transducer arrow_relation(const Nfa& x);

/// {(u, v) | u != v}.
Transducer difference_relation(const Alphabet& alphabet);

/// Synchronized product of `t` with the epsilon-free automaton `a`. States
/// are the reachable pairs (t-state, a-state) from (initial, initial);
/// accepting pairs are accepting on both sides. A transition p --x/y--> p'
/// of t moves a along one y-edge when y is a letter and leaves a in place
/// when y is epsilon; the product edge is labelled x. After epsilon removal
/// the product recognizes {u | exists w in L(a), (u, w) in R(t)}.
Nfa synchronized_product(const Transducer& t, const Nfa& a);

/// Pre-image {u | exists w in L(a): (u, w) in R(t)}: synchronized product
/// with an epsilon-free copy of `a`, epsilon-reduced and trimmed.
Nfa preimage(const Transducer& t, const Nfa& a);

}  // namespace ratmc
