#pragma once

#include <initializer_list>
#include <string>

#include "ratmc/alphabet.hpp"
#include "ratmc/automaton_io.hpp"
#include "ratmc/model.hpp"
#include "ratmc/nfa.hpp"
#include "ratmc/transducer.hpp"

namespace fx {

inline std::string path(const std::string& name) { return std::string(RATMC_FIXTURE_DIR) + "/" + name; }

inline ratmc::RationalKripkeModel model(const std::string& name) { return ratmc::load_model(path(name)); }

struct Edge {
  ratmc::Nfa::State from;
  char label;
  ratmc::Nfa::State to;
};

/// Automaton with states 0..n-1, initial state 0.
inline ratmc::Nfa nfa(const char* sigma, std::size_t n, std::initializer_list<ratmc::Nfa::State> accepting,
                      std::initializer_list<Edge> edges) {
  ratmc::Nfa a{ratmc::Alphabet(sigma)};
  for (std::size_t i = 1; i < n; ++i) a.add_state();
  for (auto s : accepting) a.set_accepting(s);
  for (const auto& e : edges) a.add_transition(e.from, e.label, e.to);
  return a;
}

struct TEdge {
  ratmc::Transducer::State from;
  char in;
  char out;
  ratmc::Transducer::State to;
};

inline ratmc::Transducer transducer(const char* sigma, std::size_t n,
                                    std::initializer_list<ratmc::Transducer::State> accepting,
                                    std::initializer_list<TEdge> edges) {
  ratmc::Transducer t{ratmc::Alphabet(sigma)};
  for (std::size_t i = 1; i < n; ++i) t.add_state();
  for (auto s : accepting) t.set_accepting(s);
  for (const auto& e : edges) t.add_transition(e.from, e.in, e.out, e.to);
  return t;
}

constexpr char E = ratmc::kEpsilon;

// Hand-written reference languages over {0,1}.

/// 0* + 0*1+
inline ratmc::Nfa zeros_then_ones_nonempty_or_zeros() {
  return nfa("01", 2, {0, 1}, {{0, '0', 0}, {0, '1', 1}, {1, '1', 1}});
}

/// 000*1
inline ratmc::Nfa petri_diamond_q() { return nfa("01", 4, {3}, {{0, '0', 1}, {1, '0', 2}, {2, '0', 2}, {2, '1', 3}}); }

/// 0010*
inline ratmc::Nfa petri_p() { return nfa("01", 4, {3}, {{0, '0', 1}, {1, '0', 2}, {2, '1', 3}, {3, '0', 3}}); }

/// 0*1000
inline ratmc::Nfa petri_q() {
  return nfa("01", 5, {4}, {{0, '0', 0}, {0, '1', 1}, {1, '0', 2}, {2, '0', 3}, {3, '0', 4}});
}

/// 0*10*
inline ratmc::Nfa petri_states() { return nfa("01", 2, {1}, {{0, '0', 0}, {0, '1', 1}, {1, '0', 1}}); }

/// u R v iff v is u followed by one letter.
inline ratmc::Transducer append_letter() {
  return transducer("01", 2, {1}, {{0, '0', '0', 0}, {0, '1', '1', 0}, {0, E, '0', 1}, {0, E, '1', 1}});
}

/// {EPS, 0, 1}
inline ratmc::Nfa three_words() { return nfa("01", 2, {0, 1}, {{0, '0', 1}, {0, '1', 1}}); }

}  // namespace fx
