#pragma once

// Brute-force reference implementations used to check the library. None of
// them call the algorithms under test; they only read automata and
// transducers through their accessors.

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "ratmc/alphabet.hpp"
#include "ratmc/formula.hpp"
#include "ratmc/model.hpp"
#include "ratmc/nfa.hpp"
#include "ratmc/regex.hpp"
#include "ratmc/transducer.hpp"

namespace oracle {

using ratmc::Alphabet;
using ratmc::Nfa;
using ratmc::Transducer;

/// All words of length <= max_len, shortest first.
inline std::vector<std::string> words_up_to(const Alphabet& sigma, std::size_t max_len) {
  std::vector<std::string> out{""};
  std::size_t begin = 0;
  for (std::size_t len = 1; len <= max_len; ++len) {
    const std::size_t end = out.size();
    for (std::size_t i = begin; i < end; ++i) {
      for (char c : sigma) out.push_back(out[i] + c);
    }
    begin = end;
  }
  return out;
}

inline std::set<Nfa::State> eps_closure(const Nfa& a, std::set<Nfa::State> states) {
  std::vector<Nfa::State> stack(states.begin(), states.end());
  while (!stack.empty()) {
    const auto s = stack.back();
    stack.pop_back();
    for (const auto& e : a.edges(s)) {
      if (e.label == ratmc::kEpsilon && states.insert(e.target).second) stack.push_back(e.target);
    }
  }
  return states;
}

/// Subset simulation.
inline bool member(const Nfa& a, std::string_view w) {
  auto current = eps_closure(a, {a.initial()});
  for (char c : w) {
    std::set<Nfa::State> next;
    for (auto s : current) {
      for (const auto& e : a.edges(s)) {
        if (e.label == c) next.insert(e.target);
      }
    }
    current = eps_closure(a, std::move(next));
  }
  for (auto s : current) {
    if (a.is_accepting(s)) return true;
  }
  return false;
}

inline std::set<std::string> language_up_to(const Nfa& a, std::size_t max_len) {
  std::set<std::string> out;
  for (const auto& w : words_up_to(a.alphabet(), max_len)) {
    if (member(a, w)) out.insert(w);
  }
  return out;
}

/// Pairs (u, v) labelling accepting runs of at most `max_steps` transitions
/// with |u| <= max_input.
inline std::set<std::pair<std::string, std::string>> bounded_pairs(const Transducer& t, std::size_t max_input,
                                                                   std::size_t max_steps) {
  std::set<std::pair<std::string, std::string>> out;
  std::function<void(Transducer::State, std::string&, std::string&, std::size_t)> walk =
      [&](Transducer::State q, std::string& u, std::string& v, std::size_t steps) {
        if (t.is_accepting(q)) out.emplace(u, v);
        if (steps == max_steps) return;
        for (const auto& e : t.edges(q)) {
          if (e.input != ratmc::kEpsilon && u.size() == max_input) continue;
          if (e.input != ratmc::kEpsilon) u.push_back(e.input);
          if (e.output != ratmc::kEpsilon) v.push_back(e.output);
          walk(e.target, u, v, steps + 1);
          if (e.input != ratmc::kEpsilon) u.pop_back();
          if (e.output != ratmc::kEpsilon) v.pop_back();
        }
      };
  std::string u;
  std::string v;
  walk(t.initial(), u, v, 0);
  return out;
}

/// Words paired with `w` by runs of at most `max_steps` transitions. With
/// `forward`, w is read on the input side and the outputs are collected;
/// otherwise the roles swap.
inline std::set<std::string> images(const Transducer& t, std::string_view w, bool forward, std::size_t max_steps) {
  std::set<std::string> out;
  std::set<std::tuple<Transducer::State, std::size_t, std::string, std::size_t>> seen;
  std::function<void(Transducer::State, std::size_t, std::string&, std::size_t)> walk =
      [&](Transducer::State q, std::size_t i, std::string& other, std::size_t steps) {
        if (!seen.emplace(q, i, other, steps).second) return;
        if (i == w.size() && t.is_accepting(q)) out.insert(other);
        if (steps == max_steps) return;
        for (const auto& e : t.edges(q)) {
          const char read = forward ? e.input : e.output;
          const char write = forward ? e.output : e.input;
          if (read != ratmc::kEpsilon && (i == w.size() || w[i] != read)) continue;
          if (write != ratmc::kEpsilon) other.push_back(write);
          walk(e.target, read == ratmc::kEpsilon ? i : i + 1, other, steps + 1);
          if (write != ratmc::kEpsilon) other.pop_back();
        }
      };
  std::string other;
  walk(t.initial(), 0, other, 0);
  return out;
}

/// Is (u, v) labelled by a run of at most `max_steps` transitions?
inline bool related(const Transducer& t, std::string_view u, std::string_view v, std::size_t max_steps) {
  std::set<std::tuple<Transducer::State, std::size_t, std::size_t>> frontier{{t.initial(), 0, 0}};
  std::set<std::tuple<Transducer::State, std::size_t, std::size_t>> seen = frontier;
  for (std::size_t step = 0;; ++step) {
    for (const auto& [q, i, j] : frontier) {
      if (i == u.size() && j == v.size() && t.is_accepting(q)) return true;
    }
    if (step == max_steps || frontier.empty()) return false;
    std::set<std::tuple<Transducer::State, std::size_t, std::size_t>> next;
    for (const auto& [q, i, j] : frontier) {
      for (const auto& e : t.edges(q)) {
        std::size_t ni = i;
        std::size_t nj = j;
        if (e.input != ratmc::kEpsilon) {
          if (i == u.size() || u[i] != e.input) continue;
          ++ni;
        }
        if (e.output != ratmc::kEpsilon) {
          if (j == v.size() || v[j] != e.output) continue;
          ++nj;
        }
        if (seen.emplace(e.target, ni, nj).second) next.emplace(e.target, ni, nj);
      }
    }
    frontier = std::move(next);
  }
}

/// Does some run of t read u on the input side while the automaton, moving
/// along the produced letters, ends accepting? Breadth-first over
/// (transducer state, input position, automaton state) with a step bound.
inline bool preimage_member(const Transducer& t, const Nfa& a, std::string_view u, std::size_t max_steps) {
  using Config = std::tuple<Transducer::State, std::size_t, Nfa::State>;
  std::set<Config> frontier;
  for (auto p : eps_closure(a, {a.initial()})) frontier.emplace(t.initial(), 0, p);
  std::set<Config> seen = frontier;
  for (std::size_t step = 0;; ++step) {
    for (const auto& [q, i, p] : frontier) {
      if (i == u.size() && t.is_accepting(q) && a.is_accepting(p)) return true;
    }
    if (step == max_steps || frontier.empty()) return false;
    std::set<Config> next;
    for (const auto& [q, i, p] : frontier) {
      for (const auto& e : t.edges(q)) {
        if (e.input != ratmc::kEpsilon && (i == u.size() || u[i] != e.input)) continue;
        const std::size_t ni = e.input == ratmc::kEpsilon ? i : i + 1;
        std::set<Nfa::State> targets{p};
        if (e.output != ratmc::kEpsilon) {
          targets.clear();
          for (const auto& ae : a.edges(p)) {
            if (ae.label == e.output) targets.insert(ae.target);
          }
          targets = eps_closure(a, std::move(targets));
        }
        for (auto p2 : targets) {
          if (seen.emplace(e.target, ni, p2).second) next.emplace(e.target, ni, p2);
        }
      }
    }
    frontier = std::move(next);
  }
}

/// Textbook concatenation: disjoint union with epsilon edges from the
/// accepting states of `a` to the initial state of `b`.
inline Nfa concatenate(const Nfa& a, const Nfa& b) {
  Nfa out(a.alphabet());
  for (std::size_t i = 1; i < a.num_states() + b.num_states(); ++i) out.add_state();
  const auto offset = static_cast<Nfa::State>(a.num_states());
  out.set_initial(a.initial());
  for (const auto& t : a.transitions()) out.add_transition(t.source, t.label, t.target);
  for (const auto& t : b.transitions()) out.add_transition(t.source + offset, t.label, t.target + offset);
  for (auto s : a.accepting_states()) out.add_transition(s, ratmc::kEpsilon, b.initial() + offset);
  for (auto s : b.accepting_states()) out.set_accepting(s + offset);
  return out;
}

/// Exact count of an epsilon-free NFA by enumeration up to the pumping
/// bound: with n states the language is infinite iff it has a word of length
/// in [n, 2n); otherwise every word is shorter than n.
inline std::optional<std::size_t> count_by_enumeration(const Nfa& a) {
  const std::size_t n = a.num_states();
  std::size_t finite = 0;
  for (const auto& w : words_up_to(a.alphabet(), 2 * n - 1)) {
    if (!member(a, w)) continue;
    if (w.size() >= n) return std::nullopt;
    ++finite;
  }
  return finite;
}

/// Some accepted word, found by breadth-first search on the automaton graph.
inline std::optional<std::string> some_word(const Nfa& a) {
  std::map<Nfa::State, std::string> reached{{a.initial(), ""}};
  std::queue<Nfa::State> queue;
  queue.push(a.initial());
  while (!queue.empty()) {
    const auto s = queue.front();
    queue.pop();
    if (a.is_accepting(s)) return reached[s];
    for (const auto& e : a.edges(s)) {
      if (reached.count(e.target)) continue;
      reached[e.target] = reached[s] + (e.label == ratmc::kEpsilon ? std::string() : std::string(1, e.label));
      queue.push(e.target);
    }
  }
  return std::nullopt;
}

/// L(a) minus {w}: product with the DFA tracking how much of w was matched.
inline Nfa remove_word(const Nfa& a, const std::string& w) {
  const std::size_t diverged = w.size() + 1;
  const auto advance = [&](std::size_t d, char c) {
    if (c == ratmc::kEpsilon) return d;
    return d < w.size() && w[d] == c ? d + 1 : diverged;
  };
  std::map<std::pair<Nfa::State, std::size_t>, Nfa::State> index;
  Nfa out(a.alphabet());
  std::vector<std::pair<Nfa::State, std::size_t>> todo{{a.initial(), 0}};
  index[todo[0]] = 0;
  while (!todo.empty()) {
    const auto [q, d] = todo.back();
    todo.pop_back();
    const auto from = index.at({q, d});
    out.set_accepting(from, a.is_accepting(q) && d != w.size());
    for (const auto& e : a.edges(q)) {
      const std::pair<Nfa::State, std::size_t> key{e.target, advance(d, e.label)};
      auto it = index.find(key);
      if (it == index.end()) {
        it = index.emplace(key, out.add_state()).first;
        todo.push_back(key);
      }
      out.add_transition(from, e.label, it->second);
    }
  }
  return out;
}

/// "At least k words": pick a word, remove it, recurse on k - 1.
inline bool at_least_by_removal(const Nfa& a, std::size_t k) {
  if (k == 0) return true;
  const auto w = some_word(a);
  if (!w) return false;
  return at_least_by_removal(remove_word(a, *w), k - 1);
}

/// Direct membership for star-free expressions.
inline bool regex_matches(const ratmc::StarFreeRegex& e, std::string_view w) {
  using Kind = ratmc::StarFreeRegex::Kind;
  switch (e.kind()) {
    case Kind::Letter:
      return w.size() == 1 && w[0] == e.symbol();
    case Kind::Complement:
      return !regex_matches(e.child(), w);
    case Kind::Union:
      return regex_matches(e.child(0), w) || regex_matches(e.child(1), w);
    case Kind::Concat:
      for (std::size_t k = 0; k <= w.size(); ++k) {
        if (regex_matches(e.child(0), w.substr(0, k)) && regex_matches(e.child(1), w.substr(k))) return true;
      }
      return false;
  }
  return false;
}

/// Recursive evaluator for the tense fragment (atoms, nominals, letters,
/// boolean connectives, [R], <R> and their inverses) that enumerates
/// successors and predecessors of a state by bounded run enumeration.
/// Requires every relation to have finite images.
class KripkeEvaluator {
 public:
  explicit KripkeEvaluator(const ratmc::RationalKripkeModel& m) : m_(m) {}

  bool holds(const ratmc::Formula& f, const std::string& w) {
    using K = ratmc::FormulaKind;
    switch (f.kind()) {
      case K::Atom:
        return member(m_.valuation.at(f.name()), w);
      case K::Nominal:
        return m_.nominals.at(f.name()) == w;
      case K::Letter:
        return w == std::string(1, f.letter());
      case K::True:
        return true;
      case K::False:
        return false;
      case K::Not:
        return !holds(f.child(), w);
      case K::And:
        return holds(f.child(0), w) && holds(f.child(1), w);
      case K::Or:
        return holds(f.child(0), w) || holds(f.child(1), w);
      case K::Implies:
        return !holds(f.child(0), w) || holds(f.child(1), w);
      case K::Diamond:
        for (const auto& v : neighbours(f.rel(), w)) {
          if (holds(f.child(), v)) return true;
        }
        return false;
      case K::Box:
        for (const auto& v : neighbours(f.rel(), w)) {
          if (!holds(f.child(), v)) return false;
        }
        return true;
      default:
        throw std::logic_error("KripkeEvaluator: unsupported operator");
    }
  }

  /// Successor states (or predecessor states for an inverse reference).
  std::set<std::string> neighbours(const ratmc::RelRef& rel, const std::string& w) {
    const auto key = std::make_tuple(rel.name, rel.inverse, w);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    const Transducer& t = m_.relations.at(rel.name);
    std::set<std::string> out;
    for (const auto& v : images(t, w, !rel.inverse, (w.size() + 1) * t.num_states())) {
      if (member(m_.states, v)) out.insert(v);
    }
    memo_.emplace(key, out);
    return out;
  }

 private:
  const ratmc::RationalKripkeModel& m_;
  std::map<std::tuple<std::string, bool, std::string>, std::set<std::string>> memo_;
};

}  // namespace oracle

namespace oracle {

/// Does `a` accept some u of length <= max_len whose gamma-erasure is w?
/// Path search over (state, position in w, length of u).
inline bool erases_to(const Nfa& a, char gamma, std::string_view w, std::size_t max_len) {
  using Config = std::tuple<Nfa::State, std::size_t, std::size_t>;
  std::set<Config> seen{{a.initial(), 0, 0}};
  std::vector<Config> stack(seen.begin(), seen.end());
  while (!stack.empty()) {
    const auto [q, i, len] = stack.back();
    stack.pop_back();
    if (i == w.size() && a.is_accepting(q)) return true;
    for (const auto& e : a.edges(q)) {
      Config next;
      if (e.label == ratmc::kEpsilon) {
        next = {e.target, i, len};
      } else if (len == max_len) {
        continue;
      } else if (e.label == gamma) {
        next = {e.target, i, len + 1};
      } else if (i < w.size() && e.label == w[i]) {
        next = {e.target, i + 1, len + 1};
      } else {
        continue;
      }
      if (seen.insert(next).second) stack.push_back(next);
    }
  }
  return false;
}

/// Pairs of word-labelled runs of a raw transducer with at most max_steps
/// transitions.
inline std::set<std::pair<std::string, std::string>> raw_pairs(const ratmc::RawTransducer& raw,
                                                               std::size_t max_steps) {
  std::set<std::pair<std::string, std::string>> out;
  std::function<void(std::size_t, const std::string&, const std::string&, std::size_t)> walk =
      [&](std::size_t q, const std::string& u, const std::string& v, std::size_t steps) {
        for (auto f : raw.accepting) {
          if (f == q) out.emplace(u, v);
        }
        if (steps == max_steps) return;
        for (const auto& t : raw.transitions) {
          if (t.source == q) walk(t.target, u + t.input, v + t.output, steps + 1);
        }
      };
  walk(raw.initial, "", "", 0);
  return out;
}

}  // namespace oracle
