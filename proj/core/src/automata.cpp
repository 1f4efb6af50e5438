#include "ratmc/automata.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>
#include <unordered_map>

#include "ratmc/error.hpp"

namespace ratmc {

using State = Nfa::State;

namespace {

using StateSet = std::vector<State>;

std::uint64_t pair_key(State a, State b) {
  return (static_cast<std::uint64_t>(a) << 32) | b;
}

// Expands `set` in place with everything reachable through `label`-edges.
// Result is sorted and duplicate-free.
void close_under(const Nfa& a, StateSet& set, char label) {
  std::vector<char> seen(a.num_states(), 0);
  std::vector<State> stack;
  for (State s : set) {
    if (!seen[s]) {
      seen[s] = 1;
      stack.push_back(s);
    }
  }
  while (!stack.empty()) {
    const State s = stack.back();
    stack.pop_back();
    for (const auto& e : a.edges(s)) {
      if (e.label == label && !seen[e.target]) {
        seen[e.target] = 1;
        stack.push_back(e.target);
      }
    }
  }
  set.clear();
  for (State s = 0; s < seen.size(); ++s) {
    if (seen[s]) set.push_back(s);
  }
}

StateSet step(const Nfa& a, const StateSet& from, char letter) {
  StateSet next;
  for (State s : from) {
    for (const auto& e : a.edges(s)) {
      if (e.label == letter) next.push_back(e.target);
    }
  }
  close_under(a, next, kEpsilon);
  return next;
}

bool any_accepting(const Nfa& a, const StateSet& set) {
  return std::any_of(set.begin(), set.end(), [&](State s) { return a.is_accepting(s); });
}

// Copy of the state skeleton of `a` (names, initial, no transitions, no
// acceptance) over `alphabet`.
Nfa skeleton(const Nfa& a, const Alphabet& alphabet) {
  Nfa r(alphabet, a.has_declared_name(0) ? a.state_name(0) : std::string());
  for (State s = 1; s < a.num_states(); ++s) {
    r.add_state(a.has_declared_name(s) ? a.state_name(s) : std::string());
  }
  r.set_initial(a.initial());
  return r;
}

std::vector<char> forward_reachable(const Nfa& a) {
  std::vector<char> seen(a.num_states(), 0);
  std::vector<State> stack{a.initial()};
  seen[a.initial()] = 1;
  while (!stack.empty()) {
    const State s = stack.back();
    stack.pop_back();
    for (const auto& e : a.edges(s)) {
      if (!seen[e.target]) {
        seen[e.target] = 1;
        stack.push_back(e.target);
      }
    }
  }
  return seen;
}

std::vector<char> backward_reachable(const Nfa& a) {
  std::vector<std::vector<State>> in(a.num_states());
  for (State s = 0; s < a.num_states(); ++s) {
    for (const auto& e : a.edges(s)) in[e.target].push_back(s);
  }
  std::vector<char> seen(a.num_states(), 0);
  std::vector<State> stack;
  for (State s : a.accepting_states()) {
    seen[s] = 1;
    stack.push_back(s);
  }
  while (!stack.empty()) {
    const State s = stack.back();
    stack.pop_back();
    for (State p : in[s]) {
      if (!seen[p]) {
        seen[p] = 1;
        stack.push_back(p);
      }
    }
  }
  return seen;
}

}  // namespace

bool accepts(const Nfa& a, std::string_view word) {
  a.alphabet().check_word(word);
  StateSet current{a.initial()};
  close_under(a, current, kEpsilon);
  for (char c : word) {
    current = step(a, current, c);
    if (current.empty()) return false;
  }
  return any_accepting(a, current);
}

bool is_empty(const Nfa& a) {
  const auto reach = forward_reachable(a);
  for (State s = 0; s < a.num_states(); ++s) {
    if (reach[s] && a.is_accepting(s)) return false;
  }
  return true;
}

std::vector<State> label_closure(const Nfa& a, State s, char gamma) {
  StateSet set{s};
  close_under(a, set, gamma);
  return set;
}

Nfa gamma_reduction(const Nfa& a, char gamma) {
  if (gamma != kEpsilon && !a.alphabet().contains(gamma)) {
    throw InputError("cannot reduce by " + describe_symbol(gamma) + ": not in the alphabet {" +
                     a.alphabet().symbols() + "}");
  }
  const Alphabet alphabet = gamma == kEpsilon ? a.alphabet() : a.alphabet().without(gamma);
  Nfa r = skeleton(a, alphabet);
  for (State q = 0; q < a.num_states(); ++q) {
    // Every gamma*-path from q is bypassed: q reaches whatever its
    // gamma-closure reaches by one non-gamma step.
    const auto closure = label_closure(a, q, gamma);
    if (any_accepting(a, closure)) r.set_accepting(q);
    for (State mid : closure) {
      for (const auto& e : a.edges(mid)) {
        if (e.label != gamma) r.add_transition(q, e.label, e.target);
      }
    }
  }
  return r;
}

Nfa remove_epsilon(const Nfa& a) {
  if (!a.has_epsilon_transitions()) return a;
  return gamma_reduction(a, kEpsilon);
}

Nfa union_of(const Nfa& a, const Nfa& b) {
  require_same_alphabet(a.alphabet(), b.alphabet(), "union");
  Nfa r(a.alphabet());
  const State offset_a = 1;
  const auto offset_b = static_cast<State>(1 + a.num_states());
  for (std::size_t i = 0; i < a.num_states() + b.num_states(); ++i) r.add_state();
  for (const auto& t : a.transitions()) r.add_transition(t.source + offset_a, t.label, t.target + offset_a);
  for (const auto& t : b.transitions()) r.add_transition(t.source + offset_b, t.label, t.target + offset_b);
  for (State s : a.accepting_states()) r.set_accepting(s + offset_a);
  for (State s : b.accepting_states()) r.set_accepting(s + offset_b);
  r.add_transition(0, kEpsilon, a.initial() + offset_a);
  r.add_transition(0, kEpsilon, b.initial() + offset_b);
  return r;
}

Nfa intersection(const Nfa& a, const Nfa& b) {
  require_same_alphabet(a.alphabet(), b.alphabet(), "intersection");
  Nfa r(a.alphabet());
  std::unordered_map<std::uint64_t, State> index;
  std::vector<std::pair<State, State>> pairs;
  auto lookup = [&](State p, State q) {
    const auto [it, inserted] = index.try_emplace(pair_key(p, q), 0);
    if (inserted) {
      it->second = pairs.empty() ? r.initial() : r.add_state();
      pairs.emplace_back(p, q);
    }
    return it->second;
  };
  lookup(a.initial(), b.initial());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto [p, q] = pairs[i];
    const auto from = static_cast<State>(i);
    if (a.is_accepting(p) && b.is_accepting(q)) r.set_accepting(from);
    for (const auto& ea : a.edges(p)) {
      if (ea.label == kEpsilon) {
        r.add_transition(from, kEpsilon, lookup(ea.target, q));
        continue;
      }
      for (const auto& eb : b.edges(q)) {
        if (eb.label == ea.label) r.add_transition(from, ea.label, lookup(ea.target, eb.target));
      }
    }
    for (const auto& eb : b.edges(q)) {
      if (eb.label == kEpsilon) r.add_transition(from, kEpsilon, lookup(p, eb.target));
    }
  }
  return r;
}

Nfa concatenation(const Nfa& a, const Nfa& b) {
  require_same_alphabet(a.alphabet(), b.alphabet(), "concatenation");
  Nfa r(a.alphabet());
  for (std::size_t i = 1; i < a.num_states() + b.num_states(); ++i) r.add_state();
  const auto offset_b = static_cast<State>(a.num_states());
  r.set_initial(a.initial());
  for (const auto& t : a.transitions()) r.add_transition(t.source, t.label, t.target);
  for (const auto& t : b.transitions()) r.add_transition(t.source + offset_b, t.label, t.target + offset_b);
  for (State s : a.accepting_states()) r.add_transition(s, kEpsilon, b.initial() + offset_b);
  for (State s : b.accepting_states()) r.set_accepting(s + offset_b);
  return r;
}

Nfa determinize(const Nfa& a) {
  const Nfa e = remove_epsilon(a);
  Nfa r(e.alphabet());
  std::map<StateSet, State> index;
  std::vector<StateSet> subsets;
  auto lookup = [&](StateSet set) {
    const auto it = index.find(set);
    if (it != index.end()) return it->second;
    const State id = subsets.empty() ? r.initial() : r.add_state();
    index.emplace(set, id);
    subsets.push_back(std::move(set));
    return id;
  };
  lookup(StateSet{e.initial()});
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    const auto from = static_cast<State>(i);
    if (any_accepting(e, subsets[i])) r.set_accepting(from);
    for (char c : e.alphabet()) {
      StateSet next;
      for (State s : subsets[i]) {
        for (const auto& edge : e.edges(s)) {
          if (edge.label == c) next.push_back(edge.target);
        }
      }
      std::sort(next.begin(), next.end());
      next.erase(std::unique(next.begin(), next.end()), next.end());
      // `subsets` may reallocate inside lookup; `i` stays valid as an index.
      r.add_transition(from, c, lookup(std::move(next)));
    }
  }
  return r;
}

Nfa complement(const Nfa& a, const Nfa& universe) {
  require_same_alphabet(a.alphabet(), universe.alphabet(), "complement");
  Nfa d = determinize(a);
  for (State s = 0; s < d.num_states(); ++s) d.set_accepting(s, !d.is_accepting(s));
  return trim(intersection(universe, d));
}

bool is_subset(const Nfa& a, const Nfa& b) {
  require_same_alphabet(a.alphabet(), b.alphabet(), "inclusion");
  return is_empty(complement(b, a));
}

bool is_equivalent(const Nfa& a, const Nfa& b) {
  require_same_alphabet(a.alphabet(), b.alphabet(), "equivalence");
  return is_subset(a, b) && is_subset(b, a);
}

Nfa trim(const Nfa& a) {
  const auto forward = forward_reachable(a);
  const auto backward = backward_reachable(a);
  if (!backward[a.initial()]) return Nfa::empty_language(a.alphabet());

  std::vector<State> renumber(a.num_states(), std::numeric_limits<State>::max());
  // The initial state is always renumbered to 0.
  auto name_of = [&](State s) { return a.has_declared_name(s) ? a.state_name(s) : std::string(); };
  Nfa r(a.alphabet(), name_of(a.initial()));
  renumber[a.initial()] = 0;
  for (State s = 0; s < a.num_states(); ++s) {
    if (s != a.initial() && forward[s] && backward[s]) renumber[s] = r.add_state(name_of(s));
  }
  for (State s = 0; s < a.num_states(); ++s) {
    if (renumber[s] == std::numeric_limits<State>::max()) continue;
    if (a.is_accepting(s)) r.set_accepting(renumber[s]);
    for (const auto& e : a.edges(s)) {
      if (renumber[e.target] != std::numeric_limits<State>::max()) {
        r.add_transition(renumber[s], e.label, renumber[e.target]);
      }
    }
  }
  return r;
}

std::optional<std::string> shortest_word(const Nfa& a) {
  // Breadth-first over reachable subsets, expanding letters in declaration
  // order: the first accepting subset is reached by the shortlex-least word.
  std::map<StateSet, std::size_t> seen;
  std::vector<StateSet> subsets;
  std::vector<std::pair<std::size_t, char>> parent;
  StateSet start{a.initial()};
  close_under(a, start, kEpsilon);
  seen.emplace(start, 0);
  subsets.push_back(std::move(start));
  parent.emplace_back(0, kEpsilon);
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    if (any_accepting(a, subsets[i])) {
      std::string word;
      for (std::size_t j = i; j != 0; j = parent[j].first) word.push_back(parent[j].second);
      std::reverse(word.begin(), word.end());
      return word;
    }
    for (char c : a.alphabet()) {
      StateSet next = step(a, subsets[i], c);
      if (next.empty() || seen.count(next)) continue;
      seen.emplace(next, subsets.size());
      subsets.push_back(std::move(next));
      parent.emplace_back(i, c);
    }
  }
  return std::nullopt;
}

Cardinality count_words(const Nfa& a) {
  // Distinct words are distinct paths in a deterministic automaton, so the
  // count runs on the trimmed DFA.
  const Nfa d = trim(determinize(trim(a)));
  if (is_empty(d)) return Cardinality::exact(0);

  // Every state of `d` is useful, so any cycle makes the language infinite.
  enum : char { kWhite, kGrey, kBlack };
  std::vector<char> colour(d.num_states(), kWhite);
  std::vector<std::uint64_t> words(d.num_states(), 0);
  struct Frame {
    State state;
    std::size_t next_edge;
  };
  std::vector<Frame> stack{{d.initial(), 0}};
  colour[d.initial()] = kGrey;
  while (!stack.empty()) {
    Frame& top = stack.back();
    const auto edges = d.edges(top.state);
    if (top.next_edge < edges.size()) {
      const State t = edges[top.next_edge++].target;
      if (colour[t] == kGrey) return Cardinality::infinite();
      if (colour[t] == kWhite) {
        colour[t] = kGrey;
        stack.push_back({t, 0});
      }
      continue;
    }
    std::uint64_t total = d.is_accepting(top.state) ? 1 : 0;
    for (const auto& e : edges) {
      if (words[e.target] > std::numeric_limits<std::uint64_t>::max() - total) {
        throw Error("word count exceeds 2^64-1");
      }
      total += words[e.target];
    }
    words[top.state] = total;
    colour[top.state] = kBlack;
    stack.pop_back();
  }
  return Cardinality::exact(words[d.initial()]);
}

bool has_at_least(const Nfa& a, std::uint64_t k) {
  if (k == 0) return true;
  return count_words(a).at_least(k);
}

bool has_at_most(const Nfa& a, std::uint64_t k) {
  if (k == std::numeric_limits<std::uint64_t>::max()) return count_words(a).is_finite();
  return !has_at_least(a, k + 1);
}

bool has_exactly(const Nfa& a, std::uint64_t k) { return has_at_least(a, k) && has_at_most(a, k); }

}  // namespace ratmc
