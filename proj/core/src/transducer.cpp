#include "ratmc/transducer.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <tuple>
#include <unordered_map>

#include "ratmc/automata.hpp"
#include "ratmc/error.hpp"

namespace ratmc {

Transducer::Transducer(Alphabet alphabet, std::string initial_name) : alphabet_(std::move(alphabet)) {
  add_state(std::move(initial_name));
}

void Transducer::check_state(State s) const {
  if (s >= out_.size()) {
    throw InputError("transducer state id " + std::to_string(s) + " out of range (" +
                     std::to_string(out_.size()) + " states)");
  }
}

Transducer::State Transducer::add_state(std::string name) {
  const auto id = static_cast<State>(out_.size());
  out_.emplace_back();
  accepting_.push_back(0);
  names_.push_back(std::move(name));
  return id;
}

void Transducer::set_initial(State s) {
  check_state(s);
  initial_ = s;
}

void Transducer::set_accepting(State s, bool accepting) {
  check_state(s);
  accepting_[s] = accepting ? 1 : 0;
}

void Transducer::add_transition(State source, char input, char output, State target) {
  check_state(source);
  check_state(target);
  for (char c : {input, output}) {
    if (c != kEpsilon && !alphabet_.contains(c)) {
      throw InputError("transducer label " + describe_symbol(c) + " is not in the alphabet {" +
                       alphabet_.symbols() + "}");
    }
  }
  auto& edges = out_[source];
  const Edge e{input, output, target};
  if (std::find(edges.begin(), edges.end(), e) != edges.end()) return;
  edges.push_back(e);
  ++num_transitions_;
}

std::vector<Transducer::State> Transducer::accepting_states() const {
  std::vector<State> result;
  for (State s = 0; s < accepting_.size(); ++s) {
    if (accepting_[s]) result.push_back(s);
  }
  return result;
}

std::vector<Transducer::Transition> Transducer::transitions() const {
  std::vector<Transition> result;
  result.reserve(num_transitions_);
  for (State s = 0; s < out_.size(); ++s) {
    for (const Edge& e : out_[s]) result.push_back({s, e.input, e.output, e.target});
  }
  return result;
}

std::string Transducer::state_name(State s) const {
  check_state(s);
  return names_[s].empty() ? "s" + std::to_string(s) : names_[s];
}

namespace {

using State = Transducer::State;

std::uint64_t pair_key(std::uint32_t a, std::uint32_t b) {
  return (static_cast<std::uint64_t>(a) << 32) | b;
}

// Appends all states of `src` to `dst` (shifted by the returned offset),
// copying transitions; acceptance is left to the caller.
State append_copy(Transducer& dst, const Transducer& src) {
  const auto offset = static_cast<State>(dst.num_states());
  for (State s = 0; s < src.num_states(); ++s) dst.add_state();
  for (const auto& t : src.transitions()) {
    dst.add_transition(t.source + offset, t.input, t.output, t.target + offset);
  }
  return offset;
}

// Transducer with the shape of `x` whose edge labels come from `label`.
template <typename Label>
Transducer from_automaton(const Nfa& x, Label label) {
  Transducer t(x.alphabet());
  for (std::size_t i = 1; i < x.num_states(); ++i) t.add_state();
  t.set_initial(x.initial());
  for (auto s : x.accepting_states()) t.set_accepting(s);
  for (const auto& tr : x.transitions()) {
    const auto [in, out] = label(tr.label);
    t.add_transition(tr.source, in, out, tr.target);
  }
  return t;
}

}  // namespace

Transducer normalize(const RawTransducer& raw) {
  if (raw.state_names.empty()) throw InputError("transducer has no states");
  auto check_state = [&](std::size_t s) {
    if (s >= raw.state_names.size()) throw InputError("transducer state index out of range");
  };
  check_state(raw.initial);

  Transducer t(raw.alphabet, raw.state_names[0]);
  for (std::size_t i = 1; i < raw.state_names.size(); ++i) t.add_state(raw.state_names[i]);
  t.set_initial(static_cast<State>(raw.initial));
  for (auto s : raw.accepting) {
    check_state(s);
    t.set_accepting(static_cast<State>(s));
  }
  for (const auto& tr : raw.transitions) {
    check_state(tr.source);
    check_state(tr.target);
    raw.alphabet.check_word(tr.input);
    raw.alphabet.check_word(tr.output);
    const std::size_t steps = std::max<std::size_t>({tr.input.size(), tr.output.size(), 1});
    auto current = static_cast<State>(tr.source);
    for (std::size_t i = 0; i < steps; ++i) {
      const char in = i < tr.input.size() ? tr.input[i] : kEpsilon;
      const char out = i < tr.output.size() ? tr.output[i] : kEpsilon;
      const State next = i + 1 == steps ? static_cast<State>(tr.target) : t.add_state();
      t.add_transition(current, in, out, next);
      current = next;
    }
  }
  return t;
}

bool relation_membership(const Transducer& t, std::string_view u, std::string_view v) {
  const auto in_alphabet = [&](std::string_view w) {
    return std::all_of(w.begin(), w.end(), [&](char c) { return t.alphabet().contains(c); });
  };
  if (!in_alphabet(u) || !in_alphabet(v)) return false;

  // Configurations: (state, position in u, position in v).
  using Config = std::tuple<State, std::size_t, std::size_t>;
  std::set<Config> seen;
  std::vector<Config> stack{{t.initial(), 0, 0}};
  seen.insert(stack.front());
  while (!stack.empty()) {
    const auto [s, i, j] = stack.back();
    stack.pop_back();
    if (i == u.size() && j == v.size() && t.is_accepting(s)) return true;
    for (const auto& e : t.edges(s)) {
      std::size_t ni = i, nj = j;
      if (e.input != kEpsilon) {
        if (i == u.size() || u[i] != e.input) continue;
        ++ni;
      }
      if (e.output != kEpsilon) {
        if (j == v.size() || v[j] != e.output) continue;
        ++nj;
      }
      const Config next{e.target, ni, nj};
      if (seen.insert(next).second) stack.push_back(next);
    }
  }
  return false;
}

Transducer inverse(const Transducer& t) {
  Transducer r(t.alphabet(), t.has_declared_name(0) ? t.state_name(0) : std::string());
  for (State s = 1; s < t.num_states(); ++s) {
    r.add_state(t.has_declared_name(s) ? t.state_name(s) : std::string());
  }
  r.set_initial(t.initial());
  for (auto s : t.accepting_states()) r.set_accepting(s);
  for (const auto& tr : t.transitions()) r.add_transition(tr.source, tr.output, tr.input, tr.target);
  return r;
}

Transducer t_union(const Transducer& a, const Transducer& b) {
  require_same_alphabet(a.alphabet(), b.alphabet(), "transducer union");
  Transducer r(a.alphabet());
  const State oa = append_copy(r, a);
  const State ob = append_copy(r, b);
  for (auto s : a.accepting_states()) r.set_accepting(s + oa);
  for (auto s : b.accepting_states()) r.set_accepting(s + ob);
  r.add_transition(0, kEpsilon, kEpsilon, a.initial() + oa);
  r.add_transition(0, kEpsilon, kEpsilon, b.initial() + ob);
  return r;
}

Transducer t_concat(const Transducer& a, const Transducer& b) {
  require_same_alphabet(a.alphabet(), b.alphabet(), "transducer concatenation");
  Transducer r(a.alphabet());
  const State oa = append_copy(r, a);
  const State ob = append_copy(r, b);
  r.add_transition(0, kEpsilon, kEpsilon, a.initial() + oa);
  for (auto s : a.accepting_states()) r.add_transition(s + oa, kEpsilon, kEpsilon, b.initial() + ob);
  for (auto s : b.accepting_states()) r.set_accepting(s + ob);
  return r;
}

Transducer compose(const Transducer& a, const Transducer& b) {
  require_same_alphabet(a.alphabet(), b.alphabet(), "composition");
  Transducer r(a.alphabet());
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
      if (ea.output == kEpsilon) {
        // a writes nothing on the middle tape; b waits.
        r.add_transition(from, ea.input, kEpsilon, lookup(ea.target, q));
        continue;
      }
      for (const auto& eb : b.edges(q)) {
        if (eb.input == ea.output) r.add_transition(from, ea.input, eb.output, lookup(ea.target, eb.target));
      }
    }
    for (const auto& eb : b.edges(q)) {
      // b reads nothing from the middle tape; a waits.
      if (eb.input == kEpsilon) r.add_transition(from, kEpsilon, eb.output, lookup(p, eb.target));
    }
  }
  return r;
}

Transducer identity_relation(const Alphabet& alphabet) {
  Transducer t(alphabet);
  t.set_accepting(0);
  for (char c : alphabet) t.add_transition(0, c, c, 0);
  return t;
}

Transducer eraser_relation(const Nfa& x) {
  return from_automaton(x, [](char c) { return std::pair{c, kEpsilon}; });
}

Transducer test_relation(const Nfa& x) {
  return from_automaton(x, [](char c) { return std::pair{c, c}; });
}

Transducer arrow_relation(const Nfa& x) {
  return t_concat(eraser_relation(x), identity_relation(x.alphabet()));
}

Transducer difference_relation(const Alphabet& alphabet) {
  Transducer t(alphabet, "equal");
  const State mismatch = t.add_state("mismatch");
  const State input_longer = t.add_state("input_longer");
  const State output_longer = t.add_state("output_longer");
  t.set_accepting(mismatch);
  t.set_accepting(input_longer);
  t.set_accepting(output_longer);
  for (char a : alphabet) {
    t.add_transition(0, a, a, 0);
    for (char b : alphabet) {
      if (a != b) t.add_transition(0, a, b, mismatch);
    }
    t.add_transition(0, a, kEpsilon, input_longer);
    t.add_transition(0, kEpsilon, a, output_longer);
    t.add_transition(mismatch, a, kEpsilon, mismatch);
    t.add_transition(mismatch, kEpsilon, a, mismatch);
    t.add_transition(input_longer, a, kEpsilon, input_longer);
    t.add_transition(output_longer, kEpsilon, a, output_longer);
  }
  return t;
}

Nfa synchronized_product(const Transducer& t, const Nfa& a) {
  require_same_alphabet(t.alphabet(), a.alphabet(), "synchronized product");
  if (a.has_epsilon_transitions()) {
    throw InputError("synchronized product requires an epsilon-free automaton");
  }
  // a's successors indexed by (state, letter position).
  const Alphabet& alphabet = a.alphabet();
  std::vector<std::vector<std::vector<Nfa::State>>> moves(
      a.num_states(), std::vector<std::vector<Nfa::State>>(alphabet.size()));
  for (const auto& tr : a.transitions()) moves[tr.source][alphabet.index_of(tr.label)].push_back(tr.target);

  Nfa r(t.alphabet());
  std::unordered_map<std::uint64_t, Nfa::State> index;
  std::vector<std::pair<State, Nfa::State>> pairs;
  auto lookup = [&](State p, Nfa::State q) {
    const auto [it, inserted] = index.try_emplace(pair_key(p, q), 0);
    if (inserted) {
      it->second = pairs.empty() ? r.initial() : r.add_state();
      pairs.emplace_back(p, q);
    }
    return it->second;
  };
  lookup(t.initial(), a.initial());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto [p, q] = pairs[i];
    const auto from = static_cast<Nfa::State>(i);
    if (t.is_accepting(p) && a.is_accepting(q)) r.set_accepting(from);
    for (const auto& e : t.edges(p)) {
      if (e.output == kEpsilon) {
        r.add_transition(from, e.input, lookup(e.target, q));
        continue;
      }
      for (Nfa::State q2 : moves[q][alphabet.index_of(e.output)]) {
        r.add_transition(from, e.input, lookup(e.target, q2));
      }
    }
  }
  return r;
}

Nfa preimage(const Transducer& t, const Nfa& a) {
  return trim(remove_epsilon(trim(synchronized_product(t, remove_epsilon(a)))));
}

}  // namespace ratmc
