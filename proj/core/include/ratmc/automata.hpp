#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ratmc/nfa.hpp"

namespace ratmc {

/// Size of a regular language: an exact count or infinite.
class Cardinality {
 public:
  static Cardinality exact(std::uint64_t n) { return Cardinality(n, false); }
  static Cardinality infinite() { return Cardinality(0, true); }

  bool is_infinite() const noexcept { return infinite_; }
  bool is_finite() const noexcept { return !infinite_; }
  /// Only meaningful when finite.
  std::uint64_t count() const noexcept { return count_; }

  bool at_least(std::uint64_t k) const noexcept { return infinite_ || count_ >= k; }
  std::string to_string() const { return infinite_ ? "infinite" : std::to_string(count_); }

  friend bool operator==(const Cardinality&, const Cardinality&) = default;

 private:
  Cardinality(std::uint64_t n, bool inf) : count_(n), infinite_(inf) {}
  std::uint64_t count_;
  bool infinite_;
};

/// Membership by state-set simulation. Throws InputError when `word`
/// leaves the alphabet.
bool accepts(const Nfa& a, std::string_view word);

/// True iff no accepting state is reachable from the initial state.
bool is_empty(const Nfa& a);

/// States reachable from `s` through `gamma`-labelled transitions only
/// (including `s`), in ascending order.
std::vector<Nfa::State> label_closure(const Nfa& a, Nfa::State s, char gamma);

/// Automaton for L(a) with every occurrence of `gamma` erased. `gamma` may
/// be kEpsilon, in which case this is epsilon elimination and the alphabet
/// is unchanged; otherwise `gamma` is dropped from the result alphabet.
/// The state set is kept as is.
Nfa gamma_reduction(const Nfa& a, char gamma);

/// gamma_reduction(a, kEpsilon).
Nfa remove_epsilon(const Nfa& a);

Nfa union_of(const Nfa& a, const Nfa& b);
Nfa intersection(const Nfa& a, const Nfa& b);
Nfa concatenation(const Nfa& a, const Nfa& b);

/// Complete epsilon-free deterministic automaton for L(a) (subset
/// construction over reachable subsets; the empty subset is the sink).
Nfa determinize(const Nfa& a);

/// L(universe) \ L(a), trimmed.
Nfa complement(const Nfa& a, const Nfa& universe);

bool is_subset(const Nfa& a, const Nfa& b);
bool is_equivalent(const Nfa& a, const Nfa& b);

/// Removes states that are unreachable or cannot reach an accepting state.
/// An empty language yields the one-state empty automaton.
Nfa trim(const Nfa& a);

/// Shortest accepted word, least in alphabet declaration order among those
/// of minimal length; nullopt for the empty language.
std::optional<std::string> shortest_word(const Nfa& a);

Cardinality count_words(const Nfa& a);
bool has_at_least(const Nfa& a, std::uint64_t k);
bool has_at_most(const Nfa& a, std::uint64_t k);
bool has_exactly(const Nfa& a, std::uint64_t k);

}  // namespace ratmc
