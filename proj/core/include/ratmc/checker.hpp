#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ratmc/formula.hpp"
#include "ratmc/model.hpp"
#include "ratmc/nfa.hpp"
#include "ratmc/regex.hpp"
#include "ratmc/transducer.hpp"

namespace ratmc {

/// One evaluation step of global checking.
struct StepStats {
  std::string kind;
  std::string formula;
  std::size_t states = 0;
  std::size_t transitions = 0;
  bool cached = false;
  /// Filled for steps that build a synchronized product (modal operators
  /// other than U): relation size, operand size and the product before
  /// epsilon-removal.
  bool has_product = false;
  std::size_t relation_transitions = 0;
  std::size_t operand_states = 0;
  std::size_t operand_transitions = 0;
  std::size_t product_states = 0;
  std::size_t product_transitions = 0;
  double millis = 0.0;

  std::string to_string() const;
};

struct CheckerOptions {
  bool use_cache = true;
};

class Checker {
 public:
  explicit Checker(RationalKripkeModel model, CheckerOptions options = {});

  const RationalKripkeModel& model() const noexcept { return model_; }

  /// Extension automaton of `f`, a trimmed Nfa whose language is a subset
  /// of the state space. Throws UnsupportedFragment for counting modalities.
  Nfa global_check(const Formula& f);

  /// Truth of `f` at `state`. Counting modalities are accepted when no
  /// counting modality occurs under another modal operator.
  bool local_check(std::string_view state, const Formula& f);

  /// Shortest satisfying state, if any.
  std::optional<std::string> sat_check(const Formula& f);

  Transducer eval_program(const Program& p);

  const std::vector<StepStats>& stats() const noexcept { return stats_; }
  void clear_stats() { stats_.clear(); }

 private:
  Nfa eval(const Formula& f);
  Nfa compute(const Formula& f, StepStats& step);
  Nfa diamond_of(const Transducer& t, const Nfa& arg, StepStats& step);
  Nfa complement_in_states(const Nfa& a) const;
  const Transducer& relation_of(const RelRef& rel);
  bool count_holds(std::string_view state, const Formula& f);
  bool local_eval(std::string_view state, const Formula& f);
  void check_state(std::string_view state) const;

  RationalKripkeModel model_;
  CheckerOptions options_;
  std::map<std::string, Nfa> cache_;
  std::map<std::string, Transducer> inverse_relations_;
  std::optional<Transducer> difference_;
  std::vector<StepStats> stats_;
};

Nfa global_check(const RationalKripkeModel& m, const Formula& f);
bool local_check(const RationalKripkeModel& m, std::string_view state, const Formula& f);
std::optional<std::string> sat_check(const RationalKripkeModel& m, const Formula& f);
Transducer eval_program(const RationalKripkeModel& m, const Program& p);

/// Language equality of two star-free expressions, decided through their
/// translations over the free word model.
bool regex_equiv(const StarFreeRegex& e1, const StarFreeRegex& e2, const Alphabet& alphabet);

}  // namespace ratmc
