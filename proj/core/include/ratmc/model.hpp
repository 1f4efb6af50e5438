#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "ratmc/alphabet.hpp"
#include "ratmc/nfa.hpp"
#include "ratmc/parser.hpp"
#include "ratmc/transducer.hpp"

namespace ratmc {

/// Kripke model over words: a regular state space, named rational relations,
/// regular valuations and nominals denoting single states.
struct RationalKripkeModel {
  RationalKripkeModel(std::string model_name, Alphabet model_alphabet, Nfa state_space)
      : name(std::move(model_name)), alphabet(std::move(model_alphabet)), states(std::move(state_space)) {}

  std::string name;
  Alphabet alphabet;
  Nfa states;
  std::map<std::string, Transducer> relations;
  std::map<std::string, Nfa> valuation;
  /// Nominal name -> denoted state (a word of the state space).
  std::map<std::string, std::string> nominals;

  const Transducer& relation(const std::string& rel) const;
  const Nfa& proposition(const std::string& prop) const;
  const std::string& nominal(const std::string& nom) const;
};

struct Diagnostic {
  enum class Severity { Warning, Error };
  Severity severity;
  std::string message;

  bool is_error() const noexcept { return severity == Severity::Error; }
  std::string to_string() const;
};

/// Re-checks all model invariants. Valuations reaching outside the state
/// space are only a warning: extensions are intersected with it anyway.
std::vector<Diagnostic> validate(const RationalKripkeModel& m);

/// Parses a model file. Relative FILE references resolve against
/// `base_dir`. With `strict`, error diagnostics from validate() are raised
/// as InputError.
RationalKripkeModel parse_model(std::string_view text, const std::filesystem::path& base_dir, bool strict = true);
RationalKripkeModel load_model(const std::filesystem::path& path, bool strict = true);

/// Self-contained model file (all components INLINE).
std::string write_model(const RationalKripkeModel& m);

/// States Sigma*, no relations, propositions or nominals.
RationalKripkeModel free_word_model(const Alphabet& alphabet);

/// Names declared by the model, for parse_formula.
FormulaSignature signature_of(const RationalKripkeModel& m);

}  // namespace ratmc
