#include "ratmc/model.hpp"

#include <cctype>
#include <optional>
#include <set>
#include <sstream>

#include "ratmc/automata.hpp"
#include "ratmc/automaton_io.hpp"
#include "ratmc/error.hpp"

namespace ratmc {

const Transducer& RationalKripkeModel::relation(const std::string& rel) const {
  const auto it = relations.find(rel);
  if (it == relations.end()) throw InputError("unknown relation '" + rel + "' in model '" + name + "'");
  return it->second;
}

const Nfa& RationalKripkeModel::proposition(const std::string& prop) const {
  const auto it = valuation.find(prop);
  if (it == valuation.end()) throw InputError("unknown proposition '" + prop + "' in model '" + name + "'");
  return it->second;
}

const std::string& RationalKripkeModel::nominal(const std::string& nom) const {
  const auto it = nominals.find(nom);
  if (it == nominals.end()) throw InputError("unknown nominal '" + nom + "' in model '" + name + "'");
  return it->second;
}

std::string Diagnostic::to_string() const { return (is_error() ? "error: " : "warning: ") + message; }

std::vector<Diagnostic> validate(const RationalKripkeModel& m) {
  std::vector<Diagnostic> out;
  auto error = [&](std::string msg) { out.push_back({Diagnostic::Severity::Error, std::move(msg)}); };
  auto warning = [&](std::string msg) { out.push_back({Diagnostic::Severity::Warning, std::move(msg)}); };

  const bool states_ok = m.states.alphabet() == m.alphabet;
  if (!states_ok) error("state space alphabet {" + m.states.alphabet().symbols() + "} differs from model alphabet");
  for (const auto& [name, t] : m.relations) {
    if (!(t.alphabet() == m.alphabet)) error("relation '" + name + "' has alphabet {" + t.alphabet().symbols() + "}");
  }
  for (const auto& [name, v] : m.valuation) {
    if (!(v.alphabet() == m.alphabet)) {
      error("proposition '" + name + "' has alphabet {" + v.alphabet().symbols() + "}");
    } else if (states_ok && !is_subset(v, m.states)) {
      warning("V(" + name + ") contains words outside the state space; it is restricted to the state space");
    }
  }
  for (const auto& [name, word] : m.nominals) {
    bool in_alphabet = true;
    for (char c : word) in_alphabet = in_alphabet && m.alphabet.contains(c);
    if (!in_alphabet) {
      error("nominal '" + name + "' denotes \"" + word + "\", which is not a word over {" + m.alphabet.symbols() + "}");
    } else if (states_ok && !accepts(m.states, word)) {
      error("nominal '" + name + "' denotes " + format_word(word) + ", which is not a state");
    }
  }
  if (states_ok && is_empty(m.states)) warning("the state space is empty");
  return out;
}

namespace {

bool valid_name(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s) {
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  }
  static const std::set<std::string> reserved{"true", "false", "lit", "count", "arrow", "down", "inf", "U", "D"};
  return !reserved.count(s);
}

struct SourceLine {
  std::size_t number;
  std::string text;
  std::vector<std::string> tokens;
};

std::vector<SourceLine> split_lines(std::string_view text) {
  std::vector<SourceLine> lines;
  std::size_t number = 1;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto end = text.find('\n', pos);
    const std::string raw(text.substr(pos, end == std::string_view::npos ? text.size() - pos : end - pos));
    std::string code = raw.substr(0, raw.find('#'));
    std::istringstream in(code);
    SourceLine line{number, raw, {}};
    for (std::string tok; in >> tok;) line.tokens.push_back(tok);
    lines.push_back(std::move(line));
    if (end == std::string_view::npos) break;
    pos = end + 1;
    ++number;
  }
  return lines;
}

}  // namespace

RationalKripkeModel parse_model(std::string_view text, const std::filesystem::path& base_dir, bool strict) {
  const auto lines = split_lines(text);
  std::size_t i = 0;
  auto next_directive = [&]() -> const SourceLine* {
    while (i < lines.size() && lines[i].tokens.empty()) ++i;
    return i < lines.size() ? &lines[i++] : nullptr;
  };

  const SourceLine* header = next_directive();
  if (!header || header->tokens[0] != "MODEL" || header->tokens.size() > 2) {
    throw ParseError("expected 'MODEL [name]' header", header ? header->number : 1);
  }
  const std::string model_name = header->tokens.size() == 2 ? header->tokens[1] : "model";

  std::optional<Alphabet> alphabet;
  std::optional<Nfa> states;
  std::map<std::string, Transducer> relations;
  std::map<std::string, Nfa> valuation;
  std::map<std::string, std::string> nominals;
  bool ended = false;

  // Text of an INLINE block: everything up to the END-INLINE line.
  auto inline_block = [&](const SourceLine& opener) {
    std::string block;
    const std::size_t first = i < lines.size() ? lines[i].number : opener.number;
    for (; i < lines.size(); ++i) {
      if (lines[i].tokens.size() == 1 && lines[i].tokens[0] == "END-INLINE") {
        ++i;
        return std::pair{block, first};
      }
      block += lines[i].text;
      block += '\n';
    }
    throw ParseError("INLINE block without END-INLINE", opener.number);
  };

  // Loads a component given `<KIND> ... FILE path` or `... INLINE`.
  auto component = [&](const SourceLine& line, std::size_t source_index, auto parse_text, auto load_file) {
    if (line.tokens.size() <= source_index) throw ParseError("expected FILE <path> or INLINE", line.number);
    const auto& how = line.tokens[source_index];
    if (how == "FILE") {
      if (line.tokens.size() != source_index + 2) throw ParseError("FILE takes exactly one path", line.number);
      const std::filesystem::path p = line.tokens[source_index + 1];
      const auto full = p.is_absolute() ? p : base_dir / p;
      if (!std::filesystem::exists(full)) {
        throw ParseError("referenced file '" + full.string() + "' does not exist", line.number);
      }
      return load_file(full);
    }
    if (how == "INLINE") {
      if (line.tokens.size() != source_index + 1) throw ParseError("unexpected tokens after INLINE", line.number);
      const auto [block, first] = inline_block(line);
      return parse_text(block, first);
    }
    throw ParseError("expected FILE or INLINE, found '" + how + "'", line.number);
  };
  auto automaton_from = [&](const SourceLine& line, std::size_t idx) {
    return component(
        line, idx, [](const std::string& t, std::size_t first) { return parse_automaton(t, first); },
        [](const std::filesystem::path& p) { return load_automaton(p); });
  };
  auto check_alphabet = [&](const Alphabet& a, const SourceLine& line, const std::string& what) {
    if (!(a == *alphabet)) {
      throw ParseError(what + " alphabet {" + a.symbols() + "} does not match model alphabet {" +
                           alphabet->symbols() + "}",
                       line.number);
    }
  };
  auto check_name = [&](const SourceLine& line, const std::string& kind) {
    if (line.tokens.size() < 2 || !valid_name(line.tokens[1])) {
      throw ParseError(kind + " needs a valid, non-reserved identifier", line.number);
    }
    if (!alphabet) throw ParseError(kind + " before ALPHABET", line.number);
    return line.tokens[1];
  };

  while (const SourceLine* line = next_directive()) {
    const auto& head = line->tokens[0];
    if (ended) throw ParseError("content after END", line->number);
    if (head == "END") {
      if (line->tokens.size() != 1) throw ParseError("unexpected tokens after END", line->number);
      ended = true;
    } else if (head == "ALPHABET") {
      if (alphabet) throw ParseError("duplicate ALPHABET", line->number);
      std::string symbols;
      for (std::size_t k = 1; k < line->tokens.size(); ++k) {
        if (line->tokens[k].size() != 1 || line->tokens[k] == kEpsToken) {
          throw ParseError("alphabet symbol '" + line->tokens[k] + "' is not a single character", line->number);
        }
        symbols += line->tokens[k];
      }
      try {
        alphabet.emplace(symbols);
      } catch (const InputError& e) {
        throw ParseError(e.what(), line->number);
      }
    } else if (head == "STATES") {
      if (!alphabet) throw ParseError("STATES before ALPHABET", line->number);
      if (states) throw ParseError("duplicate STATES", line->number);
      states.emplace(automaton_from(*line, 1));
      check_alphabet(states->alphabet(), *line, "state space");
    } else if (head == "REL") {
      const std::string name = check_name(*line, "REL");
      if (relations.count(name)) throw ParseError("duplicate relation '" + name + "'", line->number);
      Transducer t = component(
          *line, 2, [](const std::string& txt, std::size_t first) { return parse_transducer(txt, first); },
          [](const std::filesystem::path& p) { return load_transducer(p); });
      check_alphabet(t.alphabet(), *line, "relation '" + name + "'");
      relations.emplace(name, std::move(t));
    } else if (head == "PROP") {
      const std::string name = check_name(*line, "PROP");
      if (valuation.count(name)) throw ParseError("duplicate proposition '" + name + "'", line->number);
      Nfa v = automaton_from(*line, 2);
      check_alphabet(v.alphabet(), *line, "proposition '" + name + "'");
      valuation.emplace(name, std::move(v));
    } else if (head == "NOMINAL") {
      const std::string name = check_name(*line, "NOMINAL");
      if (line->tokens.size() != 3) throw ParseError("NOMINAL expects: NOMINAL <name> <word>", line->number);
      if (nominals.count(name)) throw ParseError("duplicate nominal '" + name + "'", line->number);
      try {
        nominals.emplace(name, parse_word(line->tokens[2], *alphabet));
      } catch (const InputError& e) {
        throw ParseError(std::string("nominal '") + name + "': " + e.what(), line->number);
      }
    } else {
      throw ParseError("unknown directive '" + head + "'", line->number);
    }
  }
  const std::size_t last = lines.empty() ? 1 : lines.back().number;
  if (!ended) throw ParseError("missing END", last);
  if (!alphabet) throw ParseError("missing ALPHABET", last);
  if (!states) throw ParseError("missing STATES", last);

  RationalKripkeModel m(model_name, *alphabet, std::move(*states));
  m.relations = std::move(relations);
  m.valuation = std::move(valuation);
  m.nominals = std::move(nominals);
  if (strict) {
    for (const auto& d : validate(m)) {
      if (d.is_error()) throw InputError("model '" + m.name + "': " + d.message);
    }
  }
  return m;
}

RationalKripkeModel load_model(const std::filesystem::path& path, bool strict) {
  const std::string text = read_text_file(path);
  try {
    return parse_model(text, path.parent_path(), strict);
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what(), 0);
  }
}

std::string write_model(const RationalKripkeModel& m) {
  std::ostringstream out;
  out << "MODEL " << m.name << "\nALPHABET";
  for (char c : m.alphabet) out << ' ' << c;
  out << "\nSTATES INLINE\n" << write_automaton(m.states) << "END-INLINE\n";
  for (const auto& [name, t] : m.relations) out << "REL " << name << " INLINE\n" << write_transducer(t) << "END-INLINE\n";
  for (const auto& [name, v] : m.valuation) out << "PROP " << name << " INLINE\n" << write_automaton(v) << "END-INLINE\n";
  for (const auto& [name, w] : m.nominals) out << "NOMINAL " << name << ' ' << format_word(w) << '\n';
  out << "END\n";
  return out.str();
}

RationalKripkeModel free_word_model(const Alphabet& alphabet) {
  return RationalKripkeModel("free", alphabet, Nfa::universal(alphabet));
}

FormulaSignature signature_of(const RationalKripkeModel& m) {
  FormulaSignature sig;
  sig.alphabet = m.alphabet;
  for (const auto& [name, t] : m.relations) sig.relations.insert(name);
  for (const auto& [name, v] : m.valuation) sig.propositions.insert(name);
  for (const auto& [name, w] : m.nominals) sig.nominals.insert(name);
  return sig;
}

}  // namespace ratmc
