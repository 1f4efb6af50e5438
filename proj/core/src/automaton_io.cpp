#include "ratmc/automaton_io.hpp"

#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <vector>

#include "ratmc/error.hpp"

namespace ratmc {

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::string_view text, std::size_t first_line) {
  std::vector<Line> lines;
  std::size_t number = first_line;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto end = text.find('\n', pos);
    std::string_view raw = text.substr(pos, end == std::string_view::npos ? text.size() - pos : end - pos);
    if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    std::istringstream in{std::string(raw)};
    Line line{number, {}};
    for (std::string tok; in >> tok;) line.tokens.push_back(tok);
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    if (end == std::string_view::npos) break;
    pos = end + 1;
    ++number;
  }
  return lines;
}

// Shared header/state handling for both block kinds.
class BlockReader {
 public:
  BlockReader(std::string_view text, std::size_t first_line, std::string_view keyword)
      : lines_(tokenize(text, first_line)), keyword_(keyword) {
    const std::size_t where = lines_.empty() ? first_line : lines_.front().number;
    if (lines_.empty() || lines_.front().tokens.size() != 1 || lines_.front().tokens[0] != keyword_) {
      throw ParseError("expected " + keyword_ + " header", where);
    }
    if (lines_.size() < 2 || lines_.back().tokens.size() != 1 || lines_.back().tokens[0] != "END") {
      throw ParseError("missing END of " + keyword_ + " block", lines_.back().number);
    }
  }

  // Calls `on_line` for every directive between header and END.
  template <typename F>
  void for_each_directive(F on_line) {
    for (std::size_t i = 1; i + 1 < lines_.size(); ++i) on_line(lines_[i]);
  }

  void read_alphabet(const Line& line) {
    if (alphabet_) throw ParseError("duplicate ALPHABET", line.number);
    if (line.tokens.size() < 2) throw ParseError("ALPHABET needs at least one symbol", line.number);
    std::string symbols;
    for (std::size_t i = 1; i < line.tokens.size(); ++i) {
      const auto& tok = line.tokens[i];
      if (tok == kEpsToken) throw ParseError("EPS is reserved and cannot be an alphabet symbol", line.number);
      if (tok.size() != 1) throw ParseError("alphabet symbol '" + tok + "' is not a single character", line.number);
      symbols += tok;
    }
    try {
      alphabet_.emplace(symbols);
    } catch (const InputError& e) {
      throw ParseError(e.what(), line.number);
    }
  }

  void read_states(const Line& line) {
    require_alphabet(line);
    if (line.tokens.size() < 2) throw ParseError("STATES needs at least one name", line.number);
    for (std::size_t i = 1; i < line.tokens.size(); ++i) {
      const auto& name = line.tokens[i];
      if (name == kEpsToken) throw ParseError("EPS cannot name a state", line.number);
      if (!index_.emplace(name, names_.size()).second) {
        throw ParseError("duplicate state '" + name + "'", line.number);
      }
      names_.push_back(name);
    }
  }

  std::size_t state(const Line& line, const std::string& name) const {
    const auto it = index_.find(name);
    if (it == index_.end()) throw ParseError("undeclared state '" + name + "'", line.number);
    return it->second;
  }

  void read_initial(const Line& line) {
    if (initial_) throw ParseError("duplicate INITIAL", line.number);
    if (line.tokens.size() != 2) throw ParseError("INITIAL takes exactly one state", line.number);
    initial_ = state(line, line.tokens[1]);
  }

  void read_accept(const Line& line) {
    for (std::size_t i = 1; i < line.tokens.size(); ++i) accepting_.push_back(state(line, line.tokens[i]));
  }

  void require_alphabet(const Line& line) const {
    if (!alphabet_) throw ParseError(line.tokens[0] + " before ALPHABET", line.number);
  }

  void finish() const {
    const std::size_t end_line = lines_.back().number;
    if (!alphabet_) throw ParseError("missing ALPHABET", end_line);
    if (names_.empty()) throw ParseError("missing STATES", end_line);
    if (!initial_) throw ParseError("missing INITIAL", end_line);
  }

  // Word over the alphabet, or EPS.
  std::string word(const Line& line, const std::string& tok) const {
    if (tok == kEpsToken) return {};
    for (char c : tok) {
      if (!alphabet_->contains(c)) {
        throw ParseError("label '" + tok + "' uses " + describe_symbol(c) + " outside the alphabet", line.number);
      }
    }
    return tok;
  }

  const Alphabet& alphabet() const { return *alphabet_; }
  const std::vector<std::string>& names() const { return names_; }
  std::size_t initial() const { return *initial_; }
  const std::vector<std::size_t>& accepting() const { return accepting_; }

 private:
  std::vector<Line> lines_;
  std::string keyword_;
  std::optional<Alphabet> alphabet_;
  std::vector<std::string> names_;
  std::map<std::string, std::size_t> index_;
  std::optional<std::size_t> initial_;
  std::vector<std::size_t> accepting_;
};

// Unique printable names for states; falls back to generated names when the
// declared ones collide.
template <typename Machine>
std::vector<std::string> printable_names(const Machine& m) {
  std::vector<std::string> names;
  std::set<std::string> seen;
  bool clash = false;
  for (std::size_t s = 0; s < m.num_states(); ++s) {
    names.push_back(m.state_name(static_cast<typename Machine::State>(s)));
    if (names.back() == kEpsToken || !seen.insert(names.back()).second) clash = true;
  }
  if (clash) {
    for (std::size_t s = 0; s < names.size(); ++s) names[s] = "n" + std::to_string(s);
  }
  return names;
}

std::string label_text(char c) { return c == kEpsilon ? std::string(kEpsToken) : std::string(1, c); }

template <typename Machine>
void write_header(std::ostringstream& out, const Machine& m, const std::vector<std::string>& names) {
  out << "ALPHABET";
  for (char c : m.alphabet()) out << ' ' << c;
  out << "\nSTATES";
  for (const auto& n : names) out << ' ' << n;
  out << "\nINITIAL " << names[m.initial()] << '\n';
  const auto acc = m.accepting_states();
  if (!acc.empty()) {
    out << "ACCEPT";
    for (auto s : acc) out << ' ' << names[s];
    out << '\n';
  }
}

std::string dot_escape(std::string_view s) {
  std::string r;
  for (char c : s) {
    if (c == '"' || c == '\\') r.push_back('\\');
    r.push_back(c);
  }
  return r;
}

template <typename Machine, typename LabelFn>
std::string dot(const Machine& m, std::string_view graph_name, LabelFn label) {
  const auto names = printable_names(m);
  std::ostringstream out;
  out << "digraph \"" << dot_escape(graph_name) << "\" {\n  rankdir=LR;\n  __start [shape=point];\n";
  for (std::size_t s = 0; s < names.size(); ++s) {
    const bool acc = m.is_accepting(static_cast<typename Machine::State>(s));
    out << "  \"" << dot_escape(names[s]) << "\" [shape=" << (acc ? "doublecircle" : "circle") << "];\n";
  }
  out << "  __start -> \"" << dot_escape(names[m.initial()]) << "\";\n";
  for (const auto& t : m.transitions()) {
    out << "  \"" << dot_escape(names[t.source]) << "\" -> \"" << dot_escape(names[t.target])
        << "\" [label=\"" << dot_escape(label(t)) << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace

Nfa parse_automaton(std::string_view text, std::size_t first_line) {
  BlockReader reader(text, first_line, "AUTOMATON");
  struct PendingTransition {
    std::size_t source;
    char label;
    std::size_t target;
  };
  std::vector<PendingTransition> pending;
  reader.for_each_directive([&](const Line& line) {
    const auto& head = line.tokens[0];
    if (head == "ALPHABET") {
      reader.read_alphabet(line);
    } else if (head == "STATES") {
      reader.read_states(line);
    } else if (head == "INITIAL") {
      reader.read_initial(line);
    } else if (head == "ACCEPT") {
      reader.read_accept(line);
    } else if (head == "TRANS") {
      reader.require_alphabet(line);
      if (line.tokens.size() != 4) throw ParseError("TRANS expects: TRANS <from> <label> <to>", line.number);
      const auto& label = line.tokens[2];
      char c = kEpsilon;
      if (label != kEpsToken) {
        if (label.size() != 1 || !reader.alphabet().contains(label[0])) {
          throw ParseError("label '" + label + "' is not in ALPHABET or EPS", line.number);
        }
        c = label[0];
      }
      pending.push_back({reader.state(line, line.tokens[1]), c, reader.state(line, line.tokens[3])});
    } else {
      throw ParseError("unknown directive '" + head + "'", line.number);
    }
  });
  reader.finish();

  const auto& names = reader.names();
  Nfa a(reader.alphabet(), names[0]);
  for (std::size_t i = 1; i < names.size(); ++i) a.add_state(names[i]);
  a.set_initial(static_cast<Nfa::State>(reader.initial()));
  for (auto s : reader.accepting()) a.set_accepting(static_cast<Nfa::State>(s));
  for (const auto& t : pending) {
    a.add_transition(static_cast<Nfa::State>(t.source), t.label, static_cast<Nfa::State>(t.target));
  }
  return a;
}

RawTransducer parse_raw_transducer(std::string_view text, std::size_t first_line) {
  BlockReader reader(text, first_line, "TRANSDUCER");
  std::vector<RawTransducer::Transition> pending;
  reader.for_each_directive([&](const Line& line) {
    const auto& head = line.tokens[0];
    if (head == "ALPHABET") {
      reader.read_alphabet(line);
    } else if (head == "STATES") {
      reader.read_states(line);
    } else if (head == "INITIAL") {
      reader.read_initial(line);
    } else if (head == "ACCEPT") {
      reader.read_accept(line);
    } else if (head == "TRANS") {
      reader.require_alphabet(line);
      if (line.tokens.size() != 4) throw ParseError("TRANS expects: TRANS <from> <in>/<out> <to>", line.number);
      const auto& label = line.tokens[2];
      const auto slash = label.find('/');
      if (slash == std::string::npos || label.find('/', slash + 1) != std::string::npos) {
        throw ParseError("transducer label '" + label + "' must have the form <in>/<out>", line.number);
      }
      const std::string in = label.substr(0, slash);
      const std::string out = label.substr(slash + 1);
      if (in.empty() || out.empty()) {
        throw ParseError("empty side in label '" + label + "' (write EPS)", line.number);
      }
      pending.push_back({reader.state(line, line.tokens[1]), reader.word(line, in), reader.word(line, out),
                         reader.state(line, line.tokens[3])});
    } else {
      throw ParseError("unknown directive '" + head + "'", line.number);
    }
  });
  reader.finish();
  return RawTransducer{reader.alphabet(), reader.names(), reader.initial(), reader.accepting(),
                       std::move(pending)};
}

Transducer parse_transducer(std::string_view text, std::size_t first_line) {
  return normalize(parse_raw_transducer(text, first_line));
}

std::string write_automaton(const Nfa& a) {
  const auto names = printable_names(a);
  std::ostringstream out;
  out << "AUTOMATON\n";
  write_header(out, a, names);
  for (const auto& t : a.transitions()) {
    out << "TRANS " << names[t.source] << ' ' << label_text(t.label) << ' ' << names[t.target] << '\n';
  }
  out << "END\n";
  return out.str();
}

std::string write_transducer(const Transducer& t) {
  const auto names = printable_names(t);
  std::ostringstream out;
  out << "TRANSDUCER\n";
  write_header(out, t, names);
  for (const auto& tr : t.transitions()) {
    out << "TRANS " << names[tr.source] << ' ' << label_text(tr.input) << '/' << label_text(tr.output) << ' '
        << names[tr.target] << '\n';
  }
  out << "END\n";
  return out.str();
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path.string() + "'");
  out << contents;
}

Nfa load_automaton(const std::filesystem::path& path) {
  try {
    return parse_automaton(read_text_file(path));
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what(), 0);
  }
}

Transducer load_transducer(const std::filesystem::path& path) {
  try {
    return parse_transducer(read_text_file(path));
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what(), 0);
  }
}

std::string to_dot(const Nfa& a, std::string_view graph_name) {
  return dot(a, graph_name, [](const Nfa::Transition& t) { return label_text(t.label); });
}

std::string to_dot(const Transducer& t, std::string_view graph_name) {
  return dot(t, graph_name, [](const Transducer::Transition& tr) {
    return label_text(tr.input) + "/" + label_text(tr.output);
  });
}

std::string format_word(std::string_view word) {
  return word.empty() ? std::string(kEpsToken) : std::string(word);
}

std::string parse_word(std::string_view token, const Alphabet& alphabet) {
  if (token == kEpsToken) return {};
  alphabet.check_word(token);
  return std::string(token);
}

}  // namespace ratmc
