#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <optional>

#include "ratmc/automata.hpp"
#include "ratmc/automaton_io.hpp"
#include "ratmc/checker.hpp"
#include "ratmc/error.hpp"
#include "ratmc/model.hpp"
#include "ratmc/parser.hpp"
#include "ratmc/regex.hpp"

namespace ratmc::cli {
namespace {

struct Options {
  std::string model;
  std::string formula;
  std::string state;
  std::string output;
  std::string dot;
  bool stats = false;

  std::string alphabet;
  std::string regex1;
  std::string regex2;

  std::string automaton1;
  std::string automaton2;
  std::string word;
};

void print_stats(const Checker& checker, std::ostream& err) {
  for (const auto& step : checker.stats()) err << "stat " << step.to_string() << '\n';
}

struct Query {
  Checker checker;
  Formula formula;
};

Query load_query(const Options& o) {
  RationalKripkeModel m = load_model(o.model);
  const Formula f = parse_formula(o.formula, signature_of(m));
  return Query{Checker(std::move(m)), f};
}

int cmd_global(const Options& o, std::ostream& out, std::ostream& err) {
  Query q = load_query(o);
  const Nfa result = q.checker.global_check(q.formula);
  if (o.output.empty()) {
    out << write_automaton(result);
  } else {
    write_text_file(o.output, write_automaton(result));
    out << "states=" << result.num_states() << " transitions=" << result.num_transitions() << '\n';
  }
  if (!o.dot.empty()) write_text_file(o.dot, to_dot(result, "extension"));
  if (o.stats) print_stats(q.checker, err);
  return kTrue;
}

int cmd_local(const Options& o, std::ostream& out, std::ostream& err) {
  Query q = load_query(o);
  const std::string state = parse_word(o.state, q.checker.model().alphabet);
  const bool holds = q.checker.local_check(state, q.formula);
  out << (holds ? "true" : "false") << '\n';
  if (o.stats) print_stats(q.checker, err);
  return holds ? kTrue : kFalse;
}

int cmd_sat(const Options& o, std::ostream& out, std::ostream& err) {
  Query q = load_query(o);
  const auto witness = q.checker.sat_check(q.formula);
  if (witness) {
    out << format_word(*witness) << '\n';
  } else {
    out << "unsatisfiable\n";
  }
  if (o.stats) print_stats(q.checker, err);
  return witness ? kTrue : kFalse;
}

int cmd_regex(const Options& o, std::ostream& out) {
  const Alphabet alphabet(o.alphabet);
  const bool equal = regex_equiv(parse_regex(o.regex1, alphabet), parse_regex(o.regex2, alphabet), alphabet);
  out << (equal ? "equivalent" : "not equivalent") << '\n';
  return equal ? kTrue : kFalse;
}

int cmd_validate(const Options& o, std::ostream& out) {
  const RationalKripkeModel m = load_model(o.model, false);
  const auto diagnostics = validate(m);
  for (const auto& d : diagnostics) out << d.to_string() << '\n';
  const bool ok = std::none_of(diagnostics.begin(), diagnostics.end(), [](const Diagnostic& d) { return d.is_error(); });
  out << "model '" << m.name << "': " << (ok ? "valid" : "invalid") << " (" << m.relations.size()
      << " relations, " << m.valuation.size() << " propositions, " << m.nominals.size() << " nominals)\n";
  return ok ? kTrue : kFalse;
}

int verdict(bool holds, const char* yes, const char* no, std::ostream& out) {
  out << (holds ? yes : no) << '\n';
  return holds ? kTrue : kFalse;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Symbolic model checker for tense logic over rational Kripke models", "ratmc"};
  app.require_subcommand(1);
  Options o;

  auto add_query = [&](CLI::App* cmd) {
    cmd->add_option("-m,--model", o.model, "Model file")->required();
    cmd->add_option("-f,--formula", o.formula, "Formula")->required();
    cmd->add_flag("--stats", o.stats, "Print per-node evaluation statistics to stderr");
  };

  auto* global = app.add_subcommand("global", "Compute the extension automaton of a formula");
  add_query(global);
  global->add_option("-o,--output", o.output, "Write the extension automaton to this file");
  global->add_option("--dot", o.dot, "Write a DOT rendering of the extension");

  auto* local = app.add_subcommand("local", "Check a formula at one state");
  add_query(local);
  local->add_option("-s,--state", o.state, "State word (EPS for the empty word)")->required();

  auto* sat = app.add_subcommand("sat", "Find a shortest state satisfying a formula");
  add_query(sat);

  auto* regex = app.add_subcommand("regex", "Decide equivalence of two star-free expressions");
  regex->add_option("--alphabet", o.alphabet, "Alphabet symbols, e.g. 01")->required();
  regex->add_option("e1", o.regex1, "First expression")->required();
  regex->add_option("e2", o.regex2, "Second expression")->required();

  auto* lang = app.add_subcommand("lang", "Decision procedures on automaton files");
  lang->require_subcommand(1);
  auto* empty = lang->add_subcommand("empty", "Exit 0 iff the language is empty");
  empty->add_option("automaton", o.automaton1)->required();
  auto* equiv = lang->add_subcommand("equiv", "Exit 0 iff both languages are equal");
  equiv->add_option("a", o.automaton1)->required();
  equiv->add_option("b", o.automaton2)->required();
  auto* count = lang->add_subcommand("count", "Print the number of accepted words");
  count->add_option("automaton", o.automaton1)->required();
  auto* member = lang->add_subcommand("member", "Exit 0 iff the word is accepted");
  member->add_option("automaton", o.automaton1)->required();
  member->add_option("word", o.word, "Word (EPS for the empty word)")->required();

  auto* check = app.add_subcommand("validate", "Check a model file");
  check->add_option("-m,--model", o.model, "Model file")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kTrue;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kTrue;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kInputError;
  }

  try {
    if (global->parsed()) return cmd_global(o, out, err);
    if (local->parsed()) return cmd_local(o, out, err);
    if (sat->parsed()) return cmd_sat(o, out, err);
    if (regex->parsed()) return cmd_regex(o, out);
    if (check->parsed()) return cmd_validate(o, out);
    if (empty->parsed()) return verdict(is_empty(load_automaton(o.automaton1)), "empty", "non-empty", out);
    if (equiv->parsed()) {
      return verdict(is_equivalent(load_automaton(o.automaton1), load_automaton(o.automaton2)), "equivalent",
                     "not equivalent", out);
    }
    if (count->parsed()) {
      out << count_words(load_automaton(o.automaton1)).to_string() << '\n';
      return kTrue;
    }
    if (member->parsed()) {
      const Nfa a = load_automaton(o.automaton1);
      return verdict(accepts(a, parse_word(o.word, a.alphabet())), "accepted", "rejected", out);
    }
  } catch (const UnsupportedFragment& e) {
    err << "unsupported: " << e.what() << '\n';
    return kUnsupported;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  err << app.help();
  return kInputError;
}

}  // namespace ratmc::cli
