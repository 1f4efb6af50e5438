// Acceptance criteria: one PASS/FAIL line each; exit status 1 if any fail.

#include <chrono>
#include <functional>
#include <iostream>
#include <regex>
#include <sstream>

#include "cli.hpp"
#include "ratmc/automata.hpp"
#include "ratmc/checker.hpp"
#include "ratmc/error.hpp"
#include "ratmc/normal_form.hpp"
#include "ratmc/parser.hpp"
#include "ratmc/regex.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace ratmc;

namespace {

const Alphabet kBinary("01");

struct Outcome {
  bool pass;
  std::string detail;
};

Outcome fail(std::string why) { return {false, std::move(why)}; }

Outcome worked_product_example() {
  const RationalKripkeModel m = fx::model("worked.rkm");
  const Nfa result = global_check(m, parse_formula("<R>x", signature_of(m)));
  const Nfa expected = fx::zeros_then_ones_nonempty_or_zeros();
  if (!is_equivalent(result, expected)) return fail("extension differs from 0* + 0*1+");
  for (const auto& w : oracle::words_up_to(kBinary, 10)) {
    if (oracle::member(result, w) != oracle::member(expected, w)) return fail("differs on " + w);
  }
  return {true, "<R>x == 0* + 0*1+"};
}

Outcome petri_fixture() {
  const RationalKripkeModel m = fx::model("petri.rkm");
  // Oracle first: pairs from runs of at most 16 steps, |u| <= 8.
  std::set<std::string> oracle_set;
  for (const auto& [u, v] : oracle::bounded_pairs(m.relations.at("R"), 8, 16)) {
    if (oracle::member(m.states, u) && oracle::member(m.states, v) && oracle::member(fx::petri_q(), v)) {
      oracle_set.insert(u);
    }
  }
  std::set<std::string> closed_form;
  for (std::size_t a = 0; a + 3 <= 8; ++a) closed_form.insert(std::string(a + 2, '0') + "1");
  if (oracle_set != closed_form) return fail("run enumeration does not give 0^(a+2)1");

  Checker checker(m);
  const auto sig = signature_of(m);
  if (!is_equivalent(checker.global_check(parse_formula("p", sig)), fx::petri_p())) return fail("[[p]] != 0010*");
  if (!is_equivalent(checker.global_check(parse_formula("q", sig)), fx::petri_q())) return fail("[[q]] != 0*1000");
  const Nfa diamond = checker.global_check(parse_formula("<R>q", sig));
  if (oracle::language_up_to(diamond, 8) != oracle_set) return fail("[[<R>q]] disagrees with the run oracle");
  if (!is_equivalent(diamond, fx::petri_diamond_q())) return fail("[[<R>q]] != 000*1");
  return {true, std::to_string(oracle_set.size()) + " oracle words, [[<R>q]] == 000*1"};
}

Outcome complement_identity() {
  gen::Rng rng(1001);
  for (int i = 0; i < 50; ++i) {
    const Nfa x = gen::nfa(rng, kBinary, 5, 0.1);
    RationalKripkeModel m = free_word_model(kBinary);
    m.relations.emplace("R", eraser_relation(x));
    const Nfa ext = global_check(m, Formula::box({"R", false}, Formula::bottom()));
    for (const auto& w : oracle::words_up_to(kBinary, 7)) {
      if (oracle::member(ext, w) == oracle::member(x, w)) return fail("case " + std::to_string(i) + " word " + w);
    }
    if (!is_equivalent(ext, complement(x, Nfa::universal(kBinary)))) return fail("case " + std::to_string(i));
  }
  return {true, "50/50 cases"};
}

Outcome rank_example() {
  FormulaSignature sig;
  sig.relations = {"R"};
  sig.propositions = {"p", "q"};
  const Formula f = parse_formula("[R](<R>[R]p | [R][R~]~q)", sig);
  const auto ar = alternating_ranks(f);
  std::ostringstream d;
  d << "ar_box=" << ar.box << " ar_diamond=" << ar.diamond << " ar=" << alternation_rank(f);
  return {ar.box == 3 && ar.diamond == 2 && alternation_rank(f) == 3, d.str()};
}

Outcome product_oracle() {
  gen::Rng rng(1002);
  std::size_t checks = 0;
  for (int i = 0; i < 100; ++i) {
    const Transducer t = gen::transducer(rng, kBinary, 4);
    const Nfa a = gen::nfa(rng, kBinary, 4, 0.1);
    const Nfa pre = preimage(t, a);
    for (const auto& u : oracle::words_up_to(kBinary, 4)) {
      const std::size_t bound = (u.size() + 1) * t.num_states() * a.num_states();
      if (accepts(pre, u) != oracle::preimage_member(t, a, u, bound)) {
        return fail("pair " + std::to_string(i) + " word " + u);
      }
      ++checks;
    }
  }
  return {true, std::to_string(checks) + " memberships agree"};
}

Outcome counting() {
  gen::Rng rng(1003);
  std::size_t infinite = 0;
  for (int i = 0; i < 50; ++i) {
    const Nfa a = gen::nfa(rng, kBinary, 5, 0.0, 0.45);
    const Cardinality n = count_words(a);
    const auto enumerated = oracle::count_by_enumeration(a);
    if (n.is_infinite() != !enumerated.has_value()) return fail("finiteness differs, case " + std::to_string(i));
    if (enumerated && n.count() != *enumerated) return fail("count differs, case " + std::to_string(i));
    infinite += n.is_infinite() ? 1 : 0;
    for (std::size_t k = 0; k <= 5; ++k) {
      const bool removal = oracle::at_least_by_removal(a, k);
      if (n.at_least(k) != removal || has_at_least(a, k) != removal) {
        return fail("at-least-" + std::to_string(k) + " differs, case " + std::to_string(i));
      }
    }
  }
  return {true, "50/50 automata (" + std::to_string(infinite) + " infinite)"};
}

Outcome wpdl_laws() {
  gen::Rng rng(1004);
  for (int i = 0; i < 25; ++i) {
    const RationalKripkeModel m = gen::model(rng, true);
    Checker checker(m);
    const Formula phi = gen::tense_formula(rng, 1, 3);
    const Formula psi = gen::tense_formula(rng, 1, 3);
    const Nfa a = checker.global_check(phi);
    const Nfa b = checker.global_check(psi);
    const Nfa test = checker.global_check(Formula::program_diamond(Program::test(phi), psi));
    const Nfa arrow = checker.global_check(Formula::program_diamond(Program::arrow(phi), psi));
    if (!is_equivalent(test, intersection(a, b))) return fail("test law, model " + std::to_string(i));
    if (!is_equivalent(arrow, oracle::concatenate(a, b))) return fail("arrow law, model " + std::to_string(i));
  }
  return {true, "25/25 models"};
}

Outcome regex_translation() {
  gen::Rng rng(1005);
  const RationalKripkeModel m = free_word_model(kBinary);
  const auto words = oracle::words_up_to(kBinary, 6);
  double slowest = 0;
  for (int i = 0; i < 50; ++i) {
    const StarFreeRegex e = gen::regex(rng, 4);
    const auto start = std::chrono::steady_clock::now();
    const Nfa ext = global_check(m, translate_regex(e));
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    slowest = std::max(slowest, secs);
    if (secs > 10.0) return fail(to_string(e) + " took " + std::to_string(secs) + " s");
    for (const auto& w : words) {
      if (oracle::member(ext, w) != oracle::regex_matches(e, w)) return fail(to_string(e) + " on " + w);
    }
  }
  std::ostringstream d;
  d << "50/50 expressions, slowest " << slowest << " s";
  return {true, d.str()};
}

Outcome size_regime() {
  static const std::regex field(R"((\w+)=(\d+))");
  std::size_t steps = 0;
  for (int depth = 1; depth <= 4; ++depth) {
    std::string f = "x";
    for (int k = 0; k < depth; ++k) f = "<R>" + f;
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run({"global", "-m", fx::path("worked.rkm"), "-f", f, "--stats"}, out, err);
    if (code != 0) return fail("exit " + std::to_string(code) + " for " + f);
    std::istringstream lines(err.str());
    std::size_t products = 0;
    for (std::string line; std::getline(lines, line);) {
      std::map<std::string, std::size_t> v;
      for (std::sregex_iterator it(line.begin(), line.end(), field), end; it != end; ++it) {
        v[(*it)[1]] = std::stoul((*it)[2]);
      }
      if (!v.count("product_transitions")) continue;
      ++products;
      if (v["product_transitions"] > v["relation_transitions"] * (v["operand_transitions"] + v["operand_states"])) {
        return fail("bound violated: " + line);
      }
    }
    if (products != static_cast<std::size_t>(depth)) return fail("expected one product line per diamond in " + f);
    steps += products;
  }
  return {true, std::to_string(steps) + " product steps within |T|(|A|+|Q_A|)"};
}

Outcome decidability_gates() {
  auto code = [](std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    return cli::run(args, out, err);
  };
  try {
    FormulaSignature sig;
    sig.relations = {"R"};
    parse_formula("down x. <R> x", sig);
    return fail("binder parsed");
  } catch (const UndecidableConstruct&) {
  }
  const std::string petri = fx::path("petri.rkm");
  const int binder = code({"global", "-m", petri, "-f", "down x. <R> x"});
  const int nested = code({"local", "-m", petri, "-s", "00100", "-f", "<R> count(R,>=1) true"});
  const int global = code({"global", "-m", petri, "-f", "count(R,>=1) q"});
  const int allowed = code({"local", "-m", petri, "-s", "00100", "-f", "count(R,=1) true"});
  std::ostringstream d;
  d << "binder=" << binder << " nested-count=" << nested << " global-count=" << global << " top-count=" << allowed;
  return {binder == 3 && nested == 3 && global == 3 && allowed == 0, d.str()};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"worked product example", worked_product_example},
      {"Petri net fixture", petri_fixture},
      {"complement via eraser relation", complement_identity},
      {"rank example", rank_example},
      {"synchronized product oracle", product_oracle},
      {"counting procedures", counting},
      {"WPDL test and arrow laws", wpdl_laws},
      {"star-free regex translation", regex_translation},
      {"product size regime", size_regime},
      {"decidability gates", decidability_gates},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o{false, ""};
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = fail(std::string("exception: ") + e.what());
    }
    failures += o.pass ? 0 : 1;
    std::cout << (o.pass ? "PASS" : "FAIL") << " [" << i + 1 << "] " << criteria[i].first << ": " << o.detail << '\n';
  }
  return failures == 0 ? 0 : 1;
}
