#include "ratmc/parser.hpp"

#include <cctype>
#include <limits>

#include "ratmc/error.hpp"

namespace ratmc {

namespace {

class FormulaParser {
 public:
  FormulaParser(std::string_view text, const FormulaSignature& signature) : text_(text), sig_(signature) {}

  Formula parse() {
    Formula f = parse_implies();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, 1, pos_ + 1); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(std::string_view token) {
    skip_space();
    return text_.substr(pos_, token.size()) == token;
  }

  bool accept(std::string_view token) {
    if (!peek(token)) return false;
    pos_ += token.size();
    return true;
  }

  void expect(std::string_view token) {
    if (!accept(token)) fail("expected '" + std::string(token) + "'");
  }

  static bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
  static bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

  bool peek_ident() {
    skip_space();
    return pos_ < text_.size() && ident_start(text_[pos_]);
  }

  std::string ident() {
    if (!peek_ident()) fail("expected identifier");
    const std::size_t start = pos_;
    while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  // Keyword followed by a non-identifier character.
  bool accept_keyword(std::string_view word) {
    skip_space();
    if (text_.substr(pos_, word.size()) != word) return false;
    const std::size_t after = pos_ + word.size();
    if (after < text_.size() && ident_char(text_[after])) return false;
    pos_ = after;
    return true;
  }

  std::uint64_t natural() {
    skip_space();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) fail("expected a number");
    std::uint64_t value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      const auto digit = static_cast<std::uint64_t>(text_[pos_] - '0');
      if (value > (std::numeric_limits<std::uint64_t>::max() - digit) / 10) fail("number too large");
      value = value * 10 + digit;
      ++pos_;
    }
    return value;
  }

  void check_declared(const std::set<std::string>& names, const std::string& name, const char* what) {
    if (!sig_.open && !names.count(name)) fail(std::string("unknown ") + what + " '" + name + "'");
  }

  RelRef relref() {
    const std::size_t start = pos_;
    RelRef r{ident(), false};
    if (r.name == "U" || r.name == "D") {
      pos_ = start;
      fail("'" + r.name + "' is reserved for the universal/difference modality");
    }
    check_declared(sig_.relations, r.name, "relation");
    if (accept("~")) r.inverse = true;
    return r;
  }

  Formula parse_implies() {
    Formula left = parse_or();
    if (accept("->")) return Formula::implication(left, parse_implies());
    return left;
  }

  Formula parse_or() {
    Formula left = parse_and();
    while (accept("|")) left = Formula::disjunction(left, parse_and());
    return left;
  }

  Formula parse_and() {
    Formula left = parse_prefix();
    while (accept("&")) left = Formula::conjunction(left, parse_prefix());
    return left;
  }

  Formula parse_prefix() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of formula");
    if (accept("~")) return Formula::negation(parse_prefix());
    if (accept("<<")) {
      Program p = parse_program();
      expect(">>");
      return Formula::program_diamond(p, parse_prefix());
    }
    if (accept("[[")) {
      Program p = parse_program();
      expect("]]");
      return Formula::program_box(p, parse_prefix());
    }
    if (accept("<")) {
      if (accept_keyword("U")) {
        expect(">");
        return Formula::univ_diamond(parse_prefix());
      }
      if (accept_keyword("D")) {
        expect(">");
        return Formula::diff_diamond(parse_prefix());
      }
      RelRef r = relref();
      expect(">");
      return Formula::diamond(r, parse_prefix());
    }
    if (accept("[")) {
      if (accept_keyword("U")) {
        expect("]");
        return Formula::univ_box(parse_prefix());
      }
      if (accept_keyword("D")) {
        expect("]");
        return Formula::diff_box(parse_prefix());
      }
      RelRef r = relref();
      expect("]");
      return Formula::box(r, parse_prefix());
    }
    if (accept("@")) {
      std::string name = ident();
      check_declared(sig_.nominals, name, "nominal");
      expect(".");
      return Formula::at(name, parse_prefix());
    }
    if (accept("(")) {
      Formula f = parse_implies();
      expect(")");
      return f;
    }
    if (accept("#")) {
      std::string name = ident();
      check_declared(sig_.nominals, name, "nominal");
      return Formula::nominal(name);
    }
    if (peek("\xE2\x86\x93")) binder_rejected();  // U+2193
    if (accept_keyword("down")) binder_rejected();
    if (accept_keyword("true")) return Formula::top();
    if (accept_keyword("false")) return Formula::bottom();
    if (accept_keyword("lit")) {
      expect("(");
      skip_space();
      if (pos_ >= text_.size()) fail("expected a letter");
      const char a = text_[pos_];
      const bool valid = sig_.alphabet ? sig_.alphabet->contains(a) : Alphabet::is_valid_symbol(a);
      if (!valid) fail("'" + std::string(1, a) + "' is not a letter of the alphabet");
      ++pos_;
      expect(")");
      return Formula::letter(a);
    }
    if (accept_keyword("count")) {
      expect("(");
      RelRef r = relref();
      expect(",");
      Comparison cmp;
      if (accept(">=")) {
        cmp = Comparison::at_least(natural());
      } else if (accept("<=")) {
        cmp = Comparison::at_most(natural());
      } else if (accept("=")) {
        cmp = Comparison::exactly(natural());
      } else if (accept_keyword("inf")) {
        cmp = Comparison::infinitely_many();
      } else {
        fail("expected '>=', '<=', '=' or 'inf'");
      }
      expect(")");
      return Formula::count(r, cmp, parse_prefix());
    }
    if (peek_ident()) {
      const std::size_t start = pos_;
      std::string name = ident();
      if (name == "arrow") {
        pos_ = start;
        fail("'arrow' is only valid inside a program");
      }
      if (!sig_.open && !sig_.propositions.count(name)) {
        pos_ = start;
        fail("unknown proposition '" + name + "'");
      }
      return Formula::atom(name);
    }
    fail("unexpected '" + std::string(1, text_[pos_]) + "'");
  }

  [[noreturn]] void binder_rejected() const {
    throw UndecidableConstruct(
        "column " + std::to_string(pos_ + 1) +
        ": the state binder 'down' is not supported: model checking down x.<R>x over rational "
        "Kripke models is undecidable (reduction from the Post Correspondence Problem)");
  }

  Program parse_program() {
    Program left = parse_program_sequence();
    while (accept("+")) left = Program::choice(left, parse_program_sequence());
    return left;
  }

  Program parse_program_sequence() {
    Program left = parse_program_postfix();
    while (accept(";")) left = Program::sequence(left, parse_program_postfix());
    return left;
  }

  Program parse_program_postfix() {
    Program p = parse_program_primary();
    while (accept("'")) p = Program::converse(p);
    return p;
  }

  Program parse_program_primary() {
    if (accept_keyword("arrow")) {
      expect("(");
      Formula f = parse_implies();
      expect(")");
      return Program::arrow(f);
    }
    // A test `f?` and a program can start alike; try the test first.
    const std::size_t start = pos_;
    try {
      Formula f = parse_implies();
      if (accept("?")) return Program::test(f);
    } catch (const ParseError&) {
    }
    pos_ = start;
    if (accept("(")) {
      Program p = parse_program();
      expect(")");
      return p;
    }
    return Program::atomic(relref());
  }

  std::string_view text_;
  const FormulaSignature& sig_;
  std::size_t pos_ = 0;
};

}  // namespace

Formula parse_formula(std::string_view text, const FormulaSignature& signature) {
  return FormulaParser(text, signature).parse();
}

}  // namespace ratmc
