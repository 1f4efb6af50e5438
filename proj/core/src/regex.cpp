#include "ratmc/regex.hpp"

#include <cctype>
#include <sstream>
#include <vector>

#include "ratmc/error.hpp"

namespace ratmc {

struct StarFreeRegex::Node {
  Kind kind;
  char symbol = 0;
  std::vector<StarFreeRegex> children;
};

StarFreeRegex StarFreeRegex::letter(char a) {
  return StarFreeRegex(std::make_shared<const Node>(Node{Kind::Letter, a, {}}));
}
StarFreeRegex StarFreeRegex::complement(StarFreeRegex e) {
  return StarFreeRegex(std::make_shared<const Node>(Node{Kind::Complement, 0, {std::move(e)}}));
}
StarFreeRegex StarFreeRegex::alternative(StarFreeRegex a, StarFreeRegex b) {
  return StarFreeRegex(std::make_shared<const Node>(Node{Kind::Union, 0, {std::move(a), std::move(b)}}));
}
StarFreeRegex StarFreeRegex::concat(StarFreeRegex a, StarFreeRegex b) {
  return StarFreeRegex(std::make_shared<const Node>(Node{Kind::Concat, 0, {std::move(a), std::move(b)}}));
}

StarFreeRegex::Kind StarFreeRegex::kind() const { return node_->kind; }
char StarFreeRegex::symbol() const { return node_->symbol; }
const StarFreeRegex& StarFreeRegex::child(std::size_t i) const { return node_->children.at(i); }

std::size_t StarFreeRegex::size() const {
  std::size_t n = 1;
  for (const auto& c : node_->children) n += c.size();
  return n;
}

bool operator==(const StarFreeRegex& a, const StarFreeRegex& b) {
  if (a.node_ == b.node_) return true;
  return a.node_->kind == b.node_->kind && a.node_->symbol == b.node_->symbol &&
         a.node_->children == b.node_->children;
}

namespace {

class RegexParser {
 public:
  RegexParser(std::string_view text, const std::optional<Alphabet>& alphabet) : text_(text), alphabet_(alphabet) {}

  StarFreeRegex parse() {
    StarFreeRegex e = parse_union();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, 1, pos_ + 1); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  StarFreeRegex parse_union() {
    StarFreeRegex left = parse_concat();
    while (accept('+')) left = StarFreeRegex::alternative(left, parse_concat());
    return left;
  }

  StarFreeRegex parse_concat() {
    StarFreeRegex left = parse_prefix();
    while (accept(';')) left = StarFreeRegex::concat(left, parse_prefix());
    return left;
  }

  StarFreeRegex parse_prefix() {
    if (accept('!')) return StarFreeRegex::complement(parse_prefix());
    if (accept('(')) {
      StarFreeRegex e = parse_union();
      if (!accept(')')) fail("expected ')'");
      return e;
    }
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of expression");
    const char c = text_[pos_];
    const bool operator_char = c == '+' || c == ';' || c == ')' || c == '!' || c == '(';
    const bool valid = alphabet_ ? alphabet_->contains(c) : Alphabet::is_valid_symbol(c);
    if (operator_char || !valid) fail("'" + std::string(1, c) + "' is not a letter of the alphabet");
    ++pos_;
    return StarFreeRegex::letter(c);
  }

  std::string_view text_;
  const std::optional<Alphabet>& alphabet_;
  std::size_t pos_ = 0;
};

void print(std::ostream& out, const StarFreeRegex& e) {
  switch (e.kind()) {
    case StarFreeRegex::Kind::Letter: out << e.symbol(); return;
    case StarFreeRegex::Kind::Complement: out << '!'; print(out, e.child()); return;
    case StarFreeRegex::Kind::Union:
    case StarFreeRegex::Kind::Concat:
      out << '(';
      print(out, e.child(0));
      out << (e.kind() == StarFreeRegex::Kind::Union ? " + " : " ; ");
      print(out, e.child(1));
      out << ')';
      return;
  }
}

}  // namespace

StarFreeRegex parse_regex(std::string_view text, const std::optional<Alphabet>& alphabet) {
  return RegexParser(text, alphabet).parse();
}

std::string to_string(const StarFreeRegex& e) {
  std::ostringstream out;
  print(out, e);
  return out.str();
}

Formula translate_regex(const StarFreeRegex& e) {
  switch (e.kind()) {
    case StarFreeRegex::Kind::Letter: return Formula::letter(e.symbol());
    case StarFreeRegex::Kind::Complement: return Formula::negation(translate_regex(e.child()));
    case StarFreeRegex::Kind::Union:
      return Formula::disjunction(translate_regex(e.child(0)), translate_regex(e.child(1)));
    case StarFreeRegex::Kind::Concat:
      return Formula::program_diamond(Program::arrow(translate_regex(e.child(0))), translate_regex(e.child(1)));
  }
  throw Error("unknown regex node");
}

}  // namespace ratmc
