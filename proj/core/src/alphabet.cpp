#include "ratmc/alphabet.hpp"

#include <algorithm>

#include "ratmc/error.hpp"

namespace ratmc {

ParseError::ParseError(const std::string& message, std::size_t line, std::size_t column)
    : InputError(line == 0 ? message
                           : "line " + std::to_string(line) +
                                 (column == 0 ? "" : ", column " + std::to_string(column)) +
                                 ": " + message),
      line_(line),
      column_(column) {}

bool Alphabet::is_valid_symbol(char c) noexcept {
  const auto u = static_cast<unsigned char>(c);
  return u > 0x20 && u < 0x7f && c != '#' && c != '/';
}

std::string describe_symbol(char c) {
  if (c == kEpsilon) return "EPS";
  if (Alphabet::is_valid_symbol(c)) return std::string("'") + c + "'";
  return "\\x" + std::to_string(static_cast<unsigned>(static_cast<unsigned char>(c)));
}

Alphabet::Alphabet(std::string_view symbols) : symbols_(symbols) {
  if (symbols_.empty()) throw InputError("alphabet must not be empty");
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    const char c = symbols_[i];
    if (!is_valid_symbol(c)) throw InputError("invalid alphabet symbol " + describe_symbol(c));
    if (symbols_.find(c) != i) throw InputError("duplicate alphabet symbol " + describe_symbol(c));
  }
}

bool Alphabet::contains(char c) const noexcept {
  return c != kEpsilon && symbols_.find(c) != std::string::npos;
}

std::size_t Alphabet::index_of(char c) const {
  const auto pos = symbols_.find(c);
  if (c == kEpsilon || pos == std::string::npos) {
    throw InputError("symbol " + describe_symbol(c) + " is not in the alphabet");
  }
  return pos;
}

void Alphabet::check_word(std::string_view word) const {
  for (char c : word) {
    if (!contains(c)) {
      throw InputError("word \"" + std::string(word) + "\" uses symbol " + describe_symbol(c) +
                       " outside the alphabet {" + symbols_ + "}");
    }
  }
}

Alphabet Alphabet::without(char c) const {
  std::string rest = symbols_;
  rest.erase(std::remove(rest.begin(), rest.end(), c), rest.end());
  if (rest.empty()) throw InputError("removing " + describe_symbol(c) + " empties the alphabet");
  return Alphabet(rest);
}

bool operator==(const Alphabet& a, const Alphabet& b) {
  if (a.size() != b.size()) return false;
  return std::all_of(a.begin(), a.end(), [&](char c) { return b.contains(c); });
}

void require_same_alphabet(const Alphabet& a, const Alphabet& b, std::string_view what) {
  if (!(a == b)) {
    throw InputError(std::string(what) + ": alphabet mismatch ({" + a.symbols() + "} vs {" +
                     b.symbols() + "})");
  }
}

}  // namespace ratmc
