#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "ratmc/alphabet.hpp"
#include "ratmc/formula.hpp"

namespace ratmc {

/// Extended star-free regular expression: letters, complement, union and
/// concatenation; no Kleene star.
class StarFreeRegex {
 public:
  enum class Kind { Letter, Complement, Union, Concat };

  static StarFreeRegex letter(char a);
  static StarFreeRegex complement(StarFreeRegex e);
  static StarFreeRegex alternative(StarFreeRegex a, StarFreeRegex b);
  static StarFreeRegex concat(StarFreeRegex a, StarFreeRegex b);

  Kind kind() const;
  char symbol() const;
  const StarFreeRegex& child(std::size_t i = 0) const;
  std::size_t size() const;

  friend bool operator==(const StarFreeRegex& a, const StarFreeRegex& b);

 private:
  struct Node;
  explicit StarFreeRegex(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Grammar: E := CHAR | !E | E + E | E ; E | (E). `+` binds loosest, then
/// `;`, then prefix `!`. Whitespace is ignored. Letters must belong to
/// `alphabet` when one is given.
StarFreeRegex parse_regex(std::string_view text, const std::optional<Alphabet>& alphabet = std::nullopt);

std::string to_string(const StarFreeRegex& e);

/// Linear translation into word-based PDL: a -> lit(a), !E -> ~E,
/// E1 + E2 -> E1 | E2, E1 ; E2 -> <<arrow(E1)>>E2.
Formula translate_regex(const StarFreeRegex& e);

}  // namespace ratmc
