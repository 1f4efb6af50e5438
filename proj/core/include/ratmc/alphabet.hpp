#pragma once

#include <cstddef>
#include <string>
#include <string_view>

namespace ratmc {

/// Reserved label for the empty word. Never a member of an Alphabet.
inline constexpr char kEpsilon = '\0';

/// Finite ordered set of single-character symbols. Declaration order is
/// kept; it drives deterministic iteration and witness tie-breaking.
/// Equality is set equality.
class Alphabet {
 public:
  /// Throws InputError when `symbols` is empty, repeats a symbol, or
  /// contains a character that cannot be a symbol (whitespace, control
  /// characters, '#', '/').
  explicit Alphabet(std::string_view symbols);

  const std::string& symbols() const noexcept { return symbols_; }
  std::size_t size() const noexcept { return symbols_.size(); }
  bool contains(char c) const noexcept;

  /// Position in declaration order; throws InputError for a non-member.
  std::size_t index_of(char c) const;

  /// Throws InputError naming the first character of `word` outside the alphabet.
  void check_word(std::string_view word) const;

  /// Copy without `c`. Throws InputError if that would leave it empty.
  Alphabet without(char c) const;

  auto begin() const noexcept { return symbols_.begin(); }
  auto end() const noexcept { return symbols_.end(); }

  friend bool operator==(const Alphabet& a, const Alphabet& b);

  static bool is_valid_symbol(char c) noexcept;

 private:
  std::string symbols_;
};

/// Throws InputError unless the two alphabets are equal as sets.
void require_same_alphabet(const Alphabet& a, const Alphabet& b, std::string_view what);

std::string describe_symbol(char c);

}  // namespace ratmc
