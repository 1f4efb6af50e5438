#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>

#include "ratmc/nfa.hpp"
#include "ratmc/transducer.hpp"

namespace ratmc {

/// Reserved token for the empty word / epsilon label in all text formats.
inline constexpr std::string_view kEpsToken = "EPS";

// Line-oriented AUTOMATON / TRANSDUCER blocks. Parsing is strict: unknown
// directives, undeclared states and labels outside the alphabet raise
// ParseError with the offending line. `first_line` offsets the reported
// line numbers for blocks embedded in larger files.
Nfa parse_automaton(std::string_view text, std::size_t first_line = 1);
Transducer parse_transducer(std::string_view text, std::size_t first_line = 1);
RawTransducer parse_raw_transducer(std::string_view text, std::size_t first_line = 1);

std::string write_automaton(const Nfa& a);
std::string write_transducer(const Transducer& t);

Nfa load_automaton(const std::filesystem::path& path);
Transducer load_transducer(const std::filesystem::path& path);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view contents);

std::string to_dot(const Nfa& a, std::string_view graph_name = "automaton");
std::string to_dot(const Transducer& t, std::string_view graph_name = "transducer");

/// Word as written in files: "EPS" for the empty word.
std::string format_word(std::string_view word);
/// Inverse of format_word; validates against `alphabet`.
std::string parse_word(std::string_view token, const Alphabet& alphabet);

}  // namespace ratmc
