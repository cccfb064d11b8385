#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "posetgames/term_store.hpp"

namespace pgames {

/// Parse failure with a 1-based source position.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& message() const { return message_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string message_;
};

/// Reads the text form of a game:
///
///   game  := atom | '{' list '|' list '}' | macro
///   list  := game (',' game)*
///   atom  := signed integer label
///   macro := 'star' | 'M(' game ')' | 'P(' game ')' | 'Ps(' game ')'
///          | 'Pn(' nat ',' game ')' | 'G(' nat ')'
///
/// Whitespace is ignored. Macros expand immediately into plain terms.
GameRef parse(std::string_view text, TermStore& store);

/// Canonical brace form with options in store order; parse(print(g)) == g.
std::string print(const TermStore& store, GameRef g);

}  // namespace pgames
