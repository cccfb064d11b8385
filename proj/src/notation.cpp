#include "posetgames/notation.hpp"

#include <cctype>
#include <charconv>
#include <optional>
#include <vector>

#include "posetgames/game_sequence.hpp"

namespace pgames {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      line_(line),
      column_(column),
      message_(message) {}

namespace {

constexpr std::uint32_t kMaxSequenceIndex = 2000;
constexpr std::size_t kMaxNesting = 8192;

class Parser {
 public:
  Parser(std::string_view text, TermStore& store) : text_(text), store_(store) {}

  GameRef parse_all() {
    GameRef g = game();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return g;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { fail_at(pos_, msg); }

  [[noreturn]] void fail_at(std::size_t at, const std::string& msg) const {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < at && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(line, col, msg);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  GameSequence& sequence(std::size_t at) {
    if (!seq_) {
      try {
        seq_.emplace(store_);
      } catch (const GameError&) {
        fail_at(at, "macros need the atoms -3, -2, -1, 0, 1 in " + store_.poset().name());
      }
    }
    return *seq_;
  }

  std::uint32_t natural() {
    skip_ws();
    const std::size_t start = pos_;
    std::uint32_t value = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), value);
    if (ec != std::errc()) fail("expected a natural number");
    pos_ = static_cast<std::size_t>(ptr - text_.data());
    if (pos_ == start) fail("expected a natural number");
    return value;
  }

  GameRef game() {
    const char c = peek();
    const std::size_t start = pos_;
    if (c == '{') {
      if (++nesting_ > kMaxNesting) fail("games nested too deeply");
      GameRef g = brace();
      --nesting_;
      return g;
    }
    if (c == '-' || c == '+' || std::isdigit(static_cast<unsigned char>(c))) {
      if (c == '+') ++pos_;
      int label = 0;
      auto [ptr, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), label);
      if (ec != std::errc()) fail_at(start, "malformed atom label");
      pos_ = static_cast<std::size_t>(ptr - text_.data());
      auto atom = store_.poset().find_label(label);
      if (!atom) fail_at(start, "unknown atom label " + std::to_string(label) + " in " + store_.poset().name());
      return store_.atom_game(*atom);
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      if (++nesting_ > kMaxNesting) fail("games nested too deeply");
      GameRef g = macro();
      --nesting_;
      return g;
    }
    if (c == '\0') fail("unexpected end of input, expected a game");
    fail(std::string("unexpected character '") + c + "'");
  }

  GameRef brace() {
    expect('{');
    std::vector<GameRef> left = list("left");
    expect('|');
    std::vector<GameRef> right = list("right");
    expect('}');
    return store_.composite(left, right);
  }

  std::vector<GameRef> list(const char* side) {
    std::vector<GameRef> out;
    const char c = peek();
    if (c == '|' || c == '}') fail(std::string("empty ") + side + " option set");
    out.push_back(game());
    while (peek() == ',') {
      ++pos_;
      out.push_back(game());
    }
    return out;
  }

  GameRef macro() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    const std::string_view name = text_.substr(start, pos_ - start);
    if (name == "star") return sequence(start).star();

    if (name != "M" && name != "P" && name != "Ps" && name != "Pn" && name != "G")
      fail_at(start, "unknown macro '" + std::string(name) + "'");
    GameSequence& seq = sequence(start);
    expect('(');
    GameRef result;
    if (name == "G") {
      const std::size_t at = pos_;
      const std::uint32_t n = natural();
      if (n > kMaxSequenceIndex) fail_at(at, "sequence index too large (max " + std::to_string(kMaxSequenceIndex) + ")");
      result = seq.G(n);
    } else if (name == "Pn") {
      const std::uint32_t n = natural();
      expect(',');
      result = seq.Pn(n, game());
    } else {
      GameRef g = game();
      result = name == "M" ? seq.M(g) : name == "P" ? seq.P(g) : seq.Pstar(g);
    }
    expect(')');
    return result;
  }

  std::string_view text_;
  TermStore& store_;
  std::size_t pos_ = 0;
  std::size_t nesting_ = 0;
  std::optional<GameSequence> seq_;
};

void print_into(const TermStore& store, GameRef g, std::string& out) {
  const Term& t = store.term(g);
  if (t.atomic) {
    out += std::to_string(store.poset().label(t.atom));
    return;
  }
  out += '{';
  for (std::size_t i = 0; i < t.left.size(); ++i) {
    if (i) out += ',';
    print_into(store, t.left[i], out);
  }
  out += '|';
  for (std::size_t i = 0; i < t.right.size(); ++i) {
    if (i) out += ',';
    print_into(store, t.right[i], out);
  }
  out += '}';
}

}  // namespace

GameRef parse(std::string_view text, TermStore& store) { return Parser(text, store).parse_all(); }

std::string print(const TermStore& store, GameRef g) {
  std::string out;
  print_into(store, g, out);
  return out;
}

}  // namespace pgames
