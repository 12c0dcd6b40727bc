#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sqfree {

// One symbol of the ternary alphabet {0,1,2}.
class Letter {
public:
  constexpr Letter() = default;

  // Throws ParseError for anything outside {0,1,2} / {'0','1','2'}.
  static Letter from_int(int value);
  static Letter from_char(char c);

  constexpr int value() const noexcept { return value_; }
  constexpr char to_char() const noexcept { return static_cast<char>('0' + value_); }

  // (value + c) mod 3, c may be any integer.
  constexpr Letter shifted(int c) const noexcept {
    int v = (value_ + c % 3 + 3) % 3;
    return Letter(static_cast<std::uint8_t>(v));
  }

  friend constexpr bool operator==(Letter, Letter) = default;
  friend constexpr auto operator<=>(Letter, Letter) = default;

private:
  constexpr explicit Letter(std::uint8_t v) : value_(v) {}
  std::uint8_t value_ = 0;
};

using LetterSpan = std::span<const Letter>;

// Finite ternary word. Equality and ordering are letter-by-letter
// (lexicographic, 0 < 1 < 2).
class Word {
public:
  Word() = default;
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}
  explicit Word(LetterSpan letters) : letters_(letters.begin(), letters.end()) {}

  static Word from_ints(std::initializer_list<int> values);

  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }

  LetterSpan letters() const noexcept { return letters_; }
  operator LetterSpan() const noexcept { return letters_; }
  auto begin() const noexcept { return letters_.begin(); }
  auto end() const noexcept { return letters_.end(); }

  void push_back(Letter l) { letters_.push_back(l); }
  void pop_back() { letters_.pop_back(); }
  void append(LetterSpan other) { letters_.insert(letters_.end(), other.begin(), other.end()); }

  Word prefix(std::size_t r) const;
  Word suffix(std::size_t r) const;

  // Digits only, no whitespace.
  std::string to_string() const;

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

private:
  std::vector<Letter> letters_;
};

Word concat(const Word& a, const Word& b);

// Digits '0','1','2'; whitespace is skipped. Any other character raises
// ParseError carrying its 0-based position in `text`.
Word parse_word(std::string_view text);

// The factor letters[start, start+2*period) is a square.
struct SquareWitness {
  std::size_t start = 0;
  std::size_t period = 0;
  friend bool operator==(const SquareWitness&, const SquareWitness&) = default;
};

// Reference oracle: scans every (start, period) pair, returning the one with
// the smallest start, then smallest period. Cubic.
std::optional<SquareWitness> find_square(LetterSpan w);

// True iff some suffix of w has the form xx with x non-empty.
bool ends_with_square(LetterSpan w);

// Incremental route: no prefix ends with a square.
bool is_square_free(LetterSpan w);

// a(n), by depth-first extension. a(0) = 1.
std::uint64_t count_square_free(std::size_t n);

// Calls `consumer` once per square-free word of length n, lexicographic order.
void enumerate_square_free(std::size_t n, const std::function<void(const Word&)>& consumer);

Word shift(const Word& w, int c);
Word reverse(const Word& w);
bool is_palindrome(const Word& w);

} // namespace sqfree
