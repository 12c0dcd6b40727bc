#include "sqfree/words.hpp"

#include <algorithm>
#include <cctype>

#include "sqfree/error.hpp"

namespace sqfree {

Letter Letter::from_int(int value) {
  if (value < 0 || value > 2)
    throw ParseError("letter out of range: " + std::to_string(value), 0);
  return Letter(static_cast<std::uint8_t>(value));
}

Letter Letter::from_char(char c) {
  if (c < '0' || c > '2')
    throw ParseError(std::string("invalid letter '") + c + "'", 0);
  return Letter(static_cast<std::uint8_t>(c - '0'));
}

Word Word::from_ints(std::initializer_list<int> values) {
  std::vector<Letter> letters;
  letters.reserve(values.size());
  for (int v : values)
    letters.push_back(Letter::from_int(v));
  return Word(std::move(letters));
}

Word Word::prefix(std::size_t r) const {
  if (r > size())
    throw RangeError("prefix length exceeds word length");
  return Word(letters().first(r));
}

Word Word::suffix(std::size_t r) const {
  if (r > size())
    throw RangeError("suffix length exceeds word length");
  return Word(letters().last(r));
}

std::string Word::to_string() const {
  std::string out;
  out.reserve(size());
  for (Letter l : letters_)
    out.push_back(l.to_char());
  return out;
}

Word concat(const Word& a, const Word& b) {
  Word out = a;
  out.append(b);
  return out;
}

Word parse_word(std::string_view text) {
  std::vector<Letter> letters;
  letters.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c)))
      continue;
    if (c < '0' || c > '2')
      throw ParseError("invalid character '" + std::string(1, c) + "' at position " +
                           std::to_string(i),
                       i);
    letters.push_back(Letter::from_char(c));
  }
  return Word(std::move(letters));
}

std::optional<SquareWitness> find_square(LetterSpan w) {
  const std::size_t n = w.size();
  for (std::size_t start = 0; start < n; ++start) {
    for (std::size_t p = 1; start + 2 * p <= n; ++p) {
      bool equal = true;
      for (std::size_t t = 0; t < p; ++t) {
        if (w[start + t] != w[start + p + t]) {
          equal = false;
          break;
        }
      }
      if (equal)
        return SquareWitness{start, p};
    }
  }
  return std::nullopt;
}

bool ends_with_square(LetterSpan w) {
  const std::size_t n = w.size();
  for (std::size_t p = 1; 2 * p <= n; ++p) {
    // compare from the end: mismatches near the new letter are the common case
    std::size_t t = 0;
    while (t < p && w[n - 1 - t] == w[n - 1 - p - t])
      ++t;
    if (t == p)
      return true;
  }
  return false;
}

bool is_square_free(LetterSpan w) {
  for (std::size_t len = 2; len <= w.size(); ++len)
    if (ends_with_square(w.first(len)))
      return false;
  return true;
}

namespace {

// Depth-first extension in lexicographic order. `leaf` is called with the
// current buffer whenever it reaches length n.
template <class Leaf>
void extend_square_free(std::vector<Letter>& buf, std::size_t n, Leaf& leaf) {
  if (buf.size() == n) {
    leaf(buf);
    return;
  }
  for (int v = 0; v < 3; ++v) {
    buf.push_back(Letter::from_int(v));
    if (!ends_with_square(buf))
      extend_square_free(buf, n, leaf);
    buf.pop_back();
  }
}

} // namespace

std::uint64_t count_square_free(std::size_t n) {
  std::uint64_t count = 0;
  std::vector<Letter> buf;
  buf.reserve(n);
  auto leaf = [&count](const std::vector<Letter>&) { ++count; };
  extend_square_free(buf, n, leaf);
  return count;
}

void enumerate_square_free(std::size_t n, const std::function<void(const Word&)>& consumer) {
  std::vector<Letter> buf;
  buf.reserve(n);
  auto leaf = [&consumer](const std::vector<Letter>& letters) { consumer(Word(letters)); };
  extend_square_free(buf, n, leaf);
}

Word shift(const Word& w, int c) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (Letter l : w)
    out.push_back(l.shifted(c));
  return Word(std::move(out));
}

Word reverse(const Word& w) {
  std::vector<Letter> out(w.begin(), w.end());
  std::reverse(out.begin(), out.end());
  return Word(std::move(out));
}

bool is_palindrome(const Word& w) {
  return std::equal(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(w.size() / 2),
                    w.letters().rbegin());
}

} // namespace sqfree
