#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sqfree/words.hpp"

namespace sqfree {

// Which member of the pair [U_i, V_i] occupies a slot.
enum class Slot { U, V };

char slot_char(Slot s) noexcept;

// Six words [[U0,V0],[U1,V1],[U2,V2]] of a common length k >= 2.
class TriplePair {
public:
  // Words in file order U0, V0, U1, V1, U2, V2. Throws LengthMismatchError
  // naming the first word whose length differs from U0, or
  // DegenerateLengthError when k < 2.
  static TriplePair make(std::array<Word, 6> words);

  std::size_t k() const noexcept { return k_; }
  const Word& u(int i) const { return words_[2 * i]; }
  const Word& v(int i) const { return words_[2 * i + 1]; }
  const Word& word(int i, Slot s) const { return s == Slot::U ? u(i) : v(i); }

  // File order U0, V0, U1, V1, U2, V2.
  const std::array<Word, 6>& words() const noexcept { return words_; }

  friend bool operator==(const TriplePair&, const TriplePair&) = default;

private:
  TriplePair(std::array<Word, 6> words, std::size_t k) : words_(std::move(words)), k_(k) {}

  std::array<Word, 6> words_;
  std::size_t k_ = 0;
};

inline TriplePair make_triple_pair(std::array<Word, 6> words) {
  return TriplePair::make(std::move(words));
}

// The 18-letter pair exhibited with the 2^(1/17) bound.
const TriplePair& paper_pair();

// Ordered index pairs in emission order.
inline constexpr std::array<std::pair<int, int>, 6> kIndexPairs{
    {{0, 1}, {0, 2}, {1, 2}, {1, 0}, {2, 0}, {2, 1}}};

struct ConcatLabel {
  int i = 0;
  Slot first = Slot::U;
  int j = 0;
  Slot second = Slot::U;

  // e.g. "0U1V"
  std::string to_string() const;
  friend bool operator==(const ConcatLabel&, const ConcatLabel&) = default;
};

struct LabeledWord {
  ConcatLabel label;
  Word word;
};

// All 24 words [U or V]_i [U or V]_j, i != j, in the fixed order: index pairs
// as kIndexPairs, then choices UU, UV, VU, VV.
std::vector<LabeledWord> concatenation_words(const TriplePair& tp);

struct ConcatEntry {
  ConcatLabel label;
  std::optional<SquareWitness> square; // absent iff the concatenation passes
  bool passed() const noexcept { return !square.has_value(); }
};

std::vector<ConcatEntry> check_concatenations(const TriplePair& tp);

// Position in the 12-word head/tail list: 0..5 heads of U0,U1,U2,V0,V1,V2,
// 6..11 tails in the same order.
std::string head_tail_label(int index);

// Heads of length r of U0,U1,U2,V0,V1,V2 followed by their tails.
// Throws RangeError unless ceil(k/2) <= r < k.
std::array<Word, 12> heads_and_tails(const TriplePair& tp, std::size_t r);

struct HeadTailEntry {
  std::size_t r = 0;
  // First colliding pair (a < b) in head_tail_label order, absent on pass.
  std::optional<std::pair<int, int>> collision;
  bool passed() const noexcept { return !collision.has_value(); }
};

std::size_t head_tail_min_length(std::size_t k) noexcept;

std::vector<HeadTailEntry> check_head_tail_condition(const TriplePair& tp);

struct Certificate {
  std::size_t k = 0;
  std::vector<ConcatEntry> concat_results;
  std::vector<HeadTailEntry> headtail_results;
  bool shift_symmetric = false;
  bool palindromic_base = false;

  bool verdict() const noexcept;

  // Line-oriented text form, newline-terminated.
  std::string to_text() const;
};

Certificate verify(const TriplePair& tp);

// U_c = shift(U_0, c) and V_c = shift(V_0, c) for c = 1, 2.
bool is_shift_symmetric(const TriplePair& tp);

// The pair whose index-c words are shift(U0, c), shift(V0, c).
TriplePair shift_symmetric_pair(const Word& u0, const Word& v0);

// Pair file text: six lines of digits, newline-terminated. Optional leading
// comment lines, each written with a "# " prefix.
std::string format_pair(const TriplePair& tp, const std::vector<std::string>& comments = {});

// Parses the pair file format. '#' lines and blank lines are skipped; exactly
// six word lines must remain. Throws ParseError (position = 1-based line
// number) or the make() errors.
TriplePair parse_pair(std::string_view text);

} // namespace sqfree
