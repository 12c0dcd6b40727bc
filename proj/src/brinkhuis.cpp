#include "sqfree/brinkhuis.hpp"

#include <sstream>

#include "sqfree/error.hpp"

namespace sqfree {

namespace {

constexpr std::array<const char*, 6> kWordNames{"U0", "V0", "U1", "V1", "U2", "V2"};

} // namespace

char slot_char(Slot s) noexcept { return s == Slot::U ? 'U' : 'V'; }

TriplePair TriplePair::make(std::array<Word, 6> words) {
  const std::size_t k = words[0].size();
  for (std::size_t w = 1; w < words.size(); ++w) {
    if (words[w].size() != k)
      throw LengthMismatchError(std::string("word ") + kWordNames[w] + " has length " +
                                std::to_string(words[w].size()) + ", expected " +
                                std::to_string(k));
  }
  if (k < 2)
    throw DegenerateLengthError("triple-pair word length must be at least 2, got " +
                                std::to_string(k));
  return TriplePair(std::move(words), k);
}

const TriplePair& paper_pair() {
  static const TriplePair pair = TriplePair::make({
      parse_word("210201202120102012"),
      parse_word("210201021202102012"),
      parse_word("021012010201210120"),
      parse_word("021012102010210120"),
      parse_word("102120121012021201"),
      parse_word("102120210121021201"),
  });
  return pair;
}

std::string ConcatLabel::to_string() const {
  std::string s;
  s += static_cast<char>('0' + i);
  s += slot_char(first);
  s += static_cast<char>('0' + j);
  s += slot_char(second);
  return s;
}

namespace {

constexpr std::array<std::pair<Slot, Slot>, 4> kChoices{
    {{Slot::U, Slot::U}, {Slot::U, Slot::V}, {Slot::V, Slot::U}, {Slot::V, Slot::V}}};

} // namespace

std::vector<LabeledWord> concatenation_words(const TriplePair& tp) {
  std::vector<LabeledWord> out;
  out.reserve(24);
  for (auto [i, j] : kIndexPairs)
    for (auto [a, b] : kChoices)
      out.push_back({ConcatLabel{i, a, j, b}, concat(tp.word(i, a), tp.word(j, b))});
  return out;
}

std::vector<ConcatEntry> check_concatenations(const TriplePair& tp) {
  std::vector<ConcatEntry> out;
  out.reserve(24);
  for (const auto& [label, word] : concatenation_words(tp)) {
    ConcatEntry entry{label, std::nullopt};
    if (!is_square_free(word))
      entry.square = find_square(word);
    out.push_back(entry);
  }
  return out;
}

std::string head_tail_label(int index) {
  std::string s = index < 6 ? "head" : "tail";
  int w = index % 6;
  s += w < 3 ? 'U' : 'V';
  s += static_cast<char>('0' + w % 3);
  return s;
}

std::size_t head_tail_min_length(std::size_t k) noexcept { return (k + 1) / 2; }

std::array<Word, 12> heads_and_tails(const TriplePair& tp, std::size_t r) {
  const std::size_t k = tp.k();
  if (r < head_tail_min_length(k) || r >= k)
    throw RangeError("head/tail length " + std::to_string(r) + " outside [" +
                     std::to_string(head_tail_min_length(k)) + ", " + std::to_string(k - 1) +
                     "]");
  std::array<Word, 12> out;
  for (int w = 0; w < 6; ++w) {
    const Word& src = tp.word(w % 3, w < 3 ? Slot::U : Slot::V);
    out[w] = src.prefix(r);
    out[w + 6] = src.suffix(r);
  }
  return out;
}

std::vector<HeadTailEntry> check_head_tail_condition(const TriplePair& tp) {
  std::vector<HeadTailEntry> out;
  for (std::size_t r = head_tail_min_length(tp.k()); r < tp.k(); ++r) {
    auto words = heads_and_tails(tp, r);
    HeadTailEntry entry{r, std::nullopt};
    for (int a = 0; a < 12 && !entry.collision; ++a)
      for (int b = a + 1; b < 12; ++b)
        if (words[a] == words[b]) {
          entry.collision = std::pair{a, b};
          break;
        }
    out.push_back(entry);
  }
  return out;
}

bool Certificate::verdict() const noexcept {
  for (const auto& e : concat_results)
    if (!e.passed())
      return false;
  for (const auto& e : headtail_results)
    if (!e.passed())
      return false;
  return true;
}

std::string Certificate::to_text() const {
  std::ostringstream out;
  out << "k=" << k << '\n';
  for (const auto& e : concat_results) {
    out << "CONCAT " << e.label.to_string() << (e.passed() ? " PASS" : " FAIL");
    if (e.square)
      out << " square@" << e.square->start << " period=" << e.square->period;
    out << '\n';
  }
  for (const auto& e : headtail_results) {
    out << "HEADTAIL r=" << e.r << (e.passed() ? " PASS" : " FAIL");
    if (e.collision)
      out << ' ' << head_tail_label(e.collision->first) << '='
          << head_tail_label(e.collision->second);
    out << '\n';
  }
  out << "SHIFTSYM " << (shift_symmetric ? "true" : "false") << '\n';
  out << "PALINDROME " << (palindromic_base ? "true" : "false") << '\n';
  out << "VERDICT " << (verdict() ? "PASS" : "FAIL") << '\n';
  return out.str();
}

Certificate verify(const TriplePair& tp) {
  Certificate cert;
  cert.k = tp.k();
  cert.concat_results = check_concatenations(tp);
  cert.headtail_results = check_head_tail_condition(tp);
  cert.shift_symmetric = is_shift_symmetric(tp);
  cert.palindromic_base = is_palindrome(tp.u(0)) && is_palindrome(tp.v(0));
  return cert;
}

bool is_shift_symmetric(const TriplePair& tp) {
  for (int c = 1; c < 3; ++c)
    if (tp.u(c) != shift(tp.u(0), c) || tp.v(c) != shift(tp.v(0), c))
      return false;
  return true;
}

TriplePair shift_symmetric_pair(const Word& u0, const Word& v0) {
  return TriplePair::make({u0, v0, shift(u0, 1), shift(v0, 1), shift(u0, 2), shift(v0, 2)});
}

std::string format_pair(const TriplePair& tp, const std::vector<std::string>& comments) {
  std::string out;
  for (const auto& c : comments)
    out += "# " + c + '\n';
  for (const auto& w : tp.words())
    out += w.to_string() + '\n';
  return out;
}

TriplePair parse_pair(std::string_view text) {
  std::array<Word, 6> words;
  std::size_t count = 0;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos)
      eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;

    if (!line.empty() && line.back() == '\r')
      line.remove_suffix(1);
    std::size_t first = line.find_first_not_of(" \t");
    if (first == std::string_view::npos || line[first] == '#')
      continue;
    if (count == 6)
      throw ParseError("more than six words (line " + std::to_string(line_no) + ")", line_no);
    try {
      words[count++] = parse_word(line);
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(line_no) + ": " + e.what(), line_no);
    }
  }
  if (count != 6)
    throw ParseError("expected six words, found " + std::to_string(count), line_no);
  return TriplePair::make(std::move(words));
}

} // namespace sqfree
