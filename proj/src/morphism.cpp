#include "sqfree/morphism.hpp"

#include <cmath>
#include <string>
#include <unordered_set>

#include "sqfree/error.hpp"

namespace sqfree {

ChoiceVector ChoiceVector::from_mask(std::uint64_t mask, std::size_t n) {
  std::vector<Slot> choices(n, Slot::U);
  for (std::size_t t = 0; t < n; ++t)
    if ((mask >> t) & 1U)
      choices[t] = Slot::V;
  return ChoiceVector(std::move(choices));
}

std::string ChoiceVector::to_string() const {
  std::string s;
  s.reserve(choices_.size());
  for (Slot c : choices_)
    s += slot_char(c);
  return s;
}

ChoiceVector parse_choices(std::string_view text) {
  std::vector<Slot> choices;
  choices.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == 'U')
      choices.push_back(Slot::U);
    else if (text[i] == 'V')
      choices.push_back(Slot::V);
    else
      throw ParseError("invalid choice '" + std::string(1, text[i]) + "' at position " +
                           std::to_string(i),
                       i);
  }
  return ChoiceVector(std::move(choices));
}

Word substitute(const TriplePair& tp, const Word& x, const ChoiceVector& c) {
  if (c.size() != x.size())
    throw LengthMismatchError("choice vector length " + std::to_string(c.size()) +
                              " does not match word length " + std::to_string(x.size()));
  Word out;
  for (std::size_t t = 0; t < x.size(); ++t)
    out.append(tp.word(x[t].value(), c[t]));
  return out;
}

namespace {

std::uint64_t guarded_total(std::size_t n, std::uint64_t budget) {
  if (n >= 63 || (std::uint64_t{1} << n) > budget)
    throw BudgetError("2^" + std::to_string(n) + " expansions exceed the budget of " +
                      std::to_string(budget));
  const std::uint64_t blocks = std::uint64_t{1} << n;
  const std::uint64_t words = count_square_free(n);
  if (words > budget / blocks)
    throw BudgetError("2^n*a(n) for n=" + std::to_string(n) + " exceeds the budget of " +
                      std::to_string(budget));
  return blocks * words;
}

// Calls sink(word) for every image of every square-free word of length n.
template <class Sink>
void for_each_image(const TriplePair& tp, std::size_t n, Sink&& sink) {
  const std::uint64_t blocks = std::uint64_t{1} << n;
  enumerate_square_free(n, [&](const Word& x) {
    for (std::uint64_t mask = 0; mask < blocks; ++mask)
      sink(substitute(tp, x, ChoiceVector::from_mask(mask, n)));
  });
}

void require_verified(const TriplePair& tp) {
  if (!verify(tp).verdict())
    throw PreconditionError("triple-pair does not pass verification");
}

} // namespace

ExpansionReport verify_expansion(const TriplePair& tp, std::size_t n, std::uint64_t budget) {
  require_verified(tp);
  ExpansionReport report;
  report.total = guarded_total(n, budget);

  std::unordered_set<std::string> seen;
  seen.reserve(report.total);
  for_each_image(tp, n, [&](const Word& image) {
    if (is_square_free(image))
      ++report.square_free;
    seen.insert(image.to_string());
  });
  report.distinct = seen.size();
  report.all_square_free = report.square_free == report.total;
  report.all_distinct = report.distinct == report.total;
  return report;
}

CountingReport counting_inequality_check(const TriplePair& tp, std::size_t n,
                                         std::uint64_t budget) {
  require_verified(tp);
  CountingReport report;
  report.lhs_lower = guarded_total(n, budget);

  std::unordered_set<std::string> witnesses;
  for_each_image(tp, n, [&](const Word& image) {
    if (is_square_free(image))
      witnesses.insert(image.to_string());
  });
  report.distinct_outputs = witnesses.size();
  return report;
}

BoundReport lower_bound(std::size_t k) {
  if (k < 2)
    throw DegenerateLengthError("lower bound needs k >= 2, got " + std::to_string(k));
  return {k, k - 1, std::pow(2.0, 1.0 / static_cast<double>(k - 1))};
}

} // namespace sqfree
