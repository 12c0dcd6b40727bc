#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "sqfree/brinkhuis.hpp"
#include "sqfree/words.hpp"

namespace sqfree {

// One U/V choice per letter of the word being expanded.
class ChoiceVector {
public:
  ChoiceVector() = default;
  explicit ChoiceVector(std::vector<Slot> choices) : choices_(std::move(choices)) {}

  // Bit t of `mask` selects V for position t.
  static ChoiceVector from_mask(std::uint64_t mask, std::size_t n);

  std::size_t size() const noexcept { return choices_.size(); }
  Slot operator[](std::size_t t) const { return choices_[t]; }
  std::string to_string() const;

  friend bool operator==(const ChoiceVector&, const ChoiceVector&) = default;

private:
  std::vector<Slot> choices_;
};

// 'U'/'V' only, case-sensitive; throws ParseError on anything else.
ChoiceVector parse_choices(std::string_view text);

// Blocks [U or V]_{x_t}. Throws LengthMismatchError if |c| != |x|. x need not
// be square-free.
Word substitute(const TriplePair& tp, const Word& x, const ChoiceVector& c);

inline constexpr std::uint64_t kDefaultExpansionBudget = 10'000'000;

struct ExpansionReport {
  std::uint64_t total = 0;          // 2^n * a(n)
  std::uint64_t distinct = 0;       // distinct outputs
  std::uint64_t square_free = 0;    // outputs that are square-free
  bool all_square_free = false;
  bool all_distinct = false;
};

// Substitutes every square-free x of length n under every choice vector.
// Throws PreconditionError if tp fails verify, BudgetError if 2^n * a(n)
// exceeds `budget`.
ExpansionReport verify_expansion(const TriplePair& tp, std::size_t n,
                                 std::uint64_t budget = kDefaultExpansionBudget);

struct CountingReport {
  std::uint64_t lhs_lower = 0;        // 2^n * a(n)
  std::uint64_t distinct_outputs = 0; // distinct square-free words of length n*k
  bool holds() const noexcept { return distinct_outputs == lhs_lower; }
};

CountingReport counting_inequality_check(const TriplePair& tp, std::size_t n,
                                         std::uint64_t budget = kDefaultExpansionBudget);

struct BoundReport {
  std::size_t k = 0;
  std::size_t exponent_denominator = 0; // k - 1
  double mu_lower_bound = 0.0;          // 2^(1/(k-1))
};

// Throws DegenerateLengthError for k < 2.
BoundReport lower_bound(std::size_t k);

} // namespace sqfree
