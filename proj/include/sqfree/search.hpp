#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "sqfree/brinkhuis.hpp"
#include "sqfree/words.hpp"

namespace sqfree {

struct SearchConfig {
  std::size_t k = 18;
  // Search U0, V0 only; U_c = shift(U0, c), V_c = shift(V0, c).
  bool shift_symmetry = true;
  // U0 and V0 must be palindromes. Requires shift_symmetry.
  bool palindrome_constraint = false;
  // Pins U0[0]; nullopt leaves it free.
  std::optional<int> first_letter = 2;
  std::optional<std::uint64_t> max_results;
  // Counts letter-placement attempts.
  std::optional<std::uint64_t> node_budget;
  unsigned parallel_shards = 1;
  // Emit canonical representatives only (deduplicated).
  bool canonicalize = true;

  // Throws ConfigError when the invariants do not hold.
  void validate() const;
};

struct SearchOutcome {
  std::vector<TriplePair> pairs_found;
  std::uint64_t nodes_expanded = 0;
  bool exhausted = false;
};

SearchOutcome find_pairs(const SearchConfig& config);

// Least of the 24 variants (letter shift by c in {0,1,2} applied to all six
// words, times U/V swap at any subset of indices) under lexicographic order
// of U0 V0 U1 V1 U2 V2.
TriplePair canonicalize(const TriplePair& tp);

// A partial assignment in search order. In shift-symmetric mode only U0 and
// V0 (word indices 0 and 1) are built, U0 first; otherwise all six words
// (file order U0,V0,U1,V1,U2,V2) grow one column at a time.
class PartialState {
public:
  explicit PartialState(const SearchConfig& config);

  const SearchConfig& config() const noexcept { return *config_; }

  // Word receiving the next letter, or -1 once the assignment is complete.
  int next_word() const noexcept;
  bool complete() const noexcept { return next_word() < 0; }
  // Number of letters placed so far.
  std::size_t placed() const noexcept { return placed_; }
  // Word extended by the most recent push, -1 if none.
  int last_word() const noexcept { return last_.empty() ? -1 : last_.back(); }

  // Appends to next_word().
  void push(Letter l);
  void pop();

  const std::vector<Letter>& word(int index) const { return words_[index]; }
  // U0 followed by shift(V0 prefix, d), d in {1,2}; meaningful once U0 is
  // complete.
  const std::vector<Letter>& cross(int d) const { return cross_[d - 1]; }

  // Requires complete().
  TriplePair to_pair() const;

private:
  const SearchConfig* config_;
  std::array<std::vector<Letter>, 6> words_;
  std::array<std::vector<Letter>, 2> cross_;
  std::vector<int> last_;
  std::size_t placed_ = 0;
};

enum class PruneDecision { keep, cut };

// Inspects the most recent placement. Cuts only when no completion of the
// state can be a triple-pair in the configured space.
PruneDecision prune_check(const PartialState& state);

} // namespace sqfree
