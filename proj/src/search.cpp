#include "sqfree/search.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <mutex>
#include <set>
#include <stdexcept>
#include <thread>

#include "sqfree/error.hpp"

namespace sqfree {

void SearchConfig::validate() const {
  if (k < 2)
    throw ConfigError("k must be at least 2");
  if (palindrome_constraint && !shift_symmetry)
    throw ConfigError("the palindrome constraint requires shift symmetry");
  if (first_letter && (*first_letter < 0 || *first_letter > 2))
    throw ConfigError("first letter must be 0, 1 or 2");
  if (max_results && *max_results == 0)
    throw ConfigError("max_results must be positive");
  if (parallel_shards == 0)
    throw ConfigError("parallel_shards must be positive");
}

TriplePair canonicalize(const TriplePair& tp) {
  std::optional<std::array<Word, 6>> best;
  for (int c = 0; c < 3; ++c) {
    for (unsigned mask = 0; mask < 8; ++mask) {
      std::array<Word, 6> variant;
      for (int i = 0; i < 3; ++i) {
        const bool swap = (mask >> i) & 1U;
        variant[2 * i] = shift(tp.word(i, swap ? Slot::V : Slot::U), c);
        variant[2 * i + 1] = shift(tp.word(i, swap ? Slot::U : Slot::V), c);
      }
      // equal word lengths: element-wise order is concatenation order
      if (!best || variant < *best)
        best = std::move(variant);
    }
  }
  return TriplePair::make(std::move(*best));
}

// ---------------------------------------------------------------------------
// PartialState

PartialState::PartialState(const SearchConfig& config) : config_(&config) {
  for (auto& w : words_)
    w.reserve(config.k);
  for (auto& c : cross_)
    c.reserve(2 * config.k);
}

int PartialState::next_word() const noexcept {
  const std::size_t k = config_->k;
  if (config_->shift_symmetry) {
    if (placed_ < k)
      return 0;
    if (placed_ < 2 * k)
      return 1;
    return -1;
  }
  if (placed_ >= 6 * k)
    return -1;
  return static_cast<int>(placed_ % 6);
}

void PartialState::push(Letter l) {
  const int w = next_word();
  if (w < 0)
    throw std::logic_error("push on a complete state");
  words_[w].push_back(l);
  if (config_->shift_symmetry) {
    if (w == 0 && words_[0].size() == config_->k) {
      for (int d = 1; d <= 2; ++d)
        cross_[d - 1].assign(words_[0].begin(), words_[0].end());
    } else if (w == 1) {
      for (int d = 1; d <= 2; ++d)
        cross_[d - 1].push_back(l.shifted(d));
    }
  }
  last_.push_back(w);
  ++placed_;
}

void PartialState::pop() {
  if (last_.empty())
    throw std::logic_error("pop on an empty state");
  const int w = last_.back();
  last_.pop_back();
  --placed_;
  if (config_->shift_symmetry) {
    if (w == 1) {
      for (auto& c : cross_)
        c.pop_back();
    } else if (words_[0].size() == config_->k) {
      for (auto& c : cross_)
        c.clear();
    }
  }
  words_[w].pop_back();
}

TriplePair PartialState::to_pair() const {
  if (!complete())
    throw std::logic_error("to_pair on an incomplete state");
  auto as_word = [](const std::vector<Letter>& v) { return Word(v); };
  if (config_->shift_symmetry)
    return shift_symmetric_pair(as_word(words_[0]), as_word(words_[1]));
  std::array<Word, 6> words;
  for (int i = 0; i < 6; ++i)
    words[i] = as_word(words_[i]);
  return TriplePair::make(std::move(words));
}

// ---------------------------------------------------------------------------
// Pruning

namespace {

// a == shift(b, c) over equal-length ranges
bool equals_shifted(LetterSpan a, LetterSpan b, int c) {
  for (std::size_t t = 0; t < a.size(); ++t)
    if (a[t] != b[t].shifted(c))
      return false;
  return true;
}

bool violates_pin_or_mirror(const SearchConfig& cfg, int w, const std::vector<Letter>& word) {
  const std::size_t t = word.size() - 1;
  if (w == 0 && t == 0 && cfg.first_letter && word[0].value() != *cfg.first_letter)
    return true;
  if (cfg.palindrome_constraint) {
    const std::size_t mirror = cfg.k - 1 - t;
    if (mirror < t && word[mirror] != word[t])
      return true;
  }
  return false;
}

// U0 complete: the concatenations U0 U_d and the head/tail relations among the
// three shifted U words are fully determined.
bool u_words_fail(const SearchConfig& cfg, LetterSpan u0) {
  const std::size_t k = cfg.k;
  std::vector<Letter> cat(u0.begin(), u0.end());
  for (int d = 1; d <= 2; ++d) {
    cat.resize(k);
    for (std::size_t t = 0; t < k; ++t) {
      cat.push_back(u0[t].shifted(d));
      if (ends_with_square(cat))
        return true;
    }
  }
  // heads of U_c are pairwise distinct automatically; tails vs heads are not
  for (std::size_t r = head_tail_min_length(k); r < k; ++r)
    for (int c = 0; c < 3; ++c)
      if (equals_shifted(u0.last(r), u0.first(r), c))
        return true;
  return false;
}

PruneDecision prune_symmetric(const PartialState& st) {
  const SearchConfig& cfg = st.config();
  const std::size_t k = cfg.k;
  const int w = st.last_word();
  const auto& word = st.word(w);
  if (violates_pin_or_mirror(cfg, w, word) || ends_with_square(word))
    return PruneDecision::cut;

  if (w == 0) {
    if (word.size() == k && u_words_fail(cfg, word))
      return PruneDecision::cut;
    return PruneDecision::keep;
  }

  // V0 prefix against the complete U0
  for (int d = 1; d <= 2; ++d)
    if (ends_with_square(st.cross(d)))
      return PruneDecision::cut;
  const LetterSpan u0 = st.word(0);
  const LetterSpan v0 = word;
  const std::size_t len = v0.size();
  const std::size_t m = head_tail_min_length(k);
  if (len >= m && len < k) {
    for (int c = 0; c < 3; ++c) {
      if (len == m && equals_shifted(v0, u0.first(len), c))
        return PruneDecision::cut; // head V0 == head U_c
      if (equals_shifted(v0, u0.last(len), c))
        return PruneDecision::cut; // head V0 == tail U_c
    }
  }
  return PruneDecision::keep;
}

PruneDecision prune_free(const PartialState& st) {
  const SearchConfig& cfg = st.config();
  const int w = st.last_word();
  const auto& word = st.word(w);
  if (violates_pin_or_mirror(cfg, w, word) || ends_with_square(word))
    return PruneDecision::cut;
  const std::size_t len = word.size();
  if (w == 5 && len == head_tail_min_length(cfg.k) && len < cfg.k) {
    for (int a = 0; a < 6; ++a)
      for (int b = a + 1; b < 6; ++b)
        if (st.word(a) == st.word(b))
          return PruneDecision::cut;
  }
  return PruneDecision::keep;
}

} // namespace

PruneDecision prune_check(const PartialState& state) {
  if (state.last_word() < 0)
    return PruneDecision::keep;
  return state.config().shift_symmetry ? prune_symmetric(state) : prune_free(state);
}

// ---------------------------------------------------------------------------
// Depth-first search

namespace {

constexpr std::size_t kShardDepth = 6;

struct SharedControl {
  std::optional<std::uint64_t> node_budget;
  std::atomic<std::uint64_t> nodes{0};
  // Shards with a larger index are no longer needed.
  std::atomic<std::size_t> cutoff{std::numeric_limits<std::size_t>::max()};
};

struct ShardResult {
  std::vector<TriplePair> pairs;
  std::uint64_t nodes = 0;
  bool aborted = false;
};

class Searcher {
public:
  Searcher(const SearchConfig& cfg, SharedControl& shared, std::size_t shard)
      : cfg_(cfg), shared_(shared), shard_(shard), state_(cfg) {}

  PartialState& state() { return state_; }

  // Explores below the current state. When depth_limit is set, states with
  // that many letters are handed to on_frontier instead of being expanded.
  template <class Frontier>
  void run(std::optional<std::size_t> depth_limit, Frontier&& on_frontier) {
    dfs(depth_limit, on_frontier);
  }

  void run() {
    run(std::nullopt, [](const PartialState&) {});
  }

  ShardResult take() { return {std::move(found_), nodes_, aborted_}; }

private:
  bool charge_node() {
    if (limit_reached_ || shared_.cutoff.load(std::memory_order_relaxed) < shard_)
      return false;
    const std::uint64_t before = shared_.nodes.fetch_add(1, std::memory_order_relaxed);
    if (shared_.node_budget && before >= *shared_.node_budget) {
      shared_.nodes.fetch_sub(1, std::memory_order_relaxed);
      return false;
    }
    ++nodes_;
    return true;
  }

  void candidates(std::array<Letter, 3>& out, int& count) const {
    const int w = state_.next_word();
    const auto& word = state_.word(w);
    const std::size_t t = word.size();
    count = 0;
    if (w == 0 && t == 0 && cfg_.first_letter) {
      out[count++] = Letter::from_int(*cfg_.first_letter);
      return;
    }
    if (cfg_.palindrome_constraint && cfg_.k - 1 - t < t) {
      out[count++] = word[cfg_.k - 1 - t];
      return;
    }
    for (int v = 0; v < 3; ++v)
      out[count++] = Letter::from_int(v);
  }

  void leaf() {
    TriplePair pair = state_.to_pair();
    if (!verify(pair).verdict())
      return;
    if (cfg_.canonicalize) {
      pair = canonicalize(pair);
      if (!verify(pair).verdict())
        throw std::logic_error("canonical form lost the verdict");
      if (!seen_.insert(pair.words()).second)
        return;
    }
    found_.push_back(std::move(pair));
    if (cfg_.max_results && found_.size() >= *cfg_.max_results)
      limit_reached_ = true;
  }

  template <class Frontier>
  bool dfs(std::optional<std::size_t> depth_limit, Frontier& on_frontier) {
    if (state_.complete()) {
      leaf();
      return true;
    }
    if (depth_limit && state_.placed() >= *depth_limit) {
      on_frontier(state_);
      return true;
    }
    std::array<Letter, 3> letters;
    int count = 0;
    candidates(letters, count);
    for (int i = 0; i < count; ++i) {
      if (!charge_node()) {
        aborted_ = true;
        return false;
      }
      state_.push(letters[i]);
      const bool keep = prune_check(state_) == PruneDecision::keep;
      if (keep && !dfs(depth_limit, on_frontier)) {
        state_.pop();
        return false;
      }
      state_.pop();
    }
    return true;
  }

  const SearchConfig& cfg_;
  SharedControl& shared_;
  std::size_t shard_;
  PartialState state_;
  std::vector<TriplePair> found_;
  std::set<std::array<Word, 6>> seen_;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
  bool limit_reached_ = false;
};

// Merges finished shards in index order and publishes the cutoff once the
// merged prefix holds max_results distinct pairs.
class Aggregator {
public:
  Aggregator(const SearchConfig& cfg, SharedControl& shared, std::size_t shards)
      : cfg_(cfg), shared_(shared), results_(shards), done_(shards, false) {}

  void finish(std::size_t shard, ShardResult result) {
    std::lock_guard lock(mutex_);
    results_[shard] = std::move(result);
    done_[shard] = true;
    while (frontier_ < done_.size() && done_[frontier_]) {
      for (auto& pair : results_[frontier_].pairs)
        if (!cfg_.canonicalize || merged_seen_.insert(pair.words()).second)
          merged_count_++;
      ++frontier_;
      if (cfg_.max_results && merged_count_ >= *cfg_.max_results) {
        std::size_t current = shared_.cutoff.load();
        if (frontier_ - 1 < current)
          shared_.cutoff.store(frontier_ - 1);
      }
    }
  }

  std::vector<ShardResult>& results() { return results_; }

private:
  const SearchConfig& cfg_;
  SharedControl& shared_;
  std::mutex mutex_;
  std::vector<ShardResult> results_;
  std::vector<bool> done_;
  std::size_t frontier_ = 0;
  std::set<std::array<Word, 6>> merged_seen_;
  std::uint64_t merged_count_ = 0;
};

} // namespace

SearchOutcome find_pairs(const SearchConfig& config) {
  config.validate();
  SharedControl shared;
  shared.node_budget = config.node_budget;

  // Fixed-depth prefixes in search order; each becomes one shard.
  std::vector<std::vector<Letter>> prefixes;
  Searcher splitter(config, shared, 0);
  splitter.run(kShardDepth, [&](const PartialState& st) {
    std::vector<Letter> letters;
    letters.reserve(st.placed());
    // replay order: words are filled in search order, so reconstruct it
    PartialState probe(config);
    while (probe.placed() < st.placed()) {
      const int w = probe.next_word();
      const Letter l = st.word(w)[probe.word(w).size()];
      letters.push_back(l);
      probe.push(l);
    }
    prefixes.push_back(std::move(letters));
  });
  ShardResult split = splitter.take();

  SearchOutcome outcome;
  outcome.nodes_expanded = split.nodes;
  outcome.exhausted = !split.aborted;
  for (auto& pair : split.pairs) // complete states shallower than the shard depth
    outcome.pairs_found.push_back(std::move(pair));
  if (split.aborted) {
    return outcome;
  }

  Aggregator aggregator(config, shared, prefixes.size());
  std::atomic<std::size_t> next_shard{0};
  auto worker = [&]() {
    for (;;) {
      const std::size_t s = next_shard.fetch_add(1);
      if (s >= prefixes.size())
        return;
      Searcher searcher(config, shared, s);
      if (shared.cutoff.load() >= s) {
        for (Letter l : prefixes[s])
          searcher.state().push(l);
        searcher.run();
      }
      ShardResult result = searcher.take();
      if (shared.cutoff.load() < s)
        result.aborted = true;
      aggregator.finish(s, std::move(result));
    }
  };

  const unsigned workers =
      std::max(1U, std::min<unsigned>(config.parallel_shards,
                                      static_cast<unsigned>(std::max<std::size_t>(1, prefixes.size()))));
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (unsigned i = 0; i < workers; ++i)
      threads.emplace_back(worker);
    for (auto& t : threads)
      t.join();
  }

  std::set<std::array<Word, 6>> seen;
  for (const auto& p : outcome.pairs_found)
    seen.insert(p.words());
  for (auto& result : aggregator.results()) {
    outcome.nodes_expanded += result.nodes;
    if (result.aborted)
      outcome.exhausted = false;
    for (auto& pair : result.pairs) {
      if (config.max_results && outcome.pairs_found.size() >= *config.max_results)
        break;
      if (config.canonicalize && !seen.insert(pair.words()).second)
        continue;
      outcome.pairs_found.push_back(std::move(pair));
    }
  }
  return outcome;
}

} // namespace sqfree
