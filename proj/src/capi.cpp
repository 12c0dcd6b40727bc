#include "sqfree/sqfree.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <string>

#include "sqfree/brinkhuis.hpp"
#include "sqfree/error.hpp"
#include "sqfree/morphism.hpp"
#include "sqfree/search.hpp"
#include "sqfree/words.hpp"

struct sqf_pair {
  sqfree::TriplePair pair;
};

struct sqf_certificate {
  sqfree::Certificate cert;
};

struct sqf_search_outcome {
  std::vector<sqf_pair> pairs;
  std::uint64_t nodes = 0;
  bool exhausted = false;
};

namespace {

thread_local std::string g_last_error;

sqf_status fail(sqf_status status, const char* message) {
  g_last_error = message;
  return status;
}

// Runs `body`, translating exceptions into status codes.
template <class Body>
sqf_status guarded(Body&& body) {
  try {
    g_last_error.clear();
    body();
    return SQF_OK;
  } catch (const sqfree::ParseError& e) {
    return fail(SQF_ERR_PARSE, e.what());
  } catch (const sqfree::LengthMismatchError& e) {
    return fail(SQF_ERR_LENGTH_MISMATCH, e.what());
  } catch (const sqfree::DegenerateLengthError& e) {
    return fail(SQF_ERR_DEGENERATE_K, e.what());
  } catch (const sqfree::RangeError& e) {
    return fail(SQF_ERR_RANGE, e.what());
  } catch (const sqfree::BudgetError& e) {
    return fail(SQF_ERR_BUDGET, e.what());
  } catch (const sqfree::PreconditionError& e) {
    return fail(SQF_ERR_PRECONDITION, e.what());
  } catch (const sqfree::ConfigError& e) {
    return fail(SQF_ERR_CONFIG, e.what());
  } catch (const std::bad_alloc&) {
    return fail(SQF_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(SQF_ERR_INTERNAL, e.what());
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out)
    throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

#define SQF_REQUIRE(cond)                                                                 \
  do {                                                                                    \
    if (!(cond))                                                                          \
      return fail(SQF_ERR_INVALID_ARGUMENT, "invalid argument: " #cond);                 \
  } while (0)

} // namespace

extern "C" {

const char* sqf_last_error(void) { return g_last_error.c_str(); }

void sqf_string_free(char* s) { std::free(s); }

sqf_status sqf_count_square_free(uint32_t n, uint64_t* out) {
  SQF_REQUIRE(out);
  return guarded([&] { *out = sqfree::count_square_free(n); });
}

sqf_status sqf_find_square(const char* word, int* found, size_t* start, size_t* period) {
  SQF_REQUIRE(word && found && start && period);
  return guarded([&] {
    auto w = sqfree::parse_word(word);
    auto sq = sqfree::find_square(w);
    *found = sq ? 1 : 0;
    *start = sq ? sq->start : 0;
    *period = sq ? sq->period : 0;
  });
}

sqf_status sqf_pair_paper(sqf_pair** out) {
  SQF_REQUIRE(out);
  return guarded([&] { *out = new sqf_pair{sqfree::paper_pair()}; });
}

sqf_status sqf_pair_parse(const char* text, sqf_pair** out) {
  SQF_REQUIRE(text && out);
  return guarded([&] { *out = new sqf_pair{sqfree::parse_pair(text)}; });
}

sqf_status sqf_pair_from_words(const char* const words[6], sqf_pair** out) {
  SQF_REQUIRE(words && out);
  for (int i = 0; i < 6; ++i)
    SQF_REQUIRE(words[i]);
  return guarded([&] {
    std::array<sqfree::Word, 6> parsed;
    for (int i = 0; i < 6; ++i)
      parsed[i] = sqfree::parse_word(words[i]);
    *out = new sqf_pair{sqfree::make_triple_pair(std::move(parsed))};
  });
}

void sqf_pair_free(sqf_pair* pair) { delete pair; }

sqf_status sqf_pair_k(const sqf_pair* pair, size_t* k) {
  SQF_REQUIRE(pair && k);
  *k = pair->pair.k();
  return SQF_OK;
}

sqf_status sqf_pair_word(const sqf_pair* pair, int index, char** out) {
  SQF_REQUIRE(pair && out && index >= 0 && index < 6);
  return guarded([&] { *out = dup_string(pair->pair.words()[index].to_string()); });
}

sqf_status sqf_pair_format(const sqf_pair* pair, char** out) {
  SQF_REQUIRE(pair && out);
  return guarded([&] { *out = dup_string(sqfree::format_pair(pair->pair)); });
}

sqf_status sqf_pair_canonicalize(const sqf_pair* pair, sqf_pair** out) {
  SQF_REQUIRE(pair && out);
  return guarded([&] { *out = new sqf_pair{sqfree::canonicalize(pair->pair)}; });
}

sqf_status sqf_pair_verify(const sqf_pair* pair, sqf_certificate** out) {
  SQF_REQUIRE(pair && out);
  return guarded([&] { *out = new sqf_certificate{sqfree::verify(pair->pair)}; });
}

int sqf_certificate_passed(const sqf_certificate* cert) {
  return cert && cert->cert.verdict() ? 1 : 0;
}

sqf_status sqf_certificate_text(const sqf_certificate* cert, char** out) {
  SQF_REQUIRE(cert && out);
  return guarded([&] { *out = dup_string(cert->cert.to_text()); });
}

void sqf_certificate_free(sqf_certificate* cert) { delete cert; }

sqf_status sqf_substitute(const sqf_pair* pair, const char* word, const char* choices,
                          char** out) {
  SQF_REQUIRE(pair && word && choices && out);
  return guarded([&] {
    auto x = sqfree::parse_word(word);
    auto c = sqfree::parse_choices(choices);
    *out = dup_string(sqfree::substitute(pair->pair, x, c).to_string());
  });
}

sqf_status sqf_verify_expansion(const sqf_pair* pair, uint32_t n, uint64_t budget,
                                sqf_expansion_report* out) {
  SQF_REQUIRE(pair && out);
  return guarded([&] {
    auto r = sqfree::verify_expansion(pair->pair, n,
                                      budget == 0 ? sqfree::kDefaultExpansionBudget : budget);
    *out = {r.total, r.distinct, r.square_free, r.all_square_free ? 1 : 0,
            r.all_distinct ? 1 : 0};
  });
}

sqf_status sqf_lower_bound(uint32_t k, double* out) {
  SQF_REQUIRE(out);
  return guarded([&] { *out = sqfree::lower_bound(k).mu_lower_bound; });
}

void sqf_search_config_init(sqf_search_config* config, uint32_t k) {
  if (!config)
    return;
  *config = {k, 1, 0, 2, 0, 0, 1, 1};
}

sqf_status sqf_find_pairs(const sqf_search_config* config, sqf_search_outcome** out) {
  SQF_REQUIRE(config && out);
  return guarded([&] {
    sqfree::SearchConfig cfg;
    cfg.k = config->k;
    cfg.shift_symmetry = config->shift_symmetry != 0;
    cfg.palindrome_constraint = config->palindrome_constraint != 0;
    if (config->first_letter >= 0)
      cfg.first_letter = config->first_letter;
    else
      cfg.first_letter.reset();
    if (config->max_results)
      cfg.max_results = config->max_results;
    if (config->node_budget)
      cfg.node_budget = config->node_budget;
    cfg.parallel_shards = config->parallel_shards;
    cfg.canonicalize = config->canonicalize != 0;

    auto outcome = sqfree::find_pairs(cfg);
    auto* result = new sqf_search_outcome;
    result->pairs.reserve(outcome.pairs_found.size());
    for (auto& p : outcome.pairs_found)
      result->pairs.push_back(sqf_pair{std::move(p)});
    result->nodes = outcome.nodes_expanded;
    result->exhausted = outcome.exhausted;
    *out = result;
  });
}

size_t sqf_outcome_count(const sqf_search_outcome* outcome) {
  return outcome ? outcome->pairs.size() : 0;
}

const sqf_pair* sqf_outcome_pair(const sqf_search_outcome* outcome, size_t index) {
  if (!outcome || index >= outcome->pairs.size())
    return nullptr;
  return &outcome->pairs[index];
}

uint64_t sqf_outcome_nodes(const sqf_search_outcome* outcome) {
  return outcome ? outcome->nodes : 0;
}

int sqf_outcome_exhausted(const sqf_search_outcome* outcome) {
  return outcome && outcome->exhausted ? 1 : 0;
}

void sqf_outcome_free(sqf_search_outcome* outcome) { delete outcome; }

} // extern "C"
