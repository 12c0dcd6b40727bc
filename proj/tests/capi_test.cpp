// Exercises the shared library strictly through its C header.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstring>
#include <string>

#include "sqfree/sqfree.h"

namespace {

std::string take(char* s) {
  std::string out = s;
  sqf_string_free(s);
  return out;
}

const char* kPaperWords[6] = {"210201202120102012", "210201021202102012",
                              "021012010201210120", "021012102010210120",
                              "102120121012021201", "102120210121021201"};

} // namespace

TEST_CASE("counting and square detection") {
  uint64_t count = 0;
  REQUIRE(sqf_count_square_free(6, &count) == SQF_OK);
  CHECK(count == 42);
  REQUIRE(sqf_count_square_free(0, &count) == SQF_OK);
  CHECK(count == 1);

  int found = -1;
  size_t start = 0, period = 0;
  REQUIRE(sqf_find_square("0101", &found, &start, &period) == SQF_OK);
  CHECK(found == 1);
  CHECK(start == 0);
  CHECK(period == 2);
  REQUIRE(sqf_find_square("0102", &found, &start, &period) == SQF_OK);
  CHECK(found == 0);

  CHECK(sqf_find_square("03", &found, &start, &period) == SQF_ERR_PARSE);
  CHECK(std::string(sqf_last_error()).find("position 1") != std::string::npos);
  CHECK(sqf_count_square_free(3, nullptr) == SQF_ERR_INVALID_ARGUMENT);
}

TEST_CASE("pair handles, verification and certificate text") {
  sqf_pair* paper = nullptr;
  REQUIRE(sqf_pair_paper(&paper) == SQF_OK);
  size_t k = 0;
  REQUIRE(sqf_pair_k(paper, &k) == SQF_OK);
  CHECK(k == 18);

  char* word = nullptr;
  REQUIRE(sqf_pair_word(paper, 5, &word) == SQF_OK);
  CHECK(take(word) == kPaperWords[5]);
  CHECK(sqf_pair_word(paper, 6, &word) == SQF_ERR_INVALID_ARGUMENT);

  sqf_pair* built = nullptr;
  REQUIRE(sqf_pair_from_words(kPaperWords, &built) == SQF_OK);
  char* a = nullptr;
  char* b = nullptr;
  REQUIRE(sqf_pair_format(paper, &a) == SQF_OK);
  REQUIRE(sqf_pair_format(built, &b) == SQF_OK);
  const std::string text = take(a);
  CHECK(text == take(b));

  sqf_pair* reparsed = nullptr;
  REQUIRE(sqf_pair_parse(("# comment\n" + text).c_str(), &reparsed) == SQF_OK);

  sqf_certificate* cert = nullptr;
  REQUIRE(sqf_pair_verify(reparsed, &cert) == SQF_OK);
  CHECK(sqf_certificate_passed(cert) == 1);
  char* cert_text = nullptr;
  REQUIRE(sqf_certificate_text(cert, &cert_text) == SQF_OK);
  const std::string ct = take(cert_text);
  CHECK(ct.rfind("k=18\n", 0) == 0);
  CHECK(ct.find("VERDICT PASS\n") != std::string::npos);
  sqf_certificate_free(cert);

  sqf_pair* canon = nullptr;
  REQUIRE(sqf_pair_canonicalize(paper, &canon) == SQF_OK);
  REQUIRE(sqf_pair_word(canon, 0, &word) == SQF_OK);
  CHECK(take(word) == "021012010201210120");

  sqf_pair_free(canon);
  sqf_pair_free(reparsed);
  sqf_pair_free(built);
  sqf_pair_free(paper);
}

TEST_CASE("pair construction errors map to status codes") {
  const char* mismatch[6] = {"012", "01", "01", "01", "01", "01"};
  sqf_pair* out = nullptr;
  CHECK(sqf_pair_from_words(mismatch, &out) == SQF_ERR_LENGTH_MISMATCH);
  const char* tiny[6] = {"0", "1", "2", "0", "1", "2"};
  CHECK(sqf_pair_from_words(tiny, &out) == SQF_ERR_DEGENERATE_K);
  CHECK(sqf_pair_parse("01\n02\n", &out) == SQF_ERR_PARSE);
  CHECK(out == nullptr);
}

TEST_CASE("substitution, expansion and bounds") {
  sqf_pair* paper = nullptr;
  REQUIRE(sqf_pair_paper(&paper) == SQF_OK);

  char* image = nullptr;
  REQUIRE(sqf_substitute(paper, "0", "U", &image) == SQF_OK);
  CHECK(take(image) == kPaperWords[0]);
  CHECK(sqf_substitute(paper, "01", "U", &image) == SQF_ERR_LENGTH_MISMATCH);
  CHECK(sqf_substitute(paper, "01", "Ux", &image) == SQF_ERR_PARSE);

  sqf_expansion_report report{};
  REQUIRE(sqf_verify_expansion(paper, 3, 0, &report) == SQF_OK);
  CHECK(report.total == 96);
  CHECK(report.all_square_free == 1);
  CHECK(report.all_distinct == 1);
  CHECK(sqf_verify_expansion(paper, 40, 0, &report) == SQF_ERR_BUDGET);

  const char* bad[6] = {kPaperWords[0], kPaperWords[0], kPaperWords[2],
                        kPaperWords[3], kPaperWords[4], kPaperWords[5]};
  sqf_pair* unverified = nullptr;
  REQUIRE(sqf_pair_from_words(bad, &unverified) == SQF_OK);
  CHECK(sqf_verify_expansion(unverified, 1, 0, &report) == SQF_ERR_PRECONDITION);
  sqf_pair_free(unverified);

  double mu = 0;
  REQUIRE(sqf_lower_bound(18, &mu) == SQF_OK);
  CHECK(mu == doctest::Approx(std::pow(2.0, 1.0 / 17.0)));
  CHECK(sqf_lower_bound(1, &mu) == SQF_ERR_DEGENERATE_K);

  sqf_pair_free(paper);
}

TEST_CASE("search through the C API") {
  sqf_search_config cfg;
  sqf_search_config_init(&cfg, 18);
  CHECK(cfg.shift_symmetry == 1);
  CHECK(cfg.first_letter == 2);
  CHECK(cfg.canonicalize == 1);
  cfg.max_results = 1;

  sqf_search_outcome* outcome = nullptr;
  REQUIRE(sqf_find_pairs(&cfg, &outcome) == SQF_OK);
  REQUIRE(sqf_outcome_count(outcome) == 1);
  CHECK(sqf_outcome_exhausted(outcome) == 0);
  CHECK(sqf_outcome_nodes(outcome) > 0);
  const sqf_pair* found = sqf_outcome_pair(outcome, 0);
  REQUIRE(found != nullptr);
  CHECK(sqf_outcome_pair(outcome, 1) == nullptr);
  sqf_certificate* cert = nullptr;
  REQUIRE(sqf_pair_verify(found, &cert) == SQF_OK);
  CHECK(sqf_certificate_passed(cert) == 1);
  sqf_certificate_free(cert);
  sqf_outcome_free(outcome);

  sqf_search_config_init(&cfg, 4);
  REQUIRE(sqf_find_pairs(&cfg, &outcome) == SQF_OK);
  CHECK(sqf_outcome_count(outcome) == 0);
  CHECK(sqf_outcome_exhausted(outcome) == 1);
  sqf_outcome_free(outcome);

  sqf_search_config_init(&cfg, 7);
  cfg.shift_symmetry = 0;
  cfg.palindrome_constraint = 1;
  CHECK(sqf_find_pairs(&cfg, &outcome) == SQF_ERR_CONFIG);
}
