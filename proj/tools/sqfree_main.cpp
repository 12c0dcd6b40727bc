// sqfree: command-line front end over the C API.
//
// Exit codes: 0 success / verdict pass, 1 verdict fail or not square-free,
// 2 usage or parse error, 3 budget exhausted without a result.

#include <charconv>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <string>

#include "CLI11.hpp"
#include "sqfree/sqfree.h"

namespace {

enum Exit : int { kOk = 0, kFail = 1, kUsage = 2, kBudget = 3 };

struct UsageError {
  std::string message;
};

int exit_for(sqf_status status) {
  switch (status) {
  case SQF_OK:
    return kOk;
  case SQF_ERR_BUDGET:
    return kBudget;
  case SQF_ERR_PRECONDITION:
    return kFail;
  default:
    return kUsage;
  }
}

// Throws on failure; the message goes to stderr in main.
struct StatusError {
  sqf_status status;
  std::string message;
};

void check(sqf_status status) {
  if (status != SQF_OK)
    throw StatusError{status, sqf_last_error()};
}

struct PairDeleter {
  void operator()(sqf_pair* p) const { sqf_pair_free(p); }
};
struct CertDeleter {
  void operator()(sqf_certificate* c) const { sqf_certificate_free(c); }
};
struct OutcomeDeleter {
  void operator()(sqf_search_outcome* o) const { sqf_outcome_free(o); }
};
struct StringDeleter {
  void operator()(char* s) const { sqf_string_free(s); }
};
using PairPtr = std::unique_ptr<sqf_pair, PairDeleter>;
using StringPtr = std::unique_ptr<char, StringDeleter>;

std::string take(char* s) {
  StringPtr owned(s);
  return owned.get();
}

template <class Int>
Int parse_count(const std::string& text, const char* what) {
  Int value{};
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size())
    throw UsageError{std::string("invalid ") + what + ": '" + text + "'"};
  return value;
}

std::string read_input(const std::string& path) {
  if (path == "-")
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw UsageError{"cannot open '" + path + "'"};
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

PairPtr load_pair(const std::string& path) {
  std::string text = read_input(path);
  sqf_pair* raw = nullptr;
  check(sqf_pair_parse(text.c_str(), &raw));
  return PairPtr(raw);
}

int cmd_count(const std::string& n_text) {
  auto n = parse_count<uint32_t>(n_text, "length");
  uint64_t count = 0;
  check(sqf_count_square_free(n, &count));
  std::cout << count << '\n';
  return kOk;
}

int cmd_check(const std::string& word) {
  int found = 0;
  size_t start = 0, period = 0;
  check(sqf_find_square(word.c_str(), &found, &start, &period));
  if (!found) {
    std::cout << "SQUAREFREE\n";
    return kOk;
  }
  std::cout << "SQUARE start=" << start << " period=" << period << '\n';
  return kFail;
}

int cmd_pair_verify(const std::string& path) {
  PairPtr pair = load_pair(path);
  sqf_certificate* raw = nullptr;
  check(sqf_pair_verify(pair.get(), &raw));
  std::unique_ptr<sqf_certificate, CertDeleter> cert(raw);
  char* text = nullptr;
  check(sqf_certificate_text(cert.get(), &text));
  std::cout << take(text);
  return sqf_certificate_passed(cert.get()) ? kOk : kFail;
}

int cmd_pair_show_paper() {
  sqf_pair* raw = nullptr;
  check(sqf_pair_paper(&raw));
  PairPtr pair(raw);
  char* text = nullptr;
  check(sqf_pair_format(pair.get(), &text));
  std::cout << "# 18-Brinkhuis triple-pair: U0 V0 U1 V1 U2 V2\n" << take(text);
  return kOk;
}

struct SearchFlags {
  uint32_t k = 18;
  bool no_shift = false;
  bool palindrome = false;
  std::string first_letter = "2";
  uint64_t limit = 0;
  uint64_t nodes = 0;
  uint32_t shards = 1;
  bool raw = false;
};

int cmd_pair_search(const SearchFlags& flags) {
  sqf_search_config cfg;
  sqf_search_config_init(&cfg, flags.k);
  cfg.shift_symmetry = flags.no_shift ? 0 : 1;
  cfg.palindrome_constraint = flags.palindrome ? 1 : 0;
  cfg.first_letter =
      flags.first_letter == "none" ? -1 : parse_count<int>(flags.first_letter, "first letter");
  cfg.max_results = flags.limit;
  cfg.node_budget = flags.nodes;
  cfg.parallel_shards = flags.shards;
  cfg.canonicalize = flags.raw ? 0 : 1;

  sqf_search_outcome* raw = nullptr;
  check(sqf_find_pairs(&cfg, &raw));
  std::unique_ptr<sqf_search_outcome, OutcomeDeleter> outcome(raw);

  const size_t found = sqf_outcome_count(outcome.get());
  for (size_t i = 0; i < found; ++i) {
    char* text = nullptr;
    check(sqf_pair_format(sqf_outcome_pair(outcome.get(), i), &text));
    std::cout << "# pair " << (i + 1) << '\n' << take(text);
  }
  const bool exhausted = sqf_outcome_exhausted(outcome.get()) != 0;
  std::cout << "nodes=" << sqf_outcome_nodes(outcome.get()) << " found=" << found
            << " exhausted=" << (exhausted ? "true" : "false") << '\n';
  if (found > 0)
    return kOk;
  return exhausted ? kFail : kBudget;
}

int cmd_bound(const std::string& k_text) {
  auto k = parse_count<uint32_t>(k_text, "k");
  double value = 0;
  check(sqf_lower_bound(k, &value));
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9f", value);
  std::cout << "2^(1/" << (k - 1) << ") = " << buf << '\n';
  return kOk;
}

int cmd_expand(const std::string& path, const std::string& word, const std::string& choices) {
  PairPtr pair = load_pair(path);
  char* out = nullptr;
  check(sqf_substitute(pair.get(), word.c_str(), choices.c_str(), &out));
  std::cout << take(out) << '\n';
  return kOk;
}

int cmd_expand_verify(const std::string& path, const std::string& n_text, uint64_t budget) {
  auto n = parse_count<uint32_t>(n_text, "n");
  PairPtr pair = load_pair(path);
  sqf_expansion_report report{};
  check(sqf_verify_expansion(pair.get(), n, budget, &report));
  std::cout << "total=" << report.total
            << " squarefree=" << (report.all_square_free ? "true" : "false")
            << " distinct=" << (report.all_distinct ? "true" : "false") << '\n';
  return report.all_square_free && report.all_distinct ? kOk : kFail;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ternary square-free words and Brinkhuis triple-pairs"};
  app.require_subcommand(1);

  std::string count_n;
  auto* count = app.add_subcommand("count", "Print a(n), the number of square-free words of length n");
  count->add_option("n", count_n, "word length")->required();

  std::string check_word;
  auto* check_cmd = app.add_subcommand("check", "Test a word for square-freeness");
  check_cmd->add_option("word", check_word, "word over 0,1,2")->required();

  auto* pair = app.add_subcommand("pair", "Triple-pair operations");
  pair->require_subcommand(1);
  std::string verify_path;
  auto* verify = pair->add_subcommand("verify", "Verify a pair file and print its certificate");
  verify->add_option("path", verify_path, "pair file, or - for stdin")->required();
  auto* show = pair->add_subcommand("show-paper", "Print the built-in 18-letter pair");

  SearchFlags flags;
  auto* search = pair->add_subcommand("search", "Search for triple-pairs");
  search->add_option("--k", flags.k, "word length")->capture_default_str();
  search->add_flag("--no-shift", flags.no_shift, "search all six words independently");
  search->add_flag("--palindrome", flags.palindrome, "require palindromic U0 and V0");
  search->add_option("--first-letter", flags.first_letter, "pin U0[0] to 0, 1, 2, or none")
      ->capture_default_str();
  search->add_option("--limit", flags.limit, "stop after this many pairs (0 = unlimited)");
  search->add_option("--nodes", flags.nodes, "node budget (0 = unlimited)");
  search->add_option("--shards", flags.shards, "worker threads")->capture_default_str();
  search->add_flag("--raw", flags.raw, "emit raw solutions instead of canonical forms");

  std::string bound_k;
  auto* bound = app.add_subcommand("bound", "Print the lower bound 2^(1/(k-1)) on mu");
  bound->add_option("k", bound_k, "pair length")->required();

  std::string expand_path, expand_word, expand_choices;
  auto* expand = app.add_subcommand("expand", "Substitute a word through a pair");
  expand->add_option("path", expand_path, "pair file, or - for stdin")->required();
  expand->add_option("--word", expand_word, "word over 0,1,2")->required();
  expand->add_option("--choices", expand_choices, "U/V choice per letter")->required();

  std::string ev_path, ev_n;
  uint64_t ev_budget = 0;
  auto* expand_verify =
      app.add_subcommand("expand-verify", "Check all 2^n a(n) images for square-freeness");
  expand_verify->add_option("path", ev_path, "pair file, or - for stdin")->required();
  expand_verify->add_option("--n", ev_n, "source word length")->required();
  expand_verify->add_option("--budget", ev_budget, "maximum number of images (0 = default)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (*count)
      return cmd_count(count_n);
    if (*check_cmd)
      return cmd_check(check_word);
    if (*verify)
      return cmd_pair_verify(verify_path);
    if (*show)
      return cmd_pair_show_paper();
    if (*search)
      return cmd_pair_search(flags);
    if (*bound)
      return cmd_bound(bound_k);
    if (*expand)
      return cmd_expand(expand_path, expand_word, expand_choices);
    if (*expand_verify)
      return cmd_expand_verify(ev_path, ev_n, ev_budget);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.message << '\n';
    return kUsage;
  } catch (const StatusError& e) {
    std::cerr << "error: " << e.message << '\n';
    return exit_for(e.status);
  }
  return kUsage;
}
