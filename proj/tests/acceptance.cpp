// Acceptance suite: one PASS/FAIL line per criterion; exit status 1 if any
// criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iterator>
#include <set>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "sqfree/brinkhuis.hpp"
#include "sqfree/morphism.hpp"
#include "sqfree/search.hpp"
#include "sqfree/words.hpp"

#ifndef SQFREE_GOLDEN_DIR
#error "SQFREE_GOLDEN_DIR must be defined"
#endif

using namespace sqfree;
using Clock = std::chrono::steady_clock;

namespace {

struct Result {
  bool pass = true;
  std::string detail;
  void require(bool cond, const std::string& what) {
    if (!cond && pass) {
      pass = false;
      detail = what;
    }
  }
};

int failures = 0;

void criterion(int id, const char* name, double max_seconds, const std::function<void(Result&)>& body) {
  Result r;
  const auto start = Clock::now();
  try {
    body(r);
  } catch (const std::exception& e) {
    r.require(false, std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  if (max_seconds > 0)
    r.require(secs < max_seconds, "runtime " + std::to_string(secs) + " s exceeds limit");
  if (!r.pass)
    ++failures;
  std::printf("[%s] AC%-2d %-40s %8.3f s%s%s\n", r.pass ? "PASS" : "FAIL", id, name, secs,
              r.detail.empty() ? "" : "  -- ", r.detail.c_str());
  std::fflush(stdout);
}

double truncate_to(double x, int decimals) {
  const double scale = std::pow(10.0, decimals);
  return std::floor(x * scale) / scale;
}

TriplePair relabel_shift(const TriplePair& tp, int c) {
  std::array<Word, 6> w;
  for (int i = 0; i < 3; ++i) {
    w[2 * ((i + c) % 3)] = shift(tp.u(i), c);
    w[2 * ((i + c) % 3) + 1] = shift(tp.v(i), c);
  }
  return make_triple_pair(w);
}

TriplePair swap_at(const TriplePair& tp, int i) {
  auto w = tp.words();
  std::swap(w[2 * i], w[2 * i + 1]);
  return make_triple_pair(w);
}

} // namespace

int main() {
  criterion(1, "sequence reproduction a(0..6)", 1.0, [](Result& r) {
    const std::uint64_t listing[] = {1, 3, 6, 12, 18, 30, 42};
    for (std::size_t n = 0; n <= 6; ++n)
      r.require(count_square_free(n) == listing[n], "a(" + std::to_string(n) + ") mismatch");
  });

  criterion(2, "DFS count == brute force, n<=10", 60.0, [](Result& r) {
    for (std::size_t n = 0; n <= 10; ++n) {
      std::uint64_t reference = 0;
      std::uint64_t naive = 0;
      for (const auto& s : oracle::all_words(n)) {
        if (!find_square(parse_word(s)))
          ++reference;
        if (!oracle::has_square(s))
          ++naive;
      }
      const std::uint64_t dfs = count_square_free(n);
      r.require(dfs == reference && dfs == naive, "n=" + std::to_string(n));
    }
  });

  criterion(3, "theorem certificate + golden file", 1.0, [](Result& r) {
    const TriplePair& p = paper_pair();
    Certificate cert = verify(p);
    r.require(cert.verdict(), "verdict");
    r.require(cert.concat_results.size() == 24, "24 concatenations");
    for (const auto& lw : concatenation_words(p))
      r.require(lw.word.size() == 36 && is_square_free(lw.word), "concat " + lw.label.to_string());
    r.require(cert.headtail_results.size() == 9, "nine head/tail levels");
    for (std::size_t i = 0; i < cert.headtail_results.size(); ++i)
      r.require(cert.headtail_results[i].r == 9 + i && cert.headtail_results[i].passed(),
                "head/tail level");
    std::ifstream in(SQFREE_GOLDEN_DIR "/paper_certificate.txt", std::ios::binary);
    const std::string golden{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    r.require(!golden.empty(), "golden file missing");
    r.require(cert.to_text() == golden, "certificate differs from golden file");
  });

  criterion(4, "shift relation U1,U2,V1,V2", 0, [](Result& r) {
    const TriplePair& p = paper_pair();
    r.require(shift(p.u(0), 1) == p.u(1), "U1");
    r.require(shift(p.u(0), 2) == p.u(2), "U2");
    r.require(shift(p.v(0), 1) == p.v(1), "V1");
    r.require(shift(p.v(0), 2) == p.v(2), "V2");
  });

  criterion(5, "expansion n=1..5 square-free+distinct", 10.0, [](Result& r) {
    const std::uint64_t totals[] = {0, 6, 24, 96, 288, 960};
    for (std::size_t n = 1; n <= 5; ++n) {
      auto rep = verify_expansion(paper_pair(), n);
      r.require(rep.total == totals[n], "total n=" + std::to_string(n));
      r.require(rep.total == (std::uint64_t{1} << n) * count_square_free(n), "2^n a(n)");
      r.require(rep.all_square_free && rep.all_distinct, "images n=" + std::to_string(n));
    }
  });

  criterion(6, "bounds 1.0416 / 1.0293 / 1.032", 0, [](Result& r) {
    r.require(truncate_to(lower_bound(18).mu_lower_bound, 4) == 1.0416, "k=18");
    r.require(truncate_to(lower_bound(25).mu_lower_bound, 4) == 1.0293, "k=25");
    r.require(truncate_to(lower_bound(23).mu_lower_bound, 3) == 1.032, "k=23");
    for (std::size_t k = 2; k < 200; ++k)
      r.require(lower_bound(k).mu_lower_bound > lower_bound(k + 1).mu_lower_bound, "monotone");
  });

  criterion(7, "no pairs for k=2..5", 10.0, [](Result& r) {
    for (std::size_t k = 2; k <= 5; ++k) {
      SearchConfig cfg;
      cfg.k = k;
      auto out = find_pairs(cfg);
      r.require(out.pairs_found.empty() && out.exhausted, "k=" + std::to_string(k));
    }
  });

  criterion(8, "search completeness at k=6", 10.0, [](Result& r) {
    std::vector<Word> words;
    enumerate_square_free(6, [&](const Word& w) { words.push_back(w); });
    r.require(words.size() == 42, "a(6)");
    std::set<std::array<Word, 6>> brute;
    std::size_t candidates = 0;
    for (const auto& u : words)
      for (const auto& v : words) {
        ++candidates;
        TriplePair tp = shift_symmetric_pair(u, v);
        if (verify(tp).verdict())
          brute.insert(canonicalize(tp).words());
      }
    r.require(candidates == 1764, "candidate count");
    SearchConfig cfg;
    cfg.k = 6;
    auto out = find_pairs(cfg);
    std::set<std::array<Word, 6>> found;
    for (const auto& p : out.pairs_found)
      found.insert(p.words());
    r.require(out.exhausted, "exhausted");
    r.require(found == brute, "result set differs from brute force");
  });

  criterion(9, "rediscovery at k=18", 600.0, [](Result& r) {
    SearchConfig cfg;
    cfg.k = 18;
    cfg.first_letter = 2;
    cfg.max_results = 1;
    cfg.node_budget = 100'000'000;
    auto out = find_pairs(cfg);
    r.require(out.pairs_found.size() == 1, "no pair within the node budget");
    if (!out.pairs_found.empty())
      r.require(verify(out.pairs_found[0]).verdict(), "emitted pair fails verify");

    cfg.max_results.reset();
    auto all = find_pairs(cfg);
    r.require(all.exhausted, "exhaustive run truncated");
    const auto target = canonicalize(paper_pair());
    bool seen = false;
    for (const auto& p : all.pairs_found)
      seen = seen || p == target;
    r.require(seen, "canonical paper pair missing");
  });

  criterion(10, "property suites", 0, [](Result& r) {
    // factor closure, shift/reverse invariance
    for (std::size_t n = 0; n <= 10; ++n)
      enumerate_square_free(n, [&](const Word& w) {
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t len = 1; i + len <= n; ++len)
            if (!is_square_free(w.letters().subspan(i, len)))
              r.require(false, "factor closure");
      });
    for (std::size_t n = 0; n <= 8; ++n)
      for (const auto& s : oracle::all_words(n)) {
        Word w = parse_word(s);
        const bool sf = is_square_free(w);
        r.require(is_square_free(shift(w, 1)) == sf && is_square_free(shift(w, 2)) == sf &&
                      is_square_free(reverse(w)) == sf,
                  "shift/reverse invariance");
      }
    // growth bounds
    std::vector<std::uint64_t> a;
    for (std::size_t n = 0; n <= 30; ++n)
      a.push_back(count_square_free(n));
    for (std::size_t n = 1; n + 1 < a.size(); ++n)
      r.require(a[n + 1] <= 2 * a[n], "a(n+1) <= 2a(n)");
    for (std::size_t m = 0; m < a.size(); ++m)
      for (std::size_t n = 0; m + n < a.size(); ++n)
        r.require(a[m + n] <= a[m] * a[n], "a(m+n) <= a(m)a(n)");
    // verify invariances
    const TriplePair& p = paper_pair();
    for (int c = 1; c <= 2; ++c)
      r.require(verify(relabel_shift(p, c)).verdict(), "shift/relabel invariance");
    for (int i = 0; i < 3; ++i)
      r.require(verify(swap_at(p, i)).verdict(), "per-index swap invariance");
    // canonicalize idempotence
    SearchConfig cfg;
    cfg.k = 25;
    for (const auto& q : find_pairs(cfg).pairs_found)
      r.require(canonicalize(q) == q && canonicalize(canonicalize(q)) == canonicalize(q),
                "canonicalize idempotence");
    r.require(canonicalize(canonicalize(p)) == canonicalize(p), "canonicalize idempotence");
  });

  std::printf("%s: %d criterion(s) failed\n", failures ? "FAILED" : "OK", failures);
  return failures ? 1 : 0;
}
