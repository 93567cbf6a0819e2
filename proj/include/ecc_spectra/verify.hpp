#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "ecc_spectra/sequence.hpp"
#include "ecc_spectra/theorems.hpp"

namespace ecc_spectra {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

struct SamplerOptions {
  std::size_t max_k = 6;
  int max_alpha = 5;
  /// When set, the last part is 1 with probability 1/2 (both irreducibility branches).
  bool allow_last_part_one = false;
};

/// Sequence number `index` of the stream for `seed`: k uniform in
/// [2, max_k], parts uniform in [1, max_alpha], last part in [2, max_alpha].
/// Each index has its own generator, so the result is independent of the
/// order in which indices are drawn.
inline GeneratingSequence sample_sequence(std::uint64_t seed, std::size_t index, const SamplerOptions& opt = {}) {
  std::mt19937_64 rng(splitmix64(seed ^ splitmix64(static_cast<std::uint64_t>(index))));
  auto uniform = [&](std::uint64_t lo, std::uint64_t hi) { return lo + rng() % (hi - lo + 1); };
  const auto k = static_cast<std::size_t>(uniform(2, opt.max_k));
  std::vector<int> alphas(2 * k);
  for (auto& a : alphas) a = static_cast<int>(uniform(1, static_cast<std::uint64_t>(opt.max_alpha)));
  if (opt.allow_last_part_one && rng() % 2 == 0)
    alphas.back() = 1;
  else
    alphas.back() = static_cast<int>(uniform(2, static_cast<std::uint64_t>(opt.max_alpha)));
  return GeneratingSequence(std::move(alphas));
}

/// Worker count for sweeps: hardware concurrency, capped by ECC_SPECTRA_THREADS.
inline std::size_t sweep_thread_count() {
  std::size_t threads = std::max(1u, std::thread::hardware_concurrency());
  if (const char* cap = std::getenv("ECC_SPECTRA_THREADS")) {
    const long value = std::strtol(cap, nullptr, 10);
    if (value >= 1) threads = std::min(threads, static_cast<std::size_t>(value));
  }
  return threads;
}

/// Runs fn(i) for i in [0, count) on up to `threads` workers.
template <typename Fn>
void parallel_for(std::size_t count, std::size_t threads, Fn&& fn) {
  threads = std::max<std::size_t>(1, std::min(threads, count));
  if (threads == 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) fn(i);
    });
  }
  for (auto& th : pool) th.join();
}

struct VerifyOptions {
  std::size_t trials = 500;
  std::size_t max_k = 6;
  int max_alpha = 5;
  std::uint64_t seed = 42;
  std::size_t threads = 1;
};

struct TrialResult {
  GeneratingSequence sequence{std::vector<int>{1}};
  std::vector<TheoremReport> reports;
  IntervalMargins margins;
};

struct TheoremTally {
  std::size_t passed = 0;
  std::size_t total = 0;
};

struct VerifySummary {
  std::size_t trials = 0;
  std::map<std::string, TheoremTally> tallies;
  double min_lower_margin = std::numeric_limits<double>::infinity();
  std::string min_lower_margin_sequence;
  std::size_t failures = 0;
  /// Failing report with the lowest trial index.
  std::optional<TheoremReport> first_failure;

  bool all_pass() const noexcept { return failures == 0; }
};

/// All checkers for trial `index`: the in-scope sample, the same sequence
/// with its last part set to 1 (irreducible branch), the two-part closed
/// form on (a1, a2) and the antiregular lemmas for m = 2k - 1.
inline TrialResult run_trial(const VerifyOptions& opt, std::size_t index) {
  TrialResult out;
  out.sequence = sample_sequence(opt.seed, index, {opt.max_k, opt.max_alpha, false});
  const GeneratingSequence& seq = out.sequence;
  auto guarded = [&](const char* id, auto&& check) {
    try {
      out.reports.push_back(check());
    } catch (const std::exception& e) {
      TheoremReport failed;
      failed.theorem = id;
      failed.sequence = seq.to_string();
      failed.note = std::string("exception: ") + e.what();
      out.reports.push_back(std::move(failed));
    }
  };
  try {
    const Analysis a = analyze(seq);
    for (auto& r : run_main_scope_checks(a, &out.margins)) out.reports.push_back(std::move(r));
  } catch (const std::exception& e) {
    TheoremReport failed;
    failed.theorem = "main_scope_checks";
    failed.sequence = seq.to_string();
    failed.note = std::string("exception: ") + e.what();
    out.reports.push_back(std::move(failed));
  }
  std::vector<int> irreducible_variant(seq.alphas().begin(), seq.alphas().end());
  irreducible_variant.back() = 1;
  guarded(theorem_id::kIrreducibility,
          [&] { return check_irreducibility(GeneratingSequence(std::move(irreducible_variant))); });
  guarded(theorem_id::kK1ClosedForm, [&] { return check_k1_closed_form(seq.part_size(1), seq.part_size(2)); });
  guarded(theorem_id::kAntiregular, [&] { return check_antiregular_lemmas(seq.length() - 1); });
  return out;
}

inline VerifySummary summarize(const std::vector<TrialResult>& results) {
  VerifySummary s;
  s.trials = results.size();
  for (const auto& trial : results) {
    if (trial.margins.lower < s.min_lower_margin) {
      s.min_lower_margin = trial.margins.lower;
      s.min_lower_margin_sequence = trial.sequence.to_string();
    }
    for (const auto& r : trial.reports) {
      auto& tally = s.tallies[r.theorem];
      ++tally.total;
      if (r.pass) {
        ++tally.passed;
      } else {
        ++s.failures;
        if (!s.first_failure) s.first_failure = r;
      }
    }
  }
  return s;
}

inline std::vector<TrialResult> run_trials(const VerifyOptions& opt) {
  std::vector<TrialResult> results(opt.trials);
  parallel_for(opt.trials, opt.threads, [&](std::size_t i) { results[i] = run_trial(opt, i); });
  return results;
}

inline VerifySummary run_verify(const VerifyOptions& opt) { return summarize(run_trials(opt)); }

}  // namespace ecc_spectra
