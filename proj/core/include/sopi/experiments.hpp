#pragma once

#include "sopi/distribution.hpp"
#include "sopi/large_object.hpp"
#include "sopi/modarith.hpp"
#include "sopi/set_designer.hpp"
#include "sopi/sopi.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sopi {

enum class SplitKind { equal, random };

std::string_view to_string(SplitKind kind) noexcept;
SplitKind parse_split(std::string_view text);

/// Monte Carlo configuration for downloads from random SOPIs. A client
/// receives M = ceil(K/(1-delta)) symbols in total, spread over `streams`
/// prefixes, and can recover when at least K of them are distinct.
struct TrialConfig {
  FieldParams field = FieldParams::mersenne31();
  std::uint64_t source_symbols = 0;  // K
  double delta = 0.0;
  std::uint32_t streams = 1;       // s
  std::uint64_t total_symbols = 0;  // M, derived
  SplitKind split = SplitKind::equal;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  unsigned threads = 0;  // 0 = hardware concurrency

  /// Derives M and checks K >= 1, 0 <= delta < 1, s >= 1 and M^2 <= 2N.
  static TrialConfig make(const FieldParams& field, std::uint64_t source_symbols, double delta, std::uint32_t streams,
                          SplitKind split, std::uint64_t trials, std::uint64_t seed);

  /// Prefix lengths summing to M. Equal splits differ by at most one.
  std::vector<std::uint64_t> prefix_lengths(Rng& rng) const;
};

struct TrialOutcome {
  std::uint64_t distinct = 0;
  std::uint64_t duplicates = 0;
  bool recoverable = false;
};

/// One trial on the substream (seed, trial_index). `forced` overrides the
/// random SOPIs (one per stream) for tests.
TrialOutcome run_random_trial(const TrialConfig& config, std::uint64_t trial_index, std::span<const Sopi> forced = {});

struct ExperimentReport {
  TrialConfig config;
  std::uint64_t trials_run = 0;
  std::uint64_t failures = 0;
  double failure_rate = 0.0;
  double theorem_bound = 1.0;  // min(1, 1/(delta^2 N))
  double bound_sigma = 0.0;    // binomial standard deviation at theorem_bound
  bool within_bound = true;    // failure_rate <= theorem_bound + 3 sigma
  double mean_duplicates = 0.0;
  std::uint64_t max_duplicates = 0;
  double expected_duplicates_bound = 0.0;  // (M-1)^2/(2N)
  double wall_time_seconds = 0.0;
};

/// Runs config.trials independent trials, possibly on several threads. The
/// report does not depend on the thread count.
ExperimentReport estimate_failure_probability(const TrialConfig& config);

struct DesignedOverlapReport {
  std::uint64_t samples = 0;
  std::uint32_t streams = 0;
  std::uint64_t total_symbols = 0;  // m
  std::uint32_t min_distance = 0;
  double worst_case_duplicates = 0.0;           // (s-1)((m-s)/d + s/2)
  double worst_case_duplicate_fraction = 0.0;
  std::uint64_t max_duplicates = 0;
  double mean_duplicates = 0.0;
  double max_duplicate_fraction = 0.0;
  std::uint64_t violations = 0;           // samples above the bound
  std::uint64_t same_stride_pairs = 0;    // pairs in samples sharing B
  std::uint64_t same_stride_duplicates = 0;
  std::uint64_t seed = 0;
};

/// Samples s distinct SOPIs from the set and a random split of m symbols into
/// s prefixes of length <= M each, then counts duplicate symbol IDs. Every
/// sample is checked against the worst-case bound; for s = 2 the integer
/// bound floor((m-2)/d) + 1 is used.
DesignedOverlapReport designed_overlap_experiment(const SopiSet& set, std::uint32_t streams,
                                                  std::uint64_t total_symbols, std::uint64_t samples,
                                                  std::uint64_t seed);

struct DownloadReport {
  std::vector<StreamOffer> offers;
  std::vector<StreamOffer> selected;
  std::vector<std::uint64_t> stream_lengths;
  std::uint64_t symbols_requested = 0;
  std::vector<std::uint64_t> block_distinct;  // distinct symbol IDs per source block
  std::vector<std::uint64_t> block_needed;    // K for Z = 1, else symbols_in_block(j)
  std::uint64_t distinct = 0;
  std::uint64_t duplicates = 0;
  bool recoverable = false;
};

/// A client reaching `client_view` fetches `budget` symbols round-robin from
/// the streams left after select_streams. For Z > 1 each selected stream gets
/// (C, D) from Rng::for_stream(seed, stream index).
DownloadReport simulate_multi_source_download(const BlockStructure& structure, const Assignment& assignment,
                                              std::span<const std::string> client_view,
                                              std::uint64_t source_symbols, std::uint64_t budget,
                                              const FieldParams& field, std::uint64_t seed = 0);

}  // namespace sopi
