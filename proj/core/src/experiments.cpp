#include "sopi/experiments.hpp"

#include "sopi/errors.hpp"
#include "sopi/overlap.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <thread>
#include <unordered_set>

namespace sopi {

std::string_view to_string(SplitKind kind) noexcept {
  return kind == SplitKind::random ? "random" : "equal";
}

SplitKind parse_split(std::string_view text) {
  if (text == "equal") return SplitKind::equal;
  if (text == "random") return SplitKind::random;
  throw InvalidArgument("unknown split '" + std::string(text) + "' (expected equal|random)");
}

TrialConfig TrialConfig::make(const FieldParams& field, std::uint64_t source_symbols, double delta,
                              std::uint32_t streams, SplitKind split, std::uint64_t trials, std::uint64_t seed) {
  if (source_symbols == 0) throw InvalidArgument("K must be >= 1");
  if (!(delta >= 0.0 && delta < 1.0)) throw InvalidArgument("delta must lie in [0, 1)");
  if (streams == 0) throw InvalidArgument("stream count s must be >= 1");
  TrialConfig c;
  c.field = field;
  c.source_symbols = source_symbols;
  c.delta = delta;
  c.streams = streams;
  c.split = split;
  c.trials = trials;
  c.seed = seed;
  // ceil(K/(1-delta)); the epsilon keeps e.g. 90/0.9 from rounding up to 101.
  c.total_symbols = static_cast<std::uint64_t>(std::ceil(static_cast<double>(source_symbols) / (1.0 - delta) - 1e-9));
  if (static_cast<double>(c.total_symbols) * static_cast<double>(c.total_symbols) > 2.0 * field.n()) {
    throw InvalidArgument("M=" + std::to_string(c.total_symbols) + " violates M^2 <= 2N");
  }
  return c;
}

namespace {

std::uint64_t sort_unique_count(std::vector<std::uint32_t>& ids) {
  std::sort(ids.begin(), ids.end());
  return static_cast<std::uint64_t>(std::unique(ids.begin(), ids.end()) - ids.begin());
}

void append_prefix(std::vector<std::uint32_t>& out, const Sopi& sopi, std::uint64_t length, const FieldParams& field) {
  const std::uint64_t n = field.n();
  std::uint64_t current = sopi.a;
  for (std::uint64_t i = 0; i < length; ++i) {
    out.push_back(static_cast<std::uint32_t>(current));
    current += sopi.b;
    if (current >= n) current -= n;
  }
}

// Uniform composition by sorted cut points, retried while some part exceeds
// `cap`. Near the cap (m close to s*cap) rejection rarely succeeds, so fall
// back to an equal split perturbed by random capacity-respecting transfers.
std::vector<std::uint64_t> random_capped_split(std::uint64_t m, std::uint32_t s, std::uint64_t cap, Rng& rng) {
  std::vector<std::uint64_t> lengths(s);
  std::vector<std::uint64_t> cuts(s - 1);
  for (int attempt = 0; attempt < 64; ++attempt) {
    for (auto& c : cuts) c = rng.below(m + 1);
    std::sort(cuts.begin(), cuts.end());
    std::uint64_t prev = 0;
    for (std::uint32_t k = 0; k + 1 < s; ++k) {
      lengths[k] = cuts[k] - prev;
      prev = cuts[k];
    }
    lengths[s - 1] = m - prev;
    if (std::all_of(lengths.begin(), lengths.end(), [&](std::uint64_t l) { return l <= cap; })) return lengths;
  }
  for (std::uint32_t k = 0; k < s; ++k) lengths[k] = m / s + (k < m % s ? 1 : 0);
  for (std::uint32_t move = 0; move < 8 * s && s > 1; ++move) {
    const auto from = static_cast<std::uint32_t>(rng.below(s));
    const auto to = static_cast<std::uint32_t>(rng.below(s));
    const std::uint64_t room = std::min(lengths[from], cap - lengths[to]);
    if (from == to || room == 0) continue;
    const std::uint64_t amount = rng.between(1, room);
    lengths[from] -= amount;
    lengths[to] += amount;
  }
  return lengths;
}

}  // namespace

std::vector<std::uint64_t> TrialConfig::prefix_lengths(Rng& rng) const {
  std::vector<std::uint64_t> lengths(streams, 0);
  if (split == SplitKind::equal) {
    for (std::uint32_t k = 0; k < streams; ++k) {
      lengths[k] = total_symbols / streams + (k < total_symbols % streams ? 1 : 0);
    }
    return lengths;
  }
  return random_capped_split(total_symbols, streams, total_symbols, rng);
}

TrialOutcome run_random_trial(const TrialConfig& config, std::uint64_t trial_index, std::span<const Sopi> forced) {
  if (!forced.empty() && forced.size() != config.streams) {
    throw InvalidArgument("forced SOPI count must equal the stream count");
  }
  Rng rng = Rng::for_stream(config.seed, trial_index);
  std::vector<Sopi> sopis(config.streams);
  for (std::uint32_t k = 0; k < config.streams; ++k) {
    sopis[k] = forced.empty() ? random_sopi(rng, config.field) : forced[k];
  }
  const auto lengths = config.prefix_lengths(rng);

  std::vector<std::uint32_t> ids;
  ids.reserve(config.total_symbols);
  for (std::uint32_t k = 0; k < config.streams; ++k) append_prefix(ids, sopis[k], lengths[k], config.field);

  TrialOutcome out;
  out.distinct = sort_unique_count(ids);
  out.duplicates = config.total_symbols - out.distinct;
  out.recoverable = out.distinct >= config.source_symbols;
  return out;
}

ExperimentReport estimate_failure_probability(const TrialConfig& config) {
  const auto start = std::chrono::steady_clock::now();

  struct Partial {
    std::uint64_t failures = 0;
    std::uint64_t duplicate_sum = 0;
    std::uint64_t max_duplicates = 0;
  };
  unsigned workers = config.threads != 0 ? config.threads : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, std::max<std::uint64_t>(config.trials, 1)));
  std::vector<Partial> partials(workers);
  auto run_range = [&](unsigned w) {
    Partial& p = partials[w];
    for (std::uint64_t t = w; t < config.trials; t += workers) {
      const TrialOutcome o = run_random_trial(config, t);
      if (!o.recoverable) ++p.failures;
      p.duplicate_sum += o.duplicates;
      p.max_duplicates = std::max(p.max_duplicates, o.duplicates);
    }
  };
  if (workers == 1) {
    run_range(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run_range, w);
  }

  ExperimentReport r;
  r.config = config;
  r.trials_run = config.trials;
  std::uint64_t duplicate_sum = 0;
  for (const auto& p : partials) {
    r.failures += p.failures;
    duplicate_sum += p.duplicate_sum;
    r.max_duplicates = std::max(r.max_duplicates, p.max_duplicates);
  }
  if (r.trials_run > 0) {
    r.failure_rate = static_cast<double>(r.failures) / static_cast<double>(r.trials_run);
    r.mean_duplicates = static_cast<double>(duplicate_sum) / static_cast<double>(r.trials_run);
  }
  r.theorem_bound = config.delta > 0.0 ? theorem_failure_bound(config.delta, config.field) : 1.0;
  if (r.trials_run > 0) {
    r.bound_sigma = std::sqrt(r.theorem_bound * (1.0 - r.theorem_bound) / static_cast<double>(r.trials_run));
  }
  r.within_bound = r.failure_rate <= r.theorem_bound + 3.0 * r.bound_sigma;
  const double mm1 = static_cast<double>(config.total_symbols - 1);
  r.expected_duplicates_bound = mm1 * mm1 / (2.0 * config.field.n());
  r.wall_time_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

DesignedOverlapReport designed_overlap_experiment(const SopiSet& set, std::uint32_t streams,
                                                  std::uint64_t total_symbols, std::uint64_t samples,
                                                  std::uint64_t seed) {
  const auto entries = set.entries();
  const FieldParams& field = set.design.field();
  const std::uint64_t max_len = set.design.max_length();
  const std::uint32_t d = set.design.min_distance();
  if (streams < 1 || streams > entries.size()) {
    throw InvalidArgument("stream count must lie in [1, |set|]");
  }
  if (total_symbols < streams || total_symbols > streams * max_len) {
    throw InvalidArgument("total symbols m must lie in [s, s*M]");
  }

  DesignedOverlapReport r;
  r.samples = samples;
  r.streams = streams;
  r.total_symbols = total_symbols;
  r.min_distance = d;
  r.seed = seed;
  r.worst_case_duplicates = static_cast<double>(total_symbols) - multi_overlap_lower_bound(total_symbols, streams, d);
  r.worst_case_duplicate_fraction = r.worst_case_duplicates / static_cast<double>(total_symbols);
  const std::uint64_t pair_bound = streams == 2 ? total_symbols - pair_overlap_lower_bound(total_symbols, d) : 0;

  Rng rng(seed);
  std::vector<std::size_t> index(entries.size());
  std::vector<std::uint32_t> ids;
  std::uint64_t duplicate_sum = 0;
  for (std::uint64_t sample = 0; sample < samples; ++sample) {
    std::iota(index.begin(), index.end(), std::size_t{0});
    for (std::uint32_t k = 0; k < streams; ++k) {
      std::swap(index[k], index[k + rng.below(index.size() - k)]);
    }
    const auto lengths = random_capped_split(total_symbols, streams, max_len, rng);

    ids.clear();
    for (std::uint32_t k = 0; k < streams; ++k) append_prefix(ids, entries[index[k]], lengths[k], field);
    const std::uint64_t dups = total_symbols - sort_unique_count(ids);

    for (std::uint32_t x = 0; x < streams; ++x) {
      for (std::uint32_t y = x + 1; y < streams; ++y) {
        const Sopi& p = entries[index[x]];
        const Sopi& q = entries[index[y]];
        if (p.b != q.b) continue;
        ++r.same_stride_pairs;
        std::vector<std::uint32_t> pair_ids;
        append_prefix(pair_ids, p, lengths[x], field);
        append_prefix(pair_ids, q, lengths[y], field);
        r.same_stride_duplicates += lengths[x] + lengths[y] - sort_unique_count(pair_ids);
      }
    }

    const bool over = static_cast<double>(dups) > r.worst_case_duplicates + 1e-9 || (streams == 2 && dups > pair_bound);
    if (over) ++r.violations;
    duplicate_sum += dups;
    r.max_duplicates = std::max(r.max_duplicates, dups);
  }
  if (samples > 0) {
    r.mean_duplicates = static_cast<double>(duplicate_sum) / static_cast<double>(samples);
  }
  r.max_duplicate_fraction = static_cast<double>(r.max_duplicates) / static_cast<double>(total_symbols);
  return r;
}

DownloadReport simulate_multi_source_download(const BlockStructure& structure, const Assignment& assignment,
                                              std::span<const std::string> client_view,
                                              std::uint64_t source_symbols, std::uint64_t budget,
                                              const FieldParams& field, std::uint64_t seed) {
  if (client_view.empty()) {
    throw InvalidArgument("client view must name at least one reachable node");
  }
  if (budget < source_symbols) {
    throw InvalidArgument("budget must be >= K");
  }
  DownloadReport r;
  for (const auto& node : client_view) {
    const auto it = assignment.sopi_of.find(node);
    if (it == assignment.sopi_of.end()) {
      throw InvalidArgument("node '" + node + "' has no assigned SOPI");
    }
    r.offers.push_back(StreamOffer{node, it->second});
  }
  r.selected = select_streams(r.offers);
  const std::uint64_t s = r.selected.size();
  for (std::uint64_t k = 0; k < s; ++k) {
    r.stream_lengths.push_back(budget / s + (k < budget % s ? 1 : 0));
  }
  r.symbols_requested = std::accumulate(r.stream_lengths.begin(), r.stream_lengths.end(), std::uint64_t{0});

  const std::uint64_t z = structure.block_count;
  if (z <= 1) {
    std::vector<std::uint32_t> ids;
    ids.reserve(budget);
    for (std::uint64_t k = 0; k < s; ++k) {
      if (r.stream_lengths[k] > field.n()) throw InvalidArgument("stream length exceeds N");
      append_prefix(ids, r.selected[k].sopi, r.stream_lengths[k], field);
    }
    r.distinct = sort_unique_count(ids);
    r.block_distinct = {r.distinct};
    r.block_needed = {source_symbols};
  } else {
    std::vector<std::unordered_set<std::uint32_t>> per_block(z);
    for (std::uint64_t k = 0; k < s; ++k) {
      Rng rng = Rng::for_stream(seed, k);
      const auto c = static_cast<std::uint32_t>(rng.below(field.n()));
      const auto d = static_cast<std::uint32_t>(rng.between(1, field.n() - 1));
      const LargeSopi large{r.selected[k].sopi.a, r.selected[k].sopi.b, c, d};
      for (std::uint64_t i = 0; i < r.stream_lengths[k]; ++i) {
        const BlockSymbolRef ref = large_symbol_at(large, i, z, field);
        per_block[ref.block_index].insert(ref.symbol_id.value);
      }
    }
    for (std::uint64_t j = 0; j < z; ++j) {
      r.block_distinct.push_back(per_block[j].size());
      r.block_needed.push_back(structure.symbols_in_block(j));
      r.distinct += per_block[j].size();
    }
  }
  r.duplicates = r.symbols_requested - r.distinct;
  r.recoverable = true;
  for (std::size_t j = 0; j < r.block_distinct.size(); ++j) {
    if (r.block_distinct[j] < r.block_needed[j]) r.recoverable = false;
  }
  return r;
}

}  // namespace sopi
