#include "sopi/overlap.hpp"

#include "sopi/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>
#include <unordered_set>

namespace sopi {

DiffSet::DiffSet(std::uint32_t max_length) : m_(max_length) {
  if (max_length < 2) {
    throw InvalidArgument("difference set needs M >= 2");
  }
}

bool DiffSet::fits_design(const FieldParams& params) const noexcept {
  const std::uint64_t m = m_;
  return 2 * m * m < params.n();
}

bool DiffSet::fits_theorem(const FieldParams& params) const noexcept {
  const std::uint64_t m = m_;
  return m * m <= 2 * static_cast<std::uint64_t>(params.n());
}

bool matches(std::int64_t d0, std::int64_t d1, std::uint32_t b0, std::uint32_t b1, const FieldParams& params) {
  return mod_mul(to_residue(d0, params), b0, params) == mod_mul(to_residue(d1, params), b1, params);
}

namespace {

void require_design(const DiffSet& diff, const FieldParams& params) {
  if (!diff.fits_design(params)) {
    throw InvalidArgument("M=" + std::to_string(diff.max_length()) + " violates M^2 < N/2 for N=" +
                          std::to_string(params.n()));
  }
}

void require_stride(std::uint32_t b, const FieldParams& params) {
  if (b == 0 || b >= params.n()) {
    throw InvalidArgument("stride B=" + std::to_string(b) + " must lie in [1, N-1]");
  }
}

DistanceResult unmatched(const DiffSet& diff) {
  return DistanceResult{false, 0, 0, 2 * static_cast<std::uint64_t>(diff.max_length())};
}

// ratio = B0 * B1^{-1}; a match (d0, d1) has d1 == d0 * ratio.
std::uint32_t stride_ratio(std::uint32_t b0, std::uint32_t b1, const FieldParams& params) {
  return mod_mul(b0, mod_inv(b1, params), params);
}

}  // namespace

DistanceResult distance(std::uint32_t b0, std::uint32_t b1, const DiffSet& diff, const FieldParams& params) {
  require_stride(b0, params);
  require_stride(b1, params);
  require_design(diff, params);
  const std::uint32_t ratio = stride_ratio(b0, b1, params);
  const std::int64_t m = diff.max_length();

  DistanceResult best = unmatched(diff);
  for (std::int64_t d0 = 1; d0 < m; ++d0) {
    if (best.matched && static_cast<std::uint64_t>(d0) + 1 >= best.distance) break;
    const std::int64_t d1 = centered(mod_mul(static_cast<std::uint32_t>(d0), ratio, params), params);
    if (!diff.contains(d1)) continue;
    const auto dist = static_cast<std::uint64_t>(d0 + std::llabs(d1));
    if (!best.matched || dist < best.distance) {
      best = DistanceResult{true, d0, d1, dist};
    }
  }
  return best;
}

DistanceResult distance_bruteforce(std::uint32_t b0, std::uint32_t b1, const DiffSet& diff,
                                   const FieldParams& params) {
  require_stride(b0, params);
  require_stride(b1, params);
  const std::int64_t m = diff.max_length();
  DistanceResult best = unmatched(diff);
  for (std::int64_t d0 = 1; d0 < m; ++d0) {
    for (std::int64_t d1 = -m + 1; d1 < m; ++d1) {
      if (d1 == 0 || !matches(d0, d1, b0, b1, params)) continue;
      const auto dist = static_cast<std::uint64_t>(d0 + std::llabs(d1));
      if (!best.matched || dist < best.distance) {
        best = DistanceResult{true, d0, d1, dist};
      }
    }
  }
  return best;
}

bool distance_at_least(std::uint32_t b0, std::uint32_t b1, std::uint64_t min_distance, const DiffSet& diff,
                       const FieldParams& params) {
  return ratio_distance_at_least(stride_ratio(b0, b1, params), min_distance, diff, params);
}

bool ratio_distance_at_least(std::uint32_t ratio, std::uint64_t min_distance, const DiffSet& diff,
                             const FieldParams& params) {
  const std::int64_t m = diff.max_length();
  const auto limit = static_cast<std::int64_t>(std::min<std::uint64_t>(min_distance, 2 * diff.max_length()));
  for (std::int64_t d0 = 1; d0 < m && d0 + 1 < limit; ++d0) {
    const std::int64_t d1 = centered(mod_mul(static_cast<std::uint32_t>(d0), ratio, params), params);
    if (diff.contains(d1) && d0 + std::llabs(d1) < limit) return false;
  }
  return min_distance <= 2 * static_cast<std::uint64_t>(diff.max_length());
}

DistinctCount count_distinct(std::span<const PrefixSpec> prefixes, const FieldParams& params) {
  DistinctCount result;
  for (const auto& p : prefixes) result.total += p.length;
  if (result.total > params.n()) {
    throw InvalidArgument("total prefix length exceeds N");
  }
  std::unordered_set<SymbolId> seen;
  seen.reserve(result.total);
  for (const auto& p : prefixes) {
    for (const SymbolId id : prefix(p, params)) seen.insert(id);
  }
  result.distinct = seen.size();
  return result;
}

std::uint64_t pair_overlap_lower_bound(std::uint64_t m, std::uint64_t d) {
  if (d < 2) {
    throw InvalidArgument("distance must be >= 2");
  }
  if (m < 2) return m;
  return m - (m - 2) / d - 1;
}

double multi_overlap_lower_bound(std::uint64_t m, std::uint64_t s, std::uint64_t d) {
  if (s < 1 || m < s) {
    throw InvalidArgument("multi_overlap_lower_bound needs s >= 1 and m >= s");
  }
  if (d < 2) {
    throw InvalidArgument("distance must be >= 2");
  }
  const double md = static_cast<double>(m);
  const double sd = static_cast<double>(s);
  return md - (sd - 1.0) * ((md - sd) / static_cast<double>(d) + sd / 2.0);
}

double expected_distinct_lower_bound(std::uint64_t total, const FieldParams& params) {
  if (total < 1) {
    throw InvalidArgument("expected_distinct_lower_bound needs M >= 1");
  }
  const double mm1 = static_cast<double>(total - 1);
  return static_cast<double>(total) - mm1 * mm1 / (2.0 * params.n());
}

double theorem_failure_bound(double delta, const FieldParams& params, std::optional<std::uint64_t> total) {
  if (!(delta > 0.0 && delta < 1.0)) {
    throw InvalidArgument("delta must lie in (0, 1)");
  }
  if (total && static_cast<double>(*total) * static_cast<double>(*total) > 2.0 * params.n()) {
    throw InvalidArgument("M=" + std::to_string(*total) + " violates M^2 <= 2N");
  }
  return std::min(1.0, 1.0 / (delta * delta * params.n()));
}

}  // namespace sopi
