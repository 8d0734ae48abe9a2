#pragma once

#include "sopi/modarith.hpp"
#include "sopi/sopi.hpp"

#include <cstdint>
#include <optional>
#include <span>

namespace sopi {

/// Difference set D = {-M+1, ..., -1} U {1, ..., M-1} for prefixes of total length <= M.
class DiffSet {
 public:
  explicit DiffSet(std::uint32_t max_length);

  std::uint32_t max_length() const noexcept { return m_; }
  bool contains(std::int64_t v) const noexcept { return v != 0 && v > -static_cast<std::int64_t>(m_) && v < m_; }

  /// M^2 < N/2, the precondition of the distance lemma and the set design.
  bool fits_design(const FieldParams& params) const noexcept;
  /// M^2 <= 2N, the precondition of the random-set failure bound.
  bool fits_theorem(const FieldParams& params) const noexcept;

 private:
  std::uint32_t m_;
};

/// Minimal matching offset pair between two strides, or "unmatched" (distance 2M).
struct DistanceResult {
  bool matched = false;
  std::int64_t d0 = 0;
  std::int64_t d1 = 0;
  std::uint64_t distance = 0;

  friend bool operator==(const DistanceResult&, const DistanceResult&) = default;
};

/// d0*B0 == d1*B1 (mod N), signed offsets taken as residues.
bool matches(std::int64_t d0, std::int64_t d1, std::uint32_t b0, std::uint32_t b1, const FieldParams& params);

/// O(M) search over d0 in 1..M-1 for the match minimizing |d0|+|d1|, d1 in D.
/// Ties go to the smaller d0. Throws InvalidArgument unless M^2 < N/2.
DistanceResult distance(std::uint32_t b0, std::uint32_t b1, const DiffSet& diff, const FieldParams& params);

/// Exhaustive O(M^2) scan of D x D with d0 > 0. Test oracle for distance().
DistanceResult distance_bruteforce(std::uint32_t b0, std::uint32_t b1, const DiffSet& diff, const FieldParams& params);

/// True iff distance(b0, b1) >= min_distance, but only scans d0 < min_distance.
bool distance_at_least(std::uint32_t b0, std::uint32_t b1, std::uint64_t min_distance, const DiffSet& diff,
                       const FieldParams& params);

/// Same test given ratio = B0 * B1^{-1} mod N, for callers that reuse an inverse.
bool ratio_distance_at_least(std::uint32_t ratio, std::uint64_t min_distance, const DiffSet& diff,
                             const FieldParams& params);

struct DistinctCount {
  std::uint64_t total = 0;
  std::uint64_t distinct = 0;
  std::uint64_t duplicates() const noexcept { return total - distinct; }
};

/// Size of the union of the symbol IDs of all prefixes.
DistinctCount count_distinct(std::span<const PrefixSpec> prefixes, const FieldParams& params);

/// Worst-case distinct IDs for two prefixes of total length m whose strides have distance d:
/// m - floor((m-2)/d) - 1, or m when m < 2.
std::uint64_t pair_overlap_lower_bound(std::uint64_t m, std::uint64_t d);

/// Worst-case distinct IDs for s prefixes of total length m, pairwise distance >= d:
/// m - (s-1)*((m-s)/d + s/2).
double multi_overlap_lower_bound(std::uint64_t m, std::uint64_t s, std::uint64_t d);

/// Lower bound on the expected distinct IDs among M symbols from random SOPIs: M - (M-1)^2/(2N).
double expected_distinct_lower_bound(std::uint64_t total, const FieldParams& params);

/// Upper bound 1/(delta^2 N) on the probability that fewer than (1-delta)M of M received
/// symbols are distinct, clamped to 1. If `total` is given, checks M^2 <= 2N.
double theorem_failure_bound(double delta, const FieldParams& params, std::optional<std::uint64_t> total = std::nullopt);

}  // namespace sopi
