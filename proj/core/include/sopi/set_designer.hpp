#pragma once

#include "sopi/modarith.hpp"
#include "sopi/overlap.hpp"
#include "sopi/sopi.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace sopi {

/// Parameters of a designed SOPI set: every pair of distinct strides has
/// distance >= min_distance, and same-stride SOPIs have disjoint prefixes of
/// length max_length. Requires M^2 < N/2 and 2 <= d <= 2M.
class DesignParams {
 public:
  static DesignParams make(const FieldParams& field, std::uint32_t min_distance, std::uint32_t max_length);

  const FieldParams& field() const noexcept { return field_; }
  std::uint32_t min_distance() const noexcept { return d_; }
  std::uint32_t max_length() const noexcept { return m_; }
  DiffSet diff_set() const { return DiffSet(m_); }

  friend bool operator==(const DesignParams&, const DesignParams&) = default;

 private:
  DesignParams(const FieldParams& field, std::uint32_t d, std::uint32_t m) : field_(field), d_(d), m_(m) {}
  FieldParams field_;
  std::uint32_t d_;
  std::uint32_t m_;
};

enum class BuildStrategy {
  // Accept ascending candidates whose distance to every accepted stride is >= d.
  incremental,
  // Delete i*B*j^{-1} from a bitmap pool of all strides; N <= 2^24 only.
  sieve,
};

std::string_view to_string(BuildStrategy strategy) noexcept;
BuildStrategy parse_strategy(std::string_view text);

inline constexpr std::uint32_t kMaxSieveModulus = 1u << 24;

struct SopiSet {
  DesignParams design;
  BuildStrategy strategy = BuildStrategy::incremental;
  std::uint64_t seed = 0;
  std::vector<std::uint32_t> b_values;
  std::vector<std::vector<std::uint32_t>> a_values_per_b;  // parallel to b_values

  /// All (A, B) pairs sorted by (B, A). Palette index k refers to entries()[k].
  std::vector<Sopi> entries() const;
  std::size_t size() const noexcept;
};

/// Strides with pairwise distance >= d, at most max_count of them.
std::vector<std::uint32_t> build_b_set(const DesignParams& design, std::size_t max_count,
                                       BuildStrategy strategy = BuildStrategy::incremental);

/// Offsets for one stride whose length-M prefixes are pairwise disjoint:
/// first, first + M*B, first + 2*M*B, ... with min(max_count, floor(N/M)) elements.
/// Needs only 1 <= M <= N; the M^2 < N/2 design condition does not apply.
std::vector<std::uint32_t> build_a_set(std::uint32_t b, const FieldParams& field, std::uint32_t max_length,
                                       std::size_t max_count, std::uint32_t first);
std::vector<std::uint32_t> build_a_set(std::uint32_t b, const DesignParams& design, std::size_t max_count,
                                       std::uint32_t first);
/// As above with the first offset drawn uniformly from `rng`.
std::vector<std::uint32_t> build_a_set(std::uint32_t b, const DesignParams& design, std::size_t max_count, Rng& rng);

/// Combines build_b_set and build_a_set. A-sets draw their first offset from
/// Rng(seed) in the order the strides were accepted.
SopiSet build_sopi_set(const DesignParams& design, std::size_t b_cap, std::size_t a_cap, std::uint64_t seed,
                       BuildStrategy strategy = BuildStrategy::incremental);

struct CapacityBounds {
  double b_lower = 0;      // (N-1)/d^2
  double a_lower = 0;      // N/M - 1
  double total_lower = 0;  // N^2/(d^2 M)
};

CapacityBounds capacity_bounds(const DesignParams& design);

struct AuditReport {
  std::uint64_t stride_pairs_checked = 0;
  std::uint64_t offset_groups_checked = 0;
  std::vector<std::string> violations;
  bool ok() const noexcept { return violations.empty(); }
};

/// Re-verifies the pairwise distance and same-stride disjointness invariants.
AuditReport audit_sopi_set(const SopiSet& set);

}  // namespace sopi
