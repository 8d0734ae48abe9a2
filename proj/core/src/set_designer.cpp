#include "sopi/set_designer.hpp"

#include "sopi/errors.hpp"

#include <algorithm>
#include <unordered_set>

namespace sopi {

DesignParams DesignParams::make(const FieldParams& field, std::uint32_t min_distance, std::uint32_t max_length) {
  const DiffSet diff(max_length);
  if (!diff.fits_design(field)) {
    throw InvalidArgument("design needs M^2 < N/2 (M=" + std::to_string(max_length) +
                          ", N=" + std::to_string(field.n()) + ")");
  }
  if (min_distance < 2 || min_distance > 2ull * max_length) {
    throw InvalidArgument("design needs 2 <= d <= 2M (d=" + std::to_string(min_distance) + ")");
  }
  return DesignParams(field, min_distance, max_length);
}

std::string_view to_string(BuildStrategy strategy) noexcept {
  return strategy == BuildStrategy::sieve ? "sieve" : "incremental";
}

BuildStrategy parse_strategy(std::string_view text) {
  if (text == "incremental") return BuildStrategy::incremental;
  if (text == "sieve") return BuildStrategy::sieve;
  throw InvalidArgument("unknown strategy '" + std::string(text) + "' (expected incremental|sieve)");
}

std::vector<Sopi> SopiSet::entries() const {
  std::vector<Sopi> out;
  out.reserve(size());
  for (std::size_t k = 0; k < b_values.size(); ++k) {
    for (const std::uint32_t a : a_values_per_b[k]) out.push_back(Sopi{a, b_values[k]});
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t SopiSet::size() const noexcept {
  std::size_t n = 0;
  for (const auto& as : a_values_per_b) n += as.size();
  return n;
}

namespace {

std::vector<std::uint32_t> incremental_b_set(const DesignParams& design, std::size_t max_count) {
  const FieldParams& field = design.field();
  const DiffSet diff = design.diff_set();
  std::vector<std::uint32_t> accepted;
  for (std::uint32_t candidate = 1; candidate < field.n() && accepted.size() < max_count; ++candidate) {
    const std::uint32_t inverse = mod_inv(candidate, field);
    const bool far = std::all_of(accepted.begin(), accepted.end(), [&](std::uint32_t b) {
      return ratio_distance_at_least(mod_mul(b, inverse, field), design.min_distance(), diff, field);
    });
    if (far) accepted.push_back(candidate);
  }
  return accepted;
}

std::vector<std::uint32_t> sieve_b_set(const DesignParams& design, std::size_t max_count) {
  const FieldParams& field = design.field();
  if (field.n() > kMaxSieveModulus) {
    throw InvalidArgument("sieve strategy supports N <= 2^24; use incremental");
  }
  const std::int64_t d = design.min_distance();
  const std::int64_t m = design.max_length();
  // |i| + |j| < d with i, j in D; by the (i, j) -> (-i, -j) symmetry only i > 0 is needed.
  const std::int64_t reach = std::min<std::int64_t>(m - 1, d - 2);
  std::vector<std::uint32_t> inverse(static_cast<std::size_t>(std::max<std::int64_t>(reach, 0)) + 1, 0);
  for (std::int64_t j = 1; j <= reach; ++j) inverse[j] = mod_inv(static_cast<std::uint32_t>(j), field);

  std::vector<bool> pool(field.n(), true);
  pool[0] = false;
  std::vector<std::uint32_t> accepted;
  std::uint32_t cursor = 1;
  while (accepted.size() < max_count) {
    while (cursor < field.n() && !pool[cursor]) ++cursor;
    if (cursor >= field.n()) break;
    const std::uint32_t b = cursor;
    pool[b] = false;
    accepted.push_back(b);
    for (std::int64_t i = 1; i <= reach; ++i) {
      const std::uint32_t ib = mod_mul(static_cast<std::uint32_t>(i), b, field);
      for (std::int64_t j = 1; i + j < d && j <= reach; ++j) {
        const std::uint32_t deleted = mod_mul(ib, inverse[j], field);
        pool[deleted] = false;
        pool[field.n() - deleted] = false;  // j -> -j
      }
    }
  }
  return accepted;
}

}  // namespace

std::vector<std::uint32_t> build_b_set(const DesignParams& design, std::size_t max_count, BuildStrategy strategy) {
  if (max_count == 0) {
    throw InvalidArgument("max_count must be positive");
  }
  return strategy == BuildStrategy::sieve ? sieve_b_set(design, max_count) : incremental_b_set(design, max_count);
}

std::vector<std::uint32_t> build_a_set(std::uint32_t b, const FieldParams& field, std::uint32_t max_length,
                                       std::size_t max_count, std::uint32_t first) {
  Sopi::make(first, b, field);
  if (max_length == 0 || max_length > field.n()) {
    throw InvalidArgument("prefix length M must lie in [1, N]");
  }
  const std::size_t count = std::min<std::size_t>(max_count, field.n() / max_length);
  const std::uint32_t step = mod_mul(max_length, b, field);
  std::vector<std::uint32_t> out;
  out.reserve(count);
  std::uint32_t a = first;
  for (std::size_t k = 0; k < count; ++k) {
    out.push_back(a);
    a = mod_mul_add(a, 1, step, field);
  }
  return out;
}

std::vector<std::uint32_t> build_a_set(std::uint32_t b, const DesignParams& design, std::size_t max_count,
                                       std::uint32_t first) {
  return build_a_set(b, design.field(), design.max_length(), max_count, first);
}

std::vector<std::uint32_t> build_a_set(std::uint32_t b, const DesignParams& design, std::size_t max_count,
                                       Rng& rng) {
  const auto first = static_cast<std::uint32_t>(rng.below(design.field().n()));
  return build_a_set(b, design, max_count, first);
}

SopiSet build_sopi_set(const DesignParams& design, std::size_t b_cap, std::size_t a_cap, std::uint64_t seed,
                       BuildStrategy strategy) {
  if (a_cap == 0) {
    throw InvalidArgument("a_cap must be positive");
  }
  SopiSet set{design, strategy, seed, build_b_set(design, b_cap, strategy), {}};
  Rng rng(seed);
  set.a_values_per_b.reserve(set.b_values.size());
  for (const std::uint32_t b : set.b_values) {
    set.a_values_per_b.push_back(build_a_set(b, design, a_cap, rng));
  }
  return set;
}

CapacityBounds capacity_bounds(const DesignParams& design) {
  const double n = design.field().n();
  const double d = design.min_distance();
  const double m = design.max_length();
  return CapacityBounds{(n - 1.0) / (d * d), n / m - 1.0, n * n / (d * d * m)};
}

AuditReport audit_sopi_set(const SopiSet& set) {
  const FieldParams& field = set.design.field();
  const DiffSet diff = set.design.diff_set();
  AuditReport report;
  if (set.a_values_per_b.size() != set.b_values.size()) {
    report.violations.push_back("stride and offset lists have different lengths");
    return report;
  }
  for (std::size_t x = 0; x < set.b_values.size(); ++x) {
    for (std::size_t y = x + 1; y < set.b_values.size(); ++y) {
      ++report.stride_pairs_checked;
      const std::uint32_t b0 = set.b_values[x];
      const std::uint32_t b1 = set.b_values[y];
      if (b0 == b1) {
        report.violations.push_back("stride " + std::to_string(b0) + " listed twice");
        continue;
      }
      const DistanceResult r = distance(b0, b1, diff, field);
      if (r.distance < set.design.min_distance()) {
        report.violations.push_back("strides " + std::to_string(b0) + " and " + std::to_string(b1) +
                                    " have distance " + std::to_string(r.distance));
      }
    }
  }
  for (std::size_t x = 0; x < set.b_values.size(); ++x) {
    ++report.offset_groups_checked;
    const auto& offsets = set.a_values_per_b[x];
    if (static_cast<std::uint64_t>(offsets.size()) * set.design.max_length() > field.n()) {
      report.violations.push_back("stride " + std::to_string(set.b_values[x]) + " has too many offsets");
      continue;
    }
    std::unordered_set<SymbolId> seen;
    seen.reserve(offsets.size() * set.design.max_length());
    for (const std::uint32_t a : offsets) {
      for (const SymbolId id : prefix({Sopi{a, set.b_values[x]}, set.design.max_length()}, field)) {
        if (!seen.insert(id).second) {
          report.violations.push_back("offsets of stride " + std::to_string(set.b_values[x]) +
                                      " overlap at symbol " + std::to_string(id.value));
          break;
        }
      }
    }
  }
  return report;
}

}  // namespace sopi
