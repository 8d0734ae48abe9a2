#pragma once

#include "sopi/modarith.hpp"
#include "sopi/rng.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace sopi {

/// Identifier of one encoded symbol of a source block, in [0, N).
struct SymbolId {
  std::uint32_t value = 0;

  friend auto operator<=>(const SymbolId&, const SymbolId&) = default;
};

/// Stream object permutation identifier (A, B).
///
/// Position i of the stream carries symbol (A + i*B) mod N. A is an offset in
/// [0, N), B a stride in [1, N). Ordering is lexicographic on (B, A) so that
/// sets of SOPIs serialize in a canonical order.
struct Sopi {
  std::uint32_t a = 0;
  std::uint32_t b = 1;

  /// Validates ranges against N and returns the SOPI.
  static Sopi make(std::uint32_t a, std::uint32_t b, const FieldParams& params);

  bool valid_for(const FieldParams& params) const noexcept { return a < params.n() && b >= 1 && b < params.n(); }

  friend bool operator==(const Sopi&, const Sopi&) = default;
  friend std::strong_ordering operator<=>(const Sopi& lhs, const Sopi& rhs) noexcept {
    if (auto c = lhs.b <=> rhs.b; c != 0) return c;
    return lhs.a <=> rhs.a;
  }
};

/// A request for the first `length` symbols of the stream defined by `sopi`.
struct PrefixSpec {
  Sopi sopi;
  std::uint64_t length = 0;
};

SymbolId symbol_id_at(const Sopi& sopi, std::uint64_t position, const FieldParams& params);

/// Symbol IDs at positions 0..length-1. All entries are distinct.
std::vector<SymbolId> prefix(const PrefixSpec& spec, const FieldParams& params);

/// A uniform in [0, N-1], B uniform in [1, N-1].
Sopi random_sopi(Rng& rng, const FieldParams& params);

/// Compact "A:B" text form.
std::string to_text(const Sopi& sopi);
Sopi parse_sopi(std::string_view text, const FieldParams& params);

}  // namespace sopi

template <>
struct std::hash<sopi::SymbolId> {
  std::size_t operator()(const sopi::SymbolId& id) const noexcept { return std::hash<std::uint32_t>{}(id.value); }
};

template <>
struct std::hash<sopi::Sopi> {
  std::size_t operator()(const sopi::Sopi& s) const noexcept {
    return std::hash<std::uint64_t>{}((static_cast<std::uint64_t>(s.b) << 32) | s.a);
  }
};
