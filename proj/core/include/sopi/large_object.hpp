#pragma once

#include "sopi/modarith.hpp"
#include "sopi/rng.hpp"
#include "sopi/sopi.hpp"

#include <cstdint>

namespace sopi {

/// Largest source block RaptorQ supports, in symbols.
inline constexpr std::uint64_t kRaptorQMaxSourceSymbols = 56403;

/// Split of Kt symbols into large_count blocks of large_size and small_count
/// blocks of small_size, large_size - small_size in {0, 1}.
struct Partition {
  std::uint64_t large_size = 0;   // KL
  std::uint64_t small_size = 0;   // KS
  std::uint64_t large_count = 0;  // ZL
  std::uint64_t small_count = 0;  // ZS

  friend bool operator==(const Partition&, const Partition&) = default;
};

Partition partition(std::uint64_t total_symbols, std::uint64_t block_count);

struct BlockStructure {
  std::uint64_t object_size = 0;      // F, bytes
  std::uint64_t symbol_size = 0;      // T, bytes
  std::uint64_t max_block_bytes = 0;  // WS
  std::uint64_t total_symbols = 0;    // Kt = ceil(F/T)
  std::uint64_t max_block_symbols = 0;  // Kmax = floor(WS/T)
  std::uint64_t block_count = 0;      // Z = ceil(Kt/Kmax)
  Partition split;

  /// Source symbols in block `index`: the first ZL blocks hold KL, the rest KS.
  std::uint64_t symbols_in_block(std::uint64_t index) const;

  /// Byte range [offset, offset + length) of block `index` within the object.
  /// The last block may be shorter than its symbol count times T; the missing
  /// tail is zero padding.
  struct ByteRange {
    std::uint64_t offset = 0;
    std::uint64_t length = 0;
    std::uint64_t padding = 0;
  };
  ByteRange block_bytes(std::uint64_t index) const;

  friend bool operator==(const BlockStructure&, const BlockStructure&) = default;
};

BlockStructure block_structure(std::uint64_t object_size, std::uint64_t symbol_size, std::uint64_t max_block_bytes);

/// SOPI for an object split into Z source blocks. (A, B) select symbol IDs as
/// for a single block; (C, D) select the cyclic shift of blocks within each
/// group of Z consecutive positions. C, D are reduced mod Z when evaluated.
struct LargeSopi {
  std::uint32_t a = 0;
  std::uint32_t b = 1;
  std::uint32_t c = 0;
  std::uint32_t d = 1;

  static LargeSopi make(std::uint32_t a, std::uint32_t b, std::uint32_t c, std::uint32_t d, const FieldParams& params);
  bool valid_for(const FieldParams& params) const noexcept {
    return a < params.n() && c < params.n() && b >= 1 && b < params.n() && d >= 1 && d < params.n();
  }
  Sopi symbol_part() const noexcept { return Sopi{a, b}; }

  friend bool operator==(const LargeSopi&, const LargeSopi&) = default;
};

struct BlockSymbolRef {
  std::uint64_t block_index = 0;
  SymbolId symbol_id;

  friend bool operator==(const BlockSymbolRef&, const BlockSymbolRef&) = default;
};

/// Position i maps to r = floor(i/Z), symbol (A + r*B) mod N of block (i + C + r*D) mod Z.
/// Valid positions are 0..Z*N-1.
BlockSymbolRef large_symbol_at(const LargeSopi& sopi, std::uint64_t position, std::uint64_t block_count,
                               const FieldParams& params);

LargeSopi random_large_sopi(Rng& rng, const FieldParams& params);

}  // namespace sopi
