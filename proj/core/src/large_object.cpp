#include "sopi/large_object.hpp"

#include "sopi/errors.hpp"

#include <algorithm>
#include <string>

namespace sopi {

Partition partition(std::uint64_t total_symbols, std::uint64_t block_count) {
  if (total_symbols == 0) {
    throw InvalidArgument("partition needs Kt >= 1");
  }
  if (block_count == 0 || block_count > total_symbols) {
    throw InvalidArgument("partition needs 1 <= Z <= Kt (Z=" + std::to_string(block_count) +
                          ", Kt=" + std::to_string(total_symbols) + ")");
  }
  Partition p;
  p.large_size = (total_symbols + block_count - 1) / block_count;
  p.small_size = total_symbols / block_count;
  p.large_count = total_symbols - p.small_size * block_count;
  p.small_count = block_count - p.large_count;
  return p;
}

BlockStructure block_structure(std::uint64_t object_size, std::uint64_t symbol_size, std::uint64_t max_block_bytes) {
  if (object_size == 0) throw InvalidArgument("object size F must be >= 1");
  if (symbol_size == 0) throw InvalidArgument("symbol size T must be >= 1");
  BlockStructure s;
  s.object_size = object_size;
  s.symbol_size = symbol_size;
  s.max_block_bytes = max_block_bytes;
  s.max_block_symbols = max_block_bytes / symbol_size;
  if (s.max_block_symbols == 0) {
    throw InvalidArgument("floor(WS/T) must be >= 1");
  }
  s.total_symbols = (object_size + symbol_size - 1) / symbol_size;
  s.block_count = (s.total_symbols + s.max_block_symbols - 1) / s.max_block_symbols;
  s.split = partition(s.total_symbols, s.block_count);
  return s;
}

std::uint64_t BlockStructure::symbols_in_block(std::uint64_t index) const {
  if (index >= block_count) {
    throw InvalidArgument("block index " + std::to_string(index) + " out of range");
  }
  return index < split.large_count ? split.large_size : split.small_size;
}

BlockStructure::ByteRange BlockStructure::block_bytes(std::uint64_t index) const {
  const std::uint64_t symbols = symbols_in_block(index);
  const std::uint64_t large_blocks = std::min(index, split.large_count);
  const std::uint64_t small_blocks = index - large_blocks;
  ByteRange r;
  r.offset = (large_blocks * split.large_size + small_blocks * split.small_size) * symbol_size;
  const std::uint64_t full = symbols * symbol_size;
  const std::uint64_t available = object_size > r.offset ? object_size - r.offset : 0;
  r.length = std::min(full, available);
  r.padding = full - r.length;
  return r;
}

LargeSopi LargeSopi::make(std::uint32_t a, std::uint32_t b, std::uint32_t c, std::uint32_t d,
                          const FieldParams& params) {
  const LargeSopi s{a, b, c, d};
  if (!s.valid_for(params)) {
    throw InvalidArgument("large SOPI out of range (need A, C in [0,N-1] and B, D in [1,N-1])");
  }
  return s;
}

BlockSymbolRef large_symbol_at(const LargeSopi& sopi, std::uint64_t position, std::uint64_t block_count,
                               const FieldParams& params) {
  if (block_count == 0) {
    throw InvalidArgument("block count Z must be >= 1");
  }
  if (block_count > params.n() - 1ull) {
    throw InvalidArgument("block count Z must be <= N-1");
  }
  const std::uint64_t round = position / block_count;
  if (round >= params.n()) {
    throw InvalidArgument("stream position " + std::to_string(position) + " exceeds Z*N-1");
  }
  const SymbolId id{mod_mul_add(sopi.a, static_cast<std::uint32_t>(round), sopi.b, params)};
  // (i + C + r*D) mod Z with every term pre-reduced mod Z to stay in 64 bits.
  const std::uint64_t z = block_count;
  const std::uint64_t block = (position % z + sopi.c % z + (round % z) * (sopi.d % z)) % z;
  return BlockSymbolRef{block, id};
}

LargeSopi random_large_sopi(Rng& rng, const FieldParams& params) {
  const std::uint64_t n = params.n();
  LargeSopi s;
  s.a = static_cast<std::uint32_t>(rng.below(n));
  s.b = static_cast<std::uint32_t>(rng.between(1, n - 1));
  s.c = static_cast<std::uint32_t>(rng.below(n));
  s.d = static_cast<std::uint32_t>(rng.between(1, n - 1));
  return s;
}

}  // namespace sopi
