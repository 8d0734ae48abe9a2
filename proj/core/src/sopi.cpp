#include "sopi/sopi.hpp"

#include "sopi/errors.hpp"

#include <charconv>

namespace sopi {

Sopi Sopi::make(std::uint32_t a, std::uint32_t b, const FieldParams& params) {
  const Sopi s{a, b};
  if (!s.valid_for(params)) {
    throw InvalidArgument("SOPI " + to_text(s) + " out of range for N=" + std::to_string(params.n()) +
                          " (need A in [0,N-1], B in [1,N-1])");
  }
  return s;
}

SymbolId symbol_id_at(const Sopi& sopi, std::uint64_t position, const FieldParams& params) {
  if (position >= params.n()) {
    throw InvalidArgument("position " + std::to_string(position) + " must be < N");
  }
  return SymbolId{mod_mul_add(sopi.a, static_cast<std::uint32_t>(position), sopi.b, params)};
}

std::vector<SymbolId> prefix(const PrefixSpec& spec, const FieldParams& params) {
  if (spec.length > params.n()) {
    throw InvalidArgument("prefix length " + std::to_string(spec.length) + " exceeds N");
  }
  std::vector<SymbolId> out;
  out.reserve(spec.length);
  // Walk by repeated addition of B; equivalent to symbol_id_at for each i.
  const std::uint32_t n = params.n();
  std::uint32_t current = spec.sopi.a;
  for (std::uint64_t i = 0; i < spec.length; ++i) {
    out.push_back(SymbolId{current});
    current = static_cast<std::uint32_t>((static_cast<std::uint64_t>(current) + spec.sopi.b) % n);
  }
  return out;
}

Sopi random_sopi(Rng& rng, const FieldParams& params) {
  const std::uint64_t n = params.n();
  const auto a = static_cast<std::uint32_t>(rng.below(n));
  const auto b = static_cast<std::uint32_t>(rng.between(1, n - 1));
  return Sopi{a, b};
}

std::string to_text(const Sopi& sopi) {
  return std::to_string(sopi.a) + ":" + std::to_string(sopi.b);
}

Sopi parse_sopi(std::string_view text, const FieldParams& params) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw InvalidArgument("expected SOPI in A:B form, got '" + std::string(text) + "'");
  }
  auto parse_part = [&](std::string_view part) {
    std::uint32_t v = 0;
    const auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (ec != std::errc{} || ptr != part.data() + part.size() || part.empty()) {
      throw InvalidArgument("malformed SOPI '" + std::string(text) + "'");
    }
    return v;
  };
  return Sopi::make(parse_part(text.substr(0, colon)), parse_part(text.substr(colon + 1)), params);
}

}  // namespace sopi
