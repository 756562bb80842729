#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>

#include "chainfund/errors.hpp"

namespace chainfund {

// Stablecoin quantity in integer minor units, 6 implied decimals
// (1.000000 coin == 1,000,000 minor units). All arithmetic is exact and
// checked: anything that would overflow or go negative is rejected.
struct Amount {
  uint64_t minor = 0;

  static constexpr uint64_t kScale = 1'000'000;

  constexpr auto operator<=>(const Amount&) const = default;

  constexpr bool is_zero() const { return minor == 0; }
};

// Whole coins, e.g. coins(5) == 5.000000.
constexpr Amount coins(uint64_t whole) { return Amount{whole * Amount::kScale}; }

std::optional<Amount> checked_add(Amount a, Amount b);
std::optional<Amount> checked_sub(Amount a, Amount b);

// floor(gross * bps / 10,000). Requires bps <= 10,000.
Amount fee_floor(Amount gross, uint32_t bps);

constexpr uint32_t kBpsDenominator = 10'000;
constexpr bool valid_bps(uint32_t bps) { return bps <= kBpsDenominator; }

// Fixed "123.456789" form; always six fractional digits.
std::string to_string(Amount a);

// Exact decimal parse, at most six fractional digits, no sign, no exponent.
Result<Amount> parse_amount(const std::string& text);

struct FiatRate {
  std::string currency_code;             // 3-letter code, e.g. "TRY"
  uint64_t minor_units_fiat_per_coin = 0;  // fiat minor units per 1.000000 coin
};

// floor(amount * rate / 1,000,000), fiat minor units. Pure; fails only on
// 64-bit overflow of the result.
Result<uint64_t> convert_to_fiat(Amount amount, const FiatRate& rate);

}  // namespace chainfund
