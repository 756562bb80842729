#include "chainfund/amount.hpp"

#include <cctype>
#include <limits>

namespace chainfund {

using uint128 = unsigned __int128;

std::optional<Amount> checked_add(Amount a, Amount b) {
  if (a.minor > std::numeric_limits<uint64_t>::max() - b.minor) return std::nullopt;
  return Amount{a.minor + b.minor};
}

std::optional<Amount> checked_sub(Amount a, Amount b) {
  if (a.minor < b.minor) return std::nullopt;
  return Amount{a.minor - b.minor};
}

Amount fee_floor(Amount gross, uint32_t bps) {
  const uint128 product = uint128(gross.minor) * bps;
  return Amount{uint64_t(product / kBpsDenominator)};
}

std::string to_string(Amount a) {
  const uint64_t whole = a.minor / Amount::kScale;
  const uint64_t frac = a.minor % Amount::kScale;
  std::string out = std::to_string(whole);
  out.push_back('.');
  std::string f = std::to_string(frac);
  out.append(6 - f.size(), '0');
  out += f;
  return out;
}

Result<Amount> parse_amount(const std::string& text) {
  const auto bad = [&](const char* why) {
    return make_error(Errc::invalid_argument,
                      std::string("bad amount \"") + text + "\": " + why);
  };

  if (text.empty()) return bad("empty");

  size_t i = 0;
  uint64_t whole = 0;
  bool any_digit = false;
  constexpr uint64_t kMaxWhole = std::numeric_limits<uint64_t>::max() / Amount::kScale;
  for (; i < text.size() && text[i] != '.'; ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) return bad("not a digit");
    const uint64_t digit = uint64_t(text[i] - '0');
    if (whole > (std::numeric_limits<uint64_t>::max() - digit) / 10) return bad("overflow");
    whole = whole * 10 + digit;
    any_digit = true;
  }
  if (!any_digit) return bad("no integer part");

  uint64_t frac = 0;
  if (i < text.size()) {
    ++i;  // skip '.'
    size_t frac_digits = 0;
    for (; i < text.size(); ++i, ++frac_digits) {
      if (!std::isdigit(static_cast<unsigned char>(text[i]))) return bad("not a digit");
      if (frac_digits >= 6) return bad("more than 6 decimal places");
      frac = frac * 10 + uint64_t(text[i] - '0');
    }
    if (frac_digits == 0) return bad("trailing decimal point");
    for (; frac_digits < 6; ++frac_digits) frac *= 10;
  }

  if (whole > kMaxWhole) return bad("overflow");
  const uint64_t scaled = whole * Amount::kScale;
  if (scaled > std::numeric_limits<uint64_t>::max() - frac) return bad("overflow");
  return Amount{scaled + frac};
}

Result<uint64_t> convert_to_fiat(Amount amount, const FiatRate& rate) {
  if (rate.minor_units_fiat_per_coin == 0) {
    return make_error(Errc::invalid_argument, "fiat rate must be positive");
  }
  const uint128 product = uint128(amount.minor) * rate.minor_units_fiat_per_coin;
  const uint128 fiat = product / Amount::kScale;
  if (fiat > std::numeric_limits<uint64_t>::max()) {
    return make_error(Errc::overflow, "fiat value exceeds 64 bits");
  }
  return uint64_t(fiat);
}

}  // namespace chainfund
