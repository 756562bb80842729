#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>

namespace chainfund {

enum class Errc {
  // ledger
  duplicate_account,
  invalid_id,
  unknown_account,
  zero_amount,
  insufficient_funds,
  self_transfer,
  invalid_fee,
  overflow,
  // compliance
  illegal_transition,
  invalid_window,
  // campaign
  gate_denied,
  bad_milestone_schedule,
  past_deadline,
  duplicate_campaign,
  unknown_campaign,
  campaign_not_active,
  deadline_passed,
  too_early,
  already_finalized,
  funding_still_active,
  campaign_not_failed,
  nothing_to_refund,
  not_validator,
  unknown_milestone,
  out_of_order,
  already_disbursed,
  not_approved,
  campaign_not_funded,
  // tokenization
  duplicate_token_class,
  no_token_class,
  no_allocation,
  // market
  insufficient_tokens,
  unknown_order,
  not_owner,
  already_closed,
  // scenario / generic
  malformed_scenario,
  invalid_argument,
};

// Stable machine-readable name, e.g. "InsufficientFunds". Used in logs and
// rejection records, so renames are format changes.
const char* errc_name(Errc code);

struct Error {
  Errc code;
  std::string message;
};

inline Error make_error(Errc code, std::string message) {
  return Error{code, std::move(message)};
}

// Minimal expected-like result. Operations on the engine either produce a
// value or a typed error; exceptions are reserved for programmer mistakes.
template <typename T>
class [[nodiscard]] Result {
 public:
  Result(T value) : data_(std::move(value)) {}
  Result(Error error) : data_(std::move(error)) {}

  bool ok() const { return std::holds_alternative<T>(data_); }
  explicit operator bool() const { return ok(); }

  const T& value() const& { return std::get<T>(data_); }
  T& value() & { return std::get<T>(data_); }
  T&& value() && { return std::get<T>(std::move(data_)); }

  const Error& error() const { return std::get<Error>(data_); }

 private:
  std::variant<T, Error> data_;
};

template <>
class [[nodiscard]] Result<void> {
 public:
  Result() = default;
  Result(Error error) : error_(std::move(error)) {}

  bool ok() const { return !error_.has_value(); }
  explicit operator bool() const { return ok(); }

  const Error& error() const { return *error_; }

 private:
  std::optional<Error> error_;
};

}  // namespace chainfund
