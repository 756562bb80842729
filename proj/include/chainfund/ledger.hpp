#pragma once

#include <map>
#include <string>

#include "chainfund/amount.hpp"
#include "chainfund/errors.hpp"
#include "chainfund/event_log.hpp"

namespace chainfund {

// Opaque, non-empty, unique within a run. std::string's byte-wise ordering is
// the deterministic tie-break order used everywhere.
using AccountId = std::string;

// Accounts and stablecoin balances. Public operations append their own event;
// the move/credit primitives are for sibling modules whose higher-level event
// (CONTRIBUTE, REFUND, TRADE, ...) already records the balance change.
class Ledger {
 public:
  Result<void> create_account(const AccountId& id, EventLog& log, Timestamp now);

  bool has_account(const AccountId& id) const { return balances_.count(id) != 0; }
  Result<Amount> balance(const AccountId& id) const;

  Result<Amount> mint(const AccountId& to, Amount amount, EventLog& log, Timestamp now);

  struct TransferOutcome {
    Amount net;  // credited to `to`
    Amount fee;  // credited to `fee_sink`
  };
  Result<TransferOutcome> transfer(const AccountId& from, const AccountId& to,
                                   Amount amount, uint32_t fee_bps,
                                   const AccountId& fee_sink, EventLog& log,
                                   Timestamp now);

  Amount minted_total() const { return minted_total_; }
  const std::map<AccountId, Amount>& accounts() const { return balances_; }

  // Conservation: sum of all balances equals total minted supply.
  bool conservation_holds() const;

  // -- primitives for sibling modules (no events) --

  // Registers an account without a CREATE event (escrow and fee-sink
  // accounts, whose existence is recorded by the event that caused them).
  void ensure_internal_account(const AccountId& id);

  // Balance shuffle; from == to is validated and then a no-op.
  Result<void> move(const AccountId& from, const AccountId& to, Amount amount);

  // Debit `from` by gross, credit `to` with gross - fee and `fee_sink` with
  // fee. Same arithmetic as transfer(), no event.
  Result<TransferOutcome> move_with_fee(const AccountId& from, const AccountId& to,
                                        Amount gross, uint32_t fee_bps,
                                        const AccountId& fee_sink);

 private:
  std::map<AccountId, Amount> balances_;
  Amount minted_total_{};
};

}  // namespace chainfund
