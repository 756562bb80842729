#include "chainfund/ledger.hpp"

namespace chainfund {

namespace {
using uint128 = unsigned __int128;
}

Result<void> Ledger::create_account(const AccountId& id, EventLog& log, Timestamp now) {
  if (id.empty()) {
    return make_error(Errc::invalid_id, "account id must be non-empty");
  }
  if (balances_.count(id)) {
    return make_error(Errc::duplicate_account, "account already exists: " + id);
  }
  balances_.emplace(id, Amount{});
  log.append("CREATE", {{"account", id}}, now);
  return {};
}

Result<Amount> Ledger::balance(const AccountId& id) const {
  const auto it = balances_.find(id);
  if (it == balances_.end()) {
    return make_error(Errc::unknown_account, "unknown account: " + id);
  }
  return it->second;
}

Result<Amount> Ledger::mint(const AccountId& to, Amount amount, EventLog& log,
                            Timestamp now) {
  const auto it = balances_.find(to);
  if (it == balances_.end()) {
    return make_error(Errc::unknown_account, "unknown account: " + to);
  }
  if (amount.is_zero()) {
    return make_error(Errc::zero_amount, "mint amount must be positive");
  }
  const auto new_balance = checked_add(it->second, amount);
  const auto new_total = checked_add(minted_total_, amount);
  if (!new_balance || !new_total) {
    return make_error(Errc::overflow, "mint would overflow");
  }
  it->second = *new_balance;
  minted_total_ = *new_total;
  log.append("MINT", {{"to", to}, {"amount", to_string(amount)}}, now);
  return it->second;
}

Result<Ledger::TransferOutcome> Ledger::transfer(const AccountId& from,
                                                 const AccountId& to, Amount amount,
                                                 uint32_t fee_bps,
                                                 const AccountId& fee_sink,
                                                 EventLog& log, Timestamp now) {
  if (from == to) {
    return make_error(Errc::self_transfer, "cannot transfer to self");
  }
  if (!valid_bps(fee_bps)) {
    return make_error(Errc::invalid_fee, "fee_bps out of range");
  }
  if (!balances_.count(to)) {
    return make_error(Errc::unknown_account, "unknown account: " + to);
  }
  // validate fully before creating the fee sink: a rejected transfer must
  // leave no trace
  const auto from_it = balances_.find(from);
  if (from_it == balances_.end()) {
    return make_error(Errc::unknown_account, "unknown account: " + from);
  }
  if (from_it->second < amount) {
    return make_error(Errc::insufficient_funds,
                      "balance " + to_string(from_it->second) + " < " + to_string(amount));
  }
  ensure_internal_account(fee_sink);
  auto outcome = move_with_fee(from, to, amount, fee_bps, fee_sink);
  if (!outcome.ok()) return outcome.error();
  log.append("TRANSFER",
             {{"from", from},
              {"to", to},
              {"amount", to_string(amount)},
              {"fee_bps", std::to_string(fee_bps)},
              {"fee", to_string(outcome.value().fee)},
              {"net", to_string(outcome.value().net)},
              {"fee_sink", fee_sink}},
             now);
  return outcome;
}

bool Ledger::conservation_holds() const {
  uint128 sum = 0;
  for (const auto& [id, balance] : balances_) {
    sum += balance.minor;
  }
  return sum == uint128(minted_total_.minor);
}

void Ledger::ensure_internal_account(const AccountId& id) {
  balances_.try_emplace(id, Amount{});
}

Result<void> Ledger::move(const AccountId& from, const AccountId& to, Amount amount) {
  const auto from_it = balances_.find(from);
  if (from_it == balances_.end()) {
    return make_error(Errc::unknown_account, "unknown account: " + from);
  }
  const auto to_it = balances_.find(to);
  if (to_it == balances_.end()) {
    return make_error(Errc::unknown_account, "unknown account: " + to);
  }
  if (from_it->second < amount) {
    return make_error(Errc::insufficient_funds,
                      "balance " + to_string(from_it->second) + " < " + to_string(amount));
  }
  if (from == to) return {};
  from_it->second = Amount{from_it->second.minor - amount.minor};
  // cannot overflow: total supply fits in 64 bits
  to_it->second = Amount{to_it->second.minor + amount.minor};
  return {};
}

Result<Ledger::TransferOutcome> Ledger::move_with_fee(const AccountId& from,
                                                      const AccountId& to, Amount gross,
                                                      uint32_t fee_bps,
                                                      const AccountId& fee_sink) {
  const auto from_it = balances_.find(from);
  if (from_it == balances_.end()) {
    return make_error(Errc::unknown_account, "unknown account: " + from);
  }
  if (from_it->second < gross) {
    return make_error(Errc::insufficient_funds,
                      "balance " + to_string(from_it->second) + " < " + to_string(gross));
  }
  const Amount fee = fee_floor(gross, fee_bps);
  const Amount net{gross.minor - fee.minor};
  if (auto moved = move(from, to, net); !moved.ok()) return moved.error();
  if (auto moved = move(from, fee_sink, fee); !moved.ok()) return moved.error();
  return TransferOutcome{net, fee};
}

}  // namespace chainfund
