#include "chainfund/engine.hpp"

namespace chainfund {

namespace {
using uint128 = unsigned __int128;
}

Engine::Engine(AccountId fee_sink) : fee_sink_(std::move(fee_sink)) {
  log_.append("GENESIS", {}, 0);
}

Result<void> Engine::advance_time(Timestamp t) {
  if (t < clock_) {
    return make_error(Errc::invalid_argument, "logical clock cannot go backwards");
  }
  clock_ = t;
  return {};
}

Result<void> Engine::create_account(const AccountId& id) {
  return ledger_.create_account(id, log_, clock_);
}

Result<Amount> Engine::mint(const AccountId& to, Amount amount) {
  return ledger_.mint(to, amount, log_, clock_);
}

Result<Ledger::TransferOutcome> Engine::transfer(const AccountId& from,
                                                 const AccountId& to, Amount amount,
                                                 uint32_t fee_bps,
                                                 const AccountId& fee_sink) {
  return ledger_.transfer(from, to, amount, fee_bps, fee_sink, log_, clock_);
}

Result<void> Engine::set_kyc_status(const AccountId& account, KycStatus status,
                                    const std::string& jurisdiction) {
  return compliance_.set_kyc_status(account, status, jurisdiction, ledger_, log_, clock_);
}

void Engine::set_jurisdiction_rule(JurisdictionRule rule) {
  compliance_.set_jurisdiction_rule(std::move(rule));
}

GateDecision Engine::check_gate(const AccountId& account, const GateAction& action) const {
  return compliance_.check_gate(account, action);
}

Result<ComplianceReport> Engine::generate_report(Timestamp from, Timestamp to) const {
  return compliance_.generate_report(from, to, log_, clock_);
}

Result<void> Engine::create_campaign(const CampaignConfig& config) {
  return campaigns_.create(config, ledger_, compliance_, log_, clock_);
}

Result<Amount> Engine::contribute(const std::string& campaign_id,
                                  const AccountId& contributor, Amount amount) {
  return campaigns_.contribute(campaign_id, contributor, amount, fee_sink_, ledger_,
                               compliance_, log_, clock_);
}

Result<CampaignState> Engine::finalize(const std::string& campaign_id) {
  auto outcome = campaigns_.finalize(campaign_id, log_, clock_);
  if (!outcome.ok()) return outcome;
  if (outcome.value() == CampaignState::funded && tokens_.has_class(campaign_id)) {
    const Campaign* campaign = campaigns_.find(campaign_id);
    auto allocated = tokens_.allocate(campaign_id, campaign->contributions, log_, clock_);
    if (!allocated.ok()) return allocated.error();
  }
  return outcome;
}

Result<Amount> Engine::refund(const std::string& campaign_id, const AccountId& contributor) {
  return campaigns_.refund(campaign_id, contributor, ledger_, log_, clock_);
}

Result<uint32_t> Engine::approve_milestone(const std::string& campaign_id,
                                           size_t milestone_index,
                                           const AccountId& validator) {
  return campaigns_.approve_milestone(campaign_id, milestone_index, validator, log_, clock_);
}

Result<Amount> Engine::disburse_milestone(const std::string& campaign_id,
                                          size_t milestone_index) {
  return campaigns_.disburse_milestone(campaign_id, milestone_index, ledger_, log_, clock_);
}

Result<void> Engine::define_token(const std::string& campaign_id, TokenKind kind,
                                  uint64_t total_supply) {
  const Campaign* campaign = campaigns_.find(campaign_id);
  if (!campaign) {
    return make_error(Errc::unknown_campaign, "unknown campaign: " + campaign_id);
  }
  if (campaign->state != CampaignState::active) {
    return make_error(Errc::campaign_not_active,
                      "token class must be defined before finalize");
  }
  return tokens_.define_token(campaign_id, kind, total_supply, log_, clock_);
}

Result<uint64_t> Engine::token_balance(const std::string& campaign_id,
                                       const AccountId& holder) const {
  return tokens_.token_balance(campaign_id, holder);
}

Result<PlaceOutcome> Engine::place_order(const std::string& campaign_id, Side side,
                                         const AccountId& trader, uint64_t quantity,
                                         Amount limit_price) {
  if (!campaigns_.has_campaign(campaign_id)) {
    return make_error(Errc::unknown_campaign, "unknown campaign: " + campaign_id);
  }
  return market_.place_order(campaign_id, side, trader, quantity, limit_price, ledger_,
                             tokens_, compliance_, log_, clock_);
}

Result<void> Engine::cancel_order(uint64_t order_id, const AccountId& trader) {
  return market_.cancel_order(order_id, trader, log_, clock_);
}

BookSnapshot Engine::book_snapshot(const std::string& campaign_id) const {
  return market_.snapshot(campaign_id);
}

void Engine::append_rejection(const std::string& action, const Error& error,
                              uint64_t command_index) {
  log_.append("REJECT",
              {{"index", std::to_string(command_index)},
               {"action", action},
               {"error", errc_name(error.code)},
               {"message", error.message}},
              clock_);
}

Result<void> Engine::check_invariants() const {
  const ChainVerdict chain = log_.verify();
  if (!chain.ok) {
    return make_error(Errc::invalid_argument,
                      "chain integrity violated at seq " +
                          std::to_string(chain.first_bad_seq) + ": " + chain.reason);
  }
  return check_state_invariants();
}

Result<void> Engine::check_state_invariants() const {
  if (!ledger_.conservation_holds()) {
    return make_error(Errc::invalid_argument,
                      "conservation violated: balances do not sum to minted supply");
  }
  if (auto escrow = campaigns_.check_escrow_identity(ledger_); !escrow.ok()) {
    return escrow;
  }
  // Cap tables stay exact: holdings always sum to the fixed supply.
  for (const auto& [campaign_id, table] : tokens_.cap_tables()) {
    const TokenClass* cls = tokens_.token_class(campaign_id);
    uint128 sum = 0;
    for (const auto& [holder, units] : table.holdings) sum += units;
    if (!cls || sum != uint128(cls->total_supply)) {
      return make_error(Errc::invalid_argument,
                        "cap table does not sum to supply for " + campaign_id);
    }
  }
  if (auto market = market_.check_integrity(ledger_, tokens_); !market.ok()) {
    return market;
  }
  return {};
}

nlohmann::ordered_json Engine::snapshot() const {
  nlohmann::ordered_json snap;
  snap["clock"] = clock_;

  nlohmann::ordered_json accounts = nlohmann::ordered_json::object();
  for (const auto& [id, balance] : ledger_.accounts()) {
    accounts[id] = to_string(balance);
  }
  snap["accounts"] = std::move(accounts);
  snap["minted_total"] = to_string(ledger_.minted_total());

  nlohmann::ordered_json identities = nlohmann::ordered_json::object();
  for (const auto& [id, record] : compliance_.identities()) {
    nlohmann::ordered_json entry;
    entry["status"] = kyc_status_name(record.status);
    entry["jurisdiction"] = record.jurisdiction;
    if (record.verified_at) entry["verified_at"] = *record.verified_at;
    identities[id] = std::move(entry);
  }
  snap["identities"] = std::move(identities);

  nlohmann::ordered_json campaigns = nlohmann::ordered_json::object();
  for (const auto& [id, c] : campaigns_.campaigns()) {
    nlohmann::ordered_json entry;
    entry["owner"] = c.owner;
    entry["goal"] = to_string(c.goal);
    entry["deadline"] = c.deadline;
    entry["state"] = campaign_state_name(c.state);
    entry["fee_bps"] = c.fee_bps;
    const auto escrow = ledger_.balance(c.escrow_account);
    entry["escrow_balance"] = to_string(escrow.ok() ? escrow.value() : Amount{});
    entry["total_raised_net"] = to_string(c.total_raised_net);
    entry["total_refunded"] = to_string(c.total_refunded);
    entry["total_disbursed"] = to_string(c.total_disbursed);
    nlohmann::ordered_json contributions = nlohmann::ordered_json::object();
    for (const auto& [who, amount] : c.contributions) {
      contributions[who] = to_string(amount);
    }
    entry["contributions"] = std::move(contributions);
    nlohmann::ordered_json milestones = nlohmann::ordered_json::array();
    for (const Milestone& m : c.milestones) {
      nlohmann::ordered_json milestone;
      milestone["release_bps"] = m.release_bps;
      milestone["status"] = milestone_status_name(m.status);
      milestone["approvals"] = m.approvals;
      milestones.push_back(std::move(milestone));
    }
    entry["milestones"] = std::move(milestones);
    entry["validators"] = c.validators;
    entry["required_approvals"] = c.required_approvals;
    campaigns[id] = std::move(entry);
  }
  snap["campaigns"] = std::move(campaigns);

  nlohmann::ordered_json token_classes = nlohmann::ordered_json::object();
  for (const auto& [id, cls] : tokens_.classes()) {
    token_classes[id] = {{"kind", token_kind_name(cls.kind)},
                         {"total_supply", cls.total_supply}};
  }
  snap["token_classes"] = std::move(token_classes);

  nlohmann::ordered_json cap_tables = nlohmann::ordered_json::object();
  for (const auto& [id, table] : tokens_.cap_tables()) {
    nlohmann::ordered_json holdings = nlohmann::ordered_json::object();
    for (const auto& [holder, units] : table.holdings) {
      holdings[holder] = units;
    }
    cap_tables[id] = std::move(holdings);
  }
  snap["cap_tables"] = std::move(cap_tables);

  nlohmann::ordered_json orders = nlohmann::ordered_json::array();
  for (const auto& [id, order] : market_.orders()) {
    if (order.status != OrderStatus::open && order.status != OrderStatus::partially_filled) {
      continue;
    }
    nlohmann::ordered_json entry;
    entry["order_id"] = order.id;
    entry["campaign"] = order.campaign_id;
    entry["side"] = side_name(order.side);
    entry["trader"] = order.trader;
    entry["quantity"] = order.quantity;
    entry["limit_price"] = to_string(order.limit_price);
    entry["placed_at"] = order.placed_at;
    entry["status"] = order_status_name(order.status);
    orders.push_back(std::move(entry));
  }
  snap["open_orders"] = std::move(orders);
  snap["trade_count"] = market_.trades().size();
  return snap;
}

}  // namespace chainfund
