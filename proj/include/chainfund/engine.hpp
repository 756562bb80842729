#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "chainfund/amount.hpp"
#include "chainfund/campaign.hpp"
#include "chainfund/compliance.hpp"
#include "chainfund/errors.hpp"
#include "chainfund/event_log.hpp"
#include "chainfund/ledger.hpp"
#include "chainfund/market.hpp"
#include "chainfund/tokenization.hpp"

namespace chainfund {

// Single-writer: all mutations serialize through one Engine instance. The
// value may be moved between threads; read-only queries on a quiescent
// engine are safe from any thread.
class Engine {
 public:
  explicit Engine(AccountId fee_sink = "fee_sink");

  // -- logical clock --
  Timestamp now() const { return clock_; }
  Result<void> advance_time(Timestamp t);  // t >= now()

  // -- core ledger --
  Result<void> create_account(const AccountId& id);
  Result<Amount> balance(const AccountId& id) const { return ledger_.balance(id); }
  Result<Amount> mint(const AccountId& to, Amount amount);
  Result<Ledger::TransferOutcome> transfer(const AccountId& from, const AccountId& to,
                                           Amount amount, uint32_t fee_bps,
                                           const AccountId& fee_sink);
  ChainVerdict verify_chain() const { return log_.verify(); }

  // -- compliance --
  Result<void> set_kyc_status(const AccountId& account, KycStatus status,
                              const std::string& jurisdiction);
  void set_jurisdiction_rule(JurisdictionRule rule);
  GateDecision check_gate(const AccountId& account, const GateAction& action) const;
  Result<ComplianceReport> generate_report(Timestamp from, Timestamp to) const;

  // -- campaigns --
  Result<void> create_campaign(const CampaignConfig& config);
  Result<Amount> contribute(const std::string& campaign_id, const AccountId& contributor,
                            Amount amount);
  // Triggers token allocation when the campaign funds and a class is defined.
  Result<CampaignState> finalize(const std::string& campaign_id);
  Result<Amount> refund(const std::string& campaign_id, const AccountId& contributor);
  Result<uint32_t> approve_milestone(const std::string& campaign_id,
                                     size_t milestone_index, const AccountId& validator);
  Result<Amount> disburse_milestone(const std::string& campaign_id, size_t milestone_index);

  // -- tokenization --
  Result<void> define_token(const std::string& campaign_id, TokenKind kind,
                            uint64_t total_supply);
  Result<uint64_t> token_balance(const std::string& campaign_id,
                                 const AccountId& holder) const;

  // -- secondary market --
  Result<PlaceOutcome> place_order(const std::string& campaign_id, Side side,
                                   const AccountId& trader, uint64_t quantity,
                                   Amount limit_price);
  Result<void> cancel_order(uint64_t order_id, const AccountId& trader);
  BookSnapshot book_snapshot(const std::string& campaign_id) const;

  // -- infrastructure --
  const EventLog& log() const { return log_; }
  const Ledger& ledger() const { return ledger_; }
  const Compliance& compliance() const { return compliance_; }
  const CampaignBook& campaigns() const { return campaigns_; }
  const TokenRegistry& tokens() const { return tokens_; }
  const Market& market() const { return market_; }
  const AccountId& fee_sink() const { return fee_sink_; }

  // Records a rejected command in the event log (REJECT). Rejections are
  // expected output of a run, not crashes, and leave module state unchanged.
  void append_rejection(const std::string& action, const Error& error,
                        uint64_t command_index);

  // Full invariant suite: conservation, chain integrity, per-campaign escrow
  // identity, cap-table exactness, market reservation safety, no crossing.
  // Returns the first violation as an error.
  Result<void> check_invariants() const;

  // Everything except chain integrity; the scenario runner pairs this with
  // an incremental verify_suffix so per-command verification stays linear.
  Result<void> check_state_invariants() const;

  // Deterministic state snapshot (module state only; the event log is
  // exported separately). Amounts are fixed-point decimal strings.
  nlohmann::ordered_json snapshot() const;

 private:
  EventLog log_;
  Ledger ledger_;
  Compliance compliance_;
  CampaignBook campaigns_;
  TokenRegistry tokens_;
  Market market_;
  Timestamp clock_ = 0;
  AccountId fee_sink_;
};

}  // namespace chainfund
