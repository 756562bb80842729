#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "chainfund/engine.hpp"

namespace chainfund {

struct FeeModel {
  // Defaults: 400 bps for the traditional-platform comparison rate, 50 bps
  // for this framework. Both always overridable per scenario.
  uint32_t traditional_bps = 400;
  uint32_t framework_bps = 50;
};

namespace cmd {

struct CreateAccount { AccountId id; };
struct Mint { AccountId to; Amount amount; };
struct SetKyc { AccountId account; KycStatus status = KycStatus::unverified; std::string jurisdiction; };
struct CreateCampaign { CampaignConfig config; };
struct DefineToken { std::string campaign_id; TokenKind kind = TokenKind::equity; uint64_t supply = 0; };
struct Contribute { std::string campaign_id; AccountId contributor; Amount amount; };
struct Finalize { std::string campaign_id; };
struct Refund { std::string campaign_id; AccountId contributor; };
struct ApproveMilestone { std::string campaign_id; uint32_t milestone = 0; AccountId validator; };
struct Disburse { std::string campaign_id; uint32_t milestone = 0; };
struct PlaceOrder { std::string campaign_id; Side side = Side::buy; AccountId trader; uint64_t quantity = 0; Amount limit_price; };
struct CancelOrder { uint64_t order_id = 0; AccountId trader; };
struct GenerateReport { Timestamp from = 0; Timestamp to = 0; };

}  // namespace cmd

using CommandPayload =
    std::variant<cmd::CreateAccount, cmd::Mint, cmd::SetKyc, cmd::CreateCampaign,
                 cmd::DefineToken, cmd::Contribute, cmd::Finalize, cmd::Refund,
                 cmd::ApproveMilestone, cmd::Disburse, cmd::PlaceOrder,
                 cmd::CancelOrder, cmd::GenerateReport>;

struct Command {
  Timestamp at = 0;
  CommandPayload payload;

  const char* action_name() const;
};

struct Scenario {
  std::string name;
  uint64_t seed = 0;  // feeds randomized scenario generators only, never the engine
  FeeModel fee_model;
  std::vector<FiatRate> fiat_rates;
  std::vector<JurisdictionRule> jurisdiction_rules;
  std::vector<Command> commands;
};

// Parse a scenario JSON document. Errors are MalformedScenario: parse
// failures, unknown actions, bad field types/values.
Result<Scenario> parse_scenario_json(const std::string& text);

// Static well-formedness, distinct from in-run rejections: non-decreasing
// timestamps, valid bps, and every referenced id defined by an earlier
// command (accounts, campaigns, and order ids counted from prior
// place_order commands).
Result<void> validate_scenario(const Scenario& scenario);

struct FeeComparisonReport {
  Amount gross_raised{};
  Amount traditional_fee{};
  Amount framework_fee{};
  Amount traditional_net{};
  Amount framework_net{};
  int64_t savings_bps = 0;  // (traditional_fee - framework_fee) * 10,000 / gross, floored
};

Result<FeeComparisonReport> fee_comparison(Amount gross, uint32_t traditional_bps,
                                           uint32_t framework_bps);

nlohmann::ordered_json fee_report_to_json(const FeeComparisonReport& report,
                                          const std::vector<FiatRate>& rates);
nlohmann::ordered_json compliance_report_to_json(const ComplianceReport& report);

struct RunOptions {
  bool verify = false;  // run the invariant suite after every command
};

struct RunOutput {
  Engine engine;
  std::vector<ComplianceReport> reports;   // one per GenerateReport command
  FeeComparisonReport fee_report;          // over gross contributions of the run
  uint64_t commands_executed = 0;
  uint64_t commands_rejected = 0;
};

// Executes all commands in order against a fresh engine, advancing the
// logical clock to each command's timestamp. Precondition failures are
// recorded as REJECT events; only malformed scenarios and invariant
// violations are errors.
Result<RunOutput> run_scenario(const Scenario& scenario, const RunOptions& options = {});

// Runs the scenario twice and compares final chain hashes byte for byte.
Result<bool> replay_verify(const Scenario& scenario);

}  // namespace chainfund
