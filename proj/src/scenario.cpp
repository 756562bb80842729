#include "chainfund/scenario.hpp"

#include <set>

namespace chainfund {

namespace {

using json = nlohmann::json;
using int128 = __int128;

Error malformed(const std::string& why) {
  return make_error(Errc::malformed_scenario, why);
}

Result<std::string> get_string(const json& j, const std::string& key,
                               const std::string& ctx) {
  if (!j.contains(key) || !j[key].is_string()) {
    return malformed(ctx + ": missing string field \"" + key + "\"");
  }
  return j[key].get<std::string>();
}

Result<uint64_t> get_uint(const json& j, const std::string& key, const std::string& ctx) {
  if (!j.contains(key) || !j[key].is_number_unsigned()) {
    return malformed(ctx + ": missing non-negative integer field \"" + key + "\"");
  }
  return j[key].get<uint64_t>();
}

// 32-bit fields are range-checked here so out-of-range JSON can never wrap
// into a silently different value.
Result<uint32_t> get_u32(const json& j, const std::string& key, const std::string& ctx) {
  auto v = get_uint(j, key, ctx);
  if (!v.ok()) return v.error();
  if (v.value() > UINT32_MAX) {
    return malformed(ctx + ": field \"" + key + "\" out of range");
  }
  return uint32_t(v.value());
}

Result<uint32_t> get_bps(const json& j, const std::string& key, const std::string& ctx) {
  auto v = get_u32(j, key, ctx);
  if (!v.ok()) return v.error();
  if (!valid_bps(v.value())) {
    return malformed(ctx + ": field \"" + key + "\" exceeds 10000 bps");
  }
  return v;
}

// Amounts: a JSON string is an exact decimal in coins ("12.500000"); a JSON
// unsigned integer is raw minor units. Floats are rejected — no floating
// point money anywhere.
Result<Amount> get_amount(const json& j, const std::string& key, const std::string& ctx) {
  if (!j.contains(key)) {
    return malformed(ctx + ": missing amount field \"" + key + "\"");
  }
  const json& v = j[key];
  if (v.is_string()) {
    auto parsed = parse_amount(v.get<std::string>());
    if (!parsed.ok()) return malformed(ctx + ": " + parsed.error().message);
    return parsed.value();
  }
  if (v.is_number_unsigned()) {
    return Amount{v.get<uint64_t>()};
  }
  return malformed(ctx + ": amount field \"" + key + "\" must be a decimal string or minor units");
}

struct ActionNameVisitor {
  const char* operator()(const cmd::CreateAccount&) const { return "create_account"; }
  const char* operator()(const cmd::Mint&) const { return "mint"; }
  const char* operator()(const cmd::SetKyc&) const { return "set_kyc"; }
  const char* operator()(const cmd::CreateCampaign&) const { return "create_campaign"; }
  const char* operator()(const cmd::DefineToken&) const { return "define_token"; }
  const char* operator()(const cmd::Contribute&) const { return "contribute"; }
  const char* operator()(const cmd::Finalize&) const { return "finalize"; }
  const char* operator()(const cmd::Refund&) const { return "refund"; }
  const char* operator()(const cmd::ApproveMilestone&) const { return "approve_milestone"; }
  const char* operator()(const cmd::Disburse&) const { return "disburse"; }
  const char* operator()(const cmd::PlaceOrder&) const { return "place_order"; }
  const char* operator()(const cmd::CancelOrder&) const { return "cancel_order"; }
  const char* operator()(const cmd::GenerateReport&) const { return "generate_report"; }
};

}  // namespace

const char* Command::action_name() const {
  return std::visit(ActionNameVisitor{}, payload);
}

Result<Scenario> parse_scenario_json(const std::string& text) {
  const json doc = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (doc.is_discarded() || !doc.is_object()) {
    return malformed("scenario is not a JSON object");
  }

  Scenario scenario;
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) return malformed("\"name\" must be a string");
    scenario.name = doc["name"].get<std::string>();
  }
  if (doc.contains("seed")) {
    if (!doc["seed"].is_number_unsigned()) return malformed("\"seed\" must be unsigned");
    scenario.seed = doc["seed"].get<uint64_t>();
  }
  if (doc.contains("fee_model")) {
    const json& fm = doc["fee_model"];
    if (!fm.is_object()) return malformed("\"fee_model\" must be an object");
    auto trad = get_bps(fm, "traditional_bps", "fee_model");
    if (!trad.ok()) return trad.error();
    auto fw = get_bps(fm, "framework_bps", "fee_model");
    if (!fw.ok()) return fw.error();
    scenario.fee_model.traditional_bps = trad.value();
    scenario.fee_model.framework_bps = fw.value();
  }
  if (doc.contains("fiat_rates")) {
    if (!doc["fiat_rates"].is_array()) return malformed("\"fiat_rates\" must be an array");
    for (const json& entry : doc["fiat_rates"]) {
      auto currency = get_string(entry, "currency", "fiat_rates");
      if (!currency.ok()) return currency.error();
      auto rate = get_uint(entry, "minor_units_per_coin", "fiat_rates");
      if (!rate.ok()) return rate.error();
      if (rate.value() == 0) return malformed("fiat rate must be positive");
      scenario.fiat_rates.push_back(FiatRate{currency.value(), rate.value()});
    }
  }
  if (doc.contains("jurisdiction_rules")) {
    if (!doc["jurisdiction_rules"].is_array()) {
      return malformed("\"jurisdiction_rules\" must be an array");
    }
    for (const json& entry : doc["jurisdiction_rules"]) {
      auto jurisdiction = get_string(entry, "jurisdiction", "jurisdiction_rules");
      if (!jurisdiction.ok()) return jurisdiction.error();
      JurisdictionRule rule;
      rule.jurisdiction = jurisdiction.value();
      auto max = get_amount(entry, "max_unverified_contribution", "jurisdiction_rules");
      if (!max.ok()) return max.error();
      rule.max_unverified_contribution = max.value();
      if (entry.contains("allowed")) {
        if (!entry["allowed"].is_boolean()) return malformed("\"allowed\" must be boolean");
        rule.allowed = entry["allowed"].get<bool>();
      }
      scenario.jurisdiction_rules.push_back(std::move(rule));
    }
  }

  if (!doc.contains("commands") || !doc["commands"].is_array()) {
    return malformed("\"commands\" must be an array");
  }
  size_t index = 0;
  for (const json& c : doc["commands"]) {
    const std::string ctx = "command " + std::to_string(index);
    if (!c.is_object()) return malformed(ctx + ": not an object");
    auto at = get_uint(c, "at", ctx);
    if (!at.ok()) return at.error();
    auto action = get_string(c, "action", ctx);
    if (!action.ok()) return action.error();
    const std::string& a = action.value();

    Command command;
    command.at = at.value();

    if (a == "create_account") {
      auto id = get_string(c, "id", ctx);
      if (!id.ok()) return id.error();
      command.payload = cmd::CreateAccount{id.value()};
    } else if (a == "mint") {
      auto to = get_string(c, "to", ctx);
      if (!to.ok()) return to.error();
      auto amount = get_amount(c, "amount", ctx);
      if (!amount.ok()) return amount.error();
      command.payload = cmd::Mint{to.value(), amount.value()};
    } else if (a == "set_kyc") {
      auto account = get_string(c, "account", ctx);
      if (!account.ok()) return account.error();
      auto status_name = get_string(c, "status", ctx);
      if (!status_name.ok()) return status_name.error();
      const auto status = kyc_status_from_name(status_name.value());
      if (!status) return malformed(ctx + ": unknown KYC status " + status_name.value());
      auto jurisdiction = get_string(c, "jurisdiction", ctx);
      if (!jurisdiction.ok()) return jurisdiction.error();
      command.payload = cmd::SetKyc{account.value(), *status, jurisdiction.value()};
    } else if (a == "create_campaign") {
      CampaignConfig config;
      auto id = get_string(c, "id", ctx);
      if (!id.ok()) return id.error();
      config.id = id.value();
      auto owner = get_string(c, "owner", ctx);
      if (!owner.ok()) return owner.error();
      config.owner = owner.value();
      auto goal = get_amount(c, "goal", ctx);
      if (!goal.ok()) return goal.error();
      config.goal = goal.value();
      auto deadline = get_uint(c, "deadline", ctx);
      if (!deadline.ok()) return deadline.error();
      config.deadline = deadline.value();
      auto fee_bps = get_bps(c, "fee_bps", ctx);
      if (!fee_bps.ok()) return fee_bps.error();
      config.fee_bps = fee_bps.value();
      if (!c.contains("milestones") || !c["milestones"].is_array()) {
        return malformed(ctx + ": missing \"milestones\" array");
      }
      for (const json& m : c["milestones"]) {
        if (!m.is_number_unsigned() || m.get<uint64_t>() > kBpsDenominator) {
          return malformed(ctx + ": milestone bps must be integers within 10000");
        }
        config.milestone_bps.push_back(uint32_t(m.get<uint64_t>()));
      }
      if (!c.contains("validators") || !c["validators"].is_array()) {
        return malformed(ctx + ": missing \"validators\" array");
      }
      for (const json& v : c["validators"]) {
        if (!v.is_string()) return malformed(ctx + ": validator ids must be strings");
        config.validators.push_back(v.get<std::string>());
      }
      auto m_required = get_u32(c, "required_approvals", ctx);
      if (!m_required.ok()) return m_required.error();
      config.required_approvals = m_required.value();
      command.payload = cmd::CreateCampaign{std::move(config)};
    } else if (a == "define_token") {
      auto campaign = get_string(c, "campaign", ctx);
      if (!campaign.ok()) return campaign.error();
      auto kind_name = get_string(c, "kind", ctx);
      if (!kind_name.ok()) return kind_name.error();
      const auto kind = token_kind_from_name(kind_name.value());
      if (!kind) return malformed(ctx + ": unknown token kind " + kind_name.value());
      auto supply = get_uint(c, "supply", ctx);
      if (!supply.ok()) return supply.error();
      command.payload = cmd::DefineToken{campaign.value(), *kind, supply.value()};
    } else if (a == "contribute") {
      auto campaign = get_string(c, "campaign", ctx);
      if (!campaign.ok()) return campaign.error();
      auto contributor = get_string(c, "contributor", ctx);
      if (!contributor.ok()) return contributor.error();
      auto amount = get_amount(c, "amount", ctx);
      if (!amount.ok()) return amount.error();
      command.payload = cmd::Contribute{campaign.value(), contributor.value(), amount.value()};
    } else if (a == "finalize") {
      auto campaign = get_string(c, "campaign", ctx);
      if (!campaign.ok()) return campaign.error();
      command.payload = cmd::Finalize{campaign.value()};
    } else if (a == "refund") {
      auto campaign = get_string(c, "campaign", ctx);
      if (!campaign.ok()) return campaign.error();
      auto contributor = get_string(c, "contributor", ctx);
      if (!contributor.ok()) return contributor.error();
      command.payload = cmd::Refund{campaign.value(), contributor.value()};
    } else if (a == "approve_milestone") {
      auto campaign = get_string(c, "campaign", ctx);
      if (!campaign.ok()) return campaign.error();
      auto milestone = get_u32(c, "milestone", ctx);
      if (!milestone.ok()) return milestone.error();
      auto validator = get_string(c, "validator", ctx);
      if (!validator.ok()) return validator.error();
      command.payload =
          cmd::ApproveMilestone{campaign.value(), milestone.value(), validator.value()};
    } else if (a == "disburse") {
      auto campaign = get_string(c, "campaign", ctx);
      if (!campaign.ok()) return campaign.error();
      auto milestone = get_u32(c, "milestone", ctx);
      if (!milestone.ok()) return milestone.error();
      command.payload = cmd::Disburse{campaign.value(), milestone.value()};
    } else if (a == "place_order") {
      auto campaign = get_string(c, "campaign", ctx);
      if (!campaign.ok()) return campaign.error();
      auto side_name = get_string(c, "side", ctx);
      if (!side_name.ok()) return side_name.error();
      Side side;
      if (side_name.value() == "buy") {
        side = Side::buy;
      } else if (side_name.value() == "sell") {
        side = Side::sell;
      } else {
        return malformed(ctx + ": side must be \"buy\" or \"sell\"");
      }
      auto trader = get_string(c, "trader", ctx);
      if (!trader.ok()) return trader.error();
      auto quantity = get_uint(c, "quantity", ctx);
      if (!quantity.ok()) return quantity.error();
      auto price = get_amount(c, "limit_price", ctx);
      if (!price.ok()) return price.error();
      command.payload = cmd::PlaceOrder{campaign.value(), side, trader.value(),
                                        quantity.value(), price.value()};
    } else if (a == "cancel_order") {
      auto order_id = get_uint(c, "order_id", ctx);
      if (!order_id.ok()) return order_id.error();
      auto trader = get_string(c, "trader", ctx);
      if (!trader.ok()) return trader.error();
      command.payload = cmd::CancelOrder{order_id.value(), trader.value()};
    } else if (a == "generate_report") {
      auto from = get_uint(c, "from", ctx);
      if (!from.ok()) return from.error();
      auto to = get_uint(c, "to", ctx);
      if (!to.ok()) return to.error();
      command.payload = cmd::GenerateReport{from.value(), to.value()};
    } else {
      return malformed(ctx + ": unknown action \"" + a + "\"");
    }
    scenario.commands.push_back(std::move(command));
    ++index;
  }
  return scenario;
}

namespace {

// Collects every account id a command references (excluding definitions).
struct AccountRefs {
  std::vector<const AccountId*> refs;

  void operator()(const cmd::CreateAccount&) {}
  void operator()(const cmd::Mint& c) { refs.push_back(&c.to); }
  void operator()(const cmd::SetKyc& c) { refs.push_back(&c.account); }
  void operator()(const cmd::CreateCampaign& c) {
    refs.push_back(&c.config.owner);
    for (const AccountId& v : c.config.validators) refs.push_back(&v);
  }
  void operator()(const cmd::DefineToken&) {}
  void operator()(const cmd::Contribute& c) { refs.push_back(&c.contributor); }
  void operator()(const cmd::Finalize&) {}
  void operator()(const cmd::Refund& c) { refs.push_back(&c.contributor); }
  void operator()(const cmd::ApproveMilestone& c) { refs.push_back(&c.validator); }
  void operator()(const cmd::Disburse&) {}
  void operator()(const cmd::PlaceOrder& c) { refs.push_back(&c.trader); }
  void operator()(const cmd::CancelOrder& c) { refs.push_back(&c.trader); }
  void operator()(const cmd::GenerateReport&) {}
};

const std::string* campaign_ref(const CommandPayload& payload) {
  if (const auto* c = std::get_if<cmd::DefineToken>(&payload)) return &c->campaign_id;
  if (const auto* c = std::get_if<cmd::Contribute>(&payload)) return &c->campaign_id;
  if (const auto* c = std::get_if<cmd::Finalize>(&payload)) return &c->campaign_id;
  if (const auto* c = std::get_if<cmd::Refund>(&payload)) return &c->campaign_id;
  if (const auto* c = std::get_if<cmd::ApproveMilestone>(&payload)) return &c->campaign_id;
  if (const auto* c = std::get_if<cmd::Disburse>(&payload)) return &c->campaign_id;
  if (const auto* c = std::get_if<cmd::PlaceOrder>(&payload)) return &c->campaign_id;
  return nullptr;
}

}  // namespace

Result<void> validate_scenario(const Scenario& scenario) {
  if (!valid_bps(scenario.fee_model.traditional_bps) ||
      !valid_bps(scenario.fee_model.framework_bps)) {
    return malformed("fee_model bps out of range");
  }

  std::set<AccountId> accounts;
  std::set<std::string> campaigns;
  uint64_t orders_placed = 0;
  Timestamp last_at = 0;

  for (size_t i = 0; i < scenario.commands.size(); ++i) {
    const Command& command = scenario.commands[i];
    const std::string ctx = "command " + std::to_string(i);
    if (command.at < last_at) {
      return malformed(ctx + ": timestamps must be non-decreasing");
    }
    last_at = command.at;

    AccountRefs account_refs;
    std::visit(account_refs, command.payload);
    for (const AccountId* id : account_refs.refs) {
      if (!accounts.count(*id)) {
        return malformed(ctx + ": references undefined account \"" + *id + "\"");
      }
    }
    if (const std::string* campaign = campaign_ref(command.payload)) {
      if (!campaigns.count(*campaign)) {
        return malformed(ctx + ": references undefined campaign \"" + *campaign + "\"");
      }
    }
    if (const auto* cancel = std::get_if<cmd::CancelOrder>(&command.payload)) {
      if (cancel->order_id == 0 || cancel->order_id > orders_placed) {
        return malformed(ctx + ": references undefined order " +
                         std::to_string(cancel->order_id));
      }
    }

    if (const auto* create = std::get_if<cmd::CreateAccount>(&command.payload)) {
      accounts.insert(create->id);
    } else if (const auto* create_c = std::get_if<cmd::CreateCampaign>(&command.payload)) {
      campaigns.insert(create_c->config.id);
      if (!valid_bps(create_c->config.fee_bps)) {
        return malformed(ctx + ": fee_bps out of range");
      }
    } else if (std::holds_alternative<cmd::PlaceOrder>(command.payload)) {
      ++orders_placed;
    }
  }
  return {};
}

Result<FeeComparisonReport> fee_comparison(Amount gross, uint32_t traditional_bps,
                                           uint32_t framework_bps) {
  if (!valid_bps(traditional_bps) || !valid_bps(framework_bps)) {
    return make_error(Errc::invalid_fee, "bps out of range");
  }
  FeeComparisonReport report;
  report.gross_raised = gross;
  report.traditional_fee = fee_floor(gross, traditional_bps);
  report.framework_fee = fee_floor(gross, framework_bps);
  report.traditional_net = Amount{gross.minor - report.traditional_fee.minor};
  report.framework_net = Amount{gross.minor - report.framework_fee.minor};
  if (gross.is_zero()) {
    report.savings_bps = 0;
  } else {
    const int128 numerator =
        (int128(report.traditional_fee.minor) - int128(report.framework_fee.minor)) *
        kBpsDenominator;
    int128 q = numerator / int128(gross.minor);
    const int128 r = numerator % int128(gross.minor);
    if (r != 0 && numerator < 0) q -= 1;  // floor, not truncation
    report.savings_bps = int64_t(q);
  }
  return report;
}

nlohmann::ordered_json fee_report_to_json(const FeeComparisonReport& report,
                                          const std::vector<FiatRate>& rates) {
  nlohmann::ordered_json j;
  j["gross_raised"] = to_string(report.gross_raised);
  j["traditional_fee"] = to_string(report.traditional_fee);
  j["framework_fee"] = to_string(report.framework_fee);
  j["traditional_net"] = to_string(report.traditional_net);
  j["framework_net"] = to_string(report.framework_net);
  j["savings_bps"] = report.savings_bps;
  if (!rates.empty()) {
    nlohmann::ordered_json fiat = nlohmann::ordered_json::object();
    for (const FiatRate& rate : rates) {
      nlohmann::ordered_json entry;
      const auto put = [&](const char* key, Amount amount) {
        if (auto converted = convert_to_fiat(amount, rate); converted.ok()) {
          entry[key] = converted.value();
        }
      };
      put("gross_raised", report.gross_raised);
      put("traditional_net", report.traditional_net);
      put("framework_net", report.framework_net);
      fiat[rate.currency_code] = std::move(entry);
    }
    j["fiat"] = std::move(fiat);
  }
  return j;
}

nlohmann::ordered_json compliance_report_to_json(const ComplianceReport& report) {
  nlohmann::ordered_json j;
  j["generated_at"] = report.generated_at;
  j["window"] = {{"from", report.from}, {"to", report.to}};
  nlohmann::ordered_json entries = nlohmann::ordered_json::array();
  for (const ComplianceEntry& entry : report.entries) {
    nlohmann::ordered_json e;
    e["seq"] = entry.seq;
    e["account"] = entry.account;
    e["kind"] = entry.kind;
    e["amount"] = to_string(entry.amount);
    entries.push_back(std::move(e));
  }
  j["entries"] = std::move(entries);
  return j;
}

namespace {

// Applies one command to the engine, discarding operation results; errors
// become REJECT events in the caller.
struct Dispatch {
  Engine& engine;
  std::vector<ComplianceReport>& reports;

  Result<void> operator()(const cmd::CreateAccount& c) {
    return engine.create_account(c.id);
  }
  Result<void> operator()(const cmd::Mint& c) {
    auto r = engine.mint(c.to, c.amount);
    if (!r.ok()) return r.error();
    return {};
  }
  Result<void> operator()(const cmd::SetKyc& c) {
    return engine.set_kyc_status(c.account, c.status, c.jurisdiction);
  }
  Result<void> operator()(const cmd::CreateCampaign& c) {
    return engine.create_campaign(c.config);
  }
  Result<void> operator()(const cmd::DefineToken& c) {
    return engine.define_token(c.campaign_id, c.kind, c.supply);
  }
  Result<void> operator()(const cmd::Contribute& c) {
    auto r = engine.contribute(c.campaign_id, c.contributor, c.amount);
    if (!r.ok()) return r.error();
    return {};
  }
  Result<void> operator()(const cmd::Finalize& c) {
    auto r = engine.finalize(c.campaign_id);
    if (!r.ok()) return r.error();
    return {};
  }
  Result<void> operator()(const cmd::Refund& c) {
    auto r = engine.refund(c.campaign_id, c.contributor);
    if (!r.ok()) return r.error();
    return {};
  }
  Result<void> operator()(const cmd::ApproveMilestone& c) {
    auto r = engine.approve_milestone(c.campaign_id, c.milestone, c.validator);
    if (!r.ok()) return r.error();
    return {};
  }
  Result<void> operator()(const cmd::Disburse& c) {
    auto r = engine.disburse_milestone(c.campaign_id, c.milestone);
    if (!r.ok()) return r.error();
    return {};
  }
  Result<void> operator()(const cmd::PlaceOrder& c) {
    auto r = engine.place_order(c.campaign_id, c.side, c.trader, c.quantity, c.limit_price);
    if (!r.ok()) return r.error();
    return {};
  }
  Result<void> operator()(const cmd::CancelOrder& c) {
    return engine.cancel_order(c.order_id, c.trader);
  }
  Result<void> operator()(const cmd::GenerateReport& c) {
    auto r = engine.generate_report(c.from, c.to);
    if (!r.ok()) return r.error();
    reports.push_back(std::move(r).value());
    return {};
  }
};

}  // namespace

Result<RunOutput> run_scenario(const Scenario& scenario, const RunOptions& options) {
  if (auto valid = validate_scenario(scenario); !valid.ok()) return valid.error();

  RunOutput output;
  Engine& engine = output.engine;
  for (const JurisdictionRule& rule : scenario.jurisdiction_rules) {
    engine.set_jurisdiction_rule(rule);
  }

  Amount gross_raised{};
  uint64_t chain_verified_to = 0;
  Dispatch dispatch{engine, output.reports};
  for (size_t i = 0; i < scenario.commands.size(); ++i) {
    const Command& command = scenario.commands[i];
    if (auto advanced = engine.advance_time(command.at); !advanced.ok()) {
      return advanced.error();
    }
    const Result<void> applied = std::visit(dispatch, command.payload);
    if (applied.ok()) {
      ++output.commands_executed;
      if (const auto* contribute = std::get_if<cmd::Contribute>(&command.payload)) {
        const auto total = checked_add(gross_raised, contribute->amount);
        if (!total) return make_error(Errc::overflow, "gross contributions overflow");
        gross_raised = *total;
      }
    } else {
      ++output.commands_rejected;
      engine.append_rejection(command.action_name(), applied.error(), uint64_t(i));
    }
    if (options.verify) {
      const auto fail_at = [&](const Error& error) {
        return make_error(error.code,
                          "after command " + std::to_string(i) + ": " + error.message);
      };
      if (auto state = engine.check_state_invariants(); !state.ok()) {
        return fail_at(state.error());
      }
      const ChainVerdict chain = engine.log().verify_suffix(chain_verified_to);
      if (!chain.ok) {
        return fail_at(make_error(Errc::invalid_argument,
                                  "chain integrity violated at seq " +
                                      std::to_string(chain.first_bad_seq) + ": " +
                                      chain.reason));
      }
      chain_verified_to = engine.log().size();
    }
  }

  if (auto invariants = engine.check_invariants(); !invariants.ok()) {
    return make_error(invariants.error().code,
                      "at end of run: " + invariants.error().message);
  }

  auto fees = fee_comparison(gross_raised, scenario.fee_model.traditional_bps,
                             scenario.fee_model.framework_bps);
  if (!fees.ok()) return fees.error();
  output.fee_report = fees.value();
  return output;
}

Result<bool> replay_verify(const Scenario& scenario) {
  auto first = run_scenario(scenario);
  if (!first.ok()) return first.error();
  auto second = run_scenario(scenario);
  if (!second.ok()) return second.error();
  return first.value().engine.log().head_hash() == second.value().engine.log().head_hash();
}

}  // namespace chainfund
