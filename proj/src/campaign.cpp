#include "chainfund/campaign.hpp"

#include <numeric>

namespace chainfund {

const char* campaign_state_name(CampaignState s) {
  switch (s) {
    case CampaignState::active: return "active";
    case CampaignState::funded: return "funded";
    case CampaignState::failed: return "failed";
    case CampaignState::completed: return "completed";
  }
  return "active";
}

const char* milestone_status_name(MilestoneStatus s) {
  switch (s) {
    case MilestoneStatus::pending: return "pending";
    case MilestoneStatus::approved: return "approved";
    case MilestoneStatus::disbursed: return "disbursed";
  }
  return "pending";
}

std::string CampaignBook::escrow_account_for(const std::string& campaign_id) {
  return "escrow:" + campaign_id;
}

namespace {

std::string join_ids(const std::vector<AccountId>& ids) {
  std::string out;
  for (const AccountId& id : ids) {
    if (!out.empty()) out.push_back(',');
    out += id;
  }
  return out;
}

std::string join_bps(const std::vector<uint32_t>& bps) {
  std::string out;
  for (uint32_t b : bps) {
    if (!out.empty()) out.push_back(',');
    out += std::to_string(b);
  }
  return out;
}

}  // namespace

Result<void> CampaignBook::create(const CampaignConfig& config, Ledger& ledger,
                                  const Compliance& compliance, EventLog& log,
                                  Timestamp now) {
  if (config.id.empty()) {
    return make_error(Errc::invalid_id, "campaign id must be non-empty");
  }
  if (campaigns_.count(config.id)) {
    return make_error(Errc::duplicate_campaign, "campaign already exists: " + config.id);
  }
  if (!ledger.has_account(config.owner)) {
    return make_error(Errc::unknown_account, "unknown owner: " + config.owner);
  }
  const GateDecision gate = compliance.check_gate(config.owner, GateAction::create_campaign());
  if (!gate.allowed) {
    return make_error(Errc::gate_denied,
                      std::string("owner denied by gate: ") + gate.reason_name());
  }
  if (config.deadline <= now) {
    return make_error(Errc::past_deadline, "deadline must be after now");
  }
  if (config.goal.is_zero()) {
    return make_error(Errc::invalid_argument, "goal must be positive");
  }
  if (!valid_bps(config.fee_bps)) {
    return make_error(Errc::invalid_fee, "fee_bps out of range");
  }
  const uint64_t bps_sum = std::accumulate(config.milestone_bps.begin(),
                                           config.milestone_bps.end(), uint64_t(0));
  if (config.milestone_bps.empty() || bps_sum != kBpsDenominator) {
    return make_error(Errc::bad_milestone_schedule,
                      "milestone release fractions must sum to 10000 bps, got " +
                          std::to_string(bps_sum));
  }
  if (config.required_approvals < 1 ||
      config.validators.size() < config.required_approvals) {
    return make_error(Errc::invalid_argument,
                      "need N >= M >= 1 validators and required approvals");
  }
  for (const AccountId& v : config.validators) {
    if (!ledger.has_account(v)) {
      return make_error(Errc::unknown_account, "unknown validator: " + v);
    }
  }
  const std::string escrow = escrow_account_for(config.id);
  if (ledger.has_account(escrow)) {
    return make_error(Errc::duplicate_account, "escrow account collides: " + escrow);
  }

  Campaign c;
  c.id = config.id;
  c.owner = config.owner;
  c.goal = config.goal;
  c.deadline = config.deadline;
  c.fee_bps = config.fee_bps;
  c.milestones.reserve(config.milestone_bps.size());
  for (uint32_t bps : config.milestone_bps) {
    c.milestones.push_back(Milestone{bps, MilestoneStatus::pending, {}});
  }
  c.validators.insert(config.validators.begin(), config.validators.end());
  c.required_approvals = config.required_approvals;
  c.escrow_account = escrow;

  ledger.ensure_internal_account(escrow);
  log.append("CREATE_CAMPAIGN",
             {{"campaign", c.id},
              {"owner", c.owner},
              {"goal", to_string(c.goal)},
              {"deadline", std::to_string(c.deadline)},
              {"fee_bps", std::to_string(c.fee_bps)},
              {"milestones", join_bps(config.milestone_bps)},
              {"validators", join_ids(config.validators)},
              {"required_approvals", std::to_string(c.required_approvals)}},
             now);
  campaigns_.emplace(c.id, std::move(c));
  return {};
}

Result<Amount> CampaignBook::contribute(const std::string& campaign_id,
                                        const AccountId& contributor, Amount amount,
                                        const AccountId& fee_sink, Ledger& ledger,
                                        const Compliance& compliance, EventLog& log,
                                        Timestamp now) {
  const auto it = campaigns_.find(campaign_id);
  if (it == campaigns_.end()) {
    return make_error(Errc::unknown_campaign, "unknown campaign: " + campaign_id);
  }
  Campaign& c = it->second;
  if (c.state != CampaignState::active) {
    return make_error(Errc::campaign_not_active,
                      std::string("campaign is ") + campaign_state_name(c.state));
  }
  if (now >= c.deadline) {
    return make_error(Errc::deadline_passed, "funding deadline has passed");
  }
  if (!ledger.has_account(contributor)) {
    return make_error(Errc::unknown_account, "unknown account: " + contributor);
  }
  const GateDecision gate = compliance.check_gate(contributor, GateAction::contribute(amount));
  if (!gate.allowed) {
    return make_error(Errc::gate_denied,
                      std::string("contributor denied by gate: ") + gate.reason_name());
  }
  if (amount.is_zero()) {
    return make_error(Errc::zero_amount, "contribution must be positive");
  }
  const auto funds = ledger.balance(contributor);
  if (!funds.ok()) return funds.error();
  if (funds.value() < amount) {
    return make_error(Errc::insufficient_funds,
                      "balance " + to_string(funds.value()) + " < " + to_string(amount));
  }

  ledger.ensure_internal_account(fee_sink);
  auto moved = ledger.move_with_fee(contributor, c.escrow_account, amount, c.fee_bps,
                                    fee_sink);
  if (!moved.ok()) return moved.error();
  const Amount net = moved.value().net;

  c.contributions[contributor] =
      Amount{c.contributions[contributor].minor + net.minor};
  c.total_contributed_net = Amount{c.total_contributed_net.minor + net.minor};
  log.append("CONTRIBUTE",
             {{"campaign", c.id},
              {"contributor", contributor},
              {"amount", to_string(amount)},
              {"fee", to_string(moved.value().fee)},
              {"net", to_string(net)}},
             now);
  return c.contributions[contributor];
}

Result<CampaignState> CampaignBook::finalize(const std::string& campaign_id,
                                             EventLog& log, Timestamp now) {
  const auto it = campaigns_.find(campaign_id);
  if (it == campaigns_.end()) {
    return make_error(Errc::unknown_campaign, "unknown campaign: " + campaign_id);
  }
  Campaign& c = it->second;
  if (c.state != CampaignState::active) {
    return make_error(Errc::already_finalized,
                      std::string("campaign already ") + campaign_state_name(c.state));
  }
  if (now < c.deadline) {
    return make_error(Errc::too_early, "funding period still active");
  }
  const Amount raised = c.total_contributed_net;
  c.state = raised >= c.goal ? CampaignState::funded : CampaignState::failed;
  c.total_raised_net = raised;
  log.append("FINALIZE",
             {{"campaign", c.id},
              {"outcome", campaign_state_name(c.state)},
              {"raised", to_string(raised)}},
             now);
  return c.state;
}

Result<Amount> CampaignBook::refund(const std::string& campaign_id,
                                    const AccountId& contributor, Ledger& ledger,
                                    EventLog& log, Timestamp now) {
  const auto it = campaigns_.find(campaign_id);
  if (it == campaigns_.end()) {
    return make_error(Errc::unknown_campaign, "unknown campaign: " + campaign_id);
  }
  Campaign& c = it->second;
  // Deadline guard first, exactly as the escrow contract orders its checks.
  if (now < c.deadline) {
    return make_error(Errc::funding_still_active, "Funding period still active");
  }
  if (c.state != CampaignState::failed) {
    return make_error(Errc::campaign_not_failed,
                      std::string("campaign is ") + campaign_state_name(c.state));
  }
  const auto contribution = c.contributions.find(contributor);
  if (contribution == c.contributions.end() || contribution->second.is_zero()) {
    return make_error(Errc::nothing_to_refund, "no contribution to refund");
  }
  const Amount amount = contribution->second;
  // Zero the contribution before the transfer (checks-effects-interactions).
  contribution->second = Amount{};
  if (auto moved = ledger.move(c.escrow_account, contributor, amount); !moved.ok()) {
    contribution->second = amount;
    return moved.error();
  }
  c.total_refunded = Amount{c.total_refunded.minor + amount.minor};
  log.append("REFUND",
             {{"campaign", c.id},
              {"contributor", contributor},
              {"amount", to_string(amount)}},
             now);
  return amount;
}

Result<uint32_t> CampaignBook::approve_milestone(const std::string& campaign_id,
                                                 size_t milestone_index,
                                                 const AccountId& validator,
                                                 EventLog& log, Timestamp now) {
  const auto it = campaigns_.find(campaign_id);
  if (it == campaigns_.end()) {
    return make_error(Errc::unknown_campaign, "unknown campaign: " + campaign_id);
  }
  Campaign& c = it->second;
  if (milestone_index >= c.milestones.size()) {
    return make_error(Errc::unknown_milestone, "no such milestone");
  }
  Milestone& m = c.milestones[milestone_index];
  if (c.state != CampaignState::funded) {
    if (m.status == MilestoneStatus::disbursed) {
      return make_error(Errc::already_disbursed, "milestone already disbursed");
    }
    return make_error(Errc::campaign_not_funded,
                      std::string("campaign is ") + campaign_state_name(c.state));
  }
  if (!c.validators.count(validator)) {
    return make_error(Errc::not_validator, validator + " is not a campaign validator");
  }
  if (m.status == MilestoneStatus::disbursed) {
    return make_error(Errc::already_disbursed, "milestone already disbursed");
  }
  if (milestone_index != c.next_milestone) {
    return make_error(Errc::out_of_order, "milestones complete strictly in order");
  }

  const bool inserted = m.approvals.insert(validator).second;
  if (m.status == MilestoneStatus::pending &&
      m.approvals.size() >= c.required_approvals) {
    m.status = MilestoneStatus::approved;
  }
  if (inserted) {
    log.append("APPROVE",
               {{"campaign", c.id},
                {"milestone", std::to_string(milestone_index)},
                {"validator", validator},
                {"approvals", std::to_string(m.approvals.size())}},
               now);
  }
  return uint32_t(m.approvals.size());
}

Result<Amount> CampaignBook::disburse_milestone(const std::string& campaign_id,
                                                size_t milestone_index, Ledger& ledger,
                                                EventLog& log, Timestamp now) {
  const auto it = campaigns_.find(campaign_id);
  if (it == campaigns_.end()) {
    return make_error(Errc::unknown_campaign, "unknown campaign: " + campaign_id);
  }
  Campaign& c = it->second;
  if (milestone_index >= c.milestones.size()) {
    return make_error(Errc::unknown_milestone, "no such milestone");
  }
  Milestone& m = c.milestones[milestone_index];
  if (c.state != CampaignState::funded) {
    if (m.status == MilestoneStatus::disbursed) {
      return make_error(Errc::already_disbursed, "milestone already disbursed");
    }
    return make_error(Errc::campaign_not_funded,
                      std::string("campaign is ") + campaign_state_name(c.state));
  }
  if (m.status == MilestoneStatus::disbursed) {
    return make_error(Errc::already_disbursed, "milestone already disbursed");
  }
  if (milestone_index != c.next_milestone) {
    return make_error(Errc::out_of_order, "milestones disburse strictly in order");
  }
  if (m.status != MilestoneStatus::approved) {
    return make_error(Errc::not_approved,
                      std::to_string(m.approvals.size()) + " of " +
                          std::to_string(c.required_approvals) + " approvals");
  }

  const bool last = milestone_index + 1 == c.milestones.size();
  Amount release;
  if (last) {
    // The final milestone drains the escrow exactly, absorbing rounding dust.
    auto escrow = ledger.balance(c.escrow_account);
    if (!escrow.ok()) return escrow.error();
    release = escrow.value();
  } else {
    release = fee_floor(c.total_raised_net, m.release_bps);
  }
  if (auto moved = ledger.move(c.escrow_account, c.owner, release); !moved.ok()) {
    return moved.error();
  }
  m.status = MilestoneStatus::disbursed;
  c.next_milestone = milestone_index + 1;
  c.total_disbursed = Amount{c.total_disbursed.minor + release.minor};
  if (last) c.state = CampaignState::completed;
  log.append("DISBURSE",
             {{"campaign", c.id},
              {"milestone", std::to_string(milestone_index)},
              {"amount", to_string(release)}},
             now);
  return release;
}

const Campaign* CampaignBook::find(const std::string& campaign_id) const {
  const auto it = campaigns_.find(campaign_id);
  return it == campaigns_.end() ? nullptr : &it->second;
}

bool CampaignBook::has_campaign(const std::string& campaign_id) const {
  return campaigns_.count(campaign_id) != 0;
}

Result<Amount> CampaignBook::escrow_balance(const std::string& campaign_id,
                                            const Ledger& ledger) const {
  const Campaign* c = find(campaign_id);
  if (!c) return make_error(Errc::unknown_campaign, "unknown campaign: " + campaign_id);
  return ledger.balance(c->escrow_account);
}

Result<void> CampaignBook::check_escrow_identity(const Ledger& ledger) const {
  for (const auto& [id, c] : campaigns_) {
    const auto escrow = ledger.balance(c.escrow_account);
    if (!escrow.ok()) return escrow.error();
    const uint64_t expected =
        c.total_contributed_net.minor - c.total_refunded.minor - c.total_disbursed.minor;
    if (escrow.value().minor != expected) {
      return make_error(Errc::invalid_argument,
                        "escrow identity violated for campaign " + id + ": have " +
                            to_string(escrow.value()) + ", expected " +
                            to_string(Amount{expected}));
    }
  }
  return {};
}

}  // namespace chainfund
