#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "chainfund/amount.hpp"
#include "chainfund/compliance.hpp"
#include "chainfund/errors.hpp"
#include "chainfund/event_log.hpp"
#include "chainfund/ledger.hpp"

namespace chainfund {

enum class CampaignState { active, funded, failed, completed };
enum class MilestoneStatus { pending, approved, disbursed };

const char* campaign_state_name(CampaignState s);
const char* milestone_status_name(MilestoneStatus s);

struct Milestone {
  uint32_t release_bps = 0;           // fraction of total raised, in bps
  MilestoneStatus status = MilestoneStatus::pending;
  std::set<AccountId> approvals;      // subset of campaign validators
};

struct CampaignConfig {
  std::string id;
  AccountId owner;
  Amount goal{};
  Timestamp deadline = 0;
  uint32_t fee_bps = 0;                    // platform fee on contributions
  std::vector<uint32_t> milestone_bps;     // must sum to exactly 10,000
  std::vector<AccountId> validators;       // N designated accounts
  uint32_t required_approvals = 0;         // M, with N >= M >= 1
};

struct Campaign {
  std::string id;
  AccountId owner;
  Amount goal{};
  Timestamp deadline = 0;
  CampaignState state = CampaignState::active;
  uint32_t fee_bps = 0;
  std::map<AccountId, Amount> contributions;  // net amounts, zeroed on refund
  std::vector<Milestone> milestones;
  std::set<AccountId> validators;
  uint32_t required_approvals = 0;
  AccountId escrow_account;

  Amount total_raised_net{};       // frozen at finalize
  Amount total_contributed_net{};  // cumulative, never reduced
  Amount total_refunded{};
  Amount total_disbursed{};
  size_t next_milestone = 0;       // first index not yet disbursed
};

// Campaign lifecycle state machine: creation, funding window, goal
// evaluation, escrow, milestone-gated multisig disbursement and refunds.
// Escrow funds live in a dedicated ledger account per campaign; the ledger
// account balance is the single source of truth for escrow_balance.
class CampaignBook {
 public:
  Result<void> create(const CampaignConfig& config, Ledger& ledger,
                      const Compliance& compliance, EventLog& log, Timestamp now);

  // Debits the contributor by the gross amount, routes the platform fee to
  // fee_sink and credits the remainder to campaign escrow.
  Result<Amount> contribute(const std::string& campaign_id,
                            const AccountId& contributor, Amount amount,
                            const AccountId& fee_sink, Ledger& ledger,
                            const Compliance& compliance, EventLog& log,
                            Timestamp now);

  // Active -> Funded | Failed once the deadline has passed. Goal comparison
  // is inclusive. Token allocation on Funded is wired by the engine.
  Result<CampaignState> finalize(const std::string& campaign_id, EventLog& log,
                                 Timestamp now);

  // Refund semantics mirror the escrow contract: deadline guard first (with
  // its message), contribution zeroed before the transfer, a second call
  // surfaces NothingToRefund. Requires the campaign to have Failed.
  Result<Amount> refund(const std::string& campaign_id, const AccountId& contributor,
                        Ledger& ledger, EventLog& log, Timestamp now);

  // Adds the validator's approval (idempotent per validator). Returns the
  // approval count; the milestone becomes Approved at required_approvals.
  Result<uint32_t> approve_milestone(const std::string& campaign_id,
                                     size_t milestone_index, const AccountId& validator,
                                     EventLog& log, Timestamp now);

  // Releases floor(total_raised * release_bps / 10,000) to the owner, except
  // the last milestone, which drains the remaining escrow exactly.
  Result<Amount> disburse_milestone(const std::string& campaign_id,
                                    size_t milestone_index, Ledger& ledger,
                                    EventLog& log, Timestamp now);

  const Campaign* find(const std::string& campaign_id) const;
  bool has_campaign(const std::string& campaign_id) const;
  const std::map<std::string, Campaign>& campaigns() const { return campaigns_; }

  Result<Amount> escrow_balance(const std::string& campaign_id,
                                const Ledger& ledger) const;

  // contributions in == refunds out + disbursements out + current escrow.
  Result<void> check_escrow_identity(const Ledger& ledger) const;

  static std::string escrow_account_for(const std::string& campaign_id);

 private:
  std::map<std::string, Campaign> campaigns_;
};

}  // namespace chainfund
