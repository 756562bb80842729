#include "chainfund/errors.hpp"

namespace chainfund {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::duplicate_account: return "DuplicateAccount";
    case Errc::invalid_id: return "InvalidId";
    case Errc::unknown_account: return "UnknownAccount";
    case Errc::zero_amount: return "ZeroAmount";
    case Errc::insufficient_funds: return "InsufficientFunds";
    case Errc::self_transfer: return "SelfTransfer";
    case Errc::invalid_fee: return "InvalidFee";
    case Errc::overflow: return "Overflow";
    case Errc::illegal_transition: return "IllegalTransition";
    case Errc::invalid_window: return "InvalidWindow";
    case Errc::gate_denied: return "GateDenied";
    case Errc::bad_milestone_schedule: return "BadMilestoneSchedule";
    case Errc::past_deadline: return "PastDeadline";
    case Errc::duplicate_campaign: return "DuplicateCampaign";
    case Errc::unknown_campaign: return "UnknownCampaign";
    case Errc::campaign_not_active: return "CampaignNotActive";
    case Errc::deadline_passed: return "DeadlinePassed";
    case Errc::too_early: return "TooEarly";
    case Errc::already_finalized: return "AlreadyFinalized";
    case Errc::funding_still_active: return "FundingStillActive";
    case Errc::campaign_not_failed: return "CampaignNotFailed";
    case Errc::nothing_to_refund: return "NothingToRefund";
    case Errc::not_validator: return "NotValidator";
    case Errc::unknown_milestone: return "UnknownMilestone";
    case Errc::out_of_order: return "OutOfOrder";
    case Errc::already_disbursed: return "AlreadyDisbursed";
    case Errc::not_approved: return "NotApproved";
    case Errc::campaign_not_funded: return "CampaignNotFunded";
    case Errc::duplicate_token_class: return "DuplicateTokenClass";
    case Errc::no_token_class: return "NoTokenClass";
    case Errc::no_allocation: return "NoAllocation";
    case Errc::insufficient_tokens: return "InsufficientTokens";
    case Errc::unknown_order: return "UnknownOrder";
    case Errc::not_owner: return "NotOwner";
    case Errc::already_closed: return "AlreadyClosed";
    case Errc::malformed_scenario: return "MalformedScenario";
    case Errc::invalid_argument: return "InvalidArgument";
  }
  return "UnknownError";
}

}  // namespace chainfund
