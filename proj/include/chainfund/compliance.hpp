#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "chainfund/amount.hpp"
#include "chainfund/errors.hpp"
#include "chainfund/event_log.hpp"
#include "chainfund/ledger.hpp"

namespace chainfund {

enum class KycStatus { unverified, verified, barred };

const char* kyc_status_name(KycStatus s);
std::optional<KycStatus> kyc_status_from_name(const std::string& name);

struct IdentityRecord {
  KycStatus status = KycStatus::unverified;
  std::string jurisdiction = "ZZ";  // unassigned; falls through to default rule
  std::optional<Timestamp> verified_at;
};

struct JurisdictionRule {
  std::string jurisdiction;                // 2-letter code
  Amount max_unverified_contribution{};    // 0 = KYC always required
  bool allowed = true;
};

struct GateAction {
  enum class Kind { create_campaign, contribute } kind;
  Amount amount{};  // attempted gross amount; meaningful for contribute only

  static GateAction create_campaign() { return {Kind::create_campaign, Amount{}}; }
  static GateAction contribute(Amount amount) { return {Kind::contribute, amount}; }
};

struct GateDecision {
  enum class Reason { none, barred, jurisdiction_disallowed, kyc_required };
  bool allowed = true;
  Reason reason = Reason::none;

  const char* reason_name() const;
};

struct ComplianceEntry {
  uint64_t seq = 0;
  AccountId account;
  std::string kind;   // event kind, CREATE_CAMPAIGN or CONTRIBUTE
  Amount amount{};    // goal for creations, gross amount for contributions
};

struct ComplianceReport {
  Timestamp generated_at = 0;
  Timestamp from = 0;
  Timestamp to = 0;
  std::vector<ComplianceEntry> entries;
};

// KYC/AML registry and the participation gate applied before any campaign
// creation or contribution. Identity verification itself is simulated: a
// scenario command sets the status.
class Compliance {
 public:
  // Legal status updates: unverified -> {unverified, verified, barred} and
  // verified -> {verified, barred}. barred is terminal. Same-status updates
  // re-assign the jurisdiction; verified_at is stamped on the first
  // transition into verified.
  Result<void> set_kyc_status(const AccountId& account, KycStatus status,
                              const std::string& jurisdiction,
                              const Ledger& ledger, EventLog& log, Timestamp now);

  // At most one rule per jurisdiction; replaces any existing rule.
  void set_jurisdiction_rule(JurisdictionRule rule);

  // Accounts with no record are unverified in the default jurisdiction.
  IdentityRecord identity(const AccountId& account) const;
  const JurisdictionRule& rule_for(const std::string& jurisdiction) const;

  GateDecision check_gate(const AccountId& account, const GateAction& action) const;

  // Deterministic pure function of (log, window); window ends inclusive.
  Result<ComplianceReport> generate_report(Timestamp from, Timestamp to,
                                           const EventLog& log, Timestamp now) const;

  const std::map<AccountId, IdentityRecord>& identities() const { return identities_; }
  const std::map<std::string, JurisdictionRule>& rules() const { return rules_; }
  const JurisdictionRule& default_rule() const { return default_rule_; }

 private:
  std::map<AccountId, IdentityRecord> identities_;
  std::map<std::string, JurisdictionRule> rules_;
  // Default: participation allowed but KYC required for every action.
  JurisdictionRule default_rule_{"*", Amount{0}, true};
};

}  // namespace chainfund
