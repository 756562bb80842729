#include "chainfund/compliance.hpp"

namespace chainfund {

const char* kyc_status_name(KycStatus s) {
  switch (s) {
    case KycStatus::unverified: return "unverified";
    case KycStatus::verified: return "verified";
    case KycStatus::barred: return "barred";
  }
  return "unverified";
}

std::optional<KycStatus> kyc_status_from_name(const std::string& name) {
  if (name == "unverified") return KycStatus::unverified;
  if (name == "verified") return KycStatus::verified;
  if (name == "barred") return KycStatus::barred;
  return std::nullopt;
}

const char* GateDecision::reason_name() const {
  switch (reason) {
    case Reason::none: return "None";
    case Reason::barred: return "Barred";
    case Reason::jurisdiction_disallowed: return "JurisdictionDisallowed";
    case Reason::kyc_required: return "KycRequired";
  }
  return "None";
}

namespace {

bool transition_legal(KycStatus from, KycStatus to) {
  switch (from) {
    case KycStatus::unverified:
      return true;  // unverified -> anything (same-status updates set jurisdiction)
    case KycStatus::verified:
      return to == KycStatus::verified || to == KycStatus::barred;
    case KycStatus::barred:
      return false;  // terminal
  }
  return false;
}

}  // namespace

Result<void> Compliance::set_kyc_status(const AccountId& account, KycStatus status,
                                        const std::string& jurisdiction,
                                        const Ledger& ledger, EventLog& log,
                                        Timestamp now) {
  if (!ledger.has_account(account)) {
    return make_error(Errc::unknown_account, "unknown account: " + account);
  }
  IdentityRecord record = identity(account);
  if (!transition_legal(record.status, status)) {
    return make_error(Errc::illegal_transition,
                      std::string("illegal KYC transition ") +
                          kyc_status_name(record.status) + " -> " + kyc_status_name(status));
  }
  if (status == KycStatus::verified && record.status != KycStatus::verified) {
    record.verified_at = now;
  }
  record.status = status;
  record.jurisdiction = jurisdiction;
  identities_[account] = record;
  log.append("KYC",
             {{"account", account},
              {"status", kyc_status_name(status)},
              {"jurisdiction", jurisdiction}},
             now);
  return {};
}

void Compliance::set_jurisdiction_rule(JurisdictionRule rule) {
  rules_[rule.jurisdiction] = std::move(rule);
}

IdentityRecord Compliance::identity(const AccountId& account) const {
  const auto it = identities_.find(account);
  return it == identities_.end() ? IdentityRecord{} : it->second;
}

const JurisdictionRule& Compliance::rule_for(const std::string& jurisdiction) const {
  const auto it = rules_.find(jurisdiction);
  return it == rules_.end() ? default_rule_ : it->second;
}

GateDecision Compliance::check_gate(const AccountId& account,
                                    const GateAction& action) const {
  const IdentityRecord record = identity(account);
  const JurisdictionRule& rule = rule_for(record.jurisdiction);

  if (record.status == KycStatus::barred) {
    return {false, GateDecision::Reason::barred};
  }
  if (!rule.allowed) {
    return {false, GateDecision::Reason::jurisdiction_disallowed};
  }
  if (record.status == KycStatus::unverified) {
    if (action.kind == GateAction::Kind::create_campaign) {
      return {false, GateDecision::Reason::kyc_required};
    }
    if (action.amount > rule.max_unverified_contribution) {
      return {false, GateDecision::Reason::kyc_required};
    }
  }
  return {};
}

Result<ComplianceReport> Compliance::generate_report(Timestamp from, Timestamp to,
                                                     const EventLog& log,
                                                     Timestamp now) const {
  if (from > to) {
    return make_error(Errc::invalid_window, "report window from > to");
  }
  ComplianceReport report;
  report.generated_at = now;
  report.from = from;
  report.to = to;
  for (const EventRecord& r : log.records()) {
    if (r.timestamp < from || r.timestamp > to) continue;
    if (r.kind != "CREATE_CAMPAIGN" && r.kind != "CONTRIBUTE") continue;
    ComplianceEntry entry;
    entry.seq = r.seq;
    entry.kind = r.kind;
    for (const auto& [key, value] : r.payload) {
      if ((r.kind == "CREATE_CAMPAIGN" && key == "owner") ||
          (r.kind == "CONTRIBUTE" && key == "contributor")) {
        entry.account = value;
      }
      if ((r.kind == "CREATE_CAMPAIGN" && key == "goal") ||
          (r.kind == "CONTRIBUTE" && key == "amount")) {
        if (auto parsed = parse_amount(value); parsed.ok()) {
          entry.amount = parsed.value();
        }
      }
    }
    report.entries.push_back(std::move(entry));
  }
  return report;
}

}  // namespace chainfund
