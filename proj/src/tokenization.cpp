#include "chainfund/tokenization.hpp"

#include <algorithm>

namespace chainfund {

namespace {
using uint128 = unsigned __int128;
}

const char* token_kind_name(TokenKind k) {
  switch (k) {
    case TokenKind::equity: return "equity";
    case TokenKind::reward: return "reward";
    case TokenKind::hybrid: return "hybrid";
  }
  return "equity";
}

std::optional<TokenKind> token_kind_from_name(const std::string& name) {
  if (name == "equity") return TokenKind::equity;
  if (name == "reward") return TokenKind::reward;
  if (name == "hybrid") return TokenKind::hybrid;
  return std::nullopt;
}

std::map<AccountId, uint64_t> allocate_largest_remainder(
    const std::map<AccountId, Amount>& contributions, uint64_t total_supply) {
  uint128 total = 0;
  for (const auto& [id, contribution] : contributions) {
    total += contribution.minor;
  }
  if (total == 0) return {};

  struct Quota {
    const AccountId* id;
    uint64_t base;
    uint128 remainder;  // numerator over `total`; same denominator for all
  };

  std::map<AccountId, uint64_t> holdings;
  std::vector<Quota> quotas;
  quotas.reserve(contributions.size());
  uint64_t assigned = 0;
  for (const auto& [id, contribution] : contributions) {
    const uint128 product = uint128(total_supply) * contribution.minor;
    Quota q{&id, uint64_t(product / total), product % total};
    assigned += q.base;
    holdings[id] = q.base;
    quotas.push_back(q);
  }

  uint64_t leftover = total_supply - assigned;
  std::sort(quotas.begin(), quotas.end(), [](const Quota& a, const Quota& b) {
    if (a.remainder != b.remainder) return a.remainder > b.remainder;
    return *a.id < *b.id;
  });
  for (size_t i = 0; i < quotas.size() && leftover > 0; ++i, --leftover) {
    holdings[*quotas[i].id] += 1;
  }
  return holdings;
}

Result<void> TokenRegistry::define_token(const std::string& campaign_id, TokenKind kind,
                                         uint64_t total_supply, EventLog& log,
                                         Timestamp now) {
  if (classes_.count(campaign_id)) {
    return make_error(Errc::duplicate_token_class,
                      "token class already defined for " + campaign_id);
  }
  if (total_supply == 0) {
    return make_error(Errc::invalid_argument, "total_supply must be positive");
  }
  classes_[campaign_id] = TokenClass{campaign_id, kind, total_supply};
  log.append("DEFINE_TOKEN",
             {{"campaign", campaign_id},
              {"kind", token_kind_name(kind)},
              {"supply", std::to_string(total_supply)}},
             now);
  return {};
}

bool TokenRegistry::has_class(const std::string& campaign_id) const {
  return classes_.count(campaign_id) != 0;
}

const TokenClass* TokenRegistry::token_class(const std::string& campaign_id) const {
  const auto it = classes_.find(campaign_id);
  return it == classes_.end() ? nullptr : &it->second;
}

Result<void> TokenRegistry::allocate(const std::string& campaign_id,
                                     const std::map<AccountId, Amount>& contributions,
                                     EventLog& log, Timestamp now) {
  const auto class_it = classes_.find(campaign_id);
  if (class_it == classes_.end()) {
    return make_error(Errc::no_token_class, "no token class for " + campaign_id);
  }
  if (cap_tables_.count(campaign_id)) {
    return make_error(Errc::invalid_argument, "already allocated for " + campaign_id);
  }
  uint128 total = 0;
  for (const auto& [id, contribution] : contributions) total += contribution.minor;
  if (total == 0) {
    return make_error(Errc::invalid_argument, "nothing contributed, nothing to allocate");
  }

  CapTable table;
  table.campaign_id = campaign_id;
  table.holdings =
      allocate_largest_remainder(contributions, class_it->second.total_supply);
  const size_t holders = table.holdings.size();
  cap_tables_[campaign_id] = std::move(table);
  log.append("ALLOCATE",
             {{"campaign", campaign_id},
              {"supply", std::to_string(class_it->second.total_supply)},
              {"holders", std::to_string(holders)}},
             now);
  return {};
}

bool TokenRegistry::has_allocation(const std::string& campaign_id) const {
  return cap_tables_.count(campaign_id) != 0;
}

const CapTable* TokenRegistry::cap_table(const std::string& campaign_id) const {
  const auto it = cap_tables_.find(campaign_id);
  return it == cap_tables_.end() ? nullptr : &it->second;
}

Result<uint64_t> TokenRegistry::token_balance(const std::string& campaign_id,
                                              const AccountId& holder) const {
  const auto it = cap_tables_.find(campaign_id);
  if (it == cap_tables_.end()) {
    return make_error(Errc::no_allocation, "no allocation for " + campaign_id);
  }
  const auto holding = it->second.holdings.find(holder);
  return holding == it->second.holdings.end() ? uint64_t(0) : holding->second;
}

Result<void> TokenRegistry::move_tokens(const std::string& campaign_id,
                                        const AccountId& from, const AccountId& to,
                                        uint64_t quantity) {
  const auto it = cap_tables_.find(campaign_id);
  if (it == cap_tables_.end()) {
    return make_error(Errc::no_allocation, "no allocation for " + campaign_id);
  }
  auto& holdings = it->second.holdings;
  const auto from_it = holdings.find(from);
  if (from_it == holdings.end() || from_it->second < quantity) {
    return make_error(Errc::insufficient_tokens, "holder " + from + " lacks tokens");
  }
  if (from == to) return {};
  from_it->second -= quantity;
  holdings[to] += quantity;
  return {};
}

Result<std::string> TokenRegistry::captable_csv(const std::string& campaign_id) const {
  const auto it = cap_tables_.find(campaign_id);
  if (it == cap_tables_.end()) {
    return make_error(Errc::no_allocation, "no allocation for " + campaign_id);
  }
  std::string out = "account,units\n";
  for (const auto& [account, units] : it->second.holdings) {
    out += account;
    out.push_back(',');
    out += std::to_string(units);
    out.push_back('\n');
  }
  return out;
}

}  // namespace chainfund
