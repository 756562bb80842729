#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "chainfund/amount.hpp"
#include "chainfund/errors.hpp"
#include "chainfund/event_log.hpp"
#include "chainfund/ledger.hpp"

namespace chainfund {

enum class TokenKind { equity, reward, hybrid };

const char* token_kind_name(TokenKind k);
std::optional<TokenKind> token_kind_from_name(const std::string& name);

struct TokenClass {
  std::string campaign_id;
  TokenKind kind = TokenKind::equity;
  uint64_t total_supply = 0;  // indivisible units, fixed at creation
};

struct CapTable {
  std::string campaign_id;
  std::map<AccountId, uint64_t> holdings;
};

// Largest-remainder (Hamilton) apportionment: each holder gets
// floor(supply * contribution / total), then the leftover units go one each
// to the largest fractional remainders, ties broken by AccountId byte order.
// Pure function; requires a positive contribution total.
std::map<AccountId, uint64_t> allocate_largest_remainder(
    const std::map<AccountId, Amount>& contributions, uint64_t total_supply);

class TokenRegistry {
 public:
  // Exactly one token class per campaign; supply must be positive.
  Result<void> define_token(const std::string& campaign_id, TokenKind kind,
                            uint64_t total_supply, EventLog& log, Timestamp now);

  bool has_class(const std::string& campaign_id) const;
  const TokenClass* token_class(const std::string& campaign_id) const;

  // Runs the apportionment over the given contributions and freezes the cap
  // table. Called by the engine when a campaign transitions to Funded.
  Result<void> allocate(const std::string& campaign_id,
                        const std::map<AccountId, Amount>& contributions,
                        EventLog& log, Timestamp now);

  bool has_allocation(const std::string& campaign_id) const;
  const CapTable* cap_table(const std::string& campaign_id) const;

  Result<uint64_t> token_balance(const std::string& campaign_id,
                                 const AccountId& holder) const;

  // Market settlement hook; the TRADE event records the change. from == to is
  // validated and then a no-op.
  Result<void> move_tokens(const std::string& campaign_id, const AccountId& from,
                           const AccountId& to, uint64_t quantity);

  // "account,units" CSV sorted by AccountId; golden-fixture format.
  Result<std::string> captable_csv(const std::string& campaign_id) const;

  const std::map<std::string, TokenClass>& classes() const { return classes_; }
  const std::map<std::string, CapTable>& cap_tables() const { return cap_tables_; }

 private:
  std::map<std::string, TokenClass> classes_;
  std::map<std::string, CapTable> cap_tables_;
};

}  // namespace chainfund
