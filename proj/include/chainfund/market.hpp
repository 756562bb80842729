#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "chainfund/amount.hpp"
#include "chainfund/compliance.hpp"
#include "chainfund/errors.hpp"
#include "chainfund/event_log.hpp"
#include "chainfund/ledger.hpp"
#include "chainfund/tokenization.hpp"

namespace chainfund {

enum class Side { buy, sell };
enum class OrderStatus { open, partially_filled, filled, cancelled };

const char* side_name(Side s);
const char* order_status_name(OrderStatus s);

struct Order {
  uint64_t id = 0;  // sequence-assigned, starting at 1
  std::string campaign_id;
  Side side = Side::buy;
  AccountId trader;
  uint64_t quantity = 0;          // remaining token units
  uint64_t quantity_initial = 0;
  Amount limit_price{};           // coin minor units per whole (1e6-unit) token
  Timestamp placed_at = 0;
  OrderStatus status = OrderStatus::open;
  Amount cash_reserved{};         // buy orders only: remaining reservation
};

struct Trade {
  uint64_t id = 0;
  std::string campaign_id;
  uint64_t buy_order_id = 0;
  uint64_t sell_order_id = 0;
  uint64_t quantity = 0;
  Amount price{};        // resting order's limit
  Amount cash{};         // floor(quantity * price / 1,000,000)
  Timestamp executed_at = 0;
};

struct BookLevel {
  Amount price{};
  uint64_t quantity = 0;
};

struct BookSnapshot {
  std::vector<BookLevel> bids;  // descending price
  std::vector<BookLevel> asks;  // ascending price
};

struct PlaceOutcome {
  uint64_t order_id = 0;
  std::vector<Trade> trades;
  OrderStatus status = OrderStatus::open;
};

// Cash value of a fill; dust from flooring favors the buyer.
Amount trade_cash_value(uint64_t quantity, Amount price);

// Continuous double auction per campaign: price-time priority, execution at
// the resting order's limit, stablecoin settlement against the ledger.
// Sell orders are backed by reserved tokens, buy orders by reserved coins.
class Market {
 public:
  Result<PlaceOutcome> place_order(const std::string& campaign_id, Side side,
                                   const AccountId& trader, uint64_t quantity,
                                   Amount limit_price, Ledger& ledger,
                                   TokenRegistry& tokens, const Compliance& compliance,
                                   EventLog& log, Timestamp now);

  Result<void> cancel_order(uint64_t order_id, const AccountId& trader,
                            EventLog& log, Timestamp now);

  // Aggregated by price; pure query.
  BookSnapshot snapshot(const std::string& campaign_id) const;

  // Resting (open / partially filled) orders of one campaign, by order id.
  std::vector<const Order*> open_orders(const std::string& campaign_id) const;

  const std::map<uint64_t, Order>& orders() const { return orders_; }
  const std::vector<Trade>& trades() const { return trades_; }

  Amount cash_reserved(const AccountId& trader) const;
  uint64_t tokens_reserved(const std::string& campaign_id, const AccountId& trader) const;

  // Reservation safety: per-order reservations add up to the per-trader
  // totals and never exceed ledger balances / token holdings. Also checks
  // that no book is crossed.
  Result<void> check_integrity(const Ledger& ledger, const TokenRegistry& tokens) const;

 private:
  // price level -> order ids in arrival order (ids grow with time, so vector
  // order is time priority)
  using LevelMap = std::map<uint64_t, std::vector<uint64_t>>;
  struct Book {
    LevelMap bids;
    LevelMap asks;
  };

  Book& book_for(const std::string& campaign_id) { return books_[campaign_id]; }
  void remove_from_level(LevelMap& levels, uint64_t price, uint64_t order_id);

  std::map<std::string, Book> books_;
  std::map<uint64_t, Order> orders_;
  std::vector<Trade> trades_;
  std::map<AccountId, Amount> cash_reserved_;
  std::map<std::string, std::map<AccountId, uint64_t>> tokens_reserved_;
  uint64_t next_order_id_ = 1;
  uint64_t next_trade_id_ = 1;
};

}  // namespace chainfund
