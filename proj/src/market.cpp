#include "chainfund/market.hpp"

#include <algorithm>
#include <cassert>

namespace chainfund {

namespace {
using uint128 = unsigned __int128;
}

const char* side_name(Side s) { return s == Side::buy ? "buy" : "sell"; }

const char* order_status_name(OrderStatus s) {
  switch (s) {
    case OrderStatus::open: return "open";
    case OrderStatus::partially_filled: return "partially_filled";
    case OrderStatus::filled: return "filled";
    case OrderStatus::cancelled: return "cancelled";
  }
  return "open";
}

Amount trade_cash_value(uint64_t quantity, Amount price) {
  const uint128 product = uint128(quantity) * price.minor;
  return Amount{uint64_t(product / Amount::kScale)};
}

Result<PlaceOutcome> Market::place_order(const std::string& campaign_id, Side side,
                                         const AccountId& trader, uint64_t quantity,
                                         Amount limit_price, Ledger& ledger,
                                         TokenRegistry& tokens,
                                         const Compliance& compliance, EventLog& log,
                                         Timestamp now) {
  if (!tokens.has_allocation(campaign_id)) {
    return make_error(Errc::no_allocation, "no allocated tokens for " + campaign_id);
  }
  if (!ledger.has_account(trader)) {
    return make_error(Errc::unknown_account, "unknown account: " + trader);
  }
  if (quantity == 0) {
    return make_error(Errc::invalid_argument, "quantity must be positive");
  }
  if (limit_price.is_zero()) {
    return make_error(Errc::invalid_argument, "limit price must be positive");
  }

  // Buy orders are gated on the coin value they may spend; sells move no
  // coins in and reuse the gate for the bar/jurisdiction checks only.
  const Amount cash_needed =
      side == Side::buy ? trade_cash_value(quantity, limit_price) : Amount{};
  const GateDecision gate = compliance.check_gate(trader, GateAction::contribute(cash_needed));
  if (!gate.allowed) {
    return make_error(Errc::gate_denied,
                      std::string("trader denied by gate: ") + gate.reason_name());
  }

  // Reserve before matching; fills spend out of the reservation.
  if (side == Side::buy) {
    const auto balance = ledger.balance(trader);
    if (!balance.ok()) return balance.error();
    const Amount reserved = cash_reserved(trader);
    if (balance.value().minor - reserved.minor < cash_needed.minor) {
      return make_error(Errc::insufficient_funds,
                        "free balance below " + to_string(cash_needed));
    }
    cash_reserved_[trader] = Amount{reserved.minor + cash_needed.minor};
  } else {
    const auto holding = tokens.token_balance(campaign_id, trader);
    if (!holding.ok()) return holding.error();
    const uint64_t reserved = tokens_reserved(campaign_id, trader);
    if (holding.value() - reserved < quantity) {
      return make_error(Errc::insufficient_tokens,
                        "free tokens below " + std::to_string(quantity));
    }
    tokens_reserved_[campaign_id][trader] = reserved + quantity;
  }

  Order order;
  order.id = next_order_id_++;
  order.campaign_id = campaign_id;
  order.side = side;
  order.trader = trader;
  order.quantity = quantity;
  order.quantity_initial = quantity;
  order.limit_price = limit_price;
  order.placed_at = now;
  order.status = OrderStatus::open;
  order.cash_reserved = cash_needed;

  log.append("ORDER",
             {{"campaign", campaign_id},
              {"order_id", std::to_string(order.id)},
              {"side", side_name(side)},
              {"trader", trader},
              {"quantity", std::to_string(quantity)},
              {"limit_price", to_string(limit_price)}},
             now);

  PlaceOutcome outcome;
  outcome.order_id = order.id;

  Book& book = book_for(campaign_id);
  LevelMap& opposite = side == Side::buy ? book.asks : book.bids;

  while (order.quantity > 0 && !opposite.empty()) {
    // Best opposite level: lowest ask for an incoming buy, highest bid for
    // an incoming sell. Within a level the front order has time priority.
    const auto level_it =
        side == Side::buy ? opposite.begin() : std::prev(opposite.end());
    const Amount level_price{level_it->first};
    const bool compatible = side == Side::buy ? level_price <= limit_price
                                              : level_price >= limit_price;
    if (!compatible) break;

    const uint64_t resting_id = level_it->second.front();
    Order& resting = orders_.at(resting_id);
    const uint64_t fill = std::min(order.quantity, resting.quantity);
    const Amount price = resting.limit_price;  // execution at the resting limit
    const Amount cash = trade_cash_value(fill, price);

    Order& buy_side = side == Side::buy ? order : resting;
    Order& sell_side = side == Side::buy ? resting : order;

    // Settlement: coins buyer -> seller, tokens seller -> buyer, atomic with
    // the trade record. The TRADE event is the ledger entry for both moves.
    {
      auto moved = ledger.move(buy_side.trader, sell_side.trader, cash);
      assert(moved.ok());
      (void)moved;
      auto tokens_moved =
          tokens.move_tokens(campaign_id, sell_side.trader, buy_side.trader, fill);
      assert(tokens_moved.ok());
      (void)tokens_moved;
    }

    // Buyer reservation: spend the cash, then shrink to what the remaining
    // quantity still needs at the buyer's own limit (executions at better
    // prices release the difference immediately).
    {
      const Amount still_needed =
          trade_cash_value(buy_side.quantity - fill, buy_side.limit_price);
      const uint64_t released = buy_side.cash_reserved.minor - cash.minor - still_needed.minor;
      auto& total = cash_reserved_[buy_side.trader];
      total = Amount{total.minor - cash.minor - released};
      buy_side.cash_reserved = still_needed;
    }
    {
      auto& reserved = tokens_reserved_[campaign_id][sell_side.trader];
      reserved -= fill;
    }

    order.quantity -= fill;
    resting.quantity -= fill;

    Trade trade;
    trade.id = next_trade_id_++;
    trade.campaign_id = campaign_id;
    trade.buy_order_id = buy_side.id;
    trade.sell_order_id = sell_side.id;
    trade.quantity = fill;
    trade.price = price;
    trade.cash = cash;
    trade.executed_at = now;
    log.append("TRADE",
               {{"campaign", campaign_id},
                {"trade_id", std::to_string(trade.id)},
                {"buy_order", std::to_string(trade.buy_order_id)},
                {"sell_order", std::to_string(trade.sell_order_id)},
                {"quantity", std::to_string(fill)},
                {"price", to_string(price)},
                {"cash", to_string(cash)}},
               now);
    trades_.push_back(trade);
    outcome.trades.push_back(std::move(trade));

    if (resting.quantity == 0) {
      resting.status = OrderStatus::filled;
      level_it->second.erase(level_it->second.begin());
      if (level_it->second.empty()) opposite.erase(level_it);
    } else {
      resting.status = OrderStatus::partially_filled;
    }
  }

  if (order.quantity == 0) {
    order.status = OrderStatus::filled;
  } else if (order.quantity < order.quantity_initial) {
    order.status = OrderStatus::partially_filled;
  }
  if (order.quantity > 0) {
    LevelMap& own = side == Side::buy ? book.bids : book.asks;
    own[order.limit_price.minor].push_back(order.id);
  }
  outcome.status = order.status;
  orders_.emplace(order.id, std::move(order));
  return outcome;
}

Result<void> Market::cancel_order(uint64_t order_id, const AccountId& trader,
                                  EventLog& log, Timestamp now) {
  const auto it = orders_.find(order_id);
  if (it == orders_.end()) {
    return make_error(Errc::unknown_order, "unknown order: " + std::to_string(order_id));
  }
  Order& order = it->second;
  if (order.trader != trader) {
    return make_error(Errc::not_owner, trader + " does not own this order");
  }
  if (order.status != OrderStatus::open && order.status != OrderStatus::partially_filled) {
    return make_error(Errc::already_closed,
                      std::string("order is ") + order_status_name(order.status));
  }

  Book& book = book_for(order.campaign_id);
  remove_from_level(order.side == Side::buy ? book.bids : book.asks,
                    order.limit_price.minor, order.id);

  if (order.side == Side::buy) {
    auto& total = cash_reserved_[order.trader];
    total = Amount{total.minor - order.cash_reserved.minor};
    order.cash_reserved = Amount{};
  } else {
    tokens_reserved_[order.campaign_id][order.trader] -= order.quantity;
  }
  order.status = OrderStatus::cancelled;
  log.append("CANCEL",
             {{"campaign", order.campaign_id}, {"order_id", std::to_string(order.id)}},
             now);
  return {};
}

void Market::remove_from_level(LevelMap& levels, uint64_t price, uint64_t order_id) {
  const auto level_it = levels.find(price);
  if (level_it == levels.end()) return;
  auto& ids = level_it->second;
  ids.erase(std::remove(ids.begin(), ids.end(), order_id), ids.end());
  if (ids.empty()) levels.erase(level_it);
}

BookSnapshot Market::snapshot(const std::string& campaign_id) const {
  BookSnapshot snap;
  const auto book_it = books_.find(campaign_id);
  if (book_it == books_.end()) return snap;
  const auto aggregate = [&](const LevelMap& levels, std::vector<BookLevel>& out) {
    for (const auto& [price, ids] : levels) {
      uint64_t total = 0;
      for (uint64_t id : ids) total += orders_.at(id).quantity;
      out.push_back(BookLevel{Amount{price}, total});
    }
  };
  aggregate(book_it->second.bids, snap.bids);
  std::reverse(snap.bids.begin(), snap.bids.end());  // best (highest) first
  aggregate(book_it->second.asks, snap.asks);
  return snap;
}

std::vector<const Order*> Market::open_orders(const std::string& campaign_id) const {
  std::vector<const Order*> out;
  for (const auto& [id, order] : orders_) {
    if (order.campaign_id != campaign_id) continue;
    if (order.status == OrderStatus::open || order.status == OrderStatus::partially_filled) {
      out.push_back(&order);
    }
  }
  return out;
}

Amount Market::cash_reserved(const AccountId& trader) const {
  const auto it = cash_reserved_.find(trader);
  return it == cash_reserved_.end() ? Amount{} : it->second;
}

uint64_t Market::tokens_reserved(const std::string& campaign_id,
                                 const AccountId& trader) const {
  const auto campaign_it = tokens_reserved_.find(campaign_id);
  if (campaign_it == tokens_reserved_.end()) return 0;
  const auto it = campaign_it->second.find(trader);
  return it == campaign_it->second.end() ? 0 : it->second;
}

Result<void> Market::check_integrity(const Ledger& ledger,
                                     const TokenRegistry& tokens) const {
  const auto fail = [](const std::string& why) {
    return make_error(Errc::invalid_argument, "market integrity: " + why);
  };

  // Per-order reservations must add up to the per-trader totals.
  std::map<AccountId, uint64_t> cash_by_trader;
  std::map<std::string, std::map<AccountId, uint64_t>> tokens_by_trader;
  for (const auto& [id, order] : orders_) {
    const bool resting =
        order.status == OrderStatus::open || order.status == OrderStatus::partially_filled;
    if (!resting) continue;
    if (order.side == Side::buy) {
      cash_by_trader[order.trader] += order.cash_reserved.minor;
    } else {
      tokens_by_trader[order.campaign_id][order.trader] += order.quantity;
    }
  }
  for (const auto& [trader, total] : cash_reserved_) {
    if (cash_by_trader[trader] != total.minor) {
      return fail("cash reservation total mismatch for " + trader);
    }
    const auto balance = ledger.balance(trader);
    if (!balance.ok() || balance.value().minor < total.minor) {
      return fail("reserved cash exceeds balance for " + trader);
    }
  }
  for (const auto& [trader, total] : cash_by_trader) {
    if (cash_reserved(trader).minor != total) {
      return fail("untracked cash reservation for " + trader);
    }
  }
  for (const auto& [campaign_id, by_trader] : tokens_reserved_) {
    for (const auto& [trader, total] : by_trader) {
      if (tokens_by_trader[campaign_id][trader] != total) {
        return fail("token reservation total mismatch for " + trader);
      }
      const auto holding = tokens.token_balance(campaign_id, trader);
      if (!holding.ok() || holding.value() < total) {
        return fail("reserved tokens exceed holdings for " + trader);
      }
    }
  }
  for (const auto& [campaign_id, by_trader] : tokens_by_trader) {
    for (const auto& [trader, total] : by_trader) {
      if (tokens_reserved(campaign_id, trader) != total) {
        return fail("untracked token reservation for " + trader);
      }
    }
  }

  // No crossing: whenever both sides exist, best bid strictly below best ask.
  for (const auto& [campaign_id, book] : books_) {
    if (book.bids.empty() || book.asks.empty()) continue;
    const uint64_t best_bid = book.bids.rbegin()->first;
    const uint64_t best_ask = book.asks.begin()->first;
    if (best_bid >= best_ask) {
      return fail("book crossed for campaign " + campaign_id);
    }
  }
  return {};
}

}  // namespace chainfund
