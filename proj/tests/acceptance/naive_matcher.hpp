#pragma once

// Reference matching engine: keeps every resting order in one flat vector and
// rescans the whole book for the best counterparty on each fill. Slow and
// obviously correct; the production book must agree with it exactly.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace acceptance {

struct NaiveOrder {
  uint64_t id = 0;
  bool is_buy = false;
  std::string trader;
  uint64_t quantity = 0;
  uint64_t limit_price = 0;  // coin minor units per whole token
  uint64_t placed_at = 0;
};

struct NaiveTrade {
  uint64_t buy_order_id = 0;
  uint64_t sell_order_id = 0;
  uint64_t quantity = 0;
  uint64_t price = 0;
};

struct NaiveBook {
  std::vector<NaiveOrder> resting;
  std::vector<NaiveTrade> trades;

  void place(NaiveOrder incoming) {
    while (incoming.quantity > 0) {
      std::optional<size_t> best;
      for (size_t i = 0; i < resting.size(); ++i) {
        const NaiveOrder& r = resting[i];
        if (r.is_buy == incoming.is_buy) continue;
        const bool compatible = incoming.is_buy ? r.limit_price <= incoming.limit_price
                                                : r.limit_price >= incoming.limit_price;
        if (!compatible) continue;
        if (!best) {
          best = i;
          continue;
        }
        const NaiveOrder& b = resting[*best];
        const bool better_price =
            incoming.is_buy ? r.limit_price < b.limit_price : r.limit_price > b.limit_price;
        const bool same_price = r.limit_price == b.limit_price;
        if (better_price || (same_price && (r.placed_at < b.placed_at ||
                                            (r.placed_at == b.placed_at && r.id < b.id)))) {
          best = i;
        }
      }
      if (!best) break;

      NaiveOrder& r = resting[*best];
      const uint64_t fill = std::min(incoming.quantity, r.quantity);
      trades.push_back({incoming.is_buy ? incoming.id : r.id,
                        incoming.is_buy ? r.id : incoming.id, fill, r.limit_price});
      incoming.quantity -= fill;
      r.quantity -= fill;
      if (r.quantity == 0) resting.erase(resting.begin() + long(*best));
    }
    if (incoming.quantity > 0) resting.push_back(incoming);
  }

  bool crossed() const {
    uint64_t best_bid = 0;
    uint64_t best_ask = UINT64_MAX;
    bool has_bid = false, has_ask = false;
    for (const NaiveOrder& r : resting) {
      if (r.is_buy) {
        has_bid = true;
        best_bid = std::max(best_bid, r.limit_price);
      } else {
        has_ask = true;
        best_ask = std::min(best_ask, r.limit_price);
      }
    }
    return has_bid && has_ask && best_bid >= best_ask;
  }
};

}  // namespace acceptance
