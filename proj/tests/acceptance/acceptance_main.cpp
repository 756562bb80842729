// Acceptance suite. Each criterion prints exactly one PASS/FAIL line and the
// binary exits nonzero if any fail. Run from the repository root (the bundled
// scenarios are loaded from scenarios/).

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "chainfund/scenario.hpp"
#include "naive_matcher.hpp"
#include "scenario_gen.hpp"
#include "snippet_oracle.hpp"

using namespace chainfund;

namespace {

int failures = 0;

void report(int index, const char* name, bool ok, double limit_seconds,
            double elapsed_seconds, const std::string& detail) {
  const bool in_budget = limit_seconds <= 0.0 || elapsed_seconds <= limit_seconds;
  const bool pass = ok && in_budget;
  if (!pass) ++failures;
  std::printf("%s  [%d] %-28s %7.2fs%s%s\n", pass ? "PASS" : "FAIL", index, name,
              elapsed_seconds, detail.empty() ? "" : "  -- ", detail.c_str());
  std::fflush(stdout);
}

void run_criterion(int index, const char* name, double limit_seconds,
                   const std::function<bool(std::string&)>& body) {
  std::string detail;
  const auto start = std::chrono::steady_clock::now();
  bool ok = false;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  report(index, name, ok, limit_seconds, elapsed, detail);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Scenario load_bundled(const std::string& path, bool& ok) {
  auto parsed = parse_scenario_json(slurp(path));
  if (!parsed.ok() || !validate_scenario(parsed.value()).ok()) {
    ok = false;
    return {};
  }
  ok = true;
  return std::move(parsed).value();
}

const std::vector<std::string> kBundledScenarios = {
    "scenarios/turkey_equity.json",
    "scenarios/failed_refund.json",
};

// --- criterion 1: fee comparison, traditional 3-5% vs framework <1% --------

bool criterion_fees(std::string& detail) {
  const Amount gross = coins(100'000);
  for (uint32_t traditional_bps = 300; traditional_bps <= 500; ++traditional_bps) {
    const auto report = fee_comparison(gross, traditional_bps, 50);
    if (!report.ok()) {
      detail = report.error().message;
      return false;
    }
    const FeeComparisonReport& r = report.value();
    // exact integer fee: gross * bps / 10,000 with no remainder at this gross
    if (r.traditional_fee.minor != uint64_t(traditional_bps) * 10 * Amount::kScale) {
      detail = "fee not exact at " + std::to_string(traditional_bps) + " bps";
      return false;
    }
    if (r.traditional_fee < coins(3'000) || r.traditional_fee > coins(5'000)) {
      detail = "traditional fee outside 3,000-5,000 coins";
      return false;
    }
    if (r.framework_fee != coins(500)) {
      detail = "framework fee is not 500 coins";
      return false;
    }
    if (r.framework_fee.minor * 100 >= gross.minor) {
      detail = "framework fee not below 1% of gross";
      return false;
    }
    if (r.framework_net.minor <= r.traditional_net.minor) {
      detail = "framework net does not beat traditional net";
      return false;
    }
    if (r.traditional_net.minor + r.traditional_fee.minor != gross.minor ||
        r.framework_net.minor + r.framework_fee.minor != gross.minor) {
      detail = "net + fee != gross";
      return false;
    }
  }
  detail = "201 rate pairs, exact integer fees";
  return true;
}

// --- criterion 2: refund equivalence against the contract snippet ----------

bool criterion_refund_oracle(std::string& detail) {
  uint64_t agreements = 0;
  for (uint64_t seed = 0; seed < 1'000; ++seed) {
    std::mt19937_64 gen(seed * 7919 + 13);
    const auto pick = [&](uint64_t lo, uint64_t hi) {
      return std::uniform_int_distribution<uint64_t>(lo, hi)(gen);
    };

    Engine engine;
    const Timestamp deadline = 100 + pick(0, 50);
    const uint32_t fee_bps = pick(0, 1) ? uint32_t(pick(0, 200)) : 0;
    const int backer_count = int(pick(1, 6));

    std::vector<AccountId> backers;
    if (!engine.create_account("owner").ok()) return false;
    if (!engine.set_kyc_status("owner", KycStatus::verified, "AA").ok()) return false;
    if (!engine.create_account("validator").ok()) return false;
    for (int i = 0; i < backer_count; ++i) {
      const AccountId id = "b" + std::to_string(i);
      backers.push_back(id);
      if (!engine.create_account(id).ok()) return false;
      if (!engine.set_kyc_status(id, KycStatus::verified, "AA").ok()) return false;
      if (!engine.mint(id, coins(1'000)).ok()) return false;
    }

    CampaignConfig config;
    config.id = "camp";
    config.owner = "owner";
    config.goal = coins(1'000'000);  // unreachable: the campaign always fails
    config.deadline = deadline;
    config.fee_bps = fee_bps;
    config.milestone_bps = {10'000};
    config.validators = {"validator"};
    config.required_approvals = 1;
    if (!engine.create_campaign(config).ok()) return false;

    acceptance::SnippetOracle oracle;
    oracle.deadline = deadline;

    // contribution phase with interleaved premature refund attempts
    Timestamp now = 0;
    const int ops = int(pick(3, 12));
    for (int i = 0; i < ops; ++i) {
      now += pick(0, 10);
      if (now >= deadline) break;
      if (!engine.advance_time(now).ok()) return false;
      const AccountId& backer = backers[pick(0, backers.size() - 1)];
      if (pick(0, 3) == 0) {
        // premature refund: the engine must refuse exactly when the oracle reverts
        const auto refund = engine.refund("camp", backer);
        const auto expected = oracle.refund(backer, now);
        if (!expected.reverted || refund.ok() ||
            refund.error().code != Errc::funding_still_active ||
            refund.error().message != "Funding period still active") {
          detail = "premature refund disagreement at seed " + std::to_string(seed);
          return false;
        }
      } else {
        const Amount amount{pick(1, 50'000'000)};
        const auto contributed = engine.contribute("camp", backer, amount);
        if (contributed.ok()) {
          // the contract's mapping accrues what arrives in escrow: the net
          oracle.record_contribution(backer,
                                     amount.minor - fee_floor(amount, fee_bps).minor);
        }
      }
    }

    now = deadline + pick(0, 20);
    if (!engine.advance_time(now).ok()) return false;
    if (!engine.finalize("camp").ok()) return false;  // always Failed (goal unreachable)

    // refund phase: random order, with repeats
    const int refund_ops = backer_count * 2 + int(pick(0, 4));
    for (int i = 0; i < refund_ops; ++i) {
      now += pick(0, 5);
      if (!engine.advance_time(now).ok()) return false;
      const AccountId& backer = backers[pick(0, backers.size() - 1)];
      const auto refund = engine.refund("camp", backer);
      const auto expected = oracle.refund(backer, now);
      if (expected.reverted) {
        detail = "oracle reverted after deadline";
        return false;
      }
      if (expected.transferred > 0) {
        if (!refund.ok() || refund.value().minor != expected.transferred) {
          detail = "refund amount mismatch at seed " + std::to_string(seed);
          return false;
        }
      } else {
        // the snippet transfers zero; the engine surfaces NothingToRefund
        if (refund.ok() || refund.error().code != Errc::nothing_to_refund) {
          detail = "double refund disagreement at seed " + std::to_string(seed);
          return false;
        }
      }
      ++agreements;
    }
    if (!engine.check_invariants().ok()) {
      detail = "invariants broken at seed " + std::to_string(seed);
      return false;
    }
  }
  detail = std::to_string(agreements) + " refund calls agreed";
  return true;
}

// --- criterion 3: conservation and escrow identity under random load -------

bool criterion_conservation(std::string& detail) {
  for (const std::string& path : kBundledScenarios) {
    bool ok = false;
    const Scenario scenario = load_bundled(path, ok);
    if (!ok) {
      detail = "cannot load " + path;
      return false;
    }
    if (auto run = run_scenario(scenario, RunOptions{true}); !run.ok()) {
      detail = path + ": " + run.error().message;
      return false;
    }
  }
  for (uint64_t seed = 0; seed < 1'000; ++seed) {
    const Scenario scenario = acceptance::random_scenario(seed);
    auto run = run_scenario(scenario, RunOptions{true});  // invariants after every command
    if (!run.ok()) {
      detail = "seed " + std::to_string(seed) + ": " + run.error().message;
      return false;
    }
  }
  detail = "bundled + 1000 random scenarios, checked after every command";
  return true;
}

// --- criterion 4: allocation exactness vs a largest-remainder oracle -------

// Independent oracle: repeated argmax selection over exact remainders instead
// of the implementation's single sort.
std::map<AccountId, uint64_t> oracle_allocate(
    const std::map<AccountId, Amount>& contributions, uint64_t supply) {
  using uint128 = unsigned __int128;
  uint128 total = 0;
  for (const auto& [id, c] : contributions) total += c.minor;

  std::map<AccountId, uint64_t> holdings;
  std::map<AccountId, uint128> remainders;
  uint64_t leftover = supply;
  for (const auto& [id, c] : contributions) {
    const uint128 product = uint128(supply) * c.minor;
    holdings[id] = uint64_t(product / total);
    remainders[id] = product % total;
    leftover -= holdings[id];
  }
  while (leftover > 0) {
    const AccountId* best = nullptr;
    for (const auto& [id, rem] : remainders) {
      if (!best || rem > remainders[*best]) best = &id;  // map order breaks ties low
    }
    holdings[*best] += 1;
    remainders.erase(*best);
    --leftover;
  }
  return holdings;
}

bool criterion_allocation(std::string& detail) {
  using uint128 = unsigned __int128;
  std::mt19937_64 gen(20'260'808);
  for (int round = 0; round < 1'000; ++round) {
    const auto pick = [&](uint64_t lo, uint64_t hi) {
      return std::uniform_int_distribution<uint64_t>(lo, hi)(gen);
    };
    std::map<AccountId, Amount> contributions;
    const int n = int(pick(1, 20));
    for (int i = 0; i < n; ++i) {
      contributions["acct" + std::to_string(i)] = Amount{pick(1, 1'000'000'000)};
    }
    const uint64_t supply = pick(1, 100'000'000);

    const auto holdings = allocate_largest_remainder(contributions, supply);
    const auto expected = oracle_allocate(contributions, supply);
    if (holdings != expected) {
      detail = "oracle mismatch at round " + std::to_string(round);
      return false;
    }

    uint128 total = 0, sum = 0;
    for (const auto& [id, c] : contributions) total += c.minor;
    for (const auto& [id, units] : holdings) sum += units;
    if (sum != supply) {
      detail = "holdings do not sum to supply";
      return false;
    }
    for (const auto& [id, c] : contributions) {
      const uint128 exact_scaled = uint128(supply) * c.minor;
      const uint128 held_scaled = uint128(holdings.at(id)) * total;
      const uint128 diff = held_scaled > exact_scaled ? held_scaled - exact_scaled
                                                      : exact_scaled - held_scaled;
      if (diff >= total) {
        detail = "quota deviation of one unit or more";
        return false;
      }
    }
  }
  detail = "1000 instances, exact sum and sub-unit deviation";
  return true;
}

// --- criterion 5: matching engine vs naive rescan oracle -------------------

bool criterion_matching(std::string& detail) {
  std::mt19937_64 gen(5'550'123);
  uint64_t total_trades = 0;
  for (int round = 0; round < 500; ++round) {
    const auto pick = [&](uint64_t lo, uint64_t hi) {
      return std::uniform_int_distribution<uint64_t>(lo, hi)(gen);
    };

    Engine engine;
    const std::vector<AccountId> traders = {"t0", "t1", "t2", "t3"};
    if (!engine.create_account("owner").ok()) return false;
    if (!engine.set_kyc_status("owner", KycStatus::verified, "AA").ok()) return false;
    if (!engine.create_account("validator").ok()) return false;
    for (const AccountId& t : traders) {
      if (!engine.create_account(t).ok()) return false;
      if (!engine.set_kyc_status(t, KycStatus::verified, "AA").ok()) return false;
      if (!engine.mint(t, coins(1'000'000)).ok()) return false;
    }

    CampaignConfig config;
    config.id = "camp";
    config.owner = "owner";
    config.goal = coins(4);
    config.deadline = 10;
    config.fee_bps = 0;
    config.milestone_bps = {10'000};
    config.validators = {"validator"};
    config.required_approvals = 1;
    if (!engine.create_campaign(config).ok()) return false;
    if (!engine.define_token("camp", TokenKind::equity, 4'000).ok()) return false;
    for (const AccountId& t : traders) {
      if (!engine.contribute("camp", t, coins(1)).ok()) return false;
    }
    if (!engine.advance_time(10).ok()) return false;
    if (!engine.finalize("camp").ok()) return false;
    // each trader now holds 1,000 tokens

    acceptance::NaiveBook oracle;
    std::map<AccountId, uint64_t> free_tokens;
    for (const AccountId& t : traders) free_tokens[t] = 1'000;

    Timestamp now = 10;
    const int order_count = int(pick(5, 50));
    for (int i = 0; i < order_count; ++i) {
      now += pick(0, 3);
      if (!engine.advance_time(now).ok()) return false;
      const AccountId& trader = traders[pick(0, traders.size() - 1)];
      bool is_buy = pick(0, 1) == 1;
      uint64_t qty = pick(1, 40);
      if (!is_buy) {
        if (free_tokens[trader] == 0) is_buy = true;
        else qty = std::min(qty, free_tokens[trader]);
      }
      const Amount price{pick(1, 8) * 500'000};  // 0.5 .. 4.0 coins, forcing ties

      const auto placed = engine.place_order("camp", is_buy ? Side::buy : Side::sell,
                                             trader, qty, price);
      if (!placed.ok()) {
        detail = "engine rejected an order the generator funded: " + placed.error().message;
        return false;
      }
      if (!is_buy) free_tokens[trader] -= qty;
      for (const Trade& t : placed.value().trades) {
        // tokens bought become sellable again
        const Order& buy = engine.market().orders().at(t.buy_order_id);
        free_tokens[buy.trader] += t.quantity;
      }

      oracle.place(acceptance::NaiveOrder{placed.value().order_id, is_buy, trader, qty,
                                          price.minor, now});
      if (oracle.crossed()) {
        detail = "oracle book crossed";
        return false;
      }
      if (!engine.check_invariants().ok()) {
        detail = "engine invariants (incl. no-crossing) failed";
        return false;
      }
    }

    // trade-by-trade equality
    const auto& trades = engine.market().trades();
    if (trades.size() != oracle.trades.size()) {
      detail = "trade count mismatch at round " + std::to_string(round);
      return false;
    }
    for (size_t i = 0; i < trades.size(); ++i) {
      const acceptance::NaiveTrade& o = oracle.trades[i];
      if (trades[i].buy_order_id != o.buy_order_id ||
          trades[i].sell_order_id != o.sell_order_id || trades[i].quantity != o.quantity ||
          trades[i].price.minor != o.price) {
        detail = "trade " + std::to_string(i) + " differs at round " + std::to_string(round);
        return false;
      }
    }
    total_trades += trades.size();

    // final book equality: same resting orders with same remaining quantity
    const auto open = engine.market().open_orders("camp");
    if (open.size() != oracle.resting.size()) {
      detail = "resting order count mismatch at round " + std::to_string(round);
      return false;
    }
    std::map<uint64_t, const acceptance::NaiveOrder*> oracle_by_id;
    for (const auto& r : oracle.resting) oracle_by_id[r.id] = &r;
    for (const Order* order : open) {
      const auto it = oracle_by_id.find(order->id);
      if (it == oracle_by_id.end() || it->second->quantity != order->quantity ||
          it->second->limit_price != order->limit_price.minor ||
          it->second->is_buy != (order->side == Side::buy)) {
        detail = "resting order state mismatch at round " + std::to_string(round);
        return false;
      }
    }
  }
  detail = "500 random sequences, " + std::to_string(total_trades) + " trades matched";
  return true;
}

// --- criterion 6: chain integrity, determinism, tamper detection -----------

bool criterion_chain(std::string& detail) {
  uint64_t mutations = 0;
  for (const std::string& path : kBundledScenarios) {
    bool ok = false;
    const Scenario scenario = load_bundled(path, ok);
    if (!ok) {
      detail = "cannot load " + path;
      return false;
    }
    const auto replay = replay_verify(scenario);
    if (!replay.ok() || !replay.value()) {
      detail = "replay mismatch for " + path;
      return false;
    }

    auto run = run_scenario(scenario);
    if (!run.ok()) return false;
    const std::string jsonl = run.value().engine.log().to_jsonl();
    if (!EventLog::verify_jsonl(jsonl).ok) {
      detail = "pristine export failed verification";
      return false;
    }

    // full sweep: flip one bit at every byte position of the export
    std::string mutated = jsonl;
    for (size_t pos = 0; pos < jsonl.size(); ++pos) {
      mutated[pos] = char(mutated[pos] ^ 0x01);
      if (EventLog::verify_jsonl(mutated).ok) {
        detail = "undetected mutation at byte " + std::to_string(pos);
        return false;
      }
      mutated[pos] = jsonl[pos];
      ++mutations;
    }
  }
  detail = std::to_string(mutations) + " single-byte mutations all detected";
  return true;
}

// --- criterion 7: gate audit over randomized mixed-KYC scenarios -----------

struct AuditIdentity {
  std::string status = "unverified";
  std::string jurisdiction = "ZZ";
};

const char* payload_value(const EventRecord& record, const char* key) {
  for (const auto& [k, v] : record.payload) {
    if (k == key) return v.c_str();
  }
  return nullptr;
}

bool criterion_gate_audit(std::string& detail) {
  uint64_t gated_events = 0;
  uint64_t gate_denials = 0;
  for (uint64_t seed = 0; seed < 400; ++seed) {
    const Scenario scenario = acceptance::random_scenario(seed * 31 + 7);
    auto run = run_scenario(scenario);
    if (!run.ok()) {
      detail = "seed " + std::to_string(seed) + ": " + run.error().message;
      return false;
    }

    // independent replay of identity state from the log alone
    std::map<std::string, AuditIdentity> identities;
    const auto rule_of = [&](const std::string& jurisdiction) {
      for (const JurisdictionRule& rule : scenario.jurisdiction_rules) {
        if (rule.jurisdiction == jurisdiction) return rule;
      }
      return JurisdictionRule{"*", Amount{0}, true};  // default: KYC required
    };

    for (const EventRecord& record : run.value().engine.log().records()) {
      if (record.kind == "REJECT") {
        const char* error = payload_value(record, "error");
        if (error && std::string(error) == "GateDenied") ++gate_denials;
      } else if (record.kind == "KYC") {
        AuditIdentity& id = identities[payload_value(record, "account")];
        id.status = payload_value(record, "status");
        id.jurisdiction = payload_value(record, "jurisdiction");
      } else if (record.kind == "CREATE_CAMPAIGN") {
        ++gated_events;
        const AuditIdentity id = identities.count(payload_value(record, "owner"))
                                     ? identities[payload_value(record, "owner")]
                                     : AuditIdentity{};
        const JurisdictionRule rule = rule_of(id.jurisdiction);
        if (id.status != "verified" || !rule.allowed) {
          detail = "campaign creation passed a gate that should deny (seed " +
                   std::to_string(seed) + ", seq " + std::to_string(record.seq) + ")";
          return false;
        }
      } else if (record.kind == "CONTRIBUTE") {
        ++gated_events;
        const AuditIdentity id = identities.count(payload_value(record, "contributor"))
                                     ? identities[payload_value(record, "contributor")]
                                     : AuditIdentity{};
        const JurisdictionRule rule = rule_of(id.jurisdiction);
        const auto gross = parse_amount(payload_value(record, "amount"));
        if (!gross.ok()) {
          detail = "unparseable CONTRIBUTE amount";
          return false;
        }
        const bool allowed =
            id.status != "barred" && rule.allowed &&
            (id.status == "verified" ||
             gross.value().minor <= rule.max_unverified_contribution.minor);
        if (!allowed) {
          detail = "contribution passed a gate that should deny (seed " +
                   std::to_string(seed) + ", seq " + std::to_string(record.seq) + ")";
          return false;
        }
      }
    }
  }
  if (gated_events == 0 || gate_denials == 0) {
    detail = "generator produced no gate traffic; audit is vacuous";
    return false;
  }
  detail = std::to_string(gated_events) + " gated events audited, zero violations (" +
           std::to_string(gate_denials) + " denials elsewhere)";
  return true;
}

// --- criterion 8: milestone multisig on random approval schedules ----------

bool criterion_multisig(std::string& detail) {
  std::mt19937_64 gen(88'008'800);
  uint64_t disbursements = 0;
  for (int round = 0; round < 500; ++round) {
    const auto pick = [&](uint64_t lo, uint64_t hi) {
      return std::uniform_int_distribution<uint64_t>(lo, hi)(gen);
    };

    Engine engine;
    if (!engine.create_account("owner").ok()) return false;
    if (!engine.set_kyc_status("owner", KycStatus::verified, "AA").ok()) return false;
    if (!engine.create_account("backer").ok()) return false;
    if (!engine.set_kyc_status("backer", KycStatus::verified, "AA").ok()) return false;
    if (!engine.mint("backer", coins(10'000)).ok()) return false;

    const uint64_t validator_count = pick(1, 5);
    const uint32_t required = uint32_t(pick(1, validator_count));
    std::vector<AccountId> validators;
    for (uint64_t i = 0; i < validator_count; ++i) {
      const AccountId id = "v" + std::to_string(i);
      validators.push_back(id);
      if (!engine.create_account(id).ok()) return false;
    }
    // plus one account that is not a validator
    if (!engine.create_account("outsider").ok()) return false;

    std::vector<uint32_t> milestone_bps;
    switch (pick(0, 3)) {
      case 0: milestone_bps = {10'000}; break;
      case 1: milestone_bps = {5'000, 5'000}; break;
      case 2: milestone_bps = {3'333, 3'333, 3'334}; break;
      case 3: milestone_bps = {1'000, 2'000, 3'000, 4'000}; break;
    }

    CampaignConfig config;
    config.id = "camp";
    config.owner = "owner";
    config.goal = Amount{pick(1, 5'000'000'000)};
    config.deadline = 100;
    config.fee_bps = 0;
    config.milestone_bps = milestone_bps;
    config.validators = validators;
    config.required_approvals = required;
    if (!engine.create_campaign(config).ok()) return false;
    if (!engine.contribute("camp", "backer", config.goal).ok()) return false;
    if (!engine.advance_time(100).ok()) return false;
    if (engine.finalize("camp").value() != CampaignState::funded) return false;

    // independent model of the multisig rule
    std::vector<std::set<AccountId>> approvals(milestone_bps.size());
    std::vector<bool> disbursed(milestone_bps.size(), false);

    const int attempts = int(pick(10, 60));
    for (int i = 0; i < attempts; ++i) {
      const size_t milestone = pick(0, milestone_bps.size() - 1);
      if (pick(0, 2) != 0) {
        const AccountId approver =
            pick(0, 5) == 0 ? AccountId("outsider")
                            : validators[pick(0, validators.size() - 1)];
        const auto result = engine.approve_milestone("camp", milestone, approver);
        const size_t next = size_t(
            std::count(disbursed.begin(), disbursed.end(), true));
        const bool model_ok = approver != "outsider" && !disbursed[milestone] &&
                              milestone == next;
        if (model_ok != result.ok()) {
          detail = "approve outcome mismatch at round " + std::to_string(round);
          return false;
        }
        if (model_ok) {
          approvals[milestone].insert(approver);
          if (result.value() != approvals[milestone].size()) {
            detail = "approval count mismatch";
            return false;
          }
        }
      } else {
        const size_t next = size_t(
            std::count(disbursed.begin(), disbursed.end(), true));
        const auto result = engine.disburse_milestone("camp", milestone);
        const bool model_ok = !disbursed[milestone] && milestone == next &&
                              approvals[milestone].size() >= required;
        if (model_ok != result.ok()) {
          detail = "disburse gating mismatch at round " + std::to_string(round) +
                   (result.ok() ? " (engine allowed)" : " (engine refused: " +
                                                            result.error().message + ")");
          return false;
        }
        if (model_ok) {
          disbursed[milestone] = true;
          ++disbursements;
        }
      }
    }

    // drive to completion: escrow must end exactly zero
    for (size_t m = 0; m < milestone_bps.size(); ++m) {
      if (disbursed[m]) continue;
      for (uint64_t v = 0; v < validator_count && approvals[m].size() < required; ++v) {
        if (!engine.approve_milestone("camp", m, validators[v]).ok()) {
          detail = "settling approval failed";
          return false;
        }
        approvals[m].insert(validators[v]);
      }
      if (!engine.disburse_milestone("camp", m).ok()) {
        detail = "settling disbursement failed";
        return false;
      }
      disbursed[m] = true;
      ++disbursements;
    }
    const Campaign* campaign = engine.campaigns().find("camp");
    if (campaign->state != CampaignState::completed) {
      detail = "campaign not completed after all milestones";
      return false;
    }
    const auto escrow = engine.campaigns().escrow_balance("camp", engine.ledger());
    if (!escrow.ok() || !escrow.value().is_zero()) {
      detail = "escrow not exactly zero on completion";
      return false;
    }
    if (!engine.check_invariants().ok()) {
      detail = "invariants broken";
      return false;
    }
  }
  detail = std::to_string(disbursements) + " modeled disbursements agreed; escrow zero";
  return true;
}

}  // namespace

int main() {
  std::printf("acceptance: deterministic crowdfunding engine\n");
  run_criterion(1, "fee-comparison", 1.0, criterion_fees);
  run_criterion(2, "refund-oracle", 10.0, criterion_refund_oracle);
  run_criterion(3, "conservation", 0.0, criterion_conservation);
  run_criterion(4, "allocation-exactness", 10.0, criterion_allocation);
  run_criterion(5, "matching-oracle", 30.0, criterion_matching);
  run_criterion(6, "chain-integrity", 0.0, criterion_chain);
  run_criterion(7, "compliance-gate", 0.0, criterion_gate_audit);
  run_criterion(8, "milestone-multisig", 0.0, criterion_multisig);
  if (failures > 0) {
    std::printf("%d criterion(s) FAILED\n", failures);
    return 1;
  }
  std::printf("all 8 criteria passed\n");
  return 0;
}
