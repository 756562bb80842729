#include <doctest.h>

#include "chainfund/engine.hpp"

using namespace chainfund;

TEST_CASE("fresh account has zero balance; duplicates and empty ids rejected") {
  Engine engine;
  REQUIRE(engine.create_account("alice").ok());
  CHECK(engine.balance("alice").value() == Amount{0});

  const auto dup = engine.create_account("alice");
  REQUIRE_FALSE(dup.ok());
  CHECK(dup.error().code == Errc::duplicate_account);

  const auto empty = engine.create_account("");
  REQUIRE_FALSE(empty.ok());
  CHECK(empty.error().code == Errc::invalid_id);
}

TEST_CASE("mint") {
  Engine engine;
  REQUIRE(engine.create_account("alice").ok());

  SUBCASE("into empty account") {
    CHECK(engine.mint("alice", Amount{1'000'000}).value() == Amount{1'000'000});
  }
  SUBCASE("is additive") {
    REQUIRE(engine.mint("alice", Amount{500'000}).ok());
    CHECK(engine.mint("alice", Amount{500'000}).value() == Amount{1'000'000});
  }
  SUBCASE("unknown account") {
    const auto r = engine.mint("ghost", Amount{1});
    REQUIRE_FALSE(r.ok());
    CHECK(r.error().code == Errc::unknown_account);
  }
  SUBCASE("zero amount") {
    const auto r = engine.mint("alice", Amount{0});
    REQUIRE_FALSE(r.ok());
    CHECK(r.error().code == Errc::zero_amount);
  }
}

TEST_CASE("transfer fee arithmetic") {
  Engine engine;
  REQUIRE(engine.create_account("alice").ok());
  REQUIRE(engine.create_account("bob").ok());
  REQUIRE(engine.mint("alice", coins(200'000)).ok());

  SUBCASE("zero fee is the identity") {
    const auto r = engine.transfer("alice", "bob", Amount{1'000'000}, 0, "fee_sink");
    REQUIRE(r.ok());
    CHECK(r.value().net == Amount{1'000'000});
    CHECK(r.value().fee == Amount{0});
    CHECK(engine.balance("bob").value() == Amount{1'000'000});
  }
  SUBCASE("4% of 100,000 coins is 4,000 coins") {
    const auto r = engine.transfer("alice", "bob", coins(100'000), 400, "fee_sink");
    REQUIRE(r.ok());
    CHECK(r.value().fee == coins(4'000));
    CHECK(r.value().net == coins(96'000));
    CHECK(engine.balance("fee_sink").value() == coins(4'000));
  }
  SUBCASE("999 at 50 bps floors the fee to 4") {
    const auto r = engine.transfer("alice", "bob", Amount{999}, 50, "fee_sink");
    REQUIRE(r.ok());
    CHECK(r.value().fee == Amount{4});
    CHECK(r.value().net == Amount{995});
  }
  SUBCASE("net + fee == gross for arbitrary inputs") {
    uint64_t x = 88172645463325252ull;
    for (int i = 0; i < 200; ++i) {
      x ^= x << 13; x ^= x >> 7; x ^= x << 17;
      const Amount gross{x % 5'000'000'000};
      const uint32_t bps = uint32_t(x % 10'001);
      const auto r = engine.transfer("alice", "bob", gross, bps, "fee_sink");
      if (!r.ok()) continue;  // ran out of balance
      CHECK(r.value().net.minor + r.value().fee.minor == gross.minor);
    }
  }
}

TEST_CASE("transfer preconditions") {
  Engine engine;
  REQUIRE(engine.create_account("alice").ok());
  REQUIRE(engine.create_account("bob").ok());
  REQUIRE(engine.mint("alice", coins(1)).ok());

  SUBCASE("self transfer") {
    CHECK(engine.transfer("alice", "alice", Amount{1}, 0, "fee_sink").error().code ==
          Errc::self_transfer);
  }
  SUBCASE("insufficient funds") {
    CHECK(engine.transfer("alice", "bob", coins(2), 0, "fee_sink").error().code ==
          Errc::insufficient_funds);
  }
  SUBCASE("invalid fee") {
    CHECK(engine.transfer("alice", "bob", Amount{1}, 10'001, "fee_sink").error().code ==
          Errc::invalid_fee);
  }
}

TEST_CASE("conservation holds through a random operation mix") {
  Engine engine;
  REQUIRE(engine.create_account("a").ok());
  REQUIRE(engine.create_account("b").ok());
  REQUIRE(engine.create_account("c").ok());
  const AccountId ids[] = {"a", "b", "c"};

  uint64_t x = 424242;
  for (int i = 0; i < 500; ++i) {
    x ^= x << 13; x ^= x >> 7; x ^= x << 17;
    const AccountId& from = ids[x % 3];
    const AccountId& to = ids[(x >> 8) % 3];
    if (x % 5 == 0) {
      (void)engine.mint(from, Amount{x % 1'000'000 + 1});
    } else {
      (void)engine.transfer(from, to, Amount{x % 2'000'000}, uint32_t(x % 10'001),
                            "fee_sink");
    }
    REQUIRE(engine.ledger().conservation_holds());
  }
  CHECK(engine.verify_chain().ok);
}

TEST_CASE("same event sequence produces byte-identical logs") {
  const auto build = [] {
    Engine engine;
    (void)engine.create_account("a");
    (void)engine.create_account("b");
    (void)engine.mint("a", coins(10));
    (void)engine.transfer("a", "b", coins(3), 25, "fee_sink");
    return engine;
  };
  const Engine e1 = build();
  const Engine e2 = build();
  CHECK(e1.log().to_jsonl() == e2.log().to_jsonl());
}
