#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "chainfund/errors.hpp"
#include "chainfund/sha256.hpp"

namespace chainfund {

// Logical simulation time in integer seconds. Advanced only by scenario
// commands; there are no wall-clock reads anywhere in the engine.
using Timestamp = uint64_t;

// Ordered key/value body of an event. Order is fixed by the emitting module
// and is part of the canonical serialization, so it must never depend on
// anything non-deterministic.
using Payload = std::vector<std::pair<std::string, std::string>>;

// One entry of the hash-chained, append-only ledger.
//
// hash = SHA-256(prev_hash || canon(seq, timestamp, kind, payload)) where
// canon writes fields in declared order, integers big-endian, and every
// string as a 4-byte big-endian length prefix followed by UTF-8 bytes.
// Record 0 uses a 32-zero-byte prev_hash.
struct EventRecord {
  uint64_t seq = 0;
  Timestamp timestamp = 0;
  std::string kind;
  Payload payload;
  Hash32 prev_hash{};
  Hash32 hash{};
};

// Canonical byte serialization of (seq, timestamp, kind, payload).
std::vector<uint8_t> canonical_serialize(const EventRecord& record);

Hash32 compute_event_hash(const EventRecord& record, const Hash32& prev_hash);

struct ChainVerdict {
  bool ok = true;
  uint64_t first_bad_seq = 0;  // valid only when !ok
  std::string reason;          // empty when ok
};

class EventLog {
 public:
  // Appends a record at the current chain head. Timestamps must be
  // non-decreasing; the caller (the engine clock) guarantees that.
  const EventRecord& append(std::string kind, Payload payload, Timestamp t);

  const std::vector<EventRecord>& records() const { return records_; }
  bool empty() const { return records_.empty(); }
  size_t size() const { return records_.size(); }

  // Hash of the last record, or the zero hash for an empty log.
  Hash32 head_hash() const;

  // Recomputes every hash and checks seq density, timestamp monotonicity
  // and prev_hash linkage.
  ChainVerdict verify() const { return verify_records(records_); }
  static ChainVerdict verify_records(const std::vector<EventRecord>& records);

  // Verifies records [from_seq, size) plus the link back into from_seq - 1;
  // lets a caller that re-verifies after every append stay linear overall.
  ChainVerdict verify_suffix(uint64_t from_seq) const;

  // JSON Lines export: one record per line, keys in fixed order
  // (seq, timestamp, kind, payload, prev_hash, hash), hashes lowercase hex.
  std::string to_jsonl() const;
  static std::string record_to_json_line(const EventRecord& record);

  // Parses a JSONL export back into records. Any unparseable line is an
  // error naming the zero-based line index.
  static Result<std::vector<EventRecord>> parse_jsonl(const std::string& text);

  // parse + verify in one step; parse failures become a !ok verdict at the
  // offending line. This is the `check-log` primitive.
  static ChainVerdict verify_jsonl(const std::string& text);

 private:
  std::vector<EventRecord> records_;
};

}  // namespace chainfund
