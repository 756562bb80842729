#include "chainfund/event_log.hpp"

#include <cassert>

#include <json.hpp>

namespace chainfund {

namespace {

void put_u32_be(std::vector<uint8_t>& out, uint32_t v) {
  out.push_back(uint8_t(v >> 24));
  out.push_back(uint8_t(v >> 16));
  out.push_back(uint8_t(v >> 8));
  out.push_back(uint8_t(v));
}

void put_u64_be(std::vector<uint8_t>& out, uint64_t v) {
  for (int shift = 56; shift >= 0; shift -= 8) {
    out.push_back(uint8_t(v >> shift));
  }
}

void put_string(std::vector<uint8_t>& out, const std::string& s) {
  put_u32_be(out, uint32_t(s.size()));
  out.insert(out.end(), s.begin(), s.end());
}

}  // namespace

std::vector<uint8_t> canonical_serialize(const EventRecord& record) {
  std::vector<uint8_t> out;
  put_u64_be(out, record.seq);
  put_u64_be(out, record.timestamp);
  put_string(out, record.kind);
  put_u32_be(out, uint32_t(record.payload.size()));
  for (const auto& [key, value] : record.payload) {
    put_string(out, key);
    put_string(out, value);
  }
  return out;
}

Hash32 compute_event_hash(const EventRecord& record, const Hash32& prev_hash) {
  Sha256 hasher;
  hasher.update(prev_hash.data(), prev_hash.size());
  const std::vector<uint8_t> body = canonical_serialize(record);
  hasher.update(body.data(), body.size());
  return hasher.finish();
}

const EventRecord& EventLog::append(std::string kind, Payload payload, Timestamp t) {
  EventRecord record;
  record.seq = records_.size();
  record.timestamp = t;
  record.kind = std::move(kind);
  record.payload = std::move(payload);
  record.prev_hash = head_hash();
  assert(records_.empty() || t >= records_.back().timestamp);
  record.hash = compute_event_hash(record, record.prev_hash);
  records_.push_back(std::move(record));
  return records_.back();
}

Hash32 EventLog::head_hash() const {
  return records_.empty() ? zero_hash() : records_.back().hash;
}

namespace {

ChainVerdict verify_span(const std::vector<EventRecord>& records, size_t from,
                         Hash32 expected_prev, Timestamp last_t) {
  for (size_t i = from; i < records.size(); ++i) {
    const EventRecord& r = records[i];
    if (r.seq != i) {
      return {false, uint64_t(i), "seq not dense"};
    }
    if (r.prev_hash != expected_prev) {
      return {false, r.seq, "prev_hash mismatch"};
    }
    if (i > 0 && r.timestamp < last_t) {
      return {false, r.seq, "timestamp decreased"};
    }
    if (compute_event_hash(r, r.prev_hash) != r.hash) {
      return {false, r.seq, "hash mismatch"};
    }
    expected_prev = r.hash;
    last_t = r.timestamp;
  }
  return {};
}

}  // namespace

ChainVerdict EventLog::verify_records(const std::vector<EventRecord>& records) {
  return verify_span(records, 0, zero_hash(), 0);
}

ChainVerdict EventLog::verify_suffix(uint64_t from_seq) const {
  if (from_seq == 0 || from_seq > records_.size()) {
    return verify_records(records_);
  }
  const EventRecord& anchor = records_[from_seq - 1];
  return verify_span(records_, from_seq, anchor.hash, anchor.timestamp);
}

std::string EventLog::record_to_json_line(const EventRecord& record) {
  nlohmann::ordered_json j;
  j["seq"] = record.seq;
  j["timestamp"] = record.timestamp;
  j["kind"] = record.kind;
  nlohmann::ordered_json payload = nlohmann::ordered_json::object();
  for (const auto& [key, value] : record.payload) {
    payload[key] = value;
  }
  j["payload"] = std::move(payload);
  j["prev_hash"] = to_hex(record.prev_hash);
  j["hash"] = to_hex(record.hash);
  return j.dump();
}

std::string EventLog::to_jsonl() const {
  std::string out;
  for (const EventRecord& r : records_) {
    out += record_to_json_line(r);
    out.push_back('\n');
  }
  return out;
}

Result<std::vector<EventRecord>> EventLog::parse_jsonl(const std::string& text) {
  std::vector<EventRecord> records;
  size_t line_start = 0;
  size_t line_index = 0;

  const auto bad = [&](const std::string& why) {
    return make_error(Errc::malformed_scenario,
                      "events line " + std::to_string(line_index) + ": " + why);
  };

  while (line_start < text.size()) {
    size_t line_end = text.find('\n', line_start);
    if (line_end == std::string::npos) line_end = text.size();
    const std::string line = text.substr(line_start, line_end - line_start);
    line_start = line_end + 1;
    if (line.empty()) {
      ++line_index;
      continue;
    }

    nlohmann::ordered_json j =
        nlohmann::ordered_json::parse(line, nullptr, /*allow_exceptions=*/false);
    if (j.is_discarded() || !j.is_object()) return bad("unparseable JSON");

    EventRecord r;
    if (!j.contains("seq") || !j["seq"].is_number_unsigned()) return bad("missing seq");
    if (!j.contains("timestamp") || !j["timestamp"].is_number_unsigned()) {
      return bad("missing timestamp");
    }
    if (!j.contains("kind") || !j["kind"].is_string()) return bad("missing kind");
    if (!j.contains("payload") || !j["payload"].is_object()) return bad("missing payload");
    if (!j.contains("prev_hash") || !j["prev_hash"].is_string()) return bad("missing prev_hash");
    if (!j.contains("hash") || !j["hash"].is_string()) return bad("missing hash");

    r.seq = j["seq"].get<uint64_t>();
    r.timestamp = j["timestamp"].get<uint64_t>();
    r.kind = j["kind"].get<std::string>();
    for (const auto& [key, value] : j["payload"].items()) {
      if (!value.is_string()) return bad("payload value not a string");
      r.payload.emplace_back(key, value.get<std::string>());
    }
    const auto prev = hash_from_hex(j["prev_hash"].get<std::string>());
    const auto hash = hash_from_hex(j["hash"].get<std::string>());
    if (!prev || !hash) return bad("bad hash hex");
    r.prev_hash = *prev;
    r.hash = *hash;

    records.push_back(std::move(r));
    ++line_index;
  }
  return records;
}

ChainVerdict EventLog::verify_jsonl(const std::string& text) {
  auto parsed = parse_jsonl(text);
  if (!parsed.ok()) {
    // The offending line index is the best "first bad seq" available when a
    // mutation breaks the JSON itself.
    const std::string& msg = parsed.error().message;
    uint64_t line = 0;
    const size_t pos = msg.find("line ");
    if (pos != std::string::npos) {
      line = std::strtoull(msg.c_str() + pos + 5, nullptr, 10);
    }
    return {false, line, parsed.error().message};
  }
  return verify_records(parsed.value());
}

}  // namespace chainfund
