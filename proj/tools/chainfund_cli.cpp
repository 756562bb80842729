// chainfund — scenario-driven crowdfunding ledger simulator.
//
// Subcommands:
//   run <scenario.json> [--out DIR] [--verify]   execute a scenario
//   replay <scenario.json>                       determinism check (run twice)
//   fee-report --gross N --traditional-bps N --framework-bps N
//   check-log <events.jsonl>                     verify an exported event chain

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "chainfund/scenario.hpp"

namespace fs = std::filesystem;
using namespace chainfund;

namespace {

int fail(const std::string& message) {
  std::cerr << "error: " << message << "\n";
  return 1;
}

bool read_file(const std::string& path, std::string& out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream buffer;
  buffer << in.rdbuf();
  out = buffer.str();
  return true;
}

bool write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) return false;
  out << content;
  return bool(out);
}

Result<Scenario> load_scenario(const std::string& path) {
  std::string text;
  if (!read_file(path, text)) {
    return make_error(Errc::malformed_scenario, "cannot read " + path);
  }
  auto scenario = parse_scenario_json(text);
  if (!scenario.ok()) return scenario;
  if (auto valid = validate_scenario(scenario.value()); !valid.ok()) {
    return valid.error();
  }
  return scenario;
}

int run_command(const std::string& scenario_path, const std::string& out_dir,
                bool verify) {
  auto scenario = load_scenario(scenario_path);
  if (!scenario.ok()) return fail(scenario.error().message);

  auto run = run_scenario(scenario.value(), RunOptions{verify});
  if (!run.ok()) return fail(run.error().message);
  RunOutput& output = run.value();
  const Engine& engine = output.engine;

  std::cout << "scenario: " << scenario.value().name << "\n"
            << "commands: " << output.commands_executed << " executed, "
            << output.commands_rejected << " rejected\n"
            << "events:   " << engine.log().size() << "\n"
            << "chain:    " << to_hex(engine.log().head_hash()) << "\n";

  if (!out_dir.empty()) {
    std::error_code ec;
    fs::create_directories(out_dir, ec);
    if (ec) return fail("cannot create " + out_dir);
    const fs::path dir(out_dir);

    if (!write_file(dir / "events.jsonl", engine.log().to_jsonl())) {
      return fail("cannot write events.jsonl");
    }
    if (!write_file(dir / "snapshot.json", engine.snapshot().dump(2) + "\n")) {
      return fail("cannot write snapshot.json");
    }

    // One combined cap-table CSV across campaigns.
    std::string captable = "campaign,account,units\n";
    for (const auto& [campaign_id, table] : engine.tokens().cap_tables()) {
      for (const auto& [account, units] : table.holdings) {
        captable += campaign_id + "," + account + "," + std::to_string(units) + "\n";
      }
    }
    if (!write_file(dir / "captable.csv", captable)) {
      return fail("cannot write captable.csv");
    }

    std::string trades;
    for (const Trade& t : engine.market().trades()) {
      nlohmann::ordered_json j;
      j["trade_id"] = t.id;
      j["campaign"] = t.campaign_id;
      j["buy_order_id"] = t.buy_order_id;
      j["sell_order_id"] = t.sell_order_id;
      j["quantity"] = t.quantity;
      j["price"] = to_string(t.price);
      j["cash"] = to_string(t.cash);
      j["executed_at"] = t.executed_at;
      trades += j.dump() + "\n";
    }
    if (!write_file(dir / "trades.jsonl", trades)) {
      return fail("cannot write trades.jsonl");
    }

    const auto fee_json =
        fee_report_to_json(output.fee_report, scenario.value().fiat_rates);
    if (!write_file(dir / "fee_report.json", fee_json.dump(2) + "\n")) {
      return fail("cannot write fee_report.json");
    }

    for (size_t i = 0; i < output.reports.size(); ++i) {
      const auto report_json = compliance_report_to_json(output.reports[i]);
      const fs::path path = dir / ("compliance_report_" + std::to_string(i) + ".json");
      if (!write_file(path, report_json.dump(2) + "\n")) {
        return fail("cannot write " + path.string());
      }
    }
    std::cout << "outputs:  " << out_dir << "\n";
  }
  return 0;
}

int replay_command(const std::string& scenario_path) {
  auto scenario = load_scenario(scenario_path);
  if (!scenario.ok()) return fail(scenario.error().message);
  auto verdict = replay_verify(scenario.value());
  if (!verdict.ok()) return fail(verdict.error().message);
  std::cout << (verdict.value() ? "match" : "mismatch") << "\n";
  return verdict.value() ? 0 : 1;
}

int fee_report_command(const std::string& gross_text, uint32_t traditional_bps,
                       uint32_t framework_bps) {
  auto gross = parse_amount(gross_text);
  if (!gross.ok()) return fail(gross.error().message);
  auto report = fee_comparison(gross.value(), traditional_bps, framework_bps);
  if (!report.ok()) return fail(report.error().message);
  std::cout << fee_report_to_json(report.value(), {}).dump(2) << "\n";
  return 0;
}

int check_log_command(const std::string& path) {
  std::string text;
  if (!read_file(path, text)) return fail("cannot read " + path);
  const ChainVerdict verdict = EventLog::verify_jsonl(text);
  if (verdict.ok) {
    std::cout << "ok\n";
    return 0;
  }
  std::cout << "bad at seq " << verdict.first_bad_seq << ": " << verdict.reason << "\n";
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"deterministic stablecoin crowdfunding simulator"};
  app.require_subcommand(1);

  std::string scenario_path;
  std::string out_dir;
  bool verify = false;
  auto* run = app.add_subcommand("run", "execute a scenario file");
  run->add_option("scenario", scenario_path, "scenario JSON file")->required();
  run->add_option("--out", out_dir, "directory for run outputs");
  run->add_flag("--verify", verify, "check all invariants after every command");

  std::string replay_path;
  auto* replay = app.add_subcommand("replay", "run twice and compare final chain hashes");
  replay->add_option("scenario", replay_path, "scenario JSON file")->required();

  std::string gross;
  uint32_t traditional_bps = 400;
  uint32_t framework_bps = 50;
  auto* fee = app.add_subcommand("fee-report", "compare fee models on a gross amount");
  fee->add_option("--gross", gross, "gross raised, in coins (e.g. \"100000\")")->required();
  fee->add_option("--traditional-bps", traditional_bps, "traditional platform fee (bps)");
  fee->add_option("--framework-bps", framework_bps, "framework fee (bps)");

  std::string log_path;
  auto* check = app.add_subcommand("check-log", "verify an exported events.jsonl chain");
  check->add_option("events", log_path, "events.jsonl file")->required();

  CLI11_PARSE(app, argc, argv);

  if (run->parsed()) return run_command(scenario_path, out_dir, verify);
  if (replay->parsed()) return replay_command(replay_path);
  if (fee->parsed()) return fee_report_command(gross, traditional_bps, framework_bps);
  if (check->parsed()) return check_log_command(log_path);
  return 1;
}
