#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "gridlock/decide.hpp"
#include "gridlock/generate.hpp"
#include "gridlock/instance.hpp"
#include "gridlock/oracle.hpp"
#include "gridlock/plan.hpp"

namespace {

using namespace gridlock;

// Exit codes: 0 safe/valid, 2 bound to deadlock, 3 undecided, 1 any error.
constexpr int kExitSafe = 0;
constexpr int kExitBound = 2;
constexpr int kExitUnknown = 3;
constexpr int kExitError = 1;

int outcome_exit(Outcome outcome) {
  switch (outcome) {
    case Outcome::Safe: return kExitSafe;
    case Outcome::BoundToDeadlock: return kExitBound;
    case Outcome::Unknown: return kExitUnknown;
  }
  return kExitError;
}

int outcome_exit(OracleOutcome outcome) {
  switch (outcome) {
    case OracleOutcome::Safe: return kExitSafe;
    case OracleOutcome::BoundToDeadlock: return kExitBound;
    case OracleOutcome::ResourceLimitExceeded: return kExitUnknown;
  }
  return kExitError;
}

void print_verdict(const Instance& inst, const Verdict& verdict) {
  std::cout << to_string(verdict.outcome);
  if (verdict.witness)
    std::cout << ", witness "
              << format_vertex_set(inst.network, verdict.witness->vertices);
  std::cout << "\n";
  std::cout << "justification: " << to_string(verdict.justification) << "\n";
}

int cmd_validate(const std::string& file) {
  Instance inst = load_instance(file);
  std::cout << "valid: " << inst.network.size() << " vertices, "
            << inst.network.edge_count() << " edges, "
            << inst.state.total_items() << " items, potential "
            << potential(inst.state) << "\n";
  return kExitSafe;
}

int cmd_analyze(const std::string& file) {
  Instance inst = load_instance(file);
  const Network& net = inst.network;
  const State& st = inst.state;
  std::cout << "vertices: " << net.size() << ", edges: " << net.edge_count()
            << ", items: " << st.total_items() << ", potential "
            << potential(st) << "\n";
  std::cout << "free vertices: "
            << format_vertex_set(net, free_vertices(net, st)) << "\n";
  auto print_arcs = [&](const char* label, FollowerKind kind) {
    std::cout << label << ":";
    auto digraph = build_follower_digraph(net, st, kind);
    bool any = false;
    for (auto [from, to] : digraph.arcs()) {
      std::cout << (any ? ", " : " ") << net.name(from) << "->"
                << net.name(to);
      any = true;
    }
    if (!any) std::cout << " none";
    std::cout << "\n";
  };
  print_arcs("follower arcs", FollowerKind::Plain);
  print_arcs("wise follower arcs", FollowerKind::Wise);
  auto print_set = [&](const char* label, SetStrength strength) {
    std::cout << label << ": ";
    if (auto set = find_deadlock_set(net, st, strength))
      std::cout << format_vertex_set(net, set->vertices);
    else
      std::cout << "none";
    std::cout << "\n";
  };
  print_set("strong deadlock set", SetStrength::Strong);
  print_set("weak deadlock set", SetStrength::Weak);
  return kExitSafe;
}

int cmd_decide(const std::string& file, bool escalate) {
  Instance inst = load_instance(file);
  Verdict verdict = decide(inst.network, inst.state);
  print_verdict(inst, verdict);
  if (verdict.outcome != Outcome::Unknown || !escalate)
    return outcome_exit(verdict.outcome);
  OracleResult result = oracle_decide(inst.network, inst.state);
  std::cout << "oracle: " << to_string(result.outcome) << " ("
            << result.explored_states << " states explored)\n";
  return outcome_exit(result.outcome);
}

int cmd_plan(const std::string& file) {
  Instance inst = load_instance(file);
  try {
    MovePlan plan = freeing_plan(inst.network, inst.state);
    std::cout << format_plan(inst.network, plan);
    return kExitSafe;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::PreconditionViolated) throw;
    std::cerr << "cannot plan: " << e.what() << "\n";
    Verdict verdict = decide(inst.network, inst.state);
    return verdict.outcome == Outcome::BoundToDeadlock ? kExitBound
                                                       : kExitUnknown;
  }
}

int cmd_oracle(const std::string& file, const OracleLimits& limits) {
  Instance inst = load_instance(file);
  OracleResult result = oracle_decide(inst.network, inst.state, limits);
  std::cout << to_string(result.outcome) << " (" << result.explored_states
            << " states explored)\n";
  if (result.witness_plan)
    std::cout << format_plan(inst.network, *result.witness_plan);
  return outcome_exit(result.outcome);
}

int cmd_verify(const std::string& file, const std::string& plan_file) {
  Instance inst = load_instance(file);
  MovePlan plan = parse_plan(inst.network, read_file(plan_file));
  if (verify_plan(inst.network, inst.state, plan)) {
    std::cout << "plan verifies: " << plan.size()
              << " moves empty the network\n";
    return kExitSafe;
  }
  std::cout << "plan does not verify\n";
  return kExitError;
}

int cmd_generate(const GeneratorConfig& config, const std::string& out_path) {
  InstanceDocument doc = generate_instance(config);
  std::string text = serialize(doc);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) fail(ErrorCode::IoError, "cannot write " + out_path);
    out << text;
  }
  return kExitSafe;
}

// "N" or "LO:HI".
IntRange parse_span(const std::string& text) {
  auto colon = text.find(':');
  try {
    if (colon == std::string::npos) {
      int v = std::stoi(text);
      return {v, v};
    }
    return {std::stoi(text.substr(0, colon)),
            std::stoi(text.substr(colon + 1))};
  } catch (const std::exception&) {
    throw CLI::ValidationError("expected N or LO:HI, got \"" + text + "\"");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"safety analysis for buffered routing networks"};
  app.require_subcommand(1);

  std::string file;
  std::string plan_file;
  std::string out_path;
  bool escalate = false;
  OracleLimits limits;
  GeneratorConfig config;
  std::string vertices_span = "4:8";
  std::string capacity_span = "1:3";
  std::string items_span = "1:4";
  std::string topology = "random";

  auto* validate_cmd =
      app.add_subcommand("validate", "parse a file and check every invariant");
  validate_cmd->add_option("file", file)->required();

  auto* analyze_cmd = app.add_subcommand(
      "analyze", "print free vertices, follower arcs and deadlock sets");
  analyze_cmd->add_option("file", file)->required();

  auto* decide_cmd = app.add_subcommand(
      "decide", "classify the state as Safe, BoundToDeadlock or Unknown");
  decide_cmd->add_option("file", file)->required();
  decide_cmd->add_flag("--escalate-oracle", escalate,
                       "run the exhaustive search when undecided");

  auto* plan_cmd =
      app.add_subcommand("plan", "emit a freeing plan, one move per line");
  plan_cmd->add_option("file", file)->required();

  auto* oracle_cmd = app.add_subcommand(
      "oracle", "exhaustive search; prints a witness plan when safe");
  oracle_cmd->add_option("file", file)->required();
  oracle_cmd->add_option("--max-states", limits.max_states,
                         "state budget (default 1000000)");
  oracle_cmd->add_option("--max-time", limits.max_time_seconds,
                         "time budget in seconds (default 60)");

  auto* verify_cmd =
      app.add_subcommand("verify", "check that a plan file empties the state");
  verify_cmd->add_option("file", file)->required();
  verify_cmd->add_option("plan", plan_file)->required();

  auto* generate_cmd =
      app.add_subcommand("generate", "emit a random instance, seeded");
  generate_cmd->add_option("--seed", config.seed, "rng seed (default 0)");
  generate_cmd
      ->add_option("--topology", topology, "tree, line, grid or random")
      ->check(CLI::IsMember({"tree", "line", "grid", "random"}));
  generate_cmd->add_option("--vertices", vertices_span, "count or LO:HI");
  generate_cmd->add_option("--capacity", capacity_span, "capacity or LO:HI");
  generate_cmd->add_option("--items", items_span, "count or LO:HI");
  generate_cmd->add_flag("--force-wise", config.force_wise,
                         "keep unit buffers empty initially");
  generate_cmd->add_option("-o,--out", out_path, "write to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitError;
  }

  try {
    if (validate_cmd->parsed()) return cmd_validate(file);
    if (analyze_cmd->parsed()) return cmd_analyze(file);
    if (decide_cmd->parsed()) return cmd_decide(file, escalate);
    if (plan_cmd->parsed()) return cmd_plan(file);
    if (oracle_cmd->parsed()) return cmd_oracle(file, limits);
    if (verify_cmd->parsed()) return cmd_verify(file, plan_file);
    if (generate_cmd->parsed()) {
      config.vertex_count = parse_span(vertices_span);
      config.capacity = parse_span(capacity_span);
      config.item_count = parse_span(items_span);
      if (topology == "tree") config.topology = Topology::Tree;
      else if (topology == "line") config.topology = Topology::Line;
      else if (topology == "grid") config.topology = Topology::Grid;
      else config.topology = Topology::RandomConnected;
      return cmd_generate(config, out_path);
    }
  } catch (const Error& e) {
    std::cerr << "error (" << to_string(e.code()) << "): " << e.what()
              << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
