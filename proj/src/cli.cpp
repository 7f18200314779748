#include "bcl/cli.hpp"

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "bcl/decision.hpp"
#include "bcl/endpoint.hpp"
#include "bcl/extreme.hpp"
#include "bcl/gadgets.hpp"
#include "bcl/io.hpp"
#include "bcl/model.hpp"
#include "bcl/search.hpp"
#include "bcl/svg.hpp"

namespace bcl {

namespace {

// Malformed command lines that CLI11 cannot catch itself (flag value syntax).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
  std::ostringstream ss;
  if (path == "-") {
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::invalid_argument("cannot read input file: " + path);
  ss << f.rdbuf();
  return ss.str();
}

void emit_text(const std::string& text, const std::string& out_path,
               std::ostream& out) {
  if (out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw std::invalid_argument("cannot open output file: " + out_path);
  f << text;
}

// "i,j,k" with 1-based indices -> 0-based order.
std::vector<std::size_t> parse_order_text(const std::string& text) {
  if (text.empty() || text.back() == ',')
    throw UsageError("--order expects comma-separated 1-based indices");
  std::vector<std::size_t> order;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    std::size_t used = 0;
    long v = 0;
    try {
      v = std::stol(tok, &used);
    } catch (...) {
      used = 0;
    }
    if (tok.empty() || used != tok.size() || v < 1)
      throw UsageError("--order expects comma-separated 1-based indices");
    order.push_back(static_cast<std::size_t>(v - 1));
  }
  return order;
}

std::vector<std::int64_t> parse_values_text(const std::string& text) {
  if (text.empty() || text.back() == ',')
    throw UsageError("--values expects comma-separated positive integers");
  std::vector<std::int64_t> values;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(tok, &used);
    } catch (...) {
      used = 0;
    }
    if (tok.empty() || used != tok.size())
      throw UsageError("--values expects comma-separated positive integers");
    values.push_back(v);
  }
  return values;
}

bool all_endpoints(const ProblemInstance& inst) {
  for (const Sensor& s : inst.sensors)
    if (s.x != 0.0 && s.x != 1.0) return false;
  return true;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Barrier coverage lifetime solvers for mobile sensors"};
  app.name("bcl");
  app.require_subcommand(1);

  // solve ------------------------------------------------------------------
  auto* cmd_solve = app.add_subcommand(
      "solve", "Maximize the coverage lifetime of an instance document");
  std::string solve_input, solve_order_text, solve_out, solve_format = "json";
  double solve_epsilon = 1e-6;
  bool solve_timing = false;
  cmd_solve->add_option("input", solve_input, "instance file, - for stdin")
      ->required();
  cmd_solve->add_option("--epsilon", solve_epsilon,
                        "accuracy of the lifetime search");
  cmd_solve->add_option("--order", solve_order_text,
                        "left-to-right sensor order, 1-based, e.g. 1,3,2");
  cmd_solve->add_option("--out", solve_out, "write output here, not stdout");
  cmd_solve->add_option("--format", solve_format, "output format")
      ->check(CLI::IsMember({"json", "svg"}));
  cmd_solve->add_flag("--timing", solve_timing,
                      "include wall time in the output document");

  // decide -----------------------------------------------------------------
  auto* cmd_decide = app.add_subcommand(
      "decide", "Run one coverage decision at a given lifetime and order");
  std::string decide_input, decide_order_text, decide_out,
      decide_format = "json";
  double decide_t = 0.0;
  cmd_decide->add_option("input", decide_input, "instance file, - for stdin")
      ->required();
  cmd_decide->add_option("--t", decide_t, "candidate lifetime")->required();
  cmd_decide
      ->add_option("--order", decide_order_text,
                   "left-to-right sensor order, 1-based")
      ->required();
  cmd_decide->add_option("--out", decide_out, "write output here, not stdout");
  cmd_decide->add_option("--format", decide_format, "output format")
      ->check(CLI::IsMember({"json", "svg"}));

  // generate ---------------------------------------------------------------
  auto* cmd_gen =
      app.add_subcommand("generate", "Emit gadget or random instances");
  cmd_gen->require_subcommand(1);

  auto* sub_partition = cmd_gen->add_subcommand(
      "partition", "Fixed-radii gadget from an integer list");
  std::string gp_values_text, gp_out;
  double gp_p = 0.5, gp_a = 1.0, gp_alpha = 1.0;
  sub_partition->add_option("--values", gp_values_text, "integer list, e.g. 1,1")
      ->required();
  sub_partition->add_option("--p", gp_p, "anchor position in (0,1)");
  sub_partition->add_option("--move-cost", gp_a, "movement cost per distance");
  sub_partition->add_option("--alpha", gp_alpha, "sensing cost exponent");
  sub_partition->add_option("--out", gp_out, "write output here, not stdout");

  auto* sub_three = cmd_gen->add_subcommand(
      "threepartition", "Variable-radii gadget from 3m integers");
  std::string g3_values_text, g3_out;
  std::uint64_t g3_m = 0;
  std::int64_t g3_q = 0;
  double g3_a = 1.0, g3_alpha = 1.0;
  sub_three->add_option("--values", g3_values_text, "3m integers, e.g. 3,3,2,3,3,2")
      ->required();
  sub_three->add_option("--m", g3_m, "triple count (default |values|/3)");
  sub_three->add_option("--q", g3_q, "triple sum (default total/m)");
  sub_three->add_option("--move-cost", g3_a, "movement cost per distance");
  sub_three->add_option("--alpha", g3_alpha, "sensing cost exponent");
  sub_three->add_option("--out", g3_out, "write output here, not stdout");

  auto* sub_random =
      cmd_gen->add_subcommand("random", "Seeded random instance");
  std::string gr_kind, gr_out;
  std::uint64_t gr_n = 0, gr_seed = 0;
  double gr_alpha = 1.0, gr_a = 1.0;
  bool gr_endpoints = false;
  sub_random->add_option("--n", gr_n, "sensor count")->required();
  sub_random->add_option("--kind", gr_kind, "radius model")
      ->required()
      ->check(CLI::IsMember({"fixed", "variable"}));
  sub_random->add_option("--seed", gr_seed, "random seed");
  sub_random->add_option("--alpha", gr_alpha, "sensing cost exponent");
  sub_random->add_option("--move-cost", gr_a, "movement cost per distance");
  sub_random->add_flag("--endpoints-only", gr_endpoints,
                       "draw positions from {0,1} instead of [0,1]");
  sub_random->add_option("--out", gr_out, "write output here, not stdout");

  auto* sub_block =
      cmd_gen->add_subcommand("block", "Chain of identical abutting sensors");
  std::string gb_out;
  double gb_z = 0.0, gb_battery = 0.0, gb_radius = 0.0, gb_a = 1.0,
         gb_alpha = 1.0;
  std::uint64_t gb_count = 0;
  sub_block->add_option("--z", gb_z, "left edge of the covered stretch");
  sub_block->add_option("--count", gb_count, "sensor count")->required();
  sub_block->add_option("--battery", gb_battery, "battery per sensor")
      ->required();
  sub_block->add_option("--radius", gb_radius, "fixed radius")->required();
  sub_block->add_option("--move-cost", gb_a, "movement cost per distance");
  sub_block->add_option("--alpha", gb_alpha, "sensing cost exponent");
  sub_block->add_option("--out", gb_out, "write output here, not stdout");

  // verify -----------------------------------------------------------------
  auto* cmd_verify = app.add_subcommand(
      "verify", "Check a solution document against its instance");
  std::string verify_instance, verify_solution_path, verify_out;
  cmd_verify
      ->add_option("instance", verify_instance, "instance file, - for stdin")
      ->required();
  cmd_verify->add_option("solution", verify_solution_path, "solution file")
      ->required();
  cmd_verify->add_option("--out", verify_out, "write output here, not stdout");

  // plot -------------------------------------------------------------------
  auto* cmd_plot =
      app.add_subcommand("plot", "Render a solution document as SVG");
  std::string plot_instance, plot_solution_path, plot_out;
  cmd_plot->add_option("instance", plot_instance, "instance file, - for stdin")
      ->required();
  cmd_plot->add_option("solution", plot_solution_path, "solution file")
      ->required();
  cmd_plot->add_option("--out", plot_out, "write output here, not stdout");

  try {
    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("bcl");
    for (const std::string& a : args) argv.push_back(a.c_str());
    app.parse(static_cast<int>(argv.size()), argv.data());

    if (app.got_subcommand(cmd_solve)) {
      DocumentExtras extras;
      const ProblemInstance inst =
          parse_instance(read_input(solve_input), extras);
      std::optional<std::vector<std::size_t>> order;
      if (!solve_order_text.empty())
        order = parse_order_text(solve_order_text);
      else if (extras.order)
        order = extras.order;

      SearchConfig cfg;
      cfg.epsilon = solve_epsilon;
      const bool is_static = inst.move_cost.is_static();
      const bool free_move = !is_static && inst.move_cost.value() == 0.0;

      Solution sol;
      SolutionMeta meta;
      const auto started = std::chrono::steady_clock::now();
      if (is_static || free_move) {
        if (is_static && !inst.fixed_radii()) {
          err << "unsupported: static variable-radii\n";
          return 2;
        }
        if (is_static) {
          sol = solve_static_fixed(inst);
          meta.solver = "static_fixed";
        } else if (inst.fixed_radii()) {
          sol = solve_dynamic_fixed(inst);
          meta.solver = "dynamic_fixed";
        } else {
          sol = solve_dynamic_variable(inst);
          meta.solver = "dynamic_variable";
        }
      } else if (all_endpoints(inst)) {
        sol = solve_endpoint(inst, cfg);
        meta.solver = "endpoint";
        meta.epsilon = cfg.epsilon;
      } else if (order) {
        sol = maximize_constrained(inst, *order, cfg);
        meta.solver = "constrained";
        meta.epsilon = cfg.epsilon;
      } else if (inst.size() <= cfg.max_order_n) {
        sol = maximize_exhaustive(inst, cfg);
        meta.solver = "exhaustive";
        meta.epsilon = cfg.epsilon;
      } else {
        err << "error: instance too large for an exhaustive sweep over "
               "orders; pass --order\n";
        return 2;
      }
      if (solve_timing)
        meta.wall_time_seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                          started)
                .count();
      emit_text(solve_format == "svg" ? render_svg(inst, sol)
                                      : serialize_solution(sol, meta),
                solve_out, out);
      return sol.achievable ? 0 : 1;
    }

    if (app.got_subcommand(cmd_decide)) {
      const ProblemInstance inst = parse_instance(read_input(decide_input));
      const std::vector<std::size_t> order = parse_order_text(decide_order_text);
      const DecisionOutcome outcome =
          inst.fixed_radii() ? decide_fixed(inst, order, decide_t)
                             : decide_variable(inst, order, decide_t);
      SolutionMeta meta;
      meta.solver = inst.fixed_radii() ? "decide_fixed" : "decide_variable";
      Solution sol;
      if (outcome.achievable) {
        sol = *outcome.witness;
      } else {
        sol.y.reserve(inst.size());
        for (const Sensor& s : inst.sensors) sol.y.push_back(s.x);
        sol.r.assign(inst.size(), 0.0);
        sol.order = order;
      }
      emit_text(decide_format == "svg" ? render_svg(inst, sol)
                                       : serialize_solution(sol, meta),
                decide_out, out);
      return outcome.achievable ? 0 : 1;
    }

    if (app.got_subcommand(cmd_gen)) {
      ProblemInstance inst;
      DocumentExtras extras;
      std::string out_path;
      if (cmd_gen->got_subcommand(sub_partition)) {
        inst = gen_partition_bcfr(parse_values_text(gp_values_text), gp_p,
                                  gp_a, gp_alpha);
        extras.generator = "partition";
        out_path = gp_out;
      } else if (cmd_gen->got_subcommand(sub_three)) {
        const std::vector<std::int64_t> values =
            parse_values_text(g3_values_text);
        std::size_t m = static_cast<std::size_t>(g3_m);
        std::int64_t q = g3_q;
        if (m == 0) {
          if (values.size() % 3 != 0)
            throw std::invalid_argument("value count is not a multiple of 3");
          m = values.size() / 3;
        }
        if (q == 0) {
          std::int64_t total = 0;
          for (std::int64_t v : values) total += v;
          if (m == 0 || total % static_cast<std::int64_t>(m) != 0)
            throw std::invalid_argument("values do not sum to m * q");
          q = total / static_cast<std::int64_t>(m);
        }
        inst = gen_3partition_bcvr(values, m, q, g3_a, g3_alpha).instance;
        extras.generator = "threepartition";
        out_path = g3_out;
      } else if (cmd_gen->got_subcommand(sub_random)) {
        inst = random_instance(
            static_cast<std::size_t>(gr_n),
            gr_kind == "fixed" ? ProblemKind::fixed : ProblemKind::variable,
            gr_seed,
            [&] {
              RandomParams p;
              p.alpha = gr_alpha;
              p.move_cost = gr_a;
              p.endpoints_only = gr_endpoints;
              return p;
            }());
        extras.generator = "random";
        extras.seed = gr_seed;
        out_path = gr_out;
      } else {
        Block blk;
        blk.z = gb_z;
        blk.count = static_cast<std::size_t>(gb_count);
        blk.battery = gb_battery;
        blk.radius = gb_radius;
        inst.alpha = gb_alpha;
        inst.move_cost = MoveCost::finite(gb_a);
        inst.sensors = gen_block(blk);
        extras.generator = "block";
        out_path = gb_out;
      }
      inst.validate();
      emit_text(serialize_instance(inst, extras), out_path, out);
      return 0;
    }

    if (app.got_subcommand(cmd_verify)) {
      const ProblemInstance inst = parse_instance(read_input(verify_instance));
      const Solution sol =
          parse_solution(read_input(verify_solution_path), inst.size());
      const CoverageReport rep = verify_solution(inst, sol);
      nlohmann::ordered_json j;
      j["feasible"] = rep.feasible;
      j["max_gap"] = rep.max_gap;
      j["battery_violation"] = rep.battery_violation;
      j["realized_lifetime"] = rep.realized_lifetime;
      j["achievable"] = sol.achievable;
      emit_text(j.dump(2) + "\n", verify_out, out);
      return sol.achievable && rep.feasible ? 0 : 1;
    }

    // plot
    const ProblemInstance inst = parse_instance(read_input(plot_instance));
    const Solution sol =
        parse_solution(read_input(plot_solution_path), inst.size());
    emit_text(render_svg(inst, sol), plot_out, out);
    return 0;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    app.exit(e, out, err);
    return 2;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace bcl
