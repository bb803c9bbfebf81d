#pragma once

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "semitotal/semitotal.hpp"

namespace semitotal::cli {

using nlohmann::ordered_json;

enum ExitCode : int {
  kOk = 0,
  kInvalidInput = 1,
  kVerificationFailed = 2,
  kInfeasible = 3,
  kSizeCap = 4,
};

inline int exit_code_for(Errc code) {
  switch (code) {
    case Errc::InvalidInput: return kInvalidInput;
    case Errc::Infeasible: return kInfeasible;
    case Errc::SizeCapExceeded: return kSizeCap;
    case Errc::Uncoverable: return kInvalidInput;
    case Errc::Internal: return kVerificationFailed;
  }
  return kVerificationFailed;
}

namespace detail {

inline std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  require(static_cast<bool>(in), Errc::InvalidInput, "cannot open '" + path + "'");
  return in;
}

inline std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  require(static_cast<bool>(out), Errc::InvalidInput, "cannot write '" + path + "'");
  return out;
}

inline ordered_json ids(const VertexSet& s) { return ordered_json(s.ids()); }

struct Instance {
  Graph graph;
  std::optional<IntervalModel> model;
};

inline Instance load_instance(const std::string& path, const std::string& format) {
  auto in = open_input(path);
  if (format == "intervals") {
    auto model = io::read_intervals(in);
    return {intersection_graph(canonicalize_intervals(model)), std::move(model)};
  }
  return {io::read_edge_list(in), std::nullopt};
}

inline std::optional<DominationKind> parse_kind(const std::string& s) {
  if (s == "dom") return DominationKind::Dominating;
  if (s == "total") return DominationKind::Total;
  if (s == "semitotal") return DominationKind::Semitotal;
  return std::nullopt;
}

inline VertexSet parse_inline_ids(std::string text) {
  for (char& c : text)
    if (c == ',') c = ' ';
  std::istringstream in(text);
  return io::read_vertex_set(in);
}

inline ordered_json checks_json(const ReductionReport& rep) {
  ordered_json checks = ordered_json::array();
  for (const auto& c : rep.checks)
    checks.push_back({{"identity", c.identity},
                      {"lhs", c.lhs},
                      {"rhs", c.rhs},
                      {"relation", c.relation == Relation::Equal ? "==" : "<="},
                      {"holds", c.holds}});
  return checks;
}

}  // namespace detail

/// Entry point shared by the executable and the tests. Writes exactly one
/// JSON document (or, for `gen` without --output, the instance text) to `out`.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Semitotal domination toolkit", "semitotal"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  // solve
  std::string solve_algo = "exact", solve_input, solve_format = "edgelist", solve_kind = "semitotal";
  auto* solve = app.add_subcommand("solve", "Compute a minimum or approximate semitotal dominating set");
  solve->add_option("--algo", solve_algo)->check(CLI::IsMember({"exact", "interval", "approx"}));
  solve->add_option("--input", solve_input)->required();
  solve->add_option("--format", solve_format)->check(CLI::IsMember({"edgelist", "intervals"}));
  solve->add_option("--kind", solve_kind, "Domination variant for --algo exact")
      ->check(CLI::IsMember({"dom", "total", "semitotal"}));

  // verify
  std::string verify_input, verify_set, verify_ids, verify_kind = "semitotal",
                                                    verify_format = "edgelist";
  auto* verify_cmd = app.add_subcommand("verify", "Check a vertex set against a domination condition");
  verify_cmd->add_option("--input", verify_input)->required();
  auto* set_opt = verify_cmd->add_option("--set", verify_set, "File of whitespace-separated ids");
  auto* ids_opt = verify_cmd->add_option("--ids", verify_ids, "Inline ids, e.g. 0,2,5");
  set_opt->excludes(ids_opt);
  verify_cmd->add_option("--kind", verify_kind)->check(CLI::IsMember({"dom", "total", "semitotal"}));
  verify_cmd->add_option("--format", verify_format)->check(CLI::IsMember({"edgelist", "intervals"}));

  // reduce
  std::string reduce_kind, reduce_input, reduce_partition, reduce_output;
  auto* reduce = app.add_subcommand("reduce", "Build a reduction gadget graph");
  reduce->add_option("--kind", reduce_kind)
      ->required()
      ->check(CLI::IsMember({"gp4", "bipartite", "split", "ln", "apx"}));
  reduce->add_option("--input", reduce_input)->required();
  reduce->add_option("--partition", reduce_partition);
  reduce->add_option("--output", reduce_output)->required();

  // check-reduction
  std::string check_kind, check_input, check_partition, check_family;
  std::size_t check_clique = 0, check_ind = 0, check_size = 0;
  double check_density = 0.5;
  Seed check_seed = 1;
  auto* check = app.add_subcommand("check-reduction", "Compare both sides of a reduction exactly");
  check->add_option("--kind", check_kind)
      ->required()
      ->check(CLI::IsMember({"gp4", "bipartite", "split", "ln", "apx"}));
  auto* check_input_opt = check->add_option("--input", check_input);
  check->add_option("--partition", check_partition);
  auto* check_clique_opt = check->add_option("--clique", check_clique);
  check->add_option("--ind", check_ind);
  check->add_option("--density", check_density);
  auto* check_family_opt = check->add_option("--family", check_family);
  check->add_option("--size", check_size);
  check->add_option("--seed", check_seed);
  check_input_opt->excludes(check_clique_opt)->excludes(check_family_opt);
  check_clique_opt->excludes(check_family_opt);

  // gen
  std::string gen_family, gen_output;
  std::size_t gen_size = 0, gen_clique = 1, gen_ind = 0, gen_max_length = 0;
  double gen_p = 0.3, gen_density = 0.5;
  Seed gen_seed = 1;
  auto* gen = app.add_subcommand("gen", "Generate a seeded instance");
  gen->add_option("--family", gen_family)
      ->required()
      ->check(CLI::IsMember({"path", "cycle", "star", "complete", "gp4", "random", "interval", "split"}));
  gen->add_option("--size", gen_size);
  gen->add_option("--seed", gen_seed);
  gen->add_option("--p", gen_p, "Edge probability for --family random");
  gen->add_option("--max-length", gen_max_length, "Short-interval variant for --family interval");
  gen->add_option("--clique", gen_clique);
  gen->add_option("--ind", gen_ind);
  gen->add_option("--density", gen_density);
  gen->add_option("--output", gen_output);

  // bench
  std::string bench_algo = "interval";
  std::vector<std::size_t> bench_sizes{500, 1000, 2000};
  Seed bench_seed = 1;
  std::size_t bench_reps = 3;
  auto* bench = app.add_subcommand("bench", "Time the interval solver on seeded models");
  bench->add_option("--algo", bench_algo)->check(CLI::IsMember({"interval"}));
  bench->add_option("--sizes", bench_sizes)->delimiter(',');
  bench->add_option("--seed", bench_seed);
  bench->add_option("--reps", bench_reps)->check(CLI::PositiveNumber);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kInvalidInput;
  }

  std::string command = app.get_subcommands().front()->get_name();
  const auto start = std::chrono::steady_clock::now();
  auto elapsed_ms = [&] {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
  };

  try {
    if (command == "solve") {
      auto inst = detail::load_instance(solve_input, solve_format);
      const Graph& g = inst.graph;
      VertexSet set;
      ordered_json extra = ordered_json::object();
      DominationKind check_kind_for_result = DominationKind::Semitotal;
      if (solve_algo == "interval") {
        require(inst.model.has_value(), Errc::InvalidInput,
                "--algo interval needs --format intervals");
        set = solve_interval(*inst.model);
        const auto labels = component_labels(g);
        extra["components"] = *std::max_element(labels.begin(), labels.end()) + 1;
      } else if (solve_algo == "approx") {
        set = approx_semitotal(g);
        extra["maxDegree"] = g.max_degree();
        extra["ratioBound"] = approx_semitotal_ratio(g.max_degree());
      } else {
        check_kind_for_result = *detail::parse_kind(solve_kind);
        set = exact_min(g, check_kind_for_result);
        extra["kind"] = solve_kind;
      }
      const bool verified = verify(g, set, check_kind_for_result).valid;
      ordered_json doc{{"command", "solve"},
                       {"algorithm", solve_algo},
                       {"n", g.order()},
                       {"m", g.size()},
                       {"size", set.size()},
                       {"set", detail::ids(set)},
                       {"verified", verified},
                       {"elapsedMs", elapsed_ms()},
                       {"extra", extra}};
      out << doc.dump(2) << '\n';
      return verified ? kOk : kVerificationFailed;
    }

    if (command == "verify") {
      auto inst = detail::load_instance(verify_input, verify_format);
      VertexSet set;
      if (!verify_set.empty()) {
        auto in = detail::open_input(verify_set);
        set = io::read_vertex_set(in);
      } else {
        set = detail::parse_inline_ids(verify_ids);
      }
      const auto kind = *detail::parse_kind(verify_kind);
      const auto report = verify(inst.graph, set, kind);
      ordered_json violations = ordered_json::array();
      for (const auto& v : report.violations)
        violations.push_back({{"vertex", v.vertex}, {"reason", to_string(v.reason)}});
      ordered_json doc{{"command", "verify"},
                       {"kind", verify_kind},
                       {"n", inst.graph.order()},
                       {"m", inst.graph.size()},
                       {"set", detail::ids(set)},
                       {"valid", report.valid},
                       {"violations", violations}};
      out << doc.dump(2) << '\n';
      return report.valid ? kOk : kVerificationFailed;
    }

    if (command == "reduce") {
      auto in = detail::open_input(reduce_input);
      const Graph g = io::read_edge_list(in);
      const auto kind = *parse_gadget_kind(reduce_kind);
      std::optional<SplitPartition> partition;
      if (!reduce_partition.empty()) {
        auto pin = detail::open_input(reduce_partition);
        partition = io::read_partition(pin, g.order());
      }
      const auto go = build_gadget(g, kind, partition);
      {
        auto gout = detail::open_output(reduce_output);
        io::write_edge_list(gout, go.h);
      }
      const std::string roles_path = reduce_output + ".roles.json";
      ordered_json roles = ordered_json::array();
      for (Vertex v = 0; v < go.roles.size(); ++v)
        roles.push_back({{"vertex", v}, {"role", role_name(go.roles[v])}});
      ordered_json sidecar{{"kind", reduce_kind},
                           {"sourceN", g.order()},
                           {"sourceM", g.size()},
                           {"roles", roles}};
      if (go.h_partition)
        sidecar["partition"] = {{"clique", detail::ids(go.h_partition->clique)},
                                {"independent", detail::ids(go.h_partition->independent)}};
      {
        auto rout = detail::open_output(roles_path);
        rout << sidecar.dump(2) << '\n';
      }
      ordered_json doc{{"command", "reduce"},
                       {"kind", reduce_kind},
                       {"n", g.order()},
                       {"m", g.size()},
                       {"hN", go.h.order()},
                       {"hM", go.h.size()},
                       {"output", reduce_output},
                       {"rolesFile", roles_path}};
      out << doc.dump(2) << '\n';
      return kOk;
    }

    if (command == "check-reduction") {
      const auto kind = *parse_gadget_kind(check_kind);
      Graph g;
      std::optional<SplitPartition> partition;
      if (!check_input.empty()) {
        auto in = detail::open_input(check_input);
        g = io::read_edge_list(in);
        if (!check_partition.empty()) {
          auto pin = detail::open_input(check_partition);
          partition = io::read_partition(pin, g.order());
        }
      } else if (check->count("--clique") > 0) {
        auto [sg, sp] = gen_split_graph(check_clique, check_ind, check_density, check_seed);
        g = std::move(sg);
        partition = std::move(sp);
      } else if (!check_family.empty()) {
        auto fam = parse_family(check_family);
        require(fam.has_value(), Errc::InvalidInput, "unknown family '" + check_family + "'");
        g = gen_named(*fam, check_size, check_seed);
      } else {
        fail(Errc::InvalidInput, "check-reduction needs --input, --clique/--ind or --family/--size");
      }
      const auto rep = check_reduction(g, kind, partition);
      ordered_json doc{{"command", "check-reduction"},
                       {"kind", check_kind},
                       {"n", rep.n},
                       {"m", rep.m},
                       {"hN", rep.h_order},
                       {"hM", rep.h_size},
                       {"checks", detail::checks_json(rep)},
                       {"holds", rep.holds()},
                       {"elapsedMs", elapsed_ms()}};
      out << doc.dump(2) << '\n';
      return rep.holds() ? kOk : kVerificationFailed;
    }

    if (command == "gen") {
      std::ostringstream text;
      std::optional<SplitPartition> partition;
      std::size_t n = 0, m = 0;
      if (gen_family == "interval") {
        const auto model = gen_max_length > 0 ? gen_interval_model(gen_size, gen_seed, gen_max_length)
                                              : gen_interval_model(gen_size, gen_seed);
        io::write_intervals(text, model);
        n = model.size();
        m = intersection_graph(model).size();
      } else {
        Graph g;
        if (gen_family == "random") {
          g = gen_connected_graph(gen_size, gen_p, gen_seed);
        } else if (gen_family == "split") {
          auto [sg, sp] = gen_split_graph(gen_clique, gen_ind, gen_density, gen_seed);
          g = std::move(sg);
          partition = std::move(sp);
        } else {
          g = gen_named(*parse_family(gen_family), gen_size, gen_seed);
        }
        io::write_edge_list(text, g);
        n = g.order();
        m = g.size();
      }
      if (gen_output.empty()) {
        out << text.str();
        return kOk;
      }
      {
        auto file = detail::open_output(gen_output);
        file << text.str();
      }
      ordered_json doc{{"command", "gen"},
                       {"family", gen_family},
                       {"seed", gen_seed},
                       {"n", n},
                       {"m", m},
                       {"output", gen_output}};
      if (partition) {
        const std::string ppath = gen_output + ".partition";
        auto pfile = detail::open_output(ppath);
        io::write_partition(pfile, *partition);
        doc["partitionFile"] = ppath;
      }
      out << doc.dump(2) << '\n';
      return kOk;
    }

    if (command == "bench") {
      ordered_json rows = ordered_json::array();
      std::vector<double> times;
      for (std::size_t n : bench_sizes) {
        require(n >= 2, Errc::InvalidInput, "bench sizes must be at least 2");
        // Seeds advance until the model is feasible (no interval in isolation).
        Seed seed = bench_seed;
        IntervalModel model;
        for (;; ++seed) {
          model = gen_interval_model(n, seed);
          if (!has_isolated_vertex(intersection_graph(canonicalize_intervals(model)))) break;
        }
        double best = std::numeric_limits<double>::infinity();
        std::size_t size = 0;
        for (std::size_t r = 0; r < bench_reps; ++r) {
          const auto t0 = std::chrono::steady_clock::now();
          size = solve_interval(model).size();
          best = std::min(best, std::chrono::duration<double, std::milli>(
                                    std::chrono::steady_clock::now() - t0)
                                    .count());
        }
        times.push_back(best);
        rows.push_back({{"n", n}, {"seed", seed}, {"ms", best}, {"size", size}});
      }
      ordered_json ratios = ordered_json::array();
      for (std::size_t i = 1; i < times.size(); ++i)
        ratios.push_back(times[i - 1] > 0 ? times[i] / times[i - 1] : 0.0);
      ordered_json doc{{"command", "bench"},
                       {"algorithm", bench_algo},
                       {"rows", rows},
                       {"ratios", ratios}};
      out << doc.dump(2) << '\n';
      return kOk;
    }
  } catch (const Error& e) {
    ordered_json doc{{"command", command},
                     {"error", {{"code", to_string(e.code())}, {"message", e.what()}}}};
    out << doc.dump(2) << '\n';
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  }
  return kInvalidInput;
}

}  // namespace semitotal::cli
