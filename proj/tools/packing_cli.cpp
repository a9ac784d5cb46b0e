// Command-line front end: solve / reduce / map-solution / verify / gen /
// selftest over the two instance file formats. Machine-readable output is a
// single JSON object on stdout; diagnostics go to stderr.
//
// Exit codes: 0 success, 1 infeasible solution or verification failure,
// 2 input error.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "packing/packing.hpp"

using json = nlohmann::json;
using namespace packing;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInfeasible = 1;
constexpr int kExitInputError = 2;

std::vector<int> to_external(std::span<const int> ids) {
  std::vector<int> out(ids.begin(), ids.end());
  for (int& v : out) ++v;
  return out;
}

void emit(const json& j) { std::cout << j.dump() << "\n"; }

const Graph& as_graph(const InstanceFile& f) {
  if (f.kind != InstanceKind::graph)
    throw InputError(f.source_path + ": expected a graph instance");
  return std::get<Graph>(f.payload);
}

const SetSystem& as_set_system(const InstanceFile& f) {
  if (f.kind != InstanceKind::set_system)
    throw InputError(f.source_path + ": expected a setsystem instance");
  return std::get<SetSystem>(f.payload);
}

/// Reductions operate on normalized systems; empty sets are dropped here and
/// reported so that target set ids stay reproducible.
SetSystem normalized_for_reduction(const SetSystem& t, json& out) {
  if (is_normalized(t)) return t;
  NormalizeResult norm = normalize(t);
  out["removed_empty_sets"] = to_external(norm.removed_ids);
  std::cerr << "note: removed " << norm.removed_ids.size()
            << " empty set(s) before reducing\n";
  return std::move(norm.system);
}

json report_json(const SolveReport& rep) {
  return {{"problem", to_string(rep.problem)},
          {"algo", to_string(rep.algo)},
          {"size", rep.size},
          {"solution", to_external(rep.ids())},
          {"optimal", rep.optimal},
          {"elapsed_ms", rep.elapsed_ms}};
}

int cmd_solve(const std::string& file, const std::string& problem,
              const std::string& algo, int k) {
  const InstanceFile inst = load_instance(file);
  SolveReport rep;
  if (algo == "decide") {
    if (k < 0) throw InputError("--algo decide requires --k");
    detail::Stopwatch sw;
    bool answer = false;
    json witness = json::array();
    int size = 0;
    if (problem == "vp") {
      auto w = find_vertex_packing(as_graph(inst), k);
      answer = w.has_value();
      if (w) witness = to_external(w->ids()), size = w->size();
    } else if (problem == "ep") {
      auto w = find_edge_packing(as_graph(inst), k);
      answer = w.has_value();
      if (w) witness = to_external(w->ids()), size = w->size();
    } else if (problem == "sp") {
      auto w = find_set_packing(as_set_system(inst), k);
      answer = w.has_value();
      if (w) witness = to_external(w->ids()), size = w->size();
    } else if (problem == "scbar") {
      auto w = find_element_packing(as_set_system(inst), k);
      answer = w.has_value();
      if (w) witness = to_external(w->ids()), size = w->size();
    } else {
      throw InputError("unknown problem '" + problem + "'");
    }
    emit({{"problem", problem},
          {"algo", "decide"},
          {"k", k},
          {"answer", answer},
          {"size", size},
          {"solution", witness},
          {"optimal", false},
          {"elapsed_ms", sw.ms()}});
    return kExitOk;
  }

  if (problem == "vp") {
    const Graph& g = as_graph(inst);
    if (algo == "exact")
      rep = exact_vertex_packing(g);
    else if (algo == "approx")
      rep = approx_vertex_packing(g);
    else
      throw InputError("--problem vp supports --algo exact|approx|decide");
  } else if (problem == "ep") {
    const Graph& g = as_graph(inst);
    if (algo == "exact")
      rep = exact_edge_packing(g);
    else if (algo == "approx")
      rep = approx_edge_packing(g);
    else
      throw InputError("--problem ep supports --algo exact|approx|decide");
  } else if (problem == "sp") {
    const SetSystem& t = as_set_system(inst);
    if (algo == "exact")
      rep = exact_set_packing(t);
    else if (algo == "greedy")
      rep = greedy_set_packing(t);
    else
      throw InputError("--problem sp supports --algo exact|greedy|decide");
  } else if (problem == "scbar") {
    const SetSystem& t = as_set_system(inst);
    if (algo == "exact")
      rep = exact_element_packing(t);
    else
      throw InputError("--problem scbar supports --algo exact|decide");
  } else {
    throw InputError("unknown problem '" + problem + "'");
  }
  emit(report_json(rep));
  return kExitOk;
}

int cmd_reduce(const std::string& file, const std::string& route,
               const std::string& out_path) {
  const InstanceFile inst = load_instance(file);
  json out{{"command", "reduce"}, {"route", route}};
  std::string serialized;
  if (route == "scbar-sp") {
    const SetSystem t = normalized_for_reduction(as_set_system(inst), out);
    serialized = serialize_set_system(sc_to_set_packing(t).target);
  } else if (route == "scbar-ep") {
    const SetSystem t = normalized_for_reduction(as_set_system(inst), out);
    serialized = serialize_graph(sc_to_edge_packing(t).target);
  } else if (route == "scbar-vp") {
    const SetSystem t = normalized_for_reduction(as_set_system(inst), out);
    serialized = serialize_graph(sc_to_vertex_packing(t).target);
  } else if (route == "vp-scbar") {
    serialized = serialize_set_system(vertex_packing_to_sc(as_graph(inst)));
  } else if (route == "ep-vp") {
    serialized = serialize_graph(edge_packing_to_vertex_packing(as_graph(inst)));
  } else {
    throw InputError("unknown route '" + route + "'");
  }
  write_file(out_path, serialized);
  out["output"] = out_path;
  emit(out);
  return kExitOk;
}

int cmd_map_solution(const std::string& route, const std::string& instance_path,
                     const std::string& solution_path, const std::string& direction,
                     const std::string& out_path) {
  const InstanceFile inst = load_instance(instance_path);
  std::vector<int> ids = parse_solution_ids(read_file(solution_path));
  const bool forward = direction == "forward";
  if (!forward && direction != "backward")
    throw InputError("--direction must be forward or backward");

  json meta;
  std::vector<int> mapped;
  if (route == "scbar-sp") {
    const auto w = sc_to_set_packing(normalized_for_reduction(as_set_system(inst), meta));
    if (forward) {
      auto r = map_elements_to_sets(w, ElementPacking(ids));
      mapped.assign(r.ids().begin(), r.ids().end());
    } else {
      auto r = map_sets_to_elements(w, SetPacking(ids));
      mapped.assign(r.ids().begin(), r.ids().end());
    }
  } else if (route == "scbar-ep") {
    const auto w = sc_to_edge_packing(normalized_for_reduction(as_set_system(inst), meta));
    if (forward) {
      auto r = map_elements_to_edges(w, ElementPacking(ids));
      mapped.assign(r.ids().begin(), r.ids().end());
    } else {
      auto r = map_edges_to_elements(w, EdgePacking(ids));
      mapped.assign(r.ids().begin(), r.ids().end());
    }
  } else if (route == "scbar-vp") {
    const auto w = sc_to_vertex_packing(normalized_for_reduction(as_set_system(inst), meta));
    if (forward) {
      auto r = map_elements_to_vertices(w, ElementPacking(ids));
      mapped.assign(r.ids().begin(), r.ids().end());
    } else {
      auto r = map_vertices_to_elements(w, VertexPacking(ids));
      mapped.assign(r.ids().begin(), r.ids().end());
    }
  } else if (route == "vp-scbar") {
    const Graph& g = as_graph(inst);
    if (forward) {
      auto r = vertex_packing_solution_to_sc(g, VertexPacking(ids));
      mapped.assign(r.ids().begin(), r.ids().end());
    } else {
      auto r = sc_solution_to_vertex_packing(g, ElementPacking(ids));
      mapped.assign(r.ids().begin(), r.ids().end());
    }
  } else if (route == "ep-vp") {
    const Graph& g = as_graph(inst);
    if (forward) {
      auto r = edge_packing_solution_to_line_graph(g, EdgePacking(ids));
      mapped.assign(r.ids().begin(), r.ids().end());
    } else {
      auto r = line_graph_solution_to_edge_packing(g, VertexPacking(ids));
      mapped.assign(r.ids().begin(), r.ids().end());
    }
  } else {
    throw InputError("unknown route '" + route + "'");
  }

  json out{{"command", "map-solution"},
           {"route", route},
           {"direction", direction},
           {"input_size", ids.size()},
           {"size", mapped.size()},
           {"solution", to_external(mapped)}};
  for (auto& [key, value] : meta.items()) out[key] = value;
  if (!out_path.empty()) {
    write_file(out_path, serialize_solution_ids(mapped));
    out["output"] = out_path;
  }
  emit(out);
  return kExitOk;
}

int cmd_verify(const std::string& problem, const std::string& instance_path,
               const std::string& solution_path) {
  const InstanceFile inst = load_instance(instance_path);
  std::vector<int> ids = parse_solution_ids(read_file(solution_path));
  bool feasible = false;
  if (problem == "vp")
    feasible = is_vertex_packing(as_graph(inst), VertexPacking(ids));
  else if (problem == "ep")
    feasible = is_edge_packing(as_graph(inst), EdgePacking(ids));
  else if (problem == "sp")
    feasible = is_set_packing(as_set_system(inst), SetPacking(ids));
  else if (problem == "scbar")
    feasible = is_element_packing(as_set_system(inst), ElementPacking(ids));
  else
    throw InputError("unknown problem '" + problem + "'");

  emit({{"command", "verify"},
        {"problem", problem},
        {"feasible", feasible},
        {"size", ids.size()}});
  if (!feasible) {
    std::cerr << "infeasible: the solution violates the " << problem
              << " packing condition\n";
    return kExitInfeasible;
  }
  return kExitOk;
}

int cmd_selftest(const SelftestOptions& opt) {
  const EquivalenceReport rep = run_selftest(opt);
  json routes = json::object();
  for (const char* route :
       {"scbar-sp", "scbar-ep", "scbar-vp", "vp-scbar", "ep-vp", "negative-control"})
    routes[route] = rep.route_count(route);
  json failing = json::array();
  for (const auto& r : rep.records)
    if (!r.pass)
      failing.push_back({{"route", r.route},
                         {"instance", r.instance_digest},
                         {"source_opt", r.source_opt},
                         {"target_opt", r.target_opt},
                         {"detail", r.detail}});
  emit({{"command", "selftest"},
        {"instances", rep.instances_checked},
        {"records", rep.records.size()},
        {"failures", rep.failures},
        {"routes", routes},
        {"failing_records", failing},
        {"pass", rep.pass()}});
  std::cerr << "selftest: " << rep.instances_checked << " instances, "
            << rep.records.size() << " records, " << rep.failures << " failures\n";
  return rep.pass() ? kExitOk : kExitInfeasible;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"packing problems, reductions, and solution maps"};
  app.require_subcommand(1);

  // solve
  std::string solve_file, solve_problem, solve_algo;
  int solve_k = -1;
  auto* solve = app.add_subcommand("solve", "solve a packing problem on an instance file");
  solve->add_option("file", solve_file, "instance file")->required();
  solve->add_option("--problem", solve_problem, "vp | ep | sp | scbar")->required();
  solve->add_option("--algo", solve_algo, "exact | greedy | approx | decide")->required();
  solve->add_option("--k", solve_k, "size bound for --algo decide");

  // reduce
  std::string reduce_file, reduce_route, reduce_out;
  auto* reduce = app.add_subcommand("reduce", "construct the reduced instance");
  reduce->add_option("file", reduce_file, "source instance file")->required();
  reduce->add_option("--route", reduce_route,
                     "scbar-sp | scbar-ep | scbar-vp | vp-scbar | ep-vp")
      ->required();
  reduce->add_option("-o,--output", reduce_out, "target instance file")->required();

  // map-solution
  std::string map_route, map_instance, map_solution, map_out;
  std::string map_direction = "backward";
  auto* map = app.add_subcommand(
      "map-solution", "map a solution across a reduction (default: target to source)");
  map->add_option("--route", map_route, "reduction route")->required();
  map->add_option("--instance", map_instance, "source instance file")->required();
  map->add_option("--solution", map_solution, "solution file (1-based ids)")->required();
  map->add_option("--direction", map_direction, "forward | backward (default backward)");
  map->add_option("-o,--output", map_out, "write the mapped solution here");

  // verify
  std::string verify_problem, verify_instance, verify_solution;
  auto* verify = app.add_subcommand("verify", "check feasibility of a solution");
  verify->add_option("--problem", verify_problem, "vp | ep | sp | scbar")->required();
  verify->add_option("--instance", verify_instance, "instance file")->required();
  verify->add_option("--solution", verify_solution, "solution file")->required();

  // gen
  auto* gen = app.add_subcommand("gen", "generate a seeded random instance");
  gen->require_subcommand(1);
  int gnp_n = 0;
  double gnp_p = 0.0;
  std::uint64_t gnp_seed = 1;
  std::string gnp_out;
  auto* gnp = gen->add_subcommand("gnp", "G(n,p) random graph");
  gnp->add_option("--n", gnp_n, "vertex count")->required();
  gnp->add_option("--p", gnp_p, "edge probability")->required();
  gnp->add_option("--seed", gnp_seed, "seed");
  gnp->add_option("-o,--output", gnp_out, "output file")->required();

  int ss_n = 0, ss_m = 0, ss_max = 1;
  std::uint64_t ss_seed = 1;
  std::string ss_out;
  auto* ss = gen->add_subcommand("setsystem", "random set system");
  ss->add_option("--n", ss_n, "universe size")->required();
  ss->add_option("--m", ss_m, "number of sets")->required();
  ss->add_option("--max-set-size", ss_max, "maximum set size")->required();
  ss->add_option("--seed", ss_seed, "seed");
  ss->add_option("-o,--output", ss_out, "output file")->required();

  // selftest
  SelftestOptions st;
  auto* selftest = app.add_subcommand(
      "selftest", "run the reduction equivalence suite on enumerated and random instances");
  selftest->add_option("--max-n", st.max_n, "bound on universe / vertex count");
  selftest->add_option("--max-m", st.max_m, "bound on number of sets");
  selftest->add_option("--samples", st.samples, "random instances per kind");
  selftest->add_option("--seed", st.seed, "seed");
  selftest->add_flag("--inject-corruption", st.inject_corruption,
                     "negative control: push one corrupted solution through the checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (*solve) return cmd_solve(solve_file, solve_problem, solve_algo, solve_k);
    if (*reduce) return cmd_reduce(reduce_file, reduce_route, reduce_out);
    if (*map) return cmd_map_solution(map_route, map_instance, map_solution,
                                      map_direction, map_out);
    if (*verify) return cmd_verify(verify_problem, verify_instance, verify_solution);
    if (*gnp) {
      const Graph g = gen_gnp(gnp_n, gnp_p, gnp_seed);
      write_file(gnp_out, serialize_graph(g));
      emit({{"command", "gen"},
            {"kind", "graph"},
            {"n", gnp_n},
            {"m", g.edge_count()},
            {"p", gnp_p},
            {"seed", gnp_seed},
            {"output", gnp_out}});
      return kExitOk;
    }
    if (*ss) {
      const SetSystem t = gen_setsystem(ss_n, ss_m, ss_max, ss_seed);
      write_file(ss_out, serialize_set_system(t));
      emit({{"command", "gen"},
            {"kind", "setsystem"},
            {"n", ss_n},
            {"m", ss_m},
            {"max_set_size", ss_max},
            {"seed", ss_seed},
            {"output", ss_out}});
      return kExitOk;
    }
    if (*selftest) return cmd_selftest(st);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const ContractError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInfeasible;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInfeasible;
  }
  return kExitInputError;
}
