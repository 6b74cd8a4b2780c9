// distk: command-line front end for the distk library.
//
// Exit codes: 0 solved, 1 verification failed, 2 oracle refused (size
// limits), 3 input error, 4 internal postcondition failure.

#include <CLI11.hpp>

#include <atomic>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <distk/distk.hpp>

using namespace distk;

namespace {

enum Exit { kOk = 0, kVerifyFailed = 1, kRefused = 2, kInputError = 3, kInternal = 4 };

std::string fnv1a(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  std::ostringstream out;
  out << std::hex << std::setw(16) << std::setfill('0') << h;
  return out.str();
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Graph load_graph(const std::string& path) {
  std::istringstream in(slurp(path));
  return read_edge_list(in, path);
}

VertexSet load_a(const Graph& g, const std::string& path) {
  if (path.empty()) return VertexSet::range(g.num_vertices());
  VertexSet a = read_file(path, [](std::istream& in, const std::string& src) { return read_vertex_set(in, src); });
  require_subset(g, a, "A-file");
  return a;
}

Json sets_to_json(const std::vector<VertexSet>& sets) {
  Json out = Json::array();
  for (const auto& s : sets) out.push_back(to_json(s));
  return out;
}

void emit(const Json& j) { std::cout << j.dump(2) << '\n'; }

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  }
};

// ---------------------------------------------------------------------------
// gen

struct GenArgs {
  std::string kind;
  int n = 0, w = 0, h = 0, d = 3, r = 1, extra = 0;
  std::uint64_t seed = 0;
  std::string input, out;
};

int cmd_gen(const GenArgs& args) {
  Graph g;
  SideCar side;
  auto add_set = [&](const std::string& key, const VertexSet& s) {
    for (Vertex v : s) side.emplace_back(key, v);
  };
  const std::string& k = args.kind;
  if (k == "path" || k == "cycle" || k == "star" || k == "complete") {
    g = family(parse_family(k), {args.n});
  } else if (k == "grid") {
    g = grid_graph(args.w, args.h);
  } else if (k == "tree") {
    g = random_tree(args.n, args.seed);
  } else if (k == "random") {
    g = random_connected_graph(args.n, args.extra, args.seed);
  } else if (k == "bucket") {
    auto sample = bucket_model(args.n, args.d, args.seed);
    const int cycle = girth(sample.g);
    if (cycle != kInfinity && cycle < args.d)
      throw PostconditionFailure("bucket sample has girth " + std::to_string(cycle) + " < d");
    if (sample.g.max_degree() > args.d) throw PostconditionFailure("bucket sample exceeds degree d");
    g = sample.g;
    side.emplace_back("removed_edges", static_cast<Vertex>(sample.removed_edges));
  } else if (k == "subdivide" || k == "pendant" || k == "hardness") {
    if (args.input.empty()) throw std::invalid_argument("gen " + k + " needs --input");
    Graph base = load_graph(args.input);
    if (k == "subdivide") {
      auto sub = exact_subdivision(base, args.r);
      g = sub.graph;
      add_set("origin", sub.origin);
    } else if (k == "pendant") {
      auto p = pendant_construction(base, args.r);
      g = p.graph;
      add_set("origin", p.origin);
      side.emplace_back("x", p.x);
      side.emplace_back("y", p.y);
    } else {
      auto hr = hardness_reduction(base, args.r);
      g = hr.h;
      add_set("origin", hr.origin);
      side.emplace_back("x", hr.x);
      side.emplace_back("y", hr.y);
    }
  } else {
    throw std::invalid_argument("unknown generator '" + k + "'");
  }

  if (args.out.empty()) {
    write_edge_list(std::cout, g);
    return kOk;
  }
  write_file(args.out + ".el", [&](std::ostream& o) { write_edge_list(o, g, "distk gen " + k); });
  if (!side.empty()) write_file(args.out + ".side", [&](std::ostream& o) { write_side_car(o, side); });
  return kOk;
}

// ---------------------------------------------------------------------------
// solve

struct SolveArgs {
  std::string problem, input, a_file;
  int r = 1, k = 1, t = 3;
  std::size_t m = 2, s_max = 2;
  std::uint64_t seed = 0;
  bool timing = false;
};

Json solve_outputs(const SolveArgs& args, const Graph& g, const VertexSet& a) {
  const std::string& p = args.problem;
  const int r = args.r;
  Json out;
  if (p == "alpha") {
    auto res = alpha_exact(g, a, r);
    if (!is_distance_independent(g, res.witness, r)) throw PostconditionFailure("alpha witness not independent");
    out = {{"value", res.value}, {"witness", to_json(res.witness)}};
  } else if (p == "gamma") {
    auto res = gamma_exact(g, a, r);
    if (!is_distance_dominating(g, res.witness, a, r)) throw PostconditionFailure("gamma witness not dominating");
    out = {{"value", res.value}, {"witness", to_json(res.witness)}};
  } else if (p == "lp") {
    auto dual = lp_duality(g, a, r);
    out = {{"value", to_json(dual.covering.value)},
           {"covering_value", to_json(dual.covering.value)},
           {"packing_value", to_json(dual.packing.value)}};
  } else if (p == "vc2") {
    auto res = two_vc_dimension(restrict_system(balls_system(g, r), a));
    if (auto why = two_shatter_violation(g, r, res.witness); !why.empty()) throw PostconditionFailure(why);
    Json centers = Json::array();
    for (const auto& [pair, c] : res.witness.pair_centers) centers.push_back({pair.first, pair.second, c});
    out = {{"value", res.dimension}, {"witness", to_json(res.witness.a_set)}, {"pair_centers", centers}};
  } else if (p == "minor") {
    auto model = depth_minor_contains(g, args.t, r);
    out = {{"t", args.t}, {"contains", model.has_value()}};
    if (model) {
      if (auto why = minor_model_violation(g, *model); !why.empty()) throw PostconditionFailure(why);
      out["branch_sets"] = sets_to_json(model->branch_sets);
    }
  } else if (p == "duality") {
    out = to_json(duality_report(g, a, r, true));
    out.erase("schema");
  } else if (p == "uqw") {
    auto res = find_uqw(g, a, r, args.m, args.s_max);
    out = {{"found", res.has_value()}};
    if (res) {
      out["s"] = to_json(res->s);
      out["b"] = to_json(res->b);
    }
  } else {
    throw std::invalid_argument("unknown problem '" + p + "'");
  }
  return out;
}

int cmd_solve(const SolveArgs& args) {
  Timer timer;
  const std::string text = slurp(args.input);
  std::istringstream in(text);
  Graph g = read_edge_list(in, args.input);
  VertexSet a = load_a(g, args.a_file);
  Json rep{{"schema", kSchemaVersion},
           {"command", "solve " + args.problem},
           {"input_digest", fnv1a(text + (args.a_file.empty() ? "" : slurp(args.a_file)))},
           {"parameters", {{"r", args.r}, {"k", args.k}, {"t", args.t}, {"m", args.m}, {"s_max", args.s_max}}},
           {"seed", args.seed}};
  rep["outputs"] = solve_outputs(args, g, a);
  if (args.timing) rep["wall_ms"] = timer.ms();
  emit(rep);
  return kOk;
}

// ---------------------------------------------------------------------------
// kernel

struct KernelArgs {
  std::string input, a_file, out;
  int r = 1, k = 1;
  std::optional<std::size_t> target;
  std::size_t s_max = 2;
  std::uint64_t seed = 0;
  bool timing = false;
};

int cmd_kernel(const KernelArgs& args) {
  Timer timer;
  const std::string text = slurp(args.input);
  std::istringstream in(text);
  AnnotatedInstance inst{read_edge_list(in, args.input), {}, args.r, args.k};
  inst.a_set = load_a(inst.graph, args.a_file);
  KernelPolicy policy;
  policy.target = args.target;
  policy.s_max = args.s_max;
  KernelOutcome outcome = kernelize(inst, policy);
  if (outcome.tag == KernelOutcome::Tag::kKernel && !outcome.b.is_subset_of(inst.a_set))
    throw PostconditionFailure("kernel B is not a subset of A");

  Json rep = to_json(outcome);
  rep["command"] = "kernel";
  rep["input_digest"] = fnv1a(text + (args.a_file.empty() ? "" : slurp(args.a_file)));
  rep["parameters"] = {{"r", args.r}, {"k", args.k}, {"s_max", args.s_max}};
  if (args.target) rep["parameters"]["target"] = *args.target;
  rep["seed"] = args.seed;
  if (args.timing) rep["wall_ms"] = timer.ms();

  if (!args.out.empty()) {
    if (outcome.tag == KernelOutcome::Tag::kKernel) {
      write_file(args.out + ".Y", [&](std::ostream& o) { write_vertex_set(o, outcome.y); });
      write_file(args.out + ".B", [&](std::ostream& o) { write_vertex_set(o, outcome.b); });
    }
    write_file(args.out + ".json", [&](std::ostream& o) { o << to_json(outcome).dump(2) << '\n'; });
  }
  emit(rep);
  return kOk;
}

// ---------------------------------------------------------------------------
// verify-cert

struct VerifyArgs {
  std::string input, a_file, log;
};

int cmd_verify(const VerifyArgs& args) {
  Graph g = load_graph(args.input);
  VertexSet a = load_a(g, args.a_file);
  Json doc = Json::parse(slurp(args.log));
  const Json& log = doc.is_array() ? doc : doc.at("removal_log");
  std::size_t index = 0;
  for (const Json& item : log) {
    RemovalEntry entry = removal_entry_from_json(item);
    auto check = verify_certificate(g, a, entry.certificate);
    if (check && !entry.certificate.l_prime.contains(entry.removed))
      check = {false, "removed vertex is not in l_prime"};
    if (!check) {
      emit({{"schema", kSchemaVersion}, {"ok", false}, {"entry", index}, {"failure", check.failure}});
      return kVerifyFailed;
    }
    a.erase(entry.removed);
    ++index;
  }
  emit({{"schema", kSchemaVersion}, {"ok", true}, {"entries", index}, {"remaining", a.size()}});
  return kOk;
}

// ---------------------------------------------------------------------------
// bench

// Manifest lines: `<task> <graph> key=v1,v2 ...` with task in {kernel, duality}
// and graph one of path:N cycle:N star:N complete:N grid:W:H tree:N:SEED
// random:N:EXTRA:SEED bucket:N:D:SEED file:PATH. Keys r and k take value
// lists whose Cartesian product expands into rows. `#` starts a comment.

struct BenchRow {
  std::string task, graph;
  int r = 1, k = 1;
};

Graph graph_from_descriptor(const std::string& desc) {
  std::vector<std::string> parts;
  std::stringstream ss(desc);
  for (std::string part; std::getline(ss, part, ':');) parts.push_back(part);
  if (parts.empty()) throw std::invalid_argument("empty graph descriptor");
  const std::string& kind = parts[0];
  if (kind == "file") {
    if (parts.size() != 2) throw std::invalid_argument("file descriptor needs a path");
    return load_graph(parts[1]);
  }
  std::vector<long long> nums;
  for (std::size_t i = 1; i < parts.size(); ++i) nums.push_back(std::stoll(parts[i]));
  auto need = [&](std::size_t c) {
    if (nums.size() != c) throw std::invalid_argument("graph descriptor '" + desc + "' has wrong arity");
  };
  if (kind == "tree") {
    need(2);
    return random_tree(static_cast<Vertex>(nums[0]), static_cast<std::uint64_t>(nums[1]));
  }
  if (kind == "random") {
    need(3);
    return random_connected_graph(static_cast<Vertex>(nums[0]), static_cast<int>(nums[1]),
                                  static_cast<std::uint64_t>(nums[2]));
  }
  if (kind == "bucket") {
    need(3);
    return bucket_model(static_cast<Vertex>(nums[0]), static_cast<int>(nums[1]), static_cast<std::uint64_t>(nums[2])).g;
  }
  std::vector<int> params(nums.begin(), nums.end());
  return family(parse_family(kind), params);
}

std::vector<BenchRow> parse_manifest(const std::string& path) {
  std::istringstream in(slurp(path));
  std::vector<BenchRow> rows;
  std::string line;
  std::size_t lineno = 0;
  auto values = [](const std::string& list) {
    std::vector<int> out;
    std::stringstream ss(list);
    for (std::string v; std::getline(ss, v, ',');) out.push_back(std::stoi(v));
    return out;
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string task, graph;
    if (!(ls >> task)) continue;
    if (task != "kernel" && task != "duality") throw ParseError(path, lineno, "unknown task '" + task + "'");
    if (!(ls >> graph)) throw ParseError(path, lineno, "missing graph descriptor");
    std::vector<int> rs{1}, ks{1};
    for (std::string kv; ls >> kv;) {
      auto eq = kv.find('=');
      if (eq == std::string::npos) throw ParseError(path, lineno, "expected key=values, got '" + kv + "'");
      const std::string key = kv.substr(0, eq);
      try {
        if (key == "r") rs = values(kv.substr(eq + 1));
        else if (key == "k") ks = values(kv.substr(eq + 1));
        else throw ParseError(path, lineno, "unknown key '" + key + "'");
      } catch (const std::logic_error&) {
        throw ParseError(path, lineno, "bad value list in '" + kv + "'");
      }
    }
    for (int r : rs)
      for (int k : ks) rows.push_back({task, graph, r, k});
  }
  return rows;
}

Json run_bench_row(const BenchRow& row, bool timing) {
  Json out{{"task", row.task}, {"graph", row.graph}, {"r", row.r}, {"k", row.k}};
  Timer timer;
  try {
    Graph g = graph_from_descriptor(row.graph);
    const VertexSet a = VertexSet::range(g.num_vertices());
    out["n"] = g.num_vertices();
    out["m"] = g.num_edges();
    if (row.task == "kernel") {
      KernelOutcome res = kernelize({g, a, row.r, row.k});
      out["outcome"] = to_string(res.tag);
      out["y"] = res.y.size();
      out["b"] = res.b.size();
      out["y_over_k"] = static_cast<double>(res.y.size()) / row.k;
      out["removed"] = res.removal_log.size();
    } else {
      DualityReport rep = duality_report(g, a, row.r, true);
      out["indep_lb"] = rep.independent_witness.size();
      out["lp"] = to_string(*rep.lp_value);
      out["dom_ub"] = rep.dominating_set.size();
      bool ok = Rational(static_cast<long>(rep.independent_witness.size())) <= *rep.lp_value &&
                *rep.lp_value <= Rational(static_cast<long>(rep.dominating_set.size()));
      try {
        const int al = alpha_exact(g, a, 2 * row.r).value;
        const int ga = gamma_exact(g, a, row.r).value;
        out["alpha_2r"] = al;
        out["gamma_r"] = ga;
        ok = ok && Rational(al) <= *rep.lp_value && *rep.lp_value <= Rational(ga);
      } catch (const LimitExceeded&) {
      }
      out["sandwich"] = ok;
    }
  } catch (const std::exception& e) {
    out["error"] = e.what();
  }
  if (timing) out["ms"] = timer.ms();
  return out;
}

std::string csv_cell(const Json& v) {
  if (v.is_null()) return "";
  if (v.is_string()) {
    std::string s = v.get<std::string>();
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
  }
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_number_float()) {
    std::ostringstream ss;
    ss << std::setprecision(6) << v.get<double>();
    return ss.str();
  }
  return v.dump();
}

struct BenchArgs {
  std::string manifest, format = "csv";
  unsigned jobs = 1;
  bool timing = false;
};

int cmd_bench(const BenchArgs& args) {
  auto rows = parse_manifest(args.manifest);
  std::vector<Json> results(rows.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < rows.size();) results[i] = run_bench_row(rows[i], args.timing);
  };
  std::vector<std::thread> pool;
  const unsigned jobs = std::max(1u, args.jobs);
  for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  if (args.format == "json") {
    emit({{"schema", kSchemaVersion}, {"rows", results}});
    return kOk;
  }
  const std::vector<std::string> cols{"task", "graph", "n",       "m",       "r",      "k",      "outcome",
                                      "y",    "b",     "y_over_k", "removed", "indep_lb", "lp",    "dom_ub",
                                      "alpha_2r", "gamma_r", "sandwich", "ms",  "error"};
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c] == "ms" && !args.timing) continue;
    std::cout << (c ? "," : "") << cols[c];
  }
  std::cout << '\n';
  for (const Json& row : results) {
    for (std::size_t c = 0; c < cols.size(); ++c) {
      if (cols[c] == "ms" && !args.timing) continue;
      std::cout << (c ? "," : "") << csv_cell(row.contains(cols[c]) ? row[cols[c]] : Json());
    }
    std::cout << '\n';
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"distk: distance-r independence and domination toolkit"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "generate a graph (edge list on stdout or PREFIX.el/.side)");
  gen_cmd->add_option("kind", gen.kind, "path|cycle|star|complete|grid|tree|random|bucket|subdivide|pendant|hardness")
      ->required();
  gen_cmd->add_option("--n", gen.n, "number of vertices (leaves for star)");
  gen_cmd->add_option("--width", gen.w, "grid width");
  gen_cmd->add_option("--height", gen.h, "grid height");
  gen_cmd->add_option("--d", gen.d, "bucket degree");
  gen_cmd->add_option("--r", gen.r, "subdivision radius");
  gen_cmd->add_option("--extra", gen.extra, "extra chords for random");
  gen_cmd->add_option("--seed", gen.seed, "random seed");
  gen_cmd->add_option("--input", gen.input, "base graph for subdivide/pendant/hardness");
  gen_cmd->add_option("--out", gen.out, "output prefix");

  SolveArgs solve;
  auto* solve_cmd = app.add_subcommand("solve", "run an exact solver and print a JSON report");
  solve_cmd->add_option("problem", solve.problem, "alpha|gamma|lp|vc2|minor|duality|uqw")->required();
  solve_cmd->add_option("--input", solve.input, "edge-list file")->required();
  solve_cmd->add_option("--a-file", solve.a_file, "vertex set A (default: all vertices)");
  solve_cmd->add_option("--r", solve.r, "radius")->check(CLI::NonNegativeNumber);
  solve_cmd->add_option("--k", solve.k, "parameter k (recorded only)");
  solve_cmd->add_option("--t", solve.t, "clique size for minor");
  solve_cmd->add_option("--m", solve.m, "target size for uqw");
  solve_cmd->add_option("--s-max", solve.s_max, "deletion budget for uqw");
  solve_cmd->add_option("--seed", solve.seed, "recorded in the report");
  solve_cmd->add_flag("--timing", solve.timing, "include wall time");

  KernelArgs kern;
  auto* kernel_cmd = app.add_subcommand("kernel", "kernelize (G, A, r, k)");
  kernel_cmd->add_option("--input", kern.input, "edge-list file")->required();
  kernel_cmd->add_option("--a-file", kern.a_file, "vertex set A (default: all vertices)");
  kernel_cmd->add_option("--r", kern.r, "radius")->check(CLI::PositiveNumber);
  kernel_cmd->add_option("--k", kern.k, "solution size")->check(CLI::PositiveNumber);
  kernel_cmd->add_option("--target", kern.target, "closure projection bound");
  kernel_cmd->add_option("--s-max", kern.s_max, "deletion budget per certificate");
  kernel_cmd->add_option("--seed", kern.seed, "recorded in the report");
  kernel_cmd->add_option("--out", kern.out, "write PREFIX.json and, for KERNEL, PREFIX.Y and PREFIX.B");
  kernel_cmd->add_flag("--timing", kern.timing, "include wall time");

  VerifyArgs ver;
  auto* verify_cmd = app.add_subcommand("verify-cert", "replay a removal log against (G, A)");
  verify_cmd->add_option("--input", ver.input, "edge-list file")->required();
  verify_cmd->add_option("--a-file", ver.a_file, "original vertex set A (default: all vertices)");
  verify_cmd->add_option("--log", ver.log, "kernel JSON or removal-log array")->required();

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "run a manifest and print one row per run");
  bench_cmd->add_option("--manifest", bench.manifest, "manifest file")->required();
  bench_cmd->add_option("--format", bench.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  bench_cmd->add_option("--jobs", bench.jobs, "worker threads");
  bench_cmd->add_flag("--timing", bench.timing, "add an ms column");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*gen_cmd) return cmd_gen(gen);
    if (*solve_cmd) return cmd_solve(solve);
    if (*kernel_cmd) return cmd_kernel(kern);
    if (*verify_cmd) return cmd_verify(ver);
    if (*bench_cmd) return cmd_bench(bench);
  } catch (const LimitExceeded& e) {
    std::cerr << "distk: refused: " << e.what() << '\n';
    return kRefused;
  } catch (const PostconditionFailure& e) {
    std::cerr << "distk: internal error: " << e.what() << '\n';
    return kInternal;
  } catch (const Json::exception& e) {
    std::cerr << "distk: bad JSON: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "distk: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}
