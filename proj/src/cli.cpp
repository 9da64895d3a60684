#include "spectre/cli.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "spectre/alignment.hpp"
#include "spectre/datagen.hpp"
#include "spectre/graph_io.hpp"
#include "spectre/kernels.hpp"
#include "spectre/metrics.hpp"

namespace spectre::cli {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;
using Clock = std::chrono::steady_clock;

std::string fmt_double(double v, const char* spec = "%.12g") {
  char buf[64];
  std::snprintf(buf, sizeof(buf), spec, v);
  return buf;
}

json opt_json(const std::optional<double>& v) {
  if (!v) return nullptr;
  return *v;
}

json report_json(const MetricReport& r, bool with_gt) {
  json j{
      {"matching_size", r.matching_size},
      {"edge_correctness", opt_json(r.edge_correctness)},
      {"ics", opt_json(r.ics)},
      {"detail",
       {{"conserved_edges", r.conserved_edges},
        {"edges_g1", r.edges_g1},
        {"ics_denominator", r.ics_denominator}}},
  };
  if (with_gt) {
    j["precision"] = opt_json(r.precision);
    j["recall"] = opt_json(r.recall);
    j["sim_e"] = opt_json(r.sim_e);
    j["detail"]["correct_pairs"] = r.correct_pairs;
    j["detail"]["recall_denominator"] = r.recall_denominator;
  }
  return j;
}

json stats_json(const RunStats& s, const AlignConfig& cfg, std::uint64_t seed) {
  json rounds = json::array();
  for (std::size_t i = 0; i < s.rounds.size(); ++i) {
    const auto& r = s.rounds[i];
    rounds.push_back({{"round", i + 1},
                      {"confident_size", r.confident_size},
                      {"matching_size", r.matching_size},
                      {"safe_ms", r.safe_ms},
                      {"loose_ms", r.loose_ms}});
  }
  return json{{"config",
               {{"k", cfg.top_k},
                {"w", cfg.window},
                {"r", cfg.threshold},
                {"f", cfg.stop_fraction},
                {"max_rounds", cfg.max_rounds},
                {"rng_seed", seed},
                {"tol", cfg.power_tol},
                {"max_power_iters", cfg.power_max_iters},
                {"kernel", kern::lane_name(kern::active_lane())}}},
              {"seed_pairs", s.seed_pairs},
              {"centrality_ms", s.centrality_ms},
              {"centrality_converged", s.centrality_converged},
              {"rounds", rounds},
              {"reached_fraction", s.reached_fraction},
              {"total_ms", s.total_ms}};
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write: " + path);
  out << content;
  if (!out) throw IoError("write failed: " + path);
}

struct LoadedGraph {
  Graph graph;
  NodeLabelMap labels;
};

// Loads an edge list; if disconnected, reduces to the largest connected
// component (with a notice) and rebuilds the label map for the kept nodes.
LoadedGraph load_reduced(const std::string& path) {
  ParsedGraph parsed = load_edge_list(path);
  if (parsed.dropped_self_loops > 0)
    std::cerr << "notice: " << path << ": dropped " << parsed.dropped_self_loops
              << " self-loop line(s)\n";
  if (parsed.graph.node_count() == 0)
    throw ParseError("empty graph: " + path, 0);
  if (parsed.graph.connected())
    return {std::move(parsed.graph), std::move(parsed.labels)};

  const auto lcc = largest_connected_component(parsed.graph);
  std::cerr << "notice: " << path
            << " is disconnected; using largest connected component ("
            << lcc.size() << "/" << parsed.graph.node_count() << " nodes)\n";
  InducedSubgraph sub = induced_subgraph(parsed.graph, lcc);
  NodeLabelMap labels;
  for (const NodeId p : sub.to_parent) labels.add_or_get(parsed.labels.label_of(p));
  return {std::move(sub.graph), std::move(labels)};
}

// Default k = ceil(10 ln n), clamped so estimate_seeds' precondition
// k + w <= min(n1, n2) still holds on small graphs.
std::size_t resolve_k(std::size_t requested, std::size_t window, NodeId n1,
                      NodeId n2) {
  const std::size_t n_min = std::min(n1, n2);
  if (requested != 0) return requested;  // explicit values validated downstream
  if (n_min <= window + 1)
    throw InvalidParam("graph too small for seed estimation");
  std::size_t k = static_cast<std::size_t>(
      std::ceil(10.0 * std::log(static_cast<double>(n_min))));
  k = std::max<std::size_t>(k, 1);
  if (k + window > n_min) {
    k = n_min - window;
    std::cerr << "notice: default k clamped to " << k << " (small graph)\n";
  }
  return k;
}

void apply_kernel_choice(const std::string& kernel) {
  if (kernel == "auto") {
    kern::reset_lane();
  } else if (kernel == "scalar") {
    kern::force_lane(kern::Lane::scalar);
  } else if (kernel == "avx2") {
    kern::force_lane(kern::Lane::avx2);
  } else {
    throw InvalidParam("unknown kernel lane: " + kernel);
  }
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string opt_csv(const std::optional<double>& v) {
  return v ? fmt_double(*v) : std::string{};
}

// ---------------------------------------------------------------------------
// align
// ---------------------------------------------------------------------------

struct AlignArgs {
  std::string graph1, graph2, ground_truth, out, stats_out, report_out;
  std::string kernel = "auto";
  std::uint64_t seed = 0;
  std::size_t k = 0;  // 0 = default
  std::size_t w = 1;
  std::uint32_t r = 4;
  double f = 0.75;
  std::size_t max_rounds = 5;
  double tol = 1e-10;
  std::size_t max_power_iters = 1000;
};

std::string sibling_path(const std::string& out, const char* suffix) {
  fs::path p(out);
  fs::path q = p.parent_path() / (p.stem().string() + suffix);
  return q.string();
}

int cmd_align(const AlignArgs& a) {
  apply_kernel_choice(a.kernel);
  LoadedGraph g1 = load_reduced(a.graph1);
  LoadedGraph g2 = load_reduced(a.graph2);

  AlignConfig cfg;
  cfg.top_k = resolve_k(a.k, a.w, g1.graph.node_count(), g2.graph.node_count());
  cfg.window = a.w;
  cfg.threshold = a.r;
  cfg.stop_fraction = a.f;
  cfg.max_rounds = a.max_rounds;
  cfg.power_tol = a.tol;
  cfg.power_max_iters = a.max_power_iters;

  Rng rng(a.seed);
  AlignResult res = align(g1.graph, g2.graph, cfg, rng);

  std::optional<GroundTruth> gt;
  if (!a.ground_truth.empty()) {
    std::ifstream in(a.ground_truth);
    if (!in) throw IoError("cannot open ground truth: " + a.ground_truth);
    std::size_t skipped = 0;
    gt = read_ground_truth_tsv(in, g1.graph.node_count(), g2.graph.node_count(),
                               g1.labels, g2.labels, &skipped);
    if (skipped > 0)
      std::cerr << "notice: " << skipped
                << " ground-truth line(s) reference nodes outside the aligned "
                   "graphs and were skipped\n";
  }

  std::ostringstream matching_text;
  write_matching_tsv(matching_text, res.matching, g1.labels, g2.labels);
  write_text_file(a.out, matching_text.str());

  const std::string stats_path =
      a.stats_out.empty() ? sibling_path(a.out, ".stats.json") : a.stats_out;
  write_text_file(stats_path, stats_json(res.stats, cfg, a.seed).dump(2) + "\n");

  if (gt) {
    const MetricReport rep =
        evaluate_matching(g1.graph, g2.graph, res.matching, &*gt);
    const std::string report_path =
        a.report_out.empty() ? sibling_path(a.out, ".report.json") : a.report_out;
    write_text_file(report_path, report_json(rep, true).dump(2) + "\n");
  }

  std::cout << "matched " << res.matching.size() << " pairs ("
            << (res.stats.reached_fraction ? "reached" : "below")
            << " stop fraction, " << res.stats.rounds.size() << " round(s))\n";
  return 0;
}

// ---------------------------------------------------------------------------
// generate
// ---------------------------------------------------------------------------

struct GenerateArgs {
  std::string graph, out_dir, name;
  double dropout = 0.05;
  std::uint64_t seed = 0;
};

int cmd_generate(const GenerateArgs& a) {
  LoadedGraph src = load_reduced(a.graph);
  const std::string name =
      a.name.empty() ? fs::path(a.graph).stem().string() : a.name;

  CorrelatedPair pair =
      make_correlated_pair(src.graph, a.dropout, a.seed, name);

  NodeLabelMap left;
  for (const NodeId s : pair.core_to_source)
    left.add_or_get(src.labels.label_of(s));
  NodeLabelMap right;
  for (NodeId j = 0; j < pair.g2.node_count(); ++j)
    right.add_or_get(std::to_string(j));

  fs::create_directories(a.out_dir);
  const auto path = [&](const char* suffix) {
    return (fs::path(a.out_dir) / (name + suffix)).string();
  };

  std::ostringstream e1, e2, gt;
  write_edge_list(e1, pair.g1, left);
  write_edge_list(e2, pair.g2, right);
  write_ground_truth_tsv(gt, pair.ground_truth, left, right);
  write_text_file(path("_g1.edges"), e1.str());
  write_text_file(path("_g2.edges"), e2.str());
  write_text_file(path("_gt.tsv"), gt.str());

  const json meta{{"source", a.graph},
                  {"name", name},
                  {"dropout", pair.dropout},
                  {"seed", pair.seed},
                  {"nodes", pair.g1.node_count()},
                  {"edges_g1", pair.g1.edge_count()},
                  {"edges_g2", pair.g2.edge_count()},
                  {"realized_similarity", pair.realized_similarity}};
  write_text_file(path("_meta.json"), meta.dump(2) + "\n");

  std::cout << "pair '" << name << "': " << pair.g1.node_count() << " nodes, "
            << pair.g1.edge_count() << "/" << pair.g2.edge_count()
            << " edges, Sim_e = " << fmt_double(pair.realized_similarity)
            << "\n";
  return 0;
}

// ---------------------------------------------------------------------------
// evaluate
// ---------------------------------------------------------------------------

struct EvaluateArgs {
  std::string graph1, graph2, matching, ground_truth, out;
};

int cmd_evaluate(const EvaluateArgs& a) {
  // No LCC reduction here: metrics are well-defined on the inputs as given.
  ParsedGraph g1 = load_edge_list(a.graph1);
  ParsedGraph g2 = load_edge_list(a.graph2);

  std::ifstream min(a.matching);
  if (!min) throw IoError("cannot open matching: " + a.matching);
  const Matching m = read_matching_tsv(min, g1.graph.node_count(),
                                       g2.graph.node_count(), g1.labels,
                                       g2.labels);

  std::optional<GroundTruth> gt;
  if (!a.ground_truth.empty()) {
    std::ifstream in(a.ground_truth);
    if (!in) throw IoError("cannot open ground truth: " + a.ground_truth);
    std::size_t skipped = 0;
    gt = read_ground_truth_tsv(in, g1.graph.node_count(), g2.graph.node_count(),
                               g1.labels, g2.labels, &skipped);
    if (skipped > 0)
      std::cerr << "notice: skipped " << skipped
                << " unknown ground-truth line(s)\n";
  }

  const MetricReport rep =
      evaluate_matching(g1.graph, g2.graph, m, gt ? &*gt : nullptr);
  const std::string text = report_json(rep, gt.has_value()).dump(2) + "\n";
  if (a.out.empty())
    std::cout << text;
  else
    write_text_file(a.out, text);
  return 0;
}

// ---------------------------------------------------------------------------
// sweep
// ---------------------------------------------------------------------------

struct SweepArgs {
  std::string graph, out;
  std::vector<double> dropouts{0.05};
  std::vector<std::size_t> ks{0};
  std::vector<std::size_t> ws{1};
  std::uint32_t r = 4;
  double f = 0.75;
  std::size_t max_rounds = 5;
  std::size_t trials = 1;
  std::uint64_t seed = 0;
  std::size_t jobs = 0;
  std::string kernel = "auto";
};

struct SweepRow {
  double s = 0;
  std::size_t k = 0, w = 0, trial = 0;
  std::uint64_t cell_seed = 0;
  MetricReport report;
  bool have_report = false;
  double runtime_ms = 0;
  std::string error;
};

int cmd_sweep(const SweepArgs& a) {
  apply_kernel_choice(a.kernel);
  if (a.dropouts.empty() || a.ks.empty() || a.ws.empty() || a.trials == 0)
    throw InvalidParam("sweep: grids and trials must be nonempty");

  LoadedGraph src = load_reduced(a.graph);
  const std::string name = fs::path(a.graph).stem().string();

  // Pairs depend only on (s, trial) and are shared across the (k, w) grid.
  struct PairSlot {
    CorrelatedPair pair;
    std::string error;
  };
  std::vector<PairSlot> pairs(a.dropouts.size() * a.trials);
  for (std::size_t si = 0; si < a.dropouts.size(); ++si) {
    for (std::size_t t = 0; t < a.trials; ++t) {
      auto& slot = pairs[si * a.trials + t];
      try {
        slot.pair = make_correlated_pair(src.graph, a.dropouts[si],
                                         derive_seed(a.seed, 0xD0, si, t), name);
      } catch (const std::exception& e) {
        slot.error = e.what();
      }
    }
  }

  std::vector<SweepRow> rows(pairs.size() * a.ks.size() * a.ws.size());
  std::vector<std::size_t> cell_of_row(rows.size());
  {
    std::size_t row = 0, cell = 0;
    for (std::size_t si = 0; si < a.dropouts.size(); ++si)
      for (std::size_t ki = 0; ki < a.ks.size(); ++ki)
        for (std::size_t wi = 0; wi < a.ws.size(); ++wi)
          for (std::size_t t = 0; t < a.trials; ++t) {
            rows[row].s = a.dropouts[si];
            rows[row].k = a.ks[ki];
            rows[row].w = a.ws[wi];
            rows[row].trial = t;
            rows[row].cell_seed = derive_seed(a.seed, 0xA1, cell, 0);
            cell_of_row[row] = si * a.trials + t;
            ++row;
            ++cell;
          }
  }

  const auto run_cell = [&](SweepRow& row, const PairSlot& slot) {
    if (!slot.error.empty()) {
      row.error = slot.error;
      return;
    }
    try {
      const auto& p = slot.pair;
      AlignConfig cfg;
      cfg.top_k = resolve_k(row.k, row.w, p.g1.node_count(), p.g2.node_count());
      cfg.window = row.w;
      cfg.threshold = a.r;
      cfg.stop_fraction = a.f;
      cfg.max_rounds = a.max_rounds;
      Rng rng(row.cell_seed);
      const auto t0 = Clock::now();
      AlignResult res = align(p.g1, p.g2, cfg, rng);
      row.runtime_ms =
          std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
      row.k = cfg.top_k;  // record the resolved default
      row.report =
          evaluate_matching(p.g1, p.g2, res.matching, &p.ground_truth);
      row.have_report = true;
    } catch (const std::exception& e) {
      row.error = e.what();
    }
  };

  std::size_t jobs = a.jobs ? a.jobs : std::thread::hardware_concurrency();
  jobs = std::max<std::size_t>(1, std::min(jobs, rows.size()));
  if (jobs == 1) {
    for (std::size_t i = 0; i < rows.size(); ++i)
      run_cell(rows[i], pairs[cell_of_row[i]]);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(jobs);
    for (std::size_t j = 0; j < jobs; ++j) {
      pool.emplace_back([&] {
        for (;;) {
          const std::size_t i = next.fetch_add(1);
          if (i >= rows.size()) return;
          run_cell(rows[i], pairs[cell_of_row[i]]);
        }
      });
    }
    for (auto& th : pool) th.join();
  }

  std::ostringstream csv;
  csv << "dataset,s,k,w,r,seed,precision,recall,ec,ics,matching_size,"
         "runtime_ms,error\n";
  for (const auto& row : rows) {
    csv << csv_escape(name) << ',' << fmt_double(row.s) << ',' << row.k << ','
        << row.w << ',' << a.r << ',' << row.cell_seed << ',';
    if (row.have_report) {
      csv << opt_csv(row.report.precision) << ',' << opt_csv(row.report.recall)
          << ',' << opt_csv(row.report.edge_correctness) << ','
          << opt_csv(row.report.ics) << ',' << row.report.matching_size;
    } else {
      csv << ",,,,";
    }
    csv << ',' << fmt_double(row.runtime_ms, "%.3f") << ','
        << csv_escape(row.error) << '\n';
  }
  write_text_file(a.out, csv.str());
  std::cout << "wrote " << rows.size() << " sweep rows to " << a.out << "\n";
  return 0;
}

// ---------------------------------------------------------------------------
// centrality
// ---------------------------------------------------------------------------

struct CentralityArgs {
  std::string graph, out;
  double tol = 1e-10;
  std::size_t max_power_iters = 1000;
  std::string kernel = "auto";
};

int cmd_centrality(const CentralityArgs& a) {
  apply_kernel_choice(a.kernel);
  LoadedGraph g = load_reduced(a.graph);
  const CentralityRanking r =
      eigenvector_centrality(g.graph, a.tol, a.max_power_iters);
  if (!r.converged)
    std::cerr << "notice: power iteration hit the iteration cap before "
                 "reaching tol\n";

  std::ostringstream csv;
  csv << "label,score,rank\n";
  for (NodeId id = 0; id < g.graph.node_count(); ++id)
    csv << csv_escape(g.labels.label_of(id)) << ','
        << fmt_double(r.scores[id], "%.17g") << ',' << (r.rank_of[id] + 1)
        << '\n';
  if (a.out.empty())
    std::cout << csv.str();
  else
    write_text_file(a.out, csv.str());
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args) {
  CLI::App app{"SPECTRE: seedless network alignment via spectral centralities",
               "spectre"};
  app.require_subcommand(1);

  AlignArgs al;
  auto* align_cmd = app.add_subcommand(
      "align", "Align two graphs and write the matching (TSV) plus run stats");
  align_cmd->add_option("graph1", al.graph1, "G1 edge list")->required();
  align_cmd->add_option("graph2", al.graph2, "G2 edge list")->required();
  align_cmd->add_option("--out", al.out, "matching output path")->required();
  align_cmd->add_option("--stats-out", al.stats_out,
                        "run-stats JSON path (default: <out stem>.stats.json)");
  align_cmd->add_option("--report-out", al.report_out,
                        "metric-report JSON path (with --ground-truth)");
  align_cmd->add_option("--ground-truth", al.ground_truth,
                        "ground-truth TSV for precision/recall");
  align_cmd->add_option("--k", al.k, "top-k seeds (default ceil(10 ln n))");
  align_cmd->add_option("--w", al.w, "rank window")->capture_default_str();
  align_cmd->add_option("--r", al.r, "confident-percolation threshold")->capture_default_str();
  align_cmd->add_option("--f", al.f, "stop fraction of min(n1,n2)")->capture_default_str();
  align_cmd->add_option("--max-rounds", al.max_rounds, "round cap")->capture_default_str();
  align_cmd->add_option("--seed", al.seed, "rng seed")->capture_default_str();
  align_cmd->add_option("--tol", al.tol, "power-iteration tolerance")->capture_default_str();
  align_cmd->add_option("--max-power-iters", al.max_power_iters,
                        "power-iteration cap")->capture_default_str();
  align_cmd->add_option("--kernel", al.kernel, "auto|scalar|avx2")->capture_default_str();

  GenerateArgs gen;
  auto* gen_cmd = app.add_subcommand(
      "generate", "Build a correlated pair with ground truth from one graph");
  gen_cmd->add_option("graph", gen.graph, "source edge list")->required();
  gen_cmd->add_option("--dropout", gen.dropout, "edge dropout probability s")
      ->required();
  gen_cmd->add_option("--seed", gen.seed, "rng seed")->capture_default_str();
  gen_cmd->add_option("--out", gen.out_dir, "output directory")->required();
  gen_cmd->add_option("--name", gen.name, "pair name (default: input stem)");

  EvaluateArgs ev;
  auto* ev_cmd = app.add_subcommand(
      "evaluate", "Score a matching file against two graphs");
  ev_cmd->add_option("graph1", ev.graph1, "G1 edge list")->required();
  ev_cmd->add_option("graph2", ev.graph2, "G2 edge list")->required();
  ev_cmd->add_option("--matching", ev.matching, "matching TSV")->required();
  ev_cmd->add_option("--ground-truth", ev.ground_truth, "ground-truth TSV");
  ev_cmd->add_option("--out", ev.out, "report JSON path (default: stdout)");

  SweepArgs sw;
  auto* sw_cmd = app.add_subcommand(
      "sweep", "Parameter sweep: generate, align, evaluate per cell; CSV out");
  sw_cmd->add_option("graph", sw.graph, "source edge list")->required();
  sw_cmd->add_option("--dropout", sw.dropouts, "dropout grid")
      ->required()
      ->delimiter(',');
  sw_cmd->add_option("--k", sw.ks, "k grid (0 = default)")->delimiter(',');
  sw_cmd->add_option("--w", sw.ws, "w grid")->delimiter(',');
  sw_cmd->add_option("--r", sw.r, "threshold")->capture_default_str();
  sw_cmd->add_option("--f", sw.f, "stop fraction")->capture_default_str();
  sw_cmd->add_option("--max-rounds", sw.max_rounds, "round cap")->capture_default_str();
  sw_cmd->add_option("--trials", sw.trials, "trials per cell")->capture_default_str();
  sw_cmd->add_option("--seed", sw.seed, "master seed")->capture_default_str();
  sw_cmd->add_option("--jobs", sw.jobs, "worker threads (0 = hardware)")->capture_default_str();
  sw_cmd->add_option("--out", sw.out, "CSV output path")->required();
  sw_cmd->add_option("--kernel", sw.kernel, "auto|scalar|avx2")->capture_default_str();

  CentralityArgs ce;
  auto* ce_cmd = app.add_subcommand(
      "centrality", "Dump eigenvector centrality as CSV (label,score,rank)");
  ce_cmd->add_option("graph", ce.graph, "edge list")->required();
  ce_cmd->add_option("--out", ce.out, "CSV path (default: stdout)");
  ce_cmd->add_option("--tol", ce.tol, "power-iteration tolerance")->capture_default_str();
  ce_cmd->add_option("--max-power-iters", ce.max_power_iters,
                     "power-iteration cap")->capture_default_str();
  ce_cmd->add_option("--kernel", ce.kernel, "auto|scalar|avx2")->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (app.got_subcommand(align_cmd)) return cmd_align(al);
    if (app.got_subcommand(gen_cmd)) return cmd_generate(gen);
    if (app.got_subcommand(ev_cmd)) return cmd_evaluate(ev);
    if (app.got_subcommand(sw_cmd)) return cmd_sweep(sw);
    if (app.got_subcommand(ce_cmd)) return cmd_centrality(ce);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const InvalidParam& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

int run(int argc, const char* const* argv) {
  std::vector<std::string> args;
  args.reserve(argc > 0 ? argc - 1 : 0);
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args);
}

}  // namespace spectre::cli
