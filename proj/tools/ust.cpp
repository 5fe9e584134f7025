// ust: command-line driver for the universal point set pipeline.

#include <CLI11.hpp>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "ust/bounds.hpp"
#include "ust/chirotope.hpp"
#include "ust/data.hpp"
#include "ust/embedding.hpp"
#include "ust/enumeration.hpp"
#include "ust/graph.hpp"
#include "ust/io.hpp"
#include "ust/parallel.hpp"
#include "ust/search.hpp"

namespace fs = std::filesystem;
using namespace ust;

namespace {

std::string hex64(std::uint64_t h) {
  char buf[20];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::uint64_t digest(std::string_view s) {
  return io::fnv1a({reinterpret_cast<const std::uint8_t*>(s.data()), s.size()});
}

// key=value lines describing one run.
struct RunManifest {
  std::string subcommand;
  std::vector<std::string> arguments;
  std::vector<std::pair<std::string, std::string>> inputs, outputs, counts;

  void input(const std::string& name, std::string_view bytes) { inputs.emplace_back(name, hex64(digest(bytes))); }
  void output(const std::string& name, std::string_view bytes) { outputs.emplace_back(name, hex64(digest(bytes))); }
  void count(const std::string& key, std::size_t v) { counts.emplace_back(key, std::to_string(v)); }

  std::string render(double seconds) const {
    std::ostringstream out;
    out << "subcommand=" << subcommand << "\n";
    std::string args;
    for (const auto& a : arguments) args += (args.empty() ? "" : " ") + a;
    out << "arguments=" << args << "\n";
    for (const auto& [k, v] : inputs) out << "input." << k << "=" << v << "\n";
    for (const auto& [k, v] : outputs) out << "output." << k << "=" << v << "\n";
    for (const auto& [k, v] : counts) out << "count." << k << "=" << v << "\n";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", seconds);
    out << "wall_seconds=" << buf << "\n";
    return out.str();
  }
};

RunManifest manifest;

std::string file_text(const std::string& path) {
  auto text = io::read_text(path);
  manifest.input(path, text);
  return text;
}

// Sources: data:listing1, data:listing2[:k], points:<file>[:k], or a binary
// record file whose point count is given by -n.
std::vector<OrderType> load_order_types(const std::string& source, int n) {
  auto from_points = [](std::string_view text, const std::string& spec) {
    auto pts = parse_points(text);
    if (auto colon = spec.rfind(':'); colon != std::string::npos && colon > spec.find(':')) {
      const std::size_t k = std::stoul(spec.substr(colon + 1));
      if (k > pts.size()) throw UsageError("only " + std::to_string(pts.size()) + " points available");
      pts.resize(k);
    }
    return std::vector<OrderType>{chirotope_from_points(pts, Labeling::raw)};
  };
  if (source.rfind("data:listing1", 0) == 0) {
    manifest.input("listing1", data::listing1);
    return from_points(data::listing1, source);
  }
  if (source.rfind("data:listing2", 0) == 0) {
    manifest.input("listing2", data::listing2);
    return from_points(data::listing2, source);
  }
  if (source.rfind("points:", 0) == 0) {
    std::string rest = source.substr(7);
    std::string path = rest;
    if (auto colon = rest.rfind(':'); colon != std::string::npos) path = rest.substr(0, colon);
    return from_points(file_text(path), "points:" + rest);
  }
  if (source.rfind("data:", 0) == 0) throw UsageError("unknown order type source " + source);
  if (n <= 0) throw UsageError("binary order type file " + source + " needs -n <points>");
  const auto bytes = io::read_bytes(source);
  manifest.input(source, {reinterpret_cast<const char*>(bytes.data()), bytes.size()});
  std::vector<OrderType> out;
  const auto records = decode_olm(bytes, n);
  for (std::size_t r = 0; r < records.size(); ++r) out.push_back(order_type_from_lambda(records[r], r));
  return out;
}

std::vector<Graph> load_graphs(const std::string& source, bool graph6) {
  auto edge_lists = [](std::string_view text, const std::string& name) {
    manifest.input(name, text);
    return parse_graph_file(std::string(text), false);
  };
  if (source == "data:G") return edge_lists(data::conflict_g, "G");
  if (source == "data:H") return edge_lists(data::conflict_h, "H");
  if (source == "data:G+H") {
    auto g = edge_lists(data::conflict_g, "G");
    auto h = edge_lists(data::conflict_h, "H");
    g.insert(g.end(), h.begin(), h.end());
    return g;
  }
  if (source.rfind("stacked:", 0) == 0) return generate_stacked(std::stoi(source.substr(8)));
  if (source.rfind("triangulations:", 0) == 0) return generate_triangulations(std::stoi(source.substr(15)));
  if (source.rfind("data:", 0) == 0) throw UsageError("unknown graph source " + source);
  const bool g6 = graph6 || fs::path(source).extension() == ".g6";
  return parse_graph_file(file_text(source), g6);
}

struct Shard {
  int parts = 1, from = 0, to = 1;

  void add(CLI::App* app) {
    app->add_option("--parts", parts, "number of parts the input is split into")->check(CLI::PositiveNumber);
    app->add_option("--from", from, "first part handled (inclusive)");
    app->add_option("--to", to, "last part handled (exclusive)");
  }
  void check() const {
    if (parts < 1 || from < 0 || from >= to || to > parts) throw UsageError("need 0 <= --from < --to <= --parts");
  }
  bool mine(std::size_t i) const {
    const int p = static_cast<int>(i % static_cast<std::size_t>(parts));
    return p >= from && p < to;
  }
  template <typename T>
  std::vector<std::size_t> select(const std::vector<T>& items) const {
    check();
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < items.size(); ++i)
      if (mine(i)) out.push_back(i);
    return out;
  }
};

void emit(const std::string& text, const std::string& path, const std::string& name) {
  manifest.output(name, text);
  if (path.empty() || path == "-")
    std::cout << text;
  else
    io::write_text(path, text);
}

}  // namespace

int main(int argc, char** argv) {
  const auto start = std::chrono::steady_clock::now();
  for (int i = 1; i < argc; ++i) manifest.arguments.emplace_back(argv[i]);

  CLI::App app{"Universal point sets for planar graphs: order types, embeddings, conflict collections"};
  app.require_subcommand(1);
  std::string manifest_path;
  unsigned workers = 0;
  long long budget = -1;
  app.add_option("--manifest", manifest_path, "write the run manifest here instead of stderr");
  app.add_option("--workers", workers, "worker threads (default: $UST_WORKERS or all cores)");
  app.add_option("--conflict-budget", budget, "SAT conflict limit per instance (default unlimited)");
  bool quiet_manifest = false;
  app.add_flag("--no-manifest", quiet_manifest, "suppress the run manifest");

  int n = 0, ext_parts = 1, ext_from = 0, ext_to = 1;
  std::string input, output, graphs_src, ots_src, lp_out, dimacs_dir, name;
  std::vector<std::string> files;
  bool force = false, g6 = false, exact = false, greedy = false, witness = false, kv = false;
  double alpha_tol = 1e-12;
  Shard shard;

  auto* extend = app.add_subcommand("extend", "extend every order type on n points by one point");
  extend->add_option("n", n)->required();
  extend->add_option("input", input)->required();
  extend->add_option("parts", ext_parts)->required();
  extend->add_option("from", ext_from)->required();
  extend->add_option("to", ext_to)->required();
  extend->add_option("-o,--output", output, "output file (default <input>.ext<from>_<to>.bin)");
  extend->add_flag("--force", force, "overwrite an existing output");

  auto* merge = app.add_subcommand("merge-dedup", "merge record files, sorted and deduplicated");
  merge->add_option("n", n)->required();
  merge->add_option("files", files, "inputs followed by the output file")->required()->expected(2, -1);
  merge->add_flag("--force", force);

  auto* filter1 = app.add_subcommand("filter1", "phase 1 filter for order types on 11 points");
  filter1->add_option("ots", ots_src)->required();
  filter1->add_option("-n", n, "points per record in a binary input");
  filter1->add_option("-o,--output", output, "surviving records (binary inputs) or indices");
  shard.add(filter1);

  auto* universal = app.add_subcommand("test-universal", "order types on which every graph embeds");
  universal->add_option("graphs", graphs_src)->required();
  universal->add_option("ots", ots_src)->required();
  universal->add_option("-n", n);
  universal->add_option("-o,--output", output, "indices of universal order types");
  universal->add_flag("--g6", g6, "graph file is graph6");
  shard.add(universal);

  auto* stat = app.add_subcommand("stat", "embeddability matrix, one line per order type");
  stat->add_option("graphs", graphs_src)->required();
  stat->add_option("ots", ots_src)->required();
  stat->add_option("-n", n);
  stat->add_option("-o,--output", output);
  stat->add_flag("--g6", g6);
  shard.add(stat);

  auto* mincover = app.add_subcommand("mincover", "smallest set of graphs failing on every order type");
  mincover->add_option("stat", input)->required();
  auto* exact_flag = mincover->add_flag("--exact", exact, "provably minimum (default)");
  mincover->add_flag("--greedy", greedy, "greedy cover")->excludes(exact_flag);
  mincover->add_option("--lp", lp_out, "also write the instance as an LP file");

  auto* bounds = app.add_subcommand("bounds", "counting lower bound for n-universal point sets");
  bounds->add_option("n", n)->required();
  bounds->add_option("--alpha-tol", alpha_tol);
  bounds->add_flag("--kv", kv, "key=value output");

  auto* embed = app.add_subcommand("embed", "decide embeddability of each graph on an order type");
  embed->add_option("graphs", graphs_src)->required();
  embed->add_option("ots", ots_src)->required();
  embed->add_option("-n", n);
  embed->add_flag("--g6", g6);
  embed->add_flag("--witness", witness, "print the point of every vertex");
  embed->add_option("--dimacs-out", dimacs_dir, "write CNF files here instead of solving");
  shard.add(embed);

  auto* verify = app.add_subcommand("verify-conflict", "check that no order type embeds all graphs");
  verify->add_option("graphs", graphs_src)->required();
  verify->add_option("ots", ots_src)->required();
  verify->add_option("-n", n);
  verify->add_flag("--g6", g6);

  auto* graphs_cmd = app.add_subcommand("graphs", "print a graph source (stacked:N, triangulations:N, data:G, ...)");
  graphs_cmd->add_option("source", graphs_src)->required();
  graphs_cmd->add_flag("--g6", g6, "graph6 output (default edge lists)");

  auto* data_cmd = app.add_subcommand("data", "print bundled data (listing1, listing2, G, H, n3)");
  data_cmd->add_option("name", name)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  const unsigned nworkers = worker_count(workers);
  EmbedOptions eopts{budget};
  int code = 0;
  try {
    if (*extend) {
      manifest.subcommand = "extend";
      ExtensionShard s{ext_parts, ext_from, ext_to, input,
                       output.empty() ? ExtensionShard::default_output(input, ext_from, ext_to) : fs::path(output)};
      const auto in = io::read_bytes(input);
      manifest.input(input, {reinterpret_cast<const char*>(in.data()), in.size()});
      const auto report = run_extension(s, n, force, &std::cout);
      const auto out = io::read_bytes(s.output);
      manifest.output(s.output.string(), {reinterpret_cast<const char*>(out.data()), out.size()});
      manifest.count("processed", report.processed);
      manifest.count("produced", report.produced);
    } else if (*merge) {
      manifest.subcommand = "merge-dedup";
      const std::string out = files.back();
      files.pop_back();
      std::vector<fs::path> ins(files.begin(), files.end());
      for (const auto& f : files) {
        const auto b = io::read_bytes(f);
        manifest.input(f, {reinterpret_cast<const char*>(b.data()), b.size()});
      }
      const auto count = merge_dedup(n, ins, out, force);
      const auto b = io::read_bytes(out);
      manifest.output(out, {reinterpret_cast<const char*>(b.data()), b.size()});
      manifest.count("records", count);
      std::cout << "records: " << count << "\n";
    } else if (*filter1) {
      manifest.subcommand = "filter1";
      const auto ots = load_order_types(ots_src, n);
      const auto mine = shard.select(ots);
      std::vector<OrderType> sel;
      for (auto i : mine) sel.push_back(ots[i]);
      Phase1Filter f{phase1_graph(), eopts};
      const auto keep = filter_phase1(sel, f, nworkers);
      const bool binary = ots_src.find(':') == std::string::npos;
      if (binary && !output.empty()) {
        std::vector<SmallLambdaMatrix> recs;
        for (auto k : keep) recs.push_back(lambda_matrix(sel[k]));
        const auto bytes = encode_olm(recs);
        io::write_bytes(output, bytes);
        manifest.output(output, {reinterpret_cast<const char*>(bytes.data()), bytes.size()});
      } else {
        std::string text;
        for (auto k : keep) text += std::to_string(mine[k]) + "\n";
        emit(text, output, "survivors");
      }
      manifest.count("tested", sel.size());
      manifest.count("survivors", keep.size());
      std::cerr << "survivors: " << keep.size() << "/" << sel.size() << "\n";
    } else if (*universal) {
      manifest.subcommand = "test-universal";
      const auto graphs = load_graphs(graphs_src, g6);
      const auto ots = load_order_types(ots_src, n);
      const auto mine = shard.select(ots);
      FailureQueue queue(graphs.size());
      std::vector<char> verdict(mine.size(), 0);
      parallel_for(mine.size(), nworkers, [&](std::size_t k) {
        verdict[k] = test_universal(ots[mine[k]], graphs, &queue, eopts).universal ? 1 : 0;
      });
      std::string text;
      std::size_t hits = 0;
      for (std::size_t k = 0; k < mine.size(); ++k)
        if (verdict[k]) {
          text += std::to_string(mine[k]) + "\n";
          ++hits;
        }
      emit(text, output, "universal");
      manifest.count("tested", mine.size());
      manifest.count("universal", hits);
      std::cerr << "universal: " << hits << "/" << mine.size() << "\n";
    } else if (*stat) {
      manifest.subcommand = "stat";
      const auto graphs = load_graphs(graphs_src, g6);
      const auto ots = load_order_types(ots_src, n);
      std::vector<OrderType> sel;
      for (auto i : shard.select(ots)) sel.push_back(ots[i]);
      const auto m = build_stat(sel, graphs, nworkers, eopts);
      emit(write_stat(m), output, "stat");
      manifest.count("rows", m.rows());
      manifest.count("cols", m.cols());
    } else if (*mincover) {
      manifest.subcommand = "mincover";
      const auto m = read_stat(file_text(input));
      if (!lp_out.empty()) {
        const auto lp = to_lp(m);
        io::write_text(lp_out, lp);
        manifest.output(lp_out, lp);
      }
      const auto cc = min_hitting_set(m, greedy ? CoverMode::greedy : CoverMode::exact);
      std::string text = "size: " + std::to_string(cc.graphs.size()) + "\ngraphs:";
      for (auto j : cc.graphs) text += " " + std::to_string(j);
      text += "\n";
      emit(text, "", "cover");
      manifest.count("size", cc.graphs.size());
    } else if (*bounds) {
      manifest.subcommand = "bounds";
      const auto r = BoundReport::compute(n, alpha_tol);
      emit(kv ? r.key_values() : r.text(), "", "report");
      manifest.count("min_m", static_cast<std::size_t>(r.min_m));
    } else if (*embed) {
      manifest.subcommand = "embed";
      const auto graphs = load_graphs(graphs_src, g6);
      const auto ots = load_order_types(ots_src, n);
      if (ots.size() != 1) throw UsageError("embed takes exactly one order type; use stat for many");
      const auto mine = shard.select(graphs);
      std::string text;
      std::size_t yes = 0;
      if (!dimacs_dir.empty()) {
        fs::create_directories(dimacs_dir);
        for (auto j : mine) {
          const auto cnf = to_dimacs(encode_embedding(graphs[j], ots[0]));
          const auto path = (fs::path(dimacs_dir) / ("graph" + std::to_string(j) + ".cnf")).string();
          io::write_text(path, cnf);
          manifest.output(path, cnf);
          text += std::to_string(j) + " " + path + "\n";
        }
      } else {
        std::vector<std::optional<EmbeddingWitness>> res(mine.size());
        parallel_for(mine.size(), nworkers, [&](std::size_t k) { res[k] = decide_embeddable(graphs[mine[k]], ots[0], eopts); });
        for (std::size_t k = 0; k < mine.size(); ++k) {
          text += std::to_string(mine[k]) + (res[k] ? " embeddable" : " not-embeddable");
          if (res[k]) {
            ++yes;
            if (witness)
              for (int p : res[k]->assignment) text += " " + std::to_string(p);
          }
          text += "\n";
        }
        manifest.count("embeddable", yes);
      }
      emit(text, "", "embed");
      manifest.count("graphs", mine.size());
    } else if (*verify) {
      manifest.subcommand = "verify-conflict";
      const auto graphs = load_graphs(graphs_src, g6);
      const auto ots = load_order_types(ots_src, n);
      const auto bad = verify_conflict_collection(graphs, ots, eopts);
      const std::string text = bad ? "counterexample: order type " + std::to_string(*bad) + " embeds all " +
                                         std::to_string(graphs.size()) + " graphs\n"
                                   : "ok: no order type embeds all " + std::to_string(graphs.size()) + " graphs\n";
      emit(text, "", "verdict");
      manifest.count("order_types", ots.size());
      manifest.count("graphs", graphs.size());
    } else if (*graphs_cmd) {
      manifest.subcommand = "graphs";
      const auto gs = load_graphs(graphs_src, false);
      std::string text;
      for (const auto& g : gs) text += (g6 ? emit_graph6(g) : emit_edge_list(g)) + "\n";
      emit(text, "", "graphs");
      manifest.count("graphs", gs.size());
    } else if (*data_cmd) {
      manifest.subcommand = "data";
      const std::map<std::string, std::string_view> texts{
          {"listing1", data::listing1}, {"listing2", data::listing2}, {"G", data::conflict_g}, {"H", data::conflict_h}};
      if (name == "n3") {
        std::cout.write(reinterpret_cast<const char*>(data::n3_order_types.data()), data::n3_order_types.size());
      } else if (auto it = texts.find(name); it != texts.end()) {
        emit(std::string(it->second), "", name);
      } else {
        throw UsageError("unknown data set " + name + " (listing1, listing2, G, H, n3)");
      }
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    code = 2;
  } catch (const DataError& e) {
    std::cerr << "data error: " << e.what() << "\n";
    code = 3;
  } catch (const SolverTimeout& e) {
    std::cerr << "solver timeout: " << e.what() << "\n";
    code = 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    code = 1;
  }

  manifest.count("exit_code", static_cast<std::size_t>(code));
  if (!quiet_manifest) {
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const auto text = manifest.render(secs);
    try {
      if (manifest_path.empty())
        std::cerr << text;
      else
        io::write_text(manifest_path, text);
    } catch (const Error& e) {
      std::cerr << "cannot write manifest: " << e.what() << "\n";
    }
  }
  return code;
}
