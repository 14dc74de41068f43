// splitword: split comparability graphs, their three-permutation words and
// permutation-representation numbers.
//
//   splitword run <graph>          full JSON pipeline report
//   splitword word <graph>         the word q1 q2 q3
//   splitword prn <graph>          prn with certificate
//   splitword label <graph>        clique labelling and classification
//   splitword forbidden <graph>    induced B1..B4 search
//   splitword sweep --n-max N      cross-check every graph up to N vertices
//
// <graph> is a file path, "-" for stdin, or the document itself.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "splitword/errors.hpp"
#include "splitword/labelling.hpp"
#include "splitword/pipeline.hpp"
#include "splitword/prn.hpp"
#include "splitword/split.hpp"
#include "splitword/sweep.hpp"
#include "splitword/word.hpp"

using namespace splitword;
using nlohmann::json;

namespace {

struct InputOptions {
  std::string source;
  std::string format;
  bool json = false;
};

std::string read_source(const std::string& source) {
  if (source == "-") {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::error_code ec;
  if (std::filesystem::is_regular_file(source, ec)) {
    std::ifstream in(source);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
  return source;
}

Graph load(const InputOptions& in) {
  std::optional<GraphFormat> format;
  if (in.format == "edgelist") format = GraphFormat::EdgeList;
  if (in.format == "graph6") format = GraphFormat::Graph6;
  return parse_graph(read_source(in.source), format);
}

void add_input(CLI::App* cmd, InputOptions& in) {
  cmd->add_option("graph", in.source, "graph file, '-' for stdin, or an inline document")->required();
  cmd->add_option("--format", in.format, "input format (default: auto-detect)")
      ->check(CLI::IsMember({"edgelist", "graph6"}));
  cmd->add_flag("--json", in.json, "print JSON");
}

json certificate_json(const std::string& name, const Embedding& e) {
  return {{"name", name}, {"embedding", e.map}};
}

// Maps the domain exceptions onto exit codes 2 and 3.
template <typename Fn>
int guarded(bool as_json, Fn&& fn) {
  try {
    return fn();
  } catch (const NotSplit& e) {
    if (as_json)
      std::cout << json{{"schema", kReportSchema}, {"status", "not_split"}, {"error", e.what()},
                        {"certificate", certificate_json(e.obstruction(), e.embedding())}}
                       .dump(2)
                << "\n";
    else
      std::cerr << e.what() << " at " << join(e.embedding().map, ",") << "\n";
    return 2;
  } catch (const NotComparability& e) {
    if (as_json)
      std::cout << json{{"schema", kReportSchema}, {"status", "not_comparability"}, {"error", e.what()},
                        {"certificate", certificate_json(e.member(), e.embedding())}}
                       .dump(2)
                << "\n";
    else
      std::cerr << e.what() << " at " << join(e.embedding().map, ",") << "\n";
    return 3;
  }
}

int cmd_run(const InputOptions& in) {
  const PipelineReport report = run_pipeline(load(in));
  std::cout << to_json(report).dump(2) << "\n";
  if (report.status == PipelineStatus::InternalError) std::cerr << report.error << "\n";
  return report.exit_code();
}

int cmd_word(const InputOptions& in) {
  return guarded(in.json, [&] {
    const Graph g = load(in);
    const SplitGraph sg = split_partition(g);
    const WordReport w = build_and_verify(sg);
    const auto& lab = w.labelled.labelling;
    const std::string compact = compact_digits(sg, lab, w.z);
    if (in.json) {
      json out = {{"schema", kReportSchema},
                  {"q1", w.blocks.q1},
                  {"q2", w.blocks.q2},
                  {"q3", w.blocks.q3},
                  {"z", w.z},
                  {"labelling", lab.order()},
                  {"verified", w.all_pass()}};
      if (!compact.empty())
        out["compact"] = compact_digits(sg, lab, w.blocks.q1) + " " +
                         compact_digits(sg, lab, w.blocks.q2) + " " +
                         compact_digits(sg, lab, w.blocks.q3);
      std::cout << out.dump(2) << "\n";
    } else {
      std::cout << "q1: " << join(w.blocks.q1) << "\n"
                << "q2: " << join(w.blocks.q2) << "\n"
                << "q3: " << join(w.blocks.q3) << "\n"
                << "z:  " << join(w.z) << "\n";
      if (!compact.empty())
        std::cout << "labels: " << compact_digits(sg, lab, w.blocks.q1) << " "
                  << compact_digits(sg, lab, w.blocks.q2) << " "
                  << compact_digits(sg, lab, w.blocks.q3) << "\n";
      std::cout << "verified: " << (w.all_pass() ? "yes" : "NO") << "\n";
    }
    return w.all_pass() ? 0 : 1;
  });
}

int cmd_prn(const InputOptions& in) {
  return guarded(in.json, [&] {
    const Graph g = load(in);
    const PrnResult r = prn(g);
    if (in.json) {
      std::cout << to_json(r).dump(2) << "\n";
      return 0;
    }
    std::cout << "prn: " << r.value << "\ncertificate: " << to_string(r.kind) << "\n";
    if (r.kind == CertificateKind::TwoPermutationWord)
      std::cout << "q1: " << join(r.q1) << "\nq2: " << join(r.q2) << "\n";
    if (r.kind == CertificateKind::B4Embedding)
      std::cout << "B4 at: " << join(r.b4.map, ",") << "\nz:  " << join(r.blocks.concatenated())
                << "\n";
    return 0;
  });
}

int cmd_label(const InputOptions& in) {
  return guarded(in.json, [&] {
    const Graph g = load(in);
    const SplitGraph sg = split_partition(g);
    auto found = find_labelling(sg);
    if (!found) {
      auto hit = find_forbidden(g, {kNonComparability.begin(), kNonComparability.end()});
      if (!hit) throw std::logic_error("no labelling and no forbidden subgraph");
      throw NotComparability(to_string(hit->member), hit->embedding);
    }
    const auto& lab = found->labelling;
    const auto& cls = found->classification;
    const Orientation d = orientation_from_labelling(sg, lab, cls);
    if (in.json) {
      json arcs = json::array();
      for (auto [u, v] : d.arcs()) arcs.push_back({u, v});
      std::cout << json{{"schema", kReportSchema},
                        {"clique", to_vector(sg.clique)},
                        {"independent", to_vector(sg.independent)},
                        {"labelling", lab.order()},
                        {"classification", to_json(cls)},
                        {"orientation", arcs}}
                       .dump(2)
                << "\n";
      return 0;
    }
    std::cout << "clique order: " << join(lab.order()) << "\n";
    for (const IRecord& r : cls.records) {
      std::cout << "  " << r.vertex << ": " << to_string(r.kind);
      if (r.kind == IClass::A1) std::cout << " m=" << r.m() << " n=" << r.n();
      if (r.kind == IClass::A2) std::cout << " r=" << r.r();
      if (r.kind == IClass::A3) std::cout << " l=" << r.l();
      std::cout << "\n";
    }
    if (!cls.isolated.empty()) std::cout << "  isolated: " << join(cls.isolated) << "\n";
    std::cout << "d: " << cls.d << "\n";
    return 0;
  });
}

int cmd_forbidden(const InputOptions& in) {
  const Graph g = load(in);
  json out = json::object();
  for (Forbidden f : kAllForbidden) {
    auto hit = find_forbidden(g, {f});
    if (in.json) {
      out[to_string(f)] = hit ? json(hit->embedding.map) : json(nullptr);
    } else {
      std::cout << to_string(f) << ": " << (hit ? join(hit->embedding.map, ",") : "none") << "\n";
    }
  }
  if (in.json) std::cout << json{{"schema", kReportSchema}, {"forbidden", out}}.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Split comparability graphs: labellings, three-permutation words and prn"};
  app.require_subcommand(1);

  InputOptions run_in, word_in, prn_in, label_in, forbidden_in;
  auto* run = app.add_subcommand("run", "full pipeline report as JSON");
  add_input(run, run_in);
  auto* word = app.add_subcommand("word", "three-permutation word q1 q2 q3");
  add_input(word, word_in);
  auto* prn_cmd = app.add_subcommand("prn", "permutation-representation number");
  add_input(prn_cmd, prn_in);
  auto* label = app.add_subcommand("label", "clique labelling and classification");
  add_input(label, label_in);
  auto* forbidden = app.add_subcommand("forbidden", "search for induced B1..B4");
  add_input(forbidden, forbidden_in);

  SweepOptions sweep_opts;
  std::string mode = "exhaustive";
  bool sweep_json = false;
  auto* sweep = app.add_subcommand("sweep", "cross-check every invariant over many graphs");
  sweep->add_option("--n-max", sweep_opts.n_max, "largest vertex count")->required();
  sweep->add_option("--mode", mode, "exhaustive or sample")
      ->check(CLI::IsMember({"exhaustive", "sample"}));
  sweep->add_option("--seed", sweep_opts.seed, "sample seed");
  sweep->add_option("--count", sweep_opts.count, "number of sampled graphs");
  sweep->add_flag("--json", sweep_json, "print JSON");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run) return cmd_run(run_in);
    if (*word) return cmd_word(word_in);
    if (*prn_cmd) return cmd_prn(prn_in);
    if (*label) return cmd_label(label_in);
    if (*forbidden) return cmd_forbidden(forbidden_in);
    if (*sweep) {
      sweep_opts.mode = mode == "sample" ? SweepMode::Sample : SweepMode::Exhaustive;
      sweep_opts.workers = default_workers();
      const SweepSummary s = run_sweep(sweep_opts);
      if (sweep_json) std::cout << to_json(s).dump(2) << "\n";
      else std::cout << to_text(s);
      return s.failures == 0 ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
