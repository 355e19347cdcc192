#include "foldkit/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "foldkit/coloring.hpp"
#include "foldkit/errors.hpp"
#include "foldkit/families.hpp"
#include "foldkit/fold.hpp"
#include "foldkit/graph_io.hpp"
#include "foldkit/suites.hpp"
#include "foldkit/threshold.hpp"

namespace foldkit {

namespace {

using json = nlohmann::ordered_json;

struct GraphSource {
  std::string family;  // "kind:N" or empty
  std::string path;    // file path, "-" for stdin, or empty
};

std::string read_stream(std::istream& in) {
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string first_line(const std::string& text) {
  auto nl = text.find('\n');
  return nl == std::string::npos ? text : text.substr(0, nl);
}

bool looks_like_edge_list(const std::string& text) {
  std::istringstream in(first_line(text));
  std::string tag;
  int n = 0;
  return static_cast<bool>(in >> tag >> n) && tag == "n";
}

Graph load_graph(const GraphSource& source, std::istream& in) {
  if (!source.family.empty() && !source.path.empty()) {
    throw ParseError("exactly one graph source allowed: got --family and a file");
  }
  if (!source.family.empty()) return generate(parse_family(source.family));
  std::string text;
  if (source.path.empty() || source.path == "-") {
    text = read_stream(in);
  } else {
    std::ifstream file(source.path);
    if (!file) throw ParseError("cannot open \"" + source.path + "\"");
    text = read_stream(file);
  }
  if (looks_like_edge_list(text)) return parse_edge_list(text);
  return parse_graph6(first_line(text));
}

void add_graph_source(CLI::App* cmd, GraphSource& source) {
  cmd->add_option("input", source.path, "graph file (graph6 or edge list), - for stdin");
  cmd->add_option("--family", source.family, "generated graph, e.g. cycle:9 or wheel:9");
}

SigmaOptions sigma_options_from_env() {
  SigmaOptions opts;
  if (const char* env = std::getenv("FOLDKIT_SIGMA_BOUND")) {
    try {
      std::size_t used = 0;
      int bound = std::stoi(env, &used);
      if (used != std::string(env).size() || bound < 1) throw std::invalid_argument(env);
      opts.max_vertices = bound;
    } catch (const std::exception&) {
      throw ParseError("FOLDKIT_SIGMA_BOUND: bad value \"" + std::string(env) + "\"");
    }
  }
  return opts;
}

json coloring_json(const Coloring& c) {
  return json{{"assignment", c.assignment}, {"colors", c.colors}};
}

json trace_json(const FoldTrace& trace) {
  json steps = json::array();
  for (const FoldStep& step : trace.steps) steps.push_back({step.x, step.y});
  return json{{"steps", std::move(steps)},
              {"class_map", trace.class_map},
              {"target", emit_graph6(trace.target)}};
}

int cmd_compute(const GraphSource& source, const std::string& what, bool text_mode,
                std::istream& in, std::ostream& out) {
  Graph g = load_graph(source, in);

  bool want_chi = false, want_psi = false, want_sigma = false;
  std::istringstream parts(what);
  std::string item;
  while (std::getline(parts, item, ',')) {
    if (item == "chi") {
      want_chi = true;
    } else if (item == "psi") {
      want_psi = true;
    } else if (item == "sigma") {
      want_sigma = true;
    } else {
      throw ParseError("--what: unknown value \"" + item + "\"");
    }
  }
  if (!want_chi && !want_psi && !want_sigma) throw ParseError("--what: empty selection");

  json report{{"schema", "foldkit-v1"},
              {"n", g.vertex_count()},
              {"m", g.edge_count()},
              {"graph6", emit_graph6(g)}};
  json certificates = json::object();
  if (want_chi) {
    ChiResult r = chi(g);
    report["chi"] = r.value;
    certificates["chi"] = coloring_json(r.certificate);
  }
  if (want_psi) {
    PsiResult r = psi(g);
    report["psi"] = r.value;
    certificates["psi"] = coloring_json(r.certificate);
  }
  if (want_sigma) {
    SigmaResult r = sigma(g, sigma_options_from_env());
    report["sigma"] = r.sigma;
    certificates["sigma"] = trace_json(r.witness);
  }
  report["certificates"] = std::move(certificates);

  if (text_mode) {
    out << "n = " << g.vertex_count() << "\nm = " << g.edge_count() << '\n';
    if (want_chi) out << "chi = " << report["chi"] << '\n';
    if (want_psi) out << "psi = " << report["psi"] << '\n';
    if (want_sigma) out << "sigma = " << report["sigma"] << '\n';
  } else {
    out << report.dump() << '\n';
  }
  return 0;
}

int cmd_fold(const GraphSource& source, int k, const std::string& trace_path, std::istream& in,
             std::ostream& out, std::ostream& err) {
  Graph g = load_graph(source, in);
  FoldTrace trace = fold_to_k(g, k, sigma_options_from_env());
  std::string text = emit_trace(trace);
  std::string summary = "target K_" + std::to_string(trace.target.vertex_count()) + " (" +
                        std::to_string(trace.target.vertex_count()) + " vertices, " +
                        std::to_string(trace.steps.size()) + " folds)";
  if (trace_path.empty() || trace_path == "-") {
    out << text;
    err << summary << '\n';
  } else {
    std::ofstream file(trace_path);
    if (!file) throw Error("cannot write \"" + trace_path + "\"");
    file << text;
    out << summary << '\n';
  }
  return 0;
}

int cmd_verify(const std::string& suite, const SuiteOptions& opts, bool json_mode,
               std::ostream& out) {
  VerificationReport report = run_suite(suite, opts);
  if (json_mode) {
    json failures = json::array();
    for (const SuiteFailure& f : report.failures) {
      failures.push_back({{"graph6", f.graph6}, {"expected", f.expected}, {"got", f.got}});
    }
    out << json{{"schema", "foldkit-v1"},
                {"suite", report.suite},
                {"instances", report.instances},
                {"failures", std::move(failures)},
                {"wall_ms", report.wall_ms}}
               .dump()
        << '\n';
  } else {
    out << "suite " << report.suite << ": " << report.instances << " instances, "
        << report.failures.size() << " failures (" << report.wall_ms << " ms)\n";
    for (const SuiteFailure& f : report.failures) {
      out << "  FAIL " << f.graph6 << ": expected " << f.expected << ", got " << f.got << '\n';
    }
  }
  return report.passed() ? 0 : 1;
}

int cmd_check_trace(const std::string& path, std::istream& in, std::ostream& out) {
  std::string text;
  if (path.empty() || path == "-") {
    text = read_stream(in);
  } else {
    std::ifstream file(path);
    if (!file) throw ParseError("cannot open \"" + path + "\"");
    text = read_stream(file);
  }
  FoldTrace trace = parse_trace(text);
  TraceCheck check = verify_trace(trace);
  if (check.ok) {
    out << "trace ok: " << trace.steps.size() << " folds from " << emit_graph6(trace.source)
        << " to " << emit_graph6(trace.target) << '\n';
    return 0;
  }
  out << "trace invalid: " << check.message << '\n';
  return 1;
}

int cmd_check_coloring(const GraphSource& source, const std::string& cert_path,
                       bool require_complete, std::istream& in, std::ostream& out) {
  Graph g = load_graph(source, in);
  std::ifstream file(cert_path);
  if (!file) throw ParseError("cannot open \"" + cert_path + "\"");
  Coloring coloring = parse_coloring(read_stream(file));
  if (!is_proper(g, coloring)) {
    out << "coloring improper\n";
    return 1;
  }
  if (require_complete && !is_complete(g, coloring)) {
    out << "coloring proper but not complete\n";
    return 1;
  }
  out << "coloring ok: " << coloring.colors << " colors, proper"
      << (require_complete ? " and complete" : "") << '\n';
  return 0;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::istream& in, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"exact graph folding, chromatic and achromatic numbers with witnesses"};
  app.name("foldkit");
  app.require_subcommand(1);

  auto* compute = app.add_subcommand("compute", "compute invariants of one graph");
  GraphSource compute_source;
  add_graph_source(compute, compute_source);
  std::string what = "chi,psi,sigma";
  bool compute_text = false;
  compute->add_option("--what", what, "comma list from chi,psi,sigma (default all)");
  compute->add_flag("--text", compute_text, "plain text instead of JSON");
  compute->add_flag("--json", [](std::int64_t) {}, "JSON output (default)");

  auto* fold = app.add_subcommand("fold", "fold a graph onto K_k and emit the trace");
  GraphSource fold_source;
  add_graph_source(fold, fold_source);
  int fold_k = 0;
  std::string trace_path;
  fold->add_option("--to", fold_k, "target clique size k")->required();
  fold->add_option("--trace", trace_path, "trace output file (stdout when omitted)");

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  std::string suite;
  SuiteOptions suite_opts;
  bool verify_json = false;
  verify->add_option("suite", suite, "one of: interpolation reduction-lemma threshold marcu join fold-chi chi-step")
      ->required();
  int max_n = -1;
  verify->add_option("--max-n", max_n, "instance size limit (suite default when omitted)");
  verify->add_option("--seed", suite_opts.seed, "RNG seed for the join suite");
  verify->add_option("--pairs", suite_opts.pair_count, "pair count for the join suite");
  verify->add_flag("--json", verify_json, "JSON report");
  verify->add_flag("--text", [](std::int64_t) {}, "text report (default)");

  auto* check_trace = app.add_subcommand("check-trace", "verify a fold-trace file");
  std::string check_trace_path;
  check_trace->add_option("file", check_trace_path, "trace file, - for stdin");

  auto* check_coloring = app.add_subcommand("check-coloring", "verify a coloring certificate");
  GraphSource check_source;
  add_graph_source(check_coloring, check_source);
  std::string cert_path;
  bool require_complete = false;
  check_coloring->add_option("--cert", cert_path, "coloring certificate file")->required();
  check_coloring->add_flag("--complete", require_complete, "also require completeness");

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (compute->parsed()) return cmd_compute(compute_source, what, compute_text, in, out);
    if (fold->parsed()) return cmd_fold(fold_source, fold_k, trace_path, in, out, err);
    if (verify->parsed()) {
      suite_opts.max_n = max_n;
      return cmd_verify(suite, suite_opts, verify_json, out);
    }
    if (check_trace->parsed()) return cmd_check_trace(check_trace_path, in, out);
    if (check_coloring->parsed()) {
      return cmd_check_coloring(check_source, cert_path, require_complete, in, out);
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return 3;
  } catch (const RangeError& e) {
    err << "error: " << e.what() << '\n';
    return 4;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace foldkit
