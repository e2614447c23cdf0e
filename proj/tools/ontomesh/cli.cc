// Copyright 2026 The OntoMesh Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ontomesh/cli.h"

#include <algorithm>
#include <filesystem>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "ontomesh/centrality.h"
#include "ontomesh/domain_matrix.h"
#include "ontomesh/error.h"
#include "ontomesh/export.h"
#include "ontomesh/fetch.h"
#include "ontomesh/file_util.h"
#include "ontomesh/graph.h"
#include "ontomesh/heatmap_svg.h"
#include "ontomesh/ingest.h"
#include "ontomesh/report.h"
#include "ontomesh/report_render.h"
#include "ontomesh/serialize.h"
#include "ontomesh/store.h"
#include "ontomesh/text_format.h"

namespace fs = std::filesystem;

namespace ontomesh::cli {
namespace {

struct GlobalOptions {
  std::string store_dir = "./store";
  bool json = false;
};

struct IngestOptions {
  std::string root;
  std::string name;
  std::string layout_file;
  std::optional<std::string> pattern;
  std::optional<int> max_depth;
  std::optional<std::string> model_prefix;
  bool strict = false;
  bool overwrite = false;
  std::string url;
  std::string sha256;
  std::string dest = "./downloads";
  std::string ndjson;
};

struct GraphOptions {
  std::string snapshot;
  std::string graph;
  std::string domain;
  std::string name;
  bool containment_edges = false;
  bool overwrite = false;
};

struct CentralityOptions {
  std::string graph;
  std::string metric = "degree";
  std::size_t top = 14;
  bool normalized = false;
  bool weighted = false;
  unsigned threads = 0;
  std::string name;
  bool overwrite = false;
};

struct DissonanceOptions {
  std::string snapshot;
  std::string matrix = "all";
  std::string csv;
  std::string svg;
  std::string out_dir = ".";
  std::string palette_file;
  bool overwrite = false;
};

struct ExportOptions {
  std::string graph;
  std::string matrix;
  std::string format;
  std::string out;
  std::string palette_file;
};

struct ReportOptions {
  std::string name;
  std::string graph;
  std::string format = "markdown";
  std::string out;
  std::string metric = "degree";
  std::size_t top = 14;
  bool normalized = false;
  bool weighted = false;
  bool no_timestamp = false;
  bool overwrite = false;
};

// Output sink that renders either "key=value" text or a JSON document.
class Emitter {
 public:
  Emitter(std::ostream& out, std::ostream& err, bool json) : out_(out), err_(err), json_(json) {}

  void Line(const std::string& text) {
    if (!json_) out_ << text << "\n";
  }
  void Warnings(const Diagnostics& diag) {
    for (const auto& w : diag.warnings()) {
      err_ << "warning: " << w.source << ": " << w.message << "\n";
      doc_["warnings"].push_back({{"source", w.source}, {"message", w.message}});
    }
  }
  nlohmann::json& doc() { return doc_; }
  void Finish(const std::string& command) {
    if (!json_) return;
    doc_["command"] = command;
    out_ << doc_.dump() << "\n";
  }
  void Path(const fs::path& p) {
    Line(p.string());
    doc_["paths"].push_back(p.string());
  }

 private:
  std::ostream& out_;
  std::ostream& err_;
  bool json_;
  nlohmann::json doc_ = nlohmann::json::object();
};

std::string CensusLine(const CorpusCounts& c) {
  return "domains=" + std::to_string(c.n_domains) + " models=" + std::to_string(c.n_models) +
         " types=" + std::to_string(c.n_types) +
         " attributes=" + std::to_string(c.n_distinct_attributes);
}

nlohmann::json CountsJson(const CorpusCounts& c) {
  return {{"domains", c.n_domains},
          {"models", c.n_models},
          {"types", c.n_types},
          {"attributes", c.n_distinct_attributes}};
}

void PrintEdgeCensus(Emitter& emit, const OntologyGraph& graph) {
  const EdgeCensus census = ComputeEdgeCensus(graph);
  emit.Line("nodes=" + std::to_string(graph.node_count()) +
            " edges=" + std::to_string(census.total_edges));
  auto& by_kind = emit.doc()["edges_by_kind"];
  by_kind = nlohmann::json::object();
  for (const auto& [kind, k] : census.by_kind) {
    emit.Line("  " + std::string(EdgeKindName(kind)) + ": edges=" + std::to_string(k.count) +
              " weight=" + std::to_string(k.weight));
    by_kind[std::string(EdgeKindName(kind))] = {{"edges", k.count}, {"weight", k.weight}};
  }
  emit.doc()["nodes"] = graph.node_count();
  emit.doc()["edges"] = census.total_edges;
  emit.doc()["total_weight"] = census.total_weight;
}

int CmdIngest(const GlobalOptions& g, const IngestOptions& o, std::ostream& out,
              std::ostream& err) {
  Emitter emit(out, err, g.json);
  LayoutConfig layout;
  if (!o.layout_file.empty()) layout = LoadLayoutConfig(o.layout_file);
  if (o.pattern) layout.schema_pattern = *o.pattern;
  if (o.max_depth) layout.max_depth = *o.max_depth;
  if (o.model_prefix) layout.model_prefix = *o.model_prefix;
  layout.strict = layout.strict || o.strict;

  fs::path root = o.root;
  if (!o.url.empty()) {
    const FetchResult fetched = FetchSnapshot(
        o.url, o.dest, o.sha256.empty() ? std::nullopt : std::optional<std::string>(o.sha256));
    err << "fetched " << o.url << " sha256=" << fetched.sha256 << "\n";
    emit.doc()["fetch"] = {{"url", o.url},
                           {"sha256", fetched.sha256},
                           {"archive", fetched.archive.string()},
                           {"root", fetched.root.string()}};
    root = fetched.root;
  } else if (root.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "ingest needs a corpus root or --url");
  }

  Diagnostics diag;
  const CorpusSnapshot snapshot = IngestCorpus(root, layout, &diag);
  emit.Warnings(diag);

  std::string name = o.name;
  if (name.empty()) {
    fs::path trimmed = root;
    if (!trimmed.has_filename()) trimmed = trimmed.parent_path();
    name = trimmed.filename().string();
  }
  Store store = Store::Open(g.store_dir);
  const std::string hash = store.Put(name, snapshot, o.overwrite);
  if (!o.ndjson.empty()) WriteFileBytes(o.ndjson, SnapshotToNdjson(snapshot));

  emit.Line(CensusLine(snapshot.counts));
  emit.doc()["name"] = name;
  emit.doc()["hash"] = hash;
  emit.doc()["content_hash"] = snapshot.content_hash;
  emit.doc()["counts"] = CountsJson(snapshot.counts);
  emit.Finish("ingest");
  return kExitOk;
}

int CmdGraphBuild(const GlobalOptions& g, const GraphOptions& o, std::ostream& out,
                  std::ostream& err) {
  Emitter emit(out, err, g.json);
  Store store = Store::Open(g.store_dir);
  const auto snapshot = store.GetAs<CorpusSnapshot>(o.snapshot);
  const OntologyGraph graph = BuildGraph(snapshot, BuildOptions{o.containment_edges});
  const std::string name = o.name.empty() ? o.snapshot + ".graph" : o.name;
  const std::string hash = store.Put(name, graph, o.overwrite);
  PrintEdgeCensus(emit, graph);
  emit.doc()["name"] = name;
  emit.doc()["hash"] = hash;
  emit.Finish("graph build");
  return kExitOk;
}

int CmdGraphSubgraph(const GlobalOptions& g, const GraphOptions& o, std::ostream& out,
                     std::ostream& err) {
  Emitter emit(out, err, g.json);
  Store store = Store::Open(g.store_dir);
  const auto graph = store.GetAs<OntologyGraph>(o.graph);
  const OntologyGraph sub = DomainSubgraph(graph, o.domain);
  const std::string name = o.name.empty() ? o.graph + "." + o.domain : o.name;
  const std::string hash = store.Put(name, sub, o.overwrite);
  PrintEdgeCensus(emit, sub);
  emit.doc()["name"] = name;
  emit.doc()["hash"] = hash;
  emit.Finish("graph subgraph");
  return kExitOk;
}

int CmdGraphCensus(const GlobalOptions& g, const GraphOptions& o, std::ostream& out,
                   std::ostream& err) {
  Emitter emit(out, err, g.json);
  const auto graph = Store::Open(g.store_dir).GetAs<OntologyGraph>(o.graph);
  PrintEdgeCensus(emit, graph);
  emit.Finish("graph census");
  return kExitOk;
}

int CmdCentrality(const GlobalOptions& g, const CentralityOptions& o, std::ostream& out,
                  std::ostream& err) {
  Emitter emit(out, err, g.json);
  Store store = Store::Open(g.store_dir);
  const auto graph = store.GetAs<OntologyGraph>(o.graph);
  const CentralityMetric metric = *ParseCentralityMetric(o.metric);
  const CentralityResult result = metric == CentralityMetric::kDegree
                                      ? DegreeCentrality(graph, o.normalized, o.weighted)
                                      : BetweennessCentrality(graph, o.normalized, o.threads);
  const std::string name = o.name.empty() ? o.graph + "." + o.metric : o.name;
  const std::string hash = store.Put(name, result, o.overwrite);

  const auto rows = TopKAttributes(result, graph, o.top);
  emit.Line("rank\tattribute\tscore\tdomains");
  auto& table = emit.doc()["top"];
  table = nlohmann::json::array();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    emit.Line(std::to_string(i + 1) + "\t" + rows[i].label + "\t" +
              FormatDecimal(rows[i].score, 6) + "\t" + std::to_string(rows[i].domain_spread));
    table.push_back({{"rank", i + 1},
                     {"attribute", rows[i].label},
                     {"score", rows[i].score},
                     {"domain_spread", rows[i].domain_spread}});
  }
  emit.doc()["name"] = name;
  emit.doc()["hash"] = hash;
  emit.doc()["metric"] = o.metric;
  emit.Finish("analyze centrality");
  return kExitOk;
}

HeatmapPalette LoadPalette(const std::string& file) {
  if (file.empty()) return HeatmapPalette{};
  return ParsePalette(ReadFileBytes(file));
}

int CmdDissonance(const GlobalOptions& g, const DissonanceOptions& o, std::ostream& out,
                  std::ostream& err) {
  Emitter emit(out, err, g.json);
  Store store = Store::Open(g.store_dir);
  const auto snapshot = store.GetAs<CorpusSnapshot>(o.snapshot);
  const HeatmapPalette palette = LoadPalette(o.palette_file);

  std::vector<MatrixMetric> metrics;
  if (o.matrix == "all") {
    metrics.assign(std::begin(kAllMatrixMetrics), std::end(kAllMatrixMetrics));
  } else {
    metrics.push_back(*ParseMatrixMetric(o.matrix));
  }
  const bool single = metrics.size() == 1;

  Diagnostics diag;
  for (MatrixMetric m : metrics) {
    const DomainMatrix matrix = DomainOverlapMatrix(snapshot, m, &diag);
    const std::string metric_name(MatrixMetricName(m));
    store.Put(o.snapshot + "." + metric_name, matrix, o.overwrite);

    const fs::path base = fs::path(o.out_dir) / (o.snapshot + "." + metric_name);
    const fs::path csv = single && !o.csv.empty() ? fs::path(o.csv) : fs::path(base.string() + ".csv");
    WriteMatrixCsv(matrix, csv);
    emit.Path(csv);
    if (!o.svg.empty() || !single) {
      const fs::path svg =
          single && !o.svg.empty() ? fs::path(o.svg) : fs::path(base.string() + ".svg");
      WriteHeatmapSvg(matrix, svg, palette);
      emit.Path(svg);
    }
  }
  emit.Warnings(diag);
  emit.Finish("analyze dissonance");
  return kExitOk;
}

int CmdExport(const GlobalOptions& g, const ExportOptions& o, std::ostream& out,
              std::ostream& err) {
  Emitter emit(out, err, g.json);
  Store store = Store::Open(g.store_dir);
  if (o.graph.empty() == o.matrix.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "export needs exactly one of --graph or --matrix");
  }
  std::size_t bytes = 0;
  if (!o.graph.empty()) {
    const auto format = ParseGraphFormat(o.format);
    if (!format) {
      throw Error(ErrorCode::kInvalidArgument, "unknown graph format '" + o.format + "'");
    }
    const auto graph = store.GetAs<OntologyGraph>(o.graph);
    bytes = ExportGraph(graph, *format, o.out);
  } else {
    const auto matrix = store.GetAs<DomainMatrix>(o.matrix);
    if (o.format == "csv") {
      bytes = WriteMatrixCsv(matrix, o.out);
    } else if (o.format == "svg") {
      bytes = WriteHeatmapSvg(matrix, o.out, LoadPalette(o.palette_file));
    } else if (o.format == "canonical-json" || o.format == "json") {
      bytes = WriteFileBytes(o.out, CanonicalDump(ToJson(matrix)));
    } else {
      throw Error(ErrorCode::kInvalidArgument, "unknown matrix format '" + o.format + "'");
    }
  }
  emit.Path(o.out);
  emit.doc()["bytes"] = bytes;
  emit.Finish("export");
  return kExitOk;
}

int CmdReport(const GlobalOptions& g, const ReportOptions& o, std::ostream& out,
              std::ostream& err) {
  Emitter emit(out, err, g.json);
  Store store = Store::Open(g.store_dir);
  const auto format = ParseReportFormat(o.format);
  if (!format) throw Error(ErrorCode::kInvalidArgument, "unknown report format '" + o.format + "'");

  const auto snapshot = store.GetAs<CorpusSnapshot>(o.name);
  const std::string graph_name = o.graph.empty() ? o.name + ".graph" : o.graph;
  const auto graph = store.GetAs<OntologyGraph>(graph_name);

  SummaryOptions opts;
  opts.top_k = o.top;
  opts.metric = *ParseCentralityMetric(o.metric);
  opts.normalized = o.normalized;
  opts.weighted = o.weighted;
  opts.timestamp = !o.no_timestamp;
  const AnalysisReport report = DissonanceSummary(snapshot, graph, opts);
  const std::string hash = store.Put(o.name + ".report", report, o.overwrite);

  const fs::path path =
      o.out.empty()
          ? fs::path(o.name + (*format == ReportFormat::kMarkdown ? ".report.md" : ".report.json"))
          : fs::path(o.out);
  WriteReport(report, path, *format);
  emit.Path(path);
  emit.doc()["hash"] = hash;
  emit.Finish("report");
  return kExitOk;
}

int ExitCodeFor(const Error& e) {
  switch (e.code()) {
    case ErrorCode::kData: return kExitData;
    case ErrorCode::kInvalidArgument: return kExitUsage;
    default: return kExitError;
  }
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"ontomesh: ontology network graphs and cross-domain dissonance analytics",
               "ontomesh"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "0.1.0");

  GlobalOptions global;
  app.add_option("--store", global.store_dir, "Artifact store directory")
      ->envname("ONTOMESH_STORE")
      ->capture_default_str();
  app.add_flag("--json", global.json, "Machine-readable JSON output");

  std::function<int()> action;

  // ingest ---------------------------------------------------------------
  IngestOptions ingest;
  auto* ingest_cmd = app.add_subcommand("ingest", "Parse a corpus tree into a stored snapshot");
  ingest_cmd->add_option("root", ingest.root, "Corpus root: <root>/<domain>/<model>/...");
  ingest_cmd->add_option("--name", ingest.name, "Snapshot name (default: root directory name)");
  ingest_cmd->add_option("--layout", ingest.layout_file, "Layout config file (key=value)")
      ->check(CLI::ExistingFile);
  ingest_cmd->add_option("--pattern", ingest.pattern, "Schema file name pattern (default *.json)");
  ingest_cmd->add_option("--max-depth", ingest.max_depth,
                         "Deepest schema file level below a model directory");
  ingest_cmd->add_option("--model-prefix", ingest.model_prefix,
                         "Prefix stripped from model directory names");
  ingest_cmd->add_flag("--strict", ingest.strict, "Fail on the first malformed schema file");
  ingest_cmd->add_flag("--overwrite", ingest.overwrite, "Replace an existing artifact");
  ingest_cmd->add_option("--url", ingest.url, "Fetch a tar/tar.gz/zip corpus archive first");
  ingest_cmd->add_option("--sha256", ingest.sha256, "Expected archive digest");
  ingest_cmd->add_option("--dest", ingest.dest, "Download directory")->capture_default_str();
  ingest_cmd->add_option("--ndjson", ingest.ndjson, "Also write the snapshot as NDJSON");
  ingest_cmd->callback([&] { action = [&] { return CmdIngest(global, ingest, out, err); }; });

  // graph ----------------------------------------------------------------
  GraphOptions graph;
  auto* graph_cmd = app.add_subcommand("graph", "Build and inspect ontology graphs");
  graph_cmd->require_subcommand(1);
  auto* build_cmd = graph_cmd->add_subcommand("build", "Build a graph from a stored snapshot");
  build_cmd->add_option("--snapshot", graph.snapshot, "Snapshot name")->required();
  build_cmd->add_option("--name", graph.name, "Graph name (default: <snapshot>.graph)");
  build_cmd->add_flag("--containment-edges", graph.containment_edges,
                      "Add Type-DataModel and DataModel-Domain edges");
  build_cmd->add_flag("--overwrite", graph.overwrite, "Replace an existing artifact");
  build_cmd->callback([&] { action = [&] { return CmdGraphBuild(global, graph, out, err); }; });

  auto* sub_cmd = graph_cmd->add_subcommand("subgraph", "Extract one domain's induced subgraph");
  sub_cmd->add_option("--graph", graph.graph, "Graph name")->required();
  sub_cmd->add_option("--domain", graph.domain, "Domain id")->required();
  sub_cmd->add_option("--name", graph.name, "Subgraph name (default: <graph>.<domain>)");
  sub_cmd->add_flag("--overwrite", graph.overwrite, "Replace an existing artifact");
  sub_cmd->callback([&] { action = [&] { return CmdGraphSubgraph(global, graph, out, err); }; });

  auto* census_cmd = graph_cmd->add_subcommand("census", "Print node and edge counts");
  census_cmd->add_option("--graph", graph.graph, "Graph name")->required();
  census_cmd->callback([&] { action = [&] { return CmdGraphCensus(global, graph, out, err); }; });

  // analyze --------------------------------------------------------------
  CentralityOptions cent;
  DissonanceOptions diss;
  auto* analyze_cmd = app.add_subcommand("analyze", "Centrality and domain overlap analytics");
  analyze_cmd->require_subcommand(1);
  auto* cent_cmd = analyze_cmd->add_subcommand("centrality", "Rank attributes by centrality");
  cent_cmd->add_option("--graph", cent.graph, "Graph name")->required();
  cent_cmd->add_option("--metric", cent.metric, "degree or betweenness")
      ->check(CLI::IsMember({"degree", "betweenness"}))
      ->capture_default_str();
  cent_cmd->add_option("--top", cent.top, "Number of attributes to list")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cent_cmd->add_flag("--normalized", cent.normalized, "Normalise scores to [0, 1]");
  cent_cmd->add_flag("--weighted", cent.weighted, "Weighted degree (sum of edge weights)");
  cent_cmd->add_option("--threads", cent.threads, "Betweenness worker threads (0 = all cores)");
  cent_cmd->add_option("--name", cent.name, "Result name (default: <graph>.<metric>)");
  cent_cmd->add_flag("--overwrite", cent.overwrite, "Replace an existing artifact");
  cent_cmd->callback([&] { action = [&] { return CmdCentrality(global, cent, out, err); }; });

  auto* diss_cmd = analyze_cmd->add_subcommand("dissonance", "Domain overlap matrices");
  diss_cmd->add_option("--snapshot", diss.snapshot, "Snapshot name")->required();
  diss_cmd->add_option("--matrix", diss.matrix,
                       "shared-models, shared-attributes, jaccard-attributes or all")
      ->check(CLI::IsMember({"all", "shared-models", "shared-attributes", "jaccard-attributes",
                             "shared_models", "shared_attributes", "jaccard_attributes"}))
      ->capture_default_str();
  diss_cmd->add_option("--csv", diss.csv, "CSV output path (single matrix)");
  diss_cmd->add_option("--svg", diss.svg, "SVG heatmap output path (single matrix)");
  diss_cmd->add_option("--out-dir", diss.out_dir, "Directory for default output paths")
      ->capture_default_str();
  diss_cmd->add_option("--palette", diss.palette_file, "Heatmap palette file")
      ->check(CLI::ExistingFile);
  diss_cmd->add_flag("--overwrite", diss.overwrite, "Replace existing artifacts");
  diss_cmd->callback([&] { action = [&] { return CmdDissonance(global, diss, out, err); }; });

  // export ---------------------------------------------------------------
  ExportOptions exp;
  auto* export_cmd = app.add_subcommand("export", "Write a stored graph or matrix to a file");
  export_cmd->add_option("--graph", exp.graph, "Graph name");
  export_cmd->add_option("--matrix", exp.matrix, "Matrix name");
  export_cmd->add_option("--format", exp.format,
                         "graphml, dot, canonical-json (graphs); csv, svg, canonical-json (matrices)")
      ->required();
  export_cmd->add_option("--out", exp.out, "Output path")->required();
  export_cmd->add_option("--palette", exp.palette_file, "Heatmap palette file")
      ->check(CLI::ExistingFile);
  export_cmd->callback([&] { action = [&] { return CmdExport(global, exp, out, err); }; });

  // report ---------------------------------------------------------------
  ReportOptions rep;
  auto* report_cmd = app.add_subcommand("report", "Render the dissonance report for a snapshot");
  report_cmd->add_option("--name", rep.name, "Snapshot name")->required();
  report_cmd->add_option("--graph", rep.graph, "Graph name (default: <name>.graph)");
  report_cmd->add_option("--format", rep.format, "markdown or canonical-json")
      ->check(CLI::IsMember({"markdown", "md", "canonical-json", "json"}))
      ->capture_default_str();
  report_cmd->add_option("--out", rep.out, "Output path (default: <name>.report.md)");
  report_cmd->add_option("--metric", rep.metric, "Centrality for the top-k table")
      ->check(CLI::IsMember({"degree", "betweenness"}))
      ->capture_default_str();
  report_cmd->add_option("--top", rep.top, "Rows in the top-k table")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  report_cmd->add_flag("--normalized", rep.normalized, "Normalised centrality scores");
  report_cmd->add_flag("--weighted", rep.weighted, "Weighted degree");
  report_cmd->add_flag("--no-timestamp", rep.no_timestamp, "Omit the generation time");
  report_cmd->add_flag("--overwrite", rep.overwrite, "Replace an existing report artifact");
  report_cmd->callback([&] { action = [&] { return CmdReport(global, rep, out, err); }; });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  if (!action) {
    err << app.help();
    return kExitUsage;
  }

  try {
    return action();
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return ExitCodeFor(e);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
}

}  // namespace ontomesh::cli
