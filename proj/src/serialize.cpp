#include "gsr/serialize.hpp"

#include <fstream>
#include <sstream>

namespace gsr {

using nlohmann::json;

namespace {

json cycle_json(const std::optional<SimpleCycle> &c) {
  if (!c) return nullptr;
  json verts = json::array();
  for (Index v : c->vertices) verts.push_back(v + 1);
  return verts;
}

json ids_json(const SupportSet &s) {
  json ids = json::array();
  for (Index j : s) ids.push_back(j + 1);
  return ids;
}

std::string_view algorithm_name(SweepAlgorithm a) {
  switch (a) {
  case SweepAlgorithm::full_l1: return "l1";
  case SweepAlgorithm::subgraph_l1: return "subgraph";
  case SweepAlgorithm::both: return "both";
  }
  return "both";
}

} // namespace

json to_json(const NupCertificate &cert) {
  return {{"version", kSchemaVersion},
          {"order", cert.order},
          {"girth", cert.girth.is_infinite() ? json(nullptr) : json(cert.girth.value())},
          {"nullspace_constant", cert.nullspace_constant},
          {"holds", cert.holds},
          {"witness_cycle", cycle_json(cert.witness)}};
}

json to_json(const SupportCertificate &cert) {
  return {{"version", kSchemaVersion},
          {"support", ids_json(cert.support)},
          {"holds", cert.holds},
          {"worst_ratio", cert.worst_ratio},
          {"witness_cycle", cycle_json(cert.witness)},
          {"conservative", cert.conservative}};
}

json to_json(const RecoveryReport &report) {
  json estimate = json::array();
  for (Index j = 0; j < report.estimate.size(); ++j) estimate.push_back(report.estimate(j));
  json doc = {{"version", kSchemaVersion},
              {"method", to_string(report.method)},
              {"estimate", estimate},
              {"success", report.l2_error ? json(report.success) : json(nullptr)},
              {"l2_error", report.l2_error ? json(*report.l2_error) : json(nullptr)},
              {"residual", report.residual},
              {"unique_optimum", report.unique_optimum},
              {"diagnostic", to_string(report.diagnostic)},
              {"certificate", report.certificate ? to_json(*report.certificate) : json(nullptr)}};
  if (report.method == RecoveryMethod::subgraph_l1) doc["subgraph_edges"] = ids_json(report.subgraph_edges);
  return doc;
}

json to_json(const SweepConfig &config) {
  json graph;
  if (!config.graph.file.empty()) {
    graph["file"] = config.graph.file;
  } else {
    graph["generator"] = config.graph.generator;
    if (config.graph.generator == "two_cycle") {
      graph["length"] = config.graph.length;
      graph["shared"] = config.graph.shared == SharedPart::edge ? "edge" : "vertex";
    } else {
      graph["nodes"] = config.graph.nodes;
      if (config.graph.generator == "ring_chord") graph["skip"] = config.graph.skip;
    }
  }
  return {{"version", kSchemaVersion},
          {"graph", graph},
          {"sparsity", config.sparsity},
          {"trials", config.trials},
          {"seed", config.seed},
          {"algorithm", algorithm_name(config.algorithm)},
          {"threshold", config.threshold},
          {"cycle_cap", config.cycle_cap}};
}

json to_json(const SweepResult &result) {
  json rows = json::array();
  for (const SweepRow &r : result.rows) {
    rows.push_back({{"algorithm", to_string(r.method)},
                    {"sparsity", r.sparsity},
                    {"trials", r.trials},
                    {"successes", r.successes},
                    {"probability", r.probability},
                    {"reduced_infeasible", r.reduced_infeasible},
                    {"certified", r.certified}});
  }
  return {{"version", kSchemaVersion},
          {"seed", result.seed},
          {"graph_hash", result.graph_hash},
          {"vertices", result.vertex_count},
          {"edges", result.edge_count},
          {"skipped_sparsity", result.skipped_sparsity},
          {"certificates_checked", result.certificates_checked},
          {"config", to_json(result.config)},
          {"rows", rows}};
}

SweepConfig sweep_config_from_json(const json &doc) {
  if (!doc.is_object() || !doc.contains("version")) throw std::invalid_argument("sweep config: missing \"version\"");
  if (doc.at("version").get<int>() != kSchemaVersion) {
    throw std::invalid_argument("sweep config: unsupported version " + doc.at("version").dump());
  }
  SweepConfig cfg;
  try {
    const json &graph = doc.at("graph");
    if (graph.contains("file")) {
      cfg.graph.file = graph.at("file").get<std::string>();
    } else {
      cfg.graph.generator = graph.at("generator").get<std::string>();
      cfg.graph.length = graph.value("length", cfg.graph.length);
      cfg.graph.nodes = graph.value("nodes", cfg.graph.nodes);
      cfg.graph.skip = graph.value("skip", cfg.graph.skip);
      const std::string shared = graph.value("shared", std::string("edge"));
      if (shared != "edge" && shared != "vertex") throw std::invalid_argument("graph.shared must be edge or vertex");
      cfg.graph.shared = shared == "edge" ? SharedPart::edge : SharedPart::vertex;
    }
    cfg.sparsity = doc.at("sparsity").get<std::vector<Index>>();
    cfg.trials = doc.value("trials", cfg.trials);
    cfg.seed = doc.value("seed", cfg.seed);
    cfg.threshold = doc.value("threshold", cfg.threshold);
    cfg.cycle_cap = doc.value("cycle_cap", cfg.cycle_cap);
    const std::string algo = doc.value("algorithm", std::string("both"));
    if (algo == "l1") cfg.algorithm = SweepAlgorithm::full_l1;
    else if (algo == "subgraph") cfg.algorithm = SweepAlgorithm::subgraph_l1;
    else if (algo == "both") cfg.algorithm = SweepAlgorithm::both;
    else throw std::invalid_argument("algorithm must be l1, subgraph or both");
  } catch (const json::exception &e) {
    throw std::invalid_argument(std::string("sweep config: ") + e.what());
  }
  if (cfg.trials < 1) throw std::invalid_argument("sweep config: trials must be >= 1");
  return cfg;
}

Vector parse_vector(std::string_view text) {
  std::vector<double> values;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    std::string token;
    if (!(fields >> token) || token.front() == '#') continue;
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(token, &used);
    } catch (const std::exception &) {
      used = 0;
    }
    std::string rest;
    if (used != token.size() || (fields >> rest)) {
      throw std::invalid_argument("line " + std::to_string(line_no) + ": expected one number");
    }
    values.push_back(v);
  }
  return Eigen::Map<Vector>(values.data(), static_cast<Index>(values.size()));
}

Vector load_vector(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_vector(buf.str());
}

SupportSet parse_support(std::string_view text) {
  std::vector<Index> ids;
  std::string item;
  std::istringstream in{std::string(text)};
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(item, &used);
    } catch (const std::exception &) {
      used = 0;
    }
    while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used]))) ++used;
    if (used == 0 || used != item.size() || v < 1) throw std::invalid_argument("bad support id '" + item + "'");
    ids.push_back(static_cast<Index>(v - 1));
  }
  return SupportSet(std::move(ids));
}

} // namespace gsr
