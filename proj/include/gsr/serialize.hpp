#pragma once

#include <string>
#include <string_view>

#include "json.hpp"

#include "gsr/certify.hpp"
#include "gsr/harness.hpp"
#include "gsr/recover.hpp"

namespace gsr {

/// Schema version stamped into every JSON document this library writes.
inline constexpr int kSchemaVersion = 1;

// Vertex and edge ids are written 1-based, matching the edge-list files.
nlohmann::json to_json(const NupCertificate &cert);
nlohmann::json to_json(const SupportCertificate &cert);
nlohmann::json to_json(const RecoveryReport &report);
nlohmann::json to_json(const SweepConfig &config);
/// Sweep metadata (seed, graph hash, config echo, per-row diagnostics).
nlohmann::json to_json(const SweepResult &result);

/// Throws std::invalid_argument on a missing/unknown version or bad fields.
SweepConfig sweep_config_from_json(const nlohmann::json &doc);

/// One real number per line; blank lines and '#' comments are skipped.
Vector parse_vector(std::string_view text);
Vector load_vector(const std::string &path);

/// Comma-separated 1-based edge ids, e.g. "2,7".
SupportSet parse_support(std::string_view text);

} // namespace gsr
