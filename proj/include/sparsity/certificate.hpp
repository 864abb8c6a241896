#pragma once

#include "sparsity/conditions.hpp"
#include "sparsity/ndt.hpp"
#include "sparsity/packing.hpp"
#include "sparsity/union.hpp"

#include <json.hpp>

#include <string>

namespace sparsity {

using nlohmann::json;

inline constexpr int kSchemaVersion = 1;

json to_json(const VertexSet& set);
json to_json(const EdgeSet& set);
json to_json(const Witness& witness);
json to_json(const ConditionReport& report);
json to_json(const Decomposition& d);
json to_json(const Packing& packing, int k, int l);
json to_json(const PackingFailure& failure, int k, int l);
json to_json(const BoundedCover& cover, int k, int l);
json to_json(const DensityMax& density, const std::string& which);

/// Inverse of to_json(ConditionReport). Throws InputError on malformed input.
ConditionReport report_from_json(const json& j);

/// Wraps a result payload: schema version, command, parameters, graph hash,
/// result and `verified`, then seals it with a digest.
json make_certificate(const std::string& command, const json& parameters, const Multigraph& g,
                      const json& result, bool verified);

/// FNV-1a 64 over the canonical dump of every field except "digest".
std::string certificate_digest(const json& certificate);

/// Checks a result payload against the graph from scratch, without rerunning
/// the producing algorithm. Returns an empty string when it passes, else the
/// reason it fails.
std::string check_payload(const Multigraph& g, const json& parameters, const json& result);

} // namespace sparsity
