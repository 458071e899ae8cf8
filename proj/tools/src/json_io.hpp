#ifndef SPS_TOOLS_JSON_IO_HPP
#define SPS_TOOLS_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include <sps/duality.hpp>
#include <sps/set_pair_system.hpp>

namespace sps::tools {

using json = nlohmann::ordered_json;

/// Document fields in fixed order (format_version, ground_set_size,
/// pairs, metadata) with sorted vertex arrays, so files are diff-stable.
json to_document(const SetPairSystem& sps, json metadata = json::object());

/// Throws std::runtime_error with a location hint on a malformed
/// document (wrong version, unsorted/duplicate vertices, out of range).
SetPairSystem system_from_document(const json& doc);

json to_document(const EdgePartition& partition);
EdgePartition partition_from_document(const json& doc);

json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const json& doc);

} // namespace sps::tools

#endif
