#include "json_io.hpp"

#include <fstream>
#include <stdexcept>

namespace sps::tools {

namespace {

constexpr int kFormatVersion = 1;

std::vector<unsigned> sorted_vertices(const json& arr, std::size_t ground,
                                      const std::string& where) {
    if (!arr.is_array()) throw std::runtime_error(where + ": expected an array");
    std::vector<unsigned> out;
    long long prev = -1;
    for (const auto& x : arr) {
        if (!x.is_number_unsigned())
            throw std::runtime_error(where + ": vertices must be non-negative integers");
        const auto v = x.get<unsigned long long>();
        if (static_cast<long long>(v) <= prev)
            throw std::runtime_error(where + ": vertices must be strictly increasing");
        if (v >= ground)
            throw std::runtime_error(where + ": vertex " + std::to_string(v) +
                                     " is outside the ground set");
        out.push_back(static_cast<unsigned>(v));
        prev = static_cast<long long>(v);
    }
    return out;
}

} // namespace

json to_document(const SetPairSystem& sps, json metadata) {
    json doc;
    doc["format_version"] = kFormatVersion;
    doc["ground_set_size"] = sps.ground_set_size();
    json pairs = json::array();
    for (const auto& p : sps.pairs()) {
        json entry;
        entry["A"] = p.a.to_sorted_vector();
        entry["B"] = p.b.to_sorted_vector();
        pairs.push_back(std::move(entry));
    }
    doc["pairs"] = std::move(pairs);
    if (!metadata.empty()) doc["metadata"] = std::move(metadata);
    return doc;
}

SetPairSystem system_from_document(const json& doc) {
    if (!doc.is_object()) throw std::runtime_error("document: expected a JSON object");
    if (!doc.contains("format_version") || doc["format_version"] != kFormatVersion)
        throw std::runtime_error("document: missing or unsupported format_version");
    if (!doc.contains("ground_set_size") || !doc["ground_set_size"].is_number_unsigned())
        throw std::runtime_error("document: missing ground_set_size");
    const auto ground = doc["ground_set_size"].get<std::size_t>();
    if (!doc.contains("pairs") || !doc["pairs"].is_array())
        throw std::runtime_error("document: missing pairs array");

    SetPairSystem sps(ground);
    std::size_t idx = 0;
    for (const auto& entry : doc["pairs"]) {
        const std::string where = "pairs[" + std::to_string(idx) + "]";
        if (!entry.is_object() || !entry.contains("A") || !entry.contains("B"))
            throw std::runtime_error(where + ": expected an object with A and B");
        sps.add_pair(
            VertexSet::from_vector(ground, sorted_vertices(entry["A"], ground, where + ".A")),
            VertexSet::from_vector(ground, sorted_vertices(entry["B"], ground, where + ".B")));
        ++idx;
    }
    return sps;
}

json to_document(const EdgePartition& partition) {
    json doc;
    doc["format_version"] = kFormatVersion;
    doc["m"] = partition.m;
    doc["kind"] = partition.kind == PartitionKind::clique_of_t2m ? "clique" : "biclique";
    json parts = json::array();
    for (const auto& part : partition.parts) {
        json tokens = json::array();
        for (unsigned d : part.to_sorted_vector())
            tokens.push_back(dual_vertex_name(partition.m, d));
        parts.push_back(std::move(tokens));
    }
    doc["parts"] = std::move(parts);
    doc["width"] = partition.width;
    return doc;
}

EdgePartition partition_from_document(const json& doc) {
    if (!doc.is_object()) throw std::runtime_error("partition: expected a JSON object");
    if (!doc.contains("format_version") || doc["format_version"] != kFormatVersion)
        throw std::runtime_error("partition: missing or unsupported format_version");
    if (!doc.contains("m") || !doc["m"].is_number_unsigned())
        throw std::runtime_error("partition: missing m");
    if (!doc.contains("kind") || !doc["kind"].is_string())
        throw std::runtime_error("partition: missing kind");
    if (!doc.contains("parts") || !doc["parts"].is_array())
        throw std::runtime_error("partition: missing parts");
    if (!doc.contains("width") || !doc["width"].is_number_unsigned())
        throw std::runtime_error("partition: missing width");

    EdgePartition p;
    p.m = doc["m"].get<std::size_t>();
    const std::string kind = doc["kind"].get<std::string>();
    if (kind == "clique") p.kind = PartitionKind::clique_of_t2m;
    else if (kind == "biclique") p.kind = PartitionKind::biclique_of_b2m;
    else throw std::runtime_error("partition: kind must be 'clique' or 'biclique'");

    for (const auto& tokens : doc["parts"]) {
        if (!tokens.is_array()) throw std::runtime_error("partition: each part must be an array");
        VertexSet part(2 * p.m);
        for (const auto& t : tokens) {
            if (!t.is_string()) throw std::runtime_error("partition: tokens must be strings");
            const std::string s = t.get<std::string>();
            if (s.size() < 2 || (s[0] != 'x' && s[0] != 'y'))
                throw std::runtime_error("partition: bad dual-vertex token '" + s + "'");
            std::size_t i = 0;
            try {
                i = std::stoul(s.substr(1));
            } catch (const std::exception&) {
                throw std::runtime_error("partition: bad dual-vertex token '" + s + "'");
            }
            if (i >= p.m)
                throw std::runtime_error("partition: token '" + s + "' exceeds m");
            part.insert(static_cast<unsigned>(s[0] == 'x' ? i : p.m + i));
        }
        p.parts.push_back(std::move(part));
    }
    p.width = doc["width"].get<std::size_t>();
    return p;
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    json doc;
    try {
        in >> doc;
    } catch (const json::parse_error& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
    return doc;
}

void write_json_file(const std::string& path, const json& doc) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << doc.dump(2) << "\n";
    if (!out) throw std::runtime_error("write failed: " + path);
}

} // namespace sps::tools
