#ifndef FAREY_JSON_IO_HPP
#define FAREY_JSON_IO_HPP

#include <map>
#include <string>

#include <json.hpp>

#include "farey/amalgam.hpp"
#include "farey/decomp.hpp"
#include "farey/farey_build.hpp"
#include "farey/graph.hpp"
#include "farey/kclass.hpp"
#include "farey/lprime.hpp"
#include "farey/model_build.hpp"

namespace farey {

using nlohmann::json;

inline constexpr const char* kSchemaVersion = "farey-lab/1";

/// Parses text as JSON; errors carry the parser's position information.
json parse_json_text(const std::string& text);

json graph_to_json(const Graph& g);
Graph graph_from_json(const json& j);

json colored_farey_to_json(const ColoredFarey& f);

json peel_sequence_to_json(const PeelSequence& seq);
PeelSequence peel_sequence_from_json(const json& j);

json k_report_to_json(const KMembershipReport& report);
json strong_result_to_json(const StrongResult& result);
json lozenge_string_to_json(const LozengeStringReport& report);

json amalgam_to_json(const AmalgamResult& result);
GlueMap glue_from_json(const json& j);

json model_spec_to_json(const ModelSpec& spec);
ModelSpec model_spec_from_json(const json& j);
json tree_model_to_json(const TreeModel& model);
json generic_result_to_json(const GenericResult& result);
json compliance_to_json(const TComplianceReport& report);

json block_tree_to_json(const BlockTree& t);
BlockTree block_tree_from_json(const json& j);
json hull_to_json(const HullResult& hull);

json catalog_to_json(const CycleCatalog& catalog);
CycleCatalog catalog_from_json(const json& j);

json pdelta_witness_to_json(const PDeltaWitness& witness);
json level_embedding_to_json(const LevelEmbedding& embedding);
json y_witness_to_json(const YWitness& witness);
json fingerprint_to_json(const QfFingerprint& fp, const CycleCatalog& catalog);
json embeds_result_to_json(const EmbedsResult& result);
json partial_automorphism_to_json(const PartialAutomorphism& pa);

DeltaSequence delta_from_json(const json& j, const CycleCatalog& catalog);
json delta_to_json(const DeltaSequence& delta, const CycleCatalog& catalog);

std::vector<CorpusEntry> corpus_from_json(const json& j);

using AttrMap = std::map<std::string, std::string>;

std::string to_dot(const Graph& g, const std::map<VertexId, AttrMap>& vertex_attrs = {},
                   const std::map<Edge, AttrMap>& edge_attrs = {});
std::string to_dot(const ColoredFarey& f);
std::string to_dot(const BlockTree& t);

}  // namespace farey

#endif  // FAREY_JSON_IO_HPP
