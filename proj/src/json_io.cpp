#include "farey/json_io.hpp"

#include <algorithm>
#include <sstream>

namespace farey {

namespace {

std::uint32_t require_uint(const json& j, const char* what) {
    if (!j.is_number_unsigned()) {
        throw Error(ErrorKind::parse, std::string("expected a non-negative integer for ") + what);
    }
    return j.get<std::uint32_t>();
}

std::vector<VertexId> vertex_list_from_json(const json& j, const char* what) {
    if (!j.is_array()) {
        throw Error(ErrorKind::parse, std::string("expected an array for ") + what);
    }
    std::vector<VertexId> out;
    for (const auto& item : j) out.push_back(require_uint(item, what));
    return out;
}

json edge_to_json(const Edge& e) { return json::array({e.u, e.v}); }

std::pair<VertexId, VertexId> pair_from_json(const json& j, const char* what) {
    if (!j.is_array() || j.size() != 2) {
        throw Error(ErrorKind::parse, std::string("expected a pair for ") + what);
    }
    return {require_uint(j[0], what), require_uint(j[1], what)};
}

}  // namespace

json parse_json_text(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error(ErrorKind::parse, e.what());
    }
}

json graph_to_json(const Graph& g) {
    json edges = json::array();
    for (const Edge& e : g.edges()) edges.push_back(edge_to_json(e));
    return json{{"vertex_count", g.vertex_count()}, {"edges", std::move(edges)}};
}

Graph graph_from_json(const json& j) {
    if (!j.is_object() || !j.contains("vertex_count") || !j.contains("edges")) {
        throw Error(ErrorKind::parse, "graph: expected {vertex_count, edges}");
    }
    auto n = require_uint(j["vertex_count"], "vertex_count");
    std::vector<std::pair<VertexId, VertexId>> edges;
    if (!j["edges"].is_array()) {
        throw Error(ErrorKind::parse, "graph: edges must be an array of pairs");
    }
    for (const auto& item : j["edges"]) edges.push_back(pair_from_json(item, "edge"));
    try {
        return Graph(n, edges);
    } catch (const Error& e) {
        throw Error(ErrorKind::parse, std::string("graph: ") + e.what());
    }
}

json colored_farey_to_json(const ColoredFarey& f) {
    json out = graph_to_json(f.graph());
    out["level"] = f.level();
    json black = json::array(), blue = json::array();
    for (const Edge& e : f.graph().edges()) {
        (f.color(e.u, e.v) == EdgeColor::black ? black : blue).push_back(edge_to_json(e));
    }
    out["colors"] = json{{"black", std::move(black)}, {"blue", std::move(blue)}};
    json births = json::array(), parents = json::array();
    for (VertexId v = 0; v < f.graph().vertex_count(); ++v) {
        births.push_back(f.birth_level(v));
        auto parent = f.parent_edge(v);
        parents.push_back(parent ? edge_to_json(*parent) : json(nullptr));
    }
    out["birth_level"] = std::move(births);
    out["parent_edge"] = std::move(parents);
    return out;
}

json peel_sequence_to_json(const PeelSequence& seq) {
    json steps = json::array();
    for (const PeelStep& step : seq.steps) {
        json reason;
        if (step.reason.kind == RemovalReason::Kind::valency_le_1) {
            reason = "valency_le_1";
        } else {
            reason = json{{"triangle_apex", edge_to_json(step.reason.apex_edge)}};
        }
        steps.push_back(json{{"vertex", step.vertex}, {"reason", std::move(reason)}});
    }
    return json{{"base", seq.base}, {"steps", std::move(steps)}};
}

PeelSequence peel_sequence_from_json(const json& j) {
    PeelSequence out;
    if (!j.is_object() || !j.contains("base") || !j.contains("steps")) {
        throw Error(ErrorKind::parse, "peel: expected {base, steps}");
    }
    out.base = vertex_list_from_json(j["base"], "base");
    for (const auto& item : j["steps"]) {
        PeelStep step;
        step.vertex = require_uint(item.at("vertex"), "vertex");
        const auto& reason = item.at("reason");
        if (reason.is_string() && reason.get<std::string>() == "valency_le_1") {
            step.reason.kind = RemovalReason::Kind::valency_le_1;
        } else if (reason.is_object() && reason.contains("triangle_apex")) {
            step.reason.kind = RemovalReason::Kind::triangle_apex;
            auto [a, b] = pair_from_json(reason["triangle_apex"], "triangle_apex");
            step.reason.apex_edge = Edge(a, b);
        } else {
            throw Error(ErrorKind::parse, "peel: bad removal reason");
        }
        out.steps.push_back(std::move(step));
    }
    return out;
}

json k_report_to_json(const KMembershipReport& report) {
    json out{{"member", report.member}};
    if (report.member) {
        out["peel"] = peel_sequence_to_json(report.peel);
    } else if (report.violation) {
        if (report.violation->kind == KViolation::Kind::edge_in_three_triangles) {
            out["violation"] = json{{"edge_in_three_triangles", edge_to_json(report.violation->edge)}};
        } else {
            out["violation"] = json{{"no_removable_vertex", report.violation->stuck}};
        }
    }
    return out;
}

json strong_result_to_json(const StrongResult& result) {
    json out{{"strong", result.strong}};
    if (result.strong) {
        out["peel"] = peel_sequence_to_json(result.peel);
    } else {
        out["stuck"] = result.stuck;
    }
    return out;
}

json lozenge_string_to_json(const LozengeStringReport& report) {
    json out{{"is_string", report.is_string}};
    if (report.is_string) {
        json blocks = json::array();
        for (const auto& block : report.blocks) {
            blocks.push_back(json{
                {"kind", block.kind == LozengeStringBlock::Kind::lozenge ? "lozenge" : "path_edge"},
                {"vertices", block.vertices}});
        }
        out["blocks"] = std::move(blocks);
        out["lozenge_count"] = report.lozenge_count;
    }
    return out;
}

json amalgam_to_json(const AmalgamResult& result) {
    json collapsed = json::array();
    for (const auto& [b, c] : result.collapsed) collapsed.push_back(json::array({b, c}));
    return json{{"graph", graph_to_json(result.graph)},
                {"embed_b", result.embed_b},
                {"embed_c", result.embed_c},
                {"collapsed", std::move(collapsed)}};
}

GlueMap glue_from_json(const json& j) {
    const json* pairs = &j;
    if (j.is_object() && j.contains("pairs")) pairs = &j["pairs"];
    if (!pairs->is_array()) {
        throw Error(ErrorKind::parse, "glue: expected an array of [b_vertex, c_vertex] pairs");
    }
    GlueMap out;
    for (const auto& item : *pairs) out.push_back(pair_from_json(item, "glue pair"));
    return out;
}

json model_spec_to_json(const ModelSpec& spec) {
    json nodes = json::array(), edges = json::array();
    for (const auto& node : spec.nodes) {
        nodes.push_back(json{{"id", node.id}, {"level", node.level}});
    }
    for (const auto& e : spec.edges) {
        edges.push_back(json{{"u", e.u}, {"v", e.v}, {"attach_u", e.attach_u}, {"attach_v", e.attach_v}});
    }
    return json{{"nodes", std::move(nodes)}, {"edges", std::move(edges)}};
}

ModelSpec model_spec_from_json(const json& j) {
    ModelSpec out;
    if (!j.is_object() || !j.contains("nodes")) {
        throw Error(ErrorKind::parse, "model spec: expected {nodes, edges}");
    }
    for (const auto& item : j["nodes"]) {
        ModelSpec::Node node;
        if (!item.contains("id") || !item["id"].is_number_integer()) {
            throw Error(ErrorKind::parse, "model spec: node needs an integer id");
        }
        node.id = item["id"].get<std::int64_t>();
        node.level = require_uint(item.at("level"), "level");
        out.nodes.push_back(node);
    }
    if (j.contains("edges")) {
        for (const auto& item : j["edges"]) {
            ModelSpec::Attachment e;
            e.u = item.at("u").get<std::int64_t>();
            e.v = item.at("v").get<std::int64_t>();
            e.attach_u = require_uint(item.at("attach_u"), "attach_u");
            e.attach_v = require_uint(item.at("attach_v"), "attach_v");
            out.edges.push_back(e);
        }
    }
    return out;
}

json tree_model_to_json(const TreeModel& model) {
    json identified = json::array();
    for (const auto& id : model.identified) {
        identified.push_back(json{{"node_u", id.node_u},
                                  {"orig_u", id.orig_u},
                                  {"node_v", id.node_v},
                                  {"orig_v", id.orig_v}});
    }
    return json{{"graph", graph_to_json(model.graph)},
                {"copy_of", model.copy_of},
                {"original_id", model.original_id},
                {"identified", std::move(identified)}};
}

json generic_result_to_json(const GenericResult& result) {
    json log = json::array();
    for (const auto& step : result.log) {
        json entry{{"vertex", step.vertex}};
        switch (step.kind) {
            case ExtensionStep::Kind::isolated:
                entry["kind"] = "isolated";
                break;
            case ExtensionStep::Kind::pendant:
                entry["kind"] = "pendant";
                entry["attach"] = step.attach_a;
                break;
            case ExtensionStep::Kind::apex:
                entry["kind"] = "apex";
                entry["edge"] = json::array({step.attach_a, step.attach_b});
                break;
        }
        log.push_back(std::move(entry));
    }
    return json{{"graph", graph_to_json(result.graph)}, {"log", std::move(log)}};
}

json compliance_to_json(const TComplianceReport& report) {
    json violating = json::array();
    for (const Edge& e : report.edges_violating) violating.push_back(edge_to_json(e));
    return json{{"edges_two_triangles", report.edges_two_triangles},
                {"edges_one_triangle", report.edges_one_triangle},
                {"edges_zero_triangles", report.edges_zero_triangles},
                {"edges_violating", std::move(violating)},
                {"k_member", report.k_member}};
}

json block_tree_to_json(const BlockTree& t) {
    json classes = json::array();
    for (const auto& block : t.classes) {
        json edges = json::array();
        for (const Edge& e : block) edges.push_back(edge_to_json(e));
        classes.push_back(std::move(edges));
    }
    json incidence = json::array();
    for (const auto& [v, c] : t.incidence) incidence.push_back(json::array({v, c}));
    return json{{"vertex_count", t.vertex_count},
                {"classes", std::move(classes)},
                {"incidence", std::move(incidence)}};
}

BlockTree block_tree_from_json(const json& j) {
    BlockTree out;
    out.vertex_count = require_uint(j.at("vertex_count"), "vertex_count");
    for (const auto& block : j.at("classes")) {
        std::vector<Edge> edges;
        for (const auto& item : block) {
            auto [a, b] = pair_from_json(item, "class edge");
            edges.emplace_back(a, b);
        }
        out.classes.push_back(std::move(edges));
    }
    for (const auto& item : j.at("incidence")) {
        auto [v, c] = pair_from_json(item, "incidence");
        out.incidence.emplace_back(v, c);
    }
    return out;
}

json hull_to_json(const HullResult& hull) {
    return json{{"tree_nodes", hull.tree_nodes}, {"vertex_set", hull.vertex_set}};
}

json catalog_to_json(const CycleCatalog& catalog) {
    json types = json::array();
    for (const auto& type : catalog.types()) {
        json edges = json::array();
        for (const Edge& e : type.graph.edges()) edges.push_back(edge_to_json(e));
        types.push_back(json{{"name", type.name},
                             {"span", type.span},
                             {"vertex_count", type.graph.vertex_count()},
                             {"edges", std::move(edges)},
                             {"removable_pair",
                              json::array({type.removable_pair.first, type.removable_pair.second})},
                             {"code", type.code.hex()}});
    }
    return json{{"max_vertices", catalog.max_vertices()},
                {"level", catalog.level()},
                {"types", std::move(types)}};
}

CycleCatalog catalog_from_json(const json& j) {
    std::vector<CycleType> types;
    for (const auto& item : j.at("types")) {
        CycleType type;
        type.name = item.at("name").get<std::string>();
        type.span = require_uint(item.at("span"), "span");
        auto n = require_uint(item.at("vertex_count"), "vertex_count");
        std::vector<std::pair<VertexId, VertexId>> edges;
        for (const auto& e : item.at("edges")) edges.push_back(pair_from_json(e, "edge"));
        type.graph = Graph(n, edges);
        auto [r1, r2] = pair_from_json(item.at("removable_pair"), "removable_pair");
        type.removable_pair = {r1, r2};
        std::array<VertexId, 2> fwd{r1, r2}, rev{r2, r1};
        type.code = std::min(canonical_form(type.graph, fwd), canonical_form(type.graph, rev));
        types.push_back(std::move(type));
    }
    return catalog_from_types(std::move(types), require_uint(j.at("max_vertices"), "max_vertices"),
                              require_uint(j.at("level"), "level"));
}

json pdelta_witness_to_json(const PDeltaWitness& witness) {
    json links = json::array();
    for (const auto& link : witness.links) links.push_back(json{{"copy", link.copy}});
    return json{{"connecting_points", witness.connecting_points}, {"links", std::move(links)}};
}

json level_embedding_to_json(const LevelEmbedding& embedding) {
    return json{{"pins", json::array({embedding[0], embedding[1], embedding[2]})},
                {"extension", std::vector<VertexId>(embedding.begin() + 3, embedding.end())}};
}

json y_witness_to_json(const YWitness& witness) {
    return json{{"witnesses", json::array({witness.x_prime, witness.y_prime, witness.z_prime})},
                {"copy", witness.copy},
                {"link_x", pdelta_witness_to_json(witness.link_x)},
                {"link_y", pdelta_witness_to_json(witness.link_y)},
                {"link_z", pdelta_witness_to_json(witness.link_z)}};
}

json delta_to_json(const DeltaSequence& delta, const CycleCatalog& catalog) {
    json out = json::array();
    for (auto idx : delta) out.push_back(catalog.at(idx).name);
    return out;
}

DeltaSequence delta_from_json(const json& j, const CycleCatalog& catalog) {
    if (!j.is_array()) {
        throw Error(ErrorKind::parse, "delta: expected an array of type names");
    }
    DeltaSequence out;
    for (const auto& item : j) {
        auto idx = catalog.find_by_name(item.get<std::string>());
        if (!idx) {
            throw Error(ErrorKind::parse,
                        "delta: unknown cycle type " + item.get<std::string>());
        }
        out.push_back(*idx);
    }
    return out;
}

json fingerprint_to_json(const QfFingerprint& fp, const CycleCatalog& catalog) {
    json deltas = json::array();
    for (std::size_t i = 0; i < fp.delta_atoms.size(); ++i) {
        json satisfied = json::array();
        for (const auto& delta : fp.delta_atoms[i]) satisfied.push_back(delta_to_json(delta, catalog));
        deltas.push_back(json{{"param_index", i}, {"satisfied", std::move(satisfied)}});
    }
    json epsilons = json::array();
    const std::size_t width = fp.over.size();
    for (std::size_t i = 0; i < width; ++i) {
        for (std::size_t k = 0; k < width; ++k) {
            const auto& atoms = fp.epsilon_atoms[i * width + k];
            json satisfied = json::array();
            for (const auto& atom : atoms) {
                satisfied.push_back(json{{"d1", delta_to_json(atom.d1, catalog)},
                                         {"d2", delta_to_json(atom.d2, catalog)},
                                         {"d3", delta_to_json(atom.d3, catalog)},
                                         {"level", atom.level}});
            }
            epsilons.push_back(json{{"i", i}, {"j", k}, {"satisfied", std::move(satisfied)}});
        }
    }
    return json{{"over", fp.over},
                {"subject", fp.subject},
                {"bounds",
                 json{{"max_cycle_size", fp.bounds.max_cycle_size},
                      {"max_delta_len", fp.bounds.max_delta_len},
                      {"max_eps_total", fp.bounds.max_eps_total},
                      {"max_level", fp.bounds.max_level}}},
                {"adjacency", fp.adjacency},
                {"equality", fp.equality},
                {"pdelta", std::move(deltas)},
                {"y", std::move(epsilons)}};
}

json embeds_result_to_json(const EmbedsResult& result) {
    json out{{"verdict",
              result.verdict == EmbedsResult::Verdict::consistent ? "consistent" : "refuted"}};
    switch (result.reason) {
        case EmbedsResult::Reason::none:
            break;
        case EmbedsResult::Reason::corpus_witness:
            out["reason"] = "corpus_witness";
            out["witness_index"] = result.witness_index;
            break;
        case EmbedsResult::Reason::length_law:
            out["reason"] = "length_law";
            break;
    }
    return out;
}

json partial_automorphism_to_json(const PartialAutomorphism& pa) {
    json map = json::array();
    for (VertexId v = 0; v < pa.map.size(); ++v) {
        if (pa.map[v] != kNoImage) map.push_back(json::array({v, pa.map[v]}));
    }
    json frontier = json::array();
    for (const Edge& e : pa.frontier) frontier.push_back(edge_to_json(e));
    return json{{"map", std::move(map)},
                {"frontier", std::move(frontier)},
                {"complete", pa.complete()}};
}

std::vector<CorpusEntry> corpus_from_json(const json& j) {
    if (!j.is_array()) {
        throw Error(ErrorKind::parse, "corpus: expected an array");
    }
    std::vector<CorpusEntry> out;
    for (const auto& item : j) {
        CorpusEntry entry;
        entry.graph = graph_from_json(item.at("graph"));
        entry.x = require_uint(item.at("x"), "x");
        entry.y = require_uint(item.at("y"), "y");
        out.push_back(std::move(entry));
    }
    return out;
}

namespace {

void write_attrs(std::ostringstream& out, const AttrMap& attrs) {
    if (attrs.empty()) return;
    out << " [";
    bool first = true;
    for (const auto& [key, value] : attrs) {
        if (!first) out << ", ";
        first = false;
        out << key << "=\"" << value << "\"";
    }
    out << "]";
}

}  // namespace

std::string to_dot(const Graph& g, const std::map<VertexId, AttrMap>& vertex_attrs,
                   const std::map<Edge, AttrMap>& edge_attrs) {
    std::ostringstream out;
    out << "graph G {\n";
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        out << "  " << v;
        auto it = vertex_attrs.find(v);
        if (it != vertex_attrs.end()) write_attrs(out, it->second);
        out << ";\n";
    }
    for (const Edge& e : g.edges()) {
        out << "  " << e.u << " -- " << e.v;
        auto it = edge_attrs.find(e);
        if (it != edge_attrs.end()) write_attrs(out, it->second);
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

std::string to_dot(const ColoredFarey& f) {
    std::map<Edge, AttrMap> edge_attrs;
    for (const Edge& e : f.graph().edges()) {
        edge_attrs[e]["color"] = f.color(e.u, e.v) == EdgeColor::black ? "black" : "blue";
    }
    return to_dot(f.graph(), {}, edge_attrs);
}

std::string to_dot(const BlockTree& t) {
    std::ostringstream out;
    out << "graph Gtree {\n";
    for (VertexId v = 0; v < t.vertex_count; ++v) {
        out << "  v" << v << " [shape=circle, label=\"" << v << "\"];\n";
    }
    for (std::size_t c = 0; c < t.classes.size(); ++c) {
        out << "  c" << c << " [shape=box, label=\"E" << c << "\"];\n";
    }
    for (const auto& [v, c] : t.incidence) {
        out << "  v" << v << " -- c" << c << ";\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace farey
