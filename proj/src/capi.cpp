#include "farey.h"

#include <cstdlib>
#include <cstring>
#include <optional>

#include "farey/json_io.hpp"

using namespace farey;

struct farey_graph {
    Graph graph;
    std::optional<ColoredFarey> colored;
};

struct farey_catalog {
    CycleCatalog catalog;
};

namespace {

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out != nullptr) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void set_error(char** error, const std::string& message) {
    if (error != nullptr) *error = dup_string(message);
}

char* emit(json j) {
    j["schema"] = kSchemaVersion;
    return dup_string(j.dump(2));
}

farey_status status_of(const Error& e) {
    switch (e.kind()) {
        case ErrorKind::parse:
            return FAREY_ERR_PARSE;
        case ErrorKind::limit:
            return FAREY_ERR_LIMIT;
        case ErrorKind::invalid_argument:
        default:
            return FAREY_ERR_INVALID;
    }
}

template <typename Fn>
farey_status guarded(char** error, Fn&& fn) {
    try {
        return fn();
    } catch (const Error& e) {
        set_error(error, e.what());
        return status_of(e);
    } catch (const std::exception& e) {
        set_error(error, e.what());
        return FAREY_ERR_INVALID;
    }
}

std::vector<VertexId> to_vector(const uint32_t* data, size_t len) {
    if (data == nullptr && len > 0) {
        throw Error(ErrorKind::invalid_argument, "null vertex array");
    }
    return std::vector<VertexId>(data, data + len);
}

const Graph& graph_of(const farey_graph* g) {
    if (g == nullptr) {
        throw Error(ErrorKind::invalid_argument, "null graph handle");
    }
    return g->graph;
}

const CycleCatalog& catalog_of(const farey_catalog* c) {
    if (c == nullptr) {
        throw Error(ErrorKind::invalid_argument, "null catalog handle");
    }
    return c->catalog;
}

json parse_arg(const char* text, const char* what) {
    if (text == nullptr) {
        throw Error(ErrorKind::invalid_argument, std::string("null ") + what);
    }
    return parse_json_text(text);
}

}  // namespace

extern "C" {

const char* farey_schema_version(void) { return kSchemaVersion; }

void farey_string_free(char* s) { std::free(s); }
void farey_graph_free(farey_graph* g) { delete g; }
void farey_catalog_free(farey_catalog* c) { delete c; }

farey_status farey_graph_from_json(const char* text, farey_graph** out, char** error) {
    return guarded(error, [&] {
        auto parsed = graph_from_json(parse_arg(text, "graph JSON"));
        *out = new farey_graph{std::move(parsed), std::nullopt};
        return FAREY_OK;
    });
}

farey_status farey_build_level(uint32_t level, farey_graph** out, char** error) {
    return guarded(error, [&] {
        auto colored = build_level(level);
        auto graph = colored.graph();
        *out = new farey_graph{std::move(graph), std::move(colored)};
        return FAREY_OK;
    });
}

farey_status farey_union_limit_view(const farey_graph* g, uint32_t m, farey_graph** out,
                                    char** error) {
    return guarded(error, [&] {
        if (g == nullptr || !g->colored) {
            throw Error(ErrorKind::invalid_argument,
                        "union_limit_view needs a graph built by farey_build_level");
        }
        auto view = union_limit_view(*g->colored, m);
        auto graph = view.graph();
        *out = new farey_graph{std::move(graph), std::move(view)};
        return FAREY_OK;
    });
}

char* farey_graph_to_json(const farey_graph* g) {
    if (g == nullptr) return nullptr;
    return emit(g->colored ? colored_farey_to_json(*g->colored) : graph_to_json(g->graph));
}

char* farey_graph_to_dot(const farey_graph* g) {
    if (g == nullptr) return nullptr;
    return dup_string(g->colored ? to_dot(*g->colored) : to_dot(g->graph));
}

uint32_t farey_graph_vertex_count(const farey_graph* g) {
    return g == nullptr ? 0 : g->graph.vertex_count();
}

uint64_t farey_graph_edge_count(const farey_graph* g) {
    return g == nullptr ? 0 : g->graph.edge_count();
}

farey_status farey_level_counts(uint32_t level, char** out_json, char** error) {
    return guarded(error, [&] {
        auto counts = level_counts(level);
        *out_json = emit(json{{"level", level},
                              {"vertices", counts.vertices},
                              {"edges", counts.edges},
                              {"blue_edges", counts.blue_edges}});
        return FAREY_OK;
    });
}

farey_status farey_geodesics(const farey_graph* g, uint32_t x, uint32_t y, char** out_json,
                             char** error) {
    return guarded(error, [&] {
        auto result = geodesics(graph_of(g), x, y);
        json paths = json::array();
        for (const Path& p : result.paths) paths.push_back(p.vertices);
        *out_json = emit(json{{"reachable", result.reachable}, {"paths", std::move(paths)}});
        return FAREY_OK;
    });
}

farey_status farey_cycles_through_edge(const farey_graph* g, uint32_t u, uint32_t v,
                                       uint32_t max_len, char** out_json, char** error) {
    return guarded(error, [&] {
        auto cycles = simple_cycles_through_edge(graph_of(g), u, v, max_len);
        json out = json::array();
        for (const Cycle& c : cycles) out.push_back(c.vertices);
        *out_json = emit(json{{"count", cycles.size()}, {"cycles", std::move(out)}});
        return FAREY_OK;
    });
}

farey_status farey_check_k(const farey_graph* g, char** report_json, char** error) {
    return guarded(error, [&] {
        auto report = is_in_K(graph_of(g));
        *report_json = emit(k_report_to_json(report));
        return report.member ? FAREY_OK : FAREY_CHECK_NEGATIVE;
    });
}

farey_status farey_peel(const farey_graph* g, const uint32_t* base, size_t base_len,
                        char** result_json, char** error) {
    return guarded(error, [&] {
        auto result = is_strong(to_vector(base, base_len), graph_of(g));
        *result_json = emit(strong_result_to_json(result));
        return result.strong ? FAREY_OK : FAREY_CHECK_NEGATIVE;
    });
}

farey_status farey_removable(const farey_graph* g, const uint32_t* protected_set,
                             size_t protected_len, char** out_json, char** error) {
    return guarded(error, [&] {
        auto removable = removable_vertices(graph_of(g), to_vector(protected_set, protected_len));
        *out_json = emit(json{{"removable", removable}});
        return FAREY_OK;
    });
}

farey_status farey_string_of_lozenges(const farey_graph* g, char** report_json, char** error) {
    return guarded(error, [&] {
        auto report = is_string_of_lozenges(graph_of(g));
        *report_json = emit(lozenge_string_to_json(report));
        return report.is_string ? FAREY_OK : FAREY_CHECK_NEGATIVE;
    });
}

farey_status farey_brute_force_k(const farey_graph* g, int* out_member, char** error) {
    return guarded(error, [&] {
        *out_member = brute_force_K_check(graph_of(g)) ? 1 : 0;
        return FAREY_OK;
    });
}

farey_status farey_free_amalgam(const farey_graph* b, const farey_graph* c,
                                const char* glue_json, char** result_json, char** error) {
    return guarded(error, [&] {
        auto glue = glue_from_json(parse_arg(glue_json, "glue JSON"));
        auto result = free_amalgam(graph_of(b), graph_of(c), glue);
        *result_json = emit(amalgam_to_json(result));
        return FAREY_OK;
    });
}

farey_status farey_amalgamate(const farey_graph* b, const farey_graph* c,
                              const char* glue_json, char** result_json, char** error) {
    return guarded(error, [&] {
        auto glue = glue_from_json(parse_arg(glue_json, "glue JSON"));
        auto result = amalgamate_in_K(graph_of(b), graph_of(c), glue);
        *result_json = emit(amalgam_to_json(result));
        return FAREY_OK;
    });
}

farey_status farey_tree_model(const char* spec_json, farey_graph** out, char** model_json,
                              char** error) {
    return guarded(error, [&] {
        auto spec = model_spec_from_json(parse_arg(spec_json, "model spec"));
        auto model = build_tree_model(spec);
        if (model_json != nullptr) *model_json = emit(tree_model_to_json(model));
        *out = new farey_graph{std::move(model.graph), std::nullopt};
        return FAREY_OK;
    });
}

farey_status farey_generic(uint64_t seed, uint32_t steps, farey_graph** out, char** log_json,
                           char** error) {
    return guarded(error, [&] {
        auto result = build_generic(seed, steps);
        if (log_json != nullptr) *log_json = emit(generic_result_to_json(result));
        *out = new farey_graph{std::move(result.graph), std::nullopt};
        return FAREY_OK;
    });
}

farey_status farey_compliance(const farey_graph* g, char** report_json, char** error) {
    return guarded(error, [&] {
        auto report = t_compliance(graph_of(g));
        *report_json = emit(compliance_to_json(report));
        return report.edges_violating.empty() && report.k_member ? FAREY_OK
                                                                 : FAREY_CHECK_NEGATIVE;
    });
}

farey_status farey_blocks(const farey_graph* g, char** blocktree_json, char** error) {
    return guarded(error, [&] {
        *blocktree_json = emit(block_tree_to_json(build_g_tree(graph_of(g))));
        return FAREY_OK;
    });
}

farey_status farey_blocks_to_dot(const farey_graph* g, char** dot, char** error) {
    return guarded(error, [&] {
        *dot = dup_string(to_dot(build_g_tree(graph_of(g))));
        return FAREY_OK;
    });
}

farey_status farey_acl(const farey_graph* g, const uint32_t* a, size_t a_len, char** out_json,
                       char** error) {
    return guarded(error, [&] {
        auto closure = acl(graph_of(g), to_vector(a, a_len));
        *out_json = emit(json{{"acl", closure}});
        return FAREY_OK;
    });
}

farey_status farey_gate(const farey_graph* g, uint32_t x, const uint32_t* b, size_t b_len,
                        char** out_json, char** error) {
    return guarded(error, [&] {
        auto result = gate(graph_of(g), x, to_vector(b, b_len));
        json out;
        if (result.in_hull) {
            out = json{{"in_hull", true}};
        } else {
            out = json{{"in_hull", false}, {"gate", result.gate}};
        }
        *out_json = emit(std::move(out));
        return FAREY_OK;
    });
}

farey_status farey_independent(const farey_graph* g, const uint32_t* b, size_t b_len,
                               const uint32_t* a, size_t a_len, const uint32_t* c,
                               size_t c_len, char** out_json, char** error) {
    return guarded(error, [&] {
        auto witness = independence_witness(graph_of(g), to_vector(b, b_len),
                                            to_vector(a, a_len), to_vector(c, c_len));
        if (!witness) {
            *out_json = emit(json{{"independent", true}});
            return FAREY_OK;
        }
        *out_json = emit(json{{"independent", false}, {"witness_path", witness->vertices}});
        return FAREY_CHECK_NEGATIVE;
    });
}

farey_status farey_catalog_build(uint32_t max_vertices, uint32_t level, farey_catalog** out,
                                 char** error) {
    return guarded(error, [&] {
        *out = new farey_catalog{enumerate_cycle_types(max_vertices, level)};
        return FAREY_OK;
    });
}

farey_status farey_catalog_from_json(const char* text, farey_catalog** out, char** error) {
    return guarded(error, [&] {
        *out = new farey_catalog{catalog_from_json(parse_arg(text, "catalog JSON"))};
        return FAREY_OK;
    });
}

char* farey_catalog_to_json(const farey_catalog* c) {
    if (c == nullptr) return nullptr;
    return emit(catalog_to_json(c->catalog));
}

farey_status farey_eval_pc(const farey_graph* g, const farey_catalog* cat,
                           const char* type_name, uint32_t x, uint32_t y, char** out_json,
                           char** error) {
    return guarded(error, [&] {
        const auto& catalog = catalog_of(cat);
        if (type_name == nullptr) {
            throw Error(ErrorKind::invalid_argument, "null type name");
        }
        auto idx = catalog.find_by_name(type_name);
        if (!idx) {
            throw Error(ErrorKind::invalid_argument,
                        std::string("unknown cycle type ") + type_name);
        }
        json query{{"pred", "pc"}, {"type", catalog.at(*idx).name}, {"x", x}, {"y", y}};
        auto witness = eval_P_C(graph_of(g), catalog, *idx, x, y);
        if (witness) {
            *out_json = emit(json{{"holds", true}, {"copy", witness->copy},
                                  {"query", std::move(query)}});
            return FAREY_OK;
        }
        *out_json = emit(json{{"holds", false}, {"query", std::move(query)}});
        return FAREY_CHECK_NEGATIVE;
    });
}

farey_status farey_eval_pdelta(const farey_graph* g, const farey_catalog* cat,
                               const char* delta_json, uint32_t x, uint32_t y,
                               char** out_json, char** error) {
    return guarded(error, [&] {
        const auto& catalog = catalog_of(cat);
        auto delta = delta_from_json(parse_arg(delta_json, "delta JSON"), catalog);
        json query{{"pred", "pdelta"}, {"delta", delta_to_json(delta, catalog)}, {"x", x},
                   {"y", y}};
        auto witness = eval_P_delta(graph_of(g), catalog, delta, x, y);
        if (witness) {
            json out = pdelta_witness_to_json(*witness);
            out["holds"] = true;
            out["query"] = std::move(query);
            *out_json = emit(std::move(out));
            return FAREY_OK;
        }
        *out_json = emit(json{{"holds", false}, {"query", std::move(query)}});
        return FAREY_CHECK_NEGATIVE;
    });
}

farey_status farey_eval_d(const farey_graph* g, uint32_t level, uint32_t x, uint32_t y,
                          uint32_t z, char** out_json, char** error) {
    return guarded(error, [&] {
        auto maps = eval_D(graph_of(g), level, x, y, z);
        json extensions = json::array();
        for (const auto& m : maps) extensions.push_back(level_embedding_to_json(m));
        *out_json = emit(json{{"holds", !maps.empty()},
                              {"extensions", std::move(extensions)},
                              {"query",
                               json{{"pred", "d"}, {"level", level}, {"x", x}, {"y", y}, {"z", z}}}});
        return maps.empty() ? FAREY_CHECK_NEGATIVE : FAREY_OK;
    });
}

farey_status farey_eval_y(const farey_graph* g, const farey_catalog* cat,
                          const char* eps_json, uint32_t x, uint32_t y, uint32_t z,
                          char** out_json, char** error) {
    return guarded(error, [&] {
        const auto& catalog = catalog_of(cat);
        auto spec = parse_arg(eps_json, "epsilon JSON");
        EpsilonDescriptor eps;
        eps.d1 = delta_from_json(spec.at("d1"), catalog);
        eps.d2 = delta_from_json(spec.at("d2"), catalog);
        eps.d3 = delta_from_json(spec.at("d3"), catalog);
        eps.level = spec.at("level").get<std::uint32_t>();
        json query{{"pred", "y"},
                   {"d1", delta_to_json(eps.d1, catalog)},
                   {"d2", delta_to_json(eps.d2, catalog)},
                   {"d3", delta_to_json(eps.d3, catalog)},
                   {"level", eps.level},
                   {"x", x},
                   {"y", y},
                   {"z", z}};
        auto witness = eval_Y(graph_of(g), catalog, eps, x, y, z);
        if (witness) {
            json out = y_witness_to_json(*witness);
            out["holds"] = true;
            out["query"] = std::move(query);
            *out_json = emit(std::move(out));
            return FAREY_OK;
        }
        *out_json = emit(json{{"holds", false}, {"query", std::move(query)}});
        return FAREY_CHECK_NEGATIVE;
    });
}

farey_status farey_fingerprint(const farey_graph* g, const farey_catalog* cat,
                               const uint32_t* tuple, size_t tuple_len, uint32_t subject,
                               const char* bounds_json, char** out_json, char** error) {
    return guarded(error, [&] {
        const auto& catalog = catalog_of(cat);
        FingerprintBounds bounds;
        if (bounds_json != nullptr) {
            auto spec = parse_json_text(bounds_json);
            if (spec.contains("max_cycle_size")) bounds.max_cycle_size = spec["max_cycle_size"];
            if (spec.contains("max_delta_len")) bounds.max_delta_len = spec["max_delta_len"];
            if (spec.contains("max_eps_total")) bounds.max_eps_total = spec["max_eps_total"];
            if (spec.contains("max_level")) bounds.max_level = spec["max_level"];
        }
        auto fp = qf_fingerprint(graph_of(g), catalog, to_vector(tuple, tuple_len), subject,
                                 bounds);
        *out_json = emit(fingerprint_to_json(fp, catalog));
        return FAREY_OK;
    });
}

farey_status farey_count_solutions(const farey_graph* g, const farey_catalog* cat,
                                   const char* query_json, char** out_json, char** error) {
    return guarded(error, [&] {
        const auto& catalog = catalog_of(cat);
        auto spec = parse_arg(query_json, "query JSON");
        std::vector<QueryAtom> atoms;
        for (const auto& item : spec.at("atoms")) {
            QueryAtom atom;
            auto kind = item.at("kind").get<std::string>();
            if (kind == "pc") {
                atom.kind = QueryAtom::Kind::p_c;
                auto idx = catalog.find_by_name(item.at("type").get<std::string>());
                if (!idx) {
                    throw Error(ErrorKind::invalid_argument, "unknown cycle type in query");
                }
                atom.delta = {*idx};
            } else if (kind == "pdelta") {
                atom.kind = QueryAtom::Kind::p_delta;
                atom.delta = delta_from_json(item.at("delta"), catalog);
            } else {
                throw Error(ErrorKind::parse, "query atom kind must be pc or pdelta");
            }
            atom.param = item.at("param").get<std::uint32_t>();
            atoms.push_back(std::move(atom));
        }
        auto solutions = solve_query(graph_of(g), catalog, atoms);
        *out_json = emit(json{{"count", solutions.size()}, {"solutions", solutions}});
        return FAREY_OK;
    });
}

farey_status farey_embeds_bounded(const farey_catalog* cat, const char* dprime_json,
                                  const char* d_json, const char* corpus_json,
                                  char** out_json, char** error) {
    return guarded(error, [&] {
        const auto& catalog = catalog_of(cat);
        auto d_prime = delta_from_json(parse_arg(dprime_json, "d' JSON"), catalog);
        auto d = delta_from_json(parse_arg(d_json, "d JSON"), catalog);
        auto corpus = corpus_from_json(parse_arg(corpus_json, "corpus JSON"));
        auto result = embeds_bounded(catalog, d_prime, d, corpus);
        *out_json = emit(embeds_result_to_json(result));
        return result.verdict == EmbedsResult::Verdict::consistent ? FAREY_OK
                                                                   : FAREY_CHECK_NEGATIVE;
    });
}

farey_status farey_extend_triangle_map(const farey_graph* g, const uint32_t* source3,
                                       const uint32_t* target3, char** out_json,
                                       char** error) {
    return guarded(error, [&] {
        if (source3 == nullptr || target3 == nullptr) {
            throw Error(ErrorKind::invalid_argument, "null triangle");
        }
        std::array<VertexId, 3> src{source3[0], source3[1], source3[2]};
        std::array<VertexId, 3> tgt{target3[0], target3[1], target3[2]};
        auto result = extend_triangle_map(graph_of(g), src, tgt);
        if (result) {
            *out_json = emit(partial_automorphism_to_json(*result));
            return FAREY_OK;
        }
        *out_json = emit(json{{"conflict", true}});
        return FAREY_CHECK_NEGATIVE;
    });
}

}  // extern "C"
