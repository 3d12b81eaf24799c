// Command-line front end. Links only the C API; every verb is a thin
// wrapper over one library call.

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "farey.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;

struct CliError {
    int code;
    std::string message;
};

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw CliError{kExitUsage, "cannot open " + path};
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        if (text.empty() || text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw CliError{kExitUsage, "cannot open " + path + " for writing"};
    }
    out << text;
    if (text.empty() || text.back() != '\n') out << '\n';
}

// RAII wrappers over the C handles.
struct GraphHandle {
    farey_graph* ptr = nullptr;
    ~GraphHandle() { farey_graph_free(ptr); }
};

struct CatalogHandle {
    farey_catalog* ptr = nullptr;
    ~CatalogHandle() { farey_catalog_free(ptr); }
};

struct OwnedString {
    char* ptr = nullptr;
    ~OwnedString() { farey_string_free(ptr); }
    std::string str() const { return ptr == nullptr ? std::string() : std::string(ptr); }
};

[[noreturn]] void fail(farey_status status, const OwnedString& error) {
    std::string message = error.ptr != nullptr ? error.ptr : "operation failed";
    int code = status == FAREY_CHECK_NEGATIVE ? kExitNegative : kExitUsage;
    throw CliError{code, message};
}

void check(farey_status status, const OwnedString& error) {
    if (status != FAREY_OK && status != FAREY_CHECK_NEGATIVE) fail(status, error);
}

GraphHandle load_graph(const std::string& path) {
    GraphHandle g;
    OwnedString error;
    auto text = read_input(path);
    check(farey_graph_from_json(text.c_str(), &g.ptr, &error.ptr), error);
    return g;
}

std::vector<std::uint32_t> parse_vertex_list(const std::string& text) {
    std::vector<std::uint32_t> out;
    if (text.empty()) return out;
    std::stringstream stream(text);
    std::string item;
    while (std::getline(stream, item, ',')) {
        try {
            out.push_back(static_cast<std::uint32_t>(std::stoul(item)));
        } catch (const std::exception&) {
            throw CliError{kExitUsage, "bad vertex list entry: " + item};
        }
    }
    return out;
}

// "lozenge,c3_0" -> ["lozenge","c3_0"]
std::string delta_json_of(const std::string& names) {
    std::string out = "[";
    if (!names.empty()) {
        std::stringstream stream(names);
        std::string item;
        bool first = true;
        while (std::getline(stream, item, ',')) {
            if (!first) out += ",";
            first = false;
            out += "\"" + item + "\"";
        }
    }
    out += "]";
    return out;
}

struct CatalogOptions {
    std::string path;
    std::uint32_t max_vertices = 8;
    std::uint32_t level = 0;
};

CatalogHandle load_catalog(const CatalogOptions& options) {
    CatalogHandle catalog;
    OwnedString error;
    std::string path = options.path;
    if (path.empty()) {
        const char* env = std::getenv("FAREY_LAB_CACHE");
        if (env != nullptr) path = env;
    }
    if (!path.empty()) {
        std::ifstream probe(path);
        if (probe) {
            std::ostringstream buffer;
            buffer << probe.rdbuf();
            check(farey_catalog_from_json(buffer.str().c_str(), &catalog.ptr, &error.ptr), error);
            return catalog;
        }
    }
    check(farey_catalog_build(options.max_vertices, options.level, &catalog.ptr, &error.ptr),
          error);
    if (!path.empty()) {
        OwnedString text{farey_catalog_to_json(catalog.ptr)};
        std::ofstream out(path, std::ios::binary);
        if (out) out << text.str() << '\n';
    }
    return catalog;
}

int run(int argc, char** argv) {
    CLI::App app{"Farey graph laboratory"};
    app.require_subcommand(1);
    app.fallthrough();
    int exit_code = kExitOk;

    std::string output_path;
    app.add_option("-o,--output", output_path, "Output file (default: stdout)");

    // ---- build ----
    auto* build = app.add_subcommand("build", "Build the level-n Farey graph");
    std::uint32_t build_level_arg = 1;
    std::string build_format = "json";
    build->add_option("--level", build_level_arg, "Level n >= 1")->required();
    build->add_option("--format", build_format, "json or dot")
        ->check(CLI::IsMember({"json", "dot"}));
    build->callback([&] {
        GraphHandle g;
        OwnedString error;
        check(farey_build_level(build_level_arg, &g.ptr, &error.ptr), error);
        OwnedString text{build_format == "dot" ? farey_graph_to_dot(g.ptr)
                                               : farey_graph_to_json(g.ptr)};
        write_output(output_path, text.str());
    });

    // ---- counts ----
    auto* counts = app.add_subcommand("counts", "Closed-form level counts");
    std::uint32_t counts_level = 1;
    counts->add_option("--level", counts_level, "Level n >= 1")->required();
    counts->callback([&] {
        OwnedString out, error;
        check(farey_level_counts(counts_level, &out.ptr, &error.ptr), error);
        write_output(output_path, out.str());
    });

    // ---- check-k ----
    auto* check_k = app.add_subcommand("check-k", "Class membership check");
    std::string check_input;
    check_k->add_option("--input", check_input, "Graph JSON file")->required();
    check_k->callback([&] {
        auto g = load_graph(check_input);
        OwnedString out, error;
        auto status = farey_check_k(g.ptr, &out.ptr, &error.ptr);
        check(status, error);
        write_output(output_path, out.str());
        if (status == FAREY_CHECK_NEGATIVE) exit_code = kExitNegative;
    });

    // ---- peel / strong ----
    for (const char* name : {"peel", "strong"}) {
        auto* sub = app.add_subcommand(
            name, std::string(name) == "peel" ? "Greedy peel down to a base set"
                                              : "Strong-subset test by peeling");
        auto input = std::make_shared<std::string>();
        auto base = std::make_shared<std::string>();
        sub->add_option("--input", *input, "Graph JSON file")->required();
        auto* base_opt = sub->add_option("--base", *base, "Comma-separated base vertices");
        if (std::string(name) == "strong") base_opt->required();
        sub->callback([&, input, base] {
            auto g = load_graph(*input);
            auto base_vertices = parse_vertex_list(*base);
            OwnedString out, error;
            auto status = farey_peel(g.ptr, base_vertices.data(), base_vertices.size(),
                                     &out.ptr, &error.ptr);
            check(status, error);
            write_output(output_path, out.str());
            if (status == FAREY_CHECK_NEGATIVE) exit_code = kExitNegative;
        });
    }

    // ---- amalgamate ----
    auto* amalg = app.add_subcommand("amalgamate", "Amalgamate two class members over A");
    std::string amalg_b, amalg_c, amalg_glue;
    bool amalg_free = false;
    amalg->add_option("--b", amalg_b, "Factor B graph JSON")->required();
    amalg->add_option("--c", amalg_c, "Factor C graph JSON")->required();
    amalg->add_option("--glue", amalg_glue, "Glue JSON ([[b,c],...] pairs)")->required();
    amalg->add_flag("--free", amalg_free, "Free amalgam (no collapse logic)");
    amalg->callback([&] {
        auto b = load_graph(amalg_b);
        auto c = load_graph(amalg_c);
        auto glue = read_input(amalg_glue);
        OwnedString out, error;
        auto status = amalg_free
                          ? farey_free_amalgam(b.ptr, c.ptr, glue.c_str(), &out.ptr, &error.ptr)
                          : farey_amalgamate(b.ptr, c.ptr, glue.c_str(), &out.ptr, &error.ptr);
        check(status, error);
        write_output(output_path, out.str());
    });

    // ---- tree-model ----
    auto* tree = app.add_subcommand("tree-model", "Build a tree-of-Fareys model");
    std::string tree_spec;
    tree->add_option("--spec", tree_spec, "Model spec JSON file")->required();
    tree->callback([&] {
        auto spec = read_input(tree_spec);
        GraphHandle g;
        OwnedString out, error;
        check(farey_tree_model(spec.c_str(), &g.ptr, &out.ptr, &error.ptr), error);
        write_output(output_path, out.str());
    });

    // ---- generic ----
    auto* generic = app.add_subcommand("generic", "Random strong one-point extensions");
    std::uint64_t generic_seed = 0;
    std::uint32_t generic_steps = 0;
    generic->add_option("--seed", generic_seed, "RNG seed");
    generic->add_option("--steps", generic_steps, "Number of extensions")->required();
    generic->callback([&] {
        GraphHandle g;
        OwnedString out, error;
        check(farey_generic(generic_seed, generic_steps, &g.ptr, &out.ptr, &error.ptr), error);
        write_output(output_path, out.str());
    });

    // ---- blocks ----
    auto* blocks = app.add_subcommand("blocks", "Edge-equivalence classes and the block tree");
    std::string blocks_input, blocks_format = "json";
    blocks->add_option("--input", blocks_input, "Graph JSON file")->required();
    blocks->add_option("--format", blocks_format, "json or dot")
        ->check(CLI::IsMember({"json", "dot"}));
    blocks->callback([&] {
        auto g = load_graph(blocks_input);
        OwnedString out, error;
        if (blocks_format == "dot") {
            check(farey_blocks_to_dot(g.ptr, &out.ptr, &error.ptr), error);
        } else {
            check(farey_blocks(g.ptr, &out.ptr, &error.ptr), error);
        }
        write_output(output_path, out.str());
    });

    // ---- acl ----
    auto* acl_cmd = app.add_subcommand("acl", "Algebraic closure of a vertex set");
    std::string acl_input, acl_set;
    acl_cmd->add_option("--input", acl_input, "Graph JSON file")->required();
    acl_cmd->add_option("--set", acl_set, "Comma-separated vertices")->required();
    acl_cmd->callback([&] {
        auto g = load_graph(acl_input);
        auto vertices = parse_vertex_list(acl_set);
        OwnedString out, error;
        check(farey_acl(g.ptr, vertices.data(), vertices.size(), &out.ptr, &error.ptr), error);
        write_output(output_path, out.str());
    });

    // ---- gate ----
    auto* gate_cmd = app.add_subcommand("gate", "Gate of a vertex into a hull");
    std::string gate_input, gate_set;
    std::uint32_t gate_x = 0;
    gate_cmd->add_option("--input", gate_input, "Graph JSON file")->required();
    gate_cmd->add_option("--x", gate_x, "Outside vertex")->required();
    gate_cmd->add_option("--set", gate_set, "Comma-separated hull generators")->required();
    gate_cmd->callback([&] {
        auto g = load_graph(gate_input);
        auto vertices = parse_vertex_list(gate_set);
        OwnedString out, error;
        check(farey_gate(g.ptr, gate_x, vertices.data(), vertices.size(), &out.ptr, &error.ptr),
              error);
        write_output(output_path, out.str());
    });

    // ---- indep ----
    auto* indep = app.add_subcommand("indep", "Forking-independence separator check");
    std::string indep_input, indep_b, indep_a, indep_c;
    indep->add_option("--input", indep_input, "Graph JSON file")->required();
    indep->add_option("--b", indep_b, "Set B (comma-separated)")->required();
    indep->add_option("--a", indep_a, "Set A (comma-separated)");
    indep->add_option("--c", indep_c, "Set C (comma-separated)")->required();
    indep->callback([&] {
        auto g = load_graph(indep_input);
        auto b = parse_vertex_list(indep_b);
        auto a = parse_vertex_list(indep_a);
        auto c = parse_vertex_list(indep_c);
        OwnedString out, error;
        auto status = farey_independent(g.ptr, b.data(), b.size(), a.data(), a.size(),
                                        c.data(), c.size(), &out.ptr, &error.ptr);
        check(status, error);
        write_output(output_path, out.str());
        if (status == FAREY_CHECK_NEGATIVE) exit_code = kExitNegative;
    });

    // ---- cycles ----
    auto* cycles = app.add_subcommand("cycles", "Simple cycles through an edge");
    std::string cycles_input, cycles_edge;
    std::uint32_t cycles_max = 6;
    cycles->add_option("--input", cycles_input, "Graph JSON file")->required();
    cycles->add_option("--edge", cycles_edge, "Edge as u,v")->required();
    cycles->add_option("--max-len", cycles_max, "Maximum cycle length");
    cycles->callback([&] {
        auto g = load_graph(cycles_input);
        auto endpoints = parse_vertex_list(cycles_edge);
        if (endpoints.size() != 2) {
            throw CliError{kExitUsage, "--edge expects two vertices"};
        }
        OwnedString out, error;
        check(farey_cycles_through_edge(g.ptr, endpoints[0], endpoints[1], cycles_max,
                                        &out.ptr, &error.ptr),
              error);
        write_output(output_path, out.str());
    });

    // ---- eval ----
    auto* eval = app.add_subcommand("eval", "Evaluate a predicate of the expanded language");
    std::string eval_input, eval_pred, eval_delta, eval_type, eval_d1, eval_d2, eval_d3;
    CatalogOptions eval_catalog;
    std::uint32_t eval_x = 0, eval_y = 0, eval_z = 0, eval_level = 1;
    eval->add_option("--input", eval_input, "Graph JSON file")->required();
    eval->add_option("--pred", eval_pred, "pc, pdelta, d, or y")
        ->required()
        ->check(CLI::IsMember({"pc", "pdelta", "d", "y"}));
    eval->add_option("--x", eval_x, "First vertex")->required();
    eval->add_option("--y", eval_y, "Second vertex");
    eval->add_option("--z", eval_z, "Third vertex (d, y)");
    eval->add_option("--type", eval_type, "Cycle type name (pc)");
    eval->add_option("--delta", eval_delta, "Comma-separated type names (pdelta)");
    eval->add_option("--level", eval_level, "Farey level (d, y)");
    eval->add_option("--d1", eval_d1, "Delta toward the first witness (y)");
    eval->add_option("--d2", eval_d2, "Delta toward the second witness (y)");
    eval->add_option("--d3", eval_d3, "Delta toward the third witness (y)");
    eval->add_option("--catalog", eval_catalog.path, "Cycle-type catalog JSON path");
    eval->add_option("--max-cycle-vertices", eval_catalog.max_vertices,
                     "Catalog bound when building");
    eval->callback([&] {
        auto g = load_graph(eval_input);
        OwnedString out, error;
        farey_status status;
        if (eval_pred == "d") {
            status = farey_eval_d(g.ptr, eval_level, eval_x, eval_y, eval_z, &out.ptr,
                                  &error.ptr);
        } else {
            auto catalog = load_catalog(eval_catalog);
            if (eval_pred == "pc") {
                status = farey_eval_pc(g.ptr, catalog.ptr, eval_type.c_str(), eval_x, eval_y,
                                       &out.ptr, &error.ptr);
            } else if (eval_pred == "pdelta") {
                status = farey_eval_pdelta(g.ptr, catalog.ptr,
                                           delta_json_of(eval_delta).c_str(), eval_x, eval_y,
                                           &out.ptr, &error.ptr);
            } else {
                std::string eps = std::string("{\"d1\":") + delta_json_of(eval_d1) +
                                  ",\"d2\":" + delta_json_of(eval_d2) +
                                  ",\"d3\":" + delta_json_of(eval_d3) +
                                  ",\"level\":" + std::to_string(eval_level) + "}";
                status = farey_eval_y(g.ptr, catalog.ptr, eps.c_str(), eval_x, eval_y, eval_z,
                                      &out.ptr, &error.ptr);
            }
        }
        check(status, error);
        write_output(output_path, out.str());
        if (status == FAREY_CHECK_NEGATIVE) exit_code = kExitNegative;
    });

    // ---- fingerprint ----
    auto* fp = app.add_subcommand("fingerprint", "Bounded quantifier-free fingerprint");
    std::string fp_input, fp_tuple;
    CatalogOptions fp_catalog;
    std::uint32_t fp_subject = 0;
    std::uint32_t fp_cycle = 8, fp_dlen = 4, fp_eps = 4, fp_level = 2;
    fp->add_option("--input", fp_input, "Graph JSON file")->required();
    fp->add_option("--tuple", fp_tuple, "Parameter tuple (comma-separated)")->required();
    fp->add_option("--b", fp_subject, "Subject vertex")->required();
    fp->add_option("--max-cycle-size", fp_cycle, "Cycle size bound");
    fp->add_option("--max-delta-len", fp_dlen, "Delta length bound");
    fp->add_option("--max-eps-total", fp_eps, "Epsilon total length bound");
    fp->add_option("--max-level", fp_level, "Level bound");
    fp->add_option("--catalog", fp_catalog.path, "Cycle-type catalog JSON path");
    fp->callback([&] {
        auto g = load_graph(fp_input);
        fp_catalog.max_vertices = std::max(fp_catalog.max_vertices, fp_cycle);
        auto catalog = load_catalog(fp_catalog);
        auto tuple = parse_vertex_list(fp_tuple);
        std::string bounds = "{\"max_cycle_size\":" + std::to_string(fp_cycle) +
                             ",\"max_delta_len\":" + std::to_string(fp_dlen) +
                             ",\"max_eps_total\":" + std::to_string(fp_eps) +
                             ",\"max_level\":" + std::to_string(fp_level) + "}";
        OwnedString out, error;
        check(farey_fingerprint(g.ptr, catalog.ptr, tuple.data(), tuple.size(), fp_subject,
                                bounds.c_str(), &out.ptr, &error.ptr),
              error);
        write_output(output_path, out.str());
    });

    // ---- export ----
    auto* exp = app.add_subcommand("export", "Re-serialize a graph as JSON or DOT");
    std::string exp_input, exp_format = "json";
    exp->add_option("--input", exp_input, "Graph JSON file")->required();
    exp->add_option("--format", exp_format, "json or dot")
        ->check(CLI::IsMember({"json", "dot"}));
    exp->callback([&] {
        auto g = load_graph(exp_input);
        OwnedString text{exp_format == "dot" ? farey_graph_to_dot(g.ptr)
                                             : farey_graph_to_json(g.ptr)};
        write_output(output_path, text.str());
    });

    // ---- catalog ----
    auto* cat = app.add_subcommand("catalog", "Enumerate minimal-cycle types");
    CatalogOptions cat_options;
    cat->add_option("--max-vertices", cat_options.max_vertices, "Vertex bound (<= 12)");
    cat->add_option("--level", cat_options.level, "Search level (0 = saturating default)");
    cat->add_option("--catalog", cat_options.path, "Cache path (defaults to FAREY_LAB_CACHE)");
    cat->callback([&] {
        auto catalog = load_catalog(cat_options);
        OwnedString text{farey_catalog_to_json(catalog.ptr)};
        write_output(output_path, text.str());
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);  // prints the usage message
        return rc == 0 ? kExitOk : kExitUsage;
    }
    return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const CliError& e) {
        std::cerr << "farey: " << e.message << '\n';
        return e.code;
    } catch (const std::exception& e) {
        std::cerr << "farey: " << e.what() << '\n';
        return kExitUsage;
    }
}
