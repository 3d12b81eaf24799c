/* C interface to the farey shared library.
 *
 * Conventions:
 *   - Handles are opaque; free them with the matching *_free function.
 *   - Strings returned through char** are heap-allocated JSON (or DOT) and
 *     must be released with farey_string_free.
 *   - Return codes: FAREY_OK on success; FAREY_CHECK_NEGATIVE when the
 *     operation ran but the checked property is false (the JSON output then
 *     carries a machine-readable witness); other codes are errors and set
 *     *error when the caller passed one.
 */
#ifndef FAREY_H
#define FAREY_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct farey_graph farey_graph;
typedef struct farey_catalog farey_catalog;

typedef enum {
    FAREY_OK = 0,
    FAREY_CHECK_NEGATIVE = 1,
    FAREY_ERR_INVALID = 2,
    FAREY_ERR_PARSE = 3,
    FAREY_ERR_LIMIT = 4
} farey_status;

const char* farey_schema_version(void);

void farey_string_free(char* s);
void farey_graph_free(farey_graph* g);
void farey_catalog_free(farey_catalog* c);

/* ---- graphs and Farey levels ---- */

farey_status farey_graph_from_json(const char* text, farey_graph** out, char** error);
farey_status farey_build_level(uint32_t level, farey_graph** out, char** error);
farey_status farey_union_limit_view(const farey_graph* g, uint32_t m, farey_graph** out,
                                    char** error);

/* Colored graphs (from farey_build_level) serialize with their colors. */
char* farey_graph_to_json(const farey_graph* g);
char* farey_graph_to_dot(const farey_graph* g);

uint32_t farey_graph_vertex_count(const farey_graph* g);
uint64_t farey_graph_edge_count(const farey_graph* g);

farey_status farey_level_counts(uint32_t level, char** out_json, char** error);

farey_status farey_geodesics(const farey_graph* g, uint32_t x, uint32_t y, char** out_json,
                             char** error);
farey_status farey_cycles_through_edge(const farey_graph* g, uint32_t u, uint32_t v,
                                       uint32_t max_len, char** out_json, char** error);

/* ---- class membership and peeling ---- */

farey_status farey_check_k(const farey_graph* g, char** report_json, char** error);
farey_status farey_peel(const farey_graph* g, const uint32_t* base, size_t base_len,
                        char** result_json, char** error);
farey_status farey_removable(const farey_graph* g, const uint32_t* protected_set,
                             size_t protected_len, char** out_json, char** error);
farey_status farey_string_of_lozenges(const farey_graph* g, char** report_json, char** error);
farey_status farey_brute_force_k(const farey_graph* g, int* out_member, char** error);

/* ---- amalgamation ---- */

farey_status farey_free_amalgam(const farey_graph* b, const farey_graph* c,
                                const char* glue_json, char** result_json, char** error);
farey_status farey_amalgamate(const farey_graph* b, const farey_graph* c,
                              const char* glue_json, char** result_json, char** error);

/* ---- model building ---- */

farey_status farey_tree_model(const char* spec_json, farey_graph** out, char** model_json,
                              char** error);
farey_status farey_generic(uint64_t seed, uint32_t steps, farey_graph** out, char** log_json,
                           char** error);
farey_status farey_compliance(const farey_graph* g, char** report_json, char** error);

/* ---- decomposition ---- */

farey_status farey_blocks(const farey_graph* g, char** blocktree_json, char** error);
farey_status farey_blocks_to_dot(const farey_graph* g, char** dot, char** error);
farey_status farey_acl(const farey_graph* g, const uint32_t* a, size_t a_len, char** out_json,
                       char** error);
farey_status farey_gate(const farey_graph* g, uint32_t x, const uint32_t* b, size_t b_len,
                        char** out_json, char** error);
farey_status farey_independent(const farey_graph* g, const uint32_t* b, size_t b_len,
                               const uint32_t* a, size_t a_len, const uint32_t* c,
                               size_t c_len, char** out_json, char** error);

/* ---- the expanded predicate language ---- */

farey_status farey_catalog_build(uint32_t max_vertices, uint32_t level, farey_catalog** out,
                                 char** error);
farey_status farey_catalog_from_json(const char* text, farey_catalog** out, char** error);
char* farey_catalog_to_json(const farey_catalog* c);

/* delta_json: array of type names, e.g. ["lozenge","c3_0"]. */
farey_status farey_eval_pc(const farey_graph* g, const farey_catalog* cat,
                           const char* type_name, uint32_t x, uint32_t y, char** out_json,
                           char** error);
farey_status farey_eval_pdelta(const farey_graph* g, const farey_catalog* cat,
                               const char* delta_json, uint32_t x, uint32_t y,
                               char** out_json, char** error);
farey_status farey_eval_d(const farey_graph* g, uint32_t level, uint32_t x, uint32_t y,
                          uint32_t z, char** out_json, char** error);
/* eps_json: {"d1": [...], "d2": [...], "d3": [...], "level": n}. */
farey_status farey_eval_y(const farey_graph* g, const farey_catalog* cat,
                          const char* eps_json, uint32_t x, uint32_t y, uint32_t z,
                          char** out_json, char** error);

/* bounds_json may be NULL for the defaults. */
farey_status farey_fingerprint(const farey_graph* g, const farey_catalog* cat,
                               const uint32_t* tuple, size_t tuple_len, uint32_t subject,
                               const char* bounds_json, char** out_json, char** error);

/* query_json: {"atoms": [{"kind": "pdelta", "delta": [...], "param": v}, ...]}. */
farey_status farey_count_solutions(const farey_graph* g, const farey_catalog* cat,
                                   const char* query_json, char** out_json, char** error);

farey_status farey_embeds_bounded(const farey_catalog* cat, const char* dprime_json,
                                  const char* d_json, const char* corpus_json,
                                  char** out_json, char** error);

farey_status farey_extend_triangle_map(const farey_graph* g, const uint32_t* source3,
                                       const uint32_t* target3, char** out_json,
                                       char** error);

#ifdef __cplusplus
}
#endif

#endif /* FAREY_H */
