/* C interface to the odd-graph library. Every function returns an og_status;
 * on failure og_last_error_message() describes the error for the calling
 * thread. Strings returned through char** are owned by the caller and must be
 * released with og_string_free(). */
#ifndef ODDGRAPH_ODDGRAPH_H
#define ODDGRAPH_ODDGRAPH_H

#include <stddef.h>
#include <stdint.h>

#if defined(OG_BUILDING_LIBRARY)
#define OG_API __attribute__((visibility("default")))
#else
#define OG_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum og_status {
  OG_OK = 0,
  OG_ERR_RANGE,
  OG_ERR_VALIDATION,
  OG_ERR_NO_PARENT,
  OG_ERR_CANONICAL_FORM,
  OG_ERR_WEIGHT,
  OG_ERR_ADJACENCY,
  OG_ERR_STRUCTURE,
  OG_ERR_GENERATION,
  OG_ERR_SUPPLEMENTATION,
  OG_ERR_PARTITION,
  OG_ERR_CONSTRUCTION,
  OG_ERR_ASSEMBLY,
  OG_ERR_UNSUPPORTED,
  OG_ERR_LIFT,
  OG_ERR_PARSE,
  OG_ERR_NULL_ARGUMENT,
  OG_ERR_BUFFER_TOO_SMALL,
  OG_ERR_INTERNAL
} og_status;

typedef enum og_format { OG_FORMAT_TEXT = 0, OG_FORMAT_JSON = 1, OG_FORMAT_DOT = 2 } og_format;

typedef enum og_list_variant { OG_LIST_PLAIN = 0, OG_LIST_UNDERLINED = 1, OG_LIST_MIDDLE = 2 } og_list_variant;

typedef enum og_graph { OG_GRAPH_ODD = 0, OG_GRAPH_MIDDLE = 1 } og_graph;

typedef struct og_two_factor og_two_factor;
typedef struct og_cycle og_cycle;
typedef struct og_report og_report;

OG_API const char* og_version(void);
OG_API const char* og_status_name(og_status status);
OG_API const char* og_last_error_message(void);
OG_API void og_string_free(char* s);

/* Germs and rotation classes. Germs are digit strings a_{k-1}...a_1. */
OG_API og_status og_catalan(int k, uint64_t* out);
OG_API og_status og_germ_rank(int k, const char* germ, uint64_t* out);
OG_API og_status og_germ_unrank(int k, uint64_t rank, char** out);
OG_API og_status og_germ_describe(int k, const char* germ, og_format format, char** out);
OG_API og_status og_germs_render(int k, og_format format, char** out);
/* bitstring: '0'/'1' characters, position 0 first. */
OG_API og_status og_canonical_rotation(int k, const char* bitstring, char** germ, int* rotation);

/* Uniform 2-factor of O_k. */
OG_API og_status og_two_factor_build(int k, unsigned threads, og_two_factor** out);
OG_API void og_two_factor_free(og_two_factor* tf);
OG_API og_status og_two_factor_cycle_count(const og_two_factor* tf, uint64_t* out);
/* Writes min(cap, n) vertex masks of cycle `index`; *len receives n. */
OG_API og_status og_two_factor_cycle(const og_two_factor* tf, uint64_t index, uint64_t* buffer, size_t cap,
                                     size_t* len);
OG_API og_status og_two_factor_render(const og_two_factor* tf, og_format format, char** out);
OG_API og_status og_two_factor_render_lists(const og_two_factor* tf, og_list_variant variant, char** out);
OG_API og_status og_two_factor_check(const og_two_factor* tf, og_report** out);

/* Hamilton cycles (k >= 3). */
OG_API og_status og_hamilton_build(og_graph graph, int k, unsigned threads, og_cycle** out);
OG_API void og_cycle_free(og_cycle* c);
OG_API og_status og_cycle_length(const og_cycle* c, uint64_t* out);
OG_API og_status og_cycle_vertices(const og_cycle* c, uint64_t* buffer, size_t cap, size_t* len);
OG_API og_status og_cycle_render(const og_cycle* c, og_format format, char** out);
OG_API og_status og_cycle_check(const og_cycle* c, og_report** out);

/* Spanning tree of the flip hypergraph. */
OG_API og_status og_spanning_tree_render(int k, og_format format, char** out);
OG_API og_status og_seed_tuples_render(char** out);

/* Arc factorization of O_k (text, JSON or DOT) and modular coloring of M_k
 * (text or JSON). */
OG_API og_status og_arc_factorization_render(int k, unsigned threads, og_format format, char** out);
OG_API og_status og_modular_coloring_render(int k, unsigned threads, og_format format, char** out);

/* Check reports. */
OG_API og_status og_check_arc_factorization(int k, unsigned threads, og_report** out);
OG_API og_status og_check_modular_factorization(int k, unsigned threads, og_report** out);
OG_API og_status og_check_class_census(int k, og_report** out);
OG_API og_status og_verify_document(const char* json, og_report** out);
OG_API void og_report_free(og_report* r);
OG_API og_status og_report_passed(const og_report* r, int* passed);
OG_API og_status og_report_render(const og_report* r, og_format format, char** out);

/* Full suite for one k; *all_passed is 1 when every check passes. */
OG_API og_status og_verify_suite(int k, unsigned threads, og_format format, char** out, int* all_passed);
OG_API og_status og_bench(int k, unsigned threads, og_format format, char** out);

#ifdef __cplusplus
}
#endif

#endif
