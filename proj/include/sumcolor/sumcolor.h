/* C interface to the sumcolor library.
 *
 * Graphs live behind an opaque handle. Every call returns a status code; on
 * failure the message is available from sumcolor_last_error() on the same
 * thread. Strings returned through char** outputs are owned by the caller and
 * released with sumcolor_string_free().
 */
#ifndef SUMCOLOR_SUMCOLOR_H
#define SUMCOLOR_SUMCOLOR_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define SUMCOLOR_API __declspec(dllexport)
#else
#define SUMCOLOR_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct sumcolor_graph sumcolor_graph;

typedef enum sumcolor_status {
  SUMCOLOR_OK = 0,
  SUMCOLOR_ERROR_INTERNAL = 1,
  SUMCOLOR_ERROR_PRECONDITION = 2,
  /* exact solver ran out of budget; the report is still produced */
  SUMCOLOR_BUDGET_EXHAUSTED = 3,
  SUMCOLOR_ERROR_PARSE = 4,
  SUMCOLOR_ERROR_INVALID_ARGUMENT = 5
} sumcolor_status;

typedef enum sumcolor_format {
  SUMCOLOR_FORMAT_AUTO = 0,
  SUMCOLOR_FORMAT_DIMACS = 1,
  SUMCOLOR_FORMAT_JSON = 2
} sumcolor_format;

typedef enum sumcolor_side { SUMCOLOR_SIDE_U = 0, SUMCOLOR_SIDE_W = 1 } sumcolor_side;

typedef enum sumcolor_split_condition {
  SUMCOLOR_SPLIT_ANY = 0,
  SUMCOLOR_SPLIT_THM10 = 1, /* d(u) - d(v) >= |C| - 1 on clique-independent edges */
  SUMCOLOR_SPLIT_THM11 = 2  /* d(u) - d(v) <= |C| - 1 */
} sumcolor_split_condition;

SUMCOLOR_API const char* sumcolor_version(void);
SUMCOLOR_API const char* sumcolor_last_error(void);
SUMCOLOR_API void sumcolor_string_free(char* s);

SUMCOLOR_API sumcolor_status sumcolor_graph_parse(const char* data, size_t len,
                                                  sumcolor_format format, sumcolor_graph** out);
SUMCOLOR_API sumcolor_status sumcolor_graph_generate(const char* spec, uint64_t seed,
                                                     sumcolor_graph** out);
SUMCOLOR_API void sumcolor_graph_free(sumcolor_graph* g);

SUMCOLOR_API int sumcolor_graph_vertex_count(const sumcolor_graph* g);
SUMCOLOR_API int sumcolor_graph_edge_count(const sumcolor_graph* g);
SUMCOLOR_API int sumcolor_graph_max_degree(const sumcolor_graph* g);

SUMCOLOR_API sumcolor_status sumcolor_graph_to_json(const sumcolor_graph* g, char** out);
SUMCOLOR_API sumcolor_status sumcolor_graph_to_dimacs(const sumcolor_graph* g, char** out);

/* Each writes a JSON report to *out_json. */
SUMCOLOR_API sumcolor_status sumcolor_approx(const sumcolor_graph* g, char** out_json);
SUMCOLOR_API sumcolor_status sumcolor_exact(const sumcolor_graph* g, int64_t budget_ms,
                                            char** out_json);
SUMCOLOR_API sumcolor_status sumcolor_split(const sumcolor_graph* g,
                                            sumcolor_split_condition condition,
                                            char** out_json);
/* Uses the graph's bipartition, or a computed one if it has none. */
SUMCOLOR_API sumcolor_status sumcolor_useq(const sumcolor_graph* g, sumcolor_side side,
                                           char** out_json);
SUMCOLOR_API sumcolor_status sumcolor_verify(const sumcolor_graph* g, const char* coloring_json,
                                             size_t len, char** out_json);

/* Writes the corpus report as CSV. `corpus` as accepted by the bench command. */
SUMCOLOR_API sumcolor_status sumcolor_bench(const char* corpus, uint64_t seed, int64_t budget_ms,
                                            char** out_csv);

#ifdef __cplusplus
}
#endif

#endif /* SUMCOLOR_SUMCOLOR_H */
