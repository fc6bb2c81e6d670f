#ifndef REFLEX_REFLEX_H
#define REFLEX_REFLEX_H

/* C interface to the reflex library. Functions returning text allocate it;
 * release it with rfx_string_free. On error the out parameters are left
 * untouched and rfx_last_error() describes the failure (per thread). */

#include <stddef.h>

#if defined(_WIN32)
#define RFX_API __declspec(dllexport)
#else
#define RFX_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct rfx_polytope rfx_polytope;

/* Values double as process exit codes of the command line tool. */
typedef enum rfx_status {
  RFX_OK = 0,
  RFX_VERIFY_FAILED = 1,
  RFX_ERR_PARSE = 2,
  RFX_ERR_DIMENSION = 3,
  RFX_ERR_PRECONDITION = 4,
  RFX_ERR_UNKNOWN_NAME = 5,
  RFX_ERR_INTERNAL = 6
} rfx_status;

typedef enum rfx_format { RFX_TEXT = 0, RFX_JSON = 1 } rfx_format;

RFX_API const char* rfx_last_error(void);
RFX_API const char* rfx_status_name(rfx_status status);
RFX_API void rfx_string_free(char* s);

/* Construction. */
RFX_API rfx_status rfx_polytope_parse(const char* text, rfx_polytope** out);
RFX_API rfx_status rfx_polytope_read(const char* path, rfx_polytope** out);
/* coords holds n points of dimension dim, row after row. */
RFX_API rfx_status rfx_polytope_from_points(size_t dim, size_t n, const long* coords, rfx_polytope** out);
RFX_API rfx_status rfx_gallery(const char* description, rfx_polytope** out);
RFX_API void rfx_polytope_free(rfx_polytope* p);

/* Accessors. */
RFX_API size_t rfx_polytope_dim(const rfx_polytope* p);
RFX_API size_t rfx_polytope_vertex_count(const rfx_polytope* p);
RFX_API size_t rfx_polytope_facet_count(const rfx_polytope* p);
/* Copies vertex i into coords[0..dim). Fails with RFX_ERR_DIMENSION when a
 * coordinate does not fit in a long. */
RFX_API rfx_status rfx_polytope_vertex(const rfx_polytope* p, size_t i, long* coords);
/* Polytope file text. */
RFX_API rfx_status rfx_polytope_format(const rfx_polytope* p, char** out);

/* Queries; reports in text (key=value lines) or JSON. */
RFX_API rfx_status rfx_check(const rfx_polytope* p, rfx_format format, char** out);
RFX_API rfx_status rfx_is_reflexive(const rfx_polytope* p, int* out);
/* Dual polytope; *dual is set only when the dual is a lattice polytope. */
RFX_API rfx_status rfx_dual(const rfx_polytope* p, rfx_format format, char** out, rfx_polytope** dual);
/* v as comma separated integers. image may be NULL. */
RFX_API rfx_status rfx_project(const rfx_polytope* p, const char* v, rfx_format format, char** out,
                               rfx_polytope** image);
RFX_API rfx_status rfx_pair(const rfx_polytope* p, const char* v, const char* w, rfx_format format, char** out);
RFX_API rfx_status rfx_graph(const rfx_polytope* p, int vertices_only, rfx_format format, char** out);
RFX_API rfx_status rfx_normal_form(const rfx_polytope* p, rfx_format format, char** out);
RFX_API rfx_status rfx_isomorphic(const rfx_polytope* p, const rfx_polytope* q, int* out);
RFX_API rfx_status rfx_lattice_points(const rfx_polytope* p, rfx_format format, char** out);
/* Writes class files into outdir when it is not NULL. */
RFX_API rfx_status rfx_classify2d(const char* outdir, rfx_format format, char** out);
/* suite NULL means all. Returns RFX_VERIFY_FAILED, with *out set, when an
 * asserted check fails. */
RFX_API rfx_status rfx_verify(const rfx_polytope* p, const char* suite, rfx_format format, char** out);

#ifdef __cplusplus
}
#endif

#endif
