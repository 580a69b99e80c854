/* relcat — finite binary relations as category morphisms.
 *
 * C interface to the relation kernel: opaque handles, status codes, and
 * report-producing calls.  Every function returns RELCAT_OK on success; on
 * failure relcat_last_error() describes the problem for the calling thread.
 * Strings returned through char** are heap-allocated and must be released
 * with relcat_string_free().
 */

#ifndef RELCAT_H
#define RELCAT_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define RELCAT_API __declspec(dllexport)
#else
#define RELCAT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum relcat_status {
  RELCAT_OK = 0,
  RELCAT_E_ZERO_LABEL = 1,
  RELCAT_E_UNIT_LABEL = 2,
  RELCAT_E_PAIR_OUT_OF_CARRIER = 3,
  RELCAT_E_LABEL_NOT_IN_CARRIER = 4,
  RELCAT_E_COMPOSITION_MISMATCH = 5,
  RELCAT_E_SUBSET_OUT_OF_DOMAIN = 6,
  RELCAT_E_ORACLE_TOO_LARGE = 7,
  RELCAT_E_SHAPE_MISMATCH = 8,
  RELCAT_E_COMMUTATIVITY_VIOLATED = 9,
  RELCAT_E_DIFFERENT_SINK = 10,
  RELCAT_E_SEARCH_BUDGET_EXCEEDED = 11,
  RELCAT_E_PARSE = 12,
  RELCAT_E_UNKNOWN_RELATION = 13,
  RELCAT_E_BAD_CLASS_NAME = 14,
  RELCAT_E_INVALID_ARGUMENT = 15,
  RELCAT_E_INTERNAL = 16
} relcat_status;

typedef struct relcat_carrier relcat_carrier;
typedef struct relcat_relation relcat_relation;
typedef struct relcat_file relcat_file;

RELCAT_API const char* relcat_status_name(relcat_status status);

/* Message for the most recent failing call on this thread. */
RELCAT_API const char* relcat_last_error(void);

/* Default step budget for the exhaustive searches. */
RELCAT_API uint64_t relcat_default_budget(void);

RELCAT_API void relcat_string_free(char* s);

/* -- carriers ----------------------------------------------------------- */

/* Labels are deduplicated and sorted.  Label 0 is rejected; with strict != 0
 * the units 1 and -1 are rejected as well. */
RELCAT_API relcat_status relcat_carrier_new(const int64_t* labels, size_t n, int strict,
                                            relcat_carrier** out);
RELCAT_API void relcat_carrier_free(relcat_carrier* c);
RELCAT_API size_t relcat_carrier_size(const relcat_carrier* c);
/* Copies up to bufn labels into buf, in ascending order. */
RELCAT_API relcat_status relcat_carrier_labels(const relcat_carrier* c, int64_t* buf,
                                               size_t bufn);

/* -- relations ---------------------------------------------------------- */

/* pairs holds npairs (a, b) pairs flattened as a0,b0,a1,b1,... */
RELCAT_API relcat_status relcat_relation_new(const relcat_carrier* dom,
                                             const relcat_carrier* cod,
                                             const int64_t* pairs, size_t npairs,
                                             relcat_relation** out);
RELCAT_API void relcat_relation_free(relcat_relation* r);
RELCAT_API relcat_status relcat_identity(const relcat_carrier* c, relcat_relation** out);
RELCAT_API relcat_status relcat_constant(const relcat_carrier* c, int64_t label,
                                         relcat_relation** out);
RELCAT_API relcat_status relcat_compose(const relcat_relation* outer,
                                        const relcat_relation* inner,
                                        relcat_relation** out);
RELCAT_API relcat_status relcat_inverse(const relcat_relation* r, relcat_relation** out);
RELCAT_API int relcat_relation_equal(const relcat_relation* a, const relcat_relation* b);
RELCAT_API size_t relcat_relation_pair_count(const relcat_relation* r);

/* -- predicates --------------------------------------------------------- */

typedef struct relcat_classification {
  int correspondence;
  int partial_function;
  int injective;
  int surjective;
  int function;
  int bijective;
  int section;
  int retraction;
  int mono;
  int epi;
  int iso;
  int extremal_epi;
} relcat_classification;

RELCAT_API relcat_status relcat_classify(const relcat_relation* r,
                                         relcat_classification* out);

/* Image / coimage label sets.  *out_n receives the full count; up to bufn
 * labels are copied into buf in ascending order. */
RELCAT_API relcat_status relcat_image(const relcat_relation* r, int64_t* buf, size_t bufn,
                                      size_t* out_n);
RELCAT_API relcat_status relcat_coimage(const relcat_relation* r, int64_t* buf,
                                        size_t bufn, size_t* out_n);
/* Image of a subset of the domain under the relation. */
RELCAT_API relcat_status relcat_image_of_subset(const relcat_relation* r,
                                                const int64_t* subset, size_t subset_n,
                                                int64_t* buf, size_t bufn, size_t* out_n);

/* Fast criteria and the exhaustive power-set oracles (capped). */
RELCAT_API relcat_status relcat_is_mono(const relcat_relation* r, int* out);
RELCAT_API relcat_status relcat_is_epi(const relcat_relation* r, int* out);
RELCAT_API relcat_status relcat_mono_oracle(const relcat_relation* r, size_t cap, int* out);
RELCAT_API relcat_status relcat_epi_oracle(const relcat_relation* r, size_t cap, int* out);

/* -- relation files ------------------------------------------------------ */

RELCAT_API relcat_status relcat_file_parse(const char* text, int strict, relcat_file** out);
RELCAT_API relcat_status relcat_file_read(const char* path, int strict, relcat_file** out);
RELCAT_API void relcat_file_free(relcat_file* f);
RELCAT_API size_t relcat_file_count(const relcat_file* f);
RELCAT_API relcat_status relcat_file_name(const relcat_file* f, size_t index, char** out);
RELCAT_API relcat_status relcat_file_get(const relcat_file* f, const char* name,
                                         relcat_relation** out);
RELCAT_API relcat_status relcat_file_serialize(const relcat_file* f, char** out);

/* -- report calls (used by the CLI) -------------------------------------- */

RELCAT_API relcat_status relcat_classify_report(const relcat_file* f, const char* name,
                                                int paranoid, char** out_text);

/* Relation block of outer∘inner in the file format. */
RELCAT_API relcat_status relcat_compose_report(const relcat_file* f, const char* outer,
                                               const char* inner, char** out_text);

RELCAT_API relcat_status relcat_factor_report(const relcat_file* f, const char* name,
                                              size_t mid_max, const char* e_class,
                                              const char* m_class, int paranoid,
                                              uint64_t budget, char** out_text);

/* mode: "axioms" or "necessary".  *any_fail is set to 1 when some checked
 * property fails on the universe. */
RELCAT_API relcat_status relcat_verify_report(const int64_t* pool, size_t pool_n,
                                              size_t size_max, size_t arity_max,
                                              const char* e_class, const char* m_class,
                                              const char* mode, int paranoid,
                                              uint64_t budget, char** out_text,
                                              int* any_fail);

/* *agreement is set to 0 when a fast criterion contradicts its oracle. */
RELCAT_API relcat_status relcat_oracle_report(const relcat_file* f, const char* name,
                                              size_t cap, char** out_text, int* agreement);

#ifdef __cplusplus
}
#endif

#endif /* RELCAT_H */
