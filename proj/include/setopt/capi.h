#ifndef SETOPT_CAPI_H
#define SETOPT_CAPI_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes; nonzero values mirror the library's error kinds. */
typedef enum setopt_status {
  SETOPT_OK = 0,
  SETOPT_INVALID_ARGUMENT = 1,
  SETOPT_DIMENSION_MISMATCH = 2,
  SETOPT_NORMAL_OUTSIDE_DUAL_CONE = 3,
  SETOPT_NEGATIVE_SCALAR = 4,
  SETOPT_EMPTY_TRANSLATION_SET = 5,
  SETOPT_NOT_DECLARED_CONVEX = 6,
  SETOPT_BASE_OUTSIDE_DOMAIN = 7,
  SETOPT_ORACLE_FAILURE = 8,
  SETOPT_UNSUPPORTED = 9,
  SETOPT_VALIDATION_ERROR = 10,
  SETOPT_INCONSISTENT_LIMIT_DATA = 11,
  SETOPT_EMPTY_GRID = 12,
  SETOPT_DIMENSION_UNSUPPORTED = 13,
  SETOPT_TASK_ERROR = 14,
  SETOPT_INTERNAL_ERROR = 100
} setopt_status;

typedef struct setopt_workspace setopt_workspace;
typedef struct setopt_set setopt_set;
typedef struct setopt_report setopt_report;

const char* setopt_status_name(setopt_status status);
/* Message of the last failed call on this thread; empty after a success. */
const char* setopt_last_error(void);
/* Strings returned through char** out-parameters are released with this. */
void setopt_string_free(char* s);

/* Ordering cone from generators written as "1,0; 0,1". NULL or "" gives the nonnegative quadrant of R^2. */
setopt_status setopt_workspace_create(const char* generators, setopt_workspace** out);
void setopt_workspace_free(setopt_workspace* ws);

/* Set expression, see README for the grammar. */
setopt_status setopt_set_eval(const setopt_workspace* ws, const char* expr, setopt_set** out);
void setopt_set_free(setopt_set* s);
/* JSON object {"set": ..., "phi": [...]} with the scalarizations over the workspace directions. */
setopt_status setopt_set_json(const setopt_workspace* ws, const setopt_set* s, char** out);
/* leq: b is a subset of a. */
setopt_status setopt_set_compare(const setopt_set* a, const setopt_set* b, int* leq, int* equal);
/* op: '+' sum, '|' infimum, '&' supremum, '/' inf-residuation. */
setopt_status setopt_set_combine(const setopt_workspace* ws, char op, const setopt_set* a, const setopt_set* b,
                                 setopt_set** out);
setopt_status setopt_set_svg(const setopt_workspace* ws, const setopt_set* const* sets, const char* const* names,
                             size_t count, char** out);

/* Runs a scenario file. tolerance may be NULL; jobs >= 1. Validation problems fail with SETOPT_VALIDATION_ERROR. */
setopt_status setopt_scenario_run_file(const char* path, const char* tolerance, int jobs, setopt_report** out);
setopt_status setopt_scenario_run_json(const char* json, const char* tolerance, int jobs, setopt_report** out);
void setopt_report_free(setopt_report* r);
setopt_status setopt_report_json(const setopt_report* r, char** out);
setopt_status setopt_report_text(const setopt_report* r, char** out);
/* Fails with SETOPT_DIMENSION_UNSUPPORTED unless the plotted sets live in R^2, SETOPT_INVALID_ARGUMENT if none. */
setopt_status setopt_report_svg(const setopt_report* r, char** out);
long setopt_report_failures(const setopt_report* r);
long setopt_report_task_errors(const setopt_report* r);

#ifdef __cplusplus
}
#endif

#endif
