#ifndef CEQ_CEQ_H
#define CEQ_CEQ_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

/* Opaque workspace handle holding named categories, functors,
 * transformations, diagrams, copresheaves, and diagram morphisms. */
typedef struct ceq_workspace ceq_workspace;

/* Status codes returned by the loading functions. */
enum {
    CEQ_OK = 0,
    CEQ_ERR_PARSE = 1,
    CEQ_ERR_VALIDATION = 2,
    CEQ_ERR_UNRESOLVED = 3,
    CEQ_ERR_OTHER = 4
};

ceq_workspace* ceq_workspace_new(void);
void ceq_workspace_free(ceq_workspace* ws);

/* Load one workspace document; on failure a message is written to err
 * (truncated to errcap, always NUL-terminated when errcap > 0) and the
 * workspace is left unchanged. */
int ceq_load_file(ceq_workspace* ws, const char* path, char* err, size_t errcap);
int ceq_load_string(ceq_workspace* ws, const char* text, char* err, size_t errcap);

/* Run one command (command name, positional arguments, and flags such as
 * "--format", "records") against the workspace. Returns the command exit
 * code: 0 true/success, 1 predicate false, 2 invalid input, 3 work limit
 * exceeded. The report text is stored in *output (free with
 * ceq_free_string); pass NULL to discard it. */
int ceq_run(ceq_workspace* ws, int argc, const char* const* argv, char** output);

void ceq_free_string(char* s);

const char* ceq_version(void);

#ifdef __cplusplus
}
#endif

#endif
