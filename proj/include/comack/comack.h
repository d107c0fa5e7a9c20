#ifndef COMACK_COMACK_H
#define COMACK_COMACK_H

/*
 * C API of the comack shared library.
 *
 * All state lives behind opaque handles; every function that can fail
 * returns a status code and leaves a human-readable message retrievable via
 * cmk_last_error() (thread-local). Strings returned by accessors are owned
 * by their handle and valid until it is freed.
 *
 * Status codes mirror the CLI exit codes:
 *   CMK_OK               computation ran, requested verifications passed
 *   CMK_ERR_VERIFY       computation ran, a verification failed
 *   CMK_ERR_USAGE        malformed spec / invalid configuration
 *   CMK_ERR_RESOURCE     a configured ceiling was exceeded
 *   CMK_ERR_INTERNAL     an internal invariant failed
 */

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#define CMK_OK 0
#define CMK_ERR_VERIFY 1
#define CMK_ERR_USAGE 2
#define CMK_ERR_RESOURCE 3
#define CMK_ERR_INTERNAL 4

/* check mask for cmk_config_set_checks */
#define CMK_CHECK_DOUBLE_COSETS 1u
#define CMK_CHECK_THEOREM2 2u
#define CMK_CHECK_REMARK 4u
#define CMK_CHECK_ORACLE 8u

/* ddim kind for cmk_report_ddim_kind */
#define CMK_DDIM_EXACT 0
#define CMK_DDIM_AT_LEAST 1
#define CMK_DDIM_INFINITE 2

typedef struct cmk_config cmk_config;
typedef struct cmk_report cmk_report;

const char* cmk_version(void);
int cmk_schema_version(void);

/* Message describing the most recent failure on this thread ("" if none). */
const char* cmk_last_error(void);

cmk_config* cmk_config_new(void);
void cmk_config_free(cmk_config* cfg);

/* Group spec grammar: cyclic:N | elemab:p:r | dihedral:N | quaternion:8
 * | sym:3 | product:<spec>,<spec> | perm:"<cycles>[;<cycles>...]" */
int cmk_config_set_group(cmk_config* cfg, const char* spec);
int cmk_config_set_prime(cmk_config* cfg, unsigned prime);
int cmk_config_set_ext_cutoff(cmk_config* cfg, unsigned cutoff);   /* default 3 */
int cmk_config_set_order_bound(cmk_config* cfg, unsigned bound);   /* default/max 64 */
int cmk_config_set_term_ceiling(cmk_config* cfg, unsigned ceiling); /* default 5000 */
int cmk_config_set_checks(cmk_config* cfg, unsigned mask);
int cmk_config_set_emit_timing(cmk_config* cfg, int enabled);

/* Runs the full pipeline. On CMK_OK / CMK_ERR_VERIFY a report handle is
 * stored in *out_report (caller frees). Other codes leave it NULL. */
int cmk_run(const cmk_config* cfg, cmk_report** out_report);

const char* cmk_report_json(const cmk_report* rep);
int cmk_report_verified(const cmk_report* rep);                 /* 1 / 0 */
int cmk_report_ddim_kind(const cmk_report* rep);                /* CMK_DDIM_* */
long cmk_report_ddim_value(const cmk_report* rep);              /* -1 for infinite */
const char* cmk_report_algebra_dump(const cmk_report* rep);     /* structure constants */
void cmk_report_free(cmk_report* rep);

#ifdef __cplusplus
}
#endif

#endif /* COMACK_COMACK_H */
