#ifndef QZETA_QZETA_H
#define QZETA_QZETA_H

#include <stdint.h>

#if defined(_WIN32)
#  if defined(QZETA_BUILDING)
#    define QZ_API __declspec(dllexport)
#  else
#    define QZ_API __declspec(dllimport)
#  endif
#else
#  define QZ_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qz_status {
  QZ_OK = 0,
  QZ_E_INVALID_ARGUMENT = 1,
  QZ_E_PARSE = 2,
  QZ_E_UNDECLARED_SYMBOL = 3,
  QZ_E_DIMENSION_MISMATCH = 4,
  QZ_E_NOT_SMALL = 5,
  QZ_E_MISSING_CHI = 6,
  QZ_E_T_IN_COEFFICIENT = 7,
  QZ_E_FRACTIONAL_POWER = 8,
  QZ_E_BAD_PARAMS = 9,
  QZ_E_SIZE_LIMIT = 10,
  QZ_E_BUDGET_EXCEEDED = 11,
  QZ_E_NOT_COPRIME = 12,
  QZ_E_NOT_EXPANDABLE = 13,
  QZ_E_IO = 14,
  QZ_E_INTERNAL = 15
} qz_status;

typedef enum qz_format {
  QZ_FMT_TEXT = 0,
  QZ_FMT_LATEX = 1,
  QZ_FMT_JSON = 2
} qz_format;

typedef struct qz_strata qz_strata;
typedef struct qz_zeta qz_zeta;

/* Strings returned through char** are owned by the caller: release with qz_string_free. */
QZ_API void qz_string_free(char *s);
QZ_API const char *qz_version(void);
QZ_API const char *qz_status_name(qz_status s);
/* Message of the last failing call on this thread; "" if none. */
QZ_API const char *qz_last_error(void);

/* Rational vectors are passed as text: "1,1/2,3". */

/* strata */
QZ_API qz_status qz_strata_parse(const char *text, qz_strata **out);
QZ_API qz_status qz_strata_read(const char *path, qz_strata **out);
QZ_API qz_status qz_strata_print(const qz_strata *s, char **out);
QZ_API qz_status qz_strata_write(const qz_strata *s, const char *path);
QZ_API qz_status qz_strata_equal(const qz_strata *a, const qz_strata *b, int *out);
QZ_API qz_status qz_strata_count(const qz_strata *s, int64_t *out);
/* newline separated, "" when clean */
QZ_API qz_status qz_strata_warnings(const qz_strata *s, char **out);
QZ_API void qz_strata_free(qz_strata *s);

QZ_API qz_status qz_hj_strata(int64_t d, int64_t a, int64_t b, const char *N, const char *nu,
                              qz_strata **out);
QZ_API qz_status qz_hj_chain(int64_t d, int64_t a, int64_t b, qz_format fmt, char **out);
QZ_API qz_status qz_yomdin_strata(int64_t m, int64_t k, int64_t p, int64_t q, int64_t a,
                                  qz_strata **out);
/* notice may be NULL; otherwise receives a string (possibly empty) */
QZ_API qz_status qz_tetra_strata(int64_t d, int64_t q, const char *N, const char *nu,
                                 qz_strata **out, char **notice);

/* zeta functions */
QZ_API qz_status qz_monomial_zeta(const char *group, const char *N, const char *nu,
                                  int allow_nonsmall, qz_zeta **out);
QZ_API qz_status qz_strata_zeta(const qz_strata *s, int allow_nonsmall, qz_zeta **out);
QZ_API qz_status qz_zeta_render(const qz_zeta *z, qz_format fmt, char **out);
QZ_API qz_status qz_zeta_equal(const qz_zeta *a, const qz_zeta *b, int *out);
/* Euler characteristic specialization, symbols take the chi values of the source strata */
QZ_API qz_status qz_zeta_euler(const qz_zeta *z, qz_format fmt, char **out);
QZ_API qz_status qz_zeta_poles(const qz_zeta *z, qz_format fmt, char **out);
QZ_API qz_status qz_zeta_series(const qz_zeta *z, const char *M, qz_format fmt, char **out);
/* T^j coefficients of the series up to M, evaluated at L = p; syms: "C0=5,C1=2" or NULL */
QZ_API qz_status qz_zeta_eval_series(const qz_zeta *z, const char *M, const char *p,
                                     const char *syms, qz_format fmt, char **out);
QZ_API void qz_zeta_free(qz_zeta *z);

/* cross-check of the chain computation against the direct quotient formula */
QZ_API qz_status qz_hj_check(int64_t d, int64_t a, int64_t b, const char *N, const char *nu,
                             int *equal);

/* summaries */
QZ_API qz_status qz_group_info(const char *group, qz_format fmt, char **out);
QZ_API qz_status qz_tetra_stringy(int64_t d, int64_t q, qz_format fmt, char **out);
QZ_API qz_status qz_yomdin_monodromy(int64_t m, int64_t k, int64_t p, int64_t q, int64_t a,
                                     qz_format fmt, char **out);

#ifdef __cplusplus
}
#endif

#endif
