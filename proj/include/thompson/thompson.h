/* C interface to the Thompson's group F library.
 *
 * Elements are opaque handles owned by the caller and released with
 * tf_element_free. Strings returned through char** out-parameters are
 * heap-allocated and released with tf_string_free. Every call returns a
 * tf_status; on failure tf_last_error() describes the problem for the
 * calling thread. All numbers in JSON output are fraction strings "p/q".
 */
#ifndef THOMPSON_THOMPSON_H
#define THOMPSON_THOMPSON_H

#include <stdint.h>

#if defined(THOMPSON_BUILDING_LIBRARY)
#define TF_API __attribute__((visibility("default")))
#else
#define TF_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct tf_element tf_element;

typedef enum tf_status {
  TF_OK = 0,
  TF_ERR_USAGE = 1,
  TF_ERR_PARSE = 2,
  TF_ERR_DOMAIN = 3,
  TF_ERR_INTERNAL = 4
} tf_status;

/* Message for the last failed call on this thread ("" if none). */
TF_API const char* tf_last_error(void);
TF_API void tf_string_free(char* s);

/* Element text is the JSON breakpoint form or "word:x0 x1^-1 ...". */
TF_API tf_status tf_element_parse(const char* text, tf_element** out);
TF_API tf_status tf_element_identity(tf_element** out);
TF_API tf_status tf_element_clone(const tf_element* f, tf_element** out);
TF_API void tf_element_free(tf_element* f);
TF_API tf_status tf_element_to_json(const tf_element* f, char** out);
/* 1 if equal, 0 otherwise. */
TF_API int tf_element_equal(const tf_element* f, const tf_element* g);

/* out = f ∘ g (g applied first). */
TF_API tf_status tf_compose(const tf_element* f, const tf_element* g, tf_element** out);
TF_API tf_status tf_inverse(const tf_element* f, tf_element** out);
TF_API tf_status tf_power(const tf_element* f, long n, tf_element** out);
/* f(x) for a fraction string x in [0,1]. */
TF_API tf_status tf_evaluate(const tf_element* f, const char* x, char** out);

/* Membership diagnosis for any PL map text: {"in_F": bool, ...}. Sets
 * *in_f to 1 or 0. */
TF_API tf_status tf_check(const char* text, int* in_f, char** out_json);

TF_API tf_status tf_sigma_json(const tf_element* f, char** out);
TF_API tf_status tf_delta_json(const tf_element* f, char** out);
TF_API tf_status tf_fixed_structure_json(const tf_element* f, char** out);

/* *conjugate = 1/0; *reason receives the first separating layer
 * ("sigma1", "sigma2", "sigma3", "chain-structure", "delta") or NULL. */
TF_API tf_status tf_conjugate(const tf_element* f, const tf_element* g, int* conjugate, char** reason);
/* h with h ∘ f = g ∘ h, or *out = NULL when f and g are not conjugate. */
TF_API tf_status tf_conjugator(const tf_element* f, const tf_element* g, tf_element** out);

/* p-th root, or *out = NULL when none exists in F. */
TF_API tf_status tf_root(const tf_element* f, long p, tf_element** out);
TF_API tf_status tf_root_generator(const tf_element* f, tf_element** generator, long* power);
TF_API tf_status tf_centralizer_json(const tf_element* f, char** out);

/* Reduced random word of exactly len letters and its element. */
TF_API tf_status tf_random_element(uint64_t seed, int len, char** word, tf_element** out);

/* Brute-force conjugator search over words of length <= max_len; *out =
 * NULL if none. The accepted bound defaults to 8 and is overridden by the
 * THOMPSON_ORACLE_MAX_LEN environment variable. */
TF_API tf_status tf_oracle_conjugator(const tf_element* f, const tf_element* g, int max_len, tf_element** out);

#ifdef __cplusplus
}
#endif

#endif
