/*
 * C interface to the hilbfam library.
 *
 * Every entry point returns an hf_status. On failure the out-parameter is left
 * untouched and hf_last_error() describes the problem (per thread). Handles
 * are opaque and released with the matching *_free function. Strings returned
 * by hf_report_* stay valid until the report is freed.
 */
#ifndef HILBFAM_H
#define HILBFAM_H

#include <stddef.h>
#include <stdint.h>

#if defined(HILBFAM_BUILDING_LIBRARY)
#define HF_API __attribute__((visibility("default")))
#else
#define HF_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hf_status {
  HF_OK = 0,
  HF_ERR_DOMAIN = 1,   /* invalid parameters, malformed input */
  HF_ERR_RESOURCE = 2, /* enumeration cap exceeded */
  HF_ERR_NULL_ARGUMENT = 3,
  HF_ERR_INTERNAL = 4
} hf_status;

typedef enum hf_verdict {
  HF_VERDICT_OK = 0,             /* PASS, or a plain computation */
  HF_VERDICT_FAIL = 1,           /* a claim was falsified */
  HF_VERDICT_NOT_APPLICABLE = 2, /* hypotheses of the claim do not hold */
  HF_VERDICT_NEGATIVE = 3        /* not balancing / nothing found */
} hf_verdict;

typedef struct hf_family hf_family;
typedef struct hf_report hf_report;

HF_API const char* hf_version(void);
HF_API const char* hf_last_error(void);

HF_API uint64_t hf_enumeration_cap(void);
HF_API void hf_set_enumeration_cap(uint64_t cap);

/* Set families. */
HF_API hf_status hf_family_uniform(uint32_t n, uint32_t d, hf_family** out);
HF_API hf_status hf_family_modq(uint32_t n, uint32_t d, uint32_t q, hf_family** out);
HF_API hf_status hf_family_parse(const char* text, hf_family** out);
HF_API hf_status hf_family_load(const char* path, hf_family** out);
HF_API hf_status hf_family_size(const hf_family* family, size_t* out);
HF_API hf_status hf_family_ground_size(const hf_family* family, uint32_t* out);
/* Text form; release with hf_string_free. */
HF_API hf_status hf_family_to_text(const hf_family* family, char** out);
HF_API void hf_family_free(hf_family* family);
HF_API void hf_string_free(char* s);

/* Hilbert function values. cap is the per-variable exponent cap (1 or p-1). */
HF_API hf_status hf_hilbert_uniform(uint32_t n, uint32_t d, uint32_t p, uint32_t m, uint32_t cap, hf_report** out);
HF_API hf_status hf_hilbert_modq(uint32_t n, uint32_t d, uint32_t q, uint32_t p, uint32_t m, uint32_t cap,
                                 hf_report** out);
HF_API hf_status hf_hilbert_family(const hf_family* family, uint32_t p, uint32_t m, uint32_t cap, hf_report** out);

HF_API hf_status hf_series_uniform(uint32_t n, uint32_t d, uint32_t p, uint32_t cap, hf_report** out);
HF_API hf_status hf_series_modq(uint32_t n, uint32_t d, uint32_t q, uint32_t p, uint32_t cap, hf_report** out);
HF_API hf_status hf_series_family(const hf_family* family, uint32_t p, uint32_t cap, hf_report** out);

/* Basis of the degree <= m part of the vanishing ideal of V(family). */
HF_API hf_status hf_ideal_family(const hf_family* family, uint32_t p, uint32_t m, uint32_t cap, hf_report** out);

/* Theorem checks. */
HF_API hf_status hf_verify_main(const hf_family* inner, const hf_family* outer, uint32_t m, uint32_t p, uint32_t cap,
                                hf_report** out);
HF_API hf_status hf_verify_main2(uint32_t n, uint32_t d, uint32_t q, uint32_t p, int force, hf_report** out);
HF_API hf_status hf_verify_hrubes(uint32_t p, hf_report** out);
HF_API hf_status hf_verify_hlemma(uint32_t p, hf_report** out);
/* Coordinate sets are concatenated in set_values; set_sizes[i] = |T_i|. */
HF_API hf_status hf_verify_grid(uint32_t p, uint32_t n, const uint32_t* set_sizes, const uint32_t* set_values,
                                const uint32_t* w, hf_report** out);
/* Batch over all primes up to p_max; jobs > 1 runs checks concurrently, output
 * order is fixed regardless. */
HF_API hf_status hf_verify_all(uint32_t p_max, uint32_t n_max, uint32_t jobs, hf_report** out);

/* L-balancing families. L has L_len entries. */
HF_API hf_status hf_balance_is(uint32_t n, const uint32_t* L, size_t L_len, const hf_family* family,
                               hf_report** out);
HF_API hf_status hf_balance_check(uint32_t n, const uint32_t* L, size_t L_len, const hf_family* family, uint32_t p,
                                  hf_report** out);
HF_API hf_status hf_balance_witness(uint32_t n, const uint32_t* L, size_t L_len, const hf_family* family,
                                    uint32_t p, hf_report** out);
/* pool may be NULL (all nonempty proper subsets). */
HF_API hf_status hf_search_min(uint32_t n, const uint32_t* L, size_t L_len, uint32_t size_limit,
                               const hf_family* pool, hf_report** out);

/* Reports. Returned strings are owned by the report and stay valid until
   hf_report_free. */
HF_API hf_verdict hf_report_verdict(const hf_report* report);
HF_API const char* hf_report_json(hf_report* report, int include_timing);
/* NULL unless the report is a series. */
HF_API const char* hf_report_csv(hf_report* report);
HF_API const char* hf_report_text(hf_report* report);
HF_API void hf_report_free(hf_report* report);

#ifdef __cplusplus
}
#endif

#endif /* HILBFAM_H */
