/*
 * z4sd - self-dual codes over Z4 and their binary residue codes.
 *
 * C interface of the shared library. Objects are opaque handles created and
 * destroyed by the library; every fallible function returns a z4sd_status
 * and writes its results through out-parameters. A non-OK status leaves the
 * out-parameters untouched; z4sd_last_error() returns a thread-local
 * description of the most recent failure.
 *
 * Strings returned through char** out-parameters are heap-allocated and
 * must be released with z4sd_string_free().
 */

#ifndef Z4SD_H
#define Z4SD_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define Z4SD_API __declspec(dllexport)
#else
#define Z4SD_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum z4sd_status {
    Z4SD_OK = 0,
    Z4SD_ERROR_ARGUMENT = 1,     /* malformed argument */
    Z4SD_ERROR_PRECONDITION = 2, /* mathematical precondition not met */
    Z4SD_ERROR_TOO_LARGE = 3,    /* beyond an exhaustive-method guard */
    Z4SD_ERROR_PARSE = 4,
    Z4SD_ERROR_IO = 5,
    Z4SD_ERROR_INTERNAL = 6
} z4sd_status;

typedef struct z4sd_z4code z4sd_z4code;   /* code over Z4 */
typedef struct z4sd_bincode z4sd_bincode; /* binary linear code */

Z4SD_API const char* z4sd_version(void);
Z4SD_API const char* z4sd_status_name(z4sd_status status);
Z4SD_API const char* z4sd_last_error(void);
Z4SD_API void z4sd_string_free(char* s);
Z4SD_API void z4sd_z4code_free(z4sd_z4code* code);
Z4SD_API void z4sd_bincode_free(z4sd_bincode* code);

/* ---- Z4 codes: the .z4c text format, accessors, duality ---- */

Z4SD_API z4sd_status z4sd_z4code_parse(const char* text, z4sd_z4code** out);
Z4SD_API z4sd_status z4sd_z4code_read(const char* path, z4sd_z4code** out);
Z4SD_API z4sd_status z4sd_z4code_format(const z4sd_z4code* code, char** out);
Z4SD_API z4sd_status z4sd_z4code_write(const z4sd_z4code* code, const char* path);

Z4SD_API uint32_t z4sd_z4code_length(const z4sd_z4code* code);
Z4SD_API uint32_t z4sd_z4code_k1(const z4sd_z4code* code);
Z4SD_API uint32_t z4sd_z4code_k2(const z4sd_z4code* code);
Z4SD_API int z4sd_z4code_is_self_dual(const z4sd_z4code* code);
Z4SD_API int z4sd_z4code_equal(const z4sd_z4code* a, const z4sd_z4code* b);

Z4SD_API z4sd_status z4sd_z4code_dual(const z4sd_z4code* code, z4sd_z4code** out);
Z4SD_API z4sd_status z4sd_z4code_residue(const z4sd_z4code* code, z4sd_bincode** out);
Z4SD_API z4sd_status z4sd_z4code_torsion(const z4sd_z4code* code, z4sd_bincode** out);

/* 1 = Type I, 2 = Type II; full-enumeration confirmation up to 2^32
 * codewords, generator criterion beyond */
Z4SD_API z4sd_status z4sd_z4code_type(const z4sd_z4code* code, uint32_t threads, int* out);

/* Gray image of a digit string: "0123" -> "00011110" */
Z4SD_API z4sd_status z4sd_gray_map(const char* digits, char** out);

/* ---- constructions ---- */

Z4SD_API z4sd_status z4sd_construct_bordered_double_circulant(const char* first_row,
                                                              uint32_t alpha, uint32_t beta,
                                                              uint32_t gamma,
                                                              z4sd_z4code** out);
Z4SD_API z4sd_status z4sd_construct_four_negacirculant(const char* row_a, const char* row_b,
                                                       z4sd_z4code** out);

/* ---- weight search ---- */

typedef struct z4sd_weight_profile {
    uint32_t d_hamming; /* UINT32_MAX when unknown */
    uint32_t d_lee;
    uint32_t d_euclidean;
    uint64_t count_hamming;
    uint64_t count_lee;
    uint64_t count_euclidean;
    int exact;
} z4sd_weight_profile;

Z4SD_API z4sd_status z4sd_enumerate_weights(const z4sd_z4code* code, uint32_t threads,
                                            z4sd_weight_profile* out);

/* Upper-bound search: full sweep of low-support messages within the budget,
 * then seeded random messages. Witness digit strings are optional outputs. */
Z4SD_API z4sd_status z4sd_bounded_search(const z4sd_z4code* code, uint64_t budget,
                                         uint64_t seed, z4sd_weight_profile* out,
                                         char** lee_witness, char** euclidean_witness);

/* One line "n13 n2 count" per weight split among codewords of the given Lee
 * weight. */
Z4SD_API z4sd_status z4sd_census(const z4sd_z4code* code, uint32_t lee_target,
                                 uint32_t threads, char** out);

typedef struct z4sd_support_invariant {
    uint32_t t;
    uint32_t k;
    uint32_t max;
    uint32_t min;
    uint64_t cardinality;
} z4sd_support_invariant;

Z4SD_API z4sd_status z4sd_support_invariant_of(const z4sd_z4code* code, uint32_t t,
                                               uint32_t k, uint32_t threads,
                                               z4sd_support_invariant* out);

/* Partition by the support-count fingerprints for k = 1..k_max:
 * group_ids[i] receives the group of codes[i], numbered by first
 * appearance. Codes in different groups are inequivalent. */
Z4SD_API z4sd_status z4sd_distinguish(const z4sd_z4code* const* codes, size_t count,
                                      uint32_t t, uint32_t k_max, uint32_t threads,
                                      uint32_t* group_ids, uint32_t* group_count);

/* ---- binary codes: the .g2c text format and the classic invariants ---- */

Z4SD_API z4sd_status z4sd_bincode_parse(const char* text, z4sd_bincode** out);
Z4SD_API z4sd_status z4sd_bincode_read(const char* path, z4sd_bincode** out);
Z4SD_API z4sd_status z4sd_bincode_format(const z4sd_bincode* code, char** out);
Z4SD_API z4sd_status z4sd_bincode_write(const z4sd_bincode* code, const char* path);

Z4SD_API uint32_t z4sd_bincode_length(const z4sd_bincode* code);
Z4SD_API uint32_t z4sd_bincode_dim(const z4sd_bincode* code);
Z4SD_API int z4sd_bincode_is_self_dual(const z4sd_bincode* code);
Z4SD_API int z4sd_bincode_equal(const z4sd_bincode* a, const z4sd_bincode* b);
Z4SD_API z4sd_status z4sd_bincode_dual(const z4sd_bincode* code, z4sd_bincode** out);

/* 0 exhaustive Gray sweep, 1 information-set lower-bound search, 2 automatic */
Z4SD_API z4sd_status z4sd_bincode_min_weight(const z4sd_bincode* code, int method,
                                             uint32_t* out);

/* 0 doubly even, 1 singly even, 2 neither */
Z4SD_API z4sd_status z4sd_bincode_parity_class(const z4sd_bincode* code, int* out);

/* one line "weight count" per weight */
Z4SD_API z4sd_status z4sd_bincode_weight_distribution(const z4sd_bincode* code, char** out);

/* 0 exact coset sweep (n-k <= 28), 1 dual-distribution bound */
Z4SD_API z4sd_status z4sd_bincode_covering_radius(const z4sd_bincode* code, int method,
                                                  uint32_t* out);

Z4SD_API z4sd_status z4sd_bincode_shadow_min_weight(const z4sd_bincode* code, uint32_t* out,
                                                    uint64_t* shadow_size);

/* 0 any parity, 1 doubly even, 2 singly even */
Z4SD_API z4sd_status z4sd_bincode_complete_self_dual(const z4sd_bincode* code, int target,
                                                     z4sd_bincode** out);

Z4SD_API z4sd_status z4sd_bincode_is_extremal(const z4sd_bincode* code, int* out);
Z4SD_API z4sd_status z4sd_bincode_is_s_extremal(const z4sd_bincode* code, int* out);

/* ---- numeric bounds ---- */

Z4SD_API z4sd_status z4sd_lee_upper_bound(uint32_t n, uint32_t* out);
/* type: 1 = Type I, 2 = Type II */
Z4SD_API z4sd_status z4sd_euclidean_upper_bound(uint32_t n, int type, uint32_t* out);
Z4SD_API z4sd_status z4sd_binary_sd_upper_bound(uint32_t n, uint32_t* out);

/* ---- certificate checkers ---- */

/* Residue-extremality certificate for self-dual codes of length 24k with
 * minimum Lee weight 8k+2 or 8k+4, and length 24k+8 with 8k+6 or 8k+8.
 * d_lee_exact = 0 records the weight as externally established. */
Z4SD_API z4sd_status z4sd_check_residue_extremal(const z4sd_z4code* code, uint32_t d_lee,
                                                 int d_lee_exact, uint32_t threads,
                                                 int* out_pass, char** out_report);

/* Certificate for binary self-dual containers of the residue at the other
 * even lengths (s-extremality or extremality of the container). */
Z4SD_API z4sd_status z4sd_check_container(const z4sd_z4code* code,
                                          const z4sd_bincode* container, uint32_t threads,
                                          int* out_pass, char** out_report);

/* ---- lift search ---- */

/* Self-dual Z4 codes with the given doubly even self-dual residue and
 * minimum Lee weight >= target. Same seed, same output list. The returned
 * array and every code in it must be freed (z4sd_z4code_array_free frees
 * both). */
Z4SD_API z4sd_status z4sd_lift_search(const z4sd_bincode* residue, uint64_t trials,
                                      uint64_t seed, uint32_t target_d_lee, uint32_t threads,
                                      z4sd_z4code*** out_codes, size_t* out_count,
                                      uint64_t* out_rejected);
Z4SD_API void z4sd_z4code_array_free(z4sd_z4code** codes, size_t count);

/* ---- catalog ---- */

/* dir holds manifest.json plus one .z4c file per record. tsv = 0 renders the
 * fixed-width table, 1 the machine-readable sidecar. all_pass receives 1
 * when every checked field matched. */
Z4SD_API z4sd_status z4sd_catalog_verify(const char* dir, const char* id_glob,
                                         uint32_t threads, int tsv, char** out_report,
                                         int* out_all_pass);
Z4SD_API z4sd_status z4sd_catalog_fingerprint_table(const char* dir, uint32_t threads,
                                                    int tsv, char** out_report,
                                                    int* out_all_pass);
Z4SD_API z4sd_status z4sd_catalog_distinct_count(const char* dir, uint32_t threads, int tsv,
                                                 char** out_report, int* out_all_pass);

#ifdef __cplusplus
}
#endif

#endif /* Z4SD_H */
