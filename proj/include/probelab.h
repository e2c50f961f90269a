#ifndef PROBELAB_H
#define PROBELAB_H

/* C interface to the probing-scheme library: hash-family sampling, the two
 * open-addressing tables, analytic bound evaluators, and the experiment
 * drivers. All functions return a status code; `probelab_last_error` holds
 * a message for the most recent failure on the calling thread. */

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
    PROBELAB_OK = 0,
    PROBELAB_ERR_INVALID_ARGUMENT = 1, /* malformed input or config */
    PROBELAB_ERR_DOMAIN = 2,           /* parameter outside a formula's domain */
    PROBELAB_ERR_CAPACITY = 3,         /* table cannot take another key */
    PROBELAB_ERR_DUPLICATE_KEY = 4,    /* key already stored */
    PROBELAB_ERR_NO_PRIME = 5,         /* prime search exhausted its window */
    PROBELAB_ERR_IO = 6,               /* file unreadable or unwritable */
    PROBELAB_ERR_VERIFICATION = 7,     /* a verify suite found a violation */
    PROBELAB_ERR_INTERNAL = 8
} probelab_status;

/* Message for the last failing call on this thread; empty string if none. */
const char* probelab_last_error(void);

/* Frees strings returned through char** out-parameters. */
void probelab_string_free(char* s);

/* ---- hash functions ---------------------------------------------------- */

typedef struct probelab_hash probelab_hash;

/* family: "poly" (k in 1..5), "cw", or "star" (k must be 2 for the latter
 * two). p must be a prime below 2^31, r the table size, 1 <= r <= p. */
probelab_status probelab_hash_sample(const char* family, uint32_t k, uint64_t p,
                                     uint32_t r, uint64_t seed,
                                     probelab_hash** out);

/* Round-trips the canonical text form "family,k,p,r,<params...>". */
probelab_status probelab_hash_parse(const char* text, probelab_hash** out);
probelab_status probelab_hash_serialize(const probelab_hash* h, char** out);

probelab_status probelab_hash_eval(const probelab_hash* h, uint64_t x,
                                   uint32_t* out);
void probelab_hash_free(probelab_hash* h);

/* ---- tables ------------------------------------------------------------ */

typedef struct probelab_table probelab_table;

probelab_status probelab_table_create_linear(uint32_t r, probelab_table** out);
/* traversal: "bidirectional" or "xor"; r must be a power of two. */
probelab_status probelab_table_create_blocked(uint32_t r, const char* traversal,
                                              probelab_table** out);

/* probes (slots inspected) is optional; pass NULL to discard it. */
probelab_status probelab_table_insert(probelab_table* t, uint64_t key,
                                      uint32_t home, uint64_t* probes);
probelab_status probelab_table_search(const probelab_table* t, uint64_t key,
                                      uint32_t home, int* found,
                                      uint64_t* probes);
/* Blocked tables only; absent keys cost an unsuccessful search. */
probelab_status probelab_table_erase(probelab_table* t, uint64_t key,
                                     uint32_t home, uint64_t* probes);

probelab_status probelab_table_size(const probelab_table* t, uint32_t* out);
/* Sum of 1 + displacement over stored keys; linear tables only. */
probelab_status probelab_table_total_cost(const probelab_table* t, uint64_t* out);
void probelab_table_free(probelab_table* t);

/* ---- analytic bounds --------------------------------------------------- */

/* out[0] = T(alpha, eps); out[1..4] = expected-cost bounds for unsuccessful
 * search, insertion, deletion, successful search; out[5] = the
 * full-independence unsuccessful-search reference value. */
probelab_status probelab_bounds_row(double alpha, double eps, double out[6]);

/* Successful-search bound with explicit constants, alpha >= 0.8 only. */
probelab_status probelab_bounds_high_load(double alpha, double eps, double* out);

/* ---- experiment drivers ------------------------------------------------ */

/* Runs the experiment described by the JSON config file and writes the
 * result CSV ("-" for stdout). */
probelab_status probelab_experiment_run(const char* config_path,
                                        const char* csv_path);

/* Adversarial insertion-cost measurement at table size 2^log_r (rounded to
 * the construction's prime); per-trial CSV rows r,trial,a,m,total_steps. */
probelab_status probelab_adversary_run(uint32_t log_r, uint32_t trials,
                                       const char* family, uint64_t seed,
                                       const char* csv_path);

/* Runs one verification suite ("moments", "lemma2", "pairwise",
 * "differential"). Returns PROBELAB_OK on pass, PROBELAB_ERR_VERIFICATION on
 * a violation; *detail (optional) receives a summary either way. */
probelab_status probelab_verify(const char* suite, char** detail);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* PROBELAB_H */
