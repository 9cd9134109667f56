/* qsa - quantum sequence alignment simulator, public C API.
 *
 * All objects are opaque handles freed by their matching *_free
 * function. Functions that can fail return a qsa_status; on error a
 * thread-local message is available via qsa_last_error(). Handles
 * written through out-parameters are only valid when QSA_OK was
 * returned.
 */
#ifndef QSA_H
#define QSA_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define QSA_API __declspec(dllexport)
#else
#define QSA_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qsa_status {
    QSA_OK = 0,
    QSA_ERR_INVALID_ARGUMENT = 1,
    QSA_ERR_UNKNOWN_LETTER = 2,
    QSA_ERR_PARSE = 3,
    QSA_ERR_IO = 4,
    QSA_ERR_OUT_OF_RANGE = 5,
    QSA_ERR_ALPHABET_MISMATCH = 6,
    QSA_ERR_QUERY_TOO_LONG = 7,
    QSA_ERR_EMPTY_DATABASE = 8,
    QSA_ERR_EMPTY_TABLE = 9,
    QSA_ERR_DOMAIN = 10,
    QSA_ERR_INTERNAL = 11
} qsa_status;

typedef enum qsa_alphabet {
    QSA_ALPHABET_PROTEIN = 0, /* 20 letters, 5 bits per residue */
    QSA_ALPHABET_DNA = 1      /* 4 letters, 2 bits per residue */
} qsa_alphabet;

typedef enum qsa_hamming_mode {
    QSA_HAMMING_BIT = 0,    /* popcount of XORed residue codes */
    QSA_HAMMING_RESIDUE = 1 /* count of differing residues */
} qsa_hamming_mode;

typedef struct qsa_database qsa_database;
typedef struct qsa_query qsa_query;
typedef struct qsa_table qsa_table;
typedef struct qsa_mark qsa_mark;
typedef struct qsa_state qsa_state;
typedef struct qsa_rng qsa_rng;
typedef struct qsa_positions qsa_positions;
typedef struct qsa_bbht_result qsa_bbht_result;
typedef struct qsa_align_result qsa_align_result;

QSA_API const char* qsa_status_string(qsa_status status);
/* Message for the most recent failure on the calling thread. */
QSA_API const char* qsa_last_error(void);

/* --- alphabets ------------------------------------------------------ */

QSA_API qsa_status qsa_encode_residue(char letter, qsa_alphabet alphabet,
                                      uint8_t* code_out);
QSA_API qsa_status qsa_decode_residue(uint8_t code, qsa_alphabet alphabet,
                                      char* letter_out);
QSA_API int qsa_alphabet_bits(qsa_alphabet alphabet);
QSA_API size_t qsa_alphabet_size(qsa_alphabet alphabet);

/* --- database and query --------------------------------------------- */

QSA_API qsa_status qsa_database_load_fasta(const char* path,
                                           qsa_alphabet alphabet,
                                           qsa_database** out);
QSA_API qsa_status qsa_database_from_string(const char* residues,
                                            qsa_alphabet alphabet,
                                            qsa_database** out);
QSA_API void qsa_database_free(qsa_database* db);
QSA_API size_t qsa_database_length(const qsa_database* db);
QSA_API size_t qsa_database_domain_count(const qsa_database* db);
/* Window start positions spanning a domain boundary, written into
 * caller storage of capacity `cap`; returns the total count. */
QSA_API size_t qsa_database_crossing_windows(const qsa_database* db,
                                             size_t window_length,
                                             size_t* out, size_t cap);

QSA_API qsa_status qsa_query_from_string(const char* residues,
                                         qsa_alphabet alphabet,
                                         qsa_query** out);
QSA_API void qsa_query_free(qsa_query* q);
QSA_API size_t qsa_query_length(const qsa_query* q);

/* --- Hamming table --------------------------------------------------- */

QSA_API qsa_status qsa_table_build(const qsa_database* db, const qsa_query* q,
                                   qsa_hamming_mode mode, qsa_table** out);
/* Synthetic table from raw values (testing and tooling). */
QSA_API qsa_status qsa_table_from_values(const uint32_t* values, size_t count,
                                         qsa_hamming_mode mode,
                                         size_t window_length,
                                         int bits_per_residue,
                                         qsa_table** out);
QSA_API void qsa_table_free(qsa_table* table);
QSA_API size_t qsa_table_length(const qsa_table* table); /* n_prime */
QSA_API qsa_status qsa_table_value(const qsa_table* table, size_t i,
                                   uint32_t* out);
QSA_API size_t qsa_table_qubits_first(const qsa_table* table);  /* Q1 */
QSA_API size_t qsa_table_qubits_second(const qsa_table* table); /* Q2 */
QSA_API uint32_t qsa_table_max_distance(const qsa_table* table);

/* --- brute-force baseline -------------------------------------------- */

QSA_API qsa_status qsa_brute_min(const qsa_database* db, const qsa_query* q,
                                 qsa_hamming_mode mode, uint32_t* min_out,
                                 qsa_positions** positions_out);
QSA_API size_t qsa_positions_count(const qsa_positions* p);
QSA_API size_t qsa_positions_get(const qsa_positions* p, size_t index);
QSA_API void qsa_positions_free(qsa_positions* p);

/* --- mark predicate --------------------------------------------------- */

QSA_API qsa_status qsa_mark_create(uint32_t target_distance, qsa_mark** out);
QSA_API qsa_status qsa_mark_exclude(qsa_mark* mark, size_t position);
QSA_API void qsa_mark_free(qsa_mark* mark);
QSA_API int qsa_mark_test(const qsa_mark* mark, const qsa_table* table,
                          size_t i);
QSA_API size_t qsa_mark_count(const qsa_mark* mark, const qsa_table* table);

/* --- simulated search state ------------------------------------------ */

QSA_API qsa_status qsa_state_create(const qsa_table* table, qsa_state** out);
QSA_API void qsa_state_free(qsa_state* state);
QSA_API size_t qsa_state_dimension(const qsa_state* state);
QSA_API double qsa_state_amplitude(const qsa_state* state, size_t i);
QSA_API uint64_t qsa_state_oracle_calls(const qsa_state* state);
QSA_API double qsa_state_marked_probability(const qsa_state* state,
                                            const qsa_mark* mark);
QSA_API qsa_status qsa_state_oracle_flip(qsa_state* state,
                                         const qsa_mark* mark);
QSA_API qsa_status qsa_state_diffuse(qsa_state* state);
QSA_API qsa_status qsa_state_grover_step(qsa_state* state,
                                         const qsa_mark* mark);
QSA_API qsa_status qsa_state_evolve(qsa_state* state, const qsa_mark* mark,
                                    uint64_t k);
QSA_API qsa_status qsa_state_measure(const qsa_state* state, qsa_rng* rng,
                                     size_t* position_out);

QSA_API qsa_status qsa_rng_create(uint64_t seed, qsa_rng** out);
QSA_API void qsa_rng_free(qsa_rng* rng);

/* --- closed-form predictions ------------------------------------------ */

QSA_API qsa_status qsa_predicted_amplitude(size_t n_prime, uint64_t k,
                                           double* out);
QSA_API qsa_status qsa_optimal_k(size_t n_prime, uint64_t* out);
/* Stable (master, a, b) -> seed derivation shared with the library. */
QSA_API uint64_t qsa_derive_seed(uint64_t master, uint64_t a, uint64_t b);

/* --- BBHT search (unknown number of solutions) ------------------------ */

QSA_API qsa_status qsa_bbht_search(const qsa_table* table,
                                   const qsa_mark* mark, double lambda,
                                   double timeout_factor, uint64_t seed,
                                   qsa_bbht_result** out);
QSA_API void qsa_bbht_result_free(qsa_bbht_result* r);
QSA_API int qsa_bbht_found(const qsa_bbht_result* r);
QSA_API size_t qsa_bbht_position(const qsa_bbht_result* r);
QSA_API uint32_t qsa_bbht_distance(const qsa_bbht_result* r);
QSA_API uint64_t qsa_bbht_oracle_calls(const qsa_bbht_result* r);
QSA_API size_t qsa_bbht_trial_count(const qsa_bbht_result* r);
QSA_API qsa_status qsa_bbht_trial(const qsa_bbht_result* r, size_t index,
                                  uint64_t* j_out, size_t* measured_out,
                                  int* success_out);

/* --- iterative optimal alignment --------------------------------------- */

/* n_max < 0 selects the default cap (about one third of the window
 * mismatching). `excluded`/`n_excluded` may be NULL/0. */
QSA_API qsa_status qsa_align(const qsa_table* table, int repeats,
                             int64_t n_max, double lambda,
                             double timeout_factor, uint64_t master_seed,
                             const size_t* excluded, size_t n_excluded,
                             qsa_align_result** out);
QSA_API void qsa_align_result_free(qsa_align_result* r);
QSA_API int qsa_align_found(const qsa_align_result* r);
QSA_API size_t qsa_align_position(const qsa_align_result* r);
QSA_API uint32_t qsa_align_distance(const qsa_align_result* r);
QSA_API uint64_t qsa_align_oracle_calls(const qsa_align_result* r);
QSA_API size_t qsa_align_trace_count(const qsa_align_result* r);
QSA_API qsa_status qsa_align_trace_row(const qsa_align_result* r, size_t index,
                                       uint32_t* distance_out,
                                       int* repeats_out,
                                       uint64_t* oracle_calls_out,
                                       int* found_out);

/* Enumerate all positions at distance k (sub-loop with exclusion). */
QSA_API qsa_status qsa_enumerate(const qsa_table* table, uint32_t k,
                                 int repeats, double lambda,
                                 double timeout_factor, uint64_t master_seed,
                                 const size_t* excluded, size_t n_excluded,
                                 qsa_positions** out);

#ifdef __cplusplus
}
#endif

#endif /* QSA_H */
