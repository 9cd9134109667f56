#include "qsa.h"

#include <algorithm>
#include <cstring>
#include <string>

#include "qsa/align.hpp"
#include "qsa/bbht.hpp"
#include "qsa/error.hpp"
#include "qsa/hamming.hpp"
#include "qsa/oracle.hpp"
#include "qsa/qsim.hpp"
#include "qsa/rng.hpp"
#include "qsa/seqdb.hpp"

struct qsa_database {
    qsa::SequenceDatabase db;
};
struct qsa_query {
    qsa::QuerySequence q;
};
struct qsa_table {
    qsa::HammingTable t;
};
struct qsa_mark {
    qsa::MarkPredicate m;
};
struct qsa_state {
    qsa::SearchState s;
};
struct qsa_rng {
    qsa::SampleRng r;
};
struct qsa_positions {
    std::vector<size_t> p;
};
struct qsa_bbht_result {
    qsa::BbhtOutcome o;
};
struct qsa_align_result {
    qsa::AlignmentResult r;
};

namespace {

thread_local std::string g_last_error;

qsa_status map_code(qsa::ErrorCode code) {
    using qsa::ErrorCode;
    switch (code) {
        case ErrorCode::InvalidArgument: return QSA_ERR_INVALID_ARGUMENT;
        case ErrorCode::UnknownLetter: return QSA_ERR_UNKNOWN_LETTER;
        case ErrorCode::ParseError: return QSA_ERR_PARSE;
        case ErrorCode::IoError: return QSA_ERR_IO;
        case ErrorCode::OutOfRange: return QSA_ERR_OUT_OF_RANGE;
        case ErrorCode::AlphabetMismatch: return QSA_ERR_ALPHABET_MISMATCH;
        case ErrorCode::QueryLongerThanDatabase: return QSA_ERR_QUERY_TOO_LONG;
        case ErrorCode::EmptyDatabase: return QSA_ERR_EMPTY_DATABASE;
        case ErrorCode::EmptyTable: return QSA_ERR_EMPTY_TABLE;
        case ErrorCode::DomainError: return QSA_ERR_DOMAIN;
    }
    return QSA_ERR_INTERNAL;
}

qsa_status fail(qsa_status status, const char* message) {
    g_last_error = message;
    return status;
}

template <typename Fn>
qsa_status guarded(Fn&& fn) {
    try {
        fn();
        return QSA_OK;
    } catch (const qsa::Error& e) {
        g_last_error = e.what();
        return map_code(e.code());
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return QSA_ERR_INTERNAL;
    }
}

const qsa::Alphabet& alphabet_of(qsa_alphabet a) {
    return a == QSA_ALPHABET_PROTEIN ? qsa::Alphabet::protein()
                                     : qsa::Alphabet::dna();
}

qsa::HammingMode mode_of(qsa_hamming_mode m) {
    return m == QSA_HAMMING_BIT ? qsa::HammingMode::BitLevel
                                : qsa::HammingMode::ResidueLevel;
}

} // namespace

extern "C" {

const char* qsa_status_string(qsa_status status) {
    switch (status) {
        case QSA_OK: return "ok";
        case QSA_ERR_INVALID_ARGUMENT: return "invalid argument";
        case QSA_ERR_UNKNOWN_LETTER: return "unknown residue letter";
        case QSA_ERR_PARSE: return "parse error";
        case QSA_ERR_IO: return "I/O error";
        case QSA_ERR_OUT_OF_RANGE: return "index out of range";
        case QSA_ERR_ALPHABET_MISMATCH: return "alphabet mismatch";
        case QSA_ERR_QUERY_TOO_LONG: return "query longer than database";
        case QSA_ERR_EMPTY_DATABASE: return "empty database";
        case QSA_ERR_EMPTY_TABLE: return "empty table";
        case QSA_ERR_DOMAIN: return "domain error";
        case QSA_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

const char* qsa_last_error(void) { return g_last_error.c_str(); }

qsa_status qsa_encode_residue(char letter, qsa_alphabet alphabet,
                              uint8_t* code_out) {
    if (!code_out) return fail(QSA_ERR_INVALID_ARGUMENT, "null out pointer");
    return guarded([&] { *code_out = alphabet_of(alphabet).encode(letter); });
}

qsa_status qsa_decode_residue(uint8_t code, qsa_alphabet alphabet,
                              char* letter_out) {
    if (!letter_out) return fail(QSA_ERR_INVALID_ARGUMENT, "null out pointer");
    return guarded([&] { *letter_out = alphabet_of(alphabet).decode(code); });
}

int qsa_alphabet_bits(qsa_alphabet alphabet) {
    return alphabet_of(alphabet).bits_per_residue();
}

size_t qsa_alphabet_size(qsa_alphabet alphabet) {
    return alphabet_of(alphabet).size();
}

qsa_status qsa_database_load_fasta(const char* path, qsa_alphabet alphabet,
                                   qsa_database** out) {
    if (!path || !out)
        return fail(QSA_ERR_INVALID_ARGUMENT, "null path or out pointer");
    return guarded([&] {
        *out = new qsa_database{qsa::load_fasta(path, alphabet_of(alphabet))};
    });
}

qsa_status qsa_database_from_string(const char* residues,
                                    qsa_alphabet alphabet,
                                    qsa_database** out) {
    if (!residues || !out)
        return fail(QSA_ERR_INVALID_ARGUMENT, "null residues or out pointer");
    return guarded([&] {
        *out = new qsa_database{
            qsa::database_from_string(residues, alphabet_of(alphabet))};
    });
}

void qsa_database_free(qsa_database* db) { delete db; }

size_t qsa_database_length(const qsa_database* db) {
    return db ? db->db.size() : 0;
}

size_t qsa_database_domain_count(const qsa_database* db) {
    return db ? db->db.domain_offsets.size() : 0;
}

size_t qsa_database_crossing_windows(const qsa_database* db,
                                     size_t window_length, size_t* out,
                                     size_t cap) {
    if (!db) return 0;
    const auto crossing = qsa::crossing_windows(db->db, window_length);
    if (out) {
        const size_t n = std::min(cap, crossing.size());
        std::copy_n(crossing.begin(), n, out);
    }
    return crossing.size();
}

qsa_status qsa_query_from_string(const char* residues, qsa_alphabet alphabet,
                                 qsa_query** out) {
    if (!residues || !out)
        return fail(QSA_ERR_INVALID_ARGUMENT, "null residues or out pointer");
    return guarded([&] {
        *out = new qsa_query{
            qsa::query_from_string(residues, alphabet_of(alphabet))};
    });
}

void qsa_query_free(qsa_query* q) { delete q; }

size_t qsa_query_length(const qsa_query* q) { return q ? q->q.size() : 0; }

qsa_status qsa_table_build(const qsa_database* db, const qsa_query* q,
                           qsa_hamming_mode mode, qsa_table** out) {
    if (!db || !q || !out)
        return fail(QSA_ERR_INVALID_ARGUMENT, "null handle or out pointer");
    return guarded([&] {
        *out = new qsa_table{qsa::hamming_table(db->db, q->q, mode_of(mode))};
    });
}

qsa_status qsa_table_from_values(const uint32_t* values, size_t count,
                                 qsa_hamming_mode mode, size_t window_length,
                                 int bits_per_residue, qsa_table** out) {
    if (!values || !out)
        return fail(QSA_ERR_INVALID_ARGUMENT, "null values or out pointer");
    return guarded([&] {
        *out = new qsa_table{qsa::HammingTable::from_values(
            std::vector<uint32_t>(values, values + count), mode_of(mode),
            window_length, bits_per_residue)};
    });
}

void qsa_table_free(qsa_table* table) { delete table; }

size_t qsa_table_length(const qsa_table* table) {
    return table ? table->t.n_prime() : 0;
}

qsa_status qsa_table_value(const qsa_table* table, size_t i, uint32_t* out) {
    if (!table || !out)
        return fail(QSA_ERR_INVALID_ARGUMENT, "null handle or out pointer");
    if (i >= table->t.n_prime())
        return fail(QSA_ERR_OUT_OF_RANGE, "table index out of range");
    *out = table->t.values[i];
    return QSA_OK;
}

size_t qsa_table_qubits_first(const qsa_table* table) {
    return table ? table->t.qubits_first_register() : 0;
}

size_t qsa_table_qubits_second(const qsa_table* table) {
    return table ? table->t.qubits_second_register() : 0;
}

uint32_t qsa_table_max_distance(const qsa_table* table) {
    return table ? table->t.max_distance() : 0;
}

qsa_status qsa_brute_min(const qsa_database* db, const qsa_query* q,
                         qsa_hamming_mode mode, uint32_t* min_out,
                         qsa_positions** positions_out) {
    if (!db || !q || !min_out)
        return fail(QSA_ERR_INVALID_ARGUMENT, "null handle or out pointer");
    return guarded([&] {
        auto brute = qsa::brute_min_distance(db->db, q->q, mode_of(mode));
        *min_out = brute.min_distance;
        if (positions_out)
            *positions_out = new qsa_positions{std::move(brute.positions)};
    });
}

size_t qsa_positions_count(const qsa_positions* p) { return p ? p->p.size() : 0; }

size_t qsa_positions_get(const qsa_positions* p, size_t index) {
    return p && index < p->p.size() ? p->p[index] : static_cast<size_t>(-1);
}

void qsa_positions_free(qsa_positions* p) { delete p; }

qsa_status qsa_mark_create(uint32_t target_distance, qsa_mark** out) {
    if (!out) return fail(QSA_ERR_INVALID_ARGUMENT, "null out pointer");
    *out = new qsa_mark{qsa::MarkPredicate{target_distance, {}}};
    return QSA_OK;
}

qsa_status qsa_mark_exclude(qsa_mark* mark, size_t position) {
    if (!mark) return fail(QSA_ERR_INVALID_ARGUMENT, "null mark");
    mark->m.excluded.insert(position);
    return QSA_OK;
}

void qsa_mark_free(qsa_mark* mark) { delete mark; }

int qsa_mark_test(const qsa_mark* mark, const qsa_table* table, size_t i) {
    if (!mark || !table || i >= table->t.n_prime()) return 0;
    return mark->m.marks(table->t, i) ? 1 : 0;
}

size_t qsa_mark_count(const qsa_mark* mark, const qsa_table* table) {
    if (!mark || !table) return 0;
    return mark->m.count_marked(table->t);
}

qsa_status qsa_state_create(const qsa_table* table, qsa_state** out) {
    if (!table || !out)
        return fail(QSA_ERR_INVALID_ARGUMENT, "null handle or out pointer");
    return guarded([&] { *out = new qsa_state{qsa::SearchState(table->t)}; });
}

void qsa_state_free(qsa_state* state) { delete state; }

size_t qsa_state_dimension(const qsa_state* state) {
    return state ? state->s.dimension() : 0;
}

double qsa_state_amplitude(const qsa_state* state, size_t i) {
    return state && i < state->s.dimension() ? state->s.amplitudes()[i] : 0.0;
}

uint64_t qsa_state_oracle_calls(const qsa_state* state) {
    return state ? state->s.oracle_calls() : 0;
}

double qsa_state_marked_probability(const qsa_state* state,
                                    const qsa_mark* mark) {
    return state && mark ? state->s.marked_probability(mark->m) : 0.0;
}

qsa_status qsa_state_oracle_flip(qsa_state* state, const qsa_mark* mark) {
    if (!state || !mark)
        return fail(QSA_ERR_INVALID_ARGUMENT, "null state or mark");
    return guarded([&] { state->s.apply_oracle_flip(mark->m); });
}

qsa_status qsa_state_diffuse(qsa_state* state) {
    if (!state) return fail(QSA_ERR_INVALID_ARGUMENT, "null state");
    return guarded([&] { state->s.apply_diffusion(); });
}

qsa_status qsa_state_grover_step(qsa_state* state, const qsa_mark* mark) {
    if (!state || !mark)
        return fail(QSA_ERR_INVALID_ARGUMENT, "null state or mark");
    return guarded([&] { state->s.grover_step(mark->m); });
}

qsa_status qsa_state_evolve(qsa_state* state, const qsa_mark* mark,
                            uint64_t k) {
    if (!state || !mark)
        return fail(QSA_ERR_INVALID_ARGUMENT, "null state or mark");
    return guarded([&] { state->s.evolve(mark->m, k); });
}

qsa_status qsa_state_measure(const qsa_state* state, qsa_rng* rng,
                             size_t* position_out) {
    if (!state || !rng || !position_out)
        return fail(QSA_ERR_INVALID_ARGUMENT, "null handle or out pointer");
    return guarded([&] { *position_out = state->s.measure(rng->r); });
}

qsa_status qsa_rng_create(uint64_t seed, qsa_rng** out) {
    if (!out) return fail(QSA_ERR_INVALID_ARGUMENT, "null out pointer");
    *out = new qsa_rng{qsa::SampleRng(seed)};
    return QSA_OK;
}

void qsa_rng_free(qsa_rng* rng) { delete rng; }

qsa_status qsa_predicted_amplitude(size_t n_prime, uint64_t k, double* out) {
    if (!out) return fail(QSA_ERR_INVALID_ARGUMENT, "null out pointer");
    return guarded([&] { *out = qsa::predicted_amplitude(n_prime, k); });
}

qsa_status qsa_optimal_k(size_t n_prime, uint64_t* out) {
    if (!out) return fail(QSA_ERR_INVALID_ARGUMENT, "null out pointer");
    return guarded([&] { *out = qsa::optimal_k(n_prime); });
}

uint64_t qsa_derive_seed(uint64_t master, uint64_t a, uint64_t b) {
    return qsa::derive_seed(master, a, b);
}

qsa_status qsa_bbht_search(const qsa_table* table, const qsa_mark* mark,
                           double lambda, double timeout_factor,
                           uint64_t seed, qsa_bbht_result** out) {
    if (!table || !mark || !out)
        return fail(QSA_ERR_INVALID_ARGUMENT, "null handle or out pointer");
    return guarded([&] {
        qsa::BbhtParams params{lambda, timeout_factor, seed};
        *out = new qsa_bbht_result{
            qsa::bbht_search(table->t, mark->m, params)};
    });
}

void qsa_bbht_result_free(qsa_bbht_result* r) { delete r; }

int qsa_bbht_found(const qsa_bbht_result* r) {
    return r && r->o.found ? 1 : 0;
}

size_t qsa_bbht_position(const qsa_bbht_result* r) {
    return r && r->o.found ? r->o.found->position : static_cast<size_t>(-1);
}

uint32_t qsa_bbht_distance(const qsa_bbht_result* r) {
    return r && r->o.found ? r->o.found->distance : UINT32_MAX;
}

uint64_t qsa_bbht_oracle_calls(const qsa_bbht_result* r) {
    return r ? r->o.oracle_calls : 0;
}

size_t qsa_bbht_trial_count(const qsa_bbht_result* r) {
    return r ? r->o.trials.size() : 0;
}

qsa_status qsa_bbht_trial(const qsa_bbht_result* r, size_t index,
                          uint64_t* j_out, size_t* measured_out,
                          int* success_out) {
    if (!r || index >= r->o.trials.size())
        return fail(QSA_ERR_OUT_OF_RANGE, "trial index out of range");
    const auto& t = r->o.trials[index];
    if (j_out) *j_out = t.iterations_chosen;
    if (measured_out) *measured_out = t.measured_position;
    if (success_out) *success_out = t.success ? 1 : 0;
    return QSA_OK;
}

qsa_status qsa_align(const qsa_table* table, int repeats, int64_t n_max,
                     double lambda, double timeout_factor,
                     uint64_t master_seed, const size_t* excluded,
                     size_t n_excluded, qsa_align_result** out) {
    if (!table || !out)
        return fail(QSA_ERR_INVALID_ARGUMENT, "null handle or out pointer");
    return guarded([&] {
        qsa::AlignParams params;
        params.repeats = repeats;
        params.n_max =
            n_max < 0
                ? std::min(qsa::default_n_max(table->t.mode,
                                              table->t.window_length,
                                              table->t.bits_per_residue),
                           table->t.max_distance())
                : static_cast<uint32_t>(n_max);
        params.bbht.lambda = lambda;
        params.bbht.timeout_factor = timeout_factor;
        params.master_seed = master_seed;
        for (size_t i = 0; i < n_excluded; ++i)
            params.excluded.insert(excluded[i]);
        *out = new qsa_align_result{qsa::align_optimal(table->t, params)};
    });
}

void qsa_align_result_free(qsa_align_result* r) { delete r; }

int qsa_align_found(const qsa_align_result* r) {
    return r && r->r.status == qsa::AlignStatus::Found ? 1 : 0;
}

size_t qsa_align_position(const qsa_align_result* r) {
    return r && r->r.position ? *r->r.position : static_cast<size_t>(-1);
}

uint32_t qsa_align_distance(const qsa_align_result* r) {
    return r && r->r.distance ? *r->r.distance : UINT32_MAX;
}

uint64_t qsa_align_oracle_calls(const qsa_align_result* r) {
    return r ? r->r.oracle_calls_total : 0;
}

size_t qsa_align_trace_count(const qsa_align_result* r) {
    return r ? r->r.per_level_trace.size() : 0;
}

qsa_status qsa_align_trace_row(const qsa_align_result* r, size_t index,
                               uint32_t* distance_out, int* repeats_out,
                               uint64_t* oracle_calls_out, int* found_out) {
    if (!r || index >= r->r.per_level_trace.size())
        return fail(QSA_ERR_OUT_OF_RANGE, "trace index out of range");
    const auto& row = r->r.per_level_trace[index];
    if (distance_out) *distance_out = row.distance;
    if (repeats_out) *repeats_out = row.repeats_used;
    if (oracle_calls_out) *oracle_calls_out = row.oracle_calls;
    if (found_out) *found_out = row.found ? 1 : 0;
    return QSA_OK;
}

qsa_status qsa_enumerate(const qsa_table* table, uint32_t k, int repeats,
                         double lambda, double timeout_factor,
                         uint64_t master_seed, const size_t* excluded,
                         size_t n_excluded, qsa_positions** out) {
    if (!table || !out)
        return fail(QSA_ERR_INVALID_ARGUMENT, "null handle or out pointer");
    return guarded([&] {
        qsa::AlignParams params;
        params.repeats = repeats;
        params.n_max = std::min(k, table->t.max_distance());
        params.bbht.lambda = lambda;
        params.bbht.timeout_factor = timeout_factor;
        params.master_seed = master_seed;
        std::set<size_t> already;
        for (size_t i = 0; i < n_excluded; ++i) already.insert(excluded[i]);
        auto found = qsa::enumerate_optimal(table->t, k, params,
                                            std::move(already));
        *out = new qsa_positions{
            std::vector<size_t>(found.begin(), found.end())};
    });
}

} // extern "C"
