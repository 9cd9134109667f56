// qsa command-line tool. Talks to the simulator exclusively through
// the public C API in qsa.h.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qsa.h"

namespace {

constexpr int kExitSuccess = 0;
constexpr int kExitSearchFailure = 1;
constexpr int kExitUsage = 2;

constexpr double kPi = 3.14159265358979323846;

struct CommonOptions {
    std::string db_path;
    std::string db_seq;
    std::string query;
    std::string query_file;
    std::string alphabet = "protein";
    std::string mode = "bit";
    std::string output;
    std::string format = "text";
    std::uint64_t seed = 0;
    bool seed_given = false;
    bool exclude_crossing = false;
};

struct Deleters {
    void operator()(qsa_database* p) const { qsa_database_free(p); }
    void operator()(qsa_query* p) const { qsa_query_free(p); }
    void operator()(qsa_table* p) const { qsa_table_free(p); }
    void operator()(qsa_mark* p) const { qsa_mark_free(p); }
    void operator()(qsa_state* p) const { qsa_state_free(p); }
    void operator()(qsa_rng* p) const { qsa_rng_free(p); }
    void operator()(qsa_positions* p) const { qsa_positions_free(p); }
    void operator()(qsa_bbht_result* p) const { qsa_bbht_result_free(p); }
    void operator()(qsa_align_result* p) const { qsa_align_result_free(p); }
};

template <typename T>
using Handle = std::unique_ptr<T, Deleters>;

[[noreturn]] void die(qsa_status status) {
    std::cerr << "error: " << qsa_status_string(status) << ": "
              << qsa_last_error() << "\n";
    std::exit(kExitUsage);
}

void check(qsa_status status) {
    if (status != QSA_OK) die(status);
}

qsa_alphabet parse_alphabet(const std::string& s) {
    if (s == "protein") return QSA_ALPHABET_PROTEIN;
    if (s == "dna") return QSA_ALPHABET_DNA;
    std::cerr << "error: unknown alphabet '" << s << "'\n";
    std::exit(kExitUsage);
}

qsa_hamming_mode parse_mode(const std::string& s) {
    if (s == "bit") return QSA_HAMMING_BIT;
    if (s == "residue") return QSA_HAMMING_RESIDUE;
    std::cerr << "error: unknown hamming mode '" << s << "'\n";
    std::exit(kExitUsage);
}

std::uint64_t effective_seed(const CommonOptions& opts) {
    if (opts.seed_given) return opts.seed;
    if (const char* env = std::getenv("QSA_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            std::cerr << "error: QSA_SEED is not an integer: " << env << "\n";
            std::exit(kExitUsage);
        }
    }
    return 0;
}

std::string read_query_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "error: cannot open query file: " << path << "\n";
        std::exit(kExitUsage);
    }
    std::string line, seq;
    while (std::getline(in, line)) {
        if (!line.empty() && line[0] == '>') continue;
        for (char c : line)
            if (!std::isspace(static_cast<unsigned char>(c))) seq.push_back(c);
    }
    return seq;
}

Handle<qsa_database> open_database(const CommonOptions& opts,
                                   qsa_alphabet alphabet) {
    qsa_database* db = nullptr;
    if (!opts.db_path.empty())
        check(qsa_database_load_fasta(opts.db_path.c_str(), alphabet, &db));
    else if (!opts.db_seq.empty())
        check(qsa_database_from_string(opts.db_seq.c_str(), alphabet, &db));
    else {
        std::cerr << "error: one of --db or --db-seq is required\n";
        std::exit(kExitUsage);
    }
    return Handle<qsa_database>(db);
}

Handle<qsa_query> open_query(const CommonOptions& opts,
                             qsa_alphabet alphabet) {
    std::string seq = opts.query;
    if (seq.empty() && !opts.query_file.empty())
        seq = read_query_file(opts.query_file);
    if (seq.empty()) {
        std::cerr << "error: one of --query or --query-file is required\n";
        std::exit(kExitUsage);
    }
    qsa_query* q = nullptr;
    check(qsa_query_from_string(seq.c_str(), alphabet, &q));
    return Handle<qsa_query>(q);
}

Handle<qsa_mark> make_mark(const CommonOptions& opts, const qsa_database* db,
                           const qsa_query* query, std::uint32_t distance) {
    qsa_mark* mark = nullptr;
    check(qsa_mark_create(distance, &mark));
    Handle<qsa_mark> handle(mark);
    if (opts.exclude_crossing) {
        const std::size_t m = qsa_query_length(query);
        const std::size_t n = qsa_database_crossing_windows(db, m, nullptr, 0);
        std::vector<std::size_t> crossing(n);
        qsa_database_crossing_windows(db, m, crossing.data(), n);
        for (std::size_t pos : crossing) check(qsa_mark_exclude(mark, pos));
    }
    return handle;
}

void write_text(const std::string& output, const std::string& text) {
    if (output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(output, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot write output file: " << output << "\n";
        std::exit(kExitUsage);
    }
    out << text;
}

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

// --- exact -----------------------------------------------------------

int cmd_exact(const CommonOptions& opts) {
    const qsa_alphabet alphabet = parse_alphabet(opts.alphabet);
    const qsa_hamming_mode mode = parse_mode(opts.mode);
    auto db = open_database(opts, alphabet);
    auto query = open_query(opts, alphabet);

    qsa_table* table_raw = nullptr;
    check(qsa_table_build(db.get(), query.get(), mode, &table_raw));
    Handle<qsa_table> table(table_raw);
    const std::size_t n_prime = qsa_table_length(table.get());

    auto mark = make_mark(opts, db.get(), query.get(), 0);

    std::uint64_t k_max = 0;
    if (n_prime >= 2) check(qsa_optimal_k(n_prime, &k_max));

    qsa_state* state_raw = nullptr;
    check(qsa_state_create(table.get(), &state_raw));
    Handle<qsa_state> state(state_raw);
    check(qsa_state_evolve(state.get(), mark.get(), k_max));

    qsa_rng* rng_raw = nullptr;
    check(qsa_rng_create(effective_seed(opts), &rng_raw));
    Handle<qsa_rng> rng(rng_raw);

    std::size_t measured = 0;
    check(qsa_state_measure(state.get(), rng.get(), &measured));

    std::uint32_t measured_distance = 0;
    check(qsa_table_value(table.get(), measured, &measured_distance));
    const bool verified = qsa_mark_test(mark.get(), table.get(), measured) != 0;

    double predicted = 0.0;
    const std::size_t n_marked = qsa_mark_count(mark.get(), table.get());
    if (n_marked > 0 && n_prime >= 1) {
        const double theta = std::asin(std::sqrt(
            static_cast<double>(n_marked) / static_cast<double>(n_prime)));
        const double s = std::sin((2.0 * static_cast<double>(k_max) + 1.0) *
                                  theta);
        predicted = s * s;
    }

    std::ostringstream out;
    out << "windows (n_prime): " << n_prime << "\n"
        << "register qubits: Q1=" << qsa_table_qubits_first(table.get())
        << " Q2=" << qsa_table_qubits_second(table.get()) << "\n"
        << "grover iterations (k_max): " << k_max << "\n"
        << "predicted success probability: " << fmt_double(predicted) << "\n"
        << "measured position: " << measured << "\n"
        << "measured distance T[i]: " << measured_distance << "\n"
        << "verified exact match: " << (verified ? "yes" : "no") << "\n";
    write_text(opts.output, out.str());
    return verified ? kExitSuccess : kExitSearchFailure;
}

// --- align -----------------------------------------------------------

int cmd_align(const CommonOptions& opts, int repeats, std::int64_t n_max,
              double lambda, double timeout_factor, bool enumerate_all) {
    const qsa_alphabet alphabet = parse_alphabet(opts.alphabet);
    const qsa_hamming_mode mode = parse_mode(opts.mode);
    auto db = open_database(opts, alphabet);
    auto query = open_query(opts, alphabet);

    qsa_table* table_raw = nullptr;
    check(qsa_table_build(db.get(), query.get(), mode, &table_raw));
    Handle<qsa_table> table(table_raw);

    std::vector<std::size_t> excluded;
    if (opts.exclude_crossing) {
        const std::size_t m = qsa_query_length(query.get());
        const std::size_t n =
            qsa_database_crossing_windows(db.get(), m, nullptr, 0);
        excluded.resize(n);
        qsa_database_crossing_windows(db.get(), m, excluded.data(), n);
    }

    const std::uint64_t seed = effective_seed(opts);
    qsa_align_result* result_raw = nullptr;
    check(qsa_align(table.get(), repeats, n_max, lambda, timeout_factor, seed,
                    excluded.empty() ? nullptr : excluded.data(),
                    excluded.size(), &result_raw));
    Handle<qsa_align_result> result(result_raw);

    const bool found = qsa_align_found(result.get()) != 0;

    std::ostringstream out;
    out << "status: " << (found ? "found" : "exhausted-n-max") << "\n";
    if (found) {
        const std::size_t pos = qsa_align_position(result.get());
        const std::uint32_t dist = qsa_align_distance(result.get());
        // Soundness gate: re-verify against the classical table.
        std::uint32_t check_value = 0;
        check(qsa_table_value(table.get(), pos, &check_value));
        if (check_value != dist) {
            std::cerr << "error: internal verification failed\n";
            return kExitUsage;
        }
        out << "position: " << pos << "\n"
            << "distance: " << dist << "\n";
    }
    out << "oracle calls total: " << qsa_align_oracle_calls(result.get())
        << "\n"
        << "per-level trace (n, repeats, oracle_calls, found):\n";
    for (std::size_t i = 0; i < qsa_align_trace_count(result.get()); ++i) {
        std::uint32_t n = 0;
        int reps = 0, row_found = 0;
        std::uint64_t calls = 0;
        check(qsa_align_trace_row(result.get(), i, &n, &reps, &calls,
                                  &row_found));
        out << "  " << n << " " << reps << " " << calls << " "
            << (row_found ? "yes" : "no") << "\n";
    }

    if (enumerate_all && found) {
        const std::uint32_t dist = qsa_align_distance(result.get());
        std::vector<std::size_t> already{qsa_align_position(result.get())};
        qsa_positions* all_raw = nullptr;
        check(qsa_enumerate(table.get(), dist, repeats, lambda, timeout_factor,
                            seed, already.data(), already.size(), &all_raw));
        Handle<qsa_positions> all(all_raw);
        out << "all positions at distance " << dist << ":";
        for (std::size_t i = 0; i < qsa_positions_count(all.get()); ++i) {
            const std::size_t pos = qsa_positions_get(all.get(), i);
            std::uint32_t v = 0;
            check(qsa_table_value(table.get(), pos, &v));
            if (v != dist) {
                std::cerr << "error: internal verification failed\n";
                return kExitUsage;
            }
            out << " " << pos;
        }
        out << "\n";
    }
    write_text(opts.output, out.str());
    return found ? kExitSuccess : kExitSearchFailure;
}

// --- trace -----------------------------------------------------------

int cmd_trace(const CommonOptions& opts, std::int64_t k_limit,
              std::uint32_t distance) {
    const qsa_alphabet alphabet = parse_alphabet(opts.alphabet);
    const qsa_hamming_mode mode = parse_mode(opts.mode);
    auto db = open_database(opts, alphabet);
    auto query = open_query(opts, alphabet);

    qsa_table* table_raw = nullptr;
    check(qsa_table_build(db.get(), query.get(), mode, &table_raw));
    Handle<qsa_table> table(table_raw);
    const std::size_t n_prime = qsa_table_length(table.get());

    auto mark = make_mark(opts, db.get(), query.get(), distance);
    const std::size_t n_marked = qsa_mark_count(mark.get(), table.get());

    std::uint64_t k_max = 1;
    if (n_prime >= 2) check(qsa_optimal_k(n_prime, &k_max));
    const std::uint64_t last_k =
        k_limit >= 0 ? static_cast<std::uint64_t>(k_limit) : 3 * k_max;

    const double theta =
        n_marked > 0 ? std::asin(std::sqrt(static_cast<double>(n_marked) /
                                           static_cast<double>(n_prime)))
                     : 0.0;

    qsa_state* state_raw = nullptr;
    check(qsa_state_create(table.get(), &state_raw));
    Handle<qsa_state> state(state_raw);

    std::ostringstream out;
    if (opts.format == "json") {
        nlohmann::json rows = nlohmann::json::array();
        for (std::uint64_t k = 0; k <= last_k; ++k) {
            const double simulated =
                qsa_state_marked_probability(state.get(), mark.get());
            double predicted = 0.0;
            if (n_marked > 0) {
                const double s =
                    std::sin((2.0 * static_cast<double>(k) + 1.0) * theta);
                predicted = s * s;
            }
            rows.push_back({{"k", k},
                            {"simulated", simulated},
                            {"predicted", predicted}});
            if (k < last_k)
                check(qsa_state_grover_step(state.get(), mark.get()));
        }
        out << rows.dump(2) << "\n";
    } else {
        out << "k,simulated,predicted\n";
        for (std::uint64_t k = 0; k <= last_k; ++k) {
            const double simulated =
                qsa_state_marked_probability(state.get(), mark.get());
            double predicted = 0.0;
            if (n_marked > 0) {
                const double s =
                    std::sin((2.0 * static_cast<double>(k) + 1.0) * theta);
                predicted = s * s;
            }
            out << k << "," << fmt_double(simulated) << ","
                << fmt_double(predicted) << "\n";
            if (k < last_k)
                check(qsa_state_grover_step(state.get(), mark.get()));
        }
    }
    write_text(opts.output, out.str());
    return kExitSuccess;
}

// --- stats -----------------------------------------------------------

int cmd_stats(const CommonOptions& opts, int trials, const std::string& algo,
              std::uint32_t distance, int repeats, std::int64_t n_max,
              double lambda, double timeout_factor) {
    const qsa_alphabet alphabet = parse_alphabet(opts.alphabet);
    const qsa_hamming_mode mode = parse_mode(opts.mode);
    auto db = open_database(opts, alphabet);
    auto query = open_query(opts, alphabet);

    qsa_table* table_raw = nullptr;
    check(qsa_table_build(db.get(), query.get(), mode, &table_raw));
    Handle<qsa_table> table(table_raw);
    const std::size_t n_prime = qsa_table_length(table.get());

    auto mark = make_mark(opts, db.get(), query.get(), distance);
    const std::size_t n_marked = qsa_mark_count(mark.get(), table.get());

    const std::uint64_t master = effective_seed(opts);
    std::size_t successes = 0;
    std::vector<std::uint64_t> calls;
    calls.reserve(static_cast<std::size_t>(trials));

    for (int t = 0; t < trials; ++t) {
        const std::uint64_t seed =
            qsa_derive_seed(master, static_cast<std::uint64_t>(t),
                            algo == "align" ? 1 : 0);
        if (algo == "align") {
            qsa_align_result* r = nullptr;
            check(qsa_align(table.get(), repeats, n_max, lambda,
                            timeout_factor, seed, nullptr, 0, &r));
            Handle<qsa_align_result> result(r);
            if (qsa_align_found(result.get())) ++successes;
            calls.push_back(qsa_align_oracle_calls(result.get()));
        } else {
            qsa_bbht_result* r = nullptr;
            check(qsa_bbht_search(table.get(), mark.get(), lambda,
                                  timeout_factor, seed, &r));
            Handle<qsa_bbht_result> result(r);
            if (qsa_bbht_found(result.get())) ++successes;
            calls.push_back(qsa_bbht_oracle_calls(result.get()));
        }
    }

    std::sort(calls.begin(), calls.end());
    double mean = 0.0;
    for (auto c : calls) mean += static_cast<double>(c);
    mean /= calls.empty() ? 1.0 : static_cast<double>(calls.size());
    const std::uint64_t median = calls.empty() ? 0 : calls[calls.size() / 2];
    const std::uint64_t p95 =
        calls.empty() ? 0 : calls[std::min(calls.size() - 1,
                                           calls.size() * 95 / 100)];
    const double success_rate =
        trials > 0 ? static_cast<double>(successes) /
                         static_cast<double>(trials)
                   : 0.0;
    const double sqrt_np = std::sqrt(static_cast<double>(n_prime));
    const double lower_bound =
        n_marked > 0 ? std::sin(kPi / 8.0) *
                           std::sqrt(static_cast<double>(n_prime) /
                                     static_cast<double>(n_marked))
                     : 0.0;
    const double budget = std::ceil(timeout_factor * sqrt_np);

    std::ostringstream out;
    if (opts.format == "json") {
        nlohmann::json j{{"algo", algo},
                         {"trials", trials},
                         {"n_prime", n_prime},
                         {"marked", n_marked},
                         {"success_rate", success_rate},
                         {"mean_oracle_calls", mean},
                         {"median_oracle_calls", median},
                         {"p95_oracle_calls", p95},
                         {"reference_lower_bound", lower_bound},
                         {"timeout_budget", budget}};
        out << j.dump(2) << "\n";
    } else if (opts.format == "csv") {
        out << "algo,trials,n_prime,marked,success_rate,mean,median,p95,"
               "lower_bound,timeout_budget\n"
            << algo << "," << trials << "," << n_prime << "," << n_marked
            << "," << fmt_double(success_rate) << "," << fmt_double(mean)
            << "," << median << "," << p95 << "," << fmt_double(lower_bound)
            << "," << fmt_double(budget) << "\n";
    } else {
        out << "algo: " << algo << "\n"
            << "trials: " << trials << "\n"
            << "windows (n_prime): " << n_prime << "\n"
            << "marked positions: " << n_marked << "\n"
            << "success rate: " << fmt_double(success_rate) << "\n"
            << "oracle calls mean/median/p95: " << fmt_double(mean) << "/"
            << median << "/" << p95 << "\n"
            << "reference lower bound sin(pi/8)*sqrt(n'/Nt): "
            << fmt_double(lower_bound) << "\n"
            << "timeout budget per run: " << fmt_double(budget) << "\n";
    }
    write_text(opts.output, out.str());
    return kExitSuccess;
}

// --- encode ----------------------------------------------------------

int cmd_encode(const CommonOptions& opts) {
    const qsa_alphabet alphabet = parse_alphabet(opts.alphabet);
    auto query = open_query(opts, alphabet);
    const int bits = qsa_alphabet_bits(alphabet);
    const std::size_t m = qsa_query_length(query.get());

    // Re-encode from the original text so each letter can be shown.
    std::string seq = opts.query;
    if (seq.empty()) seq = read_query_file(opts.query_file);

    std::ostringstream out;
    out << "letter code bits\n";
    for (char c : seq) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        std::uint8_t code = 0;
        check(qsa_encode_residue(c, alphabet, &code));
        out << c << " " << static_cast<int>(code) << " ";
        for (int b = bits - 1; b >= 0; --b) out << ((code >> b) & 1);
        out << "\n";
    }
    out << "residues: " << m << "\n"
        << "first-register qubits (Q1): " << bits * m << "\n";
    write_text(opts.output, out.str());
    return kExitSuccess;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Simulated quantum search over residue databases: Grover "
                 "amplitude amplification and BBHT-based optimal alignment "
                 "against Hamming-distance oracles, with classical "
                 "verification of every result."};
    app.require_subcommand(1);

    CommonOptions opts;
    int repeats = 3;
    std::int64_t n_max = -1;
    double lambda = 1.2;
    double timeout_factor = 4.0;
    bool enumerate_all = false;
    std::int64_t k_limit = -1;
    std::uint32_t distance = 0;
    int trials = 100;
    std::string algo = "bbht";

    auto add_common = [&](CLI::App* sub, bool needs_query = true) {
        sub->add_option("--db", opts.db_path, "FASTA database file");
        sub->add_option("--db-seq", opts.db_seq,
                        "inline database sequence (single domain)");
        if (needs_query) {
            sub->add_option("--query", opts.query, "query sequence");
            sub->add_option("--query-file", opts.query_file,
                            "file containing the query sequence");
        }
        sub->add_option("--alphabet", opts.alphabet, "protein or dna")
            ->check(CLI::IsMember({"protein", "dna"}));
        sub->add_option("--mode", opts.mode,
                        "Hamming mode: bit or residue")
            ->check(CLI::IsMember({"bit", "residue"}));
        sub->add_option("--output,-o", opts.output, "output file");
        sub->add_option("--format", opts.format, "text, csv or json")
            ->check(CLI::IsMember({"text", "csv", "json"}));
        sub->add_option("--seed", opts.seed,
                        "PRNG seed (falls back to QSA_SEED, then 0)")
            ->trigger_on_parse()
            ->each([&](const std::string&) { opts.seed_given = true; });
        sub->add_flag("--no-domain-crossing", opts.exclude_crossing,
                      "never report windows that cross domain boundaries");
    };

    auto* exact = app.add_subcommand(
        "exact", "fixed-k Grover search for an exact match (T[i] = 0)");
    add_common(exact);

    auto* align = app.add_subcommand(
        "align", "iterative optimal alignment over rising Hamming levels");
    add_common(align);
    align->add_option("--r", repeats, "BBHT repeats per level");
    align->add_option("--n-max", n_max,
                      "maximum Hamming distance (-1 = default cap)");
    align->add_option("--lambda", lambda, "BBHT growth factor");
    align->add_option("--timeout-factor", timeout_factor,
                      "oracle-call budget factor per BBHT run");
    align->add_flag("--all", enumerate_all,
                    "enumerate every position at the found distance");

    auto* trace = app.add_subcommand(
        "trace", "emit per-step simulated and predicted success probability");
    add_common(trace);
    trace->add_option("--k-max", k_limit,
                      "last iteration to trace (-1 = 3x optimal k)");
    trace->add_option("--distance", distance, "marked Hamming distance");

    auto* stats = app.add_subcommand(
        "stats", "seeded Monte-Carlo statistics over independent runs");
    add_common(stats);
    stats->add_option("--trials", trials, "number of independent runs");
    stats->add_option("--algo", algo, "bbht or align")
        ->check(CLI::IsMember({"bbht", "align"}));
    stats->add_option("--distance", distance,
                      "marked Hamming distance (bbht only)");
    stats->add_option("--r", repeats, "repeats per level (align only)");
    stats->add_option("--n-max", n_max, "maximum distance (align only)");
    stats->add_option("--lambda", lambda, "BBHT growth factor");
    stats->add_option("--timeout-factor", timeout_factor,
                      "oracle-call budget factor per BBHT run");

    auto* encode = app.add_subcommand(
        "encode", "show the bit encoding of a sequence");
    add_common(encode);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    if (exact->parsed()) return cmd_exact(opts);
    if (align->parsed())
        return cmd_align(opts, repeats, n_max, lambda, timeout_factor,
                         enumerate_all);
    if (trace->parsed()) return cmd_trace(opts, k_limit, distance);
    if (stats->parsed())
        return cmd_stats(opts, trials, algo, distance, repeats, n_max, lambda,
                         timeout_factor);
    if (encode->parsed()) return cmd_encode(opts);
    return kExitUsage;
}
