#ifndef QSA_QSIM_HPP
#define QSA_QSIM_HPP

#include <cstdint>
#include <unordered_set>
#include <vector>

#include "qsa/hamming.hpp"
#include "qsa/rng.hpp"

namespace qsa {

/// Position i is marked iff T[i] == target_distance and i is not excluded.
struct MarkPredicate {
    std::uint32_t target_distance = 0;
    std::unordered_set<std::size_t> excluded;

    bool marks(const HammingTable& table, std::size_t i) const {
        return table.values[i] == target_distance && !excluded.count(i);
    }

    std::size_t count_marked(const HammingTable& table) const;
};

/// Rotation angle, initial offset, and peak iteration count for the
/// single-target closed form: sin(theta) = 2*sqrt(n'-1)/n',
/// cos(alpha) = 1/sqrt(n'), amplitude after k steps = cos(k*theta - alpha).
struct GroverPrediction {
    double theta;
    double alpha;
    std::uint64_t k_max;
};

GroverPrediction grover_prediction(std::size_t n_prime);
double predicted_amplitude(std::size_t n_prime, std::uint64_t k);

/// Smallest k maximizing |predicted_amplitude(n_prime, k)| over
/// k in [0, ceil((pi/2) * sqrt(n_prime))].
std::uint64_t optimal_k(std::size_t n_prime);

/// Real amplitude vector over the N-m+1 joint basis states. The Grover
/// dynamics close on this span: the oracle is diagonal on it and the
/// diffusion reflects about a vector inside it, so the simulation is
/// exact without a 2^(Q1+Q2) state vector.
class SearchState {
public:
    explicit SearchState(const HammingTable& table);

    const HammingTable& table() const noexcept { return *table_; }
    std::size_t dimension() const noexcept { return amplitudes_.size(); }
    const std::vector<double>& amplitudes() const noexcept {
        return amplitudes_;
    }
    double amplitude(std::size_t i) const { return amplitudes_.at(i); }
    std::uint64_t oracle_calls() const noexcept { return oracle_calls_; }

    double norm_squared() const noexcept;
    double marked_probability(const MarkPredicate& mark) const;

    /// Phase flip on marked positions; counts one oracle query.
    void apply_oracle_flip(const MarkPredicate& mark);

    /// Inversion about the average amplitude (-I_H).
    void apply_diffusion();

    /// One Grover iteration: U = -I_H * I_S.
    void grover_step(const MarkPredicate& mark);

    void evolve(const MarkPredicate& mark, std::uint64_t k);

    /// Sample a position with probability amplitude^2 by an inverse-CDF
    /// walk. The physical measurement collapses the state; callers
    /// restart from a fresh uniform state for subsequent searches.
    std::size_t measure(SampleRng& rng) const;

private:
    std::vector<double> amplitudes_;
    const HammingTable* table_;
    std::uint64_t oracle_calls_ = 0;
};

/// Exact compressed evolution: positions with equal (T[i], excluded)
/// share one amplitude at every step, so one representative per class
/// suffices. The dense SearchState is the oracle for this mode.
class CompressedState {
public:
    CompressedState(const HammingTable& table, const MarkPredicate& mark);

    std::size_t class_count() const noexcept { return classes_.size(); }
    std::uint64_t oracle_calls() const noexcept { return oracle_calls_; }

    void grover_step();
    void evolve(std::uint64_t k);

    /// Expand back to the dense per-position amplitude vector.
    std::vector<double> expand() const;

    double marked_probability() const;

private:
    struct AmplitudeClass {
        std::uint32_t distance;
        bool excluded;
        bool marked;
        std::size_t count;
        double amplitude;
    };

    std::vector<AmplitudeClass> classes_;
    std::vector<std::size_t> class_of_position_;
    std::size_t n_prime_;
    std::uint64_t oracle_calls_ = 0;
};

} // namespace qsa

#endif
