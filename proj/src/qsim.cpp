#include "qsa/qsim.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <numbers>
#include <unordered_map>

#include "qsa/error.hpp"

namespace qsa {

namespace {

// Norm drift beyond this is a bug, not a numerical nuisance:
// reflections are exactly norm-preserving up to rounding.
constexpr double kNormTolerance = 1e-9;

void check_norm(const SearchState& state) {
#ifndef NDEBUG
    assert(std::abs(state.norm_squared() - 1.0) <= kNormTolerance);
#else
    (void)state;
#endif
}

} // namespace

std::size_t MarkPredicate::count_marked(const HammingTable& table) const {
    std::size_t n = 0;
    for (std::size_t i = 0; i < table.n_prime(); ++i)
        if (marks(table, i)) ++n;
    return n;
}

GroverPrediction grover_prediction(std::size_t n_prime) {
    if (n_prime < 2)
        throw Error(ErrorCode::DomainError,
                    "closed-form prediction needs n_prime >= 2");
    const double np = static_cast<double>(n_prime);
    GroverPrediction p{};
    p.theta = std::asin(2.0 * std::sqrt(np - 1.0) / np);
    p.alpha = std::acos(1.0 / std::sqrt(np));
    p.k_max = optimal_k(n_prime);
    return p;
}

double predicted_amplitude(std::size_t n_prime, std::uint64_t k) {
    if (n_prime < 2)
        throw Error(ErrorCode::DomainError,
                    "closed-form prediction needs n_prime >= 2");
    const double np = static_cast<double>(n_prime);
    const double theta = std::asin(2.0 * std::sqrt(np - 1.0) / np);
    const double alpha = std::acos(1.0 / std::sqrt(np));
    return std::cos(static_cast<double>(k) * theta - alpha);
}

std::uint64_t optimal_k(std::size_t n_prime) {
    if (n_prime < 2)
        throw Error(ErrorCode::DomainError, "optimal_k needs n_prime >= 2");
    const auto limit = static_cast<std::uint64_t>(std::ceil(
        std::numbers::pi / 2.0 * std::sqrt(static_cast<double>(n_prime))));
    double best = 0.0;
    for (std::uint64_t k = 0; k <= limit; ++k)
        best = std::max(best, std::abs(predicted_amplitude(n_prime, k)));
    // Exact ties happen (n' = 2 has probability 1/2 at every k); treat
    // values within rounding of the maximum as a plateau and pick the k
    // nearest the asymptotic (pi/4) sqrt(n').
    std::vector<std::uint64_t> plateau;
    for (std::uint64_t k = 0; k <= limit; ++k)
        if (std::abs(predicted_amplitude(n_prime, k)) >= best - 1e-12)
            plateau.push_back(k);
    if (plateau.size() == 1) return plateau.front();
    const double asymptotic = std::numbers::pi / 4.0 *
                              std::sqrt(static_cast<double>(n_prime));
    std::uint64_t best_k = plateau.front();
    for (std::uint64_t k : plateau)
        if (std::abs(static_cast<double>(k) - asymptotic) <
            std::abs(static_cast<double>(best_k) - asymptotic))
            best_k = k;
    return best_k;
}

SearchState::SearchState(const HammingTable& table) : table_(&table) {
    if (table.n_prime() == 0)
        throw Error(ErrorCode::EmptyTable, "Hamming table must be nonempty");
    amplitudes_.assign(table.n_prime(),
                       1.0 / std::sqrt(static_cast<double>(table.n_prime())));
}

double SearchState::norm_squared() const noexcept {
    double s = 0.0;
    for (double a : amplitudes_) s += a * a;
    return s;
}

double SearchState::marked_probability(const MarkPredicate& mark) const {
    double p = 0.0;
    for (std::size_t i = 0; i < amplitudes_.size(); ++i)
        if (mark.marks(*table_, i)) p += amplitudes_[i] * amplitudes_[i];
    return p;
}

void SearchState::apply_oracle_flip(const MarkPredicate& mark) {
    for (std::size_t i = 0; i < amplitudes_.size(); ++i)
        if (mark.marks(*table_, i)) amplitudes_[i] = -amplitudes_[i];
    ++oracle_calls_;
    check_norm(*this);
}

void SearchState::apply_diffusion() {
    double sum = 0.0;
    for (double a : amplitudes_) sum += a;
    const double twice_mean =
        2.0 * sum / static_cast<double>(amplitudes_.size());
    for (double& a : amplitudes_) a = twice_mean - a;
    check_norm(*this);
}

void SearchState::grover_step(const MarkPredicate& mark) {
    apply_oracle_flip(mark);
    apply_diffusion();
}

void SearchState::evolve(const MarkPredicate& mark, std::uint64_t k) {
    for (std::uint64_t s = 0; s < k; ++s) grover_step(mark);
}

std::size_t SearchState::measure(SampleRng& rng) const {
    const double u = rng.uniform01();
    double acc = 0.0;
    for (std::size_t i = 0; i < amplitudes_.size(); ++i) {
        acc += amplitudes_[i] * amplitudes_[i];
        if (u < acc) return i;
    }
    return amplitudes_.size() - 1;
}

CompressedState::CompressedState(const HammingTable& table,
                                 const MarkPredicate& mark)
    : n_prime_(table.n_prime()) {
    if (n_prime_ == 0)
        throw Error(ErrorCode::EmptyTable, "Hamming table must be nonempty");
    // Class key: (distance, excluded). Marked status follows from those.
    std::unordered_map<std::uint64_t, std::size_t> index;
    class_of_position_.resize(n_prime_);
    const double amp0 = 1.0 / std::sqrt(static_cast<double>(n_prime_));
    for (std::size_t i = 0; i < n_prime_; ++i) {
        const bool excluded = mark.excluded.count(i) != 0;
        const std::uint64_t key =
            (static_cast<std::uint64_t>(table.values[i]) << 1) |
            (excluded ? 1u : 0u);
        auto [it, inserted] = index.try_emplace(key, classes_.size());
        if (inserted)
            classes_.push_back({table.values[i], excluded,
                                mark.marks(table, i), 0, amp0});
        classes_[it->second].count += 1;
        class_of_position_[i] = it->second;
    }
}

void CompressedState::grover_step() {
    for (auto& c : classes_)
        if (c.marked) c.amplitude = -c.amplitude;
    ++oracle_calls_;
    double sum = 0.0;
    for (const auto& c : classes_)
        sum += c.amplitude * static_cast<double>(c.count);
    const double twice_mean = 2.0 * sum / static_cast<double>(n_prime_);
    for (auto& c : classes_) c.amplitude = twice_mean - c.amplitude;
}

void CompressedState::evolve(std::uint64_t k) {
    for (std::uint64_t s = 0; s < k; ++s) grover_step();
}

std::vector<double> CompressedState::expand() const {
    std::vector<double> out(n_prime_);
    for (std::size_t i = 0; i < n_prime_; ++i)
        out[i] = classes_[class_of_position_[i]].amplitude;
    return out;
}

double CompressedState::marked_probability() const {
    double p = 0.0;
    for (const auto& c : classes_)
        if (c.marked)
            p += c.amplitude * c.amplitude * static_cast<double>(c.count);
    return p;
}

} // namespace qsa
