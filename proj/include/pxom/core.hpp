#pragma once

// Solutions, deterministic random streams, and the evaluation gateway.
//
// Every fitness value computed by an optimizer goes through
// Evaluator::evaluate, which charges one FFE against the run budget.

#include "pxom/vig.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pxom {

using Bits = std::vector<std::uint8_t>;
using BitsView = std::span<const std::uint8_t>;

/// Tolerance used by all fitness comparisons.
inline constexpr double kFitnessEps = 1e-9;

inline bool fitness_less(double a, double b) { return a < b - kFitnessEps; }
inline bool fitness_equal(double a, double b) { return !fitness_less(a, b) && !fitness_less(b, a); }

std::size_t unitation(BitsView bits);

/// Number of positions at which a and b differ.
std::size_t hamming(BitsView a, BitsView b);

/// Parses '0'/'1' characters, skipping whitespace.
Bits parse_bits(std::string_view text);
std::string format_bits(BitsView bits);

struct BitsHash {
    std::size_t operator()(const Bits& bits) const noexcept;
};

/// A bit vector together with its (optional) cached fitness. Any change to
/// the bits drops the cache.
class Solution {
public:
    Solution() = default;
    explicit Solution(std::size_t n) : bits_(n, 0) {}
    explicit Solution(Bits bits) : bits_(std::move(bits)) {}
    static Solution parse(std::string_view text) { return Solution(parse_bits(text)); }

    std::size_t size() const { return bits_.size(); }
    const Bits& bits() const { return bits_; }
    std::uint8_t operator[](std::size_t i) const { return bits_[i]; }

    void set(std::size_t i, std::uint8_t value);
    void flip(std::size_t i);
    /// Copies donor genes at the given positions.
    void copy_genes(const Solution& donor, std::span<const std::size_t> positions);

    const std::optional<double>& fitness() const { return fitness_; }
    bool evaluated() const { return fitness_.has_value(); }
    double fitness_or_throw() const;

    /// Re-attaches a value previously returned by Evaluator::evaluate for
    /// exactly these bits.
    void restore_fitness(double value) { fitness_ = value; }

    std::string to_string() const { return format_bits(bits_); }

    /// Genotype equality; the cache is not compared.
    friend bool operator==(const Solution& a, const Solution& b) { return a.bits_ == b.bits_; }

private:
    Bits bits_;
    std::optional<double> fitness_;
};

/// xoshiro256** seeded through splitmix64. Child streams are derived from
/// the seed (not the state), so drawing from one component never shifts the
/// draws of another.
class Rng {
public:
    using result_type = std::uint64_t;

    explicit Rng(std::uint64_t seed = 0);

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }
    result_type operator()() { return next(); }

    std::uint64_t seed() const { return seed_; }
    std::uint64_t next();
    /// Uniform integer in [0, bound). bound must be positive.
    std::uint64_t below(std::uint64_t bound);
    /// Uniform double in [0, 1).
    double uniform();
    bool coin() { return (next() >> 63) != 0; }

    Rng split(std::uint64_t tag) const;

    template <class T>
    void shuffle(std::vector<T>& items)
    {
        for (std::size_t i = items.size(); i > 1; --i) {
            std::swap(items[i - 1], items[below(i)]);
        }
    }

    Bits random_bits(std::size_t n);
    std::vector<std::size_t> permutation(std::size_t n);

private:
    std::uint64_t seed_;
    std::uint64_t s_[4];
};

/// Evaluable pseudo-boolean function. Implementations are immutable after
/// construction and safe to share across threads.
class Problem {
public:
    virtual ~Problem() = default;

    virtual std::size_t size() const = 0;
    virtual double value(BitsView x) const = 0;
    virtual std::string name() const = 0;

    /// Known global optimum value, if any.
    virtual std::optional<double> optimum() const { return std::nullopt; }
    /// Ground-truth interaction graph of the (noise-free) structure, if known.
    virtual std::optional<Vig> interaction_graph() const { return std::nullopt; }
    /// Value of the best deceptive (non-global) attractor, if known.
    virtual std::optional<double> attractor_value() const { return std::nullopt; }
    /// Expected value of a uniformly random solution, if known in closed form.
    virtual std::optional<double> random_mean() const { return std::nullopt; }
};

/// Thrown by Evaluator::evaluate when no evaluation is left. Optimizers let
/// it unwind to their run loop.
class BudgetExhausted : public std::runtime_error {
public:
    BudgetExhausted() : std::runtime_error("evaluation budget exhausted") {}
};

/// Fitness evaluation counter. `used` never decreases and never exceeds
/// `limit`.
class EvalBudget {
public:
    explicit EvalBudget(std::uint64_t limit) : limit_(limit) {}

    std::uint64_t used() const { return used_; }
    std::uint64_t limit() const { return limit_; }
    bool exhausted() const { return used_ >= limit_; }
    void charge();
    /// Lowers the limit to the current usage; further charges fail.
    void close() { limit_ = used_; }

private:
    std::uint64_t used_ = 0;
    std::uint64_t limit_;
};

class Evaluator {
public:
    using Trace = std::function<void(std::uint64_t ffe, double best)>;

    /// When stop_at_optimum is set and the problem has a known optimum, the
    /// budget closes right after the evaluation that reaches it.
    Evaluator(const Problem& problem, std::uint64_t limit, bool stop_at_optimum = true);

    /// Computes f(s), caches it in s and charges one FFE.
    double evaluate(Solution& s);

    const Problem& problem() const { return problem_; }
    std::size_t size() const { return problem_.size(); }
    const EvalBudget& budget() const { return budget_; }
    std::uint64_t used() const { return budget_.used(); }
    bool exhausted() const { return budget_.exhausted(); }

    std::optional<double> best_fitness() const { return best_; }
    const Bits& best_bits() const { return best_bits_; }
    bool solved() const { return ffe_at_optimum_.has_value(); }
    std::optional<std::uint64_t> ffe_at_optimum() const { return ffe_at_optimum_; }

    /// Called whenever the best-so-far fitness improves.
    void set_trace(Trace trace) { trace_ = std::move(trace); }

private:
    const Problem& problem_;
    EvalBudget budget_;
    bool stop_at_optimum_;
    std::optional<double> best_;
    Bits best_bits_;
    std::optional<std::uint64_t> ffe_at_optimum_;
    Trace trace_;
};

} // namespace pxom
