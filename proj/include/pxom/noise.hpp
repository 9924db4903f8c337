#pragma once

// Noise injection that hides the dependency structure of a problem.
//
// f_noised(x) = f_true(x) + shortfall(f_true(x), level) whenever the
// unitation over the noise variables is divisible by the modulus, and
// f_true(x) otherwise. Solutions at or above `level` are never changed.

#include "pxom/core.hpp"

#include <memory>

namespace pxom {

struct NoiseConfig {
    std::vector<std::size_t> noise_vars;
    double level = 0.0;
    unsigned modulus = 2;
    std::uint64_t seed = 0;
};

/// How the level is chosen when not given explicitly.
enum class NoiseLevelRule {
    /// Expected f_true of a uniformly random solution.
    random_mean,
    /// Midpoint between the known optimum and the best deceptive attractor.
    optimum_attractor_midpoint,
};

/// max(0, level - f_true).
double shortfall(double f_true, double level);

/// Draws round(size_percent * n / 100) noise variables without replacement.
std::vector<std::size_t> draw_noise_vars(std::size_t n, double size_percent, std::uint64_t seed);

/// Default level for `inner` under `rule`; throws when the problem does not
/// expose the value the rule needs.
double default_noise_level(const Problem& inner, NoiseLevelRule rule);

class NoisedProblem final : public Problem {
public:
    NoisedProblem(std::shared_ptr<const Problem> inner, NoiseConfig config);

    std::size_t size() const override { return inner_->size(); }
    double value(BitsView x) const override;
    std::string name() const override;
    std::optional<double> optimum() const override;
    /// Graph of the noise-free function; the noised one is hidden.
    std::optional<Vig> interaction_graph() const override { return inner_->interaction_graph(); }
    std::optional<double> attractor_value() const override { return inner_->attractor_value(); }

    double true_value(BitsView x) const { return inner_->value(x); }
    bool gate_open(BitsView x) const;
    const NoiseConfig& config() const { return config_; }
    const Problem& inner() const { return *inner_; }

private:
    std::shared_ptr<const Problem> inner_;
    NoiseConfig config_;
};

/// Noised evaluation of an explicit true value; exposed for tests and the
/// oracle.
double noised_value(const NoiseConfig& config, double f_true, BitsView x);

} // namespace pxom
