#include "pxom/noise.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace pxom {

double shortfall(double f_true, double level) { return f_true >= level ? 0.0 : level - f_true; }

std::vector<std::size_t> draw_noise_vars(std::size_t n, double size_percent, std::uint64_t seed)
{
    if (size_percent < 0.0 || size_percent > 100.0) {
        throw std::invalid_argument("noise size percent must be within [0, 100]");
    }
    const auto count = static_cast<std::size_t>(std::llround(size_percent * static_cast<double>(n) / 100.0));
    Rng rng(seed);
    auto order = rng.permutation(n);
    order.resize(std::min(count, n));
    std::sort(order.begin(), order.end());
    return order;
}

double default_noise_level(const Problem& inner, NoiseLevelRule rule)
{
    switch (rule) {
    case NoiseLevelRule::random_mean:
        if (auto mean = inner.random_mean()) {
            return *mean;
        }
        throw std::invalid_argument(inner.name() + " has no closed-form random mean; set the noise level explicitly");
    case NoiseLevelRule::optimum_attractor_midpoint: {
        auto opt = inner.optimum();
        auto attractor = inner.attractor_value();
        if (opt && attractor) {
            return 0.5 * (*opt + *attractor);
        }
        throw std::invalid_argument(inner.name() + " has no known optimum/attractor; set the noise level explicitly");
    }
    }
    throw std::logic_error("unknown noise level rule");
}

namespace {

bool gate(const NoiseConfig& config, BitsView x)
{
    // no noise variables means no noise, not a gate that is always open
    if (config.noise_vars.empty()) {
        return false;
    }
    std::size_t u = 0;
    for (auto i : config.noise_vars) {
        u += x[i];
    }
    return u % config.modulus == 0;
}

} // namespace

double noised_value(const NoiseConfig& config, double f_true, BitsView x)
{
    return gate(config, x) ? f_true + shortfall(f_true, config.level) : f_true;
}

NoisedProblem::NoisedProblem(std::shared_ptr<const Problem> inner, NoiseConfig config)
    : inner_(std::move(inner)), config_(std::move(config))
{
    if (!inner_) {
        throw std::invalid_argument("NoisedProblem: missing inner problem");
    }
    if (config_.modulus < 1) {
        throw std::invalid_argument("NoisedProblem: modulus must be at least 1");
    }
    for (auto i : config_.noise_vars) {
        if (i >= inner_->size()) {
            throw std::invalid_argument("NoisedProblem: noise variable out of range");
        }
    }
}

double NoisedProblem::value(BitsView x) const
{
    if (x.size() != size()) {
        throw std::invalid_argument("NoisedProblem: length mismatch");
    }
    return noised_value(config_, inner_->value(x), x);
}

bool NoisedProblem::gate_open(BitsView x) const { return gate(config_, x); }

std::string NoisedProblem::name() const
{
    std::ostringstream ss;
    ss << "noised-" << inner_->name();
    return ss.str();
}

std::optional<double> NoisedProblem::optimum() const
{
    auto opt = inner_->optimum();
    // a level above the optimum would lift gated solutions past it
    if (opt && config_.level <= *opt) {
        return opt;
    }
    return std::nullopt;
}

} // namespace pxom
