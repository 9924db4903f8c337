#include "pxom/oracle.hpp"

#include "pxom/dependency.hpp"

#include <bit>
#include <cmath>
#include <unordered_map>

namespace pxom {

Bits bits_of_index(std::uint64_t index, std::size_t n)
{
    Bits bits(n);
    for (std::size_t i = 0; i < n; ++i) {
        bits[i] = static_cast<std::uint8_t>((index >> (n - 1 - i)) & 1U);
    }
    return bits;
}

std::uint64_t index_of_bits(BitsView bits)
{
    std::uint64_t index = 0;
    for (auto b : bits) {
        index = (index << 1) | b;
    }
    return index;
}

std::vector<double> value_table(const Problem& problem)
{
    const std::size_t n = problem.size();
    if (n > kExhaustiveLimit) {
        throw std::invalid_argument("value_table: n = " + std::to_string(n) + " is above the exhaustive limit");
    }
    const std::uint64_t total = std::uint64_t{1} << n;
    std::vector<double> table(total);
    for (std::uint64_t x = 0; x < total; ++x) {
        table[x] = problem.value(bits_of_index(x, n));
    }
    return table;
}

namespace {

/// Position i of the MSB-first index.
std::uint64_t bit_mask(std::size_t i, std::size_t n) { return std::uint64_t{1} << (n - 1 - i); }

bool is_local_optimum(const std::vector<double>& table, std::uint64_t x, std::size_t n)
{
    for (std::size_t i = 0; i < n; ++i) {
        if (fitness_less(table[x], table[x ^ bit_mask(i, n)])) {
            return false;
        }
    }
    return true;
}

} // namespace

std::vector<Bits> enumerate_local_optima(const Problem& problem)
{
    const std::size_t n = problem.size();
    const auto table = value_table(problem);
    std::vector<Bits> optima;
    for (std::uint64_t x = 0; x < table.size(); ++x) {
        if (is_local_optimum(table, x, n)) {
            optima.push_back(bits_of_index(x, n));
        }
    }
    return optima;
}

namespace {

class EndpointSolver {
public:
    EndpointSolver(std::vector<double> table, std::size_t n) : table_(std::move(table)), n_(n)
    {
        for (std::uint64_t x = 0; x < table_.size(); ++x) {
            if (is_local_optimum(table_, x, n_)) {
                slot_.emplace(x, optima_.size());
                optima_.push_back(x);
            }
        }
    }

    /// Endpoint probabilities from state (x, visited, changed).
    const std::vector<double>& solve(std::uint64_t x, std::uint64_t visited, bool changed)
    {
        const std::uint64_t full = (std::uint64_t{1} << n_) - 1;
        if (visited == full) {
            if (!changed) {
                return unit(x);
            }
            visited = 0;
            changed = false;
        }
        const std::uint64_t key = (x << (n_ + 1)) | (visited << 1) | (changed ? 1U : 0U);
        if (auto it = memo_.find(key); it != memo_.end()) {
            return it->second;
        }
        std::vector<double> result(optima_.size(), 0.0);
        const auto open = static_cast<double>(n_ - static_cast<std::size_t>(std::popcount(visited)));
        for (std::size_t i = 0; i < n_; ++i) {
            const std::uint64_t m = bit_mask(i, n_);
            if (visited & m) {
                continue;
            }
            const bool improves = fitness_less(table_[x], table_[x ^ m]);
            const auto& sub = improves ? solve(x ^ m, visited | m, true) : solve(x, visited | m, changed);
            for (std::size_t k = 0; k < result.size(); ++k) {
                result[k] += sub[k] / open;
            }
        }
        return memo_.emplace(key, std::move(result)).first->second;
    }

    const std::vector<std::uint64_t>& optima() const { return optima_; }

private:
    const std::vector<double>& unit(std::uint64_t x)
    {
        auto it = units_.find(x);
        if (it == units_.end()) {
            std::vector<double> v(optima_.size(), 0.0);
            v[slot_.at(x)] = 1.0;
            it = units_.emplace(x, std::move(v)).first;
        }
        return it->second;
    }

    std::vector<double> table_;
    std::size_t n_;
    std::vector<std::uint64_t> optima_;
    std::unordered_map<std::uint64_t, std::size_t> slot_;
    std::unordered_map<std::uint64_t, std::vector<double>> memo_;
    std::unordered_map<std::uint64_t, std::vector<double>> units_;
};

} // namespace

EndpointDistribution fihc_endpoints_exact(const Problem& problem)
{
    const std::size_t n = problem.size();
    if (n == 0 || n > kExactEndpointLimit) {
        throw std::invalid_argument("fihc_endpoints_exact: n must be within [1, " +
                                    std::to_string(kExactEndpointLimit) + "]");
    }
    EndpointSolver solver(value_table(problem), n);
    const std::uint64_t total = std::uint64_t{1} << n;
    std::vector<double> sum(solver.optima().size(), 0.0);
    for (std::uint64_t x = 0; x < total; ++x) {
        const auto& p = solver.solve(x, 0, false);
        for (std::size_t k = 0; k < sum.size(); ++k) {
            sum[k] += p[k];
        }
    }
    EndpointDistribution dist;
    for (std::size_t k = 0; k < sum.size(); ++k) {
        if (sum[k] > 0.0) {
            dist[bits_of_index(solver.optima()[k], n)] = sum[k] / static_cast<double>(total);
        }
    }
    return dist;
}

EndpointDistribution fihc_endpoints_sampled(const Problem& problem, std::size_t samples, Rng& rng)
{
    if (samples == 0) {
        throw std::invalid_argument("fihc_endpoints_sampled: need at least one sample");
    }
    std::unordered_map<Bits, std::size_t, BitsHash> counts;
    for (std::size_t s = 0; s < samples; ++s) {
        Evaluator ev(problem, std::numeric_limits<std::uint64_t>::max(), false);
        Solution x(rng.random_bits(problem.size()));
        ev.evaluate(x);
        fihc(x, ev, rng);
        ++counts[x.bits()];
    }
    EndpointDistribution dist;
    for (const auto& [bits, count] : counts) {
        dist[bits] = static_cast<double>(count) / static_cast<double>(samples);
    }
    return dist;
}

Dsm theoretical_dsm(std::size_t n, const EndpointDistribution& distribution)
{
    double mass = 0.0;
    for (const auto& [bits, p] : distribution) {
        if (bits.size() != n) {
            throw std::invalid_argument("theoretical_dsm: solution length mismatch");
        }
        mass += p;
    }
    if (std::abs(mass - 1.0) > 1e-9) {
        throw std::invalid_argument("theoretical_dsm: distribution does not sum to 1");
    }
    Dsm dsm(n);
    for (std::size_t g = 0; g < n; ++g) {
        for (std::size_t h = g + 1; h < n; ++h) {
            std::array<double, 4> joint{};
            for (const auto& [bits, p] : distribution) {
                joint[bits[g] * 2U + bits[h]] += p;
            }
            dsm.set(g, h, normalized_information(joint));
        }
    }
    return dsm;
}

double presence_probability(double ph, std::size_t t, std::size_t m)
{
    double total = 0.0;
    double binom = 1.0;
    for (std::size_t j = 0; j <= t; ++j) {
        const double miss = std::max(0.0, 1.0 - static_cast<double>(j) * ph);
        total += (j % 2 == 0 ? 1.0 : -1.0) * binom * std::pow(miss, static_cast<double>(m));
        binom = binom * static_cast<double>(t - j) / static_cast<double>(j + 1);
    }
    return total;
}

std::size_t hybrid_presence_population_size(double ph, double confidence, PresenceTarget target)
{
    const auto t = static_cast<std::size_t>(target);
    if (!(ph > 0.0) || static_cast<double>(t) * ph > 1.0) {
        throw std::invalid_argument("hybrid_presence_population_size: need 0 < ph and targets * ph <= 1");
    }
    if (!(confidence > 0.0 && confidence < 1.0)) {
        throw std::invalid_argument("hybrid_presence_population_size: confidence must be within (0, 1)");
    }
    for (std::size_t m = t;; ++m) {
        if (presence_probability(ph, t, m) >= confidence) {
            return m;
        }
        if (m > 100'000'000) {
            throw std::runtime_error("hybrid_presence_population_size: no size found");
        }
    }
}

} // namespace pxom
