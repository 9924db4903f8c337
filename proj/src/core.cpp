#include "pxom/core.hpp"

#include <algorithm>
#include <numeric>

namespace pxom {

namespace {

std::uint64_t splitmix64(std::uint64_t& state)
{
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

} // namespace

std::size_t unitation(BitsView bits)
{
    return static_cast<std::size_t>(std::count(bits.begin(), bits.end(), std::uint8_t{1}));
}

std::size_t hamming(BitsView a, BitsView b)
{
    if (a.size() != b.size()) {
        throw std::invalid_argument("hamming: length mismatch");
    }
    std::size_t d = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        d += a[i] != b[i] ? 1 : 0;
    }
    return d;
}

Bits parse_bits(std::string_view text)
{
    Bits bits;
    for (char c : text) {
        if (c == '0' || c == '1') {
            bits.push_back(static_cast<std::uint8_t>(c - '0'));
        } else if (c != ' ' && c != '\t' && c != '_') {
            throw std::invalid_argument("parse_bits: unexpected character '" + std::string(1, c) + "'");
        }
    }
    return bits;
}

std::string format_bits(BitsView bits)
{
    std::string s;
    s.reserve(bits.size());
    for (auto b : bits) {
        s.push_back(b ? '1' : '0');
    }
    return s;
}

std::size_t BitsHash::operator()(const Bits& bits) const noexcept
{
    // FNV-1a over packed bytes
    std::uint64_t h = 1469598103934665603ULL;
    std::uint8_t acc = 0;
    for (std::size_t i = 0; i < bits.size(); ++i) {
        acc = static_cast<std::uint8_t>((acc << 1) | bits[i]);
        if ((i & 7) == 7 || i + 1 == bits.size()) {
            h = (h ^ acc) * 1099511628211ULL;
            acc = 0;
        }
    }
    return static_cast<std::size_t>(h ^ bits.size());
}

void Solution::set(std::size_t i, std::uint8_t value)
{
    value = value ? 1 : 0;
    if (bits_.at(i) != value) {
        bits_[i] = value;
        fitness_.reset();
    }
}

void Solution::flip(std::size_t i)
{
    bits_.at(i) ^= 1;
    fitness_.reset();
}

void Solution::copy_genes(const Solution& donor, std::span<const std::size_t> positions)
{
    if (donor.size() != size()) {
        throw std::invalid_argument("copy_genes: length mismatch");
    }
    for (auto i : positions) {
        set(i, donor.bits_.at(i));
    }
}

double Solution::fitness_or_throw() const
{
    if (!fitness_) {
        throw std::logic_error("solution has not been evaluated");
    }
    return *fitness_;
}

Rng::Rng(std::uint64_t seed) : seed_(seed)
{
    std::uint64_t sm = seed;
    for (auto& word : s_) {
        word = splitmix64(sm);
    }
}

std::uint64_t Rng::next()
{
    const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
}

std::uint64_t Rng::below(std::uint64_t bound)
{
    if (bound == 0) {
        throw std::invalid_argument("Rng::below: bound must be positive");
    }
    // Lemire's nearly-divisionless rejection
    unsigned __int128 m = static_cast<unsigned __int128>(next()) * bound;
    auto low = static_cast<std::uint64_t>(m);
    if (low < bound) {
        const std::uint64_t threshold = (0 - bound) % bound;
        while (low < threshold) {
            m = static_cast<unsigned __int128>(next()) * bound;
            low = static_cast<std::uint64_t>(m);
        }
    }
    return static_cast<std::uint64_t>(m >> 64);
}

double Rng::uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

Rng Rng::split(std::uint64_t tag) const
{
    std::uint64_t mix = seed_ ^ 0x5851f42d4c957f2dULL;
    std::uint64_t a = splitmix64(mix);
    std::uint64_t t = tag;
    std::uint64_t b = splitmix64(t);
    return Rng(a ^ rotl(b, 23));
}

Bits Rng::random_bits(std::size_t n)
{
    Bits bits(n);
    std::uint64_t word = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if ((i & 63) == 0) {
            word = next();
        }
        bits[i] = static_cast<std::uint8_t>(word & 1);
        word >>= 1;
    }
    return bits;
}

std::vector<std::size_t> Rng::permutation(std::size_t n)
{
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    shuffle(order);
    return order;
}

void EvalBudget::charge()
{
    if (exhausted()) {
        throw BudgetExhausted();
    }
    ++used_;
}

Evaluator::Evaluator(const Problem& problem, std::uint64_t limit, bool stop_at_optimum)
    : problem_(problem), budget_(limit), stop_at_optimum_(stop_at_optimum)
{
}

double Evaluator::evaluate(Solution& s)
{
    if (s.size() != problem_.size()) {
        throw std::invalid_argument("evaluate: solution length " + std::to_string(s.size()) +
                                    " does not match problem size " + std::to_string(problem_.size()));
    }
    budget_.charge();
    const double f = problem_.value(s.bits());
    s.restore_fitness(f);

    if (!best_ || f > *best_) {
        best_ = f;
        best_bits_ = s.bits();
        if (trace_) {
            trace_(budget_.used(), f);
        }
    }
    if (!ffe_at_optimum_) {
        if (auto opt = problem_.optimum(); opt && !fitness_less(f, *opt)) {
            ffe_at_optimum_ = budget_.used();
            if (stop_at_optimum_) {
                budget_.close();
            }
        }
    }
    return f;
}

} // namespace pxom
