#include "pxom/dependency.hpp"

#include <stdexcept>

namespace pxom {

bool is_nonlinear(const FourPoint& p) { return !fitness_equal(p.base + p.gh, p.g + p.h); }

bool is_nonmonotonic(const FourPoint& p)
{
    const auto lt = [](double a, double b) { return fitness_less(a, b); };
    const auto eq = [](double a, double b) { return fitness_equal(a, b); };
    const bool c1 = lt(p.base, p.g) && !lt(p.h, p.gh);
    const bool c2 = eq(p.base, p.g) && !eq(p.h, p.gh);
    const bool c3 = lt(p.g, p.base) && !lt(p.gh, p.h);
    const bool c4 = lt(p.base, p.h) && !lt(p.g, p.gh);
    const bool c5 = eq(p.base, p.h) && !eq(p.g, p.gh);
    const bool c6 = lt(p.h, p.base) && !lt(p.gh, p.g);
    return c1 || c2 || c3 || c4 || c5 || c6;
}

bool check_holds(DependencyCheck check, const FourPoint& p)
{
    return check == DependencyCheck::nonlinear ? is_nonlinear(p) : is_nonmonotonic(p);
}

namespace {

FourPoint probe(Evaluator& ev, Solution& x, std::size_t g, std::size_t h)
{
    if (g == h) {
        throw std::invalid_argument("dependency check needs two distinct genes");
    }
    if (g >= x.size() || h >= x.size()) {
        throw std::out_of_range("dependency check: gene index out of range");
    }
    FourPoint p{};
    p.base = x.evaluated() ? *x.fitness() : ev.evaluate(x);
    Solution y = x;
    y.flip(g);
    p.g = ev.evaluate(y);
    y.flip(h);
    p.gh = ev.evaluate(y);
    y.flip(g);
    p.h = ev.evaluate(y);
    return p;
}

} // namespace

bool nonlinearity_check(Evaluator& ev, Solution& x, std::size_t g, std::size_t h)
{
    return is_nonlinear(probe(ev, x, g, h));
}

bool nonmonotonicity_check(Evaluator& ev, Solution& x, std::size_t g, std::size_t h)
{
    return is_nonmonotonic(probe(ev, x, g, h));
}

Vig exhaustive_vig(const Problem& problem, DependencyCheck check)
{
    const std::size_t n = problem.size();
    if (n > kExhaustiveLimit) {
        throw std::invalid_argument("exhaustive_vig: n = " + std::to_string(n) + " exceeds the limit of " +
                                    std::to_string(kExhaustiveLimit));
    }
    const std::size_t states = std::size_t{1} << n;
    std::vector<double> table(states);
    Bits bits(n);
    for (std::size_t x = 0; x < states; ++x) {
        for (std::size_t i = 0; i < n; ++i) {
            bits[i] = static_cast<std::uint8_t>((x >> i) & 1U);
        }
        table[x] = problem.value(bits);
    }
    Vig g(n);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
            const std::size_t ma = std::size_t{1} << a;
            const std::size_t mb = std::size_t{1} << b;
            for (std::size_t x = 0; x < states; ++x) {
                const FourPoint p{table[x], table[x ^ ma], table[x ^ mb], table[x ^ ma ^ mb]};
                if (check_holds(check, p)) {
                    g.add_edge(a, b);
                    break;
                }
            }
        }
    }
    return g;
}

namespace {

/// One FIHC run; `after_accept` is invoked with the flipped gene.
template <class AfterAccept>
std::size_t climb(Solution& s, Evaluator& ev, Rng& rng, AfterAccept&& after_accept)
{
    if (!s.evaluated()) {
        ev.evaluate(s);
    }
    std::size_t accepted = 0;
    bool changed = true;
    while (changed) {
        changed = false;
        for (auto i : rng.permutation(s.size())) {
            Solution candidate = s;
            candidate.flip(i);
            if (fitness_less(*s.fitness(), ev.evaluate(candidate))) {
                s = std::move(candidate);
                ++accepted;
                changed = true;
                after_accept(i);
            }
        }
    }
    return accepted;
}

} // namespace

std::size_t fihc(Solution& s, Evaluator& ev, Rng& rng)
{
    return climb(s, ev, rng, [](std::size_t) {});
}

std::size_t fihc_with_ll(Solution& s, Vig& evig, Evaluator& ev, Rng& rng, LinkageLearningOptions options)
{
    if (evig.size() != s.size()) {
        throw std::invalid_argument("fihc_with_ll: graph size does not match the solution");
    }
    const std::size_t n = s.size();
    const std::size_t pairs = options.pair_budget == 0 ? n : options.pair_budget;
    return climb(s, ev, rng, [&](std::size_t g) {
        if (n < 2) {
            return;
        }
        for (std::size_t t = 0; t < pairs; ++t) {
            auto h = static_cast<std::size_t>(rng.below(n - 1));
            h += h >= g ? 1 : 0;
            if (evig.has_edge(g, h)) {
                continue;
            }
            if (nonmonotonicity_check(ev, s, g, h)) {
                evig.add_edge(g, h);
            }
        }
    });
}

} // namespace pxom
