#pragma once

#include "pxom/core.hpp"

namespace pxom {

enum class DependencyCheck { nonlinear, nonmonotonic };

/// Fitness of x and its three flip-neighbours for a pair (g, h).
struct FourPoint {
    double base; // f(x)
    double g;    // f(x^g)
    double h;    // f(x^h)
    double gh;   // f(x^{g,h})
};

/// f(x) + f(x^{g,h}) != f(x^g) + f(x^h), up to kFitnessEps.
bool is_nonlinear(const FourPoint& p);
/// Any of the six order-reversal clauses.
bool is_nonmonotonic(const FourPoint& p);
bool check_holds(DependencyCheck check, const FourPoint& p);

/// Evaluates the missing points around x (x itself only when uncached) and
/// applies the check. Uses at most four evaluations.
bool nonlinearity_check(Evaluator& ev, Solution& x, std::size_t g, std::size_t h);
bool nonmonotonicity_check(Evaluator& ev, Solution& x, std::size_t g, std::size_t h);

/// Largest n accepted by exhaustive_vig.
inline constexpr std::size_t kExhaustiveLimit = 24;

/// Edge (g, h) iff the check fires in at least one of the 2^n contexts.
Vig exhaustive_vig(const Problem& problem, DependencyCheck check);

/// First-improvement hill climber. Sweeps a freshly shuffled order each
/// pass, keeping strictly improving flips, until a full sweep changes
/// nothing. Works in place: if the budget runs out, `s` holds the last
/// accepted state and BudgetExhausted propagates.
/// Returns the number of accepted flips.
std::size_t fihc(Solution& s, Evaluator& ev, Rng& rng);

struct LinkageLearningOptions {
    /// Pairs tested after each accepted flip; 0 means n.
    std::size_t pair_budget = 0;
};

/// FIHC that also grows `evig` with non-monotonic dependencies: after each
/// accepted flip of gene g, up to pair_budget pairs (g, h) with h uniform
/// are tested at the current context. Known edges are skipped without
/// spending evaluations. The graph only ever gains edges.
std::size_t fihc_with_ll(Solution& s, Vig& evig, Evaluator& ev, Rng& rng, LinkageLearningOptions options = {});

} // namespace pxom
