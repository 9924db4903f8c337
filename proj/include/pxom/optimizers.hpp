#pragma once

// P3 and LT-GOMEA, with their linkage-learning and PX-OM variants.
//
// Optimizers draw every evaluation from the Evaluator they are given and
// stop when it throws BudgetExhausted (which also happens right after the
// known optimum is hit). The best solution is read back from the Evaluator.

#include "pxom/dependency.hpp"
#include "pxom/mixing.hpp"

#include <memory>
#include <string>
#include <unordered_set>

namespace pxom {

enum class OptimizerKind {
    p3,
    p3_fihcwll,
    p3_px_om_ltopws,
    p3_px_om_all,
    ltgomea,
    ltgomea_fihcwll,
};

/// Config names: p3, p3-fihcwll, p3-px-om-ltopws, p3-px-om-all, ltgomea,
/// ltgomea-fihcwll.
OptimizerKind parse_optimizer(std::string_view name);
std::string to_string(OptimizerKind kind);

struct OptimizerOptions {
    /// Used in place of every estimated DSM when set (oracle mode).
    std::optional<Dsm> fixed_dsm;
    /// Sees every evaluated mixing candidate.
    MixObserver observer;
    LinkageLearningOptions linkage_learning;
};

/// One pyramid level: its members plus a lazily rebuilt model.
class PyramidLevel {
public:
    explicit PyramidLevel(std::size_t n) : counts_(n) {}

    void add(const Solution& s);
    const std::vector<Solution>& members() const { return members_; }
    std::size_t size() const { return members_.size(); }

    const Dsm& dsm() const;
    const LinkageTree& tree() const;

private:
    std::vector<Solution> members_;
    PairCounts counts_;
    mutable std::optional<Dsm> dsm_;
    mutable std::optional<LinkageTree> tree_;
};

class P3 {
public:
    enum class Variant { classic, fihcwll, px_om_ltopws, px_om_all };

    P3(Evaluator& ev, Rng rng, Variant variant, OptimizerOptions options = {});

    /// One iteration: new hill-climbed solution, then a climb through the
    /// pyramid. Throws BudgetExhausted.
    void iterate();
    /// Iterates until the budget is gone.
    void run();

    const std::vector<PyramidLevel>& levels() const { return levels_; }
    /// Empirical interaction graph (fihcwll only; empty otherwise).
    const Vig& evig() const { return evig_; }

private:
    void insert(const Solution& s, std::size_t level);
    void climb(Solution& s);
    bool mix_classic(Solution& s, const PyramidLevel& level);
    bool mix_px(Solution& s, const PyramidLevel& level);
    std::vector<Mask> usable_masks(const LinkageTree& tree);

    Evaluator& ev_;
    // separate streams so changing one component leaves the others' draws intact
    Rng init_rng_;
    Rng climb_rng_;
    Rng mix_rng_;
    Variant variant_;
    OptimizerOptions options_;
    std::optional<LinkageTree> fixed_tree_;
    std::vector<PyramidLevel> levels_;
    std::unordered_set<Bits, BitsHash> seen_;
    Vig evig_;
};

/// LT-GOMEA under an interleaved multistart scheme: population sizes 1, 2,
/// 4, ...; population i+1 performs one generation per four of population i.
/// A population stops when it has converged, stalls, or a larger one has a
/// better mean fitness.
class LtGomea {
public:
    enum class Variant { classic, fihcwll };

    LtGomea(Evaluator& ev, Rng rng, Variant variant, OptimizerOptions options = {});

    void run();

    std::size_t population_count() const { return populations_.size(); }
    const Vig& evig() const { return evig_; }

private:
    struct Population {
        std::vector<Solution> members;
        std::size_t generations = 0;
        bool alive = true;
        double mean = 0.0;
    };

    void spawn();
    void generation(std::size_t index);
    void cull(std::size_t index);

    Evaluator& ev_;
    // separate streams so changing one component leaves the others' draws intact
    Rng init_rng_;
    Rng climb_rng_;
    Rng mix_rng_;
    Variant variant_;
    OptimizerOptions options_;
    std::vector<Population> populations_;
    Vig evig_;
};

/// Runs the optimizer until the budget is exhausted.
void optimize(OptimizerKind kind, Evaluator& ev, Rng rng, OptimizerOptions options = {});

} // namespace pxom
