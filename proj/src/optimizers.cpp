#include "pxom/optimizers.hpp"

#include <algorithm>
#include <numeric>

namespace pxom {

OptimizerKind parse_optimizer(std::string_view name)
{
    if (name == "p3") return OptimizerKind::p3;
    if (name == "p3-fihcwll") return OptimizerKind::p3_fihcwll;
    if (name == "p3-px-om-ltopws") return OptimizerKind::p3_px_om_ltopws;
    if (name == "p3-px-om-all") return OptimizerKind::p3_px_om_all;
    if (name == "ltgomea") return OptimizerKind::ltgomea;
    if (name == "ltgomea-fihcwll") return OptimizerKind::ltgomea_fihcwll;
    throw std::invalid_argument("unknown optimizer '" + std::string(name) + "'");
}

std::string to_string(OptimizerKind kind)
{
    switch (kind) {
    case OptimizerKind::p3: return "p3";
    case OptimizerKind::p3_fihcwll: return "p3-fihcwll";
    case OptimizerKind::p3_px_om_ltopws: return "p3-px-om-ltopws";
    case OptimizerKind::p3_px_om_all: return "p3-px-om-all";
    case OptimizerKind::ltgomea: return "ltgomea";
    case OptimizerKind::ltgomea_fihcwll: return "ltgomea-fihcwll";
    }
    return "?";
}

void PyramidLevel::add(const Solution& s)
{
    members_.push_back(s);
    counts_.add(s.bits());
    dsm_.reset();
    tree_.reset();
}

const Dsm& PyramidLevel::dsm() const
{
    if (!dsm_) {
        dsm_ = counts_.to_dsm();
    }
    return *dsm_;
}

const LinkageTree& PyramidLevel::tree() const
{
    if (!tree_) {
        tree_ = build_lt(dsm());
    }
    return *tree_;
}

namespace {

/// Drops masks of size >= 2 that contain no edge of the empirical graph.
std::vector<Mask> filter_by_evig(std::vector<Mask> masks, const Vig& evig)
{
    std::erase_if(masks, [&](const Mask& m) { return m.size() >= 2 && evig.internal_edges(m) == 0; });
    return masks;
}

} // namespace

P3::P3(Evaluator& ev, Rng rng, Variant variant, OptimizerOptions options)
    : ev_(ev), init_rng_(rng.split(0)), climb_rng_(rng.split(1)), mix_rng_(rng.split(2)), variant_(variant),
      options_(std::move(options))
{
    if (variant_ == Variant::fihcwll) {
        evig_ = Vig(ev_.size());
    }
    if (options_.fixed_dsm && options_.fixed_dsm->size() != ev_.size()) {
        throw std::invalid_argument("P3: fixed DSM size does not match the problem");
    }
    if (options_.fixed_dsm) {
        fixed_tree_ = build_lt(*options_.fixed_dsm);
    }
}

void P3::insert(const Solution& s, std::size_t level)
{
    if (level == levels_.size()) {
        levels_.emplace_back(ev_.size());
    }
    levels_[level].add(s);
}

void P3::iterate()
{
    Solution s(init_rng_.random_bits(ev_.size()));
    ev_.evaluate(s);
    if (variant_ == Variant::fihcwll) {
        fihc_with_ll(s, evig_, ev_, climb_rng_, options_.linkage_learning);
    } else {
        fihc(s, ev_, climb_rng_);
    }
    if (seen_.insert(s.bits()).second) {
        insert(s, 0);
    }
    climb(s);
}

void P3::climb(Solution& s)
{
    for (std::size_t level = 0; level < levels_.size(); ++level) {
        const double before = s.fitness_or_throw();
        const bool px = variant_ == Variant::px_om_ltopws || variant_ == Variant::px_om_all;
        px ? mix_px(s, levels_[level]) : mix_classic(s, levels_[level]);
        if (fitness_less(before, s.fitness_or_throw()) && seen_.insert(s.bits()).second) {
            insert(s, level + 1);
        }
    }
}

std::vector<Mask> P3::usable_masks(const LinkageTree& tree)
{
    auto masks = order_masks(tree, MaskOrdering::shortest_first, mix_rng_);
    if (variant_ == Variant::fihcwll) {
        masks = filter_by_evig(std::move(masks), evig_);
    }
    return masks;
}

bool P3::mix_classic(Solution& s, const PyramidLevel& level)
{
    const auto masks = usable_masks(fixed_tree_ ? *fixed_tree_ : level.tree());
    auto out = om_step(s, level.members(), masks, mix_rng_, ev_, options_.observer);
    s = std::move(out.result);
    return out.accepted;
}

bool P3::mix_px(Solution& s, const PyramidLevel& level)
{
    std::vector<std::size_t> eligible;
    for (std::size_t i = 0; i < level.size(); ++i) {
        if (!(level.members()[i] == s)) {
            eligible.push_back(i);
        }
    }
    if (eligible.empty()) {
        return false;
    }
    const Solution& donor = level.members()[eligible[mix_rng_.below(eligible.size())]];
    const Dsm& dsm = options_.fixed_dsm ? *options_.fixed_dsm : level.dsm();
    const auto selection = variant_ == Variant::px_om_all ? MaskSelection::all_internal : MaskSelection::ltop_ws;
    auto out = px_om(dsm, s, donor, mix_rng_, ev_, selection, options_.observer);
    s = std::move(out.result);
    return out.accepted;
}

void P3::run()
{
    try {
        while (!ev_.exhausted()) {
            iterate();
        }
    } catch (const BudgetExhausted&) {
    }
}

LtGomea::LtGomea(Evaluator& ev, Rng rng, Variant variant, OptimizerOptions options)
    : ev_(ev), init_rng_(rng.split(0)), climb_rng_(rng.split(1)), mix_rng_(rng.split(2)), variant_(variant),
      options_(std::move(options))
{
    if (variant_ == Variant::fihcwll) {
        evig_ = Vig(ev_.size());
    }
}

void LtGomea::spawn()
{
    Population pop;
    const std::size_t size = std::size_t{1} << populations_.size();
    pop.members.reserve(size);
    double total = 0.0;
    for (std::size_t i = 0; i < size; ++i) {
        Solution s(init_rng_.random_bits(ev_.size()));
        ev_.evaluate(s);
        if (variant_ == Variant::fihcwll) {
            fihc_with_ll(s, evig_, ev_, climb_rng_, options_.linkage_learning);
        }
        total += s.fitness_or_throw();
        pop.members.push_back(std::move(s));
    }
    pop.mean = total / static_cast<double>(size);
    populations_.push_back(std::move(pop));
    cull(populations_.size() - 1);
}

void LtGomea::generation(std::size_t index)
{
    auto& pop = populations_[index];
    const Dsm dsm = options_.fixed_dsm ? *options_.fixed_dsm : estimate_dsm(pop.members);
    const LinkageTree tree = build_lt(dsm);

    // donors come from the population as it was at the start of the generation
    const std::vector<Solution> parents = pop.members;
    bool changed = false;
    double total = 0.0;
    for (auto& member : pop.members) {
        auto masks = order_masks(tree, MaskOrdering::random, mix_rng_);
        if (variant_ == Variant::fihcwll) {
            masks = filter_by_evig(std::move(masks), evig_);
        }
        auto out = om_step(member, parents, masks, mix_rng_, ev_, options_.observer);
        changed = changed || !(out.result == member);
        member = std::move(out.result);
        total += member.fitness_or_throw();
    }
    ++pop.generations;
    pop.mean = total / static_cast<double>(pop.members.size());

    const bool converged = std::all_of(pop.members.begin(), pop.members.end(),
                                       [&](const Solution& s) { return s == pop.members.front(); });
    if (converged || !changed) {
        pop.alive = false;
    }
    cull(index);
}

void LtGomea::cull(std::size_t index)
{
    const double mean = populations_[index].mean;
    for (std::size_t i = 0; i < index; ++i) {
        if (populations_[i].alive && fitness_less(populations_[i].mean, mean)) {
            populations_[i].alive = false;
        }
    }
}

void LtGomea::run()
{
    try {
        while (!ev_.exhausted()) {
            // base-4 interleaving: population i+1 advances once every four
            // generations of population i; terminated ones pass the turn on
            for (std::size_t i = 0;; ++i) {
                if (i == populations_.size()) {
                    spawn();
                    break;
                }
                auto& pop = populations_[i];
                if (!pop.alive) {
                    continue;
                }
                generation(i);
                if (populations_[i].generations % 4 != 0) {
                    break;
                }
            }
        }
    } catch (const BudgetExhausted&) {
    }
}

void optimize(OptimizerKind kind, Evaluator& ev, Rng rng, OptimizerOptions options)
{
    switch (kind) {
    case OptimizerKind::p3:
        P3(ev, rng, P3::Variant::classic, std::move(options)).run();
        return;
    case OptimizerKind::p3_fihcwll:
        P3(ev, rng, P3::Variant::fihcwll, std::move(options)).run();
        return;
    case OptimizerKind::p3_px_om_ltopws:
        P3(ev, rng, P3::Variant::px_om_ltopws, std::move(options)).run();
        return;
    case OptimizerKind::p3_px_om_all:
        P3(ev, rng, P3::Variant::px_om_all, std::move(options)).run();
        return;
    case OptimizerKind::ltgomea:
        LtGomea(ev, rng, LtGomea::Variant::classic, std::move(options)).run();
        return;
    case OptimizerKind::ltgomea_fihcwll:
        LtGomea(ev, rng, LtGomea::Variant::fihcwll, std::move(options)).run();
        return;
    }
}

} // namespace pxom
