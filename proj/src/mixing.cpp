#include "pxom/mixing.hpp"

#include <algorithm>
#include <stdexcept>

namespace pxom {

std::vector<Mask> order_masks(const LinkageTree& tree, MaskOrdering ordering, Rng& rng)
{
    std::vector<Mask> masks;
    for (std::size_t id = 0; id + 1 < tree.nodes.size(); ++id) {
        const auto& node = tree.nodes[id];
        if (ordering == MaskOrdering::shortest_first && node.members.size() < 2) {
            continue;
        }
        masks.push_back(node.members);
    }
    rng.shuffle(masks);
    if (ordering == MaskOrdering::shortest_first) {
        std::stable_sort(masks.begin(), masks.end(),
                         [](const Mask& a, const Mask& b) { return a.size() < b.size(); });
    }
    return masks;
}

namespace {

bool differs_inside(const Solution& a, const Solution& b, const Mask& mask)
{
    return std::any_of(mask.begin(), mask.end(), [&](std::size_t i) { return a[i] != b[i]; });
}

double ensure_evaluated(Solution& s, Evaluator& ev) { return s.evaluated() ? *s.fitness() : ev.evaluate(s); }

} // namespace

MixOutcome om_step(const Solution& src, std::span<const Solution> population, std::span<const Mask> masks, Rng& rng,
                   Evaluator& ev, const MixObserver& observer)
{
    if (population.empty()) {
        throw std::invalid_argument("om_step: empty population");
    }
    MixOutcome out{src, false, 0, false};
    const double start = ensure_evaluated(out.result, ev);
    std::vector<std::size_t> eligible;
    eligible.reserve(population.size());
    for (const auto& mask : masks) {
        eligible.clear();
        for (std::size_t i = 0; i < population.size(); ++i) {
            if (differs_inside(population[i], out.result, mask)) {
                eligible.push_back(i);
            }
        }
        if (eligible.empty()) {
            continue;
        }
        const Solution& donor = population[eligible[rng.below(eligible.size())]];
        Solution candidate = out.result;
        candidate.copy_genes(donor, mask);
        const double f = ev.evaluate(candidate);
        ++out.masks_tried;
        const bool accept = !fitness_less(f, *out.result.fitness());
        if (observer) {
            observer(MaskApplication{out.result, donor, mask, accept, fitness_less(*out.result.fitness(), f)});
        }
        if (accept) {
            out.result = std::move(candidate);
            out.accepted = true;
        }
    }
    out.slide_used = out.accepted && !fitness_less(start, *out.result.fitness());
    return out;
}

MixOutcome om_step(const Solution& src, std::span<const Solution> population, const LinkageTree& tree,
                   MaskOrdering ordering, Rng& rng, Evaluator& ev, const MixObserver& observer)
{
    const auto masks = order_masks(tree, ordering, rng);
    return om_step(src, population, masks, rng, ev, observer);
}

MixOutcome px_om(const Dsm& dsm, const Solution& src, const Solution& donor, Rng& rng, Evaluator& ev,
                 MaskSelection selection, const MixObserver& observer)
{
    if (src.size() != donor.size()) {
        throw std::invalid_argument("px_om: source and donor lengths differ");
    }
    MixOutcome out{src, false, 0, false};
    const auto tree = build_px_lt(dsm, src, donor);
    if (tree.empty()) {
        return out;
    }
    auto masks = selection == MaskSelection::ltop_ws ? ltop_ws(tree, hamming(src.bits(), donor.bits()))
                                                     : internal_masks(tree);
    if (masks.empty()) {
        return out;
    }
    const double start = ensure_evaluated(out.result, ev);
    rng.shuffle(masks);

    std::vector<std::pair<std::size_t, double>> sliding;
    for (std::size_t m = 0; m < masks.size(); ++m) {
        Solution candidate = out.result;
        candidate.copy_genes(donor, masks[m]);
        const double f = ev.evaluate(candidate);
        ++out.masks_tried;
        const bool improves = fitness_less(start, f);
        if (observer) {
            observer(MaskApplication{out.result, donor, masks[m], improves, improves});
        }
        if (improves) {
            out.result = std::move(candidate);
            out.accepted = true;
            return out;
        }
        if (fitness_equal(f, start)) {
            sliding.emplace_back(m, f);
        }
    }
    if (!sliding.empty()) {
        const auto& [m, f] = sliding[rng.below(sliding.size())];
        out.result.copy_genes(donor, masks[m]);
        out.result.restore_fitness(f);
        out.accepted = true;
        out.slide_used = true;
    }
    return out;
}

} // namespace pxom
