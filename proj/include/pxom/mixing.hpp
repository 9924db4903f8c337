#pragma once

// Optimal mixing operators.
//
// om_step: gene-pool optimal mixing over linkage-tree masks. A candidate
// replaces the source when its fitness is not worse.
// px_om: PX-like optimal mixing with a single donor. Returns on the first
// strict improvement; otherwise applies one random equal-fitness
// ("sliding") mask if any was found.

#include "pxom/pxlt.hpp"

#include <functional>

namespace pxom {

struct MixOutcome {
    Solution result;
    /// Some candidate replaced the source.
    bool accepted = false;
    std::size_t masks_tried = 0;
    /// The accepted change kept the fitness equal.
    bool slide_used = false;
};

/// Reported for every mask that produced an evaluated candidate.
struct MaskApplication {
    const Solution& source;
    const Solution& donor;
    const Mask& mask;
    /// The candidate replaced the source (PX-OM: strict improvement).
    bool accepted;
    /// Candidate fitness strictly above the source's.
    bool improved;
};

using MixObserver = std::function<void(const MaskApplication&)>;

enum class MaskOrdering {
    /// All non-root nodes, uniformly shuffled.
    random,
    /// Non-root nodes of size > 1, shortest first, shuffled within a size.
    shortest_first,
};

std::vector<Mask> order_masks(const LinkageTree& tree, MaskOrdering ordering, Rng& rng);

/// Applies each mask in turn. For a mask, the donor is drawn uniformly
/// among population members that differ from the current source inside
/// the mask; masks without such a member are skipped at no cost.
MixOutcome om_step(const Solution& src, std::span<const Solution> population, std::span<const Mask> masks, Rng& rng,
                   Evaluator& ev, const MixObserver& observer = {});

MixOutcome om_step(const Solution& src, std::span<const Solution> population, const LinkageTree& tree,
                   MaskOrdering ordering, Rng& rng, Evaluator& ev, const MixObserver& observer = {});

enum class MaskSelection {
    ltop_ws,
    /// Every internal node except the root.
    all_internal,
};

MixOutcome px_om(const Dsm& dsm, const Solution& src, const Solution& donor, Rng& rng, Evaluator& ev,
                 MaskSelection selection = MaskSelection::ltop_ws, const MixObserver& observer = {});

} // namespace pxom
