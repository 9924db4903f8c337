#pragma once

// Partition-crossover masks and the PX-like linkage tree.
//
// A PX mask for two parents is a connected component of the interaction
// graph restricted to the positions where the parents differ. The PX-like
// linkage tree clusters only those positions, joining nodes by the maximum
// DSM entry over their cross pairs. With a DSM whose dependent entries all
// exceed its independent ones, every PX mask shows up as a tree node.

#include "pxom/sll.hpp"

namespace pxom {

/// Sorted, non-empty set of variable indices.
using Mask = std::vector<std::size_t>;

/// Positions at which the two parents differ, ascending.
std::vector<std::size_t> differing_positions(const Solution& p1, const Solution& p2);

/// Connected components of `vig` over the differing positions, ordered by
/// their smallest index.
std::vector<Mask> px_masks(const Vig& vig, const Solution& p1, const Solution& p2);

/// PX-like linkage tree over the differing positions (maximum linkage).
/// Returns an empty tree when the parents are identical.
LinkageTree build_px_lt(const Dsm& dsm, const Solution& p1, const Solution& p2);

/// Top-down selection from the root's children: a node is taken when
/// 1 < |node| <= diff_count / 2 (real division) and its subtree is then
/// skipped; oversized nodes are descended into; leaves are dropped.
std::vector<Mask> ltop_ws(const LinkageTree& tree, std::size_t diff_count);

/// Every internal node except the root.
std::vector<Mask> internal_masks(const LinkageTree& tree);

} // namespace pxom
