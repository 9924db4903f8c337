#pragma once

// Shared fixtures: the interaction graph of the overlapping bimodal
// function, a perfect DSM for it, and a parent pair whose PX masks are
// {1,2} and {4,5,7} (0-based).

#include "pxom/pxlt.hpp"

#include <algorithm>
#include <string_view>
#include <vector>

namespace pxom::testing {

inline Vig overlapping_vig()
{
    return Vig::from_rows({
        "X11100000",
        "1X1100000",
        "11X100000",
        "111X11100",
        "0001X1100",
        "00011X111",
        "000111X11",
        "0000011X1",
        "00000111X",
    });
}

/// Upper triangle is authoritative. The (3,7) cell uses 0.50; the lower
/// triangle of the source matrix disagrees there (0.25).
inline Dsm overlapping_dsm()
{
    return Dsm::from_upper({
        {0, 0.99, 0.51, 0.51, 0.25, 0.25, 0.25, 0.25, 0.25},
        {0, 0, 0.51, 0.51, 0.25, 0.25, 0.25, 0.25, 0.25},
        {0, 0, 0, 0.99, 0.49, 0.50, 0.50, 0.50, 0.50},
        {0, 0, 0, 0, 0.60, 0.98, 0.73, 0.50, 0.50},
        {0, 0, 0, 0, 0, 0.60, 0.60, 0.49, 0.50},
        {0, 0, 0, 0, 0, 0, 0.73, 0.73, 0.55},
        {0, 0, 0, 0, 0, 0, 0, 0.99, 0.55},
        {0, 0, 0, 0, 0, 0, 0, 0, 0.55},
        {0, 0, 0, 0, 0, 0, 0, 0, 0},
    });
}

inline Solution first_parent() { return Solution::parse("1111 001 01"); }
inline Solution second_parent() { return Solution::parse("1001 111 11"); }

inline bool has_node(const LinkageTree& tree, std::vector<std::size_t> members)
{
    std::sort(members.begin(), members.end());
    return std::any_of(tree.nodes.begin(), tree.nodes.end(),
                       [&](const LinkageTree::Node& node) { return node.members == members; });
}

/// Internal node with exactly these members, or nullptr.
inline const LinkageTree::Node* find_node(const LinkageTree& tree, std::vector<std::size_t> members)
{
    std::sort(members.begin(), members.end());
    for (const auto& node : tree.nodes) {
        if (node.members == members) {
            return &node;
        }
    }
    return nullptr;
}

/// Random perfect DSM for `vig`: dependent pairs in (theta, 1],
/// independent pairs in [0, theta).
inline Dsm random_perfect_dsm(const Vig& vig, Rng& rng, double theta = 0.5)
{
    Dsm dsm(vig.size());
    for (std::size_t g = 0; g < vig.size(); ++g) {
        for (std::size_t h = g + 1; h < vig.size(); ++h) {
            const double u = rng.uniform();
            dsm.set(g, h, vig.has_edge(g, h) ? theta + (1.0 - theta) * (1.0 - u) : theta * u);
        }
    }
    return dsm;
}

} // namespace pxom::testing
