#include "pxom/pxlt.hpp"

#include <algorithm>
#include <stdexcept>

namespace pxom {

std::vector<std::size_t> differing_positions(const Solution& p1, const Solution& p2)
{
    if (p1.size() != p2.size()) {
        throw std::invalid_argument("parents have different lengths");
    }
    std::vector<std::size_t> diff;
    for (std::size_t i = 0; i < p1.size(); ++i) {
        if (p1[i] != p2[i]) {
            diff.push_back(i);
        }
    }
    return diff;
}

std::vector<Mask> px_masks(const Vig& vig, const Solution& p1, const Solution& p2)
{
    if (vig.size() != p1.size()) {
        throw std::invalid_argument("px_masks: graph size does not match the parents");
    }
    const auto diff = differing_positions(p1, p2);
    std::vector<std::uint8_t> differs(p1.size(), 0);
    for (auto i : diff) {
        differs[i] = 1;
    }
    std::vector<std::uint8_t> seen(p1.size(), 0);
    std::vector<Mask> masks;
    for (auto start : diff) {
        if (seen[start]) {
            continue;
        }
        Mask component;
        std::vector<std::size_t> stack{start};
        seen[start] = 1;
        while (!stack.empty()) {
            const auto v = stack.back();
            stack.pop_back();
            component.push_back(v);
            for (std::size_t w = 0; w < p1.size(); ++w) {
                if (differs[w] && !seen[w] && vig.has_edge(v, w)) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
            }
        }
        std::sort(component.begin(), component.end());
        masks.push_back(std::move(component));
    }
    return masks;
}

LinkageTree build_px_lt(const Dsm& dsm, const Solution& p1, const Solution& p2)
{
    if (dsm.size() != p1.size()) {
        throw std::invalid_argument("build_px_lt: DSM size does not match the parents");
    }
    return agglomerate(dsm, differing_positions(p1, p2), Linkage::maximum);
}

std::vector<Mask> ltop_ws(const LinkageTree& tree, std::size_t diff_count)
{
    std::vector<Mask> masks;
    if (tree.empty()) {
        return masks;
    }
    const double limit = static_cast<double>(diff_count) / 2.0;
    std::vector<std::size_t> pending;
    if (const auto& root = tree.nodes[tree.root()]; root.children) {
        pending = {root.children->second, root.children->first};
    }
    while (!pending.empty()) {
        const auto id = pending.back();
        pending.pop_back();
        const auto& node = tree.nodes[id];
        if (node.leaf()) {
            continue;
        }
        if (static_cast<double>(node.members.size()) <= limit) {
            masks.push_back(node.members);
            continue;
        }
        pending.push_back(node.children->second);
        pending.push_back(node.children->first);
    }
    return masks;
}

std::vector<Mask> internal_masks(const LinkageTree& tree)
{
    std::vector<Mask> masks;
    for (std::size_t id = 0; id + 1 < tree.nodes.size(); ++id) {
        if (!tree.nodes[id].leaf()) {
            masks.push_back(tree.nodes[id].members);
        }
    }
    return masks;
}

} // namespace pxom
